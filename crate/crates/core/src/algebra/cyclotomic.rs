//! Cyclotomic polynomials and the integer group ring `Z[t]/(t^h - 1)`.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num::complex::Complex64;

use super::poly::Poly;

static CYCLOTOMIC_CACHE: OnceLock<Mutex<HashMap<u64, Poly>>> = OnceLock::new();

/// `Phi_n(T)`, obtained by dividing `T^n - 1` by `Phi_d` for every proper
/// divisor `d` of `n`. Results are cached for the life of the process.
pub fn cyclotomic_poly(n: u64) -> Poly {
    assert!(n > 0, "cyclotomic index must be positive");
    let cache = CYCLOTOMIC_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = &Poly::x_pow(n as u32) - &Poly::one(1);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = p.div_rem(&cyclotomic_poly(d)).expect("univariate division");
        debug_assert!(r.is_zero());
        p = q;
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// `sum_m c_m w^m` with `w^h = 1`, stored as the `h` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CyclotomicInt {
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn zero(h: u32) -> Self {
        assert!(h > 0);
        CyclotomicInt {
            coeffs: vec![0; h as usize],
        }
    }

    /// `w^k` for any integer `k`.
    pub fn omega_pow(k: i64, h: u32) -> Self {
        let mut z = Self::zero(h);
        z.coeffs[k.rem_euclid(h as i64) as usize] = 1;
        z
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty());
        CyclotomicInt { coeffs }
    }

    pub fn h(&self) -> u32 {
        self.coeffs.len() as u32
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Multiplication by `w`: a cyclic shift.
    pub fn mul_omega(&self) -> Self {
        let h = self.coeffs.len();
        let mut out = vec![0; h];
        for (m, &c) in self.coeffs.iter().enumerate() {
            out[(m + 1) % h] = c;
        }
        CyclotomicInt { coeffs: out }
    }

    pub fn scale(&self, s: i64) -> Self {
        CyclotomicInt {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.h(), other.h());
        let h = self.coeffs.len();
        let mut out = vec![0; h];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[(i + j) % h] += a * b;
            }
        }
        CyclotomicInt { coeffs: out }
    }

    /// Evaluates at `w = exp(2 pi i / h)`.
    pub fn to_complex(&self) -> Complex64 {
        let h = self.coeffs.len() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(m, &c)| Complex64::from_polar(c as f64, 2.0 * PI * m as f64 / h))
            .sum()
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.h(), rhs.h(), "group rings of different order");
        CyclotomicInt {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn sub(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicInt {
    type Output = CyclotomicInt;
    fn neg(self) -> CyclotomicInt {
        self.scale(-1)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(m, &c)| format!("{c}*w^{m}"))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), &Poly::x_pow(1) - &Poly::one(1));
        assert_eq!(cyclotomic_poly(2), &Poly::x_pow(1) + &Poly::one(1));
        let phi6 = Poly::from_coeffs(&[int(1), int(-1), int(1)]);
        assert_eq!(cyclotomic_poly(6), phi6);
        // Phi_12 = T^4 - T^2 + 1
        let phi12 = Poly::from_coeffs(&[int(1), int(0), int(-1), int(0), int(1)]);
        assert_eq!(cyclotomic_poly(12), phi12);
    }

    #[test]
    fn product_over_divisors_recovers_t_pow_minus_one() {
        for m in 1..=30u64 {
            let prod = (1..=m)
                .filter(|d| m % d == 0)
                .fold(Poly::one(1), |acc, d| &acc * &cyclotomic_poly(d));
            assert_eq!(prod, &Poly::x_pow(m as u32) - &Poly::one(1), "m = {m}");
        }
    }

    #[test]
    fn sum_of_all_roots_vanishes() {
        for h in 1..=24u32 {
            let s = CyclotomicInt::from_coeffs(vec![1; h as usize]);
            let z = s.to_complex();
            if h == 1 {
                assert!((z.re - 1.0).abs() < 1e-12);
            } else {
                assert!(z.norm() < 1e-12, "h = {h}: {z}");
            }
        }
    }

    #[test]
    fn omega_powers_wrap() {
        let a = CyclotomicInt::omega_pow(0, 4);
        let b = CyclotomicInt::omega_pow(4, 4);
        assert!((&a - &b).is_zero());
        assert_eq!(CyclotomicInt::omega_pow(-1, 4).coeffs(), &[0, 0, 0, 1]);
        assert_eq!(a.mul_omega(), CyclotomicInt::omega_pow(1, 4));
        let w3 = CyclotomicInt::omega_pow(3, 4);
        assert_eq!(w3.mul(&CyclotomicInt::omega_pow(2, 4)), CyclotomicInt::omega_pow(1, 4));
    }
}
