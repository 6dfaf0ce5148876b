//! Weight systems, quasi-homogeneity, and the regularity test for
//! `(a, b, c; h)` by cyclotomic multiplicity counting.

use std::collections::BTreeMap;

use num::integer::gcd;
use num::One;

use super::cyclotomic::cyclotomic_poly;
use super::poly::Poly;
use super::rational::{int, Rational};
use crate::error::{Error, Result};

/// Positive weights `a_1..a_n` and index `h`; variable `x_i` has degree `2 a_i / h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    weights: Vec<u32>,
    h: u32,
}

impl WeightSystem {
    /// Requires `n >= 1`, positive entries and `gcd(a_1, ..., a_n, h) = 1`.
    pub fn new(weights: Vec<u32>, h: u32) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("need at least one variable".into()));
        }
        if h == 0 || weights.contains(&0) {
            return Err(Error::InvalidWeights("weights and index must be positive".into()));
        }
        let g = weights.iter().fold(h, |g, &a| gcd(g, a));
        if g != 1 {
            return Err(Error::InvalidWeights(format!(
                "gcd of weights {weights:?} and h = {h} is {g}, not 1"
            )));
        }
        Ok(WeightSystem { weights, h })
    }

    /// The one-variable system `([1], h)` of `f = x^h`.
    pub fn univariate(h: u32) -> Result<Self> {
        Self::new(vec![1], h)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn h(&self) -> u32 {
        self.h
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn is_univariate(&self) -> bool {
        self.weights == [1]
    }

    pub fn monomial_degree(&self, exps: &[u32]) -> Rational {
        let num: i64 = exps
            .iter()
            .zip(&self.weights)
            .map(|(&e, &a)| 2 * e as i64 * a as i64)
            .sum();
        Rational::new(num.into(), (self.h as i64).into())
    }

    /// Weights extended by two new variables (used by Knörrer doubling).
    pub fn extended(&self, extra: &[u32]) -> Result<Self> {
        let mut w = self.weights.clone();
        w.extend_from_slice(extra);
        Self::new(w, self.h)
    }
}

/// Euler identity `sum_i (2 a_i / h) x_i df/dx_i = 2 f`, checked exactly.
pub fn check_quasi_homogeneous(f: &Poly, w: &WeightSystem) -> bool {
    if f.nvars() != w.nvars() || f.is_zero() {
        return false;
    }
    let mut lhs = Poly::zero(f.nvars());
    for (i, &a) in w.weights().iter().enumerate() {
        let d = f.partial_derivative(i).expect("index in range");
        let xi = Poly::var(i, f.nvars());
        let coef = Rational::new((2 * a as i64).into(), (w.h() as i64).into());
        lhs = &lhs + &(&xi * &d).scale(&coef);
    }
    lhs == f.scale(&int(2))
}

/// Witness attached to a regularity verdict.
#[derive(Clone, Debug, PartialEq)]
pub enum RegularityWitness {
    /// `chi(T)` as a polynomial.
    Polynomial(Poly),
    /// Order of the smallest root of unity where `chi` has a pole.
    Pole { root_order: u64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegularityVerdict {
    pub regular: bool,
    pub witness: RegularityWitness,
    /// Net multiplicity of each cyclotomic factor `Phi_d` in `chi(T)`.
    pub multiplicities: BTreeMap<u64, i64>,
}

fn divisors(m: u64) -> impl Iterator<Item = u64> {
    (1..=m).filter(move |d| m.is_multiple_of(*d))
}

/// Decides whether `chi(T) = prod (T^{h-a} - 1) / prod (T^a - 1)` has no
/// poles, by comparing the multiplicity of every `Phi_d` in numerator and
/// denominator. Needs `0 < a, b, c < h`.
pub fn is_regular_weight_system(a: u32, b: u32, c: u32, h: u32) -> Result<RegularityVerdict> {
    for x in [a, b, c] {
        if x == 0 || x >= h {
            return Err(Error::InvalidWeights(format!(
                "need 0 < a, b, c < h, got ({a}, {b}, {c}; {h})"
            )));
        }
    }
    let mut mult: BTreeMap<u64, i64> = BTreeMap::new();
    for x in [a, b, c] {
        for d in divisors((h - x) as u64) {
            *mult.entry(d).or_default() += 1;
        }
        for d in divisors(x as u64) {
            *mult.entry(d).or_default() -= 1;
        }
    }
    mult.retain(|_, m| *m != 0);
    if let Some((&d, _)) = mult.iter().find(|(_, &m)| m < 0) {
        return Ok(RegularityVerdict {
            regular: false,
            witness: RegularityWitness::Pole { root_order: d },
            multiplicities: mult,
        });
    }
    let mut chi = Poly::one(1);
    for (&d, &m) in &mult {
        chi = &chi * &cyclotomic_poly(d).pow(m as u32);
    }
    Ok(RegularityVerdict {
        regular: true,
        witness: RegularityWitness::Polynomial(chi),
        multiplicities: mult,
    })
}

/// `mu = (h-a)(h-b)(h-c) / (abc)` for a regular weight system.
pub fn milnor_number(a: u32, b: u32, c: u32, h: u32) -> Result<Rational> {
    let v = is_regular_weight_system(a, b, c, h)?;
    if let RegularityWitness::Pole { root_order } = v.witness {
        return Err(Error::NotRegular { root_order });
    }
    let num = (h - a) as i64 * (h - b) as i64 * (h - c) as i64;
    let den = a as i64 * b as i64 * c as i64;
    Ok(Rational::new(num.into(), den.into()))
}

/// `chi(1)` from the witness polynomial; equals the Milnor number.
pub fn chi_at_one(v: &RegularityVerdict) -> Option<Rational> {
    match &v.witness {
        RegularityWitness::Polynomial(p) => Some(p.eval_univariate(&Rational::one())),
        RegularityWitness::Pole { .. } => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn univ(e: u32) -> Poly {
        Poly::x_pow(e)
    }

    #[test]
    fn weighted_degrees() {
        let w = WeightSystem::univariate(4).unwrap();
        assert_eq!(univ(3).weighted_degree(&w).unwrap(), rat(3, 2));
        let w2 = WeightSystem::new(vec![1, 2], 4).unwrap();
        let p = &Poly::monomial(int(1), vec![2, 0]) + &Poly::var(1, 2);
        assert_eq!(p.weighted_degree(&w2).unwrap(), int(1));
        let mixed = &univ(1) + &univ(2);
        assert_eq!(mixed.weighted_degree(&w), Err(Error::NonHomogeneous));
        assert_eq!(Poly::zero(1).weighted_degree(&w), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn quasi_homogeneity() {
        assert!(check_quasi_homogeneous(&univ(4), &WeightSystem::univariate(4).unwrap()));
        let cubic = Poly::from_terms(
            3,
            vec![(int(1), vec![3, 0, 0]), (int(1), vec![0, 3, 0]), (int(1), vec![0, 0, 3])],
        )
        .unwrap();
        assert!(check_quasi_homogeneous(&cubic, &WeightSystem::new(vec![1, 1, 1], 3).unwrap()));
        let bad = &univ(3) + &univ(1);
        assert!(!check_quasi_homogeneous(&bad, &WeightSystem::univariate(3).unwrap()));
    }

    #[test]
    fn gcd_condition() {
        assert!(WeightSystem::new(vec![2, 4], 6).is_err());
        assert!(WeightSystem::new(vec![2, 4], 5).is_ok());
        assert!(WeightSystem::new(vec![], 5).is_err());
    }

    #[test]
    fn regular_weight_examples() {
        let v = is_regular_weight_system(1, 1, 1, 3).unwrap();
        assert!(v.regular);
        let t_plus_one = &univ(1) + &Poly::one(1);
        assert_eq!(v.witness, RegularityWitness::Polynomial(t_plus_one.pow(3)));

        // (T^7-1)(T^6-1)(T^5-1) carries Phi_2 once; (T^2-1)(T^4-1) twice.
        let v = is_regular_weight_system(2, 3, 4, 9).unwrap();
        assert!(!v.regular);
        assert_eq!(v.witness, RegularityWitness::Pole { root_order: 2 });

        // Phi_2 appears twice on both sides here, so (2,3,4;10) is regular.
        let v = is_regular_weight_system(2, 3, 4, 10).unwrap();
        assert!(v.regular);
        let expected = &(&cyclotomic_poly(8) * &cyclotomic_poly(6)) * &cyclotomic_poly(7);
        assert_eq!(v.witness, RegularityWitness::Polynomial(expected));

        assert!(is_regular_weight_system(1, 1, 2, 4).unwrap().regular);
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(milnor_number(1, 1, 1, 3).unwrap(), int(8));
        assert_eq!(milnor_number(1, 1, 1, 4).unwrap(), int(27));
        assert_eq!(milnor_number(1, 1, 2, 4).unwrap(), int(9));
        let v = is_regular_weight_system(1, 1, 2, 4).unwrap();
        assert_eq!(chi_at_one(&v).unwrap(), int(9));
        assert!(matches!(
            milnor_number(2, 3, 4, 9),
            Err(Error::NotRegular { root_order: 2 })
        ));
    }
}
