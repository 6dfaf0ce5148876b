//! Multivariate polynomials over the rationals with dense exponent vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};

use super::rational::{int, Rational};
use super::weights::WeightSystem;
use crate::error::{Error, Result};

/// A polynomial in a fixed number of variables. Zero coefficients are never
/// stored; every exponent vector has length `nvars`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(Rational::one(), nvars)
    }

    pub fn constant(c: Rational, nvars: usize) -> Self {
        Self::monomial(c, vec![0; nvars])
    }

    pub fn monomial(c: Rational, exps: Vec<u32>) -> Self {
        let mut p = Poly::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable `x_index` in a ring with `nvars` variables.
    pub fn var(index: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(Rational::one(), e)
    }

    /// `c * x^e` in one variable.
    pub fn univariate_monomial(c: Rational, e: u32) -> Self {
        Self::monomial(c, vec![e])
    }

    /// `x^e` in one variable.
    pub fn x_pow(e: u32) -> Self {
        Self::univariate_monomial(Rational::one(), e)
    }

    /// Builds from `(coefficient, exponents)` pairs; like terms are merged.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Rational, Vec<u32>)>) -> Result<Self> {
        let mut p = Poly::zero(nvars);
        for (c, e) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Univariate polynomial from coefficients `c_0, c_1, ...`.
    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        let mut p = Poly::zero(1);
        for (e, c) in coeffs.iter().enumerate() {
            p.add_term(vec![e as u32], c.clone());
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// The same polynomial in a ring with `extra` more variables.
    pub fn extend_vars(&self, extra: usize) -> Poly {
        let nvars = self.nvars + extra;
        Poly {
            nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2.resize(nvars, 0);
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: descending lexicographic on exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&vec![0; self.nvars])
    }

    /// The single term of a monomial, if the polynomial has exactly one.
    pub fn as_monomial(&self) -> Option<(&Rational, &[u32])> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((c, e.as_slice()))
        } else {
            None
        }
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Weighted degree `sum_i e_i * 2 a_i / h`, shared by every term.
    pub fn weighted_degree(&self, w: &WeightSystem) -> Result<Rational> {
        if w.nvars() != self.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: w.nvars(),
            });
        }
        let mut deg: Option<Rational> = None;
        for e in self.terms.keys() {
            let d = w.monomial_degree(e);
            match &deg {
                None => deg = Some(d),
                Some(prev) if *prev != d => return Err(Error::NonHomogeneous),
                _ => {}
            }
        }
        deg.ok_or(Error::ZeroPolynomial)
    }

    pub fn partial_derivative(&self, index: usize) -> Result<Poly> {
        if index >= self.nvars {
            return Err(Error::VariableIndex {
                index,
                nvars: self.nvars,
            });
        }
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[index] > 0 {
                let mut e2 = e.clone();
                e2[index] -= 1;
                out.add_term(e2, c * int(e[index] as i64));
            }
        }
        Ok(out)
    }

    /// Degree of a univariate polynomial; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        debug_assert_eq!(self.nvars, 1);
        self.terms.keys().next_back().map(|e| e[0])
    }

    pub fn eval_univariate(&self, t: &Rational) -> Rational {
        debug_assert_eq!(self.nvars, 1);
        self.terms.iter().fold(Rational::zero(), |acc, (e, c)| {
            acc + c * num::pow::pow(t.clone(), e[0] as usize)
        })
    }

    /// Euclidean division of univariate polynomials: `self = q * d + r`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        if self.nvars != 1 || d.nvars != 1 {
            return Err(Error::NotUnivariate("division needs one variable".into()));
        }
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lead = d.coefficient(&[dd]);
        let mut q = Poly::zero(1);
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.coefficient(&[rd]) / &lead;
            let t = Poly::univariate_monomial(c, rd - dd);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Ok((q, r))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("variable count mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

const VAR_NAMES: [&str; 4] = ["x", "y", "z", "w"];

fn var_name(i: usize, nvars: usize) -> String {
    if nvars <= VAR_NAMES.len() {
        VAR_NAMES[i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    let v = var_name(i, self.nvars);
                    if k == 1 {
                        v
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
