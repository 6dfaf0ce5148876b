use num::One;

use crate::algebra::{Poly, PolyMatrix, Rational};
use crate::error::{Error, Result};
use crate::mfcore::{verify_mf, GradedMF};

/// Graded Smith form of `q_pm`: `r * q_pm * c = diag(x^{d_t})`, where the
/// new even summand `t` is old even summand `even_order[t]` and likewise for
/// odd. `r` acts on the odd side and `c` on the even side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSnf {
    pub exponents: Vec<u32>,
    pub even_order: Vec<usize>,
    pub odd_order: Vec<usize>,
    pub r: PolyMatrix,
    pub r_inv: PolyMatrix,
    pub c: PolyMatrix,
    pub c_inv: PolyMatrix,
}

struct Work {
    a: PolyMatrix,
    r: PolyMatrix,
    r_inv: PolyMatrix,
    c: PolyMatrix,
    c_inv: PolyMatrix,
}

impl Work {
    /// `row_a += g * row_b` on the working matrix and `r`.
    fn row_add(&mut self, a: usize, b: usize, g: &Poly) {
        for m in [&mut self.a, &mut self.r] {
            for j in 0..m.cols() {
                let v = &m[(b, j)] * g;
                if !v.is_zero() {
                    m[(a, j)] = &m[(a, j)] + &v;
                }
            }
        }
        let m = &mut self.r_inv;
        for i in 0..m.rows() {
            let v = &m[(i, a)] * g;
            if !v.is_zero() {
                m[(i, b)] = &m[(i, b)] - &v;
            }
        }
    }

    /// `col_a += g * col_b` on the working matrix and `c`.
    fn col_add(&mut self, a: usize, b: usize, g: &Poly) {
        for m in [&mut self.a, &mut self.c] {
            for i in 0..m.rows() {
                let v = &m[(i, b)] * g;
                if !v.is_zero() {
                    m[(i, a)] = &m[(i, a)] + &v;
                }
            }
        }
        let m = &mut self.c_inv;
        for j in 0..m.cols() {
            let v = &m[(a, j)] * g;
            if !v.is_zero() {
                m[(b, j)] = &m[(b, j)] - &v;
            }
        }
    }

    fn row_scale(&mut self, a: usize, s: &Rational) {
        for m in [&mut self.a, &mut self.r] {
            for j in 0..m.cols() {
                m[(a, j)] = m[(a, j)].scale(s);
            }
        }
        let inv = s.recip();
        let m = &mut self.r_inv;
        for i in 0..m.rows() {
            m[(i, a)] = m[(i, a)].scale(&inv);
        }
    }
}

fn monomial_of(p: &Poly) -> Result<(Rational, u32)> {
    p.as_monomial()
        .map(|(c, e)| (c.clone(), e[0]))
        .ok_or_else(|| Error::NotAFactorization(format!("entry {p} is not a monomial")))
}

/// Pivot: a nonzero entry of minimal degree, ties to the smallest
/// `(row, col)`. Elimination then stays inside graded operations.
pub fn graded_snf(m: &GradedMF) -> Result<GradedSnf> {
    m.require_univariate()?;
    let rep = verify_mf(m);
    if !rep.ok() {
        return Err(Error::NotAFactorization(rep.summary()));
    }
    let n = m.even().len();
    let mut w = Work {
        a: m.q_pm().clone(),
        r: PolyMatrix::identity(n, 1),
        r_inv: PolyMatrix::identity(n, 1),
        c: PolyMatrix::identity(n, 1),
        c_inv: PolyMatrix::identity(n, 1),
    };
    let mut rows_left: Vec<usize> = (0..n).collect();
    let mut cols_left: Vec<usize> = (0..n).collect();
    let mut even_order = Vec::with_capacity(n);
    let mut odd_order = Vec::with_capacity(n);
    let mut exponents = Vec::with_capacity(n);
    while !rows_left.is_empty() {
        let mut best: Option<(u32, usize, usize)> = None;
        for &j in &rows_left {
            for &i in &cols_left {
                if w.a[(j, i)].is_zero() {
                    continue;
                }
                let (_, e) = monomial_of(&w.a[(j, i)])?;
                if best.is_none_or(|(be, bj, bi)| (e, j, i) < (be, bj, bi)) {
                    best = Some((e, j, i));
                }
            }
        }
        let (e, pj, pi) = best.ok_or_else(|| {
            Error::NotAFactorization("q_pm is singular".into())
        })?;
        let (pc, _) = monomial_of(&w.a[(pj, pi)])?;
        for &j in &rows_left {
            if j == pj || w.a[(j, pi)].is_zero() {
                continue;
            }
            let (c, ej) = monomial_of(&w.a[(j, pi)])?;
            let g = Poly::univariate_monomial(-(c / &pc), ej - e);
            w.row_add(j, pj, &g);
        }
        for &i in &cols_left {
            if i == pi || w.a[(pj, i)].is_zero() {
                continue;
            }
            let (c, ei) = monomial_of(&w.a[(pj, i)])?;
            let g = Poly::univariate_monomial(-(c / &pc), ei - e);
            w.col_add(i, pi, &g);
        }
        w.row_scale(pj, &pc.recip());
        rows_left.retain(|&j| j != pj);
        cols_left.retain(|&i| i != pi);
        odd_order.push(pj);
        even_order.push(pi);
        exponents.push(e);
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(GradedSnf {
        exponents,
        r: w.r.permuted(&odd_order, &all),
        r_inv: w.r_inv.permuted(&all, &odd_order),
        c: w.c.permuted(&all, &even_order),
        c_inv: w.c_inv.permuted(&even_order, &all),
        even_order,
        odd_order,
    })
}

impl GradedSnf {
    pub fn diagonal_pm(&self) -> PolyMatrix {
        diag(self.exponents.iter().copied())
    }

    /// `c_inv * q_mp * r_inv`, which must be `diag(x^{h - d_t})`.
    pub fn transformed_mp(&self, m: &GradedMF) -> PolyMatrix {
        self.c_inv.mul(m.q_mp()).mul(&self.r_inv)
    }

    pub fn transformed_pm(&self, m: &GradedMF) -> PolyMatrix {
        self.r.mul(m.q_pm()).mul(&self.c)
    }
}

pub(crate) fn diag(exps: impl Iterator<Item = u32>) -> PolyMatrix {
    let exps: Vec<u32> = exps.collect();
    let mut d = PolyMatrix::zeros(exps.len(), exps.len(), 1);
    for (t, &e) in exps.iter().enumerate() {
        d[(t, t)] = Poly::univariate_monomial(Rational::one(), e);
    }
    d
}
