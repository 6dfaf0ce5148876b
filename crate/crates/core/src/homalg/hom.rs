use num::Zero;

use super::morphism::{differential_matrix, Morphism};
use super::slots::SlotBasis;
use crate::algebra::{RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::mfcore::{shift, GradedMF};

/// Cohomology of the morphism complex in one degree.
#[derive(Clone, Debug)]
pub struct HomReport {
    pub degree: i64,
    pub dim: usize,
    pub slots: usize,
    pub cycles: usize,
    pub boundaries: usize,
    /// Closed morphisms whose classes form a basis.
    pub representatives: Vec<Morphism>,
}

/// Incremental echelon basis used to pick representatives outside a span.
struct Span {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Span {
    fn new() -> Self {
        Span { rows: Vec::new() }
    }

    /// Adds `v` if it is independent of the span; reports whether it was.
    fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone() / &row[*p];
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= &f * b;
                }
            }
        }
        match v.iter().position(|a| !a.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// `H^q = Ker(m1: T^q -> T^{q+1}) / Im(m1: T^{q-1} -> T^q)`.
pub fn hom(alpha: &GradedMF, beta: &GradedMF, q: i64) -> Result<HomReport> {
    let basis = SlotBasis::new(alpha, beta, q)?;
    let d = differential_matrix(alpha, beta, q)?;
    let d_prev = differential_matrix(alpha, beta, q - 1)?;
    let ker = d.kernel_image();
    let img = d_prev.kernel_image();
    let mut span = Span::new();
    for v in &img.image {
        span.insert(v.clone());
    }
    let mut representatives = Vec::new();
    for v in ker.kernel {
        if span.insert(v.clone()) {
            representatives.push(Morphism::new(alpha, beta, q, v)?);
        }
    }
    Ok(HomReport {
        degree: q,
        dim: representatives.len(),
        slots: basis.len(),
        cycles: basis.len() - ker.rank,
        boundaries: img.rank,
        representatives,
    })
}

/// `Hom(alpha, beta[m])`, computed in degree 0 against the shifted target.
pub fn hom_shifted(alpha: &GradedMF, beta: &GradedMF, m: i64) -> Result<HomReport> {
    let mut rep = hom(alpha, &shift(beta, m), 0)?;
    rep.degree = m;
    Ok(rep)
}

/// Dimensions of `H^q` for `q` in `lo..=hi`, sharing differential ranks.
pub fn hom_dims_range(alpha: &GradedMF, beta: &GradedMF, lo: i64, hi: i64) -> Result<Vec<usize>> {
    let mut ranks = Vec::new();
    let mut sizes = Vec::new();
    for q in lo - 1..=hi {
        ranks.push(differential_matrix(alpha, beta, q)?.rank());
        sizes.push(SlotBasis::new(alpha, beta, q)?.len());
    }
    Ok((1..ranks.len())
        .map(|n| sizes[n] - ranks[n] - ranks[n - 1])
        .collect())
}

/// The degree window `[-(span + 2h), span + 2h]` used for Euler
/// characteristics, with `span` the spread of all tags of both objects.
pub fn euler_window(alpha: &GradedMF, beta: &GradedMF) -> i64 {
    let tags: Vec<i64> = [alpha.even(), alpha.odd(), beta.even(), beta.odd()]
        .concat();
    let span = match (tags.iter().min(), tags.iter().max()) {
        (Some(a), Some(b)) => b - a,
        _ => 0,
    };
    span + 2 * alpha.h() as i64
}

/// `sum_m (-1)^m dim Hom(alpha, beta[m])` over the Euler window; fails if
/// either edge of the window carries a nonzero group.
pub fn euler_char(alpha: &GradedMF, beta: &GradedMF) -> Result<i64> {
    let w = euler_window(alpha, beta);
    let dims = hom_dims_range(alpha, beta, -w, w)?;
    for (deg, d) in [(-w, dims[0]), (w, dims[dims.len() - 1])] {
        if d != 0 {
            return Err(Error::WindowTooSmall {
                lo: -w,
                hi: w,
                degree: deg,
            });
        }
    }
    Ok(dims
        .iter()
        .enumerate()
        .map(|(n, &d)| if (n as i64 - w).rem_euclid(2) == 0 { d as i64 } else { -(d as i64) })
        .sum())
}

pub fn is_closed(phi: &Morphism) -> Result<bool> {
    Ok(super::m1(phi)?.is_zero())
}

/// Whether `phi` lies in the image of `m1` from the degree below.
pub fn is_boundary(phi: &Morphism) -> Result<bool> {
    let d = differential_matrix(phi.source(), phi.target(), phi.degree() - 1)?;
    let with = RatMatrix::from_columns(
        d.rows(),
        &(0..d.cols())
            .map(|j| d.column(j))
            .chain(std::iter::once(phi.coeffs().to_vec()))
            .collect::<Vec<_>>(),
    );
    Ok(with.rank() == d.rank())
}

/// Closed and not a boundary.
pub fn is_nonzero_class(phi: &Morphism) -> Result<bool> {
    Ok(is_closed(phi)? && !is_boundary(phi)?)
}
