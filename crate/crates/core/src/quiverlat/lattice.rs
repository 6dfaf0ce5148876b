use super::rep::{interval_hom_dim, IntervalModule};
use crate::algebra::{int, to_i64, RatMatrix};
use crate::error::{Error, Result};
use crate::homalg::euler_char;
use crate::mfcore::{indecomposable, GradedMF};

pub type IntMatrix = Vec<Vec<i64>>;

pub(crate) fn to_rat(m: &IntMatrix) -> RatMatrix {
    RatMatrix::from_i64(m)
}

pub(crate) fn to_int(m: &RatMatrix) -> Result<IntMatrix> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| to_i64(&m[(i, j)]).ok_or(Error::Singular))
                .collect()
        })
        .collect()
}

pub fn identity_matrix(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

/// Tridiagonal matrix with 2 on the diagonal and -1 beside it.
pub fn cartan_matrix_a(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerSource {
    Mf,
    Quiver,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerData {
    pub h: u32,
    /// `a_ij = chi(E_i, E_j)`
    pub a: IntMatrix,
    pub a_inv: IntMatrix,
    pub det: i64,
    /// `A^{-1} + A^{-T}`
    pub intersection: IntMatrix,
    /// `-A^T A^{-1}`
    pub coxeter: IntMatrix,
}

impl EulerData {
    pub fn from_matrix(h: u32, a: IntMatrix) -> Result<Self> {
        let ra = to_rat(&a);
        let inv = ra.inverse().ok_or(Error::Singular)?;
        let det = to_i64(&ra.determinant()).ok_or(Error::Singular)?;
        let intersection = to_int(&inv.add(&inv.transpose()))?;
        let coxeter = to_int(&ra.transpose().mul(&inv).neg())?;
        Ok(EulerData {
            h,
            a_inv: to_int(&inv)?,
            a,
            det,
            intersection,
            coxeter,
        })
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        self.a.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, &v)| if i == j { v == 1 } else if i > j { v == 0 } else { true })
        })
    }

    pub fn matches_cartan(&self) -> bool {
        self.intersection == cartan_matrix_a(self.a.len())
    }

    /// `(-A^T A^{-1})^h = I`.
    pub fn coxeter_order_divides_h(&self) -> bool {
        let c = to_rat(&self.coxeter);
        let n = self.a.len();
        let mut p = RatMatrix::identity(n);
        for _ in 0..self.h {
            p = p.mul(&c);
        }
        p == RatMatrix::identity(n)
    }

    /// `A^{-1} A^T`: the action of the Serre functor on classes written in
    /// the basis `[M_{1,0}], ..., [M_{h-1,0}]`.
    pub fn serre_on_k0(&self) -> IntMatrix {
        let ra = to_rat(&self.a);
        to_int(&to_rat(&self.a_inv).mul(&ra.transpose())).expect("unimodular")
    }
}

/// Indecomposable projectives of `A_n`, found as the intervals `P` with
/// `Ext^1(P, X) = 0` for every interval `X`, ordered so that
/// `Hom(P_i, P_j) = 0` for `i > j`.
pub fn projectives(n: usize) -> Vec<IntervalModule> {
    let all = IntervalModule::all(n);
    let mut proj: Vec<IntervalModule> = all
        .iter()
        .copied()
        .filter(|&p| all.iter().all(|&x| interval_hom_dim(p, x, 1, n) == 0))
        .collect();
    // Repeatedly take a projective with no nonzero Hom into it from the rest.
    let mut ordered = Vec::new();
    while !proj.is_empty() {
        let pos = proj
            .iter()
            .position(|&p| {
                proj.iter()
                    .all(|&q| q == p || interval_hom_dim(q, p, 0, n) == 0)
            })
            .expect("Hom order on projectives is acyclic");
        ordered.push(proj.remove(pos));
    }
    ordered
}

/// `A` from the exceptional collection `M_{1,0}, ..., M_{h-1,0}` (`Mf`) or
/// from the projectives of the path algebra (`Quiver`).
pub fn euler_matrix(h: u32, source: EulerSource) -> Result<EulerData> {
    let n = h as usize - 1;
    let a = match source {
        EulerSource::Mf => {
            let objs = (1..h as i64)
                .map(|k| indecomposable(k, 0, h))
                .collect::<Result<Vec<_>>>()?;
            objs.iter()
                .map(|x| objs.iter().map(|y| euler_char(x, y)).collect())
                .collect::<Result<IntMatrix>>()?
        }
        EulerSource::Quiver => {
            let ps = projectives(n);
            ps.iter()
                .map(|&x| {
                    ps.iter()
                        .map(|&y| {
                            interval_hom_dim(x, y, 0, n) as i64 - interval_hom_dim(x, y, 1, n) as i64
                        })
                        .collect()
                })
                .collect()
        }
    };
    EulerData::from_matrix(h, a)
}

/// Coordinates `v` of `[m]` in the basis `[M_{1,0}], ..., [M_{h-1,0}]`,
/// from `A v = (chi(M_{k,0}, m))_k`.
pub fn k0_class(m: &GradedMF, euler: &EulerData) -> Result<Vec<i64>> {
    let h = m.require_univariate()?;
    let rhs = (1..h as i64)
        .map(|k| euler_char(&indecomposable(k, 0, h)?, m).map(int))
        .collect::<Result<Vec<_>>>()?;
    let v = to_rat(&euler.a).solve(&rhs).ok_or(Error::Singular)?;
    v.iter().map(|q| to_i64(q).ok_or(Error::Singular)).collect()
}

pub fn mat_vec(m: &IntMatrix, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}
