use super::hom::{hom, hom_shifted};
use super::morphism::{m2, Morphism};
use super::slots::Block;
use crate::algebra::{int, residue_div, Poly, RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::mfcore::{indecomposable, serre, GradedMF};

/// `Res[Str(dQ_k Phi) / f']` with
/// `Str = (h-k) x^{h-k-1} Phi_{+-} - k x^{k-1} Phi_{-+}`, normalized so the
/// generator `Phi_k = [[0, -x^{h-k-1}], [x^{k-1}, 0]]` has trace 1.
pub fn serre_trace_blocks(phi_pm: &Poly, phi_mp: &Poly, k: i64, h: u32) -> Result<Rational> {
    let hh = h as i64;
    if k < 1 || k >= hh {
        return Err(Error::LabelOutOfRange { l: k, max: hh - 1 });
    }
    let a = Poly::univariate_monomial(int(hh - k), (hh - k - 1) as u32);
    let b = Poly::univariate_monomial(int(k), (k - 1) as u32);
    let str_ = &(&a * phi_pm) - &(&b * phi_mp);
    residue_div(&str_, h)
}

/// Label `(k, i)` of a rank-one reduced object, read off its data.
fn rank_one_label(m: &GradedMF) -> Option<(i64, i64)> {
    if m.even().len() != 1 || m.odd().len() != 1 {
        return None;
    }
    let k = m.odd()[0] - m.even()[0];
    (k >= 1 && k < m.h() as i64 && m.q_pm()[(0, 0)] == Poly::x_pow(k as u32))
        .then_some((k, m.even()[0]))
}

/// Trace of `Psi` in `Tw^0(M_{k,i}, S M_{k,i})`, read as the odd
/// endomorphism `Phi_{+-} = Psi_{++}`, `Phi_{-+} = -Psi_{--}` of `M_{k,i}`.
pub fn serre_trace(psi: &Morphism) -> Result<Rational> {
    let (k, _) = rank_one_label(psi.source())
        .ok_or_else(|| Error::Shape("trace source must be some M_{k,i}".into()))?;
    if psi.degree() != 0 {
        return Err(Error::WrongDegree {
            expected: 0,
            found: psi.degree(),
        });
    }
    if psi.target() != &serre(psi.source()) {
        return Err(Error::Shape("trace target must be the Serre image of the source".into()));
    }
    let mut pm = Poly::zero(1);
    let mut mp = Poly::zero(1);
    for (s, c) in psi.basis().slots().iter().zip(psi.coeffs()) {
        let mono = Poly::univariate_monomial(c.clone(), s.exp);
        match s.block {
            Block::PlusPlus => pm = &pm + &mono,
            Block::MinusMinus => mp = &mp - &mono,
            _ => unreachable!("degree 0 has only diagonal blocks"),
        }
    }
    serre_trace_blocks(&pm, &mp, k, psi.source().h())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreCell {
    pub source: (i64, i64),
    pub target: (i64, i64),
    pub hom_dim: usize,
    pub dual_dim: usize,
    pub pairing_rank: usize,
}

impl SerreCell {
    pub fn ok(&self) -> bool {
        self.hom_dim == self.dual_dim && self.pairing_rank == self.hom_dim
    }
}

#[derive(Clone, Debug)]
pub struct SerreReport {
    pub h: u32,
    pub range: i64,
    pub cells: Vec<SerreCell>,
}

impl SerreReport {
    pub fn failures(&self) -> Vec<&SerreCell> {
        self.cells.iter().filter(|c| !c.ok()).collect()
    }

    pub fn ok(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn nonzero_pairs(&self) -> usize {
        self.cells.iter().filter(|c| c.hom_dim > 0).count()
    }
}

/// Pairing `P[a][b] = Tr(m2(psi_b, phi_a))` between `Hom(X, Y)` and
/// `Hom(Y, S X)` for `X = M_{k,i}`, `Y = M_{l,j}`.
pub fn serre_pairing(x: &GradedMF, y: &GradedMF) -> Result<RatMatrix> {
    let sx = serre(x);
    let phis = hom(x, y, 0)?.representatives;
    let psis = hom(y, &sx, 0)?.representatives;
    let mut p = RatMatrix::zeros(phis.len(), psis.len());
    for (a, phi) in phis.iter().enumerate() {
        for (b, psi) in psis.iter().enumerate() {
            p[(a, b)] = serre_trace(&m2(psi, phi)?)?;
        }
    }
    Ok(p)
}

/// For all `1 <= k, l <= h-1` and `|i|, |j| <= range`: compares
/// `dim Hom(M_{k,i}, M_{l,j})` with `dim Hom(M_{l,j}, M_{k,i-1}[1])` and
/// the rank of the trace pairing.
pub fn verify_serre_duality(h: u32, range: i64) -> Result<SerreReport> {
    let hh = h as i64;
    let mut cells = Vec::new();
    for k in 1..hh {
        for i in -range..=range {
            let x = indecomposable(k, i, h)?;
            let x_prev = indecomposable(k, i - 1, h)?;
            for l in 1..hh {
                for j in -range..=range {
                    let y = indecomposable(l, j, h)?;
                    let hom_dim = hom(&x, &y, 0)?.dim;
                    let dual_dim = hom_shifted(&y, &x_prev, 1)?.dim;
                    let pairing = serre_pairing(&x, &y)?;
                    let pairing_rank = if pairing.rows() == pairing.cols() {
                        pairing.rank()
                    } else {
                        0
                    };
                    cells.push(SerreCell {
                        source: (k, i),
                        target: (l, j),
                        hom_dim,
                        dual_dim,
                        pairing_rank,
                    });
                }
            }
        }
    }
    Ok(SerreReport { h, range, cells })
}

/// The generator `Phi_k` as raw blocks `(Phi_{+-}, Phi_{-+})`.
pub fn trace_generator(k: i64, h: u32) -> (Poly, Poly) {
    let hh = h as i64;
    (
        Poly::x_pow((k - 1) as u32),
        Poly::univariate_monomial(-int(1), (hh - k - 1) as u32),
    )
}
