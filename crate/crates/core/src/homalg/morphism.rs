use num::{One, Zero};
use rand::Rng;

use super::slots::SlotBasis;
use crate::algebra::{int, sign_pow, Poly, PolyMatrix, RatMatrix, Rational};
use crate::error::{Error, Result};
use crate::mfcore::GradedMF;

/// An element of the degree-`q` morphism space, as coefficients on the
/// slot basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    source: GradedMF,
    target: GradedMF,
    basis: SlotBasis,
    coeffs: Vec<Rational>,
}

impl Morphism {
    pub fn new(source: &GradedMF, target: &GradedMF, q: i64, coeffs: Vec<Rational>) -> Result<Self> {
        let basis = SlotBasis::new(source, target, q)?;
        if coeffs.len() != basis.len() {
            return Err(Error::Shape(format!(
                "{} coefficients for {} slots",
                coeffs.len(),
                basis.len()
            )));
        }
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            basis,
            coeffs,
        })
    }

    pub fn zero(source: &GradedMF, target: &GradedMF, q: i64) -> Result<Self> {
        let n = SlotBasis::new(source, target, q)?.len();
        Self::new(source, target, q, vec![Rational::zero(); n])
    }

    /// Small integer coefficients on every slot, about a third of them zero.
    pub fn random<R: Rng>(source: &GradedMF, target: &GradedMF, q: i64, rng: &mut R) -> Result<Self> {
        let n = SlotBasis::new(source, target, q)?.len();
        let coeffs = (0..n)
            .map(|_| {
                if rng.gen_bool(1.0 / 3.0) {
                    Rational::zero()
                } else {
                    int(rng.gen_range(-4i64..=4))
                }
            })
            .collect();
        Self::new(source, target, q, coeffs)
    }

    pub fn identity(m: &GradedMF) -> Result<Self> {
        Self::from_matrix(m, m, 0, &PolyMatrix::identity(m.dim(), 1))
    }

    /// Reads a full `(target, source)` matrix; every nonzero term must sit on
    /// a legal slot with the slot's exponent.
    pub fn from_matrix(source: &GradedMF, target: &GradedMF, q: i64, mat: &PolyMatrix) -> Result<Self> {
        let basis = SlotBasis::new(source, target, q)?;
        let (sd, td) = basis.dims();
        if (mat.rows(), mat.cols()) != (td, sd) {
            return Err(Error::Shape(format!(
                "morphism matrix is {}x{}, expected {td}x{sd}",
                mat.rows(),
                mat.cols()
            )));
        }
        let mut coeffs = vec![Rational::zero(); basis.len()];
        for r in 0..td {
            for c in 0..sd {
                for (e, v) in mat[(r, c)].terms() {
                    match basis.lookup(r, c) {
                        Some(n) if basis.slots()[n].exp == e[0] => coeffs[n] += v,
                        _ => return Err(Error::IllegalSlot(format!("({r},{c}) x^{}", e[0]))),
                    }
                }
            }
        }
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            basis,
            coeffs,
        })
    }

    pub fn to_matrix(&self) -> PolyMatrix {
        let (sd, td) = self.basis.dims();
        let mut m = PolyMatrix::zeros(td, sd, 1);
        for (s, c) in self.basis.slots().iter().zip(&self.coeffs) {
            if !c.is_zero() {
                m[self.basis.full_coords(s)] = Poly::univariate_monomial(c.clone(), s.exp);
            }
        }
        m
    }

    pub fn source(&self) -> &GradedMF {
        &self.source
    }

    pub fn target(&self) -> &GradedMF {
        &self.target
    }

    pub fn degree(&self) -> i64 {
        self.basis.degree()
    }

    pub fn basis(&self) -> &SlotBasis {
        &self.basis
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Morphism {
        let mut out = self.clone();
        out.coeffs.iter_mut().for_each(|v| *v *= c);
        out
    }

    pub fn add(&self, other: &Morphism) -> Result<Morphism> {
        if self.basis != other.basis || self.source != other.source || self.target != other.target {
            return Err(Error::Shape("adding morphisms of different spaces".into()));
        }
        let mut out = self.clone();
        out.coeffs
            .iter_mut()
            .zip(&other.coeffs)
            .for_each(|(a, b)| *a += b);
        Ok(out)
    }
}

/// Matrix of `m1` from degree `q` to degree `q + 1` in slot coordinates
/// (rows: slots of degree `q + 1`, columns: slots of degree `q`).
pub fn differential_matrix(alpha: &GradedMF, beta: &GradedMF, q: i64) -> Result<RatMatrix> {
    let from = SlotBasis::new(alpha, beta, q)?;
    let to = SlotBasis::new(alpha, beta, q + 1)?;
    let mut d = RatMatrix::zeros(to.len(), from.len());
    let qa = alpha.full_q();
    let qb = beta.full_q();
    let sign = sign_pow(q);
    let (sd, td) = from.dims();
    for (col, s) in from.slots().iter().enumerate() {
        let (r0, c0) = from.full_coords(s);
        let mut put = |r: usize, c: usize, p: &Poly, scale: &Rational| -> Result<()> {
            for (e, v) in p.terms() {
                let exp = e[0] + s.exp;
                match to.lookup(r, c) {
                    Some(n) if to.slots()[n].exp == exp => d[(n, col)] += v * scale,
                    _ => return Err(Error::IllegalSlot(format!("({r},{c}) x^{exp}"))),
                }
            }
            Ok(())
        };
        // Q_b E_s lives in column c0; E_s Q_a lives in row r0.
        for r in 0..td {
            put(r, c0, &qb[(r, r0)], &Rational::one())?;
        }
        for c in 0..sd {
            put(r0, c, &qa[(c0, c)], &-sign.clone())?;
        }
    }
    Ok(d)
}

/// `m1(Phi) = Q_b Phi - (-1)^q Phi Q_a`.
pub fn m1(phi: &Morphism) -> Result<Morphism> {
    let d = differential_matrix(&phi.source, &phi.target, phi.degree())?;
    Morphism::new(&phi.source, &phi.target, phi.degree() + 1, d.mul_vec(&phi.coeffs))
}

/// `m2(Psi (x) Phi) = (-1)^{|Phi| (|Psi| + 1)} Psi Phi` for `Phi: a -> b`,
/// `Psi: b -> c`. With `m1` above this satisfies the unit axioms
/// `m2(x, e) = x`, `m2(e, y) = (-1)^{|y|} y`, the Leibniz rule
/// `m1 m2(Psi, Phi) = (-1)^{|Phi|} m2(m1 Psi, Phi) - m2(Psi, m1 Phi)` and
/// `m2(m2(x, y), z) = (-1)^{|z|} m2(x, m2(y, z))`.
pub fn m2(psi: &Morphism, phi: &Morphism) -> Result<Morphism> {
    if phi.target != psi.source {
        return Err(Error::NotComposable);
    }
    let (p, q) = (phi.degree(), psi.degree());
    let sign = sign_pow(p * (q + 1));
    let prod = psi.to_matrix().mul(&phi.to_matrix()).scale(&sign);
    Morphism::from_matrix(&phi.source, &psi.target, p + q, &prod)
}
