//! Phases, the cyclotomic central charge, semistability, Harder-Narasimhan
//! filtrations and a checker for the four stability axioms.

mod bridgeland;
mod hn;

pub use bridgeland::{check_bridgeland, polar_form_check, AxiomResult, BridgelandReport, BridgelandConfig};
pub use hn::{hn_filtration, HNFiltration, HNStep};

use num::complex::Complex64;

use crate::algebra::{int, rat, CyclotomicInt, Rational};
use crate::decompose::labels_of;
use crate::error::{Error, Result};
use crate::mfcore::GradedMF;

/// Exact phase of a reduced object.
pub type Phase = Rational;

/// `(1/2n) sum_i (2k_i/h + 2l_i/h) - 1/2` on the reduced part. Univariate
/// objects are reduced by decomposing; other objects must already be reduced.
pub fn phase(m: &GradedMF) -> Result<Phase> {
    let h = m.h() as i64;
    if m.is_univariate() {
        let labels = labels_of(m)?;
        if labels.is_empty() {
            return Err(Error::ZeroObject("phase"));
        }
        let n = labels.len() as i64;
        let total: Rational = labels.iter().map(|lab| lab.phase(m.h())).sum();
        return Ok(total / int(n));
    }
    if m.is_zero_object() {
        return Err(Error::ZeroObject("phase"));
    }
    if !m.is_reduced() {
        return Err(Error::NotUnivariate(
            "phase of a non-reduced multivariable object".into(),
        ));
    }
    let n = m.even().len() as i64;
    let s: i64 = m.even().iter().chain(m.odd()).sum();
    Ok(rat(2 * s, 2 * n * h) - rat(1, 2))
}

/// `Z(m) = sum_i omega^{k_i} - sum_j omega^{l_j}` in `Z[t]/(t^h - 1)`.
pub fn central_charge(m: &GradedMF) -> CyclotomicInt {
    let h = m.h();
    let mut z = CyclotomicInt::zero(h);
    for &k in m.even() {
        z = &z + &CyclotomicInt::omega_pow(k, h);
    }
    for &l in m.odd() {
        z = &z - &CyclotomicInt::omega_pow(l, h);
    }
    z
}

/// `(|Z|, arg Z / pi)` at `omega = exp(2 pi i / h)`.
pub fn mass_phase_float(z: &CyclotomicInt) -> Result<(f64, f64)> {
    if z.is_zero() {
        return Err(Error::ZeroCentralCharge);
    }
    let c: Complex64 = z.to_complex();
    Ok((c.norm(), c.arg() / std::f64::consts::PI))
}

/// All summands share one phase. The zero object counts as semistable.
pub fn is_semistable(m: &GradedMF) -> Result<bool> {
    let h = m.h();
    let labels = labels_of(m)?;
    Ok(labels.windows(2).all(|w| w[0].phase(h) == w[1].phase(h)))
}

#[cfg(test)]
mod tests;
