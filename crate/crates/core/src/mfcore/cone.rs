use num::One;

use super::object::{GradedMF, GradedObject};
use crate::algebra::{PolyMatrix, Rational};
use crate::error::{Error, Result};
use crate::homalg::{is_closed, Morphism};

/// Cone of a closed degree-0 morphism `T: a -> b` on `a[1] (+) b`:
///
/// ```text
/// q_pm = [[-a.q_mp, 0], [T_--, b.q_pm]]
/// q_mp = [[-a.q_pm, 0], [T_++, b.q_mp]]
/// ```
///
/// The `a[1]` part carries `-Q_a`; with this sign the Maurer-Cartan equation
/// for the cone is equivalent to `m1(T) = 0`.
pub fn cone(t: &Morphism) -> Result<GradedMF> {
    if t.degree() != 0 {
        return Err(Error::WrongDegree {
            expected: 0,
            found: t.degree(),
        });
    }
    if !is_closed(t)? {
        return Err(Error::NotClosed);
    }
    assemble_cone(t)
}

/// The cone's block matrix without the closedness check.
pub fn assemble_cone(t: &Morphism) -> Result<GradedMF> {
    if t.degree() != 0 {
        return Err(Error::WrongDegree {
            expected: 0,
            found: t.degree(),
        });
    }
    let (a, b) = (t.source(), t.target());
    let h = a.h() as i64;
    let (pa, pb) = (a.even().len(), b.even().len());
    let mat = t.to_matrix();
    let t_pp = mat.block(0, 0, pb, pa);
    let t_mm = mat.block(pb, pa, b.odd().len(), a.odd().len());
    let minus = -Rational::one();
    let q_pm = PolyMatrix::block2(
        &a.q_mp().scale(&minus),
        &PolyMatrix::zeros(pa, pb, 1),
        &t_mm,
        b.q_pm(),
    );
    let q_mp = PolyMatrix::block2(
        &a.q_pm().scale(&minus),
        &PolyMatrix::zeros(a.odd().len(), b.odd().len(), 1),
        &t_pp,
        b.q_mp(),
    );
    let obj = GradedObject {
        even: a.odd().iter().chain(b.even()).copied().collect(),
        odd: a
            .even()
            .iter()
            .map(|k| k + h)
            .chain(b.odd().iter().copied())
            .collect(),
        weights: a.weights().clone(),
    };
    GradedMF::new(obj, a.f().clone(), q_pm, q_mp)
}
