//! The curved structure on the one-object category of `f`: `m0(1) = f`,
//! `m1 = 0`, and `m2` on homogeneous elements of the shifted copies.

use crate::algebra::{sign_pow, Poly};

/// A homogeneous element `value` of parity `degree`, viewed in the
/// additive enlargement where odd degrees come from the shifted object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdgElement {
    pub value: Poly,
    pub degree: i64,
}

impl CdgElement {
    fn sub(&self, other: &CdgElement) -> CdgElement {
        CdgElement {
            value: &self.value - &other.value,
            degree: self.degree,
        }
    }

    fn signed(&self, e: i64) -> CdgElement {
        CdgElement {
            value: self.value.scale(&sign_pow(e)),
            degree: self.degree,
        }
    }
}

pub fn cdg_m0(f: &Poly) -> CdgElement {
    CdgElement {
        value: f.clone(),
        degree: 2,
    }
}

pub fn cdg_m1(x: &CdgElement) -> CdgElement {
    CdgElement {
        value: Poly::zero(x.value.nvars()),
        degree: x.degree + 1,
    }
}

/// `m2(x (x) y) = (-1)^{|y|} x y`, so that `x . y := (-1)^{|y|} m2(x (x) y)`
/// is the ordinary product.
pub fn cdg_m2(x: &CdgElement, y: &CdgElement) -> CdgElement {
    CdgElement {
        value: (&x.value * &y.value).scale(&sign_pow(y.degree)),
        degree: x.degree + y.degree,
    }
}

/// The four identities with `m_{n >= 3} = 0`, in order:
/// `m1 m0 = 0`, `m1 m1 x = (-1)^{|x|} m2(m0, x) - m2(x, m0)`,
/// `m1 m2(x, y) = (-1)^{|y|} m2(m1 x, y) - m2(x, m1 y)` and
/// `m2(m2(x, y), z) = (-1)^{|z|} m2(x, m2(y, z))`.
pub fn check_cdg_identities(f: &Poly, x: &CdgElement, y: &CdgElement, z: &CdgElement) -> [bool; 4] {
    let m0 = cdg_m0(f);
    let first = cdg_m1(&m0).value.is_zero();
    let second = {
        let rhs = cdg_m2(&m0, x).signed(x.degree).sub(&cdg_m2(x, &m0));
        cdg_m1(&cdg_m1(x)).value == rhs.value
    };
    let third = {
        let rhs = cdg_m2(&cdg_m1(x), y)
            .signed(y.degree)
            .sub(&cdg_m2(x, &cdg_m1(y)));
        cdg_m1(&cdg_m2(x, y)).value == rhs.value
    };
    let fourth = cdg_m2(&cdg_m2(x, y), z).value == cdg_m2(x, &cdg_m2(y, z)).signed(z.degree).value;
    [first, second, third, fourth]
}
