use crate::algebra::{Poly, PolyMatrix};
use crate::error::Result;
use crate::homalg::{is_closed, is_nonzero_class, m2, Morphism};
use crate::mfcore::{indecomposable, IndecompLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowKind {
    /// `diag(1, x): M_{l,i} -> M_{l+1,i}`
    Right,
    /// `diag(x, 1): M_{l,i} -> M_{l-1,i+1}`
    Left,
}

#[derive(Clone, Debug)]
pub struct ARArrow {
    pub kind: ArrowKind,
    pub from: IndecompLabel,
    pub to: IndecompLabel,
    pub morphism: Morphism,
    pub closed: bool,
    pub nonzero: bool,
}

#[derive(Clone, Debug)]
pub struct ARQuiver {
    pub h: u32,
    pub vertices: Vec<IndecompLabel>,
    pub right_arrows: Vec<ARArrow>,
    pub left_arrows: Vec<ARArrow>,
}

impl ARQuiver {
    pub fn arrows(&self) -> impl Iterator<Item = &ARArrow> {
        self.right_arrows.iter().chain(&self.left_arrows)
    }

    pub fn all_arrows_valid(&self) -> bool {
        self.arrows().all(|a| a.closed && a.nonzero)
    }
}

fn diag2(a: u32, b: u32) -> PolyMatrix {
    let mut m = PolyMatrix::zeros(2, 2, 1);
    m[(0, 0)] = Poly::x_pow(a);
    m[(1, 1)] = Poly::x_pow(b);
    m
}

fn arrow(kind: ArrowKind, from: IndecompLabel, h: u32) -> Result<ARArrow> {
    let (to, mat) = match kind {
        ArrowKind::Right => (IndecompLabel { l: from.l + 1, i: from.i }, diag2(0, 1)),
        ArrowKind::Left => (IndecompLabel { l: from.l - 1, i: from.i + 1 }, diag2(1, 0)),
    };
    let src = indecomposable(from.l, from.i, h)?;
    let tgt = indecomposable(to.l, to.i, h)?;
    let morphism = Morphism::from_matrix(&src, &tgt, 0, &mat)?;
    Ok(ARArrow {
        kind,
        from,
        to,
        closed: is_closed(&morphism)?,
        nonzero: is_nonzero_class(&morphism)?,
        morphism,
    })
}

/// Vertices `M_{l,i}` with `|i| <= i_window` and the irreducible maps between
/// them, each checked to be closed and not null-homotopic.
pub fn ar_quiver(h: u32, i_window: i64) -> Result<ARQuiver> {
    let hh = h as i64;
    let mut vertices = Vec::new();
    let mut right_arrows = Vec::new();
    let mut left_arrows = Vec::new();
    for i in -i_window..=i_window {
        for l in 1..hh {
            let v = IndecompLabel { l, i };
            vertices.push(v);
            if l + 1 < hh {
                right_arrows.push(arrow(ArrowKind::Right, v, h)?);
            }
            if l >= 2 && i < i_window {
                left_arrows.push(arrow(ArrowKind::Left, v, h)?);
            }
        }
    }
    Ok(ARQuiver {
        h,
        vertices,
        right_arrows,
        left_arrows,
    })
}

/// The composite `diag(x,1) o diag(1,x): M_{l,i} -> M_{l,i+1}` together with
/// whether it is closed and whether its class is nonzero.
pub fn ar_composite(l: i64, i: i64, h: u32) -> Result<(Morphism, bool, bool)> {
    let from = IndecompLabel { l, i };
    let right = arrow(ArrowKind::Right, from, h)?;
    let left = arrow(ArrowKind::Left, right.to, h)?;
    let comp = m2(&left.morphism, &right.morphism)?;
    let closed = is_closed(&comp)?;
    let nonzero = is_nonzero_class(&comp)?;
    Ok((comp, closed, nonzero))
}
