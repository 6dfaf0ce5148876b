use num::One;

use super::label::IndecompLabel;
use super::object::{ensure_valid, GradedMF, GradedObject};
use crate::algebra::{Poly, PolyMatrix, Rational, WeightSystem};
use crate::error::{Error, Result};

/// `M_{l,i}`: tags `([i], [l+i])`, `q_pm = [x^l]`, `q_mp = [x^{h-l}]`.
pub fn indecomposable(l: i64, i: i64, h: u32) -> Result<GradedMF> {
    IndecompLabel::new(l, i, h)?;
    let w = WeightSystem::univariate(h)?;
    let q_pm = PolyMatrix::from_rows(vec![vec![Poly::x_pow(l as u32)]], 1)?;
    let q_mp = PolyMatrix::from_rows(vec![vec![Poly::x_pow(h - l as u32)]], 1)?;
    GradedMF::new(
        GradedObject {
            even: vec![i],
            odd: vec![l + i],
            weights: w,
        },
        Poly::x_pow(h),
        q_pm,
        q_mp,
    )
}

pub fn indecomposable_from(label: IndecompLabel, h: u32) -> Result<GradedMF> {
    indecomposable(label.l, label.i, h)
}

/// Direct sum of `M_{l,i}` over the given labels.
pub fn from_labels(labels: &[IndecompLabel], h: u32) -> Result<GradedMF> {
    let ms = labels
        .iter()
        .map(|&lab| indecomposable_from(lab, h))
        .collect::<Result<Vec<_>>>()?;
    direct_sum(&WeightSystem::univariate(h)?, &Poly::x_pow(h), &ms)
}

/// `{2t/h}`: every tag moves by `t`.
pub fn translate(m: &GradedMF, t: i64) -> GradedMF {
    let mut obj = m.object().clone();
    obj.even.iter_mut().for_each(|k| *k += t);
    obj.odd.iter_mut().for_each(|l| *l += t);
    GradedMF::from_parts_unchecked(obj, m.f().clone(), m.q_pm().clone(), m.q_mp().clone())
}

fn shift_once(m: &GradedMF) -> GradedMF {
    let h = m.h() as i64;
    let obj = GradedObject {
        even: m.odd().to_vec(),
        odd: m.even().iter().map(|k| k + h).collect(),
        weights: m.weights().clone(),
    };
    GradedMF::from_parts_unchecked(obj, m.f().clone(), m.q_mp().clone(), m.q_pm().clone())
}

fn unshift_once(m: &GradedMF) -> GradedMF {
    let h = m.h() as i64;
    let obj = GradedObject {
        even: m.odd().iter().map(|l| l - h).collect(),
        odd: m.even().to_vec(),
        weights: m.weights().clone(),
    };
    GradedMF::from_parts_unchecked(obj, m.f().clone(), m.q_mp().clone(), m.q_pm().clone())
}

/// `[s]`. One step sends even tags `k` to odd tags `k + h`, odd tags to even
/// tags, and swaps the two blocks.
pub fn shift(m: &GradedMF, s: i64) -> GradedMF {
    let step = if s >= 0 { shift_once } else { unshift_once };
    (0..s.unsigned_abs()).fold(m.clone(), |acc, _| step(&acc))
}

/// `S = {-2/h} o [1]`.
pub fn serre(m: &GradedMF) -> GradedMF {
    translate(&shift(m, 1), -1)
}

/// Concatenates tags and builds block-diagonal `Q`. The empty sum is the zero
/// object over `(weights, f)`.
pub fn direct_sum(weights: &WeightSystem, f: &Poly, ms: &[GradedMF]) -> Result<GradedMF> {
    if ms.iter().any(|m| m.weights() != weights || m.f() != f) {
        return Err(Error::PotentialMismatch);
    }
    let n = weights.nvars();
    let obj = GradedObject {
        even: ms.iter().flat_map(|m| m.even().iter().copied()).collect(),
        odd: ms.iter().flat_map(|m| m.odd().iter().copied()).collect(),
        weights: weights.clone(),
    };
    let pm: Vec<&PolyMatrix> = ms.iter().map(|m| m.q_pm()).collect();
    let mp: Vec<&PolyMatrix> = ms.iter().map(|m| m.q_mp()).collect();
    GradedMF::new(
        obj,
        f.clone(),
        PolyMatrix::block_diag(&pm, n),
        PolyMatrix::block_diag(&mp, n),
    )
}

/// Sum of two objects over the same potential.
pub fn direct_sum2(a: &GradedMF, b: &GradedMF) -> Result<GradedMF> {
    direct_sum(a.weights(), a.f(), &[a.clone(), b.clone()])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrivialKind {
    /// `q_pm = [1]`, `q_mp = [f]`, tags `([k], [k])`.
    Unit,
    /// `q_pm = [f]`, `q_mp = [1]`, tags `([k], [k + h])`.
    FUnit,
}

/// The contractible rank-one factorizations of `x^h`.
pub fn trivial_pair(kind: TrivialKind, k: i64, h: u32) -> Result<GradedMF> {
    let w = WeightSystem::univariate(h)?;
    let f = Poly::x_pow(h);
    let one = PolyMatrix::identity(1, 1);
    let fm = PolyMatrix::scalar_identity(1, &f);
    let (odd, q_pm, q_mp) = match kind {
        TrivialKind::Unit => (k, one, fm),
        TrivialKind::FUnit => (k + h as i64, fm, one),
    };
    GradedMF::new(
        GradedObject {
            even: vec![k],
            odd: vec![odd],
            weights: w,
        },
        f,
        q_pm,
        q_mp,
    )
}

/// Reorders the basis: new even summand `a` is old even summand
/// `even_perm[a]`, likewise for odd.
pub fn permute_basis(m: &GradedMF, even_perm: &[usize], odd_perm: &[usize]) -> Result<GradedMF> {
    let check = |perm: &[usize], n: usize| {
        let mut seen = vec![false; n];
        perm.len() == n && perm.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true))
    };
    if !check(even_perm, m.even().len()) || !check(odd_perm, m.odd().len()) {
        return Err(Error::Shape("not a permutation".into()));
    }
    let obj = GradedObject {
        even: even_perm.iter().map(|&i| m.even()[i]).collect(),
        odd: odd_perm.iter().map(|&j| m.odd()[j]).collect(),
        weights: m.weights().clone(),
    };
    Ok(GradedMF::from_parts_unchecked(
        obj,
        m.f().clone(),
        m.q_pm().permuted(odd_perm, even_perm),
        m.q_mp().permuted(even_perm, odd_perm),
    ))
}

/// Knörrer doubling to `f + yz` with `y`, `z` of weights `wt_y`, `wt_z`
/// (`wt_y + wt_z = h`):
///
/// ```text
/// q_pm' = [[q_pm,  y],     q_mp' = [[q_mp, -y],
///          [-z,  q_mp]]             [z,   q_pm]]
/// ```
///
/// with even tags `(k, l - wt_y)` and odd tags `(l, k + wt_z)`.
pub fn knorrer_double(m: &GradedMF, wt_y: u32, wt_z: u32) -> Result<GradedMF> {
    if wt_y == 0 || wt_z == 0 {
        return Err(Error::Knorrer("weights of y and z must be positive".into()));
    }
    if wt_y + wt_z != m.h() {
        return Err(Error::Knorrer(format!(
            "wt_y + wt_z = {} but h = {}",
            wt_y + wt_z,
            m.h()
        )));
    }
    let (p, r) = (m.even().len(), m.odd().len());
    if p != r {
        return Err(Error::Knorrer("input is not square".into()));
    }
    let n = m.nvars();
    let weights = m.weights().extended(&[wt_y, wt_z])?;
    let nn = n + 2;
    let y = Poly::var(n, nn);
    let z = Poly::var(n + 1, nn);
    let f = &m.f().extend_vars(2) + &(&y * &z);
    let pm = m.q_pm().extend_vars(2);
    let mp = m.q_mp().extend_vars(2);
    let y_id = PolyMatrix::scalar_identity(p, &y);
    let z_id = PolyMatrix::scalar_identity(p, &z);
    let minus = -Rational::one();
    let q_pm = PolyMatrix::block2(&pm, &y_id, &z_id.scale(&minus), &mp);
    let q_mp = PolyMatrix::block2(&mp, &y_id.scale(&minus), &z_id, &pm);
    let (wy, wz) = (wt_y as i64, wt_z as i64);
    let obj = GradedObject {
        even: m
            .even()
            .iter()
            .copied()
            .chain(m.odd().iter().map(|l| l - wy))
            .collect(),
        odd: m
            .odd()
            .iter()
            .copied()
            .chain(m.even().iter().map(|k| k + wz))
            .collect(),
        weights,
    };
    ensure_valid(GradedMF::new(obj, f, q_pm, q_mp)?)
        .map_err(|e| Error::Knorrer(e.to_string()))
}
