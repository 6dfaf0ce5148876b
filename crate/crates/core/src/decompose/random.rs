use rand::seq::SliceRandom;
use rand::Rng;

use super::mono;
use crate::algebra::{rat, Poly, PolyMatrix, Rational};
use crate::error::Result;
use crate::mfcore::{
    direct_sum, from_labels, permute_basis, trivial_pair, GradedMF, IndecompLabel, TrivialKind,
};

/// A nonzero rational with small numerator and denominator.
pub fn random_unit<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let n = rng.gen_range(-5i64..=5);
        if n != 0 {
            return rat(n, rng.gen_range(1i64..=3));
        }
    }
}

/// Up to `max_summands` labels with `|i| <= tag_range`, at least one.
pub fn random_labels<R: Rng>(rng: &mut R, h: u32, max_summands: usize, tag_range: i64) -> Vec<IndecompLabel> {
    let n = rng.gen_range(1..=max_summands.max(1));
    (0..n)
        .map(|_| IndecompLabel {
            l: rng.gen_range(1..h as i64),
            i: rng.gen_range(-tag_range..=tag_range),
        })
        .collect()
}

/// Conjugates by `steps` random graded elementary operations on either side
/// and then permutes both bases. Even side: `G = I + c x^{k_a - k_b} e_ab`
/// with `q_pm G^{-1}` and `G q_mp`; odd side: `H = I + c x^{l_a - l_b} e_ab`
/// with `H q_pm` and `q_mp H^{-1}`.
pub fn random_base_change<R: Rng>(m: &GradedMF, rng: &mut R, steps: usize) -> Result<GradedMF> {
    let n = m.even().len();
    let mut pm = m.q_pm().clone();
    let mut mp = m.q_mp().clone();
    if n >= 2 {
        for _ in 0..steps {
            let a = rng.gen_range(0..n);
            let b = (a + rng.gen_range(1..n)) % n;
            let c = random_unit(rng);
            if rng.gen_bool(0.5) {
                let (ka, kb) = (m.even()[a], m.even()[b]);
                if ka < kb {
                    continue;
                }
                let g = mono(c, (ka - kb) as u32);
                // G q_mp: row a += g row b; q_pm G^{-1}: col b -= g col a.
                add_row(&mut mp, a, b, &g, false);
                add_col(&mut pm, b, a, &g, true);
            } else {
                let (la, lb) = (m.odd()[a], m.odd()[b]);
                if la < lb {
                    continue;
                }
                let g = mono(c, (la - lb) as u32);
                add_row(&mut pm, a, b, &g, false);
                add_col(&mut mp, b, a, &g, true);
            }
        }
    }
    let changed = GradedMF::new(m.object().clone(), m.f().clone(), pm, mp)?;
    let mut even_perm: Vec<usize> = (0..n).collect();
    let mut odd_perm: Vec<usize> = (0..m.odd().len()).collect();
    even_perm.shuffle(rng);
    odd_perm.shuffle(rng);
    permute_basis(&changed, &even_perm, &odd_perm)
}

fn add_row(m: &mut PolyMatrix, a: usize, b: usize, g: &Poly, negate: bool) {
    for j in 0..m.cols() {
        let v = &m[(b, j)] * g;
        if v.is_zero() {
            continue;
        }
        m[(a, j)] = if negate { &m[(a, j)] - &v } else { &m[(a, j)] + &v };
    }
}

fn add_col(m: &mut PolyMatrix, a: usize, b: usize, g: &Poly, negate: bool) {
    for i in 0..m.rows() {
        let v = &m[(i, b)] * g;
        if v.is_zero() {
            continue;
        }
        m[(i, a)] = if negate { &m[(i, a)] - &v } else { &m[(i, a)] + &v };
    }
}

/// A random direct sum of indecomposables, optionally with trivial pairs,
/// hidden by a random base change. Returns the object and its true labels.
pub fn random_object<R: Rng>(
    rng: &mut R,
    h: u32,
    max_summands: usize,
    tag_range: i64,
    trivial: usize,
) -> Result<(GradedMF, Vec<IndecompLabel>)> {
    let mut labels = random_labels(rng, h, max_summands, tag_range);
    let mut parts = vec![from_labels(&labels, h)?];
    for _ in 0..trivial {
        let kind = if rng.gen_bool(0.5) {
            TrivialKind::Unit
        } else {
            TrivialKind::FUnit
        };
        parts.push(trivial_pair(kind, rng.gen_range(-tag_range..=tag_range), h)?);
    }
    let sum = direct_sum(parts[0].weights(), parts[0].f(), &parts)?;
    let steps = 4 * sum.even().len();
    let obj = random_base_change(&sum, rng, steps)?;
    labels.sort();
    Ok((obj, labels))
}
