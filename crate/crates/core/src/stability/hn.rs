use std::collections::BTreeMap;

use super::{is_semistable, Phase};
use crate::algebra::PolyMatrix;
use crate::decompose::{decompose, is_isomorphic};
use crate::error::{Error, Result};
use crate::homalg::Morphism;
use crate::mfcore::{cone, from_labels, GradedMF, IndecompLabel};

#[derive(Clone, Debug)]
pub struct HNStep {
    pub phase: Phase,
    pub labels: Vec<IndecompLabel>,
    /// `N_j`
    pub piece: GradedMF,
    /// `M_j`
    pub total: GradedMF,
    /// The split inclusion `M_{j-1} -> M_j`.
    pub inclusion: Morphism,
    pub piece_semistable: bool,
    /// `cone(M_{j-1} -> M_j) = N_j`
    pub cone_matches: bool,
}

#[derive(Clone, Debug)]
pub struct HNFiltration {
    pub h: u32,
    pub steps: Vec<HNStep>,
    pub certificate_ok: bool,
    /// `M_n` is isomorphic to the input.
    pub reassembly_ok: bool,
}

impl HNFiltration {
    pub fn phases(&self) -> Vec<Phase> {
        self.steps.iter().map(|s| s.phase.clone()).collect()
    }

    pub fn phases_decreasing(&self) -> bool {
        self.steps.windows(2).all(|w| w[0].phase > w[1].phase)
    }

    pub fn verify(&self) -> bool {
        self.phases_decreasing()
            && self.certificate_ok
            && self.reassembly_ok
            && self.steps.iter().all(|s| s.piece_semistable && s.cone_matches)
    }
}

/// `[[I], [0]]`-blocks from `prev` into `next`, where `next` lists the
/// summands of `prev` first.
fn split_inclusion(prev: &GradedMF, next: &GradedMF) -> Result<Morphism> {
    let (p0, r0) = (prev.even().len(), prev.odd().len());
    let p1 = next.even().len();
    let mut mat = PolyMatrix::zeros(next.dim(), prev.dim(), 1);
    for t in 0..p0 {
        mat[(t, t)] = crate::algebra::Poly::one(1);
    }
    for t in 0..r0 {
        mat[(p1 + t, p0 + t)] = crate::algebra::Poly::one(1);
    }
    Morphism::from_matrix(prev, next, 0, &mat)
}

/// Groups the summands by phase, highest first; `M_j` is the sum of the
/// first `j` groups and each triangle `M_{j-1} -> M_j -> N_j` is realized
/// by the cone of the split inclusion.
pub fn hn_filtration(m: &GradedMF) -> Result<HNFiltration> {
    let h = m.h();
    let dec = decompose(m)?;
    if dec.labels.is_empty() {
        return Err(Error::ZeroObject("Harder-Narasimhan filtration"));
    }
    let certificate_ok = dec.verify_certificate(m)?;
    let mut groups: BTreeMap<Phase, Vec<IndecompLabel>> = BTreeMap::new();
    for lab in &dec.labels {
        groups.entry(lab.phase(h)).or_default().push(*lab);
    }
    let mut steps = Vec::new();
    let mut acc: Vec<IndecompLabel> = Vec::new();
    let mut prev = from_labels(&[], h)?;
    for (phase, labels) in groups.into_iter().rev() {
        acc.extend(&labels);
        let total = from_labels(&acc, h)?;
        let piece = from_labels(&labels, h)?;
        let inclusion = split_inclusion(&prev, &total)?;
        let c = cone(&inclusion)?;
        steps.push(HNStep {
            phase,
            piece_semistable: is_semistable(&piece)?,
            cone_matches: is_isomorphic(&c, &piece)?,
            labels,
            piece,
            total: total.clone(),
            inclusion,
        });
        prev = total;
    }
    Ok(HNFiltration {
        h,
        reassembly_ok: is_isomorphic(&prev, m)?,
        certificate_ok,
        steps,
    })
}
