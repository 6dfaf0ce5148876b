use super::lattice::{euler_matrix, projectives, EulerData, EulerSource, IntMatrix};
use super::rep::{interval_hom_dim, IntervalModule};
use crate::decompose::count_indecomposables_mod2shift;
use crate::error::Result;
use crate::homalg::{euler_window, hom, hom_dims_range};
use crate::mfcore::indecomposable;

/// Number of indecomposables of the derived category up to `[2]`: every
/// indecomposable is `X[m]` for an interval `X`, and `[2]` leaves two shift
/// classes. Intervals are confirmed indecomposable by `End = k`.
pub fn derived_indec_count_mod2(h: u32) -> usize {
    let n = h as usize - 1;
    let indec = IntervalModule::all(n)
        .into_iter()
        .filter(|&x| interval_hom_dim(x, x, 0, n) == 1)
        .count();
    2 * indec
}

#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    pub h: u32,
    pub identification: Vec<(i64, IntervalModule)>,
    pub mf_hom_table: IntMatrix,
    pub quiver_hom_table: IntMatrix,
    /// (a) Hom tables agree.
    pub hom_tables_match: bool,
    /// (b) no Hom in nonzero shift degrees / no Ext^1 among projectives.
    pub mf_higher_vanish: bool,
    pub quiver_higher_vanish: bool,
    /// (c) indecomposable counts modulo `[2]`.
    pub mf_count: usize,
    pub quiver_count: usize,
    /// (d) Euler matrices agree.
    pub mf_euler: EulerData,
    pub quiver_euler: EulerData,
}

impl EquivalenceReport {
    pub fn counts_match(&self) -> bool {
        self.mf_count == self.quiver_count
    }

    pub fn euler_match(&self) -> bool {
        self.mf_euler.a == self.quiver_euler.a
    }

    pub fn ok(&self) -> bool {
        self.hom_tables_match
            && self.mf_higher_vanish
            && self.quiver_higher_vanish
            && self.counts_match()
            && self.euler_match()
    }
}

pub fn equivalence_report(h: u32) -> Result<EquivalenceReport> {
    equivalence_report_perturbed(h, None)
}

/// As [`equivalence_report`], flipping one entry of the MF Hom table first;
/// used as a negative control.
pub fn equivalence_report_perturbed(h: u32, perturb: Option<(usize, usize)>) -> Result<EquivalenceReport> {
    let n = h as usize - 1;
    let objs = (1..h as i64)
        .map(|k| indecomposable(k, 0, h))
        .collect::<Result<Vec<_>>>()?;
    let mut mf_hom_table: IntMatrix = objs
        .iter()
        .map(|x| objs.iter().map(|y| hom(x, y, 0).map(|r| r.dim as i64)).collect())
        .collect::<Result<_>>()?;
    if let Some((i, j)) = perturb {
        mf_hom_table[i][j] = 1 - mf_hom_table[i][j];
    }
    let mut mf_higher_vanish = true;
    for x in &objs {
        for y in &objs {
            let w = euler_window(x, y);
            let dims = hom_dims_range(x, y, -w, w)?;
            mf_higher_vanish &= dims
                .iter()
                .enumerate()
                .all(|(t, &d)| t as i64 - w == 0 || d == 0);
        }
    }
    let ps = projectives(n);
    let quiver_hom_table: IntMatrix = ps
        .iter()
        .map(|&x| ps.iter().map(|&y| interval_hom_dim(x, y, 0, n) as i64).collect())
        .collect();
    let quiver_higher_vanish = ps
        .iter()
        .all(|&x| ps.iter().all(|&y| interval_hom_dim(x, y, 1, n) == 0));
    Ok(EquivalenceReport {
        h,
        identification: (1..h as i64).zip(ps.iter().copied()).collect(),
        hom_tables_match: mf_hom_table == quiver_hom_table,
        mf_hom_table,
        quiver_hom_table,
        mf_higher_vanish,
        quiver_higher_vanish,
        mf_count: count_indecomposables_mod2shift(h)?,
        quiver_count: derived_indec_count_mod2(h),
        mf_euler: euler_matrix(h, EulerSource::Mf)?,
        quiver_euler: euler_matrix(h, EulerSource::Quiver)?,
    })
}
