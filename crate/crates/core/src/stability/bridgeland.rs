use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{central_charge, hn_filtration, mass_phase_float, phase};
use crate::algebra::{int, to_f64};
use crate::decompose::random_object;
use crate::error::Result;
use crate::homalg::hom;
use crate::mfcore::{indecomposable, shift, IndecompLabel};

#[derive(Clone, Debug, Default)]
pub struct AxiomResult {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl AxiomResult {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, pass: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !pass {
            self.failures.push(what());
        }
    }
}

#[derive(Clone, Debug)]
pub struct BridgelandConfig {
    pub h: u32,
    pub i_window: i64,
    pub seed: u64,
    pub corpus: usize,
    pub max_summands: usize,
}

impl BridgelandConfig {
    pub fn new(h: u32, i_window: i64) -> Self {
        BridgelandConfig {
            h,
            i_window,
            seed: 0,
            corpus: 200,
            max_summands: 6,
        }
    }
}

#[derive(Clone, Debug)]
pub struct BridgelandReport {
    pub config: BridgelandConfig,
    /// `Z = m(M) exp(i pi phi)` with `m(M) >= 0`.
    pub polar_form: AxiomResult,
    /// `P(phi + 1) = P(phi)[1]`.
    pub shift_phase: AxiomResult,
    /// `Hom(M_1, M_2) = 0` when `phi_1 > phi_2`.
    pub hom_vanishing: AxiomResult,
    /// Harder-Narasimhan filtrations exist and check out.
    pub hn_filtrations: AxiomResult,
}

impl BridgelandReport {
    pub fn ok(&self) -> bool {
        self.polar_form.ok()
            && self.shift_phase.ok()
            && self.hom_vanishing.ok()
            && self.hn_filtrations.ok()
    }
}

const POLAR_TOL: f64 = 1e-10;
const MASS_TOL: f64 = 1e-12;

fn window_labels(h: u32, w: i64) -> Vec<IndecompLabel> {
    (-w..=w)
        .flat_map(|i| (1..h as i64).map(move |l| IndecompLabel { l, i }))
        .collect()
}

/// For every `M_{l,i}` with `|i| <= i_window`: `|Z| = 2 sin(l pi / h)` and
/// `arg Z / pi` agrees with the exact phase mod 2, both within `1e-10`.
pub fn polar_form_check(h: u32, i_window: i64) -> Result<AxiomResult> {
    let mut res = AxiomResult::default();
    for lab in window_labels(h, i_window) {
        let m = indecomposable(lab.l, lab.i, h)?;
        let z = central_charge(&m);
        let (mass, ph) = mass_phase_float(&z)?;
        let exact = to_f64(&phase(&m)?);
        let expected_mass = 2.0 * (lab.l as f64 * std::f64::consts::PI / h as f64).sin();
        let diff = (ph - exact).rem_euclid(2.0);
        let phase_err = diff.min(2.0 - diff);
        res.record(
            (mass - expected_mass).abs() < POLAR_TOL && mass >= -MASS_TOL && phase_err < POLAR_TOL,
            || format!("{lab}: mass {mass} vs {expected_mass}, phase {ph} vs {exact}"),
        );
    }
    Ok(res)
}

pub fn check_bridgeland(cfg: &BridgelandConfig) -> Result<BridgelandReport> {
    let h = cfg.h;
    let labels = window_labels(h, cfg.i_window);
    let polar_form = polar_form_check(h, cfg.i_window)?;

    let mut shift_phase = AxiomResult::default();
    for lab in &labels {
        let m = indecomposable(lab.l, lab.i, h)?;
        let p = phase(&m)?;
        let p1 = phase(&shift(&m, 1))?;
        shift_phase.record(p1 == &p + int(1), || format!("{lab}: {p} then {p1}"));
    }

    let mut hom_vanishing = AxiomResult::default();
    let objs: Vec<_> = labels
        .iter()
        .map(|lab| indecomposable(lab.l, lab.i, h).map(|m| (*lab, lab.phase(h), m)))
        .collect::<Result<_>>()?;
    for (la, pa, a) in &objs {
        for (lb, pb, b) in &objs {
            if pa > pb {
                let d = hom(a, b, 0)?.dim;
                hom_vanishing.record(d == 0, || format!("Hom({la}, {lb}) = {d}"));
            }
        }
    }

    let mut hn_filtrations = AxiomResult::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ ((h as u64) << 32));
    let mut n = 0;
    while n < cfg.corpus {
        let trivial = n % 3;
        let (obj, expected) = random_object(&mut rng, h, cfg.max_summands, h as i64, trivial)?;
        let f = hn_filtration(&obj)?;
        let mut got: Vec<IndecompLabel> = f.steps.iter().flat_map(|s| s.labels.clone()).collect();
        got.sort();
        hn_filtrations.record(f.verify() && got == expected, || {
            format!("object {n}: phases {:?}", f.phases())
        });
        n += 1;
    }

    Ok(BridgelandReport {
        config: cfg.clone(),
        polar_form,
        shift_phase,
        hom_vanishing,
        hn_filtrations,
    })
}
