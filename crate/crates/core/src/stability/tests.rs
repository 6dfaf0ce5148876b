use super::*;
use crate::algebra::rat;
use crate::mfcore::{cone, direct_sum2, from_labels, indecomposable, shift, trivial_pair, IndecompLabel, TrivialKind};
use crate::homalg::Morphism;

fn lab(l: i64, i: i64) -> IndecompLabel {
    IndecompLabel { l, i }
}

#[test]
fn phases() {
    assert_eq!(phase(&indecomposable(2, 1, 5).unwrap()).unwrap(), rat(3, 10));
    let m = indecomposable(1, 0, 4).unwrap();
    let t = trivial_pair(TrivialKind::Unit, 3, 4).unwrap();
    assert_eq!(phase(&direct_sum2(&m, &t).unwrap()).unwrap(), rat(-1, 4));
    assert_eq!(phase(&shift(&m, 1)).unwrap(), rat(3, 4));
    assert!(phase(&t).is_err());
}

#[test]
fn central_charges() {
    let m = indecomposable(1, 0, 4).unwrap();
    assert_eq!(central_charge(&m).coeffs(), &[1, -1, 0, 0]);
    assert!(central_charge(&trivial_pair(TrivialKind::FUnit, 0, 4).unwrap()).is_zero());
    let z = central_charge(&m);
    assert_eq!(central_charge(&shift(&m, 1)), -&z);
    let (mass, ph) = mass_phase_float(&z).unwrap();
    assert!((mass - 2f64.sqrt()).abs() < 1e-12);
    assert!((ph + 0.25).abs() < 1e-12);
    let (mass, ph) = mass_phase_float(&central_charge(&indecomposable(3, 0, 6).unwrap())).unwrap();
    assert!((mass - 2.0).abs() < 1e-12 && ph.abs() < 1e-12);
}

#[test]
fn cone_charge_is_difference() {
    let h = 5;
    let a = indecomposable(1, 0, h).unwrap();
    let b = indecomposable(2, 0, h).unwrap();
    let t = crate::homalg::hom(&a, &b, 0).unwrap().representatives[0].clone();
    let c = cone(&t).unwrap();
    assert_eq!(central_charge(&c), &central_charge(&b) - &central_charge(&a));
    let z = Morphism::zero(&a, &b, 0).unwrap();
    assert_eq!(central_charge(&cone(&z).unwrap()), &central_charge(&b) - &central_charge(&a));
}

#[test]
fn semistability() {
    assert!(is_semistable(&indecomposable(2, 3, 5).unwrap()).unwrap());
    assert!(!is_semistable(&from_labels(&[lab(1, 0), lab(3, 0)], 4).unwrap()).unwrap());
    assert!(is_semistable(&from_labels(&[lab(2, 0), lab(4, -1)], 6).unwrap()).unwrap());
}

#[test]
fn hn_of_two_phases() {
    let m = from_labels(&[lab(1, 0), lab(3, 0)], 4).unwrap();
    let f = hn_filtration(&m).unwrap();
    assert!(f.verify());
    assert_eq!(f.phases(), vec![rat(1, 4), rat(-1, 4)]);
    assert_eq!(f.steps[0].labels, vec![lab(3, 0)]);
    assert_eq!(f.steps[1].labels, vec![lab(1, 0)]);
    let single = hn_filtration(&indecomposable(2, 1, 5).unwrap()).unwrap();
    assert_eq!(single.steps.len(), 1);
    assert!(single.verify());
}

#[test]
fn bridgeland_small() {
    let mut cfg = BridgelandConfig::new(4, 1);
    cfg.corpus = 20;
    let rep = check_bridgeland(&cfg).unwrap();
    assert!(rep.ok(), "{rep:?}");
}
