use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::homalg::Morphism;
use crate::mfcore::{
    cone, direct_sum2, from_labels, indecomposable, serre, translate, trivial_pair, verify_mf,
};

fn lab(l: i64, i: i64) -> IndecompLabel {
    IndecompLabel { l, i }
}

#[test]
fn atoms_decompose_to_themselves() {
    let m = indecomposable(3, 1, 4).unwrap();
    let d = decompose(&m).unwrap();
    assert_eq!(d.labels, vec![lab(3, 1)]);
    assert_eq!(d.stripped_trivial, 0);
    assert!(d.verify_certificate(&m).unwrap());
}

#[test]
fn trivial_pairs_vanish() {
    for kind in [TrivialKind::Unit, TrivialKind::FUnit] {
        let d = decompose(&trivial_pair(kind, 2, 4).unwrap()).unwrap();
        assert!(d.labels.is_empty());
        assert_eq!(d.stripped_trivial, 1);
    }
}

#[test]
fn cone_of_identity_is_contractible() {
    for h in 2..=6u32 {
        for l in 1..h as i64 {
            let m = indecomposable(l, 1, h).unwrap();
            let c = cone(&Morphism::identity(&m).unwrap()).unwrap();
            assert!(verify_mf(&c).ok());
            let d = decompose(&c).unwrap();
            assert!(d.labels.is_empty());
            assert_eq!(d.stripped_trivial, 2);
        }
    }
}

#[test]
fn shift_and_serre_on_labels() {
    let h = 5;
    let m = from_labels(&[lab(1, 0), lab(3, 2), lab(2, -1)], h).unwrap();
    let mut expect: Vec<_> = labels_of(&m).unwrap().iter().map(|l| l.shift(h, 1)).collect();
    expect.sort();
    assert_eq!(labels_of(&shift(&m, 1)).unwrap(), expect);
    let mut expect: Vec<_> = labels_of(&m).unwrap().iter().map(|l| l.serre(h)).collect();
    expect.sort();
    assert_eq!(labels_of(&serre(&m)).unwrap(), expect);
    let mut expect: Vec<_> = labels_of(&m).unwrap().iter().map(|l| l.translate(1)).collect();
    expect.sort();
    assert_eq!(labels_of(&translate(&m, 1)).unwrap(), expect);
}

#[test]
fn round_trip_through_base_change() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for h in 2..=6u32 {
        for _ in 0..20 {
            let (obj, labels) = random_object(&mut rng, h, 5, h as i64, 1).unwrap();
            assert!(verify_mf(&obj).ok());
            let d = decompose(&obj).unwrap();
            assert_eq!(d.labels, labels);
            assert_eq!(d.stripped_trivial, 1);
            assert!(d.verify_certificate(&obj).unwrap());
        }
    }
}

#[test]
fn isomorphism_checks() {
    let h = 4;
    let m = indecomposable(1, 2, h).unwrap();
    assert!(is_isomorphic(&shift(&m, 1), &indecomposable(3, 3, h).unwrap()).unwrap());
    assert!(!is_isomorphic(&indecomposable(1, 0, h).unwrap(), &indecomposable(1, 1, h).unwrap()).unwrap());
    let t = trivial_pair(TrivialKind::FUnit, 0, h).unwrap();
    assert!(is_isomorphic(&m, &direct_sum2(&m, &t).unwrap()).unwrap());
}

#[test]
fn counts_match_formula() {
    for h in 2..=7u32 {
        assert_eq!(count_indecomposables_mod2shift(h).unwrap(), ((h - 1) * h) as usize);
    }
}

#[test]
fn ar_quiver_arrows() {
    let q = ar_quiver(4, 1).unwrap();
    assert_eq!(q.vertices.len(), 9);
    assert!(q.all_arrows_valid());
    let q2 = ar_quiver(2, 2).unwrap();
    assert_eq!(q2.arrows().count(), 0);
}

#[test]
fn ar_composite_vanishes_only_at_the_boundary() {
    for h in 3..=7u32 {
        for l in 1..h as i64 - 1 {
            let (comp, closed, nonzero) = ar_composite(l, 0, h).unwrap();
            assert!(closed);
            assert_eq!(nonzero, l >= 2, "h={h} l={l}");
            assert_eq!(comp.to_matrix(), x_id());
        }
    }
}

fn x_id() -> crate::algebra::PolyMatrix {
    let mut m = crate::algebra::PolyMatrix::zeros(2, 2, 1);
    m[(0, 0)] = crate::algebra::Poly::x_pow(1);
    m[(1, 1)] = crate::algebra::Poly::x_pow(1);
    m
}
