use mfcat::algebra::{int, sign_pow, Poly};
use mfcat::decompose::{labels_of, random_object};
use mfcat::homalg::{check_cdg_identities, hom, is_closed, m1, m2, CdgElement, Morphism};
use mfcat::mfcore::{
    assemble_cone, direct_sum2, indecomposable, serre, shift, translate, verify_mf, GradedMF,
    IndecompLabel,
};
use mfcat::quiverlat::{euler_matrix, k0_class, EulerSource};
use mfcat::stability::central_charge;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn object(rng: &mut ChaCha8Rng, h: u32) -> GradedMF {
    let trivial = rng.gen_range(0..2);
    random_object(rng, h, 3, 2, trivial).unwrap().0
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn m1_squares_to_zero(seed in any::<u64>(), h in 2u32..=6, q in -3i64..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (object(&mut rng, h), object(&mut rng, h));
        let phi = Morphism::random(&a, &b, q, &mut rng).unwrap();
        prop_assert!(m1(&m1(&phi).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn leibniz(seed in any::<u64>(), h in 2u32..=6, p in -3i64..=3, q in -3i64..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (object(&mut rng, h), object(&mut rng, h), object(&mut rng, h));
        let phi = Morphism::random(&a, &b, p, &mut rng).unwrap();
        let psi = Morphism::random(&b, &c, q, &mut rng).unwrap();
        let lhs = m1(&m2(&psi, &phi).unwrap()).unwrap();
        let rhs = m2(&m1(&psi).unwrap(), &phi)
            .unwrap()
            .scale(&sign_pow(p))
            .add(&m2(&psi, &m1(&phi).unwrap()).unwrap().scale(&-int(1)))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn m2_associative_up_to_sign(seed in any::<u64>(), h in 2u32..=5, degs in prop::array::uniform3(-2i64..=2)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let objs: Vec<GradedMF> = (0..4).map(|_| object(&mut rng, h)).collect();
        let x = Morphism::random(&objs[0], &objs[1], degs[0], &mut rng).unwrap();
        let y = Morphism::random(&objs[1], &objs[2], degs[1], &mut rng).unwrap();
        let z = Morphism::random(&objs[2], &objs[3], degs[2], &mut rng).unwrap();
        let left = m2(&m2(&z, &y).unwrap(), &x).unwrap();
        let right = m2(&z, &m2(&y, &x).unwrap()).unwrap().scale(&sign_pow(degs[0]));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn functor_relations(seed in any::<u64>(), h in 2u32..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = object(&mut rng, h);
        prop_assert_eq!(translate(&m, h as i64), shift(&m, 2));
        prop_assert_eq!(shift(&shift(&m, 1), 1), translate(&m, h as i64));
        prop_assert_eq!(shift(&shift(&m, 1), -1), m.clone());
        prop_assert_eq!(translate(&translate(&m, 3), -5), translate(&m, -2));
        prop_assert!(verify_mf(&serre(&m)).ok());
        let mut s = m.clone();
        for _ in 0..h {
            s = serre(&s);
        }
        prop_assert_eq!(labels_of(&s).unwrap(), labels_of(&shift(&m, h as i64 - 2)).unwrap());
    }

    #[test]
    fn labels_follow_functors(seed in any::<u64>(), h in 2u32..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (m, labels) = random_object(&mut rng, h, 4, 3, 1).unwrap();
        prop_assert_eq!(labels_of(&m).unwrap(), labels.clone());
        let mut t: Vec<IndecompLabel> = labels.iter().map(|l| l.translate(1)).collect();
        t.sort();
        prop_assert_eq!(labels_of(&translate(&m, 1)).unwrap(), t);
        let mut s: Vec<IndecompLabel> = labels.iter().map(|l| l.shift(h, 1)).collect();
        s.sort();
        prop_assert_eq!(labels_of(&shift(&m, 1)).unwrap(), s);
    }

    #[test]
    fn hom_invariant_under_autoequivalences(seed in any::<u64>(), h in 2u32..=5, q in -2i64..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (object(&mut rng, h), object(&mut rng, h));
        let d = hom(&a, &b, q).unwrap().dim;
        prop_assert_eq!(hom(&translate(&a, 1), &translate(&b, 1), q).unwrap().dim, d);
        prop_assert_eq!(hom(&shift(&a, 1), &shift(&b, 1), q).unwrap().dim, d);
        prop_assert_eq!(hom(&shift(&a, -1), &shift(&b, -1), q).unwrap().dim, d);
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn cone_factorizes_iff_closed(seed in any::<u64>(), h in 2u32..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (object(&mut rng, h), object(&mut rng, h));
        let t = if rng.gen_bool(0.5) {
            Morphism::random(&a, &b, 0, &mut rng).unwrap()
        } else {
            let reps = hom(&a, &b, 0).unwrap().representatives;
            let mut t = Morphism::zero(&a, &b, 0).unwrap();
            for r in &reps {
                t = t.add(&r.scale(&int(rng.gen_range(-3i64..=3)))).unwrap();
            }
            t
        };
        let c = assemble_cone(&t).unwrap();
        prop_assert_eq!(verify_mf(&c).ok(), is_closed(&t).unwrap());
        if is_closed(&t).unwrap() {
            prop_assert_eq!(central_charge(&c), &central_charge(&b) - &central_charge(&a));
        }
    }

    #[test]
    fn central_charge_additive(seed in any::<u64>(), h in 2u32..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (object(&mut rng, h), object(&mut rng, h));
        let s = direct_sum2(&a, &b).unwrap();
        prop_assert_eq!(central_charge(&s), &central_charge(&a) + &central_charge(&b));
        prop_assert_eq!(central_charge(&shift(&a, 1)), -&central_charge(&a));
    }

    #[test]
    fn k0_classes_respect_shift_and_serre(seed in any::<u64>(), h in 2u32..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = euler_matrix(h, EulerSource::Mf).unwrap();
        let m = object(&mut rng, h);
        let v = k0_class(&m, &e).unwrap();
        let neg: Vec<i64> = v.iter().map(|x| -x).collect();
        prop_assert_eq!(k0_class(&shift(&m, 1), &e).unwrap(), neg);
        let s = e.serre_on_k0();
        let sv: Vec<i64> = s.iter().map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum()).collect();
        prop_assert_eq!(k0_class(&serre(&m), &e).unwrap(), sv);
    }

    #[test]
    fn cdg_identities(h in 2u32..=6, dx in -2i64..=2, dy in -2i64..=2, dz in -2i64..=2,
                      ex in 0u32..4, ey in 0u32..4, ez in 0u32..4, c in -5i64..=5) {
        let f = Poly::x_pow(h);
        let el = |e: u32, d: i64| CdgElement {
            value: Poly::univariate_monomial(int(c), e),
            degree: d,
        };
        prop_assert_eq!(check_cdg_identities(&f, &el(ex, dx), &el(ey, dy), &el(ez, dz)), [true; 4]);
    }
}

#[test]
fn indecomposables_verify() {
    for h in 2..=10u32 {
        for l in 1..h as i64 {
            for i in -3..=3 {
                assert!(verify_mf(&indecomposable(l, i, h).unwrap()).ok());
            }
        }
    }
}
