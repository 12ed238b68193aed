mod common;

use gof_core::atlas::{self, SlopeWindow};
use gof_core::baker::{classify, closed_form_trace, family_matrix, knot_from_braid, GofKnot, KnotParams, Label, LoFamily};
use gof_core::braid3::{self, BraidWord, Generator, Syllable};
use gof_core::lens::{cf_eval, homeomorphic, normalize};
use gof_core::mat2::{conjugate_gl2, conjugate_sl2, rl_class, Matrix2};
use gof_core::verdict::{self, Status};
use num_integer::Integer;
use proptest::prelude::*;

fn braid_words() -> impl Strategy<Value = BraidWord> {
    let syllable = (any::<bool>(), prop_oneof![-4i64..=-1, 1i64..=4])
        .prop_map(|(first, e)| Syllable::new(if first { Generator::S1 } else { Generator::S2 }, e));
    prop::collection::vec(syllable, 0..=12).prop_map(BraidWord::new)
}

fn knots() -> impl Strategy<Value = GofKnot> {
    prop_oneof![
        (1i64..=60).prop_filter("B at 4 is A", |a| *a != 4).prop_flat_map(|a| {
            prop::sample::select(vec![Label::B1, Label::B2]).prop_map(move |l| GofKnot::build(l, KnotParams::Alpha(a)).unwrap())
        }),
        (2i64..=15, 2i64..=15).prop_map(|(p, q)| GofKnot::build(Label::D1, KnotParams::PQ { p, q }).unwrap()),
        (1i64..=15, 1i64..=15).prop_map(|(p, q)| GofKnot::build(Label::D2, KnotParams::PQ { p, q }).unwrap()),
        prop::sample::select(vec![Label::A1, Label::A2, Label::A3, Label::C])
            .prop_map(|l| GofKnot::build(l, KnotParams::None).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn gl2_conjugates_are_detected(a in common::sl2_element(10), p in common::gl2_word(10)) {
        let b = a.conjugate_by(&p).unwrap();
        prop_assert!(conjugate_gl2(&a, &b).unwrap());
        prop_assert_eq!(a.trace().unwrap(), b.trace().unwrap());
        prop_assert_eq!(b.det().unwrap(), 1);
    }

    #[test]
    fn sl2_conjugates_are_detected(a in common::sl2_element(10), p in common::sl2_word(10)) {
        prop_assert!(conjugate_sl2(&a, &a.conjugate_by(&p).unwrap()).unwrap());
    }

    #[test]
    fn rl_class_reconstructs_a_conjugate(a in common::sl2_element(12)) {
        prop_assume!(a.trace().unwrap().abs() > 2);
        let class = rl_class(&a).unwrap();
        let rep = class.representative().unwrap();
        prop_assert!(conjugate_sl2(&a, &rep).unwrap());
        prop_assert_eq!(rl_class(&rep).unwrap(), class);
    }

    #[test]
    fn conjugacy_is_an_equivalence(
        x in prop::sample::select(common::small_sl2(3)),
        y in prop::sample::select(common::small_sl2(3)),
        z in prop::sample::select(common::small_sl2(3)),
    ) {
        for decide in [conjugate_sl2, conjugate_gl2] {
            prop_assert!(decide(&x, &x).unwrap());
            prop_assert_eq!(decide(&x, &y).unwrap(), decide(&y, &x).unwrap());
            if decide(&x, &y).unwrap() && decide(&y, &z).unwrap() {
                prop_assert!(decide(&x, &z).unwrap());
            }
        }
    }

    #[test]
    fn braid_laws(u in braid_words(), v in braid_words()) {
        let mu = u.monodromy().unwrap();
        prop_assert_eq!(u.concat(&v).monodromy().unwrap(), mu.checked_mul(&v.monodromy().unwrap()).unwrap());
        prop_assert_eq!(u.concat(&u.invert()).monodromy().unwrap(), Matrix2::IDENTITY);
        prop_assert_eq!(u.invert().invert(), u.clone());
        let reduced = u.free_reduce().unwrap();
        prop_assert_eq!(reduced.free_reduce().unwrap(), reduced.clone());
        prop_assert_eq!(reduced.exponent_sum(), u.exponent_sum());
        prop_assert_eq!(reduced.monodromy().unwrap(), mu);
        prop_assert_eq!(mu.det().unwrap(), 1);
    }

    #[test]
    fn braid_text_round_trip(u in braid_words()) {
        let text = u.to_string();
        prop_assert_eq!(braid3::parse(&text).unwrap(), u.clone());
        let json = serde_json::to_string(&u).unwrap();
        prop_assert_eq!(serde_json::from_str::<BraidWord>(&json).unwrap(), u);
    }

    #[test]
    fn homeomorphism_matches_orbits(alpha in 2i64..=30, b1 in 1i64..30, b2 in 1i64..30) {
        prop_assume!(alpha.gcd(&b1) == 1 && alpha.gcd(&b2) == 1);
        let (l1, l2) = (normalize(alpha, b1).unwrap(), normalize(alpha, b2).unwrap());
        let expected = l1.beta_orbit().contains(&b2.rem_euclid(alpha));
        prop_assert_eq!(homeomorphic(&l1, &l2), expected);
        prop_assert_eq!(l1.beta_orbit(), normalize(alpha, b1 + alpha).unwrap().beta_orbit());
        prop_assert_eq!(normalize(l1.alpha(), l1.beta()).unwrap(), l1);
    }

    #[test]
    fn continued_fraction_identities(p in 1i64..=10, q in 1i64..=10) {
        // [p, 2, q] and [p, 1, 1, q] give the ambient spaces of the two D families
        prop_assert_eq!(cf_eval(&[p, 2, q]).unwrap(), (2 * q + 1, 2 * p * q + p + q));
        prop_assert_eq!(cf_eval(&[p, 1, 1, q]).unwrap(), (2 * q + 1, 2 * p * q + p + q + 1));
        let a = 2 * p * q + p + q;
        prop_assert_eq!(normalize(a, 2 * q + 1).unwrap(), normalize(a, 2 * p + 1).unwrap());
        prop_assert_eq!(normalize(a + 1, 2 * q + 1).unwrap(), normalize(a + 1, 2 * p + 1).unwrap());
    }

    #[test]
    fn knots_are_consistent(knot in knots()) {
        prop_assert_eq!(knot.braid.monodromy().unwrap(), knot.matrix);
        prop_assert_eq!(closed_form_trace(knot.label, knot.params).unwrap(), knot.trace);
        prop_assert!(classify(&knot.ambient).unwrap().contains(&knot));
        prop_assert_eq!(knot_from_braid(&knot.braid, &knot.ambient).unwrap(), knot.clone());
        let json = serde_json::to_string(&knot).unwrap();
        prop_assert_eq!(serde_json::from_str::<GofKnot>(&json).unwrap(), knot.clone());
        match knot.label {
            Label::A2 | Label::B2 | Label::D2 => prop_assert!(knot.trace > 2),
            Label::C | Label::A1 | Label::A3 => prop_assert!(knot.trace.abs() <= 2),
            Label::B1 | Label::D1 => prop_assert!(knot.trace < -2 || knot.trace.abs() <= 2),
        }
    }

    #[test]
    fn lo_families_match_labels(alpha in (1i64..=60).prop_filter("B at 4 is A", |a| *a != 4), p in 1i64..=15, q in 1i64..=15) {
        let b2 = GofKnot::build(Label::B2, KnotParams::Alpha(alpha)).unwrap();
        let one = family_matrix(LoFamily::One { alpha }).unwrap();
        prop_assert!(conjugate_gl2(&b2.matrix, &one).unwrap());
        let d2 = GofKnot::build(Label::D2, KnotParams::PQ { p, q }).unwrap();
        let two = family_matrix(LoFamily::Two { p: p.min(q), q: p.max(q) }).unwrap();
        prop_assert!(conjugate_gl2(&d2.matrix, &two).unwrap());
        // swapping p and q reverses the RL word: conjugate to the inverse
        let swapped = family_matrix(LoFamily::Two { p: q, q: p }).unwrap();
        let original = family_matrix(LoFamily::Two { p, q }).unwrap();
        prop_assert!(conjugate_gl2(&swapped, &original.inverse().unwrap()).unwrap());
        prop_assert_eq!(GofKnot::build(Label::D2, KnotParams::PQ { p: q, q: p }).unwrap(), d2);
    }

    #[test]
    fn lo_families_are_conjugation_invariant(knot in knots(), p in common::gl2_word(10)) {
        prop_assume!(knot.trace > 2);
        let m = knot.matrix.conjugate_by(&p).unwrap();
        prop_assert_eq!(verdict::lo_family_matches(&m).unwrap(), verdict::lo_family_matches(&knot.matrix).unwrap());
    }

    #[test]
    fn verdicts_are_monotone_in_slope(knot in knots(), n in -50i64..50) {
        let here = verdict::surgery_verdict(&knot, n).status;
        let next = verdict::surgery_verdict(&knot, n + 1).status;
        if here == Status::NotLeftOrderable {
            prop_assert_eq!(next, Status::NotLeftOrderable);
        }
        prop_assert_eq!(here == Status::LeftOrderable, next == Status::LeftOrderable);
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn atlas_round_trips(max_alpha in 0i64..=30, lo in -4i64..=4, hi in -4i64..=4) {
        let records = atlas::enumerate(max_alpha, SlopeWindow::new(lo, hi)).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("atlas.jsonl");
        atlas::export_json(&records, &path).unwrap();
        prop_assert_eq!(atlas::import_json(&path).unwrap(), records.clone());
        let stats = atlas::stats(&records);
        prop_assert_eq!(stats.counts.values().sum::<usize>(), records.len());
    }
}
