mod common;

use std::cmp::Ordering;
use std::collections::BTreeMap;

use proptest::prelude::*;
use thinpos::random::{random_word, WordParams};
use thinpos::*;

fn word_with(params: WordParams) -> impl Strategy<Value = MorseWord> {
    any::<u64>().prop_map(move |seed| random_word(&mut common::rng(seed), &params))
}

fn knot() -> impl Strategy<Value = MorseWord> {
    word_with(WordParams { max_strands: 12, target_len: 24, ..WordParams::default() })
}

fn bridge_knot() -> impl Strategy<Value = MorseWord> {
    word_with(WordParams { bridge: true, ..WordParams::default() })
}

fn small_knot() -> impl Strategy<Value = MorseWord> {
    word_with(WordParams { max_strands: 6, target_len: 12, max_crossings: 12, ..WordParams::default() })
}

fn kind_name(m: &Move) -> &'static str {
    match m.kind {
        MoveKind::CommuteDistant { .. } => "commute",
        MoveKind::ZigZagCancel => "zigzag-",
        MoveKind::ZigZagInsert { .. } => "zigzag+",
        MoveKind::R1Absorb => "r1-",
        MoveKind::R1Insert { .. } => "r1+",
        MoveKind::R2Cancel => "r2-",
        MoveKind::R2Insert { .. } => "r2+",
        MoveKind::YangBaxter => "yb",
        MoveKind::CapAbsorbCross => "capkink",
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn width_is_half_difference_of_squares(w in knot()) {
        let p = LevelProfile::of(&w);
        let sq = |v: Vec<usize>| v.iter().map(|x| x * x).sum::<usize>();
        prop_assert_eq!(p.thick().len(), p.thin().len() + 1);
        prop_assert_eq!(2 * p.width(), sq(p.thick()) - sq(p.thin()));
    }

    #[test]
    fn trunk_at_most_twice_bridge(w in knot()) {
        prop_assert!(trunk_embedding(&w) <= 2 * bridge_count(&w));
        prop_assert_eq!(critical_count(&w), 2 * bridge_count(&w));
    }

    #[test]
    fn text_round_trip(w in word_with(WordParams { allow_links: true, ..WordParams::default() })) {
        let any = AnyWord::Closed(w);
        prop_assert_eq!(parse(&serialize(&any)).unwrap(), any);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn bridge_positions_reach_the_bound(w in bridge_knot()) {
        prop_assert_eq!(trunk_embedding(&w), 2 * bridge_count(&w));
        prop_assert_eq!(height_embedding(&w), 1);
    }

    #[test]
    fn connected_sum_arithmetic(a in bridge_knot(), b in bridge_knot()) {
        let s = connected_sum(&a, &b).unwrap();
        prop_assert_eq!(width(&s) + 2, width(&a) + width(&b));
        prop_assert_eq!(bridge_count(&s) + 1, bridge_count(&a) + bridge_count(&b));
        prop_assert_eq!(trunk_embedding(&s), trunk_embedding(&a).max(trunk_embedding(&b)));
        prop_assert!(s.is_knot());
    }

    #[test]
    fn connected_sum_multiplies_normalized_brackets(a in small_knot(), b in small_knot()) {
        prop_assume!(a.crossing_count() + b.crossing_count() <= 14);
        let s = connected_sum(&a, &b).unwrap();
        let product = &jones_normalized(&a).unwrap() * &jones_normalized(&b).unwrap();
        prop_assert_eq!(jones_normalized(&s).unwrap(), product);
    }

    #[test]
    fn moves_are_sound_and_invertible(w in small_knot(), pick in any::<prop::sample::Index>()) {
        let moves = enumerate_moves(&w);
        let mv = *pick.get(&moves);
        let after = apply_move(&w, &mv).unwrap();
        prop_assume!(after.crossing_count() <= 15);
        prop_assert_eq!(after.component_count(), w.component_count());
        let back = apply_move(&after, &inverse_move(&w, &mv).unwrap()).unwrap();
        prop_assert_eq!(&back, &w);
        prop_assert_eq!(jones_normalized(&after).unwrap(), jones_normalized(&w).unwrap());
        if !mv.changes_writhe() {
            prop_assert_eq!(kauffman_bracket(&after).unwrap(), kauffman_bracket(&w).unwrap());
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_bracket_preserving(w in small_knot()) {
        let c = canonical_form(&w);
        prop_assert_eq!(canonical_form(&c), c.clone());
        prop_assert_eq!(kauffman_bracket(&c).unwrap(), kauffman_bracket(&w).unwrap());
        let shape = |w: &MorseWord| LevelProfile::of(w).gaps().iter().map(|g| (g.width, g.class())).collect::<Vec<_>>();
        prop_assert_eq!(shape(&c), shape(&w));
    }

    #[test]
    fn otp_compare_is_a_total_preorder(a in knot(), b in knot(), c in knot()) {
        let (a, b, c) = (otp_vector(&a), otp_vector(&b), otp_vector(&c));
        prop_assert_eq!(otp_compare(&a, &b), otp_compare(&b, &a).reverse());
        if otp_compare(&a, &b) != Ordering::Greater && otp_compare(&b, &c) != Ordering::Greater {
            prop_assert!(otp_compare(&a, &c) != Ordering::Greater);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn beam_never_worsens_and_replays(w in small_knot(), seed in any::<u64>()) {
        let objective = Objective::new(ObjectiveKind::OTPLex);
        let config = SearchConfig { beam_width: 8, max_steps: 4, insertion_budget: 1, random_seed: seed, ..SearchConfig::default() };
        let r = beam_search(&w, &objective, &config).unwrap();
        prop_assert!(objective.score(&r.best_word) <= objective.score(&w));
        prop_assert_eq!(replay(&w, &r.trace).unwrap(), r.best_word.clone());
        prop_assert_eq!(beam_search(&w, &objective, &config).unwrap(), r);
    }

    #[test]
    fn exhaustive_is_monotone_in_radius(w in word_with(WordParams { max_strands: 4, target_len: 8, max_crossings: 3, ..WordParams::default() })) {
        let objective = Objective::new(ObjectiveKind::GabaiWidth);
        let config = SearchConfig { insertion_budget: 1, ..SearchConfig::default() };
        let mut last = objective.score(&w);
        for radius in 1..=3 {
            let r = exhaustive_min(&w, &objective, radius, &config).unwrap();
            let s = objective.score(&r.best_word);
            prop_assert!(s <= last);
            last = s;
        }
    }
}

#[test]
fn fuzzed_moves_cover_every_kind() {
    let mut seen = BTreeMap::new();
    let params = WordParams { max_strands: 6, target_len: 12, max_crossings: 12, ..WordParams::default() };
    for w in common::words(11, 300, &params) {
        for m in enumerate_moves(&w) {
            *seen.entry(kind_name(&m)).or_insert(0) += 1;
        }
    }
    for k in ["commute", "zigzag-", "zigzag+", "r1-", "r1+", "r2-", "r2+", "yb", "capkink"] {
        assert!(seen.get(k).copied().unwrap_or(0) > 0, "no {} moves in {:?}", k, seen);
    }
}

#[test]
fn figure_eight_matches_diagram_code() {
    let w = catalog_closed("figure8_plat").unwrap();
    let oracle = common::pd_bracket(&common::FIGURE8_PD, false);
    assert_eq!(kauffman_bracket(&w).unwrap(), oracle);
    assert_eq!(oracle, oracle.mirror());
}

#[test]
fn bracket_of_torus_plats_changes_with_crossings() {
    let t23 = torus_plat(2, 3, Sign::Pos).unwrap();
    let right = common::pd_bracket(&common::TREFOIL_PD, false);
    assert_eq!(kauffman_bracket(&t23).unwrap(), right);
    let t25 = torus_plat(2, 5, Sign::Pos).unwrap();
    assert_ne!(jones_normalized(&t25).unwrap(), jones_normalized(&t23).unwrap());
}
