mod common;

use std::cmp::Ordering;

use ifn_order::cuts::{cut, strong_cut};
use ifn_order::order::{compare, equality_certificate, sort, Verdict, DEFAULT_DEPTH};
use ifn_order::scalar::ratio;
use ifn_order::scores::{ivif_scores, score_quad};
use ifn_order::{DenseSequence, Ifn};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn trifn(steps: i64) -> impl Strategy<Value = Ifn> {
    any::<u64>().prop_map(move |seed| common::random_trifn(&mut ChaCha8Rng::seed_from_u64(seed), steps))
}

fn sequences() -> impl Strategy<Value = DenseSequence> {
    prop_oneof![
        Just(DenseSequence::default()),
        Just(DenseSequence::WithRepeats),
        Just(DenseSequence::half_first()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verdicts_are_antisymmetric(a in trifn(16), b in trifn(16), seq in sequences()) {
        let v = compare(&a, &b, &seq, DEFAULT_DEPTH).unwrap();
        prop_assert_eq!(compare(&b, &a, &seq, DEFAULT_DEPTH).unwrap(), v.clone().reversed());
        let deep = matches!(v, Verdict::Indistinguishable { .. });
        prop_assert!(!deep);
        prop_assert_eq!(v.ordering() == Ordering::Equal, a.same_knots(&b));
    }

    #[test]
    fn matching_cores_defer_the_decision(a in trifn(16), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(b) = common::same_cores(&mut rng, &a, 16) {
            let v = compare(&a, &b, &DenseSequence::default(), DEFAULT_DEPTH).unwrap();
            prop_assert!(v.index().is_some_and(|j| j > 4), "{:?}", v);
            let (o, j) = common::oracle(&a, &b, &DenseSequence::default(), 40);
            prop_assert_eq!((o, j), (v.ordering(), v.index()));
        }
    }

    #[test]
    fn certificate_matches_knot_identity(a in trifn(8), b in trifn(8), seq in sequences()) {
        prop_assert_eq!(equality_certificate(&a, &b, &seq).unwrap(), a.same_knots(&b));
        prop_assert!(equality_certificate(&a, &a.clone(), &seq).unwrap());
    }

    #[test]
    fn sort_is_ordered_and_input_independent(items in prop::collection::vec(trifn(8), 1..7), rot in 0usize..7) {
        let seq = DenseSequence::default();
        let groups = sort(&items, &seq, DEFAULT_DEPTH).unwrap();
        let flat: Vec<usize> = groups.iter().flat_map(|g| g.members.clone()).collect();
        let mut seen = flat.clone();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..items.len()).collect::<Vec<_>>());
        for w in flat.windows(2) {
            prop_assert_ne!(compare(&items[w[0]], &items[w[1]], &seq, DEFAULT_DEPTH).unwrap().ordering(), Ordering::Greater);
        }
        for g in &groups {
            prop_assert!(g.members.iter().all(|&m| items[m].same_knots(&items[g.members[0]])));
        }
        // rotating the input rotates the indices but not the knot order
        let k = rot % items.len();
        let mut rotated = items.clone();
        rotated.rotate_left(k);
        let again: Vec<Ifn> = sort(&rotated, &seq, DEFAULT_DEPTH).unwrap()
            .iter().map(|g| rotated[g.members[0]].clone()).collect();
        let first: Vec<Ifn> = groups.iter().map(|g| items[g.members[0]].clone()).collect();
        prop_assert_eq!(again.len(), first.len());
        for (x, y) in again.iter().zip(&first) {
            prop_assert!(x.same_knots(y));
        }
    }

    #[test]
    fn cuts_nest_and_strong_cuts_sit_inside(a in trifn(16), p in 1i64..=16, q in 1i64..=16) {
        let (lo, hi) = (ratio(p.min(q), 16), ratio(p.max(q), 16));
        let inner = cut(&a, &hi, &hi).unwrap();
        let outer = cut(&a, &lo, &lo).unwrap();
        prop_assert!(inner.mu.is_subset_of(&outer.mu) && inner.nu.is_subset_of(&outer.nu));
        let below = ratio(p.min(q) - 1, 16);
        let strong = strong_cut(&a, &below, &below).unwrap();
        prop_assert!(outer.mu.is_subset_of(&strong.mu) || strong.mu.empty_interior());
    }

    #[test]
    fn quads_agree_with_interval_scores(a in trifn(16), p in 1i64..=16) {
        let t = ratio(p, 16);
        let rect = cut(&a, &t, &t).unwrap();
        let q = score_quad(&rect);
        let [w, x, y, z] = rect.corners();
        let s = ivif_scores(w, x, y, z);
        prop_assert_eq!((&q.c1, -&q.c2, &q.c3, -&q.c4), (&s.l, s.lg.clone(), &s.p, s.ip.clone()));
    }
}
