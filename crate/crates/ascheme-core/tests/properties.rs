//! Randomized invariants over the standard corpus.

use ascheme_core::closed;
use ascheme_core::corpus;
use ascheme_core::{RelSet, Scheme};
use proptest::prelude::*;

fn corpus_scheme() -> impl Strategy<Value = Scheme> {
    let all = corpus::corpus();
    let len = all.len();
    (0..len).prop_map(move |i| all[i].clone())
}

proptest! {
    #[test]
    fn rebuild_is_deterministic(s in corpus_scheme()) {
        let rebuilt = Scheme::from_color_matrix(&s.color_rows()).unwrap();
        prop_assert_eq!(rebuilt, s);
    }

    #[test]
    fn double_counting(s in corpus_scheme(), p_seed: usize, q_seed: usize) {
        let d = s.rank();
        let (p, q) = (p_seed % d, q_seed % d);
        let lhs: usize = (0..d).map(|r| s.sc(p, q, r) * s.valency(r)).sum();
        prop_assert_eq!(lhs, s.valency(p) * s.valency(q));
        // total valency is the point count
        let total: usize = (0..d).map(|r| s.valency(r)).sum();
        prop_assert_eq!(total, s.n());
    }

    #[test]
    fn closure_is_idempotent_and_monotone(s in corpus_scheme(), mask: u32) {
        let d = s.rank();
        let seed = RelSet::from_indices(d, (0..d).filter(|&i| mask >> (i % 32) & 1 == 1));
        let c = closed::closure(&s, &seed);
        prop_assert!(seed.is_subset(c.members()));
        let again = closed::closure(&s, c.members());
        prop_assert_eq!(again.members(), c.members());
        // monotone: closing a subset of the seed stays inside
        let mut half = seed.clone();
        if let Some(first) = seed.iter().next() {
            let mut smaller = RelSet::empty(d);
            for i in seed.iter().skip(1) {
                smaller.insert(i);
            }
            let _ = first;
            half = smaller;
        }
        let sub = closed::closure(&s, &half);
        prop_assert!(sub.members().is_subset(c.members()));
    }

    #[test]
    fn star_is_involutive(s in corpus_scheme()) {
        for r in 0..s.rank() {
            prop_assert_eq!(s.star(s.star(r)), r);
            prop_assert_eq!(s.valency(s.star(r)), s.valency(r));
        }
    }
}
