mod common;

use afcount::oracle::Oracle;
use afcount::{ArgSet, SemanticsKind as S};
use proptest::prelude::*;

fn masks(o: &Oracle, s: S) -> Vec<u64> {
    o.enumerate_masks(s)
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().all(|m| b.contains(m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extension_chain(af in common::frameworks(8)) {
        let o = Oracle::new(&af).unwrap();
        let chain = [S::Stable, S::SemiStable, S::Preferred, S::Complete, S::Admissible, S::ConflictFree];
        for w in chain.windows(2) {
            prop_assert!(subset(&masks(&o, w[0]), &masks(&o, w[1])), "{:?} ⊄ {:?}", w[0], w[1]);
        }
        prop_assert!(subset(&masks(&o, S::Stable), &masks(&o, S::Stage)));
        prop_assert!(subset(&masks(&o, S::Stage), &masks(&o, S::ConflictFree)));
        for w in chain.windows(2) {
            prop_assert!(o.count(w[0]) <= o.count(w[1]));
        }
    }

    #[test]
    fn complete_is_admissible_fixpoint(af in common::frameworks(8)) {
        let n = af.len();
        for m in 0..1u64 << n {
            let s = ArgSet::from_mask(n, m);
            let fix = af.is_admissible(&s) && af.defended_set(&s) == s;
            prop_assert_eq!(af.is_complete(&s), fix);
        }
    }

    #[test]
    fn range_contains_and_grows(af in common::frameworks(8), a in any::<u64>(), b in any::<u64>()) {
        let n = af.len();
        let full = (1u64 << n) - 1;
        let s = ArgSet::from_mask(n, a & full);
        let t = ArgSet::from_mask(n, (a | b) & full);
        prop_assert!(s.is_subset(&af.range(&s)));
        prop_assert!(af.range(&s).is_subset(&af.range(&t)));
    }

    #[test]
    fn self_attackers_never_conflict_free(af in common::frameworks(8)) {
        let o = Oracle::new(&af).unwrap();
        let loops: Vec<usize> = (0..af.len()).filter(|&a| af.attacks_arg(a, a)).collect();
        for e in o.enumerate(S::ConflictFree) {
            prop_assert!(loops.iter().all(|&z| !e.contains(z)));
        }
    }

    #[test]
    fn projected_oracle_bounds(af in common::frameworks(8), pm in any::<u64>(), arg in 0usize..8) {
        let n = af.len();
        let o = Oracle::new(&af).unwrap();
        let a = arg % n;
        let p = ArgSet::from_mask(n, pm & ((1u64 << n) - 1));
        for s in S::ALL {
            let cred = o.count_credulous_index(s, Some(a));
            let proj = o.count_projected_index(s, Some(a), &p);
            prop_assert!(proj <= cred.min(1u64 << p.len()));
            let empty = o.count_projected_index(s, Some(a), &af.empty_set());
            prop_assert_eq!(empty, u64::from(cred > 0));
            prop_assert_eq!(o.count_projected_index(s, Some(a), &af.full_set()), cred);
        }
    }
}
