use fcperm::crowding::{is_uncrowded_set, minimal_crowded_subset, s_xy};
use fcperm::report::{analyze, AnalysisReport};
use fcperm::rsk::row2;
use fcperm::words::{is_reduced, peeled_word};
use fcperm::{is_fully_commutative, rsk, Permutation};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| {
        let p = Just((1..=n).collect::<Vec<_>>()).prop_shuffle();
        (p.clone(), p).prop_map(|(a, b)| (Permutation::new(a).unwrap(), Permutation::new(b).unwrap()))
    })
}

fn small_set() -> impl Strategy<Value = Vec<usize>> {
    subsequence((1..=16).collect::<Vec<_>>(), 0..=16)
}

fn wide_scan(l: &[usize]) -> bool {
    let top = l.iter().copied().max().unwrap_or(0) as i64;
    (-top..=top).any(|y| {
        (1..=top + 1).any(|x| {
            l.iter().filter(|&&e| (e as i64) >= y && (e as i64) <= y + 2 * x).count() as i64 > x + 1
        })
    })
}

proptest! {
    #[test]
    fn inverse_cancels((u, v) in pair(12)) {
        let id = Permutation::identity(u.degree());
        prop_assert_eq!(u.compose(&u.inverse()).unwrap(), id.clone());
        prop_assert_eq!(u.inverse().compose(&u).unwrap(), id);
        let uv = u.compose(&v).unwrap();
        prop_assert_eq!(uv.inverse(), v.inverse().compose(&u.inverse()).unwrap());
    }

    #[test]
    fn length_changes_by_one(w in permutation(12), i in 1usize..12) {
        prop_assume!(i < w.degree());
        let desc = w.descents().contains(&i);
        let r = w.multiply_right(i).unwrap();
        prop_assert_eq!(r.length() + 1 == w.length(), desc);
        prop_assert_eq!(r.length().abs_diff(w.length()), 1);
        let l = w.multiply_left(i).unwrap();
        prop_assert_eq!(l.length().abs_diff(w.length()), 1);
    }

    #[test]
    fn inverse_swaps_tableaux(w in permutation(14)) {
        let a = rsk(&w);
        let b = rsk(&w.inverse());
        prop_assert_eq!(&a.p, &b.q);
        prop_assert_eq!(&a.q, &b.p);
        prop_assert!(a.p.is_standard() && a.q.is_standard());
    }

    #[test]
    fn bumps_move_down_and_left(w in permutation(20)) {
        for b in rsk(&w).trace.bumps() {
            prop_assert!(b.bumper < b.bumped);
            if b.row == 1 {
                prop_assert!(w.position_of(b.bumper) > w.position_of(b.bumped));
            }
        }
    }

    #[test]
    fn reducedness_matches_length(w in permutation(8), extra in proptest::collection::vec(1usize..8, 0..4)) {
        let n = w.degree();
        prop_assume!(n >= 2);
        let mut letters = peeled_word(&w).letters().to_vec();
        prop_assert!(is_reduced(&letters, n).unwrap());
        letters.extend(extra.into_iter().map(|s| 1 + (s - 1) % (n - 1)));
        let value = fcperm::words::evaluate_word(&letters, n).unwrap();
        prop_assert_eq!(is_reduced(&letters, n).unwrap(), value.length() == letters.len());
    }

    #[test]
    fn set_scan_matches_wide_scan(l in small_set()) {
        prop_assert_eq!(is_uncrowded_set(&l).is_crowded(), wide_scan(&l));
    }

    #[test]
    fn minimal_subset_is_minimal(l in small_set()) {
        match minimal_crowded_subset(&l) {
            Ok(m) => {
                prop_assert_eq!(&m.elements, &s_xy(m.x, m.y));
                prop_assert!(m.elements.iter().all(|e| l.contains(e)));
                for drop in &m.elements {
                    let rest: Vec<usize> = m.elements.iter().copied().filter(|e| e != drop).collect();
                    prop_assert!(!is_uncrowded_set(&rest).is_crowded());
                }
            }
            Err(_) => prop_assert!(!is_uncrowded_set(&l).is_crowded()),
        }
    }

    #[test]
    fn report_json_round_trips(w in permutation(10)) {
        let report = analyze(&w).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(report.fully_commutative, is_fully_commutative(&w));
        prop_assert_eq!(report.classification.is_some(), report.fully_commutative);
        prop_assert_eq!(report.row2, row2(&w));
    }
}
