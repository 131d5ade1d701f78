//! Acceptance criteria, one line of output per criterion.
//!
//! Runs with its own harness so the verdict lines always reach the test log.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use fcperm::crowding::{
    classify, is_minimal_crowded_direct, is_uncrowded_set, minimal_crowded_subset, s_xy,
};
use fcperm::verify::find_check;
use fcperm::words::{build_heap, labeled_linear_extensions, parse_letters, ReducedWord};
use fcperm::{boolean_core, fc_permutations, perm, rsk, Bounds, Exec, Permutation, Tableau};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn tab(s: &str) -> Tableau {
    s.parse().unwrap()
}

fn golden_examples() -> String {
    let start = Instant::now();

    assert_eq!(rsk(&perm("315264")).p, tab("1,2,4/3,5,6"));
    assert_eq!(rsk(&perm("41623785")).p, tab("1,2,3,5,8/4,6,7"));
    assert_eq!(rsk(&perm("41627385")).p, tab("1,2,3,5/4,6,7,8"));

    assert_eq!(boolean_core(&perm("345619278")).unwrap().core, perm("314569278"));
    assert_eq!(boolean_core(&perm("41623785")).unwrap().core, perm("41263785"));
    assert_eq!(boolean_core(&perm("41627385")).unwrap().core, perm("41263785"));

    let c = classify(&perm("41627385")).unwrap();
    assert_eq!(c.witness().expect("crowded").window, vec![6, 7, 8]);
    let direct = is_minimal_crowded_direct(&perm("41627385")).unwrap();
    assert!(direct.minimal);
    assert!(direct.alternating_descents);
    assert!(direct.crowded_descent_tops);
    assert!(direct.fixes_outside);
    assert!(direct.consecutive_415263);
    assert!(direct.windows_415263_or_315264);

    let w = perm("345619278");
    let word = ReducedWord::new(parse_letters("87234561234").unwrap(), 9).unwrap();
    assert_eq!(word.evaluate(9).unwrap(), w);
    let heap = build_heap(&word);
    assert_eq!(heap.size(), 11);
    let ext = labeled_linear_extensions(&heap, &Bounds::default()).unwrap();
    assert!(ext.contains(&word));
    assert!(ext.contains(&"23451234876".parse().unwrap()));

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    format!("in {elapsed:?}")
}

fn exhaustive_suite() -> String {
    let runs = [
        ("schensted", 7),
        ("inverse-symmetry", 7),
        ("fc-word-criteria", 6),
        ("boolean-word-criteria", 6),
        ("boolean-core", 7),
        ("row2-grows", 8),
        ("tableau-change-and-lis", 7),
        ("transition-crowds", 7),
        ("core-tableau", 8),
        ("crowded-filter", 8),
        ("minimal-crowded-characterization", 8),
    ];
    let bounds = Bounds::default();
    let mut total = 0;
    for (name, n) in runs {
        let check = find_check(name).expect("registered");
        let report = check.run(n, Exec::default(), &bounds).unwrap();
        assert!(
            report.passed(),
            "{name} at n = {n}: {:?}",
            report.counterexample
        );
        total += report.checked;
    }
    format!("{} checks, {total} instances, no counterexample", runs.len())
}

/// All of `S_n` by insertion of `n` into every slot of each element of `S_{n-1}`.
fn brute_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for k in 1..=n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..=p.len()).map(move |slot| {
                    let mut q = p.clone();
                    q.insert(slot, k);
                    q
                })
            })
            .collect();
    }
    out
}

fn has_321(p: &[usize]) -> bool {
    let n = p.len();
    (0..n).any(|a| (a + 1..n).any(|b| p[a] > p[b] && (b + 1..n).any(|c| p[b] > p[c])))
}

fn counting_checks() -> String {
    let expected = [1, 2, 5, 14, 42, 132, 429, 1430];
    for (n, &want) in (1..=8).zip(&expected) {
        let brute = brute_permutations(n).iter().filter(|p| !has_321(p)).count();
        assert_eq!(brute, want, "n = {n}");
        assert_eq!(fc_permutations(n).len(), want, "n = {n}");
    }
    for n in 1..=5 {
        let crowded = fc_permutations(n)
            .iter()
            .filter(|w| classify(w).unwrap().is_crowded())
            .count();
        assert_eq!(crowded, 0, "n = {n}");
    }
    "Catalan counts to n = 8, no crowded element for n <= 5".into()
}

/// Every `y` and `x` that could possibly matter, with no pruning.
fn crowded_by_unbounded_scan(l: &[usize]) -> bool {
    let top = l.iter().copied().max().unwrap_or(0) as i64;
    (-top - 2..=top + 2).any(|y| {
        (1..=top + 2).any(|x| {
            l.iter()
                .filter(|&&e| (e as i64) >= y && (e as i64) <= y + 2 * x)
                .count() as i64
                > x + 1
        })
    })
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |m| (1..=n).filter(|&e| m & (1 << (e - 1)) != 0).collect())
}

fn property_checks() -> String {
    for l in subsets(10) {
        assert_eq!(
            is_uncrowded_set(&l).is_crowded(),
            crowded_by_unbounded_scan(&l),
            "{l:?}"
        );
    }

    let mut crowded_sets = 0;
    for l in subsets(12) {
        if !is_uncrowded_set(&l).is_crowded() {
            continue;
        }
        crowded_sets += 1;
        let m = minimal_crowded_subset(&l).unwrap();
        assert_eq!(m.elements, s_xy(m.x, m.y));
        assert!(m.elements.iter().all(|e| l.contains(e)));
        assert!(is_uncrowded_set(&m.elements).is_crowded());
        for drop in &m.elements {
            let rest: Vec<usize> = m.elements.iter().copied().filter(|e| e != drop).collect();
            assert!(!is_uncrowded_set(&rest).is_crowded(), "{l:?} -> {m:?}");
        }
    }

    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..10_000 {
        let n = rng.random_range(1..=30);
        let mut image: Vec<usize> = (1..=n).collect();
        image.shuffle(&mut rng);
        let w = Permutation::new(image).unwrap();
        let pos = |v: usize| w.as_slice().iter().position(|&x| x == v).unwrap();
        for b in rsk(&w).trace.bumps() {
            assert!(b.bumper < b.bumped, "{w}: {b:?}");
            if b.row == 1 {
                assert!(pos(b.bumper) > pos(b.bumped), "{w}: {b:?}");
            }
        }
    }

    format!("1024 subsets scanned, {crowded_sets} crowded subsets minimal, 10000 random bump traces")
}

type Criterion = (&'static str, fn() -> String);

fn main() -> ExitCode {
    let criteria: [Criterion; 4] = [
        ("golden examples", golden_examples),
        ("exhaustive checks", exhaustive_suite),
        ("counting checks", counting_checks),
        ("property checks", property_checks),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match panic::catch_unwind(AssertUnwindSafe(run)) {
            Ok(summary) => println!("criterion {} {name}: PASS ({summary})", k + 1),
            Err(e) => {
                failed += 1;
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("criterion {} {name}: FAIL ({msg})", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
