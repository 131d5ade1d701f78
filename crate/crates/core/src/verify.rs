//! Exhaustive checks of the structural results over `S_n`.
//!
//! Each check scans a lexicographically ordered family of permutations and
//! reports the first failure in that order, whatever the [`Exec`] mode.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::crowding::{
    analyze_transition, classify, is_minimal_crowded_direct, is_uncrowded_set,
    minimal_crowded_subset, uncrowded_iff_core,
};
use crate::enumerate::{all_permutations, fc_permutations, Exec};
use crate::error::{Error, Result};
use crate::patterns::{consecutive_occurrences, is_boolean, is_fully_commutative};
use crate::perm::{perm, Permutation};
use crate::rsk::{rsk, Tableau};
use crate::weak_order::{
    build_fc_poset, down_covers, is_minimal_crowded_oracle, knuth_class, right_weak_leq,
    up_covers,
};
use crate::words::{
    all_reduced_words, boolean_core, build_heap, canonical_word, commutation_classes,
    labeled_linear_extensions, ReducedWord,
};
use crate::Bounds;

/// The first failing instance of a check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Usually a permutation in one-line notation.
    pub subject: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub n: usize,
    /// Number of instances examined.
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

type Runner = fn(usize, Exec, &Bounds) -> Result<(usize, Option<Counterexample>)>;

pub struct Check {
    pub id: &'static str,
    /// Alternative names accepted on the command line.
    pub aliases: &'static [&'static str],
    pub about: &'static str,
    /// Degree the check is meant to be run at.
    pub default_n: usize,
    run: Runner,
}

impl Check {
    pub fn run(&self, n: usize, exec: Exec, bounds: &Bounds) -> Result<CheckReport> {
        bounds.check_degree(n)?;
        let (checked, counterexample) = (self.run)(n, exec, bounds)?;
        Ok(CheckReport {
            check: self.id.to_string(),
            n,
            checked,
            counterexample,
        })
    }

    pub fn matches(&self, name: &str) -> bool {
        self.id == name || self.aliases.contains(&name)
    }
}

macro_rules! check {
    ($id:literal, [$($alias:literal),*], $n:literal, $about:literal, $run:path) => {
        Check {
            id: $id,
            aliases: &[$($alias),*],
            about: $about,
            default_n: $n,
            run: $run,
        }
    };
}

/// Every available check.
pub fn registry() -> Vec<Check> {
    vec![
        check!("support-criterion", ["lemma-2.1"], 7,
            "i is in the support iff the prefix maximum exceeds the suffix minimum",
            support_criterion),
        check!("fc-word-criteria", ["prop-2.2"], 6,
            "321-avoiding iff one commutation class iff no braid factor in any reduced word",
            fc_word_criteria),
        check!("boolean-word-criteria", ["prop-2.3"], 6,
            "avoiding 321 and 3412 iff some reduced word has distinct letters iff all do",
            boolean_word_criteria),
        check!("heap-cover-labels", ["lemma-2.5"], 7,
            "heap covers join labels differing by one",
            heap_cover_labels),
        check!("heap-extensions", ["prop-2.7"], 6,
            "for 321-avoiders the heap is word independent and its linear extensions are R(w)",
            heap_extensions),
        check!("inverse-symmetry", ["prop-2.9"], 7,
            "P(w^-1) = Q(w)",
            inverse_symmetry),
        check!("schensted", ["thm-2.10"], 7,
            "row 1 of P is a longest increasing, column 1 a longest decreasing subsequence",
            schensted),
        check!("bump-direction", ["lemma-2.11"], 7,
            "a bumper is smaller than the value it bumps, and out of row 1 it lies to its right",
            bump_direction),
        check!("column-is-lis", ["lemma-2.12"], 7,
            "c_v(q) is the longest increasing subsequence ending in q",
            column_is_lis),
        check!("lone-column-in-every-lis", ["lis-corollary"], 6,
            "a value alone in its insertion column lies on every longest increasing subsequence",
            lone_column_in_every_lis),
        check!("row2-structure", [], 7,
            "second-row values and their bumpers both appear in increasing order and never overlap",
            row2_structure),
        check!("boolean-tableaux", ["prop-2.14"], 7,
            "insertion tableaux of boolean permutations are the uncrowded tableaux with at most two rows",
            boolean_tableaux),
        check!("repeated-letters-separated", ["lemma-3.1"], 7,
            "two heap elements with label j are separated by labels j-1 and j+1",
            repeated_letters_separated),
        check!("boolean-core", ["thm-3.2"], 7,
            "the core is boolean, has full support, is a length-additive prefix and is unique",
            boolean_core_check),
        check!("row2-grows", ["thm-3.4"], 8,
            "along fully commutative covers row 2 grows and row 1 shrinks",
            row2_grows),
        check!("tableau-change-and-lis", ["cor-3.5"], 7,
            "P changes across a cover iff every longest increasing subsequence uses both swapped values",
            tableau_change_and_lis),
        check!("core-rows", ["cor-3.7"], 8,
            "row 1 of P(core) contains row 1 of P(w), row 2 of P(core) is inside row 2 of P(w)",
            core_rows),
        check!("left-right-symmetry", [], 6,
            "left order is right order on inverses and row 2 of Q grows along it",
            left_right_symmetry),
        check!("transition-crowds", ["thm-4.11"], 7,
            "a support-preserving cover that changes P lands on a crowded permutation",
            transition_crowds),
        check!("core-tableau", ["cor-4.12"], 8,
            "uncrowded iff P(core) = P(w)",
            core_tableau),
        check!("crowded-filter", ["lemma-5.1"], 8,
            "uncrowded elements form an ideal and crowded ones a filter of the poset",
            crowded_filter),
        check!("non-bumping-descent", ["lemma-5.2"], 7,
            "sorting a descent whose right letter does not bump the left keeps P",
            non_bumping_descent),
        check!("small-neighbor-descent", ["lemma-5.4"], 7,
            "sorting a descent at d with w(d+2) < w(d) keeps P",
            small_neighbor_descent),
        check!("adjacent-bumps", ["cor-5.5"], 8,
            "in a minimal crowded permutation descents are exactly adjacent bumps",
            adjacent_bumps),
        check!("fixed-ends", ["cor-5.6"], 8,
            "a minimal crowded permutation fixes everything outside its descent span",
            fixed_ends),
        check!("interleaved-row2", ["lemma-5.7"], 8,
            "z_1 b_1 ... z_t b_t is a factor of a minimal crowded permutation",
            interleaved_row2),
        check!("bumper-gap", ["lemma-5.8"], 9,
            "z_i < b_(i+3) in a minimal crowded permutation",
            bumper_gap),
        check!("unique-minimal-crowded-subset", ["cor-5.9"], 8,
            "row 2 of a minimal crowded permutation has one minimal crowded subset, through its maximum",
            unique_minimal_crowded_subset),
        check!("minimal-crowded-characterization", ["thm-5.10"], 8,
            "the five-condition test agrees with poset minimality",
            minimal_crowded_characterization),
        check!("fc-downward-closed", [], 8,
            "down-covers of a 321-avoider avoid 321",
            fc_downward_closed),
        check!("knuth-classes", [], 6,
            "Knuth classes are the fibers of P",
            knuth_classes),
        check!("fc-count", [], 8,
            "321-avoiders are counted by the Catalan numbers",
            fc_count),
    ]
}

pub fn find_check(name: &str) -> Option<Check> {
    registry().into_iter().find(|c| c.matches(name))
}

/// Runs `f` over `items` and returns the count and the first failure.
fn sweep<T, F>(items: &[T], exec: Exec, f: F) -> (usize, Option<Counterexample>)
where
    T: Sync + ToString,
    F: Fn(&T) -> Result<(), String> + Sync + Send,
{
    let failure = exec.find_map_first(items, |x| {
        f(x).err().map(|detail| Counterexample {
            subject: x.to_string(),
            detail,
        })
    });
    (items.len(), failure)
}

fn ok_or(cond: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

/// Sweeps that list reduced words of every element of `S_n` may go up to
/// the longest element of `S_6` without asking; past that the caller's
/// word bound decides.
const SWEEP_WORD_LENGTH: usize = 15;

fn word_bounds(n: usize, bounds: &Bounds) -> Result<Bounds> {
    let longest = n * n.saturating_sub(1) / 2;
    let b = Bounds {
        max_word_length: bounds.max_word_length.max(SWEEP_WORD_LENGTH.min(longest)),
        max_heap_size: bounds.max_heap_size.max(SWEEP_WORD_LENGTH.min(longest)),
        ..*bounds
    };
    if longest > b.max_word_length {
        return Err(Error::BoundExceeded {
            what: "length",
            value: longest,
            bound: b.max_word_length,
        });
    }
    Ok(b)
}

fn minimal_crowded(n: usize, exec: Exec) -> Vec<Permutation> {
    exec.filter(&fc_permutations(n), |w| {
        is_minimal_crowded_oracle(w).unwrap_or(false)
    })
}

fn lis(values: &[usize]) -> usize {
    let mut best = vec![0usize; values.len()];
    for j in 0..values.len() {
        best[j] = 1 + (0..j)
            .filter(|&i| values[i] < values[j])
            .map(|i| best[i])
            .max()
            .unwrap_or(0);
    }
    best.into_iter().max().unwrap_or(0)
}

fn without(values: &[usize], pos: usize) -> Vec<usize> {
    let mut v = values.to_vec();
    v.remove(pos);
    v
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

fn support_criterion(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&all_permutations(n), exec, |w| {
        let letters = set(canonical_word(w).letters());
        ok_or(w.support() == letters.iter().copied().collect::<Vec<_>>(), || {
            format!("support {:?} differs from word letters {letters:?}", w.support())
        })?;
        for i in 1..n {
            let s = w.support_stats(i).map_err(|e| e.to_string())?;
            let prefix: BTreeSet<usize> = w.as_slice()[..i].iter().copied().collect();
            let statements = [
                letters.contains(&i),
                prefix != (1..=i).collect(),
                s.max_prefix > i,
                s.min_suffix < i + 1,
                s.max_prefix > s.min_suffix,
            ];
            ok_or(statements.iter().all(|&b| b == statements[0]), || {
                format!("at i = {i} the equivalent statements disagree: {statements:?}")
            })?;
        }
        Ok(())
    }))
}

fn fc_word_criteria(n: usize, exec: Exec, bounds: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let b = word_bounds(n, bounds)?;
    let all = all_permutations(n);
    Ok(sweep(&all, exec, |w| {
        let fc = is_fully_commutative(w);
        let one_class = commutation_classes(w, &b).map_err(|e| e.to_string())?.len() == 1;
        let words = all_reduced_words(w, &b).map_err(|e| e.to_string())?;
        let no_rising = words.iter().all(|u| !u.has_braid_factor(true));
        let no_falling = words.iter().all(|u| !u.has_braid_factor(false));
        ok_or(fc == one_class && fc == no_rising && fc == no_falling, || {
            format!(
                "avoids 321: {fc}, one class: {one_class}, no i(i+1)i: {no_rising}, no (i+1)i(i+1): {no_falling}"
            )
        })
    }))
}

fn boolean_word_criteria(n: usize, exec: Exec, bounds: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let b = word_bounds(n, bounds)?;
    let all = all_permutations(n);
    Ok(sweep(&all, exec, |w| {
        let boolean = is_boolean(w);
        let words = all_reduced_words(w, &b).map_err(|e| e.to_string())?;
        let some = words.iter().any(ReducedWord::has_distinct_letters);
        let every = words.iter().all(ReducedWord::has_distinct_letters);
        ok_or(boolean == some && boolean == every, || {
            format!("boolean: {boolean}, some word distinct: {some}, all words distinct: {every}")
        })
    }))
}

fn heap_cover_labels(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |w| {
        let h = build_heap(&canonical_word(w));
        match h.covers().iter().find(|&&(x, y)| h.label(x).abs_diff(h.label(y)) != 1) {
            Some(&(x, y)) => Err(format!(
                "cover {x} -> {y} joins labels {} and {}",
                h.label(x),
                h.label(y)
            )),
            None => Ok(()),
        }
    }))
}

fn heap_extensions(n: usize, exec: Exec, bounds: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let b = Bounds {
        max_word_length: bounds.max_word_length.max(n * n / 4),
        max_heap_size: bounds.max_heap_size.max(n * n / 4),
        ..*bounds
    };
    Ok(sweep(&fc_permutations(n), exec, |w| {
        let words = all_reduced_words(w, &b).map_err(|e| e.to_string())?;
        let first = build_heap(&canonical_word(w));
        let shape = first.canonical_form();
        if let Some(u) = words.iter().find(|u| build_heap(u).canonical_form() != shape) {
            return Err(format!("heap of {u} differs from the heap of the least word"));
        }
        let ext = labeled_linear_extensions(&first, &b).map_err(|e| e.to_string())?;
        ok_or(ext == words, || {
            format!("{} linear extensions but {} reduced words", ext.len(), words.len())
        })
    }))
}

fn inverse_symmetry(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&all_permutations(n), exec, |w| {
        let (p_inv, q) = (rsk(&w.inverse()).p, rsk(w).q);
        ok_or(p_inv == q, || format!("P(w^-1) = {p_inv} but Q(w) = {q}"))
    }))
}

fn schensted(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&all_permutations(n), exec, |w| {
        let p = rsk(w).p;
        let inc = lis(w.as_slice());
        let reversed: Vec<usize> = w.as_slice().iter().rev().copied().collect();
        let dec = lis(&reversed);
        ok_or(p.row(1).len() == inc && p.num_rows() == dec, || {
            format!(
                "shape {:?} but longest increasing {inc}, longest decreasing {dec}",
                p.shape()
            )
        })
    }))
}

fn bump_direction(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&all_permutations(n), exec, |w| {
        let r = rsk(w);
        let bad = r.trace.bumps().find(|b| {
            b.bumper >= b.bumped
                || (b.row == 1 && w.position_of(b.bumper) <= w.position_of(b.bumped))
        });
        match bad {
            Some(b) => Err(format!("{} bumps {} in row {}", b.bumper, b.bumped, b.row)),
            None => Ok(()),
        }
    }))
}

fn column_is_lis(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&all_permutations(n), exec, |w| {
        let r = rsk(w);
        let s = w.as_slice();
        for (j, &q) in s.iter().enumerate() {
            let prefix: Vec<usize> = s[..j].iter().copied().filter(|&x| x < q).collect();
            let ending = lis(&prefix) + 1;
            ok_or(r.trace.first_column(q) == ending, || {
                format!("c({q}) = {} but LIS ending at {q} is {ending}", r.trace.first_column(q))
            })?;
        }
        Ok(())
    }))
}

/// All longest increasing subsequences, as position sets.
fn all_lis(values: &[usize]) -> Vec<Vec<usize>> {
    let target = lis(values);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(values: &[usize], start: usize, target: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == target {
            out.push(cur.clone());
            return;
        }
        for p in start..values.len() {
            if cur.last().is_none_or(|&q| values[q] < values[p]) {
                cur.push(p);
                go(values, p + 1, target, cur, out);
                cur.pop();
            }
        }
    }
    go(values, 0, target, &mut cur, &mut out);
    out
}

fn lone_column_in_every_lis(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&all_permutations(n), exec, |w| {
        let r = rsk(w);
        let s = w.as_slice();
        let seqs = all_lis(s);
        for (pos, &q) in s.iter().enumerate() {
            if r.trace.inserted_into_column(r.trace.first_column(q)).len() == 1 {
                ok_or(seqs.iter().all(|seq| seq.contains(&pos)), || {
                    format!("{q} is alone in its column but misses a longest increasing subsequence")
                })?;
            }
        }
        Ok(())
    }))
}

/// `(z_i, b_i)` pairs for a fully commutative `w`, ordered by `z`.
fn z_b_pairs(w: &Permutation) -> Vec<(usize, usize)> {
    let r = rsk(w);
    r.p.row(2)
        .iter()
        .map(|&z| (z, r.trace.row1_bumper_of(z).expect("second-row values were bumped")))
        .collect()
}

fn row2_structure(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |w| {
        let pairs = z_b_pairs(w);
        let zs: Vec<usize> = pairs.iter().map(|p| p.0).collect();
        let bs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
        let zpos: Vec<usize> = zs.iter().map(|&z| w.position_of(z)).collect();
        let bpos: Vec<usize> = bs.iter().map(|&b| w.position_of(b)).collect();
        ok_or(zpos.windows(2).all(|p| p[0] < p[1]), || {
            format!("row 2 {zs:?} is not left to right")
        })?;
        ok_or(set(&zs).is_disjoint(&set(&bs)), || {
            format!("bumped {zs:?} and bumpers {bs:?} overlap")
        })?;
        ok_or(
            bs.windows(2).all(|p| p[0] < p[1]) && bpos.windows(2).all(|p| p[0] < p[1]),
            || format!("bumpers {bs:?} are not increasing left to right"),
        )?;
        let r = rsk(w);
        let when: Vec<usize> = zs
            .iter()
            .map(|&z| {
                r.trace
                    .steps
                    .iter()
                    .position(|s| s.bumps.iter().any(|b| b.row == 1 && b.bumped == z))
                    .expect("second-row values were bumped")
            })
            .collect();
        ok_or(when.windows(2).all(|p| p[0] < p[1]), || {
            format!("row 2 values {zs:?} are not bumped in order")
        })
    }))
}

/// Standard tableaux with at most two rows and `n` cells.
pub fn two_row_tableaux(n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        let second: Vec<usize> = (1..=n).filter(|&e| mask & (1 << (e - 1)) != 0).collect();
        if second.len() * 2 > n {
            continue;
        }
        let first: Vec<usize> = (1..=n).filter(|e| !second.contains(e)).collect();
        let t = if second.is_empty() {
            Tableau::new(vec![first])
        } else {
            Tableau::new(vec![first, second])
        };
        if t.is_standard() {
            out.push(t);
        }
    }
    out.sort();
    out
}

fn boolean_tableaux(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let booleans = exec.filter(&all_permutations(n), is_boolean);
    let (checked, failure) = sweep(&booleans, exec, |w| {
        let p = rsk(w).p;
        ok_or(p.num_rows() <= 2 && !is_uncrowded_set(p.row(2)).is_crowded(), || {
            format!("P = {p} is not an uncrowded tableau with at most two rows")
        })
    });
    if failure.is_some() {
        return Ok((checked, failure));
    }
    let from_p: BTreeSet<Tableau> = booleans.iter().map(|w| rsk(w).p).collect();
    let from_q: BTreeSet<Tableau> = booleans.iter().map(|w| rsk(w).q).collect();
    let uncrowded: Vec<Tableau> = two_row_tableaux(n)
        .into_iter()
        .filter(|t| !is_uncrowded_set(t.row(2)).is_crowded())
        .collect();
    let missed = uncrowded
        .iter()
        .find(|t| !from_p.contains(t) || !from_q.contains(t));
    Ok((
        checked + uncrowded.len(),
        missed.map(|t| Counterexample {
            subject: t.to_string(),
            detail: "uncrowded tableau is not the insertion and recording tableau of a boolean permutation"
                .into(),
        }),
    ))
}

fn repeated_letters_separated(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |w| {
        let h = build_heap(&canonical_word(w));
        let k = h.size();
        for x in 1..=k {
            for y in x + 1..=k {
                let j = h.label(x);
                if h.label(y) != j || !h.precedes(x, y) {
                    continue;
                }
                let between = |label: usize| {
                    (1..=k).any(|p| h.label(p) == label && h.precedes(x, p) && h.precedes(p, y))
                };
                ok_or(between(j + 1) && j > 1 && between(j - 1), || {
                    format!("copies {x} and {y} of letter {j} are not separated by {} and {}", j - 1, j + 1)
                })?;
            }
        }
        Ok(())
    }))
}

fn boolean_core_check(n: usize, exec: Exec, bounds: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let b = Bounds {
        max_ideal_length: bounds.max_ideal_length.max(n * n / 4),
        ..*bounds
    };
    Ok(sweep(&fc_permutations(n), exec, |w| {
        let d = boolean_core(w).map_err(|e| e.to_string())?;
        let core = &d.core;
        ok_or(is_boolean(core), || format!("core {core} is not boolean"))?;
        ok_or(core.support() == w.support(), || {
            format!("core {core} has support {:?}, w has {:?}", core.support(), w.support())
        })?;
        let product = core.compose(&d.remainder).map_err(|e| e.to_string())?;
        ok_or(
            &product == w && core.length() + d.remainder.length() == w.length(),
            || format!("{core} · {} is not a length-additive factorization", d.remainder),
        )?;
        let ideal = crate::weak_order::principal_ideal(w, &b).map_err(|e| e.to_string())?;
        let candidates: Vec<&Permutation> = ideal
            .iter()
            .filter(|u| is_boolean(u) && u.support() == w.support())
            .collect();
        ok_or(candidates == vec![core], || {
            format!("boolean elements below w with full support: {candidates:?}")
        })
    }))
}

fn fc_covers(w: &Permutation) -> impl Iterator<Item = (usize, Permutation)> + '_ {
    up_covers(w)
        .into_iter()
        .filter(|e| is_fully_commutative(&e.upper))
        .map(|e| (e.index, e.upper))
}

fn row2_grows(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |v| {
        let pv = rsk(v).p;
        for (i, w) in fc_covers(v) {
            let pw = rsk(&w).p;
            ok_or(
                set(pv.row(2)).is_subset(&set(pw.row(2))) && set(pv.row(1)).is_superset(&set(pw.row(1))),
                || format!("across s_{i}: P(v) = {pv}, P(w) = {pw}"),
            )?;
        }
        Ok(())
    }))
}

fn tableau_change_and_lis(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |v| {
        let pv = rsk(v).p;
        let s = v.as_slice();
        let target = lis(s);
        for (i, w) in fc_covers(v) {
            let pw = rsk(&w).p;
            let changed = pv != pw;
            let uses_both = lis(&without(s, i - 1)) < target && lis(&without(s, i)) < target;
            ok_or(changed == uses_both, || {
                format!("across s_{i}: P changes: {changed}, every LIS uses both: {uses_both}")
            })?;
            if changed {
                ok_or(pw.row(2).len() == pv.row(2).len() + 1, || {
                    format!("across s_{i}: row 2 grows from {} to {}", pv.row(2).len(), pw.row(2).len())
                })?;
            }
        }
        Ok(())
    }))
}

fn core_rows(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |w| {
        let core = boolean_core(w).map_err(|e| e.to_string())?.core;
        let (pc, pw) = (rsk(&core).p, rsk(w).p);
        ok_or(
            set(pc.row(1)).is_superset(&set(pw.row(1))) && set(pc.row(2)).is_subset(&set(pw.row(2))),
            || format!("P(core) = {pc}, P(w) = {pw}"),
        )
    }))
}

/// Everything below `w` in the left weak order, by search along left
/// multiplications that shorten.
fn left_ideal(w: &Permutation) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        for i in 1..u.degree() {
            let x = u.multiply_left(i).expect("index in range");
            if x.length() < u.length() && seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
    }
    seen
}

fn left_right_symmetry(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let all = all_permutations(n);
    Ok(sweep(&all, exec, |w| {
        let below = left_ideal(w);
        let w_inv = w.inverse();
        let w_fc = is_fully_commutative(w);
        let qw = rsk(w).q;
        for v in &all {
            let by_inverse = right_weak_leq(&v.inverse(), &w_inv).map_err(|e| e.to_string())?;
            ok_or(below.contains(v) == by_inverse, || {
                format!("{v}: left ideal membership disagrees with the inverse test")
            })?;
            if by_inverse && w_fc && is_fully_commutative(v) {
                let qv = rsk(v).q;
                ok_or(set(qv.row(2)).is_subset(&set(qw.row(2))), || {
                    format!("{v} is below on the left but Q(v) = {qv}, Q(w) = {qw}")
                })?;
            }
        }
        Ok(())
    }))
}

fn transition_crowds(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |v| {
        let pv = rsk(v).p;
        for (i, w) in fc_covers(v) {
            let in_support = v.support_stats(i).map_err(|e| e.to_string())?.in_support();
            if !in_support || rsk(&w).p == pv {
                continue;
            }
            let report = analyze_transition(v, i).map_err(|e| format!("s_{i}: {e}"))?;
            let verdict = classify(&w).map_err(|e| e.to_string())?;
            ok_or(verdict.is_crowded(), || format!("s_{i}: {w} is uncrowded"))?;
            ok_or(report.w == w, || format!("s_{i}: report names the wrong cover"))?;
        }
        Ok(())
    }))
}

fn core_tableau(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |w| {
        uncrowded_iff_core(w).map(|_| ()).map_err(|e| e.to_string())
    }))
}

fn crowded_filter(n: usize, exec: Exec, bounds: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let poset = build_fc_poset(n, bounds)?;
    let classes = poset.classifications();
    let crowded = |w: &Permutation| classes[poset.index_of(w).expect("in poset")].is_crowded();
    Ok(sweep(&poset.edges, exec, |e| {
        ok_or(!crowded(&e.lower) || crowded(&e.upper), || {
            format!("{} is crowded, {} above it is not", e.lower, e.upper)
        })
    }))
}

fn non_bumping_descent(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |w| {
        let r = rsk(w);
        for d in w.descents() {
            if r.trace.row1_bumper_of(w.get(d)) == Some(w.get(d + 1)) {
                continue;
            }
            let pv = rsk(&w.multiply_right(d).expect("descent in range")).p;
            ok_or(pv == r.p, || format!("sorting descent {d} changes P"))?;
        }
        Ok(())
    }))
}

fn small_neighbor_descent(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |w| {
        let p = rsk(w).p;
        for d in w.descents() {
            if d + 2 > n || w.get(d + 2) > w.get(d) {
                continue;
            }
            let pv = rsk(&w.multiply_right(d).expect("descent in range")).p;
            ok_or(pv == p, || format!("sorting descent {d} changes P"))?;
        }
        Ok(())
    }))
}

fn adjacent_bumps(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&minimal_crowded(n, exec), exec, |w| {
        let r = rsk(w);
        for d in 1..n {
            let bumps = r.trace.row1_bumper_of(w.get(d)) == Some(w.get(d + 1));
            ok_or((w.get(d) > w.get(d + 1)) == bumps, || {
                format!("position {d}: descent and adjacent bump disagree")
            })?;
        }
        for &z in r.p.row(2) {
            let p = w.position_of(z);
            ok_or(p < n && r.trace.row1_bumper_of(z) == Some(w.get(p + 1)), || {
                format!("{z} is not bumped by its right neighbor")
            })?;
        }
        Ok(())
    }))
}

fn fixed_ends(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&minimal_crowded(n, exec), exec, |w| {
        let ds = w.descents();
        let (d, d2) = (ds[0], ds[ds.len() - 1]);
        match (1..=n).find(|&p| (p < d || p > d2 + 1) && w.get(p) != p) {
            Some(p) => Err(format!("{p} is not fixed though outside [{d}, {}]", d2 + 1)),
            None => Ok(()),
        }
    }))
}

fn interleaved_row2(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&minimal_crowded(n, exec), exec, |w| {
        let flat: Vec<usize> = z_b_pairs(w).into_iter().flat_map(|(z, b)| [z, b]).collect();
        let start = w.position_of(flat[0]);
        ok_or(
            start + flat.len() - 1 <= n && w.as_slice()[start - 1..start - 1 + flat.len()] == flat[..],
            || format!("{flat:?} is not a factor"),
        )
    }))
}

fn bumper_gap(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&minimal_crowded(n, exec), exec, |w| {
        let pairs = z_b_pairs(w);
        for i in 0..pairs.len().saturating_sub(3) {
            ok_or(pairs[i].0 < pairs[i + 3].1, || {
                format!("z_{} = {} exceeds b_{} = {}", i + 1, pairs[i].0, i + 4, pairs[i + 3].1)
            })?;
        }
        Ok(())
    }))
}

fn inclusion_minimal_crowded_subsets(l: &[usize]) -> Vec<Vec<usize>> {
    let k = l.len();
    let crowded: Vec<Vec<usize>> = (0u32..1 << k)
        .map(|mask| (0..k).filter(|&j| mask & (1 << j) != 0).map(|j| l[j]).collect::<Vec<_>>())
        .filter(|s| is_uncrowded_set(s).is_crowded())
        .collect();
    crowded
        .iter()
        .filter(|s| {
            !crowded
                .iter()
                .any(|t| t.len() < s.len() && t.iter().all(|e| s.contains(e)))
        })
        .cloned()
        .collect()
}

fn unique_minimal_crowded_subset(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&minimal_crowded(n, exec), exec, |w| {
        let row2 = rsk(w).p.row(2).to_vec();
        let top = *row2.last().expect("crowded row is nonempty");
        let minimal = inclusion_minimal_crowded_subsets(&row2);
        ok_or(minimal.len() == 1 && minimal[0].contains(&top), || {
            format!("minimal crowded subsets of {row2:?}: {minimal:?}")
        })?;
        let chosen = minimal_crowded_subset(&row2).map_err(|e| e.to_string())?;
        ok_or(chosen.elements == minimal[0], || {
            format!("chosen subset {:?} differs from {:?}", chosen.elements, minimal[0])
        })
    }))
}

fn minimal_crowded_characterization(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let pattern = perm("415263");
    Ok(sweep(&fc_permutations(n), exec, |w| {
        let direct = is_minimal_crowded_direct(w).map_err(|e| e.to_string())?;
        let oracle = is_minimal_crowded_oracle(w).map_err(|e| e.to_string())?;
        ok_or(direct.minimal == oracle, || {
            format!("direct test says {}, poset says {oracle}: {direct:?}", direct.minimal)
        })?;
        if oracle && n >= 6 {
            // a consecutive 415263 whose second-row letters are its 4, 5, 6
            let row2 = set(rsk(w).p.row(2));
            let occ = consecutive_occurrences(w, &pattern).map_err(|e| e.to_string())?;
            let good = occ.iter().any(|o| {
                let vals = o.values(w);
                let hit: Vec<bool> = vals.iter().map(|v| row2.contains(v)).collect();
                hit == [true, false, true, false, true, false]
            });
            ok_or(good, || "no consecutive 415263 with second-row letters in odd slots".into())?;
        }
        Ok(())
    }))
}

fn fc_downward_closed(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    Ok(sweep(&fc_permutations(n), exec, |w| {
        match down_covers(w).into_iter().find(|e| !is_fully_commutative(&e.lower)) {
            Some(e) => Err(format!("down-cover {} across s_{} contains 321", e.lower, e.index)),
            None => Ok(()),
        }
    }))
}

fn knuth_classes(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let all = all_permutations(n);
    let mut fibers: HashMap<Tableau, BTreeSet<Permutation>> = HashMap::new();
    for w in &all {
        fibers.entry(rsk(w).p).or_default().insert(w.clone());
    }
    Ok(sweep(&all, exec, |w| {
        let class = knuth_class(w);
        let fiber = &fibers[&rsk(w).p];
        ok_or(&class == fiber, || {
            format!("Knuth class has {} elements, fiber of P has {}", class.len(), fiber.len())
        })
    }))
}

fn catalan(n: usize) -> usize {
    // C(2n, n) / (n + 1), built incrementally to stay exact
    (0..n).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn fc_count(n: usize, exec: Exec, _: &Bounds) -> Result<(usize, Option<Counterexample>)> {
    let degrees: Vec<usize> = (1..=n).collect();
    Ok(sweep(&degrees, exec, |&k| {
        let count = all_permutations(k)
            .iter()
            .filter(|w| is_fully_commutative(w))
            .count();
        ok_or(count == catalan(k), || {
            format!("{count} avoiders of 321, Catalan number is {}", catalan(k))
        })
    }))
}

/// Runs the named check at degree `n`.
pub fn run_check(name: &str, n: usize, exec: Exec, bounds: &Bounds) -> Result<CheckReport> {
    let check = find_check(name).ok_or_else(|| Error::Parse {
        token: name.to_string(),
        reason: "unknown check".into(),
    })?;
    check.run(n, exec, bounds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut names = BTreeSet::new();
        for c in registry() {
            assert!(names.insert(c.id));
            for a in c.aliases {
                assert!(names.insert(a), "{a}");
            }
        }
    }

    #[test]
    fn catalan_numbers() {
        let c: Vec<usize> = (0..=9).map(catalan).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }

    #[test]
    fn two_row_tableaux_counts() {
        // number of standard tableaux with at most two rows: central binomials
        let counts: Vec<usize> = (1..=8).map(|n| two_row_tableaux(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 6, 10, 20, 35, 70]);
    }

    #[test]
    fn every_check_passes_at_small_degree() {
        let b = Bounds::default();
        for c in registry() {
            for n in 1..=5 {
                let r = c.run(n, Exec::Sequential, &b).unwrap();
                assert!(r.passed(), "{} at n = {n}: {:?}", c.id, r.counterexample);
            }
        }
    }

    #[test]
    fn modes_give_the_same_report() {
        let b = Bounds::default();
        for c in registry() {
            let n = c.default_n.min(6);
            assert_eq!(
                c.run(n, Exec::Sequential, &b).unwrap(),
                c.run(n, Exec::Parallel, &b).unwrap(),
                "{}",
                c.id
            );
        }
    }

    #[test]
    fn unknown_and_oversized() {
        let b = Bounds::default();
        assert!(matches!(
            run_check("no-such-check", 3, Exec::Sequential, &b),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            run_check("schensted", 10, Exec::Sequential, &b),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(find_check("thm-4.11").is_some());
    }

    #[test]
    fn a_false_statement_is_caught() {
        // sanity check of the sweep plumbing: the first failure in order wins
        let items: Vec<usize> = (0..100).collect();
        let (count, failure) = sweep(&items, Exec::Parallel, |&x| {
            ok_or(x % 7 != 6, || format!("{x}"))
        });
        assert_eq!(count, 100);
        assert_eq!(failure.unwrap().subject, "6");
    }
}
