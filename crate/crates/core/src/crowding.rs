//! Crowded and uncrowded sets, tableaux and permutations.
//!
//! A set `L` of integers is crowded when some window `[y, y + 2x]` with
//! `x > 0` holds more than `x + 1` of its elements. A fully commutative
//! permutation is crowded when the second row of its insertion tableau is.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::{all_occurrences, is_fully_commutative, order_isomorphic};
use crate::perm::{perm, Permutation};
use crate::rsk::{rsk, RskResult};
use crate::words::boolean_core;

/// A window `[y, y + 2x]` holding more than `x + 1` elements of the set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrowdedWitness {
    pub x: usize,
    pub y: usize,
    /// `[y, y + 2x] ∩ L`, ascending.
    pub window: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Crowding {
    Uncrowded,
    Crowded { witness: CrowdedWitness },
}

impl Crowding {
    pub fn is_crowded(&self) -> bool {
        matches!(self, Crowding::Crowded { .. })
    }

    pub fn witness(&self) -> Option<&CrowdedWitness> {
        match self {
            Crowding::Crowded { witness } => Some(witness),
            Crowding::Uncrowded => None,
        }
    }
}

/// `S_{x,y}`: `{y, y+1, y+2}` for `x = 1`, otherwise
/// `{y, y+1, y+3, y+5, ..., y+2x-1, y+2x}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalCrowdedSet {
    pub x: usize,
    pub y: usize,
    pub elements: Vec<usize>,
}

pub fn s_xy(x: usize, y: usize) -> Vec<usize> {
    assert!(x >= 1);
    if x == 1 {
        return vec![y, y + 1, y + 2];
    }
    let mut out = vec![y, y + 1];
    out.extend((1..x).map(|k| y + 2 * k + 1));
    out.push(y + 2 * x);
    out
}

fn window(set: &BTreeSet<usize>, lo: usize, hi: usize) -> Vec<usize> {
    set.range(lo..=hi).copied().collect()
}

/// Scans windows `[y, y + 2x]` with `min(L) <= y` and `y + 2x <= max(L)`,
/// by increasing `x` and then increasing `y`, so the witness is a shortest
/// violating window.
///
/// Any violating window can be tightened to one inside that range: pushing
/// `y` up to the first element loses nothing, and a window overshooting
/// `max(L)` can drop its top two slots while keeping the surplus.
pub fn is_uncrowded_set(l: &[usize]) -> Crowding {
    let set: BTreeSet<usize> = l.iter().copied().collect();
    let (Some(&lo), Some(&hi)) = (set.first(), set.last()) else {
        return Crowding::Uncrowded;
    };
    for x in 1..=(hi - lo) / 2 {
        for y in lo..=hi - 2 * x {
            let win = window(&set, y, y + 2 * x);
            if win.len() > x + 1 {
                return Crowding::Crowded {
                    witness: CrowdedWitness { x, y, window: win },
                };
            }
        }
    }
    Crowding::Uncrowded
}

/// Crowdedness of `Row₂(P(w))` for a fully commutative `w`.
pub fn classify(w: &Permutation) -> Result<Crowding> {
    require_fc(w)?;
    Ok(is_uncrowded_set(rsk(w).p.row(2)))
}

fn require_fc(w: &Permutation) -> Result<()> {
    if is_fully_commutative(w) {
        Ok(())
    } else {
        Err(Error::NotFullyCommutative(w.to_string()))
    }
}

/// An inclusion-minimal crowded subset of `l`, of the form `S_{x,y}`.
///
/// Among several candidates the one with the largest `y` wins, then the
/// smallest `x`.
pub fn minimal_crowded_subset(l: &[usize]) -> Result<MinimalCrowdedSet> {
    let set: BTreeSet<usize> = l.iter().copied().collect();
    let Some(&hi) = set.last() else {
        return Err(Error::Uncrowded);
    };
    for &y in set.iter().rev() {
        for x in 1..=(hi - y) / 2 {
            let elements = s_xy(x, y);
            if elements.iter().all(|e| set.contains(e)) {
                return Ok(MinimalCrowdedSet { x, y, elements });
            }
        }
    }
    if is_uncrowded_set(l).is_crowded() {
        return Err(Error::Invariant {
            subject: format!("{l:?}"),
            detail: "crowded set contains no S_{x,y}".into(),
        });
    }
    Err(Error::Uncrowded)
}

/// Whether `w` is uncrowded, cross-checked against the equality of its
/// insertion tableau with that of its boolean core.
pub fn uncrowded_iff_core(w: &Permutation) -> Result<bool> {
    let uncrowded = !classify(w)?.is_crowded();
    let core = boolean_core(w)?.core;
    let same_tableau = rsk(&core).p == rsk(w).p;
    if uncrowded != same_tableau {
        return Err(Error::Invariant {
            subject: w.to_string(),
            detail: format!(
                "uncrowded = {uncrowded} but P(core) == P(w) is {same_tableau} (core {core})"
            ),
        });
    }
    Ok(uncrowded)
}

/// The full record of a cover `v ⋖ w = v·s_i` that keeps the support of `v`
/// but changes the insertion tableau.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionReport {
    pub v: Permutation,
    pub w: Permutation,
    pub i: usize,
    /// `M = max{v(j) : j <= i}`.
    #[serde(rename = "M")]
    pub max_prefix: usize,
    /// `m = min{v(j) : j >= i + 1}`.
    #[serde(rename = "m")]
    pub min_suffix: usize,
    /// Positions of `M, v(i), v(i+1), m`, which form a 3142 pattern in `v`.
    pub pattern3142: [usize; 4],
    /// Values strictly between `M` and `v(i)` in `v` (increasing).
    pub a_run: Vec<usize>,
    /// Values strictly between `v(i+1)` and `m` in `v` (increasing).
    pub e_run: Vec<usize>,
    /// The unique value in `Row₁(P(v)) ∩ Row₂(P(w))`.
    pub e: usize,
    /// `e_0 = v(i+1), e_1, ..., e_{r+1}`.
    pub e_seq: Vec<usize>,
    /// `t_0 = m, ..., t_r` with `t_k` bumping `e_k` in `P(v)`.
    pub t_seq: Vec<usize>,
    pub r: usize,
    /// The interval `[M, e]`.
    pub interval: (usize, usize),
    pub row2_v: Vec<usize>,
    pub row2_w: Vec<usize>,
    /// `|[M, e] ∩ Row₂(P(w))|`, at least `r + 3`.
    pub count_in_interval: usize,
    pub witness: CrowdedWitness,
}

fn broken(v: &Permutation, i: usize, detail: impl Into<String>) -> Error {
    Error::Invariant {
        subject: format!("v = {v}, i = {i}"),
        detail: detail.into(),
    }
}

fn ensure(cond: bool, v: &Permutation, i: usize, detail: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(broken(v, i, detail))
    }
}

/// Analyzes the cover `v ⋖ w = v·s_i` between fully commutative
/// permutations with `i ∈ supp(v)` and `P(v) != P(w)`, extracting the
/// window that makes `w` crowded.
///
/// Each structural step of the argument is checked as it is computed and a
/// failure is reported as [`Error::Invariant`] naming the step.
pub fn analyze_transition(v: &Permutation, i: usize) -> Result<TransitionReport> {
    let n = v.degree();
    let w = v.multiply_right(i)?;
    let pre = |msg: &str| Err(Error::Precondition(msg.to_string()));
    if !is_fully_commutative(v) {
        return pre("v is not fully commutative");
    }
    if v.get(i) > v.get(i + 1) {
        return pre("v·s_i is shorter than v");
    }
    if !is_fully_commutative(&w) {
        return pre("v·s_i is not fully commutative");
    }
    let stats = v.support_stats(i)?;
    if !stats.in_support() {
        return pre("i is not in the support of v");
    }
    let rv: RskResult = rsk(v);
    let rw: RskResult = rsk(&w);
    if rv.p == rw.p {
        return pre("P(v) equals P(v·s_i)");
    }

    let (big_m, small_m) = (stats.max_prefix, stats.min_suffix);
    let (vi, vi1) = (v.get(i), v.get(i + 1));
    let pos_big = v.position_of(big_m);
    let pos_small = v.position_of(small_m);

    // 3142 pattern M v(i) v(i+1) m
    ensure(
        pos_big < i && pos_small > i + 1,
        v,
        i,
        "M must sit left of v(i) and m right of v(i+1)",
    )?;
    ensure(
        vi < small_m && small_m < big_m && big_m < vi1,
        v,
        i,
        "M v(i) v(i+1) m is not a 3142 pattern",
    )?;

    // increasing runs between M and v(i), and between v(i+1) and m
    let a_run: Vec<usize> = (pos_big + 1..i).map(|p| v.get(p)).collect();
    let e_run: Vec<usize> = (i + 2..pos_small).map(|p| v.get(p)).collect();
    ensure(
        a_run.windows(2).all(|p| p[0] < p[1]) && a_run.last().is_none_or(|&a| a < vi),
        v,
        i,
        "values between M and v(i) are not an increasing run below v(i)",
    )?;
    ensure(
        e_run.windows(2).all(|p| p[0] < p[1]) && e_run.first().is_none_or(|&e| e > vi1),
        v,
        i,
        "values between v(i+1) and m are not an increasing run above v(i+1)",
    )?;
    ensure(
        !a_run.is_empty() && !e_run.is_empty(),
        v,
        i,
        "both runs must be nonempty when the tableau changes",
    )?;

    // M is bumped by an element of the a-run, identically in P(v) and P(w)
    let m_bumper_v = rv.trace.row1_bumper_of(big_m);
    ensure(
        m_bumper_v.is_some_and(|b| a_run.contains(&b)) && m_bumper_v == rw.trace.row1_bumper_of(big_m),
        v,
        i,
        "M is not bumped by the same run element in P(v) and P(w)",
    )?;

    // m bumps v(i+1) in P(v)
    ensure(
        rv.trace.row1_bumper_of(vi1) == Some(small_m),
        v,
        i,
        "v(i+1) is not bumped by m in P(v)",
    )?;

    // the unique e in Row1(P(v)) ∩ Row2(P(w))
    let row1_v: BTreeSet<usize> = rv.p.row(1).iter().copied().collect();
    let row2_v: Vec<usize> = rv.p.row(2).to_vec();
    let row2_w: Vec<usize> = rw.p.row(2).to_vec();
    let shared: Vec<usize> = row2_w.iter().copied().filter(|z| row1_v.contains(z)).collect();
    ensure(
        shared.len() == 1,
        v,
        i,
        "Row1(P(v)) ∩ Row2(P(w)) is not a single value",
    )?;
    let e = shared[0];
    ensure(
        v.position_of(e) > i + 1,
        v,
        i,
        "e does not occur after v(i+1)",
    )?;
    ensure(
        !rv.trace.bumps_something(e),
        v,
        i,
        "e bumps something in P(v)",
    )?;

    // e_0 = v(i+1); e_k is the first value inserted into column c_v(v(i+1)) + k
    let c0 = rv.trace.first_column(vi1);
    let first_in_column = |c: usize| {
        v.as_slice()
            .iter()
            .copied()
            .find(|&q| rv.trace.first_column(q) == c)
    };
    for (k, &ek) in e_run.iter().enumerate() {
        ensure(
            rv.trace.first_column(ek) == c0 + k + 1,
            v,
            i,
            "run after v(i+1) does not occupy consecutive columns",
        )?;
    }
    let e_k = |k: usize| -> Option<usize> {
        match k {
            0 => Some(vi1),
            k if k <= e_run.len() => Some(e_run[k - 1]),
            k => first_in_column(c0 + k),
        }
    };
    let row2_v_set: BTreeSet<usize> = row2_v.iter().copied().collect();
    let mut r = 0;
    while let Some(next) = e_k(r + 1) {
        if !row2_v_set.contains(&next) {
            break;
        }
        r += 1;
    }
    let Some(e_next) = e_k(r + 1) else {
        return Err(broken(v, i, "e_{r+1} does not exist"));
    };
    let e_seq: Vec<usize> = (0..=r + 1).map(|k| e_k(k).unwrap()).collect();

    // t_k bumps e_k in P(v)
    let t_seq: Vec<usize> = e_seq[..=r]
        .iter()
        .map(|&ek| rv.trace.row1_bumper_of(ek))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| broken(v, i, "some e_k with k <= r is never bumped"))?;
    ensure(
        t_seq[0] == small_m,
        v,
        i,
        "t_0 differs from m",
    )?;
    ensure(
        t_seq.windows(2).all(|p| p[0] < p[1])
            && t_seq
                .iter()
                .map(|&t| v.position_of(t))
                .collect::<Vec<_>>()
                .windows(2)
                .all(|p| p[0] < p[1]),
        v,
        i,
        "t_0, ..., t_r are not increasing left to right",
    )?;
    ensure(
        t_seq
            .iter()
            .all(|&t| rv.trace.first_column(t) == rw.trace.first_column(t)),
        v,
        i,
        "some t_k changes insertion column between v and w",
    )?;

    // e_{r+1} is e, and it follows e_r immediately
    ensure(
        row2_w.contains(&e_next) && e_next == e,
        v,
        i,
        "e_{r+1} is not the value e",
    )?;
    let e_r = e_seq[r];
    ensure(e == e_r + 1, v, i, "e is not e_r + 1")?;

    // counting inequality: e_r - M <= 2r + 1
    if big_m < n {
        ensure(
            v.position_of(big_m + 1) > i,
            v,
            i,
            "M + 1 lies left of v(i+1)",
        )?;
    }
    let e_set: BTreeSet<usize> = e_seq[..=r].iter().copied().collect();
    let fillers: Vec<usize> = (big_m + 1..=e_r).filter(|q| !e_set.contains(q)).collect();
    ensure(
        fillers
            .iter()
            .all(|&q| v.position_of(q) > i && row1_v.contains(&q)),
        v,
        i,
        "a value of [M+1, e_r] outside the e-sequence is not a late row-1 value",
    )?;
    ensure(e_r <= big_m + 2 * r + 1, v, i, "e_r - M exceeds 2r + 1")?;

    // the window [M, e]
    let interval_len = e - big_m + 1;
    ensure(interval_len <= 2 * r + 3, v, i, "|[M, e]| exceeds 2r + 3")?;
    ensure(
        row2_v_set.contains(&big_m) && e_seq[..=r].iter().all(|z| row2_v_set.contains(z)),
        v,
        i,
        "{M, e_0, ..., e_r} is not contained in Row2(P(v))",
    )?;
    let row2_w_set: BTreeSet<usize> = row2_w.iter().copied().collect();
    let in_window = window(&row2_w_set, big_m, e);
    let count_in_interval = in_window.len();
    ensure(
        count_in_interval >= r + 3,
        v,
        i,
        "[M, e] holds fewer than r + 3 values of Row2(P(w))",
    )?;
    let x = (e - big_m).div_ceil(2);
    let witness = CrowdedWitness {
        x,
        y: big_m,
        window: window(&row2_w_set, big_m, big_m + 2 * x),
    };
    ensure(
        witness.window.len() > x + 1,
        v,
        i,
        "the window [M, e] does not certify crowdedness",
    )?;

    Ok(TransitionReport {
        v: v.clone(),
        w,
        i,
        max_prefix: big_m,
        min_suffix: small_m,
        pattern3142: [pos_big, i, i + 1, pos_small],
        a_run,
        e_run,
        e,
        e_seq,
        t_seq,
        r,
        interval: (big_m, e),
        row2_v,
        row2_w,
        count_in_interval,
        witness,
    })
}

/// Per-condition outcome of the direct test for minimal crowdedness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalCrowdedReport {
    pub minimal: bool,
    /// First descent `d` and `k`, when the descents are `{d, d+2, ..., d+2k}`.
    pub d: Option<usize>,
    pub k: Option<usize>,
    /// Descents are `{d, d+2, ..., d+2k}` with `k >= 2`.
    pub alternating_descents: bool,
    /// `{w(d), w(d+2), ..., w(d+2k)}` is crowded.
    pub crowded_descent_tops: bool,
    /// `w` fixes everything outside `[d, d+2k+1]`.
    pub fixes_outside: bool,
    /// 415263 occurs and every occurrence is consecutive.
    pub consecutive_415263: bool,
    /// Each window `w(d+2i) ... w(d+2i+5)`, `0 <= i <= k-2`, is a 415263 or
    /// 315264 pattern.
    pub windows_415263_or_315264: bool,
    pub row2: Vec<usize>,
}

/// Decides minimality among crowded permutations from descents and
/// patterns alone, without looking at the weak order.
pub fn is_minimal_crowded_direct(w: &Permutation) -> Result<MinimalCrowdedReport> {
    require_fc(w)?;
    let n = w.degree();
    let descents = w.descents();
    let shape = match (descents.first(), descents.last()) {
        (Some(&d), Some(&last))
            if descents.windows(2).all(|p| p[1] == p[0] + 2) && last - d >= 4 =>
        {
            Some((d, (last - d) / 2))
        }
        _ => None,
    };
    let alternating_descents = shape.is_some();

    let (crowded_descent_tops, fixes_outside, windows_415263_or_315264) = match shape {
        Some((d, k)) => {
            let tops: Vec<usize> = (0..=k).map(|j| w.get(d + 2 * j)).collect();
            let crowded = is_uncrowded_set(&tops).is_crowded();
            let fixes = (1..=n)
                .filter(|&p| p < d || p > d + 2 * k + 1)
                .all(|p| w.get(p) == p);
            let (p1, p2) = (perm("415263"), perm("315264"));
            let windows = (0..=k - 2).all(|j| {
                let start = d + 2 * j;
                let win = &w.as_slice()[start - 1..start + 5];
                order_isomorphic(win, &p1) || order_isomorphic(win, &p2)
            });
            (crowded, fixes, windows)
        }
        None => (false, false, false),
    };

    let consecutive_415263 = n >= 6 && {
        let occ = all_occurrences(w, &perm("415263"))?;
        !occ.is_empty() && occ.iter().all(|o| o.is_consecutive())
    };

    Ok(MinimalCrowdedReport {
        minimal: alternating_descents
            && crowded_descent_tops
            && fixes_outside
            && consecutive_415263
            && windows_415263_or_315264,
        d: shape.map(|s| s.0),
        k: shape.map(|s| s.1),
        alternating_descents,
        crowded_descent_tops,
        fixes_outside,
        consecutive_415263,
        windows_415263_or_315264,
        row2: rsk(w).p.row(2).to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::fc_permutations;

    /// Unbounded reference scan: every `y` from well below the set to its
    /// maximum and every `x` up to the span of the set.
    fn crowded_by_wide_scan(l: &[usize]) -> bool {
        let Some(&hi) = l.iter().max() else {
            return false;
        };
        let span = hi + 2;
        (0..=hi + 2).any(|y| {
            (1..=span).any(|x| l.iter().filter(|&&e| e >= y && e <= y + 2 * x).count() > x + 1)
        })
    }

    fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
        (0u32..1 << n).map(move |mask| (1..=n).filter(|&e| mask & (1 << (e - 1)) != 0).collect())
    }

    #[test]
    fn set_examples() {
        assert_eq!(is_uncrowded_set(&[3, 5, 6]), Crowding::Uncrowded);
        let c = is_uncrowded_set(&[4, 5, 6]);
        let wit = c.witness().unwrap();
        assert_eq!((wit.x, wit.y), (1, 4));
        assert_eq!(wit.window, vec![4, 5, 6]);
        assert_eq!(is_uncrowded_set(&[]), Crowding::Uncrowded);
        assert!(is_uncrowded_set(&[6, 7, 8]).is_crowded());
    }

    #[test]
    fn bounded_scan_matches_wide_scan() {
        for l in subsets(10) {
            assert_eq!(is_uncrowded_set(&l).is_crowded(), crowded_by_wide_scan(&l), "{l:?}");
        }
    }

    #[test]
    fn s_xy_shapes() {
        assert_eq!(s_xy(1, 4), vec![4, 5, 6]);
        assert_eq!(s_xy(2, 1), vec![1, 2, 4, 5]);
        assert_eq!(s_xy(3, 1), vec![1, 2, 4, 6, 7]);
        for x in 1..6 {
            let s = s_xy(x, 3);
            assert_eq!(s.len(), x + 2);
            assert!(is_uncrowded_set(&s).is_crowded());
        }
    }

    #[test]
    fn minimal_subset_examples() {
        let m = minimal_crowded_subset(&[4, 6, 7, 8]).unwrap();
        assert_eq!((m.x, m.y, m.elements.clone()), (1, 6, vec![6, 7, 8]));
        let m = minimal_crowded_subset(&[4, 5, 6]).unwrap();
        assert_eq!((m.x, m.y), (1, 4));
        assert_eq!(minimal_crowded_subset(&[3, 5, 6]), Err(Error::Uncrowded));
        assert_eq!(minimal_crowded_subset(&[]), Err(Error::Uncrowded));
    }

    #[test]
    fn minimal_subset_is_minimal_under_removal() {
        for l in subsets(12) {
            if !is_uncrowded_set(&l).is_crowded() {
                continue;
            }
            let m = minimal_crowded_subset(&l).unwrap();
            assert!(m.elements.iter().all(|e| l.contains(e)));
            assert_eq!(m.elements, s_xy(m.x, m.y));
            assert!(is_uncrowded_set(&m.elements).is_crowded());
            for skip in 0..m.elements.len() {
                let smaller: Vec<usize> = m
                    .elements
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &e)| e)
                    .collect();
                assert!(!is_uncrowded_set(&smaller).is_crowded(), "{l:?} {m:?}");
            }
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&perm("41623785")).unwrap(), Crowding::Uncrowded);
        let c = classify(&perm("41627385")).unwrap();
        assert_eq!(c.witness().unwrap().window, vec![6, 7, 8]);
        assert_eq!(classify(&Permutation::identity(4)).unwrap(), Crowding::Uncrowded);
        assert!(matches!(
            classify(&perm("321")),
            Err(Error::NotFullyCommutative(_))
        ));
    }

    #[test]
    fn crowding_json_shape() {
        let c = classify(&perm("41627385")).unwrap();
        let json = serde_json::to_value(&c).unwrap();
        assert_eq!(json["verdict"], "crowded");
        assert_eq!(json["witness"]["window"], serde_json::json!([6, 7, 8]));
        let back: Crowding = serde_json::from_value(json).unwrap();
        assert_eq!(back, c);
        let u = serde_json::to_value(Crowding::Uncrowded).unwrap();
        assert_eq!(u, serde_json::json!({"verdict": "uncrowded"}));
    }

    #[test]
    fn core_criterion_examples() {
        assert!(uncrowded_iff_core(&perm("41623785")).unwrap());
        assert_eq!(rsk(&perm("41263785")).p, rsk(&perm("41623785")).p);
        assert!(!uncrowded_iff_core(&perm("41627385")).unwrap());
        for w in fc_permutations(6) {
            if crate::patterns::is_boolean(&w) {
                assert!(uncrowded_iff_core(&w).unwrap());
            }
        }
    }

    #[test]
    fn transition_example() {
        let t = analyze_transition(&perm("41623785"), 5).unwrap();
        assert_eq!(t.w, perm("41627385"));
        assert_eq!((t.max_prefix, t.min_suffix), (6, 5));
        assert_eq!(t.pattern3142, [3, 5, 6, 8]);
        let vals: Vec<usize> = t.pattern3142.iter().map(|&p| t.v.get(p)).collect();
        assert_eq!(vals, vec![6, 3, 7, 5]);
        assert_eq!(t.a_run, vec![2]);
        assert_eq!(t.e_run, vec![8]);
        assert_eq!(t.e, 8);
        assert_eq!(t.r, 0);
        assert_eq!(t.t_seq, vec![5]);
        assert_eq!(t.e_seq, vec![7, 8]);
        assert_eq!(t.interval, (6, 8));
        assert_eq!(t.count_in_interval, 3);
        assert_eq!(t.count_in_interval, t.r + 3);
        assert_eq!(t.witness.window, vec![6, 7, 8]);
    }

    #[test]
    fn transition_preconditions() {
        let id = Permutation::identity(5);
        for i in 1..5 {
            assert!(matches!(
                analyze_transition(&id, i),
                Err(Error::Precondition(_))
            ));
        }
        // descent: the cover goes down
        assert!(matches!(
            analyze_transition(&perm("41627385"), 1),
            Err(Error::Precondition(_))
        ));
        // tableau unchanged
        assert!(matches!(
            analyze_transition(&perm("41263785"), 3),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            analyze_transition(&perm("321"), 1),
            Err(Error::Precondition(_))
        ));
        assert!(analyze_transition(&perm("123"), 3).is_err());
    }

    #[test]
    fn descent_tops_can_be_crowded_in_an_uncrowded_permutation() {
        let w = perm("2516374");
        assert!(!classify(&w).unwrap().is_crowded());
        let r = is_minimal_crowded_direct(&w).unwrap();
        assert!(r.crowded_descent_tops);
        assert!(!r.fixes_outside);
        assert!(!r.minimal);
    }

    #[test]
    fn minimal_direct_example() {
        let r = is_minimal_crowded_direct(&perm("41627385")).unwrap();
        assert!(r.minimal);
        assert_eq!((r.d, r.k), (Some(1), Some(3)));
        assert!(r.alternating_descents);
        assert!(r.crowded_descent_tops);
        assert!(r.fixes_outside);
        assert!(r.consecutive_415263);
        assert!(r.windows_415263_or_315264);
        assert_eq!(r.row2, vec![4, 6, 7, 8]);
    }

    #[test]
    fn uncrowded_is_never_minimal_crowded() {
        for w in fc_permutations(7) {
            if !classify(&w).unwrap().is_crowded() {
                let r = is_minimal_crowded_direct(&w).unwrap();
                assert!(!r.minimal);
                // with (a) and (c), Row2 is exactly the set of descent tops
                assert!(
                    !(r.alternating_descents && r.crowded_descent_tops && r.fixes_outside),
                    "{w} {r:?}"
                );
            }
        }
    }
}
