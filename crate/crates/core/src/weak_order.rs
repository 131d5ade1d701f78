//! The right weak order on `S_n`, its fully commutative subposet and the
//! Knuth relations.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::crowding::{classify, Crowding};
use crate::enumerate::fc_permutations;
use crate::error::{Error, Result};
use crate::patterns::is_fully_commutative;
use crate::perm::Permutation;
use crate::Bounds;

/// `lower ⋖ upper = lower·s_index`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoverEdge {
    pub lower: Permutation,
    pub upper: Permutation,
    pub index: usize,
}

impl std::fmt::Display for CoverEdge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {} (s_{})", self.lower, self.upper, self.index)
    }
}

/// One edge per ascent of `w`.
pub fn up_covers(w: &Permutation) -> Vec<CoverEdge> {
    w.ascents()
        .into_iter()
        .map(|i| CoverEdge {
            lower: w.clone(),
            upper: w.swap_positions(i),
            index: i,
        })
        .collect()
}

/// One edge per descent of `w`.
pub fn down_covers(w: &Permutation) -> Vec<CoverEdge> {
    w.descents()
        .into_iter()
        .map(|i| CoverEdge {
            lower: w.swap_positions(i),
            upper: w.clone(),
            index: i,
        })
        .collect()
}

/// Value pairs `(a, b)` with `a < b` and `b` left of `a`.
fn inversion_set(w: &Permutation) -> BTreeSet<(usize, usize)> {
    let s = w.as_slice();
    let mut out = BTreeSet::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                out.insert((s[j], s[i]));
            }
        }
    }
    out
}

fn same_degree(v: &Permutation, w: &Permutation) -> Result<()> {
    if v.degree() != w.degree() {
        return Err(Error::DegreeMismatch {
            left: v.degree(),
            right: w.degree(),
        });
    }
    Ok(())
}

/// `v <= w` in the right weak order, by containment of inversion sets.
pub fn right_weak_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    same_degree(v, w)?;
    Ok(v.length() <= w.length() && inversion_set(v).is_subset(&inversion_set(w)))
}

/// `v <= w` in the left weak order, i.e. `v⁻¹ <= w⁻¹` in the right order.
pub fn left_weak_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    right_weak_leq(&v.inverse(), &w.inverse())
}

/// Everything below `w` in the right weak order, by breadth-first search
/// along down-covers.
pub fn principal_ideal(w: &Permutation, bounds: &Bounds) -> Result<BTreeSet<Permutation>> {
    let len = w.length();
    if len > bounds.max_ideal_length {
        return Err(Error::BoundExceeded {
            what: "length for an ideal",
            value: len,
            bound: bounds.max_ideal_length,
        });
    }
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        for edge in down_covers(&u) {
            if seen.insert(edge.lower.clone()) {
                queue.push_back(edge.lower);
            }
        }
    }
    Ok(seen)
}

/// The fully commutative elements of `S_n` with every cover between them.
#[derive(Clone, Debug)]
pub struct FcPoset {
    pub n: usize,
    /// Lexicographic in one-line notation.
    pub elements: Vec<Permutation>,
    /// Sorted by the lower element's index, then by reflection index.
    pub edges: Vec<CoverEdge>,
    index: HashMap<Permutation, usize>,
}

impl FcPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &Permutation) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.index.contains_key(w)
    }

    /// Classification of every element, in element order.
    pub fn classifications(&self) -> Vec<Crowding> {
        self.elements
            .iter()
            .map(|w| classify(w).expect("poset elements are fully commutative"))
            .collect()
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            n: self.n,
            nodes: self.elements.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| (e.lower.clone(), e.upper.clone(), e.index))
                .collect(),
        }
    }

    /// Graphviz digraph with edges pointing up. Uncrowded nodes are white,
    /// crowded ones orange, minimal crowded ones red.
    pub fn to_dot(&self) -> String {
        let classes = self.classifications();
        let frontier = frontier_of(self, &classes);
        let minimal: BTreeSet<&Permutation> = frontier.minimal_crowded.iter().collect();
        let mut out = format!("digraph fc_poset_{} {{\n  rankdir=BT;\n  node [style=filled];\n", self.n);
        for (w, c) in self.elements.iter().zip(&classes) {
            let color = if minimal.contains(w) {
                "red"
            } else if c.is_crowded() {
                "orange"
            } else {
                "white"
            };
            let _ = writeln!(out, "  \"{}\" [fillcolor={color}];", w.to_text(true));
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label={}];",
                e.lower.to_text(true),
                e.upper.to_text(true),
                e.index
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Edge-list form of an [`FcPoset`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub n: usize,
    pub nodes: Vec<Permutation>,
    pub edges: Vec<(Permutation, Permutation, usize)>,
}

/// Builds the poset of fully commutative elements of `S_n`, checking along
/// the way that every down-cover of an element is again an element.
pub fn build_fc_poset(n: usize, bounds: &Bounds) -> Result<FcPoset> {
    bounds.check_degree(n)?;
    let elements = fc_permutations(n);
    let index: HashMap<Permutation, usize> = elements
        .iter()
        .enumerate()
        .map(|(k, w)| (w.clone(), k))
        .collect();
    let mut edges = Vec::new();
    for w in &elements {
        for e in down_covers(w) {
            if !index.contains_key(&e.lower) {
                return Err(Error::Invariant {
                    subject: w.to_string(),
                    detail: format!("down-cover {} is not fully commutative", e.lower),
                });
            }
        }
        edges.extend(up_covers(w).into_iter().filter(|e| index.contains_key(&e.upper)));
    }
    Ok(FcPoset {
        n,
        elements,
        edges,
        index,
    })
}

/// Maximal uncrowded and minimal crowded elements of the poset, each in
/// lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frontier {
    pub maximal_uncrowded: Vec<Permutation>,
    pub minimal_crowded: Vec<Permutation>,
}

pub fn uncrowded_frontier(n: usize, bounds: &Bounds) -> Result<Frontier> {
    let poset = build_fc_poset(n, bounds)?;
    let classes = poset.classifications();
    Ok(frontier_of(&poset, &classes))
}

/// Frontier from precomputed classifications (indexed like the elements).
pub fn frontier_of(poset: &FcPoset, classes: &[Crowding]) -> Frontier {
    let crowded = |w: &Permutation| classes[poset.index[w]].is_crowded();
    // maximal uncrowded: no uncrowded element above; minimal crowded: no
    // crowded element below
    let mut blocked = vec![false; poset.len()];
    for e in &poset.edges {
        match (crowded(&e.lower), crowded(&e.upper)) {
            (false, false) => blocked[poset.index[&e.lower]] = true,
            (true, true) => blocked[poset.index[&e.upper]] = true,
            _ => {}
        }
    }
    let mut frontier = Frontier::default();
    for (w, &b) in poset.elements.iter().zip(&blocked) {
        match (crowded(w), b) {
            (true, false) => frontier.minimal_crowded.push(w.clone()),
            (false, false) => frontier.maximal_uncrowded.push(w.clone()),
            _ => {}
        }
    }
    frontier
}

/// Crowded, with every down-cover uncrowded. Down-covers of a fully
/// commutative element are themselves fully commutative.
pub fn is_minimal_crowded_oracle(w: &Permutation) -> Result<bool> {
    if !classify(w)?.is_crowded() {
        return Ok(false);
    }
    for e in down_covers(w) {
        if classify(&e.lower)?.is_crowded() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Permutations one Knuth move away: a consecutive `312 ↔ 132` or
/// `231 ↔ 213` exchange. Sorted and without repeats.
pub fn knuth_neighbors(w: &Permutation) -> Vec<Permutation> {
    let s = w.as_slice();
    let mut out = BTreeSet::new();
    for j in 0..s.len().saturating_sub(2) {
        let (a, b, c) = (s[j], s[j + 1], s[j + 2]);
        // 312 and 132: the two larger letters flank or lead, the middle
        // value sits last; swap the first two.
        if (a > c && c > b) || (b > c && c > a) {
            out.insert(w.swap_positions(j + 1));
        }
        // 231 and 213: the middle value leads; swap the last two.
        if (b > a && a > c) || (c > a && a > b) {
            out.insert(w.swap_positions(j + 2));
        }
    }
    out.into_iter().collect()
}

/// The Knuth class of `w`, by breadth-first search over Knuth moves.
pub fn knuth_class(w: &Permutation) -> BTreeSet<Permutation> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(u) = queue.pop_front() {
        for x in knuth_neighbors(&u) {
            if seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
    }
    seen
}

/// Whether all down-covers of a fully commutative `w` are fully commutative.
pub fn down_covers_stay_fc(w: &Permutation) -> bool {
    down_covers(w).iter().all(|e| is_fully_commutative(&e.lower))
}
