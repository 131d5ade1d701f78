//! Reduced words, commutation classes, heaps and boolean cores.
//!
//! A word `[u_1 ... u_l]` stands for the product `s_{u_1} ··· s_{u_l}`.
//! Evaluating it from the identity applies the position swaps in order, so
//! every prefix of a reduced word of `w` is a reduced word of an element
//! below `w` in the right weak order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::patterns::is_fully_commutative;
use crate::perm::Permutation;
use crate::Bounds;

/// A reduced word: a sequence of reflection indices whose product has
/// length equal to the number of letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    /// Validates that `letters` is a reduced word in `S_n`.
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if is_reduced(&letters, n)? {
            Ok(ReducedWord { letters })
        } else {
            Err(Error::NotReduced)
        }
    }

    fn from_vec_unchecked(letters: Vec<usize>) -> Self {
        ReducedWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The product in `S_n`.
    pub fn evaluate(&self, n: usize) -> Result<Permutation> {
        evaluate_word(&self.letters, n)
    }

    pub fn has_distinct_letters(&self) -> bool {
        let set: BTreeSet<_> = self.letters.iter().collect();
        set.len() == self.letters.len()
    }

    /// Whether a factor `i(i+1)i` (`rising = true`) or `(i+1)i(i+1)` occurs.
    pub fn has_braid_factor(&self, rising: bool) -> bool {
        self.letters.windows(3).any(|f| {
            f[0] == f[2]
                && if rising {
                    f[1] == f[0] + 1
                } else {
                    f[1] + 1 == f[0]
                }
        })
    }
}

impl fmt::Display for ReducedWord {
    /// Digits run together when every letter is below ten, commas otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.letters.iter().all(|&l| l <= 9);
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 && !compact {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Parses letters without checking reducedness; use [`ReducedWord::new`]
/// on the result's letters when the degree is known.
pub fn parse_letters(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let tokens: Vec<&str> = if s.contains(',') {
        s.split(',').map(str::trim).collect()
    } else {
        s.char_indices().map(|(k, c)| &s[k..k + c.len_utf8()]).collect()
    };
    tokens
        .into_iter()
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                token: t.to_string(),
                reason: "not a reflection index".into(),
            })
        })
        .collect()
}

impl FromStr for ReducedWord {
    type Err = Error;

    /// The degree is taken to be one more than the largest letter.
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        let n = letters.iter().copied().max().unwrap_or(0) + 1;
        ReducedWord::new(letters, n)
    }
}

impl Serialize for ReducedWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ReducedWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The product `s_{letters[0]} ··· s_{letters[l-1]}` in `S_n`.
pub fn evaluate_word(letters: &[usize], n: usize) -> Result<Permutation> {
    let mut image: Vec<usize> = (1..=n.max(1)).collect();
    for &i in letters {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                degree: n,
            });
        }
        image.swap(i - 1, i);
    }
    Ok(Permutation::from_vec_unchecked(image))
}

pub fn is_reduced(letters: &[usize], n: usize) -> Result<bool> {
    Ok(evaluate_word(letters, n)?.length() == letters.len())
}

/// The lexicographically least reduced word of `w`.
///
/// Built greedily: the first letter is the smallest left descent, i.e. the
/// smallest `i` with `i + 1` to the left of `i` in one-line notation.
pub fn canonical_word(w: &Permutation) -> ReducedWord {
    let mut cur = w.clone();
    let mut letters = Vec::with_capacity(w.length());
    loop {
        let inv = cur.inverse();
        let Some(i) = (1..cur.degree()).find(|&i| inv.get(i) > inv.get(i + 1)) else {
            break;
        };
        letters.push(i);
        cur = cur.multiply_left(i).expect("index in range");
    }
    ReducedWord::from_vec_unchecked(letters)
}

/// A reduced word obtained by repeatedly peeling the smallest right descent.
pub fn peeled_word(w: &Permutation) -> ReducedWord {
    let mut cur = w.clone();
    let mut rev = Vec::with_capacity(w.length());
    while let Some(&d) = cur.descents().first() {
        rev.push(d);
        cur = cur.swap_positions(d);
    }
    rev.reverse();
    ReducedWord::from_vec_unchecked(rev)
}

/// The full set `R(w)`, generated by peeling right descents recursively.
pub fn all_reduced_words(w: &Permutation, bounds: &Bounds) -> Result<BTreeSet<ReducedWord>> {
    let len = w.length();
    if len > bounds.max_word_length {
        return Err(Error::BoundExceeded {
            what: "length",
            value: len,
            bound: bounds.max_word_length,
        });
    }
    let mut out = BTreeSet::new();
    let mut suffix = vec![0; len];
    peel_all(w.as_slice().to_vec(), len, &mut suffix, &mut out);
    Ok(out)
}

fn peel_all(
    mut image: Vec<usize>,
    remaining: usize,
    suffix: &mut Vec<usize>,
    out: &mut BTreeSet<ReducedWord>,
) {
    if remaining == 0 {
        out.insert(ReducedWord::from_vec_unchecked(suffix.clone()));
        return;
    }
    for d in 1..image.len() {
        if image[d - 1] > image[d] {
            image.swap(d - 1, d);
            suffix[remaining - 1] = d;
            peel_all(image.clone(), remaining - 1, suffix, out);
            image.swap(d - 1, d);
        }
    }
}

/// The partition of `R(w)` into commutation classes, each class sorted and
/// the classes ordered by their least word.
pub fn commutation_classes(w: &Permutation, bounds: &Bounds) -> Result<Vec<BTreeSet<ReducedWord>>> {
    let words: Vec<ReducedWord> = all_reduced_words(w, bounds)?.into_iter().collect();
    let index: HashMap<&[usize], usize> = words
        .iter()
        .enumerate()
        .map(|(k, u)| (u.letters(), k))
        .collect();

    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    let mut buf = Vec::new();
    for (k, u) in words.iter().enumerate() {
        let l = u.letters();
        for p in 0..l.len().saturating_sub(1) {
            if l[p].abs_diff(l[p + 1]) > 1 {
                buf.clear();
                buf.extend_from_slice(l);
                buf.swap(p, p + 1);
                let other = index[buf.as_slice()];
                let (a, b) = (find(&mut parent, k), find(&mut parent, other));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }

    let mut classes: HashMap<usize, BTreeSet<ReducedWord>> = HashMap::new();
    for (k, u) in words.iter().enumerate() {
        let root = find(&mut parent, k);
        classes.entry(root).or_default().insert(u.clone());
    }
    let mut out: Vec<_> = classes.into_values().collect();
    out.sort_by(|a, b| a.first().cmp(&b.first()));
    Ok(out)
}

/// The heap of a reduced word: the poset on positions `1..=l` generated by
/// `x ≺ y` whenever `x < y` and `|u_x - u_y| <= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Heap {
    labels: Vec<usize>,
    /// `less[x][y]` for 0-based `x, y`: strict order.
    less: Vec<Vec<bool>>,
    /// Cover pairs `(x, y)`, 1-based, `y` covering `x`.
    covers: Vec<(usize, usize)>,
}

/// A heap element identified intrinsically: its label and its rank within
/// the chain of elements sharing that label (0 = lowest).
pub type LabelRank = (usize, usize);

impl Heap {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    /// The labels `u_1 ... u_l` in generating-word order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Label of the 1-based element `x`.
    pub fn label(&self, x: usize) -> usize {
        self.labels[x - 1]
    }

    /// `x ≺ y` for 1-based elements.
    pub fn precedes(&self, x: usize, y: usize) -> bool {
        self.less[x - 1][y - 1]
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Whether `order` (a sequence of 1-based elements) is a linear extension.
    pub fn is_linear_extension(&self, order: &[usize]) -> bool {
        let mut seen = vec![false; self.size()];
        for &y in order {
            if y == 0 || y > self.size() || seen[y - 1] {
                return false;
            }
            if (1..=self.size()).any(|x| self.precedes(x, y) && !seen[x - 1]) {
                return false;
            }
            seen[y - 1] = true;
        }
        order.len() == self.size()
    }

    /// `(label, rank)` of each element, rank counted along the chain of
    /// equally labeled elements.
    pub fn label_ranks(&self) -> Vec<LabelRank> {
        let mut seen: HashMap<usize, usize> = HashMap::new();
        self.labels
            .iter()
            .map(|&l| {
                let r = seen.entry(l).or_insert(0);
                *r += 1;
                (l, *r - 1)
            })
            .collect()
    }

    /// Cover relation expressed on `(label, rank)` names. Equally labeled
    /// elements are always comparable, so two heaps are isomorphic as
    /// labeled posets exactly when these sets agree.
    pub fn canonical_form(&self) -> BTreeSet<(LabelRank, LabelRank)> {
        let names = self.label_ranks();
        self.covers
            .iter()
            .map(|&(x, y)| (names[x - 1], names[y - 1]))
            .collect()
    }

    /// Graphviz digraph, edges from covered to covering element, drawn
    /// bottom to top.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph heap {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (x, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("  n{0} [label=\"{1} ({0})\"];\n", x + 1, l));
        }
        for &(x, y) in &self.covers {
            s.push_str(&format!("  n{x} -> n{y};\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn build_heap(word: &ReducedWord) -> Heap {
    heap_of_letters(word.letters())
}

/// Builds the heap of `letters`, rejecting non-reduced words.
pub fn build_heap_checked(letters: &[usize], n: usize) -> Result<Heap> {
    Ok(build_heap(&ReducedWord::new(letters.to_vec(), n)?))
}

fn heap_of_letters(u: &[usize]) -> Heap {
    let l = u.len();
    let mut less = vec![vec![false; l]; l];
    for y in 0..l {
        for z in 0..y {
            if u[z].abs_diff(u[y]) <= 1 {
                less[z][y] = true;
                for x in 0..z {
                    if less[x][z] {
                        less[x][y] = true;
                    }
                }
            }
        }
    }
    let mut covers = Vec::new();
    for x in 0..l {
        for y in x + 1..l {
            if less[x][y] && !(x + 1..y).any(|z| less[x][z] && less[z][y]) {
                covers.push((x + 1, y + 1));
            }
        }
    }
    debug_assert!(covers.iter().all(|&(x, y)| u[x - 1].abs_diff(u[y - 1]) == 1));
    Heap {
        labels: u.to_vec(),
        less,
        covers,
    }
}

/// All labeled linear extensions of `h`. By construction this is the
/// commutation class of the generating word.
pub fn labeled_linear_extensions(h: &Heap, bounds: &Bounds) -> Result<BTreeSet<ReducedWord>> {
    if h.size() > bounds.max_heap_size {
        return Err(Error::BoundExceeded {
            what: "heap size",
            value: h.size(),
            bound: bounds.max_heap_size,
        });
    }
    let l = h.size();
    let mut pending: Vec<usize> = (0..l)
        .map(|y| (0..l).filter(|&x| h.less[x][y]).count())
        .collect();
    let mut used = vec![false; l];
    let mut word = Vec::with_capacity(l);
    let mut out = BTreeSet::new();
    extend(h, &mut pending, &mut used, &mut word, &mut out);
    Ok(out)
}

fn extend(
    h: &Heap,
    pending: &mut [usize],
    used: &mut [bool],
    word: &mut Vec<usize>,
    out: &mut BTreeSet<ReducedWord>,
) {
    let l = h.size();
    if word.len() == l {
        out.insert(ReducedWord::from_vec_unchecked(word.clone()));
        return;
    }
    for x in 0..l {
        if used[x] || pending[x] != 0 {
            continue;
        }
        used[x] = true;
        word.push(h.labels[x]);
        for y in 0..l {
            if h.less[x][y] {
                pending[y] -= 1;
            }
        }
        extend(h, pending, used, word, out);
        for y in 0..l {
            if h.less[x][y] {
                pending[y] += 1;
            }
        }
        word.pop();
        used[x] = false;
    }
}

/// `w = core · remainder` with lengths adding, `core` boolean and of full
/// support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoreDecomposition {
    pub core: Permutation,
    pub remainder: Permutation,
    pub core_word: ReducedWord,
    pub remainder_word: ReducedWord,
}

/// The boolean core of a fully commutative `w`.
///
/// In the heap of any reduced word, the lowest element carrying each
/// support label forms an order ideal; reading that ideal first gives a
/// reduced word whose prefix of length `|supp(w)|` is the core.
pub fn boolean_core(w: &Permutation) -> Result<CoreDecomposition> {
    if !is_fully_commutative(w) {
        return Err(Error::NotFullyCommutative(w.to_string()));
    }
    let n = w.degree();
    let word = peeled_word(w);
    let heap = build_heap(&word);
    let mut seen = BTreeSet::new();
    let in_core: Vec<bool> = heap.labels().iter().map(|&l| seen.insert(l)).collect();
    let core_letters: Vec<usize> = heap
        .labels()
        .iter()
        .zip(&in_core)
        .filter(|(_, &c)| c)
        .map(|(&l, _)| l)
        .collect();
    let rest_letters: Vec<usize> = heap
        .labels()
        .iter()
        .zip(&in_core)
        .filter(|(_, &c)| !c)
        .map(|(&l, _)| l)
        .collect();

    // The first occurrences must form an ideal for the split word to be a
    // linear extension of the heap.
    let order: Vec<usize> = (1..=heap.size())
        .filter(|&x| in_core[x - 1])
        .chain((1..=heap.size()).filter(|&x| !in_core[x - 1]))
        .collect();
    if !heap.is_linear_extension(&order) {
        return Err(Error::Invariant {
            subject: w.to_string(),
            detail: "first occurrences of support labels do not form an order ideal".into(),
        });
    }

    let core = evaluate_word(&core_letters, n)?;
    let remainder = evaluate_word(&rest_letters, n)?;
    Ok(CoreDecomposition {
        core,
        remainder,
        core_word: ReducedWord::from_vec_unchecked(core_letters),
        remainder_word: ReducedWord::from_vec_unchecked(rest_letters),
    })
}
