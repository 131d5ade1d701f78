//! Row insertion (RSK) with a complete record of every bump.
//!
//! Insertion handles tableaux of any shape; only [`bump_pairs`] insists on a
//! fully commutative input, where every bump goes from row 1 to row 2.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterns::is_fully_commutative;
use crate::perm::Permutation;

/// A Young tableau stored row by row, top row first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Entries of the 1-based row `k`; empty when the row does not exist.
    pub fn row(&self, k: usize) -> &[usize] {
        self.rows.get(k - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Entries of the 1-based column `c`, top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|r| r.get(c - 1).copied())
            .collect()
    }

    /// Rows increase, columns increase, shape is a partition, and the
    /// entries are exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let shape = self.shape();
        if shape.windows(2).any(|s| s[0] < s[1]) || shape.contains(&0) {
            return false;
        }
        if self.rows.iter().any(|r| r.windows(2).any(|p| p[0] >= p[1])) {
            return false;
        }
        for k in 1..self.rows.len() {
            for (c, &v) in self.rows[k].iter().enumerate() {
                if self.rows[k - 1][c] >= v {
                    return false;
                }
            }
        }
        let mut all: Vec<usize> = self.rows.concat();
        all.sort_unstable();
        all.iter().enumerate().all(|(k, &v)| v == k + 1)
    }
}

impl fmt::Display for Tableau {
    /// `1,2,3,5/4,6,7,8`; the empty tableau prints as an empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Tableau::default());
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim().parse::<usize>().map_err(|_| Error::Parse {
                            token: t.to_string(),
                            reason: "not a tableau entry".into(),
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Tableau { rows })
    }
}

/// One displacement during an insertion: `bumper` took the place of
/// `bumped` in `row`, pushing it down to `row + 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bump {
    pub row: usize,
    pub bumper: usize,
    pub bumped: usize,
}

/// Everything that happened while inserting one letter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InsertionStep {
    /// The inserted value.
    pub value: usize,
    /// Column of row 1 the value landed in.
    pub first_column: usize,
    /// The bump chain, top row first.
    pub bumps: Vec<Bump>,
    /// The cell created by this step (1-based row, column).
    pub new_cell: (usize, usize),
}

/// Per-step insertion history.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BumpTrace {
    pub steps: Vec<InsertionStep>,
    /// Indexed by value; entry 0 unused.
    first_column: Vec<usize>,
}

impl BumpTrace {
    /// `c_v(q)`: the column of row 1 into which `q` was first inserted.
    pub fn first_column(&self, q: usize) -> usize {
        self.first_column[q]
    }

    /// Every bump in chronological order.
    pub fn bumps(&self) -> impl Iterator<Item = &Bump> {
        self.steps.iter().flat_map(|s| s.bumps.iter())
    }

    /// The value that pushed `z` out of row 1, if any.
    pub fn row1_bumper_of(&self, z: usize) -> Option<usize> {
        self.bumps()
            .find(|b| b.row == 1 && b.bumped == z)
            .map(|b| b.bumper)
    }

    /// Whether inserting `b` displaced anything from row 1.
    pub fn bumps_something(&self, b: usize) -> bool {
        self.steps
            .iter()
            .any(|s| s.value == b && !s.bumps.is_empty())
    }

    /// Values that land in column `c` of row 1 at insertion time.
    pub fn inserted_into_column(&self, c: usize) -> Vec<usize> {
        self.steps
            .iter()
            .filter(|s| s.first_column == c)
            .map(|s| s.value)
            .collect()
    }
}

/// Insertion and recording tableaux together with the bump history.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RskResult {
    pub p: Tableau,
    pub q: Tableau,
    pub trace: BumpTrace,
}

fn insert(p: &mut Tableau, q: &mut Tableau, x: usize, step: usize) -> InsertionStep {
    let mut carry = x;
    let mut bumps = Vec::new();
    let mut first_column = 0;
    let mut r = 0;
    loop {
        if r == p.rows.len() {
            p.rows.push(Vec::new());
            q.rows.push(Vec::new());
        }
        let row = &mut p.rows[r];
        let c = row.partition_point(|&e| e < carry);
        if r == 0 {
            first_column = c + 1;
        }
        if c == row.len() {
            row.push(carry);
            q.rows[r].push(step);
            return InsertionStep {
                value: x,
                first_column,
                bumps,
                new_cell: (r + 1, c + 1),
            };
        }
        let bumped = std::mem::replace(&mut row[c], carry);
        bumps.push(Bump {
            row: r + 1,
            bumper: carry,
            bumped,
        });
        carry = bumped;
        r += 1;
    }
}

fn rsk_prefix(w: &Permutation, len: usize) -> RskResult {
    let mut p = Tableau::default();
    let mut q = Tableau::default();
    let mut steps = Vec::with_capacity(len);
    let mut first_column = vec![0; w.degree() + 1];
    for (k, &x) in w.as_slice()[..len].iter().enumerate() {
        let step = insert(&mut p, &mut q, x, k + 1);
        first_column[x] = step.first_column;
        steps.push(step);
    }
    RskResult {
        p,
        q,
        trace: BumpTrace {
            steps,
            first_column,
        },
    }
}

/// Row insertion of `w(1), ..., w(n)`.
pub fn rsk(w: &Permutation) -> RskResult {
    rsk_prefix(w, w.degree())
}

/// Insertion tableau of the prefix `w(1) ... w(i)`.
pub fn partial_p(w: &Permutation, i: usize) -> Result<Tableau> {
    if i > w.degree() {
        return Err(Error::IndexOutOfRange {
            index: i,
            degree: w.degree(),
        });
    }
    Ok(rsk_prefix(w, i).p)
}

/// The second row of `P(w)`, ascending.
pub fn row2(w: &Permutation) -> Vec<usize> {
    rsk(w).p.row(2).to_vec()
}

/// Length of a longest increasing subsequence of `w` ending in `q`, read off
/// the insertion column of `q`.
pub fn lis_ending_at(w: &Permutation, q: usize) -> Result<usize> {
    if q == 0 || q > w.degree() {
        return Err(Error::ValueOutOfRange {
            value: q,
            degree: w.degree(),
        });
    }
    Ok(rsk(w).trace.first_column(q))
}

/// The pairs `(b, z)` where `b` bumps `z` out of row 1, in the order the
/// bumps happen.
pub fn bump_pairs(w: &Permutation) -> Result<Vec<(usize, usize)>> {
    if !is_fully_commutative(w) {
        return Err(Error::NotFullyCommutative(w.to_string()));
    }
    Ok(rsk(w)
        .trace
        .bumps()
        .filter(|b| b.row == 1)
        .map(|b| (b.bumper, b.bumped))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{all_permutations, fc_permutations};
    use crate::perm::perm;

    fn tab(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(rsk(&perm("315264")).p, tab("1,2,4/3,5,6"));
        assert_eq!(rsk(&perm("41623785")).p, tab("1,2,3,5,8/4,6,7"));
        assert_eq!(rsk(&perm("41627385")).p, tab("1,2,3,5/4,6,7,8"));
        let r = rsk(&perm("4321"));
        assert_eq!(r.p, tab("1/2/3/4"));
        assert_eq!(r.q, tab("1/2/3/4"));
    }

    #[test]
    fn recording_tableau_records_new_cells() {
        for w in all_permutations(5) {
            let r = rsk(&w);
            assert_eq!(r.p.shape(), r.q.shape());
            assert!(r.p.is_standard() && r.q.is_standard());
            for (k, step) in r.trace.steps.iter().enumerate() {
                let (row, col) = step.new_cell;
                assert_eq!(r.q.rows[row - 1][col - 1], k + 1);
            }
        }
    }

    #[test]
    fn partial_tableaux() {
        let w = perm("41627385");
        assert_eq!(partial_p(&w, 0).unwrap(), Tableau::default());
        assert_eq!(partial_p(&w, 8).unwrap(), rsk(&w).p);
        assert!(partial_p(&w, 9).is_err());
        // 4; 1 bumps 4; 6; 2 bumps 6; 3
        assert_eq!(partial_p(&perm("41623785"), 5).unwrap(), tab("1,2,3/4,6"));
    }

    #[test]
    fn row2_examples() {
        assert_eq!(row2(&perm("41627385")), vec![4, 6, 7, 8]);
        assert!(row2(&Permutation::identity(6)).is_empty());
        assert_eq!(row2(&perm("41623785")), vec![4, 6, 7]);
    }

    /// Longest increasing subsequence ending at value `q`, over all subsets
    /// of positions.
    fn brute_lis_ending_at(w: &Permutation, q: usize) -> usize {
        let n = w.degree();
        let end = w.position_of(q) - 1;
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            if mask & (1 << end) == 0 || mask >> (end + 1) != 0 {
                continue;
            }
            let vals: Vec<usize> = (0..n)
                .filter(|&k| mask & (1 << k) != 0)
                .map(|k| w.as_slice()[k])
                .collect();
            if vals.windows(2).all(|p| p[0] < p[1]) {
                best = best.max(vals.len());
            }
        }
        best
    }

    #[test]
    fn lis_examples() {
        let w = perm("41623785");
        assert_eq!(lis_ending_at(&w, 8).unwrap(), 5);
        assert_eq!(brute_lis_ending_at(&w, 8), 5);
        for w in all_permutations(5) {
            assert_eq!(lis_ending_at(&w, w.get(1)).unwrap(), 1);
        }
        assert!(lis_ending_at(&w, 9).is_err());
        assert!(lis_ending_at(&w, 0).is_err());
    }

    #[test]
    fn insertion_column_equals_brute_force_lis() {
        for w in all_permutations(7) {
            let r = rsk(&w);
            for q in 1..=7 {
                assert_eq!(r.trace.first_column(q), brute_lis_ending_at(&w, q), "{w} {q}");
            }
        }
    }

    #[test]
    fn bump_pair_examples() {
        assert_eq!(
            bump_pairs(&perm("41627385")).unwrap(),
            vec![(1, 4), (2, 6), (3, 7), (5, 8)]
        );
        assert!(bump_pairs(&Permutation::identity(5)).unwrap().is_empty());
        assert!(matches!(
            bump_pairs(&perm("321")),
            Err(Error::NotFullyCommutative(_))
        ));
    }

    #[test]
    fn fc_bump_structure() {
        for w in fc_permutations(7) {
            let pairs = bump_pairs(&w).unwrap();
            let bs: Vec<usize> = pairs.iter().map(|p| p.0).collect();
            let zs: Vec<usize> = pairs.iter().map(|p| p.1).collect();
            let mut sorted = zs.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, row2(&w));
            assert!(bs.windows(2).all(|p| p[0] < p[1]));
            assert!(bs
                .iter()
                .map(|&b| w.position_of(b))
                .collect::<Vec<_>>()
                .windows(2)
                .all(|p| p[0] < p[1]));
            assert!(bs.iter().all(|b| !zs.contains(b)));
        }
    }

    #[test]
    fn tableau_text_and_json() {
        let t = tab("1,2,3,5/4,6,7,8");
        assert_eq!(t.to_string(), "1,2,3,5/4,6,7,8");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"rows":[[1,2,3,5],[4,6,7,8]]}"#);
        assert_eq!(serde_json::from_str::<Tableau>(&json).unwrap(), t);
        assert_eq!(t.column(1), vec![1, 4]);
        assert!("1,x".parse::<Tableau>().is_err());
        assert!(!tab("1,2/3,4,5").is_standard());
        assert!(!tab("2,1").is_standard());
        assert!(!tab("1,3/2,4,5").is_standard());
    }
}
