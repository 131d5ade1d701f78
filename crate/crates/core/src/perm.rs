//! Permutations in one-line notation and their basic statistics.
//!
//! Positions and values are 1-based at every public entry point: `w.get(1)`
//! is the first letter of the one-line notation and values range over
//! `1..=n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` stored by its one-line notation `w(1) w(2) ... w(n)`.
///
/// Ordering is lexicographic on the one-line notation, which is the
/// iteration order used by every enumeration in this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

/// The adjacent transposition `s_i`, swapping `i` and `i + 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleReflection(pub usize);

impl SimpleReflection {
    pub fn index(self) -> usize {
        self.0
    }

    /// `s_i` as an element of `S_n`.
    pub fn to_permutation(self, n: usize) -> Result<Permutation> {
        Permutation::identity(n).multiply_right(self.0)
    }
}

/// The values `M = max{v(j) : j <= i}` and `m = min{v(j) : j >= i + 1}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportStats {
    pub i: usize,
    #[serde(rename = "M")]
    pub max_prefix: usize,
    #[serde(rename = "m")]
    pub min_suffix: usize,
}

impl SupportStats {
    /// Whether `i` lies in the support; this is the `M > m` test.
    pub fn in_support(&self) -> bool {
        self.max_prefix > self.min_suffix
    }
}

impl Permutation {
    /// Builds a permutation from its one-line notation.
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut seen = vec![false; n + 1];
        for &v in &image {
            if v == 0 || v > n {
                return Err(Error::ValueOutOfRange {
                    value: v,
                    degree: n,
                });
            }
            if seen[v] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// Wraps a vector already known to be a permutation of `1..=n`.
    pub(crate) fn from_vec_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(image.clone()).is_ok());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// The maximum of the weak order, `n (n-1) ... 1`.
    pub fn long_element(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        Permutation {
            image: (1..=n).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `w(pos)` for a 1-based position. Panics when `pos` is out of range.
    pub fn get(&self, pos: usize) -> usize {
        self.image[pos - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.image
    }

    /// The 1-based position holding `value`, i.e. `w^{-1}(value)`.
    pub fn position_of(&self, value: usize) -> usize {
        self.image
            .iter()
            .position(|&v| v == value)
            .map(|p| p + 1)
            .expect("value out of range")
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(p, &v)| v == p + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (p, &v) in self.image.iter().enumerate() {
            inv[v - 1] = p + 1;
        }
        Permutation { image: inv }
    }

    /// The product `self · other`, acting as `(self · other)(j) = self(other(j))`.
    ///
    /// With this convention `w · s_i` swaps positions `i` and `i + 1` of `w`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&j| self.image[j - 1]).collect(),
        })
    }

    /// `w · s_i`: swaps the letters at positions `i` and `i + 1`.
    pub fn multiply_right(&self, i: usize) -> Result<Permutation> {
        if i == 0 || i >= self.degree() {
            return Err(Error::IndexOutOfRange {
                index: i,
                degree: self.degree(),
            });
        }
        Ok(self.swap_positions(i))
    }

    /// `s_i · w`: swaps the values `i` and `i + 1`.
    pub fn multiply_left(&self, i: usize) -> Result<Permutation> {
        if i == 0 || i >= self.degree() {
            return Err(Error::IndexOutOfRange {
                index: i,
                degree: self.degree(),
            });
        }
        let image = self
            .image
            .iter()
            .map(|&v| match v {
                v if v == i => i + 1,
                v if v == i + 1 => i,
                v => v,
            })
            .collect();
        Ok(Permutation { image })
    }

    pub(crate) fn swap_positions(&self, i: usize) -> Permutation {
        let mut image = self.image.clone();
        image.swap(i - 1, i);
        Permutation { image }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.image;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Positions `d` with `w(d) > w(d + 1)`, ascending.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&d| self.get(d) > self.get(d + 1))
            .collect()
    }

    /// Positions `d` with `w(d) < w(d + 1)`, ascending.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&d| self.get(d) < self.get(d + 1))
            .collect()
    }

    /// The support, computed by scanning prefixes: `i` is in the support
    /// exactly when `{w(1), ..., w(i)} != {1, ..., i}`.
    pub fn support(&self) -> Vec<usize> {
        let mut prefix_max = 0;
        let mut out = Vec::new();
        for i in 1..self.degree() {
            prefix_max = prefix_max.max(self.get(i));
            if prefix_max > i {
                out.push(i);
            }
        }
        out
    }

    pub fn support_stats(&self, i: usize) -> Result<SupportStats> {
        if i == 0 || i >= self.degree() {
            return Err(Error::IndexOutOfRange {
                index: i,
                degree: self.degree(),
            });
        }
        let max_prefix = *self.image[..i].iter().max().unwrap();
        let min_suffix = *self.image[i..].iter().min().unwrap();
        Ok(SupportStats {
            i,
            max_prefix,
            min_suffix,
        })
    }

    /// Pads with fixed points up to degree `n`.
    pub fn embed(&self, n: usize) -> Result<Permutation> {
        if n < self.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: n,
            });
        }
        let mut image = self.image.clone();
        image.extend(self.degree() + 1..=n);
        Ok(Permutation { image })
    }

    /// Digit-string form such as `41627385`; `None` when `n > 9`.
    pub fn to_compact(&self) -> Option<String> {
        (self.degree() <= 9).then(|| self.image.iter().map(|v| v.to_string()).collect())
    }

    /// Compact form when requested and available, comma form otherwise.
    pub fn to_text(&self, compact: bool) -> String {
        match (compact, self.to_compact()) {
            (true, Some(s)) => s,
            _ => self.to_string(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.image.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_text(true))
    }
}

/// Accepts `4,1,6,2,7,3,8,5` for any degree, or `41627385` when every value
/// is a single digit.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Empty);
        }
        let tokens: Vec<&str> = if s.contains(',') {
            s.split(',').map(str::trim).collect()
        } else {
            s.char_indices().map(|(k, c)| &s[k..k + c.len_utf8()]).collect()
        };
        let mut image = Vec::with_capacity(tokens.len());
        for tok in tokens {
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                token: tok.to_string(),
                reason: "not a positive integer".into(),
            })?;
            image.push(v);
        }
        Permutation::new(image)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(image: Vec<usize>) -> Result<Self> {
        Permutation::new(image)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and examples: parses a permutation or panics.
pub fn perm(s: &str) -> Permutation {
    s.parse()
        .unwrap_or_else(|e| panic!("bad permutation {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::all_permutations;

    #[test]
    fn construction() {
        let w = Permutation::new(vec![5, 1, 3, 4, 2]).unwrap();
        assert_eq!(w.degree(), 5);
        assert_eq!(w.to_compact().unwrap(), "51342");
        assert!(Permutation::new(vec![1]).unwrap().is_identity());
        assert_eq!(perm("314592687").degree(), 9);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Permutation::new(vec![]), Err(Error::Empty));
        assert_eq!(
            Permutation::new(vec![1, 1]),
            Err(Error::DuplicateValue(1))
        );
        assert!(matches!(
            Permutation::new(vec![1, 3]),
            Err(Error::ValueOutOfRange { value: 3, .. })
        ));
        assert!(matches!(
            Permutation::new(vec![0, 1]),
            Err(Error::ValueOutOfRange { value: 0, .. })
        ));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(perm("4,1,6,2,7,3,8,5"), perm("41627385"));
        let big: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(big.degree(), 10);
        assert_eq!(big.to_compact(), None);
        assert_eq!(big.to_text(true), "10,9,8,7,6,5,4,3,2,1");
        let err = "4,x,1".parse::<Permutation>().unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                token: "x".into(),
                reason: "not a positive integer".into()
            }
        );
        assert!("".parse::<Permutation>().is_err());
    }

    #[test]
    fn length_examples() {
        assert_eq!(perm("51342").length(), 6);
        assert_eq!(Permutation::identity(7).length(), 0);
        assert_eq!(perm("4321").length(), 6);
    }

    #[test]
    fn multiply_right_examples() {
        assert_eq!(
            perm("41623785").multiply_right(5).unwrap(),
            perm("41627385")
        );
        assert_eq!(
            Permutation::identity(4).multiply_right(1).unwrap(),
            perm("2134")
        );
        assert!(perm("123").multiply_right(3).is_err());
        assert!(perm("123").multiply_right(0).is_err());
        for w in all_permutations(4) {
            for i in 1..4 {
                let back = w.multiply_right(i).unwrap().multiply_right(i).unwrap();
                assert_eq!(back, w);
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm("51342").inverse(), perm("25341"));
        assert!(Permutation::identity(6).inverse().is_identity());
        for w in all_permutations(5) {
            assert_eq!(w.inverse().inverse(), w);
            assert!(w.compose(&w.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn compose_matches_right_multiplication() {
        let s3 = SimpleReflection(3).to_permutation(5).unwrap();
        let w = perm("51342");
        assert_eq!(w.compose(&s3).unwrap(), w.multiply_right(3).unwrap());
        assert_eq!(s3.compose(&w).unwrap(), w.multiply_left(3).unwrap());
        assert!(w.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn descent_examples() {
        assert_eq!(perm("41627385").descents(), vec![1, 3, 5, 7]);
        assert!(Permutation::identity(5).descents().is_empty());
        assert_eq!(perm("4321").descents(), vec![1, 2, 3]);
    }

    #[test]
    fn support_examples() {
        assert_eq!(perm("51342").support(), vec![1, 2, 3, 4]);
        assert!(Permutation::identity(6).support().is_empty());
        assert_eq!(perm("2143").support(), vec![1, 3]);
    }

    #[test]
    fn support_stats_examples() {
        let s = perm("41623785").support_stats(5).unwrap();
        assert_eq!((s.max_prefix, s.min_suffix), (6, 5));
        assert!(s.in_support());
        for i in 1..6 {
            let s = Permutation::identity(6).support_stats(i).unwrap();
            assert_eq!((s.max_prefix, s.min_suffix), (i, i + 1));
        }
        assert!(perm("123").support_stats(3).is_err());
    }

    #[test]
    fn length_changes_by_one_and_descents_lower_it() {
        for n in 1..=7 {
            for w in all_permutations(n) {
                let l = w.length();
                let descents = w.descents();
                for i in 1..n {
                    let l2 = w.multiply_right(i).unwrap().length();
                    assert!(l2 == l + 1 || l2 + 1 == l);
                    assert_eq!(descents.contains(&i), l2 + 1 == l);
                }
                assert_eq!(w.support().is_empty(), w.is_identity());
            }
        }
    }

    #[test]
    fn embed_pads_fixed_points() {
        assert_eq!(perm("21").embed(4).unwrap(), perm("2134"));
        assert!(perm("213").embed(2).is_err());
    }

    #[test]
    fn serde_as_text() {
        let w = perm("41627385");
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, "\"4,1,6,2,7,3,8,5\"");
        let back: Permutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }
}
