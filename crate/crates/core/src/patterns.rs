//! Classical and consecutive pattern containment.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{perm, Permutation};

/// An occurrence of `pattern` in some host permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternOccurrence {
    /// Strictly increasing 1-based positions in the host.
    pub positions: Vec<usize>,
    pub pattern: Permutation,
}

impl PatternOccurrence {
    /// The host values at the occurrence's positions.
    pub fn values(&self, host: &Permutation) -> Vec<usize> {
        self.positions.iter().map(|&p| host.get(p)).collect()
    }

    pub fn is_consecutive(&self) -> bool {
        self.positions.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

/// Whether `values` are in the same relative order as `pattern`.
pub fn order_isomorphic(values: &[usize], pattern: &Permutation) -> bool {
    let p = pattern.as_slice();
    values.len() == p.len()
        && (0..p.len())
            .all(|a| (a + 1..p.len()).all(|b| values[a].cmp(&values[b]) == p[a].cmp(&p[b])))
}

fn check_lengths(w: &Permutation, p: &Permutation) -> Result<()> {
    if p.degree() > w.degree() {
        return Err(Error::PatternTooLong {
            pattern: p.degree(),
            host: w.degree(),
        });
    }
    Ok(())
}

/// Depth-first search over position tuples in lexicographic order. The
/// visitor returns `true` to stop.
fn search(
    w: &[usize],
    p: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let k = chosen.len();
    if k == p.len() {
        return visit(chosen);
    }
    // Leave room for the remaining pattern letters.
    let last = w.len() - (p.len() - k);
    for pos in start..=last {
        let v = w[pos];
        let fits = chosen
            .iter()
            .enumerate()
            .all(|(j, &q)| w[q].cmp(&v) == p[j].cmp(&p[k]));
        if fits {
            chosen.push(pos);
            if search(w, p, pos + 1, chosen, visit) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// The lexicographically least occurrence of `p` in `w`, if any.
pub fn contains_pattern(w: &Permutation, p: &Permutation) -> Result<Option<PatternOccurrence>> {
    check_lengths(w, p)?;
    let mut found = None;
    search(w.as_slice(), p.as_slice(), 0, &mut Vec::new(), &mut |pos| {
        found = Some(pos.iter().map(|q| q + 1).collect::<Vec<_>>());
        true
    });
    Ok(found.map(|positions| PatternOccurrence {
        positions,
        pattern: p.clone(),
    }))
}

/// Every occurrence of `p` in `w`, in lexicographic order of positions.
pub fn all_occurrences(w: &Permutation, p: &Permutation) -> Result<Vec<PatternOccurrence>> {
    check_lengths(w, p)?;
    let mut out = Vec::new();
    search(w.as_slice(), p.as_slice(), 0, &mut Vec::new(), &mut |pos| {
        out.push(PatternOccurrence {
            positions: pos.iter().map(|q| q + 1).collect(),
            pattern: p.clone(),
        });
        false
    });
    Ok(out)
}

/// True iff `w` has no occurrence of `p`. A pattern longer than the host is
/// trivially avoided.
pub fn avoids(w: &Permutation, p: &Permutation) -> bool {
    match contains_pattern(w, p) {
        Ok(found) => found.is_none(),
        Err(_) => true,
    }
}

/// Windows `[i, i + |p| - 1]` of `w` order-isomorphic to `p`, by increasing `i`.
pub fn consecutive_occurrences(
    w: &Permutation,
    p: &Permutation,
) -> Result<Vec<PatternOccurrence>> {
    check_lengths(w, p)?;
    let k = p.degree();
    Ok(w.as_slice()
        .windows(k)
        .enumerate()
        .filter(|(_, window)| order_isomorphic(window, p))
        .map(|(i, _)| PatternOccurrence {
            positions: (i + 1..=i + k).collect(),
            pattern: p.clone(),
        })
        .collect())
}

/// 321-avoidance.
pub fn is_fully_commutative(w: &Permutation) -> bool {
    let p = Permutation::long_element(3);
    avoids(w, &p)
}

/// Avoids both 321 and 3412.
pub fn is_boolean(w: &Permutation) -> bool {
    is_fully_commutative(w) && avoids(w, &perm("3412"))
}
