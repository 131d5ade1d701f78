//! Fully commutative permutations: RSK insertion, heaps of reduced words,
//! boolean cores, crowded and uncrowded classification, and the right weak
//! order on the 321-avoiding part of `S_n`.
//!
//! Permutations are 1-indexed in one-line notation. Right multiplication by
//! `s_i` swaps the entries in positions `i` and `i + 1`.

pub mod crowding;
pub mod enumerate;
pub mod error;
pub mod patterns;
pub mod perm;
pub mod report;
pub mod rsk;
pub mod verify;
pub mod weak_order;
pub mod words;

pub use crowding::{
    analyze_transition, classify, is_minimal_crowded_direct, is_uncrowded_set,
    minimal_crowded_subset, uncrowded_iff_core, Crowding, CrowdedWitness, MinimalCrowdedSet,
    TransitionReport,
};
pub use enumerate::{all_permutations, fc_permutations, permutations, Exec};
pub use error::{Error, Result};
pub use patterns::{avoids, contains_pattern, is_boolean, is_fully_commutative};
pub use perm::{perm, Permutation, SimpleReflection};
pub use rsk::{rsk, RskResult, Tableau};
pub use weak_order::{build_fc_poset, CoverEdge, FcPoset};
pub use words::{boolean_core, build_heap, CoreDecomposition, Heap, ReducedWord};

/// Guards against combinatorial explosion. Exceeding one is an error, never
/// a silent truncation.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `n` for sweeps over `S_n`.
    pub max_degree: usize,
    /// Longest permutation whose reduced words may be listed.
    pub max_word_length: usize,
    /// Largest heap whose linear extensions may be listed.
    pub max_heap_size: usize,
    /// Longest element whose principal ideal may be built.
    pub max_ideal_length: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_degree: 9,
            max_word_length: 12,
            max_heap_size: 16,
            max_ideal_length: 36,
        }
    }
}

impl Bounds {
    /// Errors when `n` exceeds `max_degree`.
    pub fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::BoundExceeded {
                what: "degree",
                value: n,
                bound: self.max_degree,
            });
        }
        Ok(())
    }
}
