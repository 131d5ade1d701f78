//! Enumeration of `S_n` and the execution layer used by exhaustive sweeps.
//!
//! Sweeps run over a materialized slice of permutations. With the `parallel`
//! feature (on by default) [`Exec::Parallel`] spreads the work over rayon's
//! pool; without it every mode runs sequentially. Either way the result is
//! the one the sequential scan would give: searches return the first hit in
//! slice order and maps preserve order.

use itertools::Itertools;

use crate::patterns::is_fully_commutative;
use crate::perm::Permutation;

/// All of `S_n` in lexicographic order of one-line notation, streamed.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n)
        .permutations(n)
        .map(Permutation::from_vec_unchecked)
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    permutations(n).collect()
}

/// The fully commutative (321-avoiding) elements of `S_n`, lexicographically.
pub fn fc_permutations(n: usize) -> Vec<Permutation> {
    Exec::default().filter(&all_permutations(n), is_fully_commutative)
}

/// How a sweep is scheduled.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// First item (in slice order) for which `f` yields `Some`.
    pub fn find_map_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().find_map_first(f)
            }
            _ => items.iter().find_map(f),
        }
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    pub fn filter<T, F>(self, items: &[T], f: F) -> Vec<T>
    where
        T: Sync + Send + Clone,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().filter(|x| f(x)).cloned().collect()
            }
            _ => items.iter().filter(|x| f(x)).cloned().collect(),
        }
    }

    pub fn count<T, F>(self, items: &[T], f: F) -> usize
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().filter(|x| f(x)).count()
            }
            _ => items.iter().filter(|x| f(x)).count(),
        }
    }
}
