//! The combined single-permutation report.

use serde::{Deserialize, Serialize};

use crate::crowding::{classify, is_minimal_crowded_direct, Crowding, MinimalCrowdedReport};
use crate::error::Result;
use crate::patterns::{is_boolean, is_fully_commutative};
use crate::perm::Permutation;
use crate::rsk::{rsk, Tableau};
use crate::words::{boolean_core, canonical_word, ReducedWord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub permutation: Permutation,
    pub length: usize,
    pub descents: Vec<usize>,
    pub support: Vec<usize>,
    pub reduced_word: ReducedWord,
    pub fully_commutative: bool,
    pub boolean: bool,
    /// Only for fully commutative input.
    pub core: Option<Permutation>,
    pub p_tableau: Tableau,
    pub q_tableau: Tableau,
    pub row2: Vec<usize>,
    pub classification: Option<Crowding>,
    pub minimal_crowded: Option<MinimalCrowdedReport>,
}

pub fn analyze(w: &Permutation) -> Result<AnalysisReport> {
    let fc = is_fully_commutative(w);
    let r = rsk(w);
    let (core, classification, minimal_crowded) = if fc {
        (
            Some(boolean_core(w)?.core),
            Some(classify(w)?),
            Some(is_minimal_crowded_direct(w)?),
        )
    } else {
        (None, None, None)
    };
    Ok(AnalysisReport {
        permutation: w.clone(),
        length: w.length(),
        descents: w.descents(),
        support: w.support(),
        reduced_word: canonical_word(w),
        fully_commutative: fc,
        boolean: is_boolean(w),
        core,
        row2: r.p.row(2).to_vec(),
        p_tableau: r.p,
        q_tableau: r.q,
        classification,
        minimal_crowded,
    })
}
