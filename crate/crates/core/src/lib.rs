//! Subsequences inside sliding windows of words.
//!
//! A word `u` is a `p`-subsequence of `w` (`u ≤_p w`) when it is a
//! subsequence of some factor of `w` of length `p`. The crate decides this
//! relation in a streaming fashion, decides minimal and shortest absent
//! `p`-subsequences, answers the (exponential) universality and equivalence
//! questions on `Subseq^p_k(w)` under explicit budgets, handles circular
//! words, and generates instances for the hardness reductions between these
//! problems. Brute-force reference implementations live in [`oracles`].

pub mod absent;
pub mod analysis;
pub mod circular;
pub mod error;
mod lce;
pub mod matcher;
pub mod oracles;
pub mod reductions;
pub mod word;

pub use absent::{is_p_absent, is_pmas, is_psas, is_psas_with, pmas_scan, PmasScan, PmasState};
pub use analysis::{
    enumerate_subseq_pk, kp_non_equivalent, kp_non_universal, universality_index, SearchConfig,
    SearchOutcome, SubseqSet, DEFAULT_CANDIDATE_BUDGET, DEFAULT_SET_BUDGET,
};
pub use circular::{
    best_iterated_circular_match, build_circular_index, circular_match, iterated_circular_match,
    iterated_circular_match_from, minimal_representation, CircularIndex, MinimalRepresentation,
};
pub use error::{Error, Result};
pub use matcher::{p_subsequence_match, p_subsequence_occurs, MatcherState, INFINITY};
pub use reductions::{KpGadget, OvInstance, Payload, ReductionInstance, ReductionKind, Source};
pub use word::{
    classic_subsequence, effective_window, window_at, window_ends, Cell, MatchReport, PartialWord,
    Symbol, SymbolTable, WindowQuery, Word,
};
