//! Inputs shared by the benchmarks.

use plcomb::quivers::{enumerate_partial_quivers, PartialQuiver};
use plcomb::{standard_words, ReducedWord};

/// The standard words `j` and `j'` of `rank`.
pub fn standard_pair(rank: usize) -> (ReducedWord, ReducedWord) {
    standard_words(rank).expect("rank is positive")
}

/// Every partial quiver of `rank`.
pub fn all_quivers(rank: usize) -> Vec<PartialQuiver> {
    enumerate_partial_quivers(rank).expect("rank is at least 2")
}
