use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least {min}, got {rank}")]
    RankTooSmall { rank: usize, min: usize },

    #[error("rank {rank} is too large for exhaustive enumeration (maximum {max})")]
    RankTooLarge { rank: usize, max: usize },

    #[error("letter {letter} at position {position} is outside [1, {rank}]")]
    LetterOutOfRange { letter: usize, position: usize, rank: usize },

    #[error("word {word} is not reduced")]
    NotReduced { word: String },

    #[error("word {word} is reduced but does not represent the longest element")]
    NotLongest { word: String },

    #[error("malformed word {input:?}: {reason}")]
    MalformedWord { input: String, reason: String },

    #[error("words have different ranks ({left} and {right})")]
    RankMismatch { left: usize, right: usize },

    #[error("illegal {kind} move at position {position} in {word}")]
    IllegalMove { kind: &'static str, position: usize, word: String },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("cone is not full-dimensional")]
    NotFullDimensional,

    #[error("cone contains the line spanned by {witness:?}")]
    NotPointed { witness: Vec<String> },

    #[error("subset {subset:?} is an {which} segment of [1, {top}]")]
    InitialOrTerminal { subset: Vec<usize>, which: &'static str, top: usize },

    #[error("malformed partial quiver {input:?}: {reason}")]
    MalformedQuiver { input: String, reason: String },

    #[error("rectangle ({i},{j},{k},{l}) violates i<j<l, i<k<l, i+l=j+k")]
    BadRectangle { i: i64, j: i64, k: i64, l: i64 },

    #[error("configuration breach: {0}")]
    Configuration(String),

    #[error("ambiguous centre: diagonal counts {counts:?} have no odd/even boundary")]
    AmbiguousCentre { counts: Vec<usize> },

    #[error("root {root} appears for more than one corner point")]
    OverlappingRoots { root: String },

    #[error("region with map {matrix} is not convex: {witness}")]
    NonConvexRegion { matrix: String, witness: String },

    #[error("search budget exhausted after {explored} candidates")]
    SearchBudget { explored: usize },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
