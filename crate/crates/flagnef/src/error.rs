use crate::rootsys::Family;

/// Errors shared by every module of the crate.
///
/// Construction errors ("rejected input") and internal invariant violations
/// are kept apart: the latter indicate a bug and map to a distinct process
/// exit code in the CLI.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("unrecognized simple type `{0}` (expected e.g. \"A2\", \"G2\")")]
    UnknownType(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("weight multiset must contain at least one weight")]
    EmptyWeightMultiset,

    #[error("weight multiplicity must be positive")]
    ZeroMultiplicity,

    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("parabolic subset contains every simple root; G/P would be a point")]
    ParabolicIsFullSet,

    #[error("cover degree must be at least 1")]
    InvalidCoverDegree,

    #[error("splitting type must contain at least one degree")]
    EmptySplittingType,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("internal invariant violation: {0}")]
    Internal(String),
}
