use thiserror::Error;

/// Errors raised by the library. Every variant is a rejected input or a
/// failed exactness check.
///
/// Node indices are stored 0-based and printed 1-based, matching the usual
/// `omega_1, ..., omega_n` labels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Lie family `{0}` (expected one of A, B, C, D, E, F, G)")]
    UnknownFamily(String),

    #[error("invalid rank {rank} for type {family} (admissible: {admissible})")]
    InvalidRank {
        family: char,
        rank: usize,
        admissible: &'static str,
    },

    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("{0} is not a positive root")]
    NotARoot(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("|xi^alpha| mismatch at root {root}: expected lambda(h_alpha) = {expected}, got {got}")]
    SizeMismatch {
        root: String,
        expected: i64,
        got: u64,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("character is not in the span of Weyl characters (residue with {terms} terms has no dominant weight)")]
    NotInSpan { terms: usize },

    #[error("initial data does not solve the Q-system polynomially (node {}, stepping from m = {m})", .node + 1)]
    InexactDivision { node: usize, m: u64 },

    #[error("inexact polynomial division")]
    InexactPolynomialDivision,

    #[error("Q-system table has no entry for node {}, m = {m}; extend the table", .node + 1)]
    MissingEntry { node: usize, m: u64 },

    #[error("({level}, {weight}) is not in Gamma: coefficient {coefficient} at node {} is not divisible by level*d = {divisor}", .node + 1)]
    NotInGamma {
        level: u64,
        weight: String,
        node: usize,
        coefficient: i64,
        divisor: i64,
    },

    #[error("invalid initial data: {0}")]
    InitialData(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
