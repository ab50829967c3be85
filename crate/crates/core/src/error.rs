use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("field order {q} exceeds the ceiling {ceiling}")]
    FieldTooLarge { q: u64, ceiling: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero in the field")]
    ZeroInverse,
    #[error("point count {points} exceeds the ceiling {ceiling}")]
    SpaceTooLarge { points: u64, ceiling: u64 },
    #[error("multiset does not span the ambient space (rank below k)")]
    RankDeficient,
    #[error("column {0} is zero (degenerate code)")]
    ZeroColumn(usize),
    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("weight set has {got} elements, expected {expected}")]
    WeightSetSize { got: usize, expected: usize },
    #[error("weight sets differ in cardinality ({0} vs {1})")]
    CardinalityMismatch(usize, usize),
    #[error("weight {w} outside the valid range 1..={n}")]
    WeightOutOfRange { w: u64, n: u64 },
    #[error("no integral length exists for spread {delta} at q={q}, k={k}")]
    InfeasibleSpread { q: u64, k: u32, delta: u64 },
    #[error("hyperplane index {index} out of range (q_k = {qk})")]
    HyperplaneOutOfRange { index: usize, qk: usize },
    #[error("operation requires k >= {0}")]
    DimensionTooSmall(u32),
    #[error("operation is undefined for q = 2")]
    BinaryFieldUnsupported,
    #[error("k must lie in 1..={max}, got {k}")]
    KOutOfRange { k: u32, max: u32 },
    #[error("labeling is not a permutation of the point indices")]
    BadLabeling,
    #[error("multiplicities are not a relabeling of successive powers of two")]
    NotPowersOfTwo,
    #[error("invalid search configuration: {0}")]
    BadSearchConfig(String),
    #[error("no MWS multiset of length <= {0} exists")]
    ProbeExhausted(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
