use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{n} exceeds the supported maximum of {max}")]
    OrderTooLarge { p: u64, n: u32, max: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("operands belong to different fields: GF({left}) and GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector has no coordinates")]
    EmptyVector,
    #[error("the zero vector does not represent a state")]
    ZeroVector,
    #[error("cannot parse field element {0:?}")]
    ParseElement(String),
    #[error("spin label {label} out of range 0..={max}")]
    LabelOutOfRange { label: u32, max: u32 },
    #[error("spin observable needs two distinct labels, got {0} twice")]
    IdenticalLabels(u32),
    #[error("measurement covectors span rank {rank}, need {dim}")]
    NotSpanning { rank: usize, dim: usize },
    #[error("measurement has {covectors} covectors but {outcomes} outcome labels")]
    OutcomeCountMismatch { covectors: usize, outcomes: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("seed state is a product state; local orbits are only computed for entangled seeds")]
    ProductSeed,
    #[error("observables {0} and {1} must share exactly one index")]
    NoSharedIndex(String, String),
    #[error("internal invariant violated: {0}")]
    InternalViolation(&'static str),
}
