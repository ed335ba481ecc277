use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a generalized Cartan matrix: {0}")]
    NotGcm(String),
    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,
    #[error("Dynkin diagram is not connected")]
    Disconnected,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for rank {rank}")]
    InvalidIndex { index: usize, rank: usize },
    #[error("unknown algebra preset `{0}`")]
    UnknownPreset(String),
    #[error("operation requires an affine Cartan matrix")]
    NotAffine,
    #[error("bilinear form unavailable: {0}")]
    DegenerateForm(String),
    #[error("permutation is not a bijection on the nodes")]
    NotBijection,
    #[error("permutation does not preserve the Cartan matrix at ({i}, {j})")]
    NotAutomorphism { i: usize, j: usize },
    #[error("automorphisms do not commute")]
    NotCommuting,
    #[error("linking condition violated: orbit {orbit} has weight s = {s}")]
    LinkingConditionViolated { orbit: usize, s: i64 },
    #[error("folding changed the type of the Cartan matrix")]
    KindMismatch,
    #[error("Cartan element is not invariant under the automorphism")]
    NotInvariant,
    #[error("weight is not symmetric under the automorphism")]
    NotSymmetricWeight,
    #[error("weight is not dominant integral")]
    NotDominantIntegral,
    #[error("reflection walk exceeded its step budget of {budget}")]
    StepBudgetExceeded { budget: usize },
    #[error("table truncation does not determine grade {grade}")]
    DepthInsufficient { grade: usize },
    #[error("truncation does not bound the weight set")]
    UnboundedTruncation,
    #[error("oracle budget exceeded: {0}")]
    DepthBudgetExceeded(String),
    #[error("automorphism is not a rotation of an A-type affine diagram")]
    NotRotation,
    #[error("weight is not at level {level}")]
    WeightNotAtLevel { level: i64 },
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("triple is not fixed by the identification current")]
    NotFixedPoint,
    #[error("negative multiplicity during decomposition: {0}")]
    NegativeMultiplicity(String),
    #[error("resolved character has non-integral coefficients")]
    NonIntegralResolution,
    #[error("fixture `{name}`: {source}")]
    Fixture { name: String, source: Box<Error> },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
