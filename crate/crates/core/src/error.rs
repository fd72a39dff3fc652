use thiserror::Error;

/// Errors shared across the whole crate.
///
/// Variants mirror the failure modes of the individual operations; commands
/// translate them into process exit codes (see `cli`).
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("p = {0} is not an odd prime")]
    CompositeP(u64),
    #[error("extension degree must be >= 1")]
    ZeroDegree,
    #[error("mixing elements of different rings")]
    RingMismatch,
    #[error("requested precision {requested} exceeds ring working precision {cap}")]
    PrecisionCap { requested: i64, cap: i64 },
    #[error("determinant is not a unit (valuation {val} > 0 or undetectable)")]
    NonUnitDeterminant { val: String },
    #[error("matrix is not invertible modulo p")]
    NotInvertibleModP,
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("module Z_p^r/(U^d - 1) is not finite within precision")]
    InfiniteModule,
    #[error("composition argument has a nonzero constant term")]
    ConstantTermNonzero,
    #[error("linear part is singular, series cannot be reverted")]
    SingularLinearPart,
    #[error("convergence violated: minimal valuation {min_val} not above threshold {threshold}")]
    ConvergenceViolation { min_val: String, threshold: String },
    #[error("certified tail precision below one digit")]
    TailTooWeak,
    #[error("matrix u is not invertible over Z_p")]
    NonInvertibleU,
    #[error("group law has a non-integral coefficient: {0}")]
    IntegralityFailure(String),
    #[error("filtration level below the convergence threshold")]
    ThresholdViolation,
    #[error("degree budget exceeded: needed {needed}, cap {cap} ({detail})")]
    DegreeBudgetExceeded {
        needed: u64,
        cap: u64,
        detail: String,
    },
    #[error("retry budget exhausted in randomized search")]
    RandomnessExhausted,
    #[error("hypothesis (F) violated: det(U_N - 1) = 0 within precision")]
    HypothesisFViolated,
    #[error("residue degree incompatible: {0}")]
    IncompatibleResidueDegree(String),
    #[error("conductor data inconsistent: {0}")]
    InconsistentConductorData(String),
    #[error("missing Gauss sum for character index {0}")]
    MissingGaussSum(usize),
    #[error("normal basis surrogate does not have trace one")]
    TraceNotOne,
    #[error("conjugator is not Frobenius-fixed at working precision")]
    ConjugatorNotRational,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
