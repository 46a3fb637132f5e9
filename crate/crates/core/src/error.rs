//! Error type shared by all modules. Diagnostic values are carried as `f64`
//! regardless of the working scalar so the enum stays non-generic.

/// Errors raised by validation, construction, and evaluation.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Bloch vector norm exceeds the unit ball (or misses the sphere where a
    /// pure state is required).
    #[error("invalid Bloch vector: norm {norm} outside the allowed range")]
    InvalidBloch { norm: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    Dimension { expected: usize, actual: usize },

    #[error("effect weight {weight} outside [0, 1]")]
    InvalidWeight { weight: f64 },

    /// A quantity that must be real came out with a non-negligible imaginary
    /// part.
    #[error("numeric consistency: imaginary part {imag:e} exceeds 1e-9")]
    NumericConsistency { imag: f64 },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("invalid task: {0}")]
    InvalidTask(String),

    #[error("protocol composition: {0}")]
    Composition(String),

    #[error(
        "enumeration too large: {required} partitions required, budget allows {budget}"
    )]
    EnumerationTooLarge { required: u128, budget: u128 },

    /// The planar weight formula divides by `sin a0 - sin(a0+a2) + sin a2`,
    /// which vanishes at the two-outcome boundary.
    #[error(
        "degenerate planar parameterization (denominator {denominator:e}); \
         use the explicit two-outcome constructor"
    )]
    DegenerateParameterization { denominator: f64 },

    /// Completeness residual of a parameterized POVM beyond what rounding can
    /// explain; indicates a bug, not bad input.
    #[error("planar parameterization bug: completeness residual {residual:e}")]
    ParameterizationBug { residual: f64 },

    #[error("value {value} outside the domain [{min}, {max}]")]
    Domain { value: f64, min: f64, max: f64 },

    #[error("unsupported measurement geometry: {0}")]
    UnsupportedGeometry(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
