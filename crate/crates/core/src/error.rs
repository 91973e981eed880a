use thiserror::Error;

/// Errors raised by the algebraic routines.
///
/// Precondition failures (bad input) and internal invariant failures are kept
/// apart so callers can map them to different exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operands live over different rings or fields")]
    MixedRings,
    #[error("colon by the zero polynomial")]
    ZeroDivisorArgument,
    #[error("ideal is not generated by monomials")]
    NotMonomial,
    #[error("map does not commute with the differentials at degree {0}")]
    NotAChainMap(i64),
    #[error("differentials compose to nonzero at degree {0}")]
    NotAComplex(i64),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("operation requires a group algebra of an elementary abelian p-group")]
    NotAGroupAlgebra,
    #[error("cohomology class is zero")]
    ZeroClass,
    #[error("monomial {0} of d~^2 is not divisible by any defining relation")]
    DecompositionFailure(String),
    #[error("degree cap {cap} exceeds what bound {bound} supports")]
    BoundTooSmall { cap: i64, bound: usize },
    #[error("variable identification does not match: {0}")]
    VariableMismatch(String),
    #[error("radical of the given classes differs from the prime")]
    NotRadicalGenerators,
    #[error("degree box has {cells} cells, cap is {cap}")]
    BoxTooLarge { cells: usize, cap: usize },
    #[error("primes are not pairwise incomparable")]
    NotIncomparable,
    #[error("invalid input: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that signal a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_) | Error::DecompositionFailure(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
