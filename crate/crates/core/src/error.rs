use thiserror::Error;

/// Errors raised by the hierarchy library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{value} has no inverse modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not unitary")]
    NotUnitary,

    #[error("value is not an element of the cyclotomic field: {0}")]
    NotInField(String),

    #[error("gate is not a Pauli gate")]
    NotPauli,

    #[error("gate does not have order {0}")]
    WrongOrder(u32),

    #[error("gate is not Clifford")]
    NotClifford,

    #[error("gate is not semi-Clifford: {0}")]
    NotSemiClifford(String),

    #[error("gate is not in level {0} of the hierarchy")]
    NotInLevel(u32),

    #[error("matrix is not diagonal")]
    NotDiagonal,

    #[error("symplectic matrix has determinant {0}, expected 1")]
    BadDeterminant(u64),

    #[error("invalid rank polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("determinant of diagonal gate is not 1")]
    DeterminantNotOne,

    #[error("shift must be nonzero")]
    ZeroShift,

    #[error("pair is not a conjugate pair: {0}")]
    NotConjugatePair(String),

    #[error("precision {needed} exceeds context precision {available}")]
    PrecisionExceeded { needed: u32, available: u32 },

    #[error("level {k} has {count} gates, above the budget of {budget}")]
    BudgetExceeded { k: u32, count: u128, budget: u128 },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
