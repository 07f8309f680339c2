use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not exactly divisible")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("recurrence coefficient A({k}, {m}) has a zero denominator")]
    DenominatorZero { k: u64, m: i64 },
    #[error("internal inconsistency computing Psi_{d}: {detail}")]
    InternalInconsistency { d: u64, detail: String },
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
}
