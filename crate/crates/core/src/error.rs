use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("root q = {q} is not a residue in [0, {p})")]
    RootOutOfRange { q: u64, p: u64 },
    #[error("N must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("Assumption (A) fails: {0}")]
    AssumptionA(String),
    #[error("coefficient fields differ")]
    FieldMismatch,
    #[error("N differs: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("subspace is not contained in the ambient space")]
    NotContained,
    #[error("map is not a homomorphism of N-complexes (fails at degree {0})")]
    NotHomomorphism(i64),
    #[error("not an N-complex: {0}")]
    InvalidComplex(String),
    #[error("invalid short exact sequence: {0}")]
    InvalidSes(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("characteristic {p} is too small for relations of degree {n}")]
    Characteristic { p: u64, n: usize },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("schema error: {0}")]
    Schema(String),
}
