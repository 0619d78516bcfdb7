use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a prime characteristic")]
    NotPrime(u32),
    #[error("field mismatch: characteristic {left} vs {right}")]
    FieldMismatch { left: u32, right: u32 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),
    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),
    #[error("not a chain complex: {0}")]
    NotChainComplex(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("invalid constructible space: {0}")]
    InvalidSpace(String),
    #[error("invalid rectangle [{a}, {b}] x [{c}, {d}]: need a < b < c < d")]
    InvalidRectangle { a: f64, b: f64, c: f64, d: f64 },
    #[error("invalid interval [{p}, {q}] for a module of length {len}")]
    InvalidInterval { p: usize, q: usize, len: usize },
    #[error("arrows {0} and {1} do not point the same way")]
    DirectionMismatch(usize, usize),
    #[error("negative multiplicity {value} computed for [{p}, {q}]")]
    NegativeMultiplicity { p: usize, q: usize, value: i64 },
    #[error("invalid decorated point: {0}")]
    InvalidPoint(String),
    #[error("measure is not additive: {0}")]
    NotAdditive(String),
    #[error("duality violated: {0}")]
    DualityViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
