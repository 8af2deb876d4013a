use thiserror::Error;

/// Errors raised by field construction, polynomial algebra and the
/// exhaustive verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u32),
    #[error("modulus has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("field F_{p}^{degree} is too large for 32-bit element encoding")]
    FieldTooLarge { p: u32, degree: u32 },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("objects live over different fields")]
    FieldMismatch,
    #[error("exhaustive search over {needed} items exceeds the budget of {budget}")]
    TooLargeToExhaust { needed: u128, budget: u128 },
    #[error("subspace is not maximum {0}-scattered")]
    NotMaximumScattered(usize),
    #[error("operation requires ambient dimension {expected}, got {got}")]
    WrongAmbient { expected: usize, got: usize },
    #[error("subspace has F_q-dimension {0}, which is not a multiple of n = {1}")]
    WrongDimension(usize, usize),
    #[error("subspace does not span the ambient space over the extension field")]
    NotFullSpan,
    #[error("code is degenerate")]
    DegenerateCode,
    #[error("code has minimum distance 1")]
    MinDistanceOne,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("shift K = {k} is not coprime to n = {n}")]
    NonCoprimeShift { k: u32, n: u32 },
    #[error("hypothesis out of range: {0}")]
    HypothesisOutOfRange(String),
    #[error("no embedding of the base field into the extension was found")]
    NoCompatibleEmbedding,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Upper bound on the number of items an exhaustive routine may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u128);

impl Budget {
    pub const DEFAULT: Budget = Budget(1 << 24);

    pub fn unlimited() -> Self {
        Budget(u128::MAX)
    }

    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.0 {
            Err(Error::TooLargeToExhaust {
                needed,
                budget: self.0,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
