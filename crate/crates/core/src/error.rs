use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} outside the supported range 2..=16")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#x} does not have degree {m}")]
    ModulusDegree { m: u32, modulus: u32 },
    #[error("modulus {modulus:#x} is reducible: divisible by {factor:#x}")]
    Reducible { modulus: u32, factor: u32 },
    #[error("element {value:#x} does not fit in GF(2^{m})")]
    ElementOutOfRange { value: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("basis has {got} elements, expected {expected}")]
    BasisLength { expected: usize, got: usize },
    #[error("basis elements are linearly dependent over GF(2)")]
    DependentBasis,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("polynomial degree {degree} exceeds limit {limit}")]
    DegreeTooLarge { degree: usize, limit: usize },
    #[error("support element {0:#x} appears more than once")]
    DuplicateSupport(u16),
    #[error("multiplier at position {0} is zero")]
    ZeroMultiplier(usize),
    #[error("invalid code parameters: {0}")]
    InvalidParameters(String),
    #[error("Goppa polynomial vanishes at support element {0:#x}")]
    GoppaRootOnSupport(u16),
    #[error("Goppa polynomial has a repeated root")]
    NonSeparable,
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("operation requires a binary (alternant or Goppa) code")]
    NotBinary,
    #[error("symbol at position {0} is not binary")]
    NonBinarySymbol(usize),
    #[error("parse error in {field} at position {position}: {message}")]
    Parse {
        field: String,
        position: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(field: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.to_string(),
            position,
            message: message.into(),
        }
    }
}
