use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("element encoding {value} out of range for GF({q})")]
    ElementOutOfRange { value: u64, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("field has odd extension degree; conjugation needs a field of square order")]
    NotAHermitianField,
    #[error("operation is undefined in characteristic 2")]
    EvenCharacteristic,
    #[error("operation requires characteristic 2")]
    OddCharacteristic,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("element is not a square")]
    NotASquare,
    #[error("element is not fixed by conjugation")]
    NotInFixedSubfield,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix is not Hermitian")]
    NotHermitianSymmetric,
    #[error("generator matrix has rank {rank} but {rows} rows")]
    RankDeficientGenerator { rank: usize, rows: usize },
    #[error("target hull dimension {t} outside 0..={k}")]
    TOutOfRange { t: usize, k: usize },
    #[error("{words} codewords exceed the enumeration bound {bound}")]
    TooLargeToEnumerate { words: u128, bound: u64 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("appended columns give hull dimension {got}, expected {expected}")]
    AppendRejected { expected: usize, got: usize },
    #[error("fixture mismatch: {0}")]
    FixtureMismatch(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
