use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid sign entry {0}, expected +1 or -1")]
    InvalidSign(i64),

    #[error("bit-width mismatch: {left} vs {right}")]
    WidthMismatch { left: u32, right: u32 },

    #[error("index {index} does not fit in {bits} bits")]
    IndexOutOfRange { index: u64, bits: u32 },

    #[error("generator e{p} is out of range for dimension {n}")]
    GeneratorOutOfRange { p: usize, n: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("dimension {0} must be even")]
    OddDimension(usize),

    #[error("dimension {0} is too small")]
    DimensionTooSmall(usize),

    #[error("word of length {0} exchanges the half-spin spaces")]
    OddWord(usize),

    #[error("exponential factors share the index {0}")]
    OverlappingPairs(usize),

    #[error("element is not homogeneous of grade {0}")]
    WrongGrade(usize),

    #[error("real forms are provided only for stages congruent to 0, 1, 2, 4 mod 8, got {0}")]
    UnsupportedResidue(usize),

    #[error("spinor is not in the real span of the target basis")]
    NotInSpan,

    #[error("expansion coefficient {0} is not rational")]
    NotRational(String),

    #[error("expansion coefficient {0} is not real")]
    NotReal(String),

    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,

    #[error("matrix is singular")]
    Singular,

    #[error("dimension {n} exceeds the oracle limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("unsupported eigenvalue {0}")]
    UnsupportedEigenvalue(String),

    #[error("form degree {0} exceeds 8")]
    DegreeOverflow(usize),

    #[error("field index {index} out of range 1..={max}")]
    FieldIndex { index: usize, max: usize },

    #[error("no decomposition of R^{n} into copies of dimension {d}")]
    NoDecomposition { n: usize, d: usize },

    #[error("product is not a signed basis element: {0}")]
    NotSignedBasis(String),

    #[error("stage must be at least 1")]
    InvalidStage,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
