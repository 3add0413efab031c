use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Weyl group elements belong to different groups")]
    GroupMismatch,
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("root {root} takes the non-integral value {value} on h")]
    NonIntegralGrading { root: String, value: String },
    #[error("the grading of g is not integrable over sl(2): {0}")]
    NotIntegrable(String),
    #[error("h is not in the coroot lattice: {0}")]
    NotInCorootLattice(String),
    #[error("h is not the characteristic of an sl(2)-triple: {0}")]
    NotACharacteristic(String),
    #[error("t-weight 2 does not occur in g, so h admits no sl(2)-triple")]
    NoSl2Triple,
    #[error("internal error: {0}")]
    InternalError(String),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("virtual characters are not allowed here")]
    VirtualNotAllowed,
    #[error("truncation window too narrow: need [{need_lo}, {need_hi}], have [{have_lo}, {have_hi}]")]
    WindowTooNarrow {
        need_lo: i64,
        need_hi: i64,
        have_lo: i64,
        have_hi: i64,
    },
    #[error("out of regime: {0}")]
    OutOfRegime(String),
    #[error("UnsupportedLevi: {0}")]
    UnsupportedLevi(String),
    #[error("SingularBlockUnsupported: central character {0} is singular")]
    SingularBlockUnsupported(String),
    #[error("UnsupportedRank: multiplicity matrices need rank <= 2, got {0}")]
    UnsupportedRank(usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
