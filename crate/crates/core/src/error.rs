use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable {name:?} at position {pos}")]
    UnknownVariable { pos: usize, name: String },

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("mismatched rings: {0}")]
    MismatchedRings(String),

    #[error("mismatched monomial orders")]
    MismatchedOrders,

    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    #[error("expected a nonzero polynomial of degree >= {min}, got degree {got:?}")]
    DegreeTooSmall { min: u32, got: Option<u32> },

    #[error("zero module (unit ideal) has no Hilbert series in this form")]
    ZeroModule,

    #[error("the unit ideal is not a valid input here")]
    UnitIdeal,

    #[error("hypersurface has non-isolated singularities: dim S/J_f = {dim}")]
    NonIsolated { dim: u32 },

    #[error("operation requires isolated singularities")]
    NotIsolated,

    #[error("operation not defined for smooth hypersurfaces (ct is infinite)")]
    SmoothInput,

    #[error("series prefix too short: need length {needed}, got {got}")]
    PrefixTooShort { needed: usize, got: usize },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
