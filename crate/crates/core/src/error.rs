use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed monomial: {0}")]
    Malformed(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("series constant term must be 1")]
    NonUnitConstant,

    #[error("series caps differ: {0} vs {1}")]
    CapMismatch(usize, usize),

    #[error("index {index} exceeds series cap {cap}")]
    CapOverflow { index: i64, cap: usize },

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("mixed variable families: {0}")]
    MixedFamilies(String),

    #[error("unexpected variable family `{found}`, expected {expected}")]
    WrongFamily { found: String, expected: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("window {window} is outside the anchored range {anchored} of {name} (pass --extrapolate to allow)")]
    OutsideAnchor { name: String, window: u32, anchored: u32 },

    #[error("invalid window {0}: must be between 1 and {max}", max = crate::catalog::MAX_WINDOW)]
    InvalidWindow(u32),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}
