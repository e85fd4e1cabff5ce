use thiserror::Error;

/// Errors produced by the algebra routines.
///
/// Mathematical outcomes (`Singular`, `Undefined`, `DivisionByZero`) are kept
/// apart from malformed input so callers can tell them apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("singular matrix")]
    Singular,

    /// The complementary minor of a quasideterminant has no inverse.
    #[error("quasideterminant undefined at ({row}, {col})")]
    Undefined { row: usize, col: usize },

    #[error("row {0} belongs to the major minor")]
    InvalidRow(usize),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("quotient action is not well defined")]
    IllDefinedQuotient,

    #[error("sections live over different bases")]
    BaseMismatch,

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    /// True for outcomes that are mathematical facts about valid input
    /// rather than problems with the input itself.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::DivisionByZero | Error::Singular | Error::Undefined { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
