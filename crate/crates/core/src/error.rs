use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the library.
///
/// Values are carried as their decimal rendering so the error type stays
/// independent of the integer scalar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error in {what}: {detail}")]
    Syntax { what: &'static str, detail: String },
    #[error("base entry {0} is below 2")]
    BaseTooSmall(String),
    #[error("base list is empty")]
    EmptyBaseList,
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("value {value} lies outside {domain}")]
    OutOfDomain { value: String, domain: &'static str },
    #[error("digit {digit} at position {position} is outside 0..{base}")]
    DigitOutOfRange {
        position: usize,
        digit: String,
        base: String,
    },
    #[error("word must start at position {expected}, found {found}")]
    WordStart { expected: usize, found: usize },
    #[error("recurring block is empty")]
    EmptyBlock,
    #[error("recurring block consists of maximal digits only; its shift value would be 1")]
    MaximalBlock,
    #[error("value 0 has no cofinite twin")]
    ZeroHasNoTwin,
    #[error("cofinite head is not canonical: digit at position {0} is maximal")]
    NonCanonicalCofinite(usize),
    #[error("search bound must be positive")]
    ZeroBound,
    #[error("tail minimum of `{0}` is not decidable")]
    UndecidableTailMin(String),
    #[error("invalid breakpoints: {0}")]
    InvalidBreakpoints(String),
}

impl Error {
    /// True for errors raised while reading textual input.
    pub fn is_parse(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::BaseTooSmall(_)
                | Error::EmptyBaseList
                | Error::UnknownRule(_)
        )
    }

    pub(crate) fn syntax(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Syntax {
            what,
            detail: detail.into(),
        }
    }
}
