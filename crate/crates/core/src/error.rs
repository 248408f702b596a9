use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("the red point set is empty")]
    EmptyRedSet,
    #[error("non-finite coordinate in {set} point {index}")]
    NonFiniteInput { set: &'static str, index: usize },
    #[error("point is not in the annulus between s_min and s_max")]
    NotInAnnulus,
    #[error("growth toward {0} is unbounded")]
    UnboundedResult(crate::geom::Direction),
    #[error("line {line}: {reason}")]
    ParseError { line: u64, reason: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("oracle refuses {retained} retained blue points (cap {cap})")]
    OracleTooLarge { retained: usize, cap: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
