use core::fmt;

/// Errors produced by the counting routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Rank zero, or a label sequence that does not match the declared rank.
    InvalidRank(usize),
    /// Two weights (or a weight and a triangle) disagree on the rank.
    RankMismatch { expected: usize, found: usize },
    /// A Dynkin label was negative.
    NegativeLabel { index: usize, value: i64 },
    /// The coupling parameters are not integral.
    NotInRootLattice,
    /// Hexagon index outside `i, j >= 1, i + j <= r`.
    InvalidHexagon { rank: usize, i: usize, j: usize },
    /// Simple-root index outside `1..=r`.
    InvalidRootIndex { rank: usize, index: usize },
    /// A routine needs more weights than it was given.
    TooFewWeights { needed: usize, found: usize },
    /// A rank-specific routine was called at another rank.
    UnsupportedRank { rank: usize },
    /// The query is beyond the size a routine accepts.
    ScaleLimit(&'static str),
    /// A true diagram reached the edge of the enumeration box.
    BoxTooSmall,
    /// Coefficient or entry shapes do not line up.
    ShapeMismatch,
    /// Integer overflow in an entry or a counter.
    Overflow,
    /// Text could not be parsed as a weight or weight list.
    Parse(ParseError),
}

/// Failure while parsing the `a,b,...;c,d,...` weight encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Empty,
    BadLabel,
    Negative,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => f.write_str("empty weight"),
            ParseError::BadLabel => f.write_str("label is not an integer"),
            ParseError::Negative => f.write_str("label is negative"),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank(r) => write!(f, "invalid rank {r}"),
            Error::RankMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::NegativeLabel { index, value } => {
                write!(f, "label {} is negative ({value})", index + 1)
            }
            Error::NotInRootLattice => f.write_str("not in root lattice"),
            Error::InvalidHexagon { rank, i, j } => {
                write!(f, "no hexagon ({i},{j}) at rank {rank}")
            }
            Error::InvalidRootIndex { rank, index } => {
                write!(f, "no simple root {index} at rank {rank}")
            }
            Error::TooFewWeights { needed, found } => {
                write!(f, "need at least {needed} weights, got {found}")
            }
            Error::UnsupportedRank { rank } => write!(f, "rank {rank} is not supported here"),
            Error::ScaleLimit(what) => write!(f, "scale limit exceeded: {what}"),
            Error::BoxTooSmall => f.write_str("enumeration box too small"),
            Error::ShapeMismatch => f.write_str("shape mismatch"),
            Error::Overflow => f.write_str("integer overflow"),
            Error::Parse(e) => write!(f, "parse error: {e}"),
        }
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
