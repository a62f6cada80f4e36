use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad failure class, used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Range,
    Data,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("token {position} ({token:?}): expected {expected} binary digits, found {found}")]
    WrongLength {
        position: usize,
        token: String,
        expected: usize,
        found: usize,
    },
    #[error("token {position} ({token:?}): invalid character {ch:?}, only 0 and 1 are allowed")]
    InvalidDigit {
        position: usize,
        token: String,
        ch: char,
    },
    #[error("token {position} ({token:?}): duplicate stimulus")]
    DuplicateStimulus { position: usize, token: String },
    #[error("category A is empty")]
    EmptyCategory,
    #[error("category A covers the whole stimulus space, category B would be empty")]
    FullCategory,
    #[error("invalid catalog id {0:?}")]
    InvalidClassId(String),

    #[error("dimension count {0} outside supported range 1..=8")]
    DimsOutOfRange(usize),
    #[error("stimulus {stimulus} does not fit in {dims} dimensions")]
    StimulusOutOfRange { stimulus: u16, dims: usize },
    #[error("category size {p} outside 1..={max} for {dims} dimensions")]
    ClassSizeOutOfRange { dims: usize, p: usize, max: usize },
    #[error("catalog class {index} does not exist, {dims}[{p}] has {count} classes")]
    ClassIndexOutOfRange {
        dims: usize,
        p: usize,
        index: usize,
        count: usize,
    },
    #[error("level {n} outside 0..={dims}")]
    LevelOutOfRange { n: usize, dims: usize },
    #[error("probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),
    #[error("weight {0} outside [0, 1]")]
    WeightOutOfRange(f64),
    #[error("tie tolerance {0} must be a non-negative number")]
    InvalidEpsilon(f64),
    #[error("aggregator {0} is only available through the two-level weighted metric")]
    UnsupportedAggregator(String),
    #[error("cell is empty")]
    EmptyCell,

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("need at least 2 observations, got {0}")]
    TooFewObservations(usize),
    #[error("orderings cover different identifiers")]
    IdentifierMismatch,
    #[error("row {row}: {message}")]
    Data { row: usize, message: String },
    #[error("{0}")]
    Io(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            WrongLength { .. }
            | InvalidDigit { .. }
            | DuplicateStimulus { .. }
            | EmptyCategory
            | FullCategory
            | InvalidClassId(_) => ErrorKind::Parse,
            DimsOutOfRange(_)
            | StimulusOutOfRange { .. }
            | ClassSizeOutOfRange { .. }
            | ClassIndexOutOfRange { .. }
            | LevelOutOfRange { .. }
            | ProbabilityOutOfRange(_)
            | WeightOutOfRange(_)
            | InvalidEpsilon(_)
            | UnsupportedAggregator(_)
            | EmptyCell => ErrorKind::Range,
            LengthMismatch { .. }
            | TooFewObservations(_)
            | IdentifierMismatch
            | Data { .. }
            | Io(_) => ErrorKind::Data,
        }
    }
}
