use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ground set: n = {n}, k = {k} (need 1 <= k <= n <= 64)")]
    InvalidGround { n: u32, k: u32 },

    #[error("element {element} outside [1, {n}]")]
    ElementOutOfRange { element: u32, n: u32 },

    #[error("set has {got} elements, expected {expected}")]
    WrongSize { got: u32, expected: u32 },

    #[error("set elements must be strictly increasing")]
    Unsorted,

    #[error("duplicate member {0:?}")]
    DuplicateMember(Vec<u32>),

    #[error("C({n},{k}) = {count} exceeds the family capacity of {cap}")]
    TooLarge {
        n: u32,
        k: u32,
        count: u64,
        cap: u64,
    },

    #[error("families live on different ground sets: n = {0} vs n = {1}")]
    GroundMismatch(u32, u32),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("malformed document: {0}")]
    Document(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Document(e.to_string())
    }
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
