use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element {element} does not belong to group {group}")]
    FamilyMismatch { group: String, element: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: String, right: String },

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("group {0} is infinite and cannot be enumerated")]
    InfiniteGroup(String),

    #[error("group {group} has more than {limit} elements")]
    ResourceLimit { group: String, limit: u64 },

    #[error("unsupported coset generator {g0} in {group}: supported shapes are k*e_j in free_abelian(d) and a_j^m in free(k)")]
    UnsupportedGenerator { group: String, g0: String },

    #[error("memory element {key} is not in the subgroup")]
    MemoryOutsideSubgroup { key: String },

    #[error("element list is not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("generating set must be nonempty")]
    EmptyGenerators,

    #[error("duplicate element {0}")]
    Duplicate(String),

    #[error("shift generator must differ from the identity")]
    IdentityShift,

    #[error("automaton is not a shift-difference automaton")]
    NotShiftDifference,

    #[error("target configuration must have zero base")]
    NonzeroBase,

    #[error("restricted automaton has trivial kernel")]
    TrivialKernel,

    #[error("window containment violated: {0} is read by the inner window but lies outside the outer window")]
    WindowContainment(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        // serde_json already reports line and column
        Error::Parse(e.to_string())
    }
}
