use thiserror::Error;

/// Errors surfaced by the computational modules and the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group label `{0}`")]
    InvalidGroup(String),

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("weight has length {got}, expected rank {expected}")]
    RankMismatch { expected: usize, got: usize },

    #[error("operands belong to different groups ({0} vs {1})")]
    GroupMismatch(String, String),

    #[error("character is not Weyl-invariant at weight {0:?}")]
    NotWeylInvariant(Vec<i64>),

    #[error("operation index must be at least 1, got {0}")]
    BadOperationIndex(i64),

    #[error("group {0} is not simply connected times a torus")]
    NotSimplyConnected(String),

    #[error("unexpected denominator in a quantity that must be integral: {0}")]
    NonIntegral(String),

    #[error("linear algebra failure: {0}")]
    Singular(String),

    #[error("characteristic polynomial has a root that is not a power of two: remaining factor {0}")]
    UnexpectedEigenvalue(String),

    #[error("inconsistent bookkeeping: {0}")]
    Inconsistent(String),

    #[error("ambiguous exact sequence: {0}")]
    Ambiguous(String),

    #[error("polynomial division is not exact: {0}")]
    InexactDivision(String),

    #[error("expression is not invariant under the required symmetry: {0}")]
    NotInvariant(String),

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("cache entry {path} is corrupt ({reason}); delete it or clear the cache directory")]
    CacheCorrupt { path: String, reason: String },

    #[error("computation `{0}` is long-running; pass --allow-long to run it")]
    LongGated(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
