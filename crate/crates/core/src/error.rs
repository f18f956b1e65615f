use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("bad field: {0}")]
    BadField(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("algebra mismatch: {0}")]
    AlgebraMismatch(String),
    #[error("invalid quiver: {0}")]
    Quiver(String),
    #[error("infinite or oversized basis: {0}")]
    InfiniteBasis(String),
    #[error("module axioms fail: {0}")]
    NotAModule(String),
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("operation needs a quiver-presented algebra: {0}")]
    NotQuiverPresented(String),
    #[error("hypothesis fails: {0}")]
    Hypothesis(String),
    #[error("no lift exists: {0}")]
    NoLift(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("unknown name: {0}")]
    Unknown(String),
}

pub type Result<T> = core::result::Result<T, Error>;
