//! Error types shared across the crate.

use thiserror::Error;

/// Atlas construction and lookup failures.
#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("malformed atlas: {0}")]
    MalformedAtlas(String),
    #[error("invalid surface configuration: {0}")]
    BadConfig(String),
    #[error("invalid curve name: {0}")]
    InvalidName(String),
    #[error("curve {name} outside the truncation window: {detail}")]
    IndexOutOfWindow { name: String, detail: String },
    #[error("atlas invariant `{constraint}` violated: {detail}")]
    InvariantViolation { constraint: String, detail: String },
    #[error("unknown curve {0}")]
    UnknownCurve(String),
}

/// Word grammar failures.
#[derive(Debug, Error)]
pub enum WordError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown name `{name}` at byte {pos}")]
    UnknownName { name: String, pos: usize },
}

/// Evaluation failures of words on the truncated lattice.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("unknown curve {0}")]
    UnknownCurve(String),
    #[error("twist about the zero class {0}")]
    ZeroClass(String),
    #[error("handle shift h[{index}] needs adjacent arms inside 1..={ends}")]
    InvalidShift { index: u32, ends: u32 },
    #[error(
        "out of window at token {token_index} ({token}): support {support} leaves the \
         declared domain"
    )]
    OutOfWindow {
        token_index: usize,
        token: String,
        support: String,
    },
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("dimension or domain mismatch: {0}")]
    DomainMismatch(String),
}

impl From<AtlasError> for EngineError {
    fn from(e: AtlasError) -> Self {
        match e {
            AtlasError::UnknownCurve(name) => EngineError::UnknownCurve(name),
            other => EngineError::UnknownCurve(other.to_string()),
        }
    }
}

/// Derivation script failures.
#[derive(Debug, Error)]
pub enum ScriptError {
    #[error("script {id} is not applicable at n = {n}")]
    NotApplicable { id: String, n: u32 },
    #[error("unknown script id {0}")]
    UnknownScript(String),
    #[error("step {index}: name `{name}` was not defined earlier in the script")]
    UndefinedName { index: usize, name: String },
    #[error("step {index}: {source}")]
    Word {
        index: usize,
        #[source]
        source: WordError,
    },
    #[error("malformed script: {0}")]
    Malformed(String),
    #[error("subgroup closure limited to n <= 10, got {0}")]
    TooLarge(u32),
}
