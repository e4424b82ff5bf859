//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid shape {shape:?}: {reason}")]
    InvalidShape { shape: Vec<usize>, reason: String },

    #[error("shape mismatch: expected {expected}, got {actual}")]
    ShapeMismatch { expected: String, actual: String },

    #[error("invalid symmetry level {0}, must be in 0..=4")]
    InvalidLevel(u8),

    #[error("level {level} takes {expected} free parameters, got {actual}")]
    ParamCount {
        level: u8,
        expected: usize,
        actual: usize,
    },

    #[error("label {label} out of range 0..{classes}")]
    InvalidLabel { label: usize, classes: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{}: {reason} (offset {offset})", path.display())]
    Dataset {
        path: PathBuf,
        offset: u64,
        reason: String,
    },

    #[error("checkpoint {}: {reason}", path.display())]
    Checkpoint { path: PathBuf, reason: String },

    #[error("non-finite loss in epoch {epoch}; training aborted{}",
            last_eval_epoch.map(|e| format!(", metrics recorded through epoch {e}")).unwrap_or_default())]
    NonFiniteLoss {
        epoch: usize,
        last_eval_epoch: Option<usize>,
    },

    #[error("non-finite gradient at flat parameter index {index}")]
    NonFiniteGradient { index: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
