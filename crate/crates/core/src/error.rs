use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SimError {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParam { name: &'static str, reason: String },

    #[error("non-finite {kind} movement for agent {index} at step {t}; check model parameters")]
    NonFinite {
        kind: &'static str,
        index: usize,
        t: u32,
    },

    #[error("unknown policy `{0}` (expected proposed, fat, fat-occ or ots)")]
    UnknownPolicy(String),

    #[error("unknown placement `{0}` (expected bottom-left, top-right or surrounding)")]
    UnknownPlacement(String),

    #[error("unknown alignment sign `{0}` (expected as-printed or conventional)")]
    UnknownAlignmentSign(String),
}

pub type Result<T, E = SimError> = std::result::Result<T, E>;
