use thiserror::Error;

/// Everything that can go wrong while building groups, representations,
/// voltage digraphs or spectra.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed group spec {spec:?}: {reason}")]
    GroupSpec { spec: String, reason: String },

    #[error("group order {order} exceeds the supported maximum of {max}")]
    GroupTooLarge { order: usize, max: usize },

    #[error("invalid group table: {0}")]
    GroupTable(String),

    #[error("unknown group element {0:?}")]
    UnknownElement(String),

    #[error("group has no irreducible representations built in: {0}")]
    UnsupportedFamily(String),

    #[error("invalid representation: {0}")]
    Representation(String),

    #[error("invalid character table: {0}")]
    CharacterTable(String),

    #[error("invalid digraph: {0}")]
    Digraph(String),

    #[error("unknown voltage name {name:?} on arc {from} -> {to}")]
    UnknownVoltage { name: String, from: String, to: String },

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("eigensolver failed on a {dim}x{dim} matrix: {reason}")]
    Eigensolver { dim: usize, reason: String },

    #[error("power sums are inconsistent: {0}")]
    InconsistentPowerSums(String),

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
