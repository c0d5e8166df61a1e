//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the trust, learning, protocol and harness layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Behavioral evidence must lie in the closed unit interval.
    #[error("evidence {0} outside [0, 1]")]
    InvalidEvidence(f64),

    /// A neighborhood became empty after exclusions, so no weights exist.
    #[error("neighborhood is empty after exclusions")]
    EmptyNeighborhood,

    /// Two parameter vectors (or a vector and a model) disagree on length.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A parameter vector contains NaN or infinite entries.
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    /// Objective weights must be nonnegative and sum to 1.
    #[error("objective weights must be nonnegative and sum to 1 (sum = {0})")]
    WeightSumViolation(f64),

    /// Weighted selection cannot produce enough distinct agents.
    #[error("only {positive} agents have positive selection weight, need {needed}")]
    DegenerateWeights { needed: usize, positive: usize },

    /// An aggregation denominator collapsed to zero.
    #[error("aggregation mass is zero")]
    ZeroMass,

    /// Topology parameters cannot produce a valid graph.
    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    /// Configuration failed validation.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Configuration text could not be parsed.
    #[error("config parse error: {0}")]
    ConfigParse(String),

    /// Dataset file is malformed.
    #[error("dataset error: {0}")]
    Dataset(String),

    /// Wraps a module error with the round and agent where it surfaced.
    #[error("round {round}, agent {agent}: {source}")]
    InRound {
        round: usize,
        agent: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Attach round/agent context to an error bubbling out of a protocol phase.
    pub fn in_round(self, round: usize, agent: usize) -> Self {
        Error::InRound {
            round,
            agent,
            source: Box::new(self),
        }
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
