use thiserror::Error;

/// Errors raised by graph construction, distance computation and the
/// closed-form evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order must be at least 2, got {0}")]
    OrderTooSmall(usize),

    #[error("jump set is empty after reduction modulo {n}")]
    EmptyJumpSet { n: usize },

    #[error("complement of C_{n} has no edges")]
    EmptyComplement { n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: vertex {vertex} out of range for order {n}")]
    Range {
        line: usize,
        vertex: usize,
        n: usize,
    },

    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("invalid distance vector: {0}")]
    InvalidDistanceVector(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph does not have Property *: edge {{{u}, {v}}} dominates every other vertex")]
    PropertyStarViolated { u: usize, v: usize },

    #[error("routing has no path for ordered pair ({x}, {y})")]
    MissingPair { x: usize, y: usize },

    #[error("routing lists ordered pair ({x}, {y}) twice")]
    DuplicatePair { x: usize, y: usize },

    #[error("routing path for ({x}, {y}) uses non-edge {{{u}, {v}}}")]
    InvalidEdge {
        x: usize,
        y: usize,
        u: usize,
        v: usize,
    },

    #[error("routing path for ({x}, {y}) repeats vertex {vertex}")]
    NonElementary { x: usize, y: usize, vertex: usize },

    #[error("transmission sum {sum} on edge {{{u}, {v}}} does not exceed 2")]
    DegenerateTransmission { u: usize, v: usize, sum: String },

    #[error("reciprocal transmission sum {sum} on edge {{{u}, {v}}} does not exceed 2")]
    DegenerateReciprocalTransmission { u: usize, v: usize, sum: String },

    #[error("{0} is the documented exception to the closed form")]
    KnownException(String),

    #[error("{0} lies outside the closed form's effective domain")]
    OutOfDomain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
