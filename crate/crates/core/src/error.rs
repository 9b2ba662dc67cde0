use thiserror::Error;

/// Errors reported by the counting and enumeration routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Sequences are 1-indexed; there is no term 0.
    #[error("sequence term index must be at least 1")]
    ZeroSequenceIndex,

    /// Vertex index outside the graph.
    #[error("vertex index i={i} outside 1..={n}")]
    VertexOutOfRange { i: u32, n: u32 },

    /// The per-vertex edge-count sum is only defined on non-empty paths.
    #[error("per-vertex edge count requires n >= 1")]
    EmptyPath,

    /// Closed form / convolution for cycle edge counts needs n > h.
    #[error("defined only for n > h (got h={h}, n={n})")]
    BelowDiagonal { h: u32, n: u32 },

    /// Enumeration would exceed the configured capacity.
    #[error("{n} vertices exceed the enumeration limit of {limit}")]
    CapacityExceeded { n: u32, limit: u32 },

    /// Lucas strings (and the Lucas cube) only exist for n >= 2.
    #[error("Lucas strings require n >= 2 (got n={n})")]
    LucasTooShort { n: u32 },

    /// A family handed to the Hasse builder was not downward closed.
    #[error("family is not downward closed: {missing} missing below {parent}")]
    NotDownwardClosed { missing: String, parent: String },

    /// Bit strings or vertex sets of different widths were mixed.
    #[error("mixed bit widths: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
