use thiserror::Error;

/// Errors produced by the engine.
///
/// Variants split into two families: resource limits (the computation is
/// beyond desk scale and was cut off cleanly) and precondition violations
/// (the operation is undefined for the given input). `is_resource_limit`
/// and `is_precondition` expose the split for exit-code mapping.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("generator limit exceeded: {count} generators, cap {limit}")]
    GeneratorLimit { count: usize, limit: usize },

    #[error("exponent lattice too large: {points} points, cap {limit}")]
    LatticeLimit { points: u128, limit: u64 },

    #[error("oracle limit exceeded: lcm exponent mass {mass}, cap {limit}")]
    OracleLimit { mass: u32, limit: u32 },

    #[error("decomposition limit exceeded: more than {limit} components")]
    DecompositionLimit { limit: usize },

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal (the unit ideal was given)")]
    UnitIdeal,

    #[error("operation requires an equigenerated ideal")]
    NotEquigenerated,

    #[error("operation requires a square-free ideal")]
    NotSquarefree,

    #[error("power exponent must be at least 1")]
    InvalidPower,

    #[error("path length must be between 2 and the number of vertices")]
    InvalidPathLength,

    #[error("graph has no edges")]
    EmptyEdgeSet,

    #[error("graph must be connected")]
    Disconnected,

    #[error("edge multiset must be non-empty and drawn from the graph's edges")]
    InvalidEdgeMultiset,

    #[error("invalid graph: {0}")]
    InvalidGraph(&'static str),

    #[error("prime must be a non-empty set of distinct ring variables")]
    InvalidPrime,

    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),

    #[error("weighted oriented graph has no directed edges")]
    NoDirectedEdges,
}

impl Error {
    /// True for errors that signal the instance is beyond configured limits.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::GeneratorLimit { .. }
                | Error::LatticeLimit { .. }
                | Error::OracleLimit { .. }
                | Error::DecompositionLimit { .. }
        )
    }

    /// True for errors that signal a violated operation precondition.
    pub fn is_precondition(&self) -> bool {
        !self.is_resource_limit()
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
