use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate labels do not match")]
    LabelMismatch,

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("not a partial order / not a semilattice: {0}")]
    NotPartialOrder(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("too large: {0}")]
    TooLarge(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("zero functional has no representer in V")]
    ZeroFunctional,

    #[error("values do not define an a-linear functional on W (generator {index})")]
    InconsistentValues { index: usize },

    #[error("recovered representer disagrees with the functional on probe {probe}")]
    RepresenterMismatch { probe: usize },

    #[error("points are equal; no separating functional exists")]
    EqualPoints,

    #[error("no residuation functional separates the points")]
    NotSeparated,

    #[error("functional not representable within A (coordinate {index} is +inf)")]
    NotRepresentable { index: usize },

    #[error("duplicate input in sampled graph (pairs {first} and {second})")]
    DuplicateInput { first: usize, second: usize },
}
