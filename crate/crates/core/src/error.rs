use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("duplicate vertex {vertex} in simplex {simplex:?}")]
    DuplicateVertex { vertex: usize, simplex: Vec<usize> },

    #[error("vertex index {vertex} out of range (complex has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("empty complex")]
    EmptyComplex,

    #[error("invalid complex JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: usize, found: usize },

    #[error("subspace containment violated")]
    NotContained,

    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("invalid simplicial map: {0}")]
    InvalidMap(String),

    #[error("classes belong to different cohomology rings")]
    MixedRings,

    #[error("cochain is not a cocycle of grade {grade}")]
    NotACocycle { grade: usize },

    #[error("input is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error(
        "declared connectivity s = {declared} is refuted: reduced mod-2 Betti number in grade {grade} is {betti}"
    )]
    ConnectivityRefuted {
        declared: usize,
        grade: usize,
        betti: usize,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("lower bound {lower} exceeds upper bound {upper}; the declared connectivity is wrong")]
    InconsistentBounds { lower: usize, upper: usize },
}
