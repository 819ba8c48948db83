use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    #[error("edge ({0}, {1}) is non-manifold: more than two incident triangles")]
    NonManifoldEdge(usize, usize),

    #[error("vertices {0} and {1} coincide within 1e-12")]
    DuplicateVertices(usize, usize),

    #[error("triangle {0} has non-positive area")]
    DegenerateTriangle(usize),

    #[error("vertex index {0} out of range ({1} vertices)")]
    VertexOutOfRange(usize, usize),

    #[error("diagonal split parameter t = {0} outside (0, 1)")]
    InvalidSplitRatio(f64),

    #[error("local basis is numerically singular (condition estimate {0:.3e})")]
    SingularBasis(f64),

    #[error("factorization failed: zero pivot at permuted index {0}")]
    ZeroPivot(usize),

    #[error("solver residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },

    #[error("vertex {0} is not an interior quasi-singular vertex with a 4-triangle star")]
    NotSpuriousSite(usize),

    #[error("vertex {vertex} is not shared by triangles {tri_a} and {tri_b}")]
    JumpSiteMismatch {
        vertex: usize,
        tri_a: usize,
        tri_b: usize,
    },

    #[error("postprocess assumption violated: {0}")]
    AssumptionViolated(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
