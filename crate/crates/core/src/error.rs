use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug)]
pub enum Error {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at line {line}: {detail}")]
    Parse { line: usize, detail: String },

    #[error("edge ({a}, {b}) is non-manifold: shared by {count} oriented faces")]
    NonManifoldEdge { a: usize, b: usize, count: usize },

    #[error("edge ({a}, {b}) lies on an open boundary (only one incident face)")]
    OpenBoundary { a: usize, b: usize },

    #[error("mesh is disconnected: face {face} is unreachable from face 0")]
    Disconnected { face: usize },

    #[error("face {face} is degenerate: {detail}")]
    DegenerateFace { face: usize, detail: String },

    #[error("mesh is not genus zero: Euler characteristic is {chi}, expected 2")]
    GenusNonZero { chi: i64 },

    #[error("vertex index {vertex} out of range (mesh has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("face {face} references vertex {vertex}, out of range (mesh has {count} vertices)")]
    FaceIndexOutOfRange { face: usize, vertex: usize, count: usize },

    #[error("signal channel {name:?}: {detail}")]
    BadChannel { name: String, detail: String },

    #[error("no disjoint cut paths found after {rounds} refinement rounds (target branch vertex {branch})")]
    CutPathsExhausted { rounds: usize, branch: usize },

    #[error("cut paths invalid: {detail}")]
    InvalidCutPaths { detail: String },

    #[error("invalid permutation: {detail}")]
    InvalidPermutation { detail: String },

    #[error("invalid ramification type: {detail}")]
    InvalidRamification { detail: String },

    #[error("permutation degrees disagree: {degrees:?}")]
    DegreeMismatch { degrees: Vec<usize> },

    #[error("RH violated: {lhs} \u{2260} {rhs}")]
    RhInfeasible { lhs: usize, rhs: usize },

    #[error("gluing produced a surface with Euler characteristic {chi}, not a torus")]
    NotATorus { chi: i64 },

    #[error("gluing mismatch: {detail}")]
    GluingMismatch { detail: String },

    #[error("homology loop search failed: {detail}")]
    LoopSearchFailed { detail: String },

    #[error("embedding has {count} flipped triangles (first face ids: {sample:?})")]
    FlippedTriangles { count: usize, sample: Vec<usize> },

    #[error("linear solve residual {residual:e} exceeds tolerance {tolerance:e}")]
    ResidualTooLarge { residual: f64, tolerance: f64 },

    #[error("linear solver failed: {detail}")]
    SolverFailed { detail: String },

    #[error("embedding check failed: {detail}")]
    EmbeddingInvalid { detail: String },

    #[error("pixel ({x}, {y}) is not covered by any face of the embedding")]
    UncoveredPixel { x: usize, y: usize },

    #[error("image resolution {n} too small (minimum 8)")]
    ResolutionTooSmall { n: usize },

    #[error("raster format error: {detail}")]
    RasterFormat { detail: String },

    #[error("ray casting failed: {detail}")]
    RayCast { detail: String },

    #[error("invalid argument: {detail}")]
    InvalidArgument { detail: String },
}
