//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by any `odakit` operation.
///
/// Every fallible operation returns [`Result`]; panics are reserved for
/// internal invariant violations (bugs), never for bad input.
#[derive(Debug, Error)]
pub enum Error {
    /// The zero vector has no primitive direction.
    #[error("zero vector has no primitive direction")]
    ZeroVector,

    /// A square-matrix operation received a non-square matrix.
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    /// Two objects that must share an ambient dimension do not.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// An inequality system admits an unbounded direction.
    #[error("inequality system is unbounded: not a polytope")]
    Unbounded,

    /// An inequality system has no solutions.
    #[error("inequality system is infeasible: empty polytope")]
    Empty,

    /// A point set or polytope does not affinely span the ambient space.
    #[error("input spans an affine subspace of dimension {span} < ambient {ambient}")]
    NotFullDimensional { ambient: usize, span: usize },

    /// The polar dual is undefined because the origin is not strictly interior.
    #[error("origin is not strictly interior: dual undefined")]
    DualUndefined,

    /// The polar dual is not a lattice polytope, so its facet data cannot be
    /// written with integer right-hand sides (primal vertex not primitive).
    #[error("dual has a non-integral facet offset: primal vertex #{index} is not primitive")]
    NonIntegralDual { index: usize },

    /// A facet description was produced whose offset is not an integer;
    /// the input was not a lattice polytope.
    #[error("facet offset is not an integer: input is not a lattice polytope")]
    NonIntegralFacet,

    /// A queried point is not a vertex of the polytope.
    #[error("the given point is not a vertex of the polytope")]
    NotAVertex,

    /// A facet index is out of range.
    #[error("facet index {index} out of range ({count} facets)")]
    NoSuchFacet { index: usize, count: usize },

    /// A matrix operation required entries in {-1, 0, 1}.
    #[error("matrix entries must lie in {{-1, 0, 1}}")]
    EntriesOutOfRange,

    /// The tall-matrix unimodularity test needs strictly more rows than columns.
    #[error("matrix has {rows} rows <= {cols} cols: use the square or total unimodularity test")]
    NotTallMatrix { rows: usize, cols: usize },

    /// Facet vertices were expected to form a lattice basis.
    #[error("facet vertices do not form a lattice basis (determinant {det})")]
    NotALatticeBasis { det: String },

    /// A dilation factor below 1 was requested.
    #[error("dilation factor must be >= 1, got {got}")]
    BadDilation { got: String },

    /// `k_max` below 2 makes the per-k report empty.
    #[error("k_max must be >= 2, got {got}")]
    BadKMax { got: String },

    /// Normality is undefined for a polytope without lattice points.
    #[error("polytope has no lattice points")]
    NoLatticePoints,

    /// A decomposition query for a point outside the Minkowski sum.
    #[error("point is not in P+Q")]
    NotInSum,

    /// A lattice point of a Minkowski sum admitting no decomposition into
    /// lattice points of the summands: a genuine gap.
    #[error("gap point: no decomposition into lattice points of the summands")]
    GapPoint,

    /// The constructive decomposition's hypotheses do not hold.
    #[error("rounding hypotheses unsatisfied: {0}")]
    HypothesesUnsatisfied(String),

    /// A graph construction required a connected graph.
    #[error("graph is not connected: the symmetric edge polytope would not be full-dimensional")]
    DisconnectedGraph,

    /// A graph had an invalid edge (loop, duplicate, or out-of-range endpoint).
    #[error("invalid edge list: {0}")]
    BadGraph(String),

    /// An unknown fixture name was requested from the catalog.
    #[error("unknown catalog name {0:?}")]
    UnknownCatalogName(String),

    /// Triangulation input cannot span the required dimension.
    #[error("triangulation input is degenerate: {0}")]
    DegenerateInput(String),

    /// Structured-data ingestion failed (schema violation, field path included).
    #[error("data error: {0}")]
    Data(String),

    /// JSON (de)serialization failure.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    /// Underlying I/O failure while reading an input file.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
