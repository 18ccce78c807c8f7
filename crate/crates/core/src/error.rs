use thiserror::Error;

/// Structural violations when building a [`crate::Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// What went wrong on a given line of a text input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("malformed line: {0}")]
    MalformedLine(String),
    #[error("expected {expected} entries, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("{0}")]
    Graph(GraphError),
    #[error("{0}")]
    Invalid(String),
}

/// A text-format error. `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: [{code}] {kind}", code = self.code())]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }

    /// Stable short code, distinct per failure class.
    pub fn code(&self) -> &'static str {
        match &self.kind {
            ParseErrorKind::MalformedHeader(_) => "E-HEADER",
            ParseErrorKind::MalformedLine(_) => "E-LINE",
            ParseErrorKind::CountMismatch { .. } => "E-COUNT",
            ParseErrorKind::Graph(GraphError::SelfLoop(_)) => "E-LOOP",
            ParseErrorKind::Graph(GraphError::DuplicateEdge(..)) => "E-DUPLICATE",
            ParseErrorKind::Graph(GraphError::VertexOutOfRange { .. }) => "E-RANGE",
            ParseErrorKind::Invalid(_) => "E-INVALID",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("form degree {0} exceeds the supported maximum of {1}")]
    DegreeTooLarge(usize, usize),
}

/// Failures of the adapted-map invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("odd dimension {0} admits no complex structure")]
    OddDimension(usize),
    #[error("basis element {0} is its own partner")]
    FixedPoint(usize),
    #[error("partner table is not an involution at {0}")]
    NotInvolution(usize),
    #[error("J does not square to -1 on the orbit of {0}")]
    SignMismatch(usize),
    #[error("basis element {0} appears in more than one orbit")]
    Duplicate(usize),
    #[error("basis element {0} appears in no orbit")]
    Missing(usize),
    #[error("certificate is for {found_n} vertices / {found_m} edges, graph has {n} / {m}")]
    GraphMismatch { n: usize, m: usize, found_n: usize, found_m: usize },
    #[error("unknown basis token {0}")]
    UnknownToken(String),
}

/// Violations of the basic-graph or expansion-plan rules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("J is not integrable")]
    NotIntegrable,
    #[error("edge {0:?} lies in no complex wedge")]
    NoWedge((usize, usize)),
    #[error("orbit of basis element {0} does not fit the basic decomposition")]
    BadOrbit(usize),
    #[error("basic decomposition is inconsistent: {0}")]
    BadDecomposition(String),
    #[error("wedge centre {centre} coincides with an endpoint")]
    CentreIsEndpoint { centre: usize },
    #[error("vertex {0} is not paired with a vertex")]
    EndpointNotPaired(usize),
    #[error("wedge edge {0:?} already present")]
    EdgeExists((usize, usize)),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("Gram matrix is {found}x{found}, algebra has dimension {dim}")]
    Dimension { dim: usize, found: usize },
    #[error("Gram matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("Gram matrix is singular")]
    Singular,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64, nodes: u64 },
    #[error("basis of dimension {dim} is too large for exhaustive enumeration (limit {limit})")]
    BasisTooLarge { dim: usize, limit: usize },
    #[error("graph is not a forest")]
    NotForest,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0}")]
    Unknown(String),
    #[error("invalid parameters for {family}: {reason}")]
    BadParams { family: String, reason: String },
}
