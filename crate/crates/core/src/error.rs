use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("search budget of {0} nodes exceeded")]
    SearchBudgetExceeded(u64),
    #[error("combinatorial blowup: order {order} exceeds cap {cap}")]
    CombinatorialBlowup { order: usize, cap: usize },
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("not a ladder: {0}")]
    NotALadder(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("graph is not internally 4-connected")]
    NotInternallyFourConnected,
    #[error("not a Hamilton cycle: {0}")]
    NotHamiltonianCycle(String),
    #[error("graph6 decode error: {0}")]
    Graph6(String),
    #[error("corpus parse error at line {line}: {message}")]
    CorpusParse { line: usize, message: String },
    #[error("corpus is not attested exhaustive")]
    NonExhaustiveCorpus,
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
