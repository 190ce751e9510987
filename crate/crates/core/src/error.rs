use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {order} exceeds the limit of {limit}")]
    OrderTooLarge { order: usize, limit: usize },

    #[error("bad edge ({0}, {1})")]
    BadEdge(usize, usize),

    #[error("malformed graph6 record: {0}")]
    MalformedGraph6(String),

    #[error("bad family spec: {0}")]
    BadSpec(String),

    #[error("pattern of order {0} exceeds the containment limit of 6")]
    PatternTooLarge(usize),

    #[error("vertex {0} is not playable")]
    IllegalMove(usize),

    #[error("state is terminal: every vertex is marked")]
    TerminalState,

    #[error("memo table exceeded its cap of {cap} entries")]
    StateSpaceBudgetExceeded { cap: usize },

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("{0}")]
    Usage(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
