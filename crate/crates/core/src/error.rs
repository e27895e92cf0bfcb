use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    #[error("too many edges ({0}); at most 64 are supported")]
    TooManyEdges(usize),

    #[error("operation requires a one-vertex ribbon graph, found {0} vertices")]
    NotOneVertex(usize),

    #[error("an edge is compared with itself")]
    SameEdge,

    #[error("edge set {0} does not span a quasi-tree")]
    NotQuasiTree(String),

    #[error("ribbon graph is disconnected ({0} components)")]
    Disconnected(usize),

    #[error("edge `{0}` is already resolved")]
    AlreadyResolved(String),

    #[error("expected an unsigned (all-positive) ribbon graph")]
    SignedInput,

    #[error("invalid edge order: {0}")]
    InvalidOrder(String),

    #[error("power of `{0}` is not representable")]
    NonRepresentablePower(String),

    #[error("reduction modulo w^2 - w needs non-negative integral w exponents, found {0}")]
    InvalidWPower(String),

    #[error("invalid state: {0}")]
    InvalidState(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}
