use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed Cayley table text; positions are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Structurally invalid table in a JSON document; positions are 1-based
    /// row/column coordinates inside the `table` array.
    #[error("table row {row}, column {column}: {message}")]
    Table {
        row: usize,
        column: usize,
        message: String,
    },

    #[error("semigroup order {order} exceeds the supported maximum of {limit}")]
    SizeLimit { order: usize, limit: usize },

    #[error("invalid family spec `{spec}`: {reason}")]
    Family { spec: String, reason: String },

    #[error("enumeration supports orders 1 through 5, got {0}")]
    EnumerationOrder(usize),

    #[error("the operation is not associative: ({}*{})*{} != {}*({}*{})", .0.0, .0.1, .0.2, .0.0, .0.1, .0.2)]
    NotAssociative((usize, usize, usize)),

    #[error("left-ideal closure exceeded the cap of {0} ideals")]
    IdealOverflow(usize),

    #[error("graph has {vertices} vertices; {operation} supports at most {limit}")]
    GraphTooLarge {
        operation: &'static str,
        vertices: usize,
        limit: usize,
    },

    #[error("{0} requires a connected graph with at least two vertices")]
    Disconnected(&'static str),

    #[error("exact search aborted: time budget exhausted while computing {0}")]
    Aborted(&'static str),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for budget exhaustion, which the harness reports as inconclusive.
    pub fn is_abort(&self) -> bool {
        matches!(self, Error::Aborted(_))
    }
}
