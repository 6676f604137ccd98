use std::fmt;

use thiserror::Error;

/// The first quandle axiom a table breaks, with the offending entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `a * a != a`.
    Idempotency { a: usize, product: usize },
    /// Column `column` (right translation) is not a permutation: `value` is hit by rows `rows.0` and `rows.1`.
    Invertibility {
        column: usize,
        value: usize,
        rows: (usize, usize),
    },
    /// `(a*b)*c != (a*c)*(b*c)`.
    SelfDistributivity { a: usize, b: usize, c: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::Idempotency { a, product } => {
                write!(f, "idempotency fails: {a}*{a} = {product}")
            }
            AxiomViolation::Invertibility { column, value, rows } => write!(
                f,
                "invertibility fails at column {column}: rows {} and {} both map to {value}",
                rows.0, rows.1
            ),
            AxiomViolation::SelfDistributivity { a, b, c } => {
                write!(f, "right self-distributivity fails at (a,b,c) = ({a},{b},{c})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed element: {0}")]
    MalformedElement(String),
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("not a quandle: {0}")]
    Axiom(AxiomViolation),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {what} (bound {bound})")]
    ResourceLimit { what: String, bound: u64 },
    #[error("parse error{}: {msg}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, msg: String },
    #[error("braid closure is a {components}-component link, not a knot")]
    LinkNotKnot { components: usize },
    #[error("data integrity error: {0}")]
    DataIntegrity(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse {
            line: None,
            msg: msg.into(),
        }
    }

    pub(crate) fn limit(what: impl Into<String>, bound: u64) -> Self {
        Error::ResourceLimit {
            what: what.into(),
            bound,
        }
    }

    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
