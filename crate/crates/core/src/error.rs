use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification of failures, used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// A mathematical verdict came out negative (e.g. not a 3-transposition set).
    Verdict,
    /// Bad input: out-of-range parameters, malformed descriptors or labels.
    Usage,
    /// An enumeration or size cap was hit.
    ResourceCap,
    /// A self-check failed; indicates a bug rather than bad input.
    Internal,
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("structural mismatch: {0}")]
    Structure(String),

    #[error("element order exceeds cap {cap}")]
    OrderOverflow { cap: u64 },

    #[error("enumeration cap {cap} exceeded ({reached} elements reached)")]
    EnumerationCap { cap: usize, reached: usize },

    #[error("not a 3-transposition set: transpositions {i} and {j} have a product of order {}", order_text(.order))]
    NotThreeTransposition { i: usize, j: usize, order: Option<u64> },

    #[error("irregular component {component}: valencies {min}..{max}")]
    IrregularComponent { component: usize, min: usize, max: usize },

    #[error("unexpected subgroup: {}", match .order { Some(o) => format!("order {o}, expected 54"), None => "order above search cap".to_string() })]
    UnexpectedSubgroup { order: Option<usize> },

    #[error("degenerate alpha {alpha}: eigenvalues 0, 2 and alpha must be distinct")]
    DegenerateAlpha { alpha: String },

    #[error("not a sigma configuration: {0}")]
    NotSigmaConfiguration(String),

    #[error("radical is not an ideal: axis {axis} times radical vector {vector} leaves the radical")]
    RadicalNotIdeal { axis: usize, vector: usize },

    #[error("size cap exceeded: {what} is {size}, cap {cap}")]
    SizeCap { what: &'static str, size: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not in table: {0}")]
    NotInTable(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn order_text(order: &Option<u64>) -> String {
    match order {
        Some(o) => o.to_string(),
        None => "above the search cap".to_string(),
    }
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NotThreeTransposition { .. } | Error::UnexpectedSubgroup { .. } => ErrorKind::Verdict,
            Error::Structure(_)
            | Error::DegenerateAlpha { .. }
            | Error::NotSigmaConfiguration(_)
            | Error::InvalidParameter(_)
            | Error::NotInTable(_) => ErrorKind::Usage,
            Error::OrderOverflow { .. } | Error::EnumerationCap { .. } | Error::SizeCap { .. } => {
                ErrorKind::ResourceCap
            }
            Error::IrregularComponent { .. } | Error::RadicalNotIdeal { .. } | Error::Internal(_) => {
                ErrorKind::Internal
            }
            Error::Io(_) | Error::Json(_) => ErrorKind::Io,
        }
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
