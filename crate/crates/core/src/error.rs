use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("not a quandle: {0}")]
    InvalidQuandle(String),

    #[error("not a group: {0}")]
    InvalidGroup(String),

    #[error("group of order {order} exceeds the supported maximum of {max}")]
    GroupTooLarge { order: usize, max: usize },

    #[error("malformed input: {0}")]
    MalformedInput(String),

    /// The meridian is not central in the chosen subgroup.
    #[error("meridian {meridian} is not in the center of the subgroup{}", .witness.map(|p| format!(" (does not commute with {p})")).unwrap_or_else(|| " (not a member)".into()))]
    CentralityViolation { meridian: usize, witness: Option<usize> },

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("crossing pairing error: {0}")]
    Pairing(String),

    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },

    #[error("coset enumeration exceeded {cap} cosets")]
    CosetCapExceeded { cap: usize },

    #[error("permutation group closure exceeded {cap} elements")]
    ElementCapExceeded { cap: usize },

    #[error("order {order} exceeds the enumeration cap of {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the `qf` binary and the C API status codes.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidQuandle(_) | Error::InvalidGroup(_) => 1,
            Error::MalformedTable(_) | Error::Parse { .. } | Error::Pairing(_) | Error::Json(_) | Error::Io(_) => 2,
            Error::MalformedInput(_) | Error::CentralityViolation { .. } | Error::GroupTooLarge { .. } => 3,
            Error::SearchBudgetExceeded { .. } | Error::CosetCapExceeded { .. } | Error::ElementCapExceeded { .. } => 4,
            Error::OrderCapExceeded { .. } => 6,
        }
    }
}
