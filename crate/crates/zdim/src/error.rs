use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid semiring JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("invalid semiring definition: {0}")]
    SemiringFormat(String),

    #[error("semiring rejected, required axioms fail:\n{0}")]
    AxiomsViolated(crate::semiring::AxiomReport),

    #[error("unknown builtin semiring {0:?} (expected \"boolean\" or \"chainN\" with N >= 2)")]
    UnknownBuiltin(String),

    #[error("matrix dimensions differ: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),

    #[error("carrier order mismatch: matrix over {0} elements, semiring has {1}")]
    OrderMismatch(u8, u8),

    #[error("invalid matrix: {0}")]
    BadMatrix(String),

    #[error("cannot parse matrix text {text:?}: {reason}")]
    MatrixText { text: String, reason: String },

    #[error("rank {rank} out of range for {n}x{n} matrices over {q} elements")]
    RankOutOfRange { rank: u64, n: usize, q: u8 },

    #[error("the zero matrix has no support class")]
    ZeroMatrix,

    #[error("invalid support class: {0}")]
    BadClass(String),

    #[error("enumeration budget exceeded: needs {required} matrices, cap is {cap}")]
    BudgetExceeded { required: u64, cap: u64 },

    #[error("search budget exceeded after {explored} nodes: dimension in [{lower}, {upper}]")]
    SearchBudgetExceeded {
        explored: u64,
        lower: u64,
        upper: u64,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{0}")]
    BadInput(String),
}

impl Error {
    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } | Error::SearchBudgetExceeded { .. } => 2,
            _ => 1,
        }
    }
}
