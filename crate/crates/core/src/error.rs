use crate::graph::Solution;

pub type Result<T> = std::result::Result<T, Error>;

/// A structural witness attached to a diagnostic: a named pattern or failed
/// claim together with the host vertices that realize it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub label: String,
    pub vertices: Vec<usize>,
}

impl Witness {
    pub fn new(label: impl Into<String>, vertices: Vec<usize>) -> Self {
        Witness { label: label.into(), vertices }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The input violates a structural guarantee of the target graph class.
    /// Carries the vertices that realize the violation.
    #[error("not in class: {reason}; witness {} = {:?}", witness.label, witness.vertices)]
    NotInClass { reason: String, witness: Witness },

    /// The branch-and-bound search ran out of nodes (or time). The best
    /// stable set found so far is attached; callers decide whether to use it.
    #[error("node budget exhausted (best weight so far: {})", best.weight)]
    BudgetExhausted { best: Solution },

    #[error("generation failed: {0}")]
    Generation(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Error {
        Error::Input(msg.into())
    }

    pub fn not_in_class(reason: impl Into<String>, witness: Witness) -> Error {
        Error::NotInClass { reason: reason.into(), witness }
    }
}
