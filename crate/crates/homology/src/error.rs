use linkconc_core::LinkError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("diagram has {crossings} crossings, over the limit of {limit}")]
    TooLarge { crossings: usize, limit: usize },
    #[error("memory budget of {budget_mb} MB exceeded (estimated {estimate_mb} MB); raise LINKCONC_MEM_BUDGET_MB")]
    Budget { budget_mb: u64, estimate_mb: u64 },
    #[error("differential is not homogeneous in quantum degree")]
    NotHomogeneous,
    #[error("Lee homology in degree 0 is empty")]
    EmptyDegreeZero,
    #[error("s requires the symmetric-orientation hypothesis: {0}")]
    Hypothesis(String),
    #[error("s = {s} has the wrong parity for a {components}-component link")]
    Parity { s: i64, components: usize },
    #[error(transparent)]
    Link(#[from] LinkError),
}

pub type Result<T> = std::result::Result<T, HomologyError>;
