use linkconc_core::LinkError;
use linkconc_homology::HomologyError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConcordanceError {
    #[error("bad window: {0}")]
    Window(String),
    #[error("bad variant: {0}")]
    Variant(String),
    #[error("cube dimension {k} exceeds the {dims} twist coordinates")]
    CubeDimension { k: usize, dims: usize },
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Link(#[from] LinkError),
}

pub type Result<T> = std::result::Result<T, ConcordanceError>;
