use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] hopf_galois_core::Error),
    #[error("cannot read catalog {path}: {source}")]
    CatalogFile { path: String, source: std::io::Error },
    #[error("unknown transitive group {0}")]
    UnknownGroup(String),
    #[error("group {label} does not have degree {degree}")]
    DegreeOfGroup { label: String, degree: usize },
    #[error("degree {0} is not supported; use 4, 5 or 6")]
    Degree(usize),
    #[error("cannot build a thread pool: {0}")]
    Threads(String),
}

pub type Result<T> = std::result::Result<T, CliError>;
