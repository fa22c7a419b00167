use thiserror::Error;

/// Error type shared across the library.
///
/// Variants map onto process exit codes at the CLI boundary:
/// `Usage` -> 1, data/format/degeneracy -> 2, `Numeric` -> 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error("degenerate scene: {0}")]
    DegenerateScene(String),

    #[error("degenerate clustering: {0}")]
    DegenerateClustering(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit code for the CLI: 0 success, 1 usage, 2 data/format, 3 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 1,
            Error::Numeric(_) => 3,
            Error::Dimension(_)
            | Error::Domain(_)
            | Error::DegenerateScene(_)
            | Error::DegenerateClustering(_)
            | Error::DegenerateInput(_)
            | Error::DegenerateGeometry(_)
            | Error::Format(_)
            | Error::Io(_) => 2,
        }
    }
}
