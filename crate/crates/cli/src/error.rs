use std::path::{Path, PathBuf};

use lingdist::cluster::ClusterError;
use lingdist::editdist::DistanceError;
use lingdist::lexicon::LexiconError;
use lingdist::stats::StatsError;
use lingdist::subst::TableError;
use thiserror::Error;

/// Process exit status for each error category.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 2;
    pub const DATA: i32 = 3;
    pub const LIMIT: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Lexicon { path: PathBuf, source: LexiconError },
    #[error("{}: {source}", path.display())]
    Table { path: PathBuf, source: TableError },
    #[error("{}: line {line}: {message}", path.display())]
    Csv {
        path: PathBuf,
        line: u64,
        message: String,
    },
    #[error("{}: no distance for the pair `{a}`, `{b}`", path.display())]
    MissingPair { path: PathBuf, a: String, b: String },
    #[error("{}: geographic distances must be positive for the log10 fit", path.display())]
    NonPositiveDistance { path: PathBuf },
    #[error("{context}: {source}")]
    Distance {
        context: String,
        source: DistanceError,
    },
    #[error("{context}: {source}")]
    Cluster {
        context: String,
        source: ClusterError,
    },
    #[error("{context}: {source}")]
    Stats { context: String, source: StatsError },
    #[error("{0}")]
    Data(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Distance {
                source: DistanceError::LimitExceeded { .. },
                ..
            } => exit::LIMIT,
            _ => exit::DATA,
        }
    }

    pub(crate) fn io(path: &Path, source: std::io::Error) -> CliError {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub(crate) fn distance(context: impl Into<String>) -> impl FnOnce(DistanceError) -> CliError {
        let context = context.into();
        move |source| CliError::Distance { context, source }
    }

    pub(crate) fn cluster(context: impl Into<String>) -> impl FnOnce(ClusterError) -> CliError {
        let context = context.into();
        move |source| CliError::Cluster { context, source }
    }

    pub(crate) fn stats(context: impl Into<String>) -> impl FnOnce(StatsError) -> CliError {
        let context = context.into();
        move |source| CliError::Stats { context, source }
    }
}
