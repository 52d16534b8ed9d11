use std::path::PathBuf;

use lingdist::Linkage;

use crate::error::CliError;

/// Everything a workflow needs, gathered from the command line.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub lexicon: PathBuf,
    /// A built-in table name or a path to a table file.
    pub table: String,
    pub gap: Option<f64>,
    pub linkage: Linkage,
    /// Cluster count to force instead of the best silhouette cut.
    pub k: Option<usize>,
    /// Histogram bins for Bhattacharyya coefficients; Sturges' rule when unset.
    pub bins: Option<usize>,
    pub geo: Option<PathBuf>,
    pub truth: Option<PathBuf>,
    pub out: PathBuf,
}

impl RunConfig {
    pub fn new(lexicon: impl Into<PathBuf>, out: impl Into<PathBuf>) -> RunConfig {
        RunConfig {
            lexicon: lexicon.into(),
            table: "editable".to_string(),
            gap: None,
            linkage: Linkage::default(),
            k: None,
            bins: None,
            geo: None,
            truth: None,
            out: out.into(),
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(k) = self.k {
            if k < 2 {
                return Err(CliError::Usage(format!(
                    "--k must be at least 2, got {}",
                    k
                )));
            }
        }
        if let Some(gap) = self.gap {
            if !gap.is_finite() || gap < 0.0 {
                return Err(CliError::Usage(format!(
                    "--gap must be a non-negative number, got {}",
                    gap
                )));
            }
        }
        if self.bins == Some(0) {
            return Err(CliError::Usage("--bins must be at least 1".to_string()));
        }
        Ok(())
    }
}
