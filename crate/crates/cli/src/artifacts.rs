use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::CliError;

/// Output files held in memory until a workflow has fully succeeded.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Artifacts {
    files: BTreeMap<PathBuf, String>,
}

impl Artifacts {
    pub fn new() -> Artifacts {
        Artifacts::default()
    }

    /// Adds a file at `rel`, relative to the output directory.
    pub fn add(&mut self, rel: impl Into<PathBuf>, content: String) {
        let rel = rel.into();
        let previous = self.files.insert(rel.clone(), content);
        debug_assert!(
            previous.is_none(),
            "artifact {} written twice",
            rel.display()
        );
    }

    pub fn get(&self, rel: impl AsRef<Path>) -> Option<&str> {
        self.files.get(rel.as_ref()).map(String::as_str)
    }

    pub fn paths(&self) -> impl Iterator<Item = &Path> {
        self.files.keys().map(PathBuf::as_path)
    }

    pub fn len(&self) -> usize {
        self.files.len()
    }

    pub fn is_empty(&self) -> bool {
        self.files.is_empty()
    }

    /// Writes every file under `out`, creating directories as needed.
    pub fn write_to(&self, out: &Path) -> Result<(), CliError> {
        for (rel, content) in &self.files {
            let path = out.join(rel);
            if let Some(parent) = path.parent() {
                fs::create_dir_all(parent).map_err(|e| CliError::io(parent, e))?;
            }
            fs::write(&path, content).map_err(|e| CliError::io(&path, e))?;
        }
        Ok(())
    }
}

/// What a workflow produced: files plus lines for the terminal.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    pub artifacts: Artifacts,
    pub summary: Vec<String>,
    pub warnings: Vec<String>,
}
