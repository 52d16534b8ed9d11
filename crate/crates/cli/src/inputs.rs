//! Loading and validating input files.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};

use lingdist::subst::{SubstitutionTable, BUILTIN_TABLES};
use lingdist::Lexicon;

use crate::error::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

/// Parses a word database; an empty file is an error.
pub fn load_lexicon(path: &Path) -> Result<Lexicon, CliError> {
    let lex = Lexicon::parse(&read_text(path)?).map_err(|source| CliError::Lexicon {
        path: path.to_path_buf(),
        source,
    })?;
    if lex.is_empty() {
        return Err(CliError::Data(format!("{}: no word lists", path.display())));
    }
    if lex.arity() == 0 {
        return Err(CliError::Data(format!(
            "{}: word lists are empty",
            path.display()
        )));
    }
    Ok(lex)
}

/// A built-in table by name, otherwise a table file, with an optional gap override.
pub fn load_table(spec: &str, gap: Option<f64>) -> Result<SubstitutionTable, CliError> {
    let table = if BUILTIN_TABLES.contains(&spec) {
        SubstitutionTable::builtin(spec).expect("built-in tables parse")
    } else {
        let path = Path::new(spec);
        if !path.exists() {
            return Err(CliError::Usage(format!(
                "`{}` is neither a built-in table ({}) nor a file",
                spec,
                BUILTIN_TABLES.join(", ")
            )));
        }
        SubstitutionTable::parse(&read_text(path)?).map_err(|source| CliError::Table {
            path: path.to_path_buf(),
            source,
        })?
    };
    Ok(match gap {
        Some(g) => table.with_gap_penalty(g),
        None => table,
    })
}

fn csv_rows(path: &Path, header: &[&str]) -> Result<Vec<(u64, Vec<String>)>, CliError> {
    let text = read_text(path)?;
    let bad = |line: u64, message: String| CliError::Csv {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let found = reader.headers().map_err(|e| bad(1, e.to_string()))?.clone();
    if found.iter().collect::<Vec<_>>() != header {
        return Err(bad(1, format!("expected header `{}`", header.join(","))));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            bad(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line());
        rows.push((line, record.iter().map(str::to_string).collect()));
    }
    Ok(rows)
}

/// Ingested geographic distances between places, keyed by unordered pair.
#[derive(Clone, Debug)]
pub struct GeoTable {
    path: PathBuf,
    distances: HashMap<(String, String), f64>,
}

fn unordered(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

impl GeoTable {
    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn get(&self, a: &str, b: &str) -> Result<f64, CliError> {
        self.distances
            .get(&unordered(a, b))
            .copied()
            .ok_or_else(|| CliError::MissingPair {
                path: self.path.clone(),
                a: a.to_string(),
                b: b.to_string(),
            })
    }
}

/// Reads `place_a,place_b,distance_km`. Pairs are unordered and may appear once.
pub fn load_geo(path: &Path) -> Result<GeoTable, CliError> {
    let mut distances = HashMap::new();
    for (line, row) in csv_rows(path, &["place_a", "place_b", "distance_km"])? {
        let bad = |message: String| CliError::Csv {
            path: path.to_path_buf(),
            line,
            message,
        };
        let (a, b) = (&row[0], &row[1]);
        if a.is_empty() || b.is_empty() {
            return Err(bad("empty place name".to_string()));
        }
        if a == b {
            return Err(bad(format!("`{}` paired with itself", a)));
        }
        let d: f64 = row[2]
            .parse()
            .ok()
            .filter(|d: &f64| d.is_finite() && *d >= 0.0)
            .ok_or_else(|| bad(format!("bad distance `{}`", row[2])))?;
        if distances.insert(unordered(a, b), d).is_some() {
            return Err(bad(format!("duplicate pair `{}`, `{}`", a, b)));
        }
    }
    Ok(GeoTable {
        path: path.to_path_buf(),
        distances,
    })
}

/// Reads `label,class`; each label may appear once.
pub fn load_truth(path: &Path) -> Result<HashMap<String, String>, CliError> {
    let mut truth = HashMap::new();
    for (line, row) in csv_rows(path, &["label", "class"])? {
        if row[0].is_empty() || row[1].is_empty() {
            return Err(CliError::Csv {
                path: path.to_path_buf(),
                line,
                message: "empty label or class".to_string(),
            });
        }
        if truth.insert(row[0].clone(), row[1].clone()).is_some() {
            return Err(CliError::Csv {
                path: path.to_path_buf(),
                line,
                message: format!("duplicate label `{}`", row[0]),
            });
        }
    }
    Ok(truth)
}
