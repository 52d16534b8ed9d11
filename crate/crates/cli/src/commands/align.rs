use lingdist::editdist::{self, DEFAULT_ALIGNMENT_LIMIT};
use lingdist::Word;

use crate::artifacts::Outcome;
use crate::error::CliError;
use crate::inputs;

/// Two words to compare under a table.
#[derive(Clone, Debug, PartialEq)]
pub struct AlignRequest {
    pub a: String,
    pub b: String,
    pub table: String,
    pub gap: Option<f64>,
    pub limit: usize,
}

impl AlignRequest {
    pub fn new(a: impl Into<String>, b: impl Into<String>) -> AlignRequest {
        AlignRequest {
            a: a.into(),
            b: b.into(),
            table: "editable".to_string(),
            gap: None,
            limit: DEFAULT_ALIGNMENT_LIMIT,
        }
    }
}

/// Distances and every co-optimal alignment of two words, as text lines.
pub fn align(req: &AlignRequest) -> Result<Outcome, CliError> {
    if let Some(gap) = req.gap {
        if !gap.is_finite() || gap < 0.0 {
            return Err(CliError::Usage(format!(
                "--gap must be a non-negative number, got {}",
                gap
            )));
        }
    }
    let table = inputs::load_table(&req.table, req.gap)?;
    let word = |s: &str| {
        s.parse::<Word>()
            .map_err(|e| CliError::Usage(format!("`{}` is not a word: {}", s, e)))
    };
    let (a, b) = (word(&req.a)?, word(&req.b)?);
    let normalized = editdist::normalized_distance(&a, &b, &table)
        .map_err(CliError::distance("normalised distance"))?;
    let found = editdist::alignments(&a, &b, &table, req.limit)
        .map_err(CliError::distance("alignments"))?;

    let mut summary = vec![
        format!("raw distance: {}", editdist::raw_distance(&a, &b, &table)),
        format!("normalised distance: {}", normalized),
        format!("co-optimal alignments: {}", found.len()),
    ];
    summary.extend(found.iter().map(ToString::to_string));
    Ok(Outcome {
        summary,
        ..Outcome::default()
    })
}
