//! Weighted edit distance between phonetic words and languages.
//!
//! The distance follows the Levenshtein recurrence with insertions and
//! deletions charged the table's gap penalty and substitutions charged
//! [`SubstitutionTable::cost`]:
//!
//! ```text
//! lev(i, 0) = i * gap
//! lev(0, j) = j * gap
//! lev(i, j) = min(lev(i-1, j) + gap,
//!                 lev(i, j-1) + gap,
//!                 lev(i-1, j-1) + cost(a[i], b[j]))
//! ```
//!
//! Distances are not a metric in general: a table with zero-cost pairs can
//! break the triangle inequality.

mod align;
mod build;
pub mod oc;

use thiserror::Error;

use crate::lexicon::{Symbol, WordEntry};
use crate::subst::SubstitutionTable;

pub use align::{alignments, Alignment, AlignmentColumn, DEFAULT_ALIGNMENT_LIMIT};
pub use build::{all_to_all_matrix, concept_matrix, language_distance, language_matrix};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DistanceError {
    #[error("cannot normalise the distance between two empty words")]
    BothEmpty,
    #[error("more than {limit} co-optimal alignments")]
    LimitExceeded { limit: usize },
    #[error("language `{0}` is not in the lexicon")]
    UnknownLanguage(String),
    #[error("need at least {needed} languages, found {found}")]
    TooFewLanguages { needed: usize, found: usize },
    #[error("concept index {index} out of range for {len} concepts")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("the lexicon has no concepts to compare")]
    NoConcepts,
    #[error(transparent)]
    Matrix(#[from] crate::matrix::MatrixError),
}

/// Weighted Levenshtein distance.
pub fn raw_distance(a: &[Symbol], b: &[Symbol], table: &SubstitutionTable) -> f64 {
    let gap = table.gap_penalty();
    let m = b.len();
    let mut prev: Vec<f64> = (0..=m).map(|j| j as f64 * gap).collect();
    let mut cur = vec![0.0; m + 1];
    for (i, &x) in a.iter().enumerate() {
        cur[0] = (i + 1) as f64 * gap;
        for (j, &y) in b.iter().enumerate() {
            let del = prev[j + 1] + gap;
            let ins = cur[j] + gap;
            let sub = prev[j] + table.cost(x, y);
            cur[j + 1] = del.min(ins).min(sub);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[m]
}

/// Raw distance divided by the length of the longer word.
pub fn normalized_distance(
    a: &[Symbol],
    b: &[Symbol],
    table: &SubstitutionTable,
) -> Result<f64, DistanceError> {
    let longest = a.len().max(b.len());
    if longest == 0 {
        return Err(DistanceError::BothEmpty);
    }
    Ok(raw_distance(a, b, table) / longest as f64)
}

/// Closest match between two synonym sets: the minimum normalised distance
/// over all pairs of variants.
pub fn entry_distance(x: &WordEntry, y: &WordEntry, table: &SubstitutionTable) -> f64 {
    let mut best = f64::INFINITY;
    for a in x.variants() {
        for b in y.variants() {
            // entries never hold empty words
            let d = raw_distance(a, b, table) / a.len().max(b.len()) as f64;
            best = best.min(d);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Word;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn hofa_table() -> SubstitutionTable {
        SubstitutionTable::builder()
            .pair('f', 'v', 0.2)
            .pair('e', 'o', 0.2)
            .build()
            .unwrap()
    }

    #[test]
    fn overa_hofa() {
        let t = hofa_table();
        assert_eq!(raw_distance(&w("overa"), &w("hofa"), &t), 3.2);
        assert_eq!(
            normalized_distance(&w("overa"), &w("hofa"), &t).unwrap(),
            0.64
        );
    }

    #[test]
    fn trivial_cases() {
        let t = SubstitutionTable::unit();
        assert_eq!(raw_distance(&w("abc"), &w("abc"), &t), 0.0);
        assert_eq!(raw_distance(&w(""), &w("abc"), &t), 3.0);
        assert_eq!(raw_distance(&w("abc"), &w(""), &t), 3.0);
        assert_eq!(raw_distance(&w("kitten"), &w("sitting"), &t), 3.0);
        assert_eq!(normalized_distance(&w(""), &w("ab"), &t).unwrap(), 1.0);
        assert_eq!(normalized_distance(&w("x"), &w("x"), &t).unwrap(), 0.0);
        assert_eq!(
            normalized_distance(&w(""), &w(""), &t),
            Err(DistanceError::BothEmpty)
        );
    }

    #[test]
    fn gap_penalty_scales_pure_indels() {
        let t = SubstitutionTable::unit().with_gap_penalty(0.5);
        assert_eq!(raw_distance(&w(""), &w("abcd"), &t), 2.0);
        // two gaps are cheaper than one mismatch
        assert_eq!(raw_distance(&w("a"), &w("b"), &t), 1.0);
    }

    #[test]
    fn entry_distance_takes_closest_synonym() {
        let t = SubstitutionTable::builtin("editable").unwrap();
        let it = WordEntry::new(vec![w("blu"), w("azzurro")]).unwrap();
        let en = WordEntry::single(w("blue")).unwrap();
        let expected = normalized_distance(&w("blu"), &w("blue"), &t)
            .unwrap()
            .min(normalized_distance(&w("azzurro"), &w("blue"), &t).unwrap());
        assert_eq!(entry_distance(&it, &en, &t), expected);
        assert_eq!(entry_distance(&en, &en, &t), 0.0);
    }

    #[test]
    fn entry_distance_two_by_two() {
        let t = SubstitutionTable::builtin("editable").unwrap();
        let lt = WordEntry::new(vec![w("melyna"), w("zhydra")]).unwrap();
        let ru = WordEntry::new(vec![w("sinij"), w("goluboj")]).unwrap();
        let mut pairs = Vec::new();
        for a in ["melyna", "zhydra"] {
            for b in ["sinij", "goluboj"] {
                pairs.push(normalized_distance(&w(a), &w(b), &t).unwrap());
            }
        }
        let min = pairs.iter().copied().fold(f64::INFINITY, f64::min);
        assert_eq!(entry_distance(&lt, &ru, &t), min);
        assert_eq!(entry_distance(&ru, &lt, &t), min);
    }
}
