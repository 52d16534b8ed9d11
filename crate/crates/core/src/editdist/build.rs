use super::{entry_distance, DistanceError};
use crate::lexicon::Lexicon;
use crate::matrix::DistanceMatrix;
use crate::subst::SubstitutionTable;

/// Mean entry distance over corresponding concepts of two languages.
pub fn language_distance(
    lex: &Lexicon,
    lang_a: &str,
    lang_b: &str,
    table: &SubstitutionTable,
) -> Result<f64, DistanceError> {
    let a = lex
        .language(lang_a)
        .ok_or_else(|| DistanceError::UnknownLanguage(lang_a.to_string()))?;
    let b = lex
        .language(lang_b)
        .ok_or_else(|| DistanceError::UnknownLanguage(lang_b.to_string()))?;
    if a.is_empty() {
        return Err(DistanceError::NoConcepts);
    }
    let sum: f64 = a
        .iter()
        .zip(b)
        .map(|(x, y)| entry_distance(x, y, table))
        .sum();
    Ok(sum / a.len() as f64)
}

/// Language-by-language matrix of [`language_distance`].
pub fn language_matrix(
    lex: &Lexicon,
    table: &SubstitutionTable,
) -> Result<DistanceMatrix, DistanceError> {
    if lex.len() < 2 {
        return Err(DistanceError::TooFewLanguages {
            needed: 2,
            found: lex.len(),
        });
    }
    if lex.arity() == 0 {
        return Err(DistanceError::NoConcepts);
    }
    let langs: Vec<_> = lex.languages().map(|(_, e)| e).collect();
    let labels = lex.language_names().map(str::to_string).collect();
    let arity = lex.arity() as f64;
    Ok(DistanceMatrix::from_fn(labels, |i, j| {
        let sum: f64 = langs[i]
            .iter()
            .zip(langs[j])
            .map(|(x, y)| entry_distance(x, y, table))
            .sum();
        sum / arity
    })?)
}

/// Language-by-language matrix for a single concept.
pub fn concept_matrix(
    lex: &Lexicon,
    concept: usize,
    table: &SubstitutionTable,
) -> Result<DistanceMatrix, DistanceError> {
    if concept >= lex.arity() {
        return Err(DistanceError::IndexOutOfRange {
            index: concept,
            len: lex.arity(),
        });
    }
    let entries: Vec<_> = lex.languages().map(|(_, e)| &e[concept]).collect();
    let labels = lex.language_names().map(str::to_string).collect();
    Ok(DistanceMatrix::from_fn(labels, |i, j| {
        entry_distance(entries[i], entries[j], table)
    })?)
}

/// Every `(language, concept)` item against every other, whether or not
/// the concepts agree. Items are labeled `language:concept` and ordered by
/// language, then concept.
pub fn all_to_all_matrix(
    lex: &Lexicon,
    table: &SubstitutionTable,
) -> Result<DistanceMatrix, DistanceError> {
    if lex.is_empty() {
        return Err(DistanceError::TooFewLanguages {
            needed: 1,
            found: 0,
        });
    }
    let concepts = lex.concept_labels();
    let mut labels = Vec::new();
    let mut items = Vec::new();
    for (lang, entries) in lex.languages() {
        for (concept, entry) in concepts.iter().zip(entries) {
            labels.push(format!("{}:{}", lang, concept));
            items.push(entry);
        }
    }
    Ok(DistanceMatrix::from_fn(labels, |i, j| {
        entry_distance(items[i], items[j], table)
    })?)
}
