//! Seeded inputs shared by the benchmarks.

use lingdist::{DistanceMatrix, Lexicon, SubstitutionTable, Symbol, Word, WordEntry};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Symbols the editable table has rules for, vowels and consonants mixed.
const SYMBOLS: &[char] = &[
    'a', 'e', 'i', 'o', 'u', 'b', 'p', 'd', 't', 'g', 'k', 'f', 'v', 's', 'z', 'm', 'n',
];

pub fn editable() -> SubstitutionTable {
    SubstitutionTable::builtin("editable").expect("builtin table")
}

pub fn random_symbols(rng: &mut impl Rng, len: usize) -> Vec<Symbol> {
    (0..len)
        .map(|_| Symbol::new(SYMBOLS[rng.random_range(0..SYMBOLS.len())]).unwrap())
        .collect()
}

/// `count` word pairs of length `len`.
pub fn word_pairs(seed: u64, count: usize, len: usize) -> Vec<(Vec<Symbol>, Vec<Symbol>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (random_symbols(&mut rng, len), random_symbols(&mut rng, len)))
        .collect()
}

/// A lexicon of `languages` unrelated languages with `concepts` words each.
pub fn lexicon(seed: u64, languages: usize, concepts: usize) -> Lexicon {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..languages)
        .map(|i| {
            let words = (0..concepts)
                .map(|_| {
                    let len = rng.random_range(3..=8);
                    WordEntry::single(Word::new(random_symbols(&mut rng, len))).unwrap()
                })
                .collect();
            (format!("lang{i}"), words)
        })
        .collect();
    Lexicon::new("words", None, rows).expect("valid lexicon")
}

/// Uniform random distances between `n` items.
pub fn random_matrix(seed: u64, n: usize) -> DistanceMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = (0..n).map(|i| format!("item{i}")).collect();
    let upper: Vec<f64> = (0..n * (n - 1) / 2).map(|_| rng.random::<f64>()).collect();
    DistanceMatrix::from_upper(labels, &upper).expect("valid matrix")
}
