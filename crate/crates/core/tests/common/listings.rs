//! Every explicit rule of the two built-in tables, listed by hand in the
//! order of the original clause listings.

use lingdist::{subst::SubstitutionTable, Symbol};

pub fn weight(class: &str) -> f64 {
    match class {
        "vowel" => 0.2,
        "longvowel" => 0.1,
        "consonant1" => 0.2,
        "consonant1x1" => 0.2,
        "consonant1x2" => 0.4,
        "consonant1x3" => 0.8,
        "longconsonant" => 0.05,
        "zero" => 0.0,
        other => panic!("unknown class {other}"),
    }
}

pub const EDITABLE_CONSONANTS: &[(char, char, &str)] = &[
    ('b', 'p', "consonant1"),
    ('d', 't', "consonant1"),
    ('g', 'k', "consonant1"),
    ('p', 'f', "consonant1"),
    ('t', 'T', "consonant1"),
    ('k', 'C', "consonant1"),
    ('C', 'h', "consonant1"),
    ('b', 'f', "consonant1x2"),
    ('d', 'T', "consonant1x2"),
    ('g', 'C', "consonant1x2"),
    ('g', 'h', "consonant1x3"),
    ('f', 'v', "consonant1"),
    ('g', 'j', "consonant1"),
    ('s', 'z', "consonant1"),
    ('v', 'w', "consonant1"),
    ('f', 'w', "consonant1x2"),
    ('F', 'w', "consonant1x2"),
    ('f', 'F', "zero"),
    ('S', 'š', "zero"),
    ('C', 'č', "zero"),
    ('T', 'θ', "zero"),
    ('š', 's', "consonant1"),
    ('S', 's', "consonant1"),
    ('C', 'S', "consonant1"),
    ('C', 'š', "consonant1"),
    ('č', 'S', "consonant1"),
    ('č', 'š', "consonant1"),
    ('K', 'k', "consonant1"),
    ('G', 'k', "consonant1"),
    ('G', 'g', "consonant1"),
    ('K', 'G', "consonant1"),
    ('Z', 'z', "consonant1"),
    ('c', 's', "consonant1"),
    ('x', 'k', "consonant1"),
    ('D', 'd', "consonant1"),
];

pub const GABY_CONSONANTS: &[(char, char, &str)] = &[
    ('b', 'p', "consonant1"),
    ('d', 't', "consonant1"),
    ('g', 'k', "consonant1"),
    ('p', 'f', "consonant1"),
    ('t', 'T', "consonant1"),
    ('k', 'C', "consonant1x2"),
    ('C', 'h', "consonant1x2"),
    ('b', 'f', "consonant1x2"),
    ('d', 'T', "consonant1x2"),
    ('g', 'C', "consonant1x2"),
    ('g', 'h', "consonant1x1"),
    ('f', 'v', "consonant1"),
    ('g', 'j', "consonant1"),
    ('s', 'z', "consonant1"),
    ('v', 'w', "consonant1"),
    ('f', 'w', "consonant1x2"),
    ('F', 'w', "consonant1x2"),
    ('f', 'F', "zero"),
    ('S', 'š', "zero"),
    ('C', 'č', "zero"),
    ('T', 'θ', "zero"),
    ('š', 's', "consonant1"),
    ('S', 's', "consonant1"),
    ('C', 'S', "consonant1"),
    ('C', 'š', "consonant1"),
    ('č', 'S', "consonant1"),
    ('č', 'š', "consonant1"),
    ('K', 'k', "consonant1"),
    ('K', 'g', "consonant1"),
    ('G', 'Z', "consonant1"),
    ('G', 'C', "consonant1"),
    ('K', 'G', "consonant1"),
    ('Z', 'z', "consonant1"),
    ('Z', 's', "consonant1x2"),
    ('c', 's', "consonant1"),
    ('x', 'k', "consonant1"),
    ('D', 'd', "consonant1"),
    ('K', 'g', "consonant1"),
    ('H', 'K', "consonant1"),
    ('H', 'g', "consonant1"),
    ('H', 'k', "consonant1"),
    ('H', 'h', "consonant1"),
];

/// The vowel clauses, one per head vowel, each with its alternatives list.
pub const VOWEL_LISTS: &[(char, &str)] = &[
    ('a', "eEiIoOuUyY"),
    ('e', "aAiIoOuUyY"),
    ('i', "aAeEoOuUyY"),
    ('o', "aAeEiIuUyY"),
    ('u', "aAeEiIoOyY"),
    ('y', "aAeEiIoOuU"),
    ('A', "EeIiOoUuYy"),
    ('E', "AaIiOoUuYy"),
    ('I', "AaEeOoUuYy"),
    ('O', "AaEeIiUuYy"),
    ('U', "AaEeIiOoYy"),
    ('Y', "AaEeIiOoUu"),
];

pub const LONG_SHORT: &[(char, char, &str)] = &[
    ('A', 'a', "longvowel"),
    ('E', 'e', "longvowel"),
    ('I', 'i', "longvowel"),
    ('O', 'o', "longvowel"),
    ('U', 'u', "longvowel"),
    ('Y', 'y', "longvowel"),
    ('M', 'm', "longconsonant"),
    ('N', 'n', "longconsonant"),
];

pub fn all_rules(consonants: &[(char, char, &'static str)]) -> Vec<(char, char, &'static str)> {
    let mut rules = consonants.to_vec();
    for &(head, others) in VOWEL_LISTS {
        rules.extend(others.chars().map(|o| (head, o, "vowel")));
    }
    rules.extend_from_slice(LONG_SHORT);
    rules
}

pub fn sym(c: char) -> Symbol {
    Symbol::new(c).unwrap()
}

/// Every listed rule of a builtin table, checked in both directions.
/// Returns the number of rules and the mismatches found.
pub fn check_builtin(name: &str) -> (usize, Vec<String>) {
    let consonants = match name {
        "editable" => EDITABLE_CONSONANTS,
        "editableGaby" => GABY_CONSONANTS,
        other => panic!("no listing for {other}"),
    };
    let table = SubstitutionTable::builtin(name).unwrap();
    let rules = all_rules(consonants);
    let mut failures = Vec::new();
    for &(a, b, class) in &rules {
        for (x, y) in [(a, b), (b, a)] {
            let got = table.cost(sym(x), sym(y));
            if got != weight(class) {
                failures.push(format!("{name}: cost({x},{y}) = {got}, listed {class}"));
            }
        }
    }
    (rules.len(), failures)
}
