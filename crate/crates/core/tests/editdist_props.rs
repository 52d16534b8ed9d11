mod common;

use common::{all_alignments, naive_distance, symbols, RandomCosts, ALPHABET};
use lingdist::editdist::{self, oc, DistanceError, DEFAULT_ALIGNMENT_LIMIT};
use lingdist::{AlignmentColumn, DistanceMatrix, Lexicon, SubstitutionTable, WordEntry};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(proptest::sample::select(ALPHABET.to_vec()), 0..=max)
        .prop_map(|v| v.into_iter().collect())
}

fn costs(seed: u64) -> RandomCosts {
    RandomCosts::generate(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn chars(s: &str) -> Vec<char> {
    s.chars().collect()
}

fn same_cost(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn matches_naive_recursion(a in word(6), b in word(6), seed in any::<u64>()) {
        let c = costs(seed);
        let table = c.table();
        prop_assert_eq!(
            editdist::raw_distance(&symbols(&a), &symbols(&b), &table),
            naive_distance(&chars(&a), &chars(&b), &c)
        );
    }

    #[test]
    fn symmetric(a in word(8), b in word(8), seed in any::<u64>()) {
        let table = costs(seed).table();
        let (x, y) = (symbols(&a), symbols(&b));
        prop_assert_eq!(editdist::raw_distance(&x, &y, &table), editdist::raw_distance(&y, &x, &table));
    }

    #[test]
    fn normalized_is_bounded(a in word(8), b in word(8), seed in any::<u64>()) {
        prop_assume!(!a.is_empty() || !b.is_empty());
        let c = costs(seed);
        let d = editdist::normalized_distance(&symbols(&a), &symbols(&b), &c.table()).unwrap();
        // a column costs at most a gap, or a substitution capped by two gaps
        let worst_sub = c.pairs.values().copied().fold(c.default, f64::max);
        prop_assert!(d >= 0.0);
        prop_assert!(d <= c.gap.max(worst_sub.min(2.0 * c.gap)) + 1e-12);
    }

    #[test]
    fn alignments_match_brute_force(a in word(4), b in word(4), seed in any::<u64>()) {
        let c = costs(seed);
        let table = c.table();
        let (x, y) = (symbols(&a), symbols(&b));
        let raw = editdist::raw_distance(&x, &y, &table);
        let found = editdist::alignments(&x, &y, &table, DEFAULT_ALIGNMENT_LIMIT).unwrap();
        for al in &found {
            prop_assert_eq!(al.raw_cost, raw);
            prop_assert!(same_cost(al.column_cost(&table), raw));
            prop_assert_eq!(al.left_symbols(), x.clone());
            prop_assert_eq!(al.right_symbols(), y.clone());
        }
        // brute force enumerates in the same branch order, so lists compare directly
        let expected: Vec<_> = all_alignments(&chars(&a), &chars(&b), &c)
            .into_iter()
            .filter(|(_, cost)| same_cost(*cost, raw))
            .map(|(cols, _)| cols)
            .collect();
        let got: Vec<_> = found
            .iter()
            .map(|al| {
                al.columns
                    .iter()
                    .map(|col| (col.left().map(|s| s.as_char()), col.right().map(|s| s.as_char())))
                    .collect::<Vec<_>>()
            })
            .collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn language_distance_ignores_concept_order(
        words in proptest::collection::vec((word(5), word(5)), 1..6),
        seed in any::<u64>(),
    ) {
        prop_assume!(words.iter().all(|(p, q)| !p.is_empty() && !q.is_empty()));
        let table = costs(seed).table();
        let entry = |s: &str| WordEntry::single(s.parse().unwrap()).unwrap();
        let build = |order: &[usize]| {
            Lexicon::new(
                "w",
                None,
                vec![
                    ("p".to_string(), order.iter().map(|&i| entry(&words[i].0)).collect()),
                    ("q".to_string(), order.iter().map(|&i| entry(&words[i].1)).collect()),
                ],
            )
            .unwrap()
        };
        let forward: Vec<usize> = (0..words.len()).collect();
        let reversed: Vec<usize> = forward.iter().rev().copied().collect();
        let d1 = editdist::language_distance(&build(&forward), "p", "q", &table).unwrap();
        let d2 = editdist::language_distance(&build(&reversed), "p", "q", &table).unwrap();
        prop_assert!((d1 - d2).abs() < 1e-12);
    }

    #[test]
    fn oc_round_trip(values in proptest::collection::vec(0.0f64..10.0, 0..28usize), n in 2usize..8) {
        let upper: Vec<f64> = values.iter().copied().cycle().take(n * (n - 1) / 2).collect();
        prop_assume!(upper.len() == n * (n - 1) / 2);
        let labels: Vec<String> = (0..n).map(|i| format!("l{i}")).collect();
        let m = DistanceMatrix::from_upper(labels, &upper).unwrap();
        let back = oc::parse_oc(&oc::to_oc_string(&m)).unwrap();
        prop_assert_eq!(back.labels(), m.labels());
        for i in 0..n {
            for j in 0..n {
                prop_assert!((back.get(i, j) - m.get(i, j)).abs() <= 5e-7);
            }
        }
        prop_assert_eq!(oc::to_oc_string(&back), oc::to_oc_string(&m));
    }
}

#[test]
fn golden_alignments() {
    let table = SubstitutionTable::builder()
        .pair('f', 'v', 0.2)
        .pair('e', 'o', 0.2)
        .build()
        .unwrap();
    let (a, b) = (symbols("overa"), symbols("hofa"));
    assert_eq!(editdist::raw_distance(&a, &b, &table), 3.2);
    assert_eq!(editdist::normalized_distance(&a, &b, &table).unwrap(), 0.64);
    let found = editdist::alignments(&a, &b, &table, DEFAULT_ALIGNMENT_LIMIT).unwrap();
    let shown: Vec<String> = found.iter().map(ToString::to_string).collect();
    assert_eq!(
        shown,
        [
            "[[-,h],[o,o],[v,f],[e,-],[r,-],[a,a]]",
            "[[o,h],[v,-],[e,o],[r,f],[a,a]]",
            "[[o,-],[v,h],[e,o],[r,f],[a,a]]",
        ]
    );
    assert!(matches!(found[0].columns[0], AlignmentColumn::GapLeft(_)));
}

#[test]
fn limit_is_an_error() {
    // a mismatch costs exactly two gaps, so every path through the 5x5 grid
    // is optimal: the Delannoy number D(5,5)
    let table = SubstitutionTable::builder()
        .default_mismatch(2.0)
        .build()
        .unwrap();
    let (a, b) = (symbols("aaaaa"), symbols("bbbbb"));
    let all = editdist::alignments(&a, &b, &table, DEFAULT_ALIGNMENT_LIMIT).unwrap();
    assert_eq!(all.len(), 1683);
    assert_eq!(
        editdist::alignments(&a, &b, &table, 1682),
        Err(DistanceError::LimitExceeded { limit: 1682 })
    );
}
