//! Independent reference implementations used as test oracles.
#![allow(dead_code)]

pub mod listings;

use std::collections::HashMap;

use lingdist::{subst::SubstitutionTable, DistanceMatrix, Symbol};
use rand::Rng;

pub const ALPHABET: [char; 8] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'];

/// A random symmetric cost model over [`ALPHABET`], kept alongside the
/// table built from it so oracles never consult the table.
#[derive(Clone, Debug)]
pub struct RandomCosts {
    pub pairs: HashMap<(char, char), f64>,
    pub gap: f64,
    pub default: f64,
}

impl RandomCosts {
    pub fn generate<R: Rng>(rng: &mut R) -> RandomCosts {
        let mut pairs = HashMap::new();
        for (i, &x) in ALPHABET.iter().enumerate() {
            for &y in &ALPHABET[i + 1..] {
                if rng.random_bool(0.5) {
                    // mix of round and arbitrary weights
                    let w = if rng.random_bool(0.5) {
                        f64::from(rng.random_range(0..=10u8)) / 10.0
                    } else {
                        rng.random::<f64>()
                    };
                    pairs.insert((x, y), w);
                }
            }
        }
        RandomCosts {
            pairs,
            gap: rng.random_range(0.3..1.5),
            default: rng.random_range(0.5..1.5),
        }
    }

    pub fn cost(&self, x: char, y: char) -> f64 {
        if x == y {
            return 0.0;
        }
        let key = if x < y { (x, y) } else { (y, x) };
        self.pairs.get(&key).copied().unwrap_or(self.default)
    }

    pub fn table(&self) -> SubstitutionTable {
        let mut b = SubstitutionTable::builder()
            .gap(self.gap)
            .default_mismatch(self.default);
        for (&(x, y), &w) in &self.pairs {
            b = b.pair(x, y, w);
        }
        b.build().unwrap()
    }
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> String {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| ALPHABET[rng.random_range(0..ALPHABET.len())])
        .collect()
}

pub fn symbols(s: &str) -> Vec<Symbol> {
    s.chars().map(|c| Symbol::new(c).unwrap()).collect()
}

/// Plain exponential recursion over prefixes, no memoisation.
pub fn naive_distance(a: &[char], b: &[char], costs: &RandomCosts) -> f64 {
    fn go(a: &[char], b: &[char], i: usize, j: usize, c: &RandomCosts) -> f64 {
        if i == 0 {
            return j as f64 * c.gap;
        }
        if j == 0 {
            return i as f64 * c.gap;
        }
        let del = go(a, b, i - 1, j, c) + c.gap;
        let ins = go(a, b, i, j - 1, c) + c.gap;
        let sub = go(a, b, i - 1, j - 1, c) + c.cost(a[i - 1], b[j - 1]);
        del.min(ins).min(sub)
    }
    go(a, b, a.len(), b.len(), costs)
}

/// One alignment as `(left, right)` column pairs, `None` for a gap.
pub type Columns = Vec<(Option<char>, Option<char>)>;

/// Every alignment of `a` and `b`, with its summed column cost.
pub fn all_alignments(a: &[char], b: &[char], costs: &RandomCosts) -> Vec<(Columns, f64)> {
    fn go(
        a: &[char],
        b: &[char],
        prefix: &mut Columns,
        out: &mut Vec<(Columns, f64)>,
        c: &RandomCosts,
    ) {
        if a.is_empty() && b.is_empty() {
            let cost = prefix
                .iter()
                .map(|col| match col {
                    (Some(x), Some(y)) => c.cost(*x, *y),
                    _ => c.gap,
                })
                .sum();
            out.push((prefix.clone(), cost));
            return;
        }
        if !b.is_empty() {
            prefix.push((None, Some(b[0])));
            go(a, &b[1..], prefix, out, c);
            prefix.pop();
        }
        if !a.is_empty() && !b.is_empty() {
            prefix.push((Some(a[0]), Some(b[0])));
            go(&a[1..], &b[1..], prefix, out, c);
            prefix.pop();
        }
        if !a.is_empty() {
            prefix.push((Some(a[0]), None));
            go(&a[1..], b, prefix, out, c);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(a, b, &mut Vec::new(), &mut out, costs);
    out
}

/// Silhouette straight from the definition, recomputing every mean.
pub fn naive_silhouette(m: &DistanceMatrix, clusters: &[usize]) -> Vec<f64> {
    let n = m.len();
    (0..n)
        .map(|i| {
            let own: Vec<usize> = (0..n)
                .filter(|&j| j != i && clusters[j] == clusters[i])
                .collect();
            if own.is_empty() {
                return 0.0;
            }
            let a = own.iter().map(|&j| m.get(i, j)).sum::<f64>() / own.len() as f64;
            let mut others: Vec<usize> = clusters
                .iter()
                .copied()
                .filter(|&c| c != clusters[i])
                .collect();
            others.sort_unstable();
            others.dedup();
            let b = others
                .iter()
                .map(|&c| {
                    let members: Vec<usize> = (0..n).filter(|&j| clusters[j] == c).collect();
                    members.iter().map(|&j| m.get(i, j)).sum::<f64>() / members.len() as f64
                })
                .fold(f64::INFINITY, f64::min);
            if a.max(b) == 0.0 {
                0.0
            } else {
                (b - a) / a.max(b)
            }
        })
        .collect()
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize) -> DistanceMatrix {
    let labels = (0..n).map(|i| format!("item{i}")).collect();
    let upper: Vec<f64> = (0..n * (n - 1) / 2)
        .map(|_| rng.random_range(0.0..1.0))
        .collect();
    DistanceMatrix::from_upper(labels, &upper).unwrap()
}
