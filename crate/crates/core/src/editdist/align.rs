use std::cmp::Ordering;
use std::fmt;

use super::{raw_distance, DistanceError};
use crate::lexicon::Symbol;
use crate::subst::SubstitutionTable;

/// Enumeration stops with an error beyond this many co-optimal alignments.
pub const DEFAULT_ALIGNMENT_LIMIT: usize = 10_000;

/// One column of a pairwise alignment. A column never has gaps on both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlignmentColumn {
    /// `[-, b]`: a symbol of the second word against a gap.
    GapLeft(Symbol),
    /// `[a, b]`: a match or substitution.
    Pair(Symbol, Symbol),
    /// `[a, -]`: a symbol of the first word against a gap.
    GapRight(Symbol),
}

impl AlignmentColumn {
    pub fn left(self) -> Option<Symbol> {
        match self {
            AlignmentColumn::GapLeft(_) => None,
            AlignmentColumn::Pair(a, _) | AlignmentColumn::GapRight(a) => Some(a),
        }
    }

    pub fn right(self) -> Option<Symbol> {
        match self {
            AlignmentColumn::GapRight(_) => None,
            AlignmentColumn::Pair(_, b) | AlignmentColumn::GapLeft(b) => Some(b),
        }
    }

    pub fn cost(self, table: &SubstitutionTable) -> f64 {
        match self {
            AlignmentColumn::Pair(a, b) => table.cost(a, b),
            _ => table.gap_penalty(),
        }
    }

    // enumeration order at a branch point
    fn rank(self) -> u8 {
        match self {
            AlignmentColumn::GapLeft(_) => 0,
            AlignmentColumn::Pair(..) => 1,
            AlignmentColumn::GapRight(_) => 2,
        }
    }
}

impl fmt::Display for AlignmentColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: Option<Symbol>| s.map_or_else(|| "-".to_string(), |s| s.to_string());
        write!(f, "[{},{}]", side(self.left()), side(self.right()))
    }
}

/// A minimum-cost alignment of two words.
#[derive(Clone, Debug, PartialEq)]
pub struct Alignment {
    pub columns: Vec<AlignmentColumn>,
    /// The edit distance the alignment realises.
    pub raw_cost: f64,
}

impl Alignment {
    /// Sum of per-column costs, recomputed from the table.
    pub fn column_cost(&self, table: &SubstitutionTable) -> f64 {
        self.columns.iter().map(|c| c.cost(table)).sum()
    }

    pub fn left_symbols(&self) -> Vec<Symbol> {
        self.columns.iter().filter_map(|c| c.left()).collect()
    }

    pub fn right_symbols(&self) -> Vec<Symbol> {
        self.columns.iter().filter_map(|c| c.right()).collect()
    }

    /// Two-row rendering with `-` for gaps.
    pub fn to_rows(&self) -> (String, String) {
        let side = |s: Option<Symbol>| s.map_or('-', Symbol::as_char);
        (
            self.columns.iter().map(|c| side(c.left())).collect(),
            self.columns.iter().map(|c| side(c.right())).collect(),
        )
    }
}

impl fmt::Display for Alignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        f.write_str("]")
    }
}

fn ties(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-9 * x.abs().max(y.abs()).max(1.0)
}

/// All co-optimal alignments of `a` and `b`.
///
/// Alignments come in depth-first order reading left to right, taking
/// gap-left before match before gap-right wherever paths branch. More than
/// `limit` alignments is an error rather than a silent truncation.
pub fn alignments(
    a: &[Symbol],
    b: &[Symbol],
    table: &SubstitutionTable,
    limit: usize,
) -> Result<Vec<Alignment>, DistanceError> {
    let (n, m) = (a.len(), b.len());
    let gap = table.gap_penalty();
    let w = m + 1;
    let mut d = vec![0.0; (n + 1) * w];
    for i in 0..=n {
        d[i * w] = i as f64 * gap;
    }
    for (j, cell) in d[..w].iter_mut().enumerate() {
        *cell = j as f64 * gap;
    }
    for i in 1..=n {
        for j in 1..=m {
            let del = d[(i - 1) * w + j] + gap;
            let ins = d[i * w + j - 1] + gap;
            let sub = d[(i - 1) * w + j - 1] + table.cost(a[i - 1], b[j - 1]);
            d[i * w + j] = del.min(ins).min(sub);
        }
    }
    let total = d[n * w + m];
    debug_assert_eq!(total, raw_distance(a, b, table));

    let mut found: Vec<Vec<AlignmentColumn>> = Vec::new();
    let mut path = Vec::with_capacity(n + m);
    let mut ctx = Backtrace {
        a,
        b,
        table,
        d: &d,
        w,
        limit,
        found: &mut found,
    };
    ctx.walk(n, m, &mut path)?;

    for cols in &mut found {
        cols.reverse();
    }
    found.sort_by(|x, y| {
        x.iter()
            .zip(y)
            .map(|(p, q)| p.rank().cmp(&q.rank()))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or_else(|| x.len().cmp(&y.len()))
    });
    Ok(found
        .into_iter()
        .map(|columns| Alignment {
            columns,
            raw_cost: total,
        })
        .collect())
}

struct Backtrace<'a> {
    a: &'a [Symbol],
    b: &'a [Symbol],
    table: &'a SubstitutionTable,
    d: &'a [f64],
    w: usize,
    limit: usize,
    found: &'a mut Vec<Vec<AlignmentColumn>>,
}

impl Backtrace<'_> {
    // collects paths back to (0, 0) in reverse column order
    fn walk(
        &mut self,
        i: usize,
        j: usize,
        path: &mut Vec<AlignmentColumn>,
    ) -> Result<(), DistanceError> {
        if i == 0 && j == 0 {
            if self.found.len() == self.limit {
                return Err(DistanceError::LimitExceeded { limit: self.limit });
            }
            self.found.push(path.clone());
            return Ok(());
        }
        let here = self.d[i * self.w + j];
        let gap = self.table.gap_penalty();
        if i > 0 && j > 0 {
            let (x, y) = (self.a[i - 1], self.b[j - 1]);
            if ties(
                self.d[(i - 1) * self.w + j - 1] + self.table.cost(x, y),
                here,
            ) {
                path.push(AlignmentColumn::Pair(x, y));
                self.walk(i - 1, j - 1, path)?;
                path.pop();
            }
        }
        if j > 0 && ties(self.d[i * self.w + j - 1] + gap, here) {
            path.push(AlignmentColumn::GapLeft(self.b[j - 1]));
            self.walk(i, j - 1, path)?;
            path.pop();
        }
        if i > 0 && ties(self.d[(i - 1) * self.w + j] + gap, here) {
            path.push(AlignmentColumn::GapRight(self.a[i - 1]));
            self.walk(i - 1, j, path)?;
            path.pop();
        }
        Ok(())
    }
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
    fn overa_hofa_has_three_alignments() {
        let t = hofa_table();
        let found = alignments(&w("overa"), &w("hofa"), &t, 100).unwrap();
        let shown: Vec<String> = found.iter().map(|a| a.to_string()).collect();
        assert_eq!(
            shown,
            vec![
                "[[-,h],[o,o],[v,f],[e,-],[r,-],[a,a]]",
                "[[o,h],[v,-],[e,o],[r,f],[a,a]]",
                "[[o,-],[v,h],[e,o],[r,f],[a,a]]",
            ]
        );
        for a in &found {
            assert_eq!(a.raw_cost, 3.2);
            assert!((a.column_cost(&t) - 3.2).abs() < 1e-12);
        }
        assert_eq!(
            found[0].to_rows(),
            ("-overa".to_string(), "hof--a".to_string())
        );
    }

    #[test]
    fn identical_words_align_diagonally() {
        let t = SubstitutionTable::unit();
        let found = alignments(&w("abc"), &w("abc"), &t, 10).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].to_string(), "[[a,a],[b,b],[c,c]]");
        assert_eq!(found[0].raw_cost, 0.0);
    }

    #[test]
    fn empty_words() {
        let t = SubstitutionTable::unit();
        let found = alignments(&w(""), &w(""), &t, 1).unwrap();
        assert_eq!(
            found,
            vec![Alignment {
                columns: vec![],
                raw_cost: 0.0
            }]
        );
        let found = alignments(&w(""), &w("ab"), &t, 1).unwrap();
        assert_eq!(found[0].to_string(), "[[-,a],[-,b]]");
    }

    #[test]
    fn limit_is_an_error() {
        let t = SubstitutionTable::unit();
        // "ab" vs "ba" has three co-optimal alignments at unit cost
        assert_eq!(alignments(&w("ab"), &w("ba"), &t, 3).unwrap().len(), 3);
        assert_eq!(
            alignments(&w("ab"), &w("ba"), &t, 2),
            Err(DistanceError::LimitExceeded { limit: 2 })
        );
    }
}
