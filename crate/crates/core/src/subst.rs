//! Phonetic substitution cost tables.
//!
//! A table assigns a cost in `[0, 1]` to replacing one symbol with another.
//! Lookup is symmetric and resolves in a fixed order:
//!
//! 1. identical symbols cost 0;
//! 2. an explicit `zero` pair, or two members of the same vowel set, cost 0;
//! 3. an explicit `pair` rule gives its class weight or literal cost;
//! 4. a long symbol against its short counterpart costs its `longshort` class;
//! 5. two vowels (members of any vowel set) cost the `vowel` class, when
//!    the table defines one;
//! 6. anything else costs the default mismatch.
//!
//! Tables are written in a small line-oriented language:
//!
//! ```text
//! # comment
//! weight consonant1 0.2
//! pair b p consonant1
//! pair e o 0.2
//! zero f F
//! vset a á à
//! longshort A a longvowel
//! gap 1
//! default 1
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::lexicon::Symbol;

const EDITABLE: &str = include_str!("../tables/editable.table");
const EDITABLE_GABY: &str = include_str!("../tables/editableGaby.table");

/// Names accepted by [`SubstitutionTable::builtin`].
pub const BUILTIN_TABLES: [&str; 2] = ["editable", "editableGaby"];

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TableError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: weight class `{class}` is not defined")]
    UndefinedClass { line: usize, class: String },
    #[error("line {line}: pair {a} {b} is already bound to a different cost")]
    DuplicatePairRule { line: usize, a: char, b: char },
    #[error("unknown table `{0}` (built-in tables: editable, editableGaby)")]
    UnknownTableName(String),
}

/// The six vowel families whose members substitute for each other freely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VowelFamily {
    A,
    E,
    I,
    O,
    U,
    Y,
}

impl VowelFamily {
    pub const ALL: [VowelFamily; 6] = [
        VowelFamily::A,
        VowelFamily::E,
        VowelFamily::I,
        VowelFamily::O,
        VowelFamily::U,
        VowelFamily::Y,
    ];

    pub fn base(self) -> char {
        match self {
            VowelFamily::A => 'a',
            VowelFamily::E => 'e',
            VowelFamily::I => 'i',
            VowelFamily::O => 'o',
            VowelFamily::U => 'u',
            VowelFamily::Y => 'y',
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl FromStr for VowelFamily {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        VowelFamily::ALL
            .into_iter()
            .find(|f| s.len() == 1 && s.starts_with(f.base()))
            .ok_or(())
    }
}

/// Either a named weight class or a literal cost.
#[derive(Clone, Debug, PartialEq)]
pub enum CostSpec {
    Class(String),
    Literal(f64),
}

impl From<f64> for CostSpec {
    fn from(w: f64) -> Self {
        CostSpec::Literal(w)
    }
}

impl From<&str> for CostSpec {
    fn from(c: &str) -> Self {
        CostSpec::Class(c.to_string())
    }
}

impl fmt::Display for CostSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CostSpec::Class(c) => f.write_str(c),
            CostSpec::Literal(w) => write!(f, "{}", w),
        }
    }
}

type Pair = (Symbol, Symbol);

fn unordered(a: Symbol, b: Symbol) -> Pair {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A symmetric symbol-pair cost function plus the gap penalty.
///
/// Immutable once built; see the module docs for lookup order.
#[derive(Clone, Debug)]
pub struct SubstitutionTable {
    classes: BTreeMap<String, f64>,
    pair_rules: HashMap<Pair, (CostSpec, f64)>,
    zero_pairs: HashSet<Pair>,
    vowel_sets: [BTreeSet<Symbol>; 6],
    vowels: HashSet<Symbol>,
    long_short: HashMap<Symbol, (Symbol, String, f64)>,
    covered: HashSet<Symbol>,
    gap_penalty: f64,
    default_mismatch: f64,
}

impl SubstitutionTable {
    pub fn builder() -> TableBuilder {
        TableBuilder::default()
    }

    /// Plain Levenshtein costs: every mismatch and every gap costs 1.
    pub fn unit() -> SubstitutionTable {
        TableBuilder::default()
            .build()
            .expect("empty table is valid")
    }

    /// One of the shipped tables, `editable` or `editableGaby`.
    pub fn builtin(name: &str) -> Result<SubstitutionTable, TableError> {
        let text = match name {
            "editable" => EDITABLE,
            "editableGaby" => EDITABLE_GABY,
            _ => return Err(TableError::UnknownTableName(name.to_string())),
        };
        SubstitutionTable::parse(text)
    }

    /// Source text of a built-in table.
    pub fn builtin_source(name: &str) -> Option<&'static str> {
        match name {
            "editable" => Some(EDITABLE),
            "editableGaby" => Some(EDITABLE_GABY),
            _ => None,
        }
    }

    pub fn parse(text: &str) -> Result<SubstitutionTable, TableError> {
        let mut b = TableBuilder::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let fields: Vec<&str> = content.split_whitespace().collect();
            let Some((&keyword, args)) = fields.split_first() else {
                continue;
            };
            let err = |message: String| TableError::Syntax { line, message };
            let want = |n: usize| {
                if args.len() == n {
                    Ok(())
                } else {
                    Err(err(format!(
                        "`{}` takes {} argument{}, found {}",
                        keyword,
                        n,
                        if n == 1 { "" } else { "s" },
                        args.len()
                    )))
                }
            };
            match keyword {
                "weight" => {
                    want(2)?;
                    let w = parse_real(args[1])
                        .ok_or_else(|| err(format!("bad weight `{}`", args[1])))?;
                    b.define_class(args[0], w, line)?;
                }
                "pair" => {
                    want(3)?;
                    let x = parse_symbol(args[0])
                        .ok_or_else(|| err(format!("bad symbol `{}`", args[0])))?;
                    let y = parse_symbol(args[1])
                        .ok_or_else(|| err(format!("bad symbol `{}`", args[1])))?;
                    let cost = match parse_real(args[2]) {
                        Some(w) => CostSpec::Literal(w),
                        None if is_class_name(args[2]) => CostSpec::Class(args[2].to_string()),
                        None => return Err(err(format!("bad class or cost `{}`", args[2]))),
                    };
                    b.add_pair(x, y, cost, line)?;
                }
                "zero" => {
                    want(2)?;
                    let x = parse_symbol(args[0])
                        .ok_or_else(|| err(format!("bad symbol `{}`", args[0])))?;
                    let y = parse_symbol(args[1])
                        .ok_or_else(|| err(format!("bad symbol `{}`", args[1])))?;
                    b.add_zero(x, y, line)?;
                }
                "vset" => {
                    if args.len() < 2 {
                        return Err(err("`vset` needs a family and at least one symbol".into()));
                    }
                    let family: VowelFamily = args[0]
                        .parse()
                        .map_err(|_| err(format!("unknown vowel family `{}`", args[0])))?;
                    for s in &args[1..] {
                        let sym =
                            parse_symbol(s).ok_or_else(|| err(format!("bad symbol `{}`", s)))?;
                        b.vowel_sets[family.index()].insert(sym);
                    }
                }
                "longshort" => {
                    want(3)?;
                    let long = parse_symbol(args[0])
                        .ok_or_else(|| err(format!("bad symbol `{}`", args[0])))?;
                    let short = parse_symbol(args[1])
                        .ok_or_else(|| err(format!("bad symbol `{}`", args[1])))?;
                    if !is_class_name(args[2]) {
                        return Err(err(format!("bad class name `{}`", args[2])));
                    }
                    b.add_long_short(long, short, args[2], line)?;
                }
                "gap" => {
                    want(1)?;
                    b.gap_penalty = parse_penalty(args[0])
                        .ok_or_else(|| err(format!("bad gap penalty `{}`", args[0])))?;
                }
                "default" => {
                    want(1)?;
                    b.default_mismatch = parse_penalty(args[0])
                        .ok_or_else(|| err(format!("bad default cost `{}`", args[0])))?;
                }
                other => return Err(err(format!("unknown directive `{}`", other))),
            }
        }
        b.build()
    }

    /// Substitution cost; total, symmetric, zero on the diagonal.
    pub fn cost(&self, a: Symbol, b: Symbol) -> f64 {
        if a == b {
            return 0.0;
        }
        let key = unordered(a, b);
        if self.zero_pairs.contains(&key) {
            return 0.0;
        }
        if self
            .vowel_sets
            .iter()
            .any(|set| set.contains(&a) && set.contains(&b))
        {
            return 0.0;
        }
        if let Some((_, w)) = self.pair_rules.get(&key) {
            return *w;
        }
        for (long, short) in [(a, b), (b, a)] {
            if let Some((s, _, w)) = self.long_short.get(&long) {
                if *s == short {
                    return *w;
                }
            }
        }
        if let Some(w) = self.classes.get("vowel") {
            if self.vowels.contains(&a) && self.vowels.contains(&b) {
                return *w;
            }
        }
        self.default_mismatch
    }

    /// Cost of an insertion or deletion.
    pub fn gap_penalty(&self) -> f64 {
        self.gap_penalty
    }

    pub fn default_mismatch(&self) -> f64 {
        self.default_mismatch
    }

    pub fn class_weight(&self, class: &str) -> Option<f64> {
        self.classes.get(class).copied()
    }

    pub fn classes(&self) -> impl Iterator<Item = (&str, f64)> {
        self.classes.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// The explicit `pair` binding for two symbols, if any.
    pub fn pair_rule(&self, a: Symbol, b: Symbol) -> Option<&CostSpec> {
        self.pair_rules.get(&unordered(a, b)).map(|(spec, _)| spec)
    }

    pub fn vowel_set(&self, family: VowelFamily) -> &BTreeSet<Symbol> {
        &self.vowel_sets[family.index()]
    }

    /// Whether any rule of the table mentions `s`.
    pub fn covers(&self, s: Symbol) -> bool {
        self.covered.contains(&s)
    }

    /// Largest value [`cost`](Self::cost) can return.
    pub fn max_cost(&self) -> f64 {
        self.default_mismatch.max(1.0)
    }

    /// Copy of the table with a different gap penalty.
    pub fn with_gap_penalty(&self, gap: f64) -> SubstitutionTable {
        SubstitutionTable {
            gap_penalty: gap,
            ..self.clone()
        }
    }
}

impl FromStr for SubstitutionTable {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, TableError> {
        SubstitutionTable::parse(s)
    }
}

fn parse_real(s: &str) -> Option<f64> {
    let w: f64 = s.parse().ok()?;
    (w.is_finite() && (0.0..=1.0).contains(&w)).then_some(w)
}

fn parse_penalty(s: &str) -> Option<f64> {
    let w: f64 = s.parse().ok()?;
    (w.is_finite() && w >= 0.0).then_some(w)
}

fn parse_symbol(s: &str) -> Option<Symbol> {
    let mut chars = s.chars();
    let c = chars.next()?;
    if chars.next().is_some() {
        return None;
    }
    Symbol::new(c)
}

fn is_class_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Incremental construction of a [`SubstitutionTable`].
///
/// Class references are resolved in [`build`](Self::build), so a `pair`
/// may name a class defined later.
#[derive(Clone, Debug)]
pub struct TableBuilder {
    classes: BTreeMap<String, (f64, usize)>,
    pairs: HashMap<Pair, (CostSpec, usize)>,
    zero_pairs: HashSet<Pair>,
    vowel_sets: [BTreeSet<Symbol>; 6],
    long_short: HashMap<Symbol, (Symbol, String, usize)>,
    gap_penalty: f64,
    default_mismatch: f64,
    error: Option<TableError>,
}

impl Default for TableBuilder {
    fn default() -> Self {
        TableBuilder {
            classes: BTreeMap::new(),
            pairs: HashMap::new(),
            zero_pairs: HashSet::new(),
            vowel_sets: VowelFamily::ALL.map(|f| BTreeSet::from([Symbol::new(f.base()).unwrap()])),
            long_short: HashMap::new(),
            gap_penalty: 1.0,
            default_mismatch: 1.0,
            error: None,
        }
    }
}

impl TableBuilder {
    pub fn class(mut self, name: &str, weight: f64) -> Self {
        if let Err(e) = self.define_class(name, weight, 0) {
            self.error.get_or_insert(e);
        }
        self
    }

    /// Binds a symbol pair (either order) to a class or literal cost.
    ///
    /// # Panics
    ///
    /// If either char is not a valid [`Symbol`].
    pub fn pair(mut self, a: char, b: char, cost: impl Into<CostSpec>) -> Self {
        let (a, b) = (sym(a), sym(b));
        if let Err(e) = self.add_pair(a, b, cost.into(), 0) {
            self.error.get_or_insert(e);
        }
        self
    }

    pub fn zero(mut self, a: char, b: char) -> Self {
        if let Err(e) = self.add_zero(sym(a), sym(b), 0) {
            self.error.get_or_insert(e);
        }
        self
    }

    pub fn vowel_set(mut self, family: VowelFamily, members: &[char]) -> Self {
        self.vowel_sets[family.index()].extend(members.iter().map(|&c| sym(c)));
        self
    }

    pub fn long_short(mut self, long: char, short: char, class: &str) -> Self {
        if let Err(e) = self.add_long_short(sym(long), sym(short), class, 0) {
            self.error.get_or_insert(e);
        }
        self
    }

    pub fn gap(mut self, gap: f64) -> Self {
        self.gap_penalty = gap;
        self
    }

    pub fn default_mismatch(mut self, cost: f64) -> Self {
        self.default_mismatch = cost;
        self
    }

    fn define_class(&mut self, name: &str, weight: f64, line: usize) -> Result<(), TableError> {
        if !is_class_name(name) {
            return Err(TableError::Syntax {
                line,
                message: format!("bad class name `{}`", name),
            });
        }
        if !(0.0..=1.0).contains(&weight) {
            return Err(TableError::Syntax {
                line,
                message: format!("weight of `{}` must lie in [0, 1]", name),
            });
        }
        match self.classes.get(name) {
            Some((w, _)) if *w != weight => Err(TableError::Syntax {
                line,
                message: format!("class `{}` redefined with a different weight", name),
            }),
            _ => {
                self.classes.insert(name.to_string(), (weight, line));
                Ok(())
            }
        }
    }

    fn add_pair(
        &mut self,
        a: Symbol,
        b: Symbol,
        cost: CostSpec,
        line: usize,
    ) -> Result<(), TableError> {
        if a == b {
            return Err(TableError::Syntax {
                line,
                message: format!("pair {} {} binds a symbol to itself", a, b),
            });
        }
        if let CostSpec::Literal(w) = cost {
            if !(0.0..=1.0).contains(&w) {
                return Err(TableError::Syntax {
                    line,
                    message: format!("cost {} outside [0, 1]", w),
                });
            }
        }
        let key = unordered(a, b);
        match self.pairs.get(&key) {
            Some((existing, _)) if *existing != cost => Err(TableError::DuplicatePairRule {
                line,
                a: a.as_char(),
                b: b.as_char(),
            }),
            Some(_) => Ok(()),
            None => {
                self.pairs.insert(key, (cost, line));
                Ok(())
            }
        }
    }

    fn add_zero(&mut self, a: Symbol, b: Symbol, line: usize) -> Result<(), TableError> {
        if a == b {
            return Err(TableError::Syntax {
                line,
                message: format!("zero {} {} binds a symbol to itself", a, b),
            });
        }
        self.zero_pairs.insert(unordered(a, b));
        Ok(())
    }

    fn add_long_short(
        &mut self,
        long: Symbol,
        short: Symbol,
        class: &str,
        line: usize,
    ) -> Result<(), TableError> {
        if long == short {
            return Err(TableError::Syntax {
                line,
                message: format!("longshort {} {} binds a symbol to itself", long, short),
            });
        }
        match self.long_short.get(&long) {
            Some((s, c, _)) if *s != short || c != class => Err(TableError::Syntax {
                line,
                message: format!("long symbol {} already has a counterpart", long),
            }),
            _ => {
                self.long_short
                    .insert(long, (short, class.to_string(), line));
                Ok(())
            }
        }
    }

    pub fn build(self) -> Result<SubstitutionTable, TableError> {
        if let Some(e) = self.error {
            return Err(e);
        }
        for (name, value) in [
            ("gap", self.gap_penalty),
            ("default", self.default_mismatch),
        ] {
            if !(value.is_finite() && value >= 0.0) {
                return Err(TableError::Syntax {
                    line: 0,
                    message: format!("{} must be a non-negative number", name),
                });
            }
        }
        let classes: BTreeMap<String, f64> = self
            .classes
            .iter()
            .map(|(k, (w, _))| (k.clone(), *w))
            .collect();
        let resolve = |spec: &CostSpec, line: usize| match spec {
            CostSpec::Literal(w) => Ok(*w),
            CostSpec::Class(c) => {
                classes
                    .get(c)
                    .copied()
                    .ok_or_else(|| TableError::UndefinedClass {
                        line,
                        class: c.clone(),
                    })
            }
        };

        let mut covered = HashSet::new();
        let mut pair_rules = HashMap::new();
        // report the earliest offending line when several are bad
        let mut pairs: Vec<_> = self.pairs.into_iter().collect();
        pairs.sort_by_key(|(k, (_, line))| (*line, *k));
        for (key, (spec, line)) in pairs {
            let w = resolve(&spec, line)?;
            covered.extend([key.0, key.1]);
            pair_rules.insert(key, (spec, w));
        }
        let mut long_short = HashMap::new();
        let mut ls: Vec<_> = self.long_short.into_iter().collect();
        ls.sort_by_key(|(k, (_, _, line))| (*line, *k));
        for (long, (short, class, line)) in ls {
            let w = resolve(&CostSpec::Class(class.clone()), line)?;
            covered.extend([long, short]);
            long_short.insert(long, (short, class, w));
        }
        for (a, b) in &self.zero_pairs {
            covered.extend([*a, *b]);
        }
        let vowels: HashSet<Symbol> = self.vowel_sets.iter().flatten().copied().collect();
        covered.extend(vowels.iter().copied());

        Ok(SubstitutionTable {
            classes,
            pair_rules,
            zero_pairs: self.zero_pairs,
            vowel_sets: self.vowel_sets,
            vowels,
            long_short,
            covered,
            gap_penalty: self.gap_penalty,
            default_mismatch: self.default_mismatch,
        })
    }
}

fn sym(c: char) -> Symbol {
    Symbol::new(c).unwrap_or_else(|| panic!("{:?} is not a valid symbol", c))
}
