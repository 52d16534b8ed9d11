//! Language word databases.
//!
//! A database file is a sequence of facts sharing one functor:
//!
//! ```text
//! % colours, phonetically encoded
//! #concepts: black,white,red,yellow,blue,green
//! words(english,[black,white,red,yellow,blue,green]).
//! words(italian,[nero,bianco,rosso,giallo,[blu,azzurro],verde]).
//! ```
//!
//! An atom is any maximal run of characters other than `,[]().%` and
//! whitespace, so the capital letters of the phonetic encoding (`C` for
//! "ch", `S` for "sh", `A` for a long "a", ...) need no quoting. A nested
//! list is a synonym set. `%` starts a comment running to the end of the
//! line. The optional `#concepts:` header names the word positions.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use thiserror::Error;

use crate::subst::SubstitutionTable;

/// One phoneme of the encoding: a single Unicode scalar, case-sensitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(char);

impl Symbol {
    /// Returns `None` for the structural characters `,[]().%` and whitespace.
    pub fn new(c: char) -> Option<Symbol> {
        if is_structural(c) {
            None
        } else {
            Some(Symbol(c))
        }
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_structural(c: char) -> bool {
    matches!(c, ',' | '[' | ']' | '(' | ')' | '.' | '%') || c.is_whitespace()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0:?} is not a valid symbol")]
pub struct InvalidSymbol(pub char);

/// A flat sequence of symbols. May be empty; lexicon entries never are.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Word {
        Word(symbols)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::ops::Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl FromStr for Word {
    type Err = InvalidSymbol;

    fn from_str(s: &str) -> Result<Word, InvalidSymbol> {
        s.chars()
            .map(|c| Symbol::new(c).ok_or(InvalidSymbol(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

/// The word(s) a language uses for one concept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordEntry {
    variants: Vec<Word>,
}

impl WordEntry {
    /// Fails when `variants` is empty or holds an empty word.
    pub fn new(variants: Vec<Word>) -> Option<WordEntry> {
        if variants.is_empty() || variants.iter().any(Word::is_empty) {
            None
        } else {
            Some(WordEntry { variants })
        }
    }

    pub fn single(word: Word) -> Option<WordEntry> {
        WordEntry::new(vec![word])
    }

    pub fn variants(&self) -> &[Word] {
        &self.variants
    }

    pub fn has_synonyms(&self) -> bool {
        self.variants.len() > 1
    }
}

impl fmt::Display for WordEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [only] = self.variants.as_slice() {
            return write!(f, "{}", only);
        }
        f.write_str("[")?;
        for (i, w) in self.variants.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", w)?;
        }
        f.write_str("]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: language `{language}` has {found} words, expected {expected}")]
    InconsistentArity {
        line: usize,
        language: String,
        expected: usize,
        found: usize,
    },
    #[error("line {line}: language `{language}` is defined twice")]
    DuplicateLanguage { line: usize, language: String },
    #[error("line {line}: functor `{found}` differs from `{expected}` used earlier")]
    MixedFunctor {
        line: usize,
        expected: String,
        found: String,
    },
    #[error("line {line}: {message}")]
    BadConcepts { line: usize, message: String },
    #[error("{found} concept labels given for word lists of length {expected}")]
    ConceptCountMismatch { expected: usize, found: usize },
}

/// A word database: languages in file order, each with one entry per concept.
#[derive(Clone, Debug, PartialEq)]
pub struct Lexicon {
    functor: Option<String>,
    concepts: Option<Vec<String>>,
    languages: IndexMap<String, Vec<WordEntry>>,
}

impl Lexicon {
    /// Builds a lexicon from already-parsed parts, enforcing the same
    /// invariants as the parser (uniform arity, unique names).
    pub fn new(
        functor: &str,
        concepts: Option<Vec<String>>,
        languages: Vec<(String, Vec<WordEntry>)>,
    ) -> Result<Lexicon, LexiconError> {
        if !is_atom(functor) {
            return Err(syntax(0, 0, format!("invalid functor `{}`", functor)));
        }
        let mut map = IndexMap::new();
        for (name, entries) in languages {
            if !is_atom(&name) {
                return Err(syntax(0, 0, format!("invalid language name `{}`", name)));
            }
            insert_language(&mut map, name, entries, 0)?;
        }
        let lex = Lexicon {
            functor: Some(functor.to_string()),
            concepts,
            languages: map,
        };
        lex.check_concepts(0)?;
        Ok(lex)
    }

    pub fn parse(text: &str) -> Result<Lexicon, LexiconError> {
        Parser::new(text).parse()
    }

    pub fn functor(&self) -> Option<&str> {
        self.functor.as_deref()
    }

    /// Concept labels from the `#concepts:` header, if one was given.
    pub fn concepts(&self) -> Option<&[String]> {
        self.concepts.as_deref()
    }

    /// Concept labels, defaulting to `w1..wN`.
    pub fn concept_labels(&self) -> Vec<String> {
        match &self.concepts {
            Some(c) => c.clone(),
            None => (1..=self.arity()).map(|i| format!("w{}", i)).collect(),
        }
    }

    /// Number of concepts (word positions) per language.
    pub fn arity(&self) -> usize {
        self.languages
            .values()
            .next()
            .map(Vec::len)
            .or_else(|| self.concepts.as_ref().map(Vec::len))
            .unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.languages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.languages.is_empty()
    }

    pub fn language_names(&self) -> impl Iterator<Item = &str> {
        self.languages.keys().map(String::as_str)
    }

    pub fn languages(&self) -> impl Iterator<Item = (&str, &[WordEntry])> {
        self.languages
            .iter()
            .map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub fn language(&self, name: &str) -> Option<&[WordEntry]> {
        self.languages.get(name).map(Vec::as_slice)
    }

    pub fn language_at(&self, index: usize) -> Option<(&str, &[WordEntry])> {
        self.languages
            .get_index(index)
            .map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    /// Every symbol occurring in any word variant.
    pub fn symbols_used(&self) -> BTreeSet<Symbol> {
        self.languages
            .values()
            .flatten()
            .flat_map(|e| e.variants.iter())
            .flat_map(|w| w.iter().copied())
            .collect()
    }

    /// Lists symbols the table has no rule for. Such symbols are still
    /// usable; they only ever cost the default mismatch against others.
    pub fn validate_against_table(&self, table: &SubstitutionTable) -> CoverageReport {
        CoverageReport {
            uncovered: self
                .symbols_used()
                .into_iter()
                .filter(|s| !table.covers(*s))
                .collect(),
        }
    }

    /// Writes the lexicon back in the fact dialect; parsing the result gives
    /// an equal lexicon.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    fn check_concepts(&self, line: usize) -> Result<(), LexiconError> {
        let Some(concepts) = &self.concepts else {
            return Ok(());
        };
        let mut seen = BTreeSet::new();
        for c in concepts {
            if !is_concept_label(c) {
                return Err(LexiconError::BadConcepts {
                    line,
                    message: format!("invalid concept label `{}`", c),
                });
            }
            if !seen.insert(c) {
                return Err(LexiconError::BadConcepts {
                    line,
                    message: format!("concept label `{}` repeated", c),
                });
            }
        }
        if let Some(first) = self.languages.values().next() {
            if first.len() != concepts.len() {
                return Err(LexiconError::ConceptCountMismatch {
                    expected: first.len(),
                    found: concepts.len(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Lexicon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(concepts) = &self.concepts {
            writeln!(f, "#concepts: {}", concepts.join(","))?;
        }
        let functor = self.functor.as_deref().unwrap_or("words");
        for (name, entries) in &self.languages {
            write!(f, "{}({},[", functor, name)?;
            for (i, e) in entries.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", e)?;
            }
            writeln!(f, "]).")?;
        }
        Ok(())
    }
}

impl FromStr for Lexicon {
    type Err = LexiconError;

    fn from_str(s: &str) -> Result<Lexicon, LexiconError> {
        Lexicon::parse(s)
    }
}

/// Parses a database file. Shorthand for [`Lexicon::parse`].
pub fn parse_lexicon(text: &str) -> Result<Lexicon, LexiconError> {
    Lexicon::parse(text)
}

/// Result of checking a lexicon's symbols against a substitution table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverageReport {
    /// Symbols with no rule in the table; they fall back to the default cost.
    pub uncovered: BTreeSet<Symbol>,
}

impl CoverageReport {
    pub fn is_clean(&self) -> bool {
        self.uncovered.is_empty()
    }
}

fn is_atom(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| !is_structural(c))
}

fn is_concept_label(s: &str) -> bool {
    is_atom(s) && !s.contains([':', '/', '\\'])
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> LexiconError {
    LexiconError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn insert_language(
    map: &mut IndexMap<String, Vec<WordEntry>>,
    name: String,
    entries: Vec<WordEntry>,
    line: usize,
) -> Result<(), LexiconError> {
    if map.contains_key(&name) {
        return Err(LexiconError::DuplicateLanguage {
            line,
            language: name,
        });
    }
    if let Some(first) = map.values().next() {
        if first.len() != entries.len() {
            return Err(LexiconError::InconsistentArity {
                line,
                language: name,
                expected: first.len(),
                found: entries.len(),
            });
        }
    }
    map.insert(name, entries);
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Atom(String),
    Open,
    Close,
    LBracket,
    RBracket,
    Comma,
    Period,
    Concepts(String),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Spanned> {
    let mut out = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw_line.trim_start();
        if let Some(rest) = trimmed.strip_prefix("#concepts:") {
            let column = raw_line.len() - trimmed.len() + 1;
            out.push(Spanned {
                tok: Tok::Concepts(rest.to_string()),
                line,
                column,
            });
            continue;
        }
        let chars: Vec<char> = raw_line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let tok = match c {
                '%' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                '(' => Tok::Open,
                ')' => Tok::Close,
                '[' => Tok::LBracket,
                ']' => Tok::RBracket,
                ',' => Tok::Comma,
                '.' => Tok::Period,
                _ => {
                    let start = i;
                    while i < chars.len() && !is_structural(chars[i]) {
                        i += 1;
                    }
                    out.push(Spanned {
                        tok: Tok::Atom(chars[start..i].iter().collect()),
                        line,
                        column,
                    });
                    continue;
                }
            };
            out.push(Spanned { tok, line, column });
            i += 1;
        }
    }
    out
}

struct Parser<'a> {
    text: &'a str,
    toks: Vec<Spanned>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text,
            toks: Vec::new(),
            pos: 0,
        }
    }

    fn parse(mut self) -> Result<Lexicon, LexiconError> {
        self.toks = tokenize(self.text);
        let mut functor: Option<String> = None;
        let mut concepts: Option<(Vec<String>, usize)> = None;
        let mut languages = IndexMap::new();

        while let Some(t) = self.toks.get(self.pos).cloned() {
            if let Tok::Concepts(raw) = &t.tok {
                if concepts.is_some() {
                    return Err(LexiconError::BadConcepts {
                        line: t.line,
                        message: "second #concepts header".into(),
                    });
                }
                let labels = raw.split(',').map(|s| s.trim().to_string()).collect();
                concepts = Some((labels, t.line));
                self.pos += 1;
                continue;
            }
            let (name, lang, entries) = self.fact()?;
            match &functor {
                None => functor = Some(name),
                Some(f) if *f != name => {
                    return Err(LexiconError::MixedFunctor {
                        line: t.line,
                        expected: f.clone(),
                        found: name,
                    })
                }
                Some(_) => {}
            }
            insert_language(&mut languages, lang, entries, t.line)?;
        }

        let (concepts, concept_line) = match concepts {
            Some((c, l)) => (Some(c), l),
            None => (None, 0),
        };
        let lex = Lexicon {
            functor,
            concepts,
            languages,
        };
        lex.check_concepts(concept_line)?;
        Ok(lex)
    }

    fn eof_error(&self) -> LexiconError {
        let line = self.text.lines().count().max(1);
        syntax(line, 1, "unexpected end of input (missing `.`?)")
    }

    fn next(&mut self) -> Result<Spanned, LexiconError> {
        let t = self
            .toks
            .get(self.pos)
            .cloned()
            .ok_or_else(|| self.eof_error())?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<Spanned, LexiconError> {
        let t = self.next()?;
        if t.tok == want {
            Ok(t)
        } else {
            Err(syntax(
                t.line,
                t.column,
                format!("expected {}, found {}", what, describe(&t.tok)),
            ))
        }
    }

    fn atom(&mut self, what: &str) -> Result<(String, Spanned), LexiconError> {
        let t = self.next()?;
        match &t.tok {
            Tok::Atom(a) => Ok((a.clone(), t)),
            other => Err(syntax(
                t.line,
                t.column,
                format!("expected {}, found {}", what, describe(other)),
            )),
        }
    }

    fn fact(&mut self) -> Result<(String, String, Vec<WordEntry>), LexiconError> {
        let (functor, _) = self.atom("a functor")?;
        self.expect(Tok::Open, "`(`")?;
        let (lang, _) = self.atom("a language name")?;
        self.expect(Tok::Comma, "`,`")?;
        let open = self.expect(Tok::LBracket, "`[`")?;
        let mut entries = Vec::new();
        let mut first = true;
        loop {
            let t = self.next()?;
            match (&t.tok, first) {
                (Tok::RBracket, true) => break,
                (Tok::RBracket, false) => {
                    return Err(syntax(t.line, t.column, "expected a word after `,`"))
                }
                _ => self.pos -= 1,
            }
            entries.push(self.entry()?);
            first = false;
            let sep = self.next()?;
            match sep.tok {
                Tok::Comma => continue,
                Tok::RBracket => break,
                other => {
                    return Err(syntax(
                        sep.line,
                        sep.column,
                        format!(
                            "expected `,` or `]` in list opened at line {}, found {}",
                            open.line,
                            describe(&other)
                        ),
                    ))
                }
            }
        }
        self.expect(Tok::Close, "`)`")?;
        self.expect(Tok::Period, "terminating `.`")?;
        Ok((functor, lang, entries))
    }

    fn entry(&mut self) -> Result<WordEntry, LexiconError> {
        let t = self.next()?;
        match &t.tok {
            Tok::Atom(a) => Ok(WordEntry {
                variants: vec![atom_word(a)],
            }),
            Tok::LBracket => {
                let mut variants = Vec::new();
                loop {
                    let w = self.next()?;
                    match &w.tok {
                        Tok::Atom(a) => variants.push(atom_word(a)),
                        Tok::LBracket => {
                            return Err(syntax(w.line, w.column, "synonym lists cannot be nested"))
                        }
                        Tok::RBracket if variants.is_empty() => {
                            return Err(syntax(w.line, w.column, "empty synonym list"))
                        }
                        other => {
                            return Err(syntax(
                                w.line,
                                w.column,
                                format!("expected a synonym, found {}", describe(other)),
                            ))
                        }
                    }
                    let sep = self.next()?;
                    match sep.tok {
                        Tok::Comma => continue,
                        Tok::RBracket => break,
                        other => {
                            return Err(syntax(
                                sep.line,
                                sep.column,
                                format!("expected `,` or `]`, found {}", describe(&other)),
                            ))
                        }
                    }
                }
                Ok(WordEntry { variants })
            }
            other => Err(syntax(
                t.line,
                t.column,
                format!("expected a word, found {}", describe(other)),
            )),
        }
    }
}

fn atom_word(a: &str) -> Word {
    // atoms never contain structural characters, so every char is a symbol
    Word(a.chars().map(Symbol).collect())
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Atom(a) => format!("`{}`", a),
        Tok::Open => "`(`".into(),
        Tok::Close => "`)`".into(),
        Tok::LBracket => "`[`".into(),
        Tok::RBracket => "`]`".into(),
        Tok::Comma => "`,`".into(),
        Tok::Period => "`.`".into(),
        Tok::Concepts(_) => "a #concepts header".into(),
    }
}
