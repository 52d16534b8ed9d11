//! The OC upper-triangle distance matrix format.
//!
//! ```text
//! 3
//! english
//! french
//! romani
//! 0.512000 0.734000
//! 0.661000
//! ```
//!
//! Line one holds the item count `n`, the next `n` lines the labels, then
//! `n - 1` lines where line `i` lists `d(i, i+1) .. d(i, n)` with six
//! decimals, separated by single spaces.

use std::io::{self, Read, Write};

use thiserror::Error;

use crate::matrix::DistanceMatrix;

#[derive(Debug, Error)]
pub enum OcError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn format_err(line: usize, message: impl Into<String>) -> OcError {
    OcError::Format {
        line,
        message: message.into(),
    }
}

pub fn write_oc<W: Write>(m: &DistanceMatrix, mut sink: W) -> io::Result<()> {
    sink.write_all(to_oc_string(m).as_bytes())
}

pub fn to_oc_string(m: &DistanceMatrix) -> String {
    let n = m.len();
    let mut out = format!("{}\n", n);
    for l in m.labels() {
        out.push_str(l);
        out.push('\n');
    }
    for i in 0..n.saturating_sub(1) {
        let row: Vec<String> = (i + 1..n).map(|j| format!("{:.6}", m.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_oc<R: Read>(mut source: R) -> Result<DistanceMatrix, OcError> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_oc(&text)
}

pub fn parse_oc(text: &str) -> Result<DistanceMatrix, OcError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (line, first) = lines.next().ok_or_else(|| format_err(1, "empty input"))?;
    let n: usize = first
        .parse()
        .map_err(|_| format_err(line, format!("expected item count, found `{}`", first)))?;

    let mut labels = Vec::with_capacity(n);
    for k in 0..n {
        let (line, l) = lines
            .next()
            .ok_or_else(|| format_err(k + 2, format!("expected {} labels, found {}", n, k)))?;
        if l.is_empty() || l.contains(char::is_whitespace) {
            return Err(format_err(line, format!("bad label `{}`", l)));
        }
        labels.push(l.to_string());
    }

    let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n.saturating_sub(1) {
        let want = n - 1 - i;
        let (line, l) = lines
            .next()
            .ok_or_else(|| format_err(n + 2 + i, "missing distance row"))?;
        let mut count = 0;
        for tok in l.split_whitespace() {
            let v: f64 = tok
                .parse()
                .map_err(|_| format_err(line, format!("non-numeric cell `{}`", tok)))?;
            upper.push(v);
            count += 1;
        }
        if count != want {
            return Err(format_err(
                line,
                format!("expected {} values, found {}", want, count),
            ));
        }
    }
    if let Some((line, l)) = lines.find(|(_, l)| !l.is_empty()) {
        return Err(format_err(
            line,
            format!("unexpected trailing content `{}`", l),
        ));
    }
    DistanceMatrix::from_upper(labels, &upper).map_err(|e| format_err(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let m = parse_oc("2\na\nb\n0.400000\n").unwrap();
        assert_eq!(m.labels(), &["a", "b"]);
        assert_eq!(m.get(0, 1), 0.4);
        assert_eq!(to_oc_string(&m), "2\na\nb\n0.400000\n");
    }

    #[test]
    fn layout() {
        let m = DistanceMatrix::from_upper(
            vec!["x".into(), "y".into(), "z".into()],
            &[0.1, 0.25, 1.0 / 3.0],
        )
        .unwrap();
        assert_eq!(
            to_oc_string(&m),
            "3\nx\ny\nz\n0.100000 0.250000\n0.333333\n"
        );
        let mut buf = Vec::new();
        write_oc(&m, &mut buf).unwrap();
        let back = read_oc(buf.as_slice()).unwrap();
        assert!((back.get(1, 2) - 1.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn single_item() {
        let m = parse_oc("1\nsolo\n").unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(to_oc_string(&m), "1\nsolo\n");
    }

    #[test]
    fn malformed() {
        for bad in [
            "",
            "two\na\nb\n0.1\n",
            "3\na\nb\n0.1 0.2\n",
            "2\na\nb\n0.1 0.2\n",
            "2\na\nb\nzero\n",
            "2\na\n",
            "2\na\na\n0.1\n",
            "2\na\nb\n-0.1\n",
            "2\na\nb\n0.1\n0.2\n",
        ] {
            assert!(
                matches!(parse_oc(bad), Err(OcError::Format { .. })),
                "{bad:?}"
            );
        }
    }
}
