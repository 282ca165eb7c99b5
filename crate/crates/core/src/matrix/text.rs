//! Plain-text matrix format:
//!
//! ```text
//! matrix 2
//! 0.7071067811865476 0.7071067811865476
//! 0.7071067811865476 -0.7071067811865476
//! ```
//!
//! Entries are `re`, `re+imj` or `re-imj`. Blank lines and lines starting
//! with `#` are skipped.

use std::fmt::Write;

use super::{Complex64, ComplexMatrix};
use crate::error::{Error, Result};

impl ComplexMatrix {
    pub fn to_text(&self) -> String {
        let n = self.order();
        let mut out = format!("matrix {n}\n");
        for i in 0..n {
            for j in 0..n {
                if j > 0 {
                    out.push(' ');
                }
                write_entry(&mut out, self.get(i, j));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<ComplexMatrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `matrix <n>` header".into(),
        })?;
        let n = parse_header(header).ok_or_else(|| Error::Parse {
            line: hline,
            message: format!("expected `matrix <n>`, found `{header}`"),
        })?;
        let mut rows = Vec::with_capacity(n);
        for (line, body) in lines {
            if rows.len() == n {
                return Err(Error::Parse {
                    line,
                    message: format!("more than {n} rows"),
                });
            }
            let row = body
                .split_whitespace()
                .map(parse_entry)
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Parse {
                    line,
                    message: format!("malformed complex entry in `{body}`"),
                })?;
            if row.len() != n {
                return Err(Error::Parse {
                    line,
                    message: format!("{} entries, expected {n}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("{} rows, expected {n}", rows.len()),
            });
        }
        ComplexMatrix::from_rows(rows).map_err(|e| Error::Parse {
            line: hline,
            message: e.to_string(),
        })
    }
}

fn parse_header(header: &str) -> Option<usize> {
    let mut it = header.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some("matrix"), Some(n), None) => n.parse().ok(),
        _ => None,
    }
}

fn write_entry(out: &mut String, z: Complex64) {
    write!(out, "{}", z.re).unwrap();
    if z.im != 0.0 {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        write!(out, "{sign}{}j", z.im.abs()).unwrap();
    }
}

fn parse_entry(tok: &str) -> Option<Complex64> {
    let Some(body) = tok.strip_suffix('j') else {
        return tok.parse().ok().map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => Some(Complex64::new(body[..i].parse().ok()?, body[i..].parse().ok()?)),
        None => Some(Complex64::new(0.0, body.parse().ok()?)),
    }
}
