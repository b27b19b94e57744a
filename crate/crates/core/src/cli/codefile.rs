//! Text format for codes.
//!
//! ```text
//! # comment
//! q 4 modulus 1 1 1
//! n 4
//! k 2
//! 1 0 1 1
//! 0 1 1 2
//! ```
//!
//! The modulus lists coefficients from degree 0 up to the leading 1.

use std::sync::Arc;

use crate::algebra::{Field, Matrix};
use crate::code::LinearCode;
use crate::error::{Error, Result};

/// A whitespace-separated token with its 1-based line and column.
#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn tokens(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (byte, ch) in line
        .char_indices()
        .chain(std::iter::once((line.len(), ' ')))
    {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(byte),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..byte],
                    line: line_no,
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn number<T: std::str::FromStr>(t: Token<'_>, what: &str) -> Result<T> {
    t.text.parse().map_err(|_| {
        parse_err(
            t.line,
            t.column,
            format!("expected {what}, found '{}'", t.text),
        )
    })
}

/// Reads a header line `<key> <int>`; returns the tokens after the value.
fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<Token<'a>>)>,
    key: &str,
    last: usize,
) -> Result<(usize, Token<'a>, Vec<Token<'a>>)> {
    let (line, toks) = lines
        .next()
        .ok_or_else(|| parse_err(last + 1, 1, format!("missing '{key}' header")))?;
    if toks[0].text != key {
        return Err(parse_err(
            line,
            toks[0].column,
            format!("expected '{key}', found '{}'", toks[0].text),
        ));
    }
    let value = *toks.get(1).ok_or_else(|| {
        parse_err(
            line,
            toks[0].column + key.len(),
            format!("'{key}' needs a value"),
        )
    })?;
    Ok((line, value, toks[2..].to_vec()))
}

fn no_trailing(rest: &[Token<'_>]) -> Result<()> {
    match rest.first() {
        Some(t) => Err(parse_err(
            t.line,
            t.column,
            format!("unexpected '{}'", t.text),
        )),
        None => Ok(()),
    }
}

/// Parses and validates a code file.
pub fn parse_code_file(text: &str) -> Result<LinearCode> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .map(|(i, l)| (i, tokens(i, l)))
        .filter(|(_, t)| !t.is_empty());

    let (q_line, q_tok, rest) = header(&mut lines, "q", 0)?;
    let q: u32 = number(q_tok, "field size")?;
    let field = match rest.first() {
        None => Field::with_order(q, None),
        Some(t) if t.text == "modulus" => {
            if rest.len() == 1 {
                return Err(parse_err(q_line, t.column, "modulus needs coefficients"));
            }
            let coeffs = rest[1..]
                .iter()
                .map(|&c| number::<u32>(c, "modulus coefficient"))
                .collect::<Result<Vec<_>>>()?;
            Field::with_order(q, Some(&coeffs))
        }
        Some(t) => {
            return Err(parse_err(
                q_line,
                t.column,
                format!("unexpected '{}'", t.text),
            ))
        }
    }
    .map_err(|e| parse_err(q_line, q_tok.column, e.to_string()))?;
    let field = Arc::new(field);

    let (n_line, n_tok, rest) = header(&mut lines, "n", q_line)?;
    no_trailing(&rest)?;
    let n: usize = number(n_tok, "length")?;
    if n == 0 {
        return Err(parse_err(n_line, n_tok.column, "n must be ≥ 1"));
    }
    let (k_line, k_tok, rest) = header(&mut lines, "k", n_line)?;
    no_trailing(&rest)?;
    let k: usize = number(k_tok, "dimension")?;
    if k == 0 || k > n {
        return Err(parse_err(
            k_line,
            k_tok.column,
            format!("need 1 ≤ k ≤ n = {n}"),
        ));
    }

    let mut rows: Vec<Vec<u32>> = Vec::with_capacity(k);
    let mut row_lines: Vec<(usize, Vec<Token<'_>>)> = Vec::with_capacity(k);
    let mut last = k_line;
    for (line, toks) in lines {
        if rows.len() == k {
            return Err(parse_err(
                line,
                toks[0].column,
                format!("more than k = {k} rows"),
            ));
        }
        if toks.len() != n {
            let column = toks
                .get(n)
                .map_or(toks[toks.len() - 1].column, |t| t.column);
            return Err(parse_err(
                line,
                column,
                format!("expected {n} entries, found {}", toks.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for &t in &toks {
            let v: u32 = number(t, "field element")?;
            if v >= q {
                return Err(parse_err(
                    line,
                    t.column,
                    format!("entry {v} outside [0, {q})"),
                ));
            }
            row.push(v);
        }
        rows.push(row);
        row_lines.push((line, toks));
        last = line;
    }
    if rows.len() < k {
        return Err(parse_err(
            last + 1,
            1,
            format!("expected {k} rows, found {}", rows.len()),
        ));
    }

    let g = Matrix::from_rows(&field, &rows, n)?;
    let rank = g.rank();
    if rank < k {
        return Err(parse_err(
            k_line,
            k_tok.column,
            format!("rows have rank {rank} < k = {k}"),
        ));
    }
    LinearCode::from_generator(&field, &g).map_err(|e| match e {
        Error::ZeroColumn(c) => {
            let (line, toks) = &row_lines[0];
            parse_err(
                *line,
                toks[c].column,
                format!("column {} is identically zero", c + 1),
            )
        }
        other => other,
    })
}

/// Writes `code` in the code-file format; extension fields carry their modulus.
pub fn serialize_code(code: &LinearCode) -> String {
    let mut out = format!("q {}", code.q());
    if let Some(m) = code.field().modulus() {
        out.push_str(" modulus");
        for c in m {
            out.push_str(&format!(" {c}"));
        }
    }
    out.push_str(&format!("\nn {}\nk {}\n", code.n(), code.k()));
    let g = code.generator();
    for r in 0..g.rows() {
        let row: Vec<String> = g.row(r).iter().map(u16::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
