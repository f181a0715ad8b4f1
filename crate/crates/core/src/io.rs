//! Text formats for fields and matrices.
//!
//! ```text
//! field p=3 m=2 modulus=2,2,1
//! 2 3
//! 1 0 4
//! 0 1 3
//! ```
//!
//! Entries are integer encodings. Blank lines and `#` comments are ignored.

use std::path::Path;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parses `field p=<p> m=<m> [modulus=<c0,...,cm>]`.
pub fn parse_field_header(line: &str, line_no: usize) -> Result<Field> {
    let mut words = line.split_whitespace();
    if words.next() != Some("field") {
        return Err(parse_err(line_no, "expected a `field` header"));
    }
    let (mut p, mut m, mut modulus) = (None, None, None);
    for word in words {
        let (key, value) = word.split_once('=').ok_or_else(|| parse_err(line_no, format!("bad token {word:?}")))?;
        let number = |v: &str| v.parse::<u32>().map_err(|_| parse_err(line_no, format!("bad number {v:?}")));
        match key {
            "p" => p = Some(number(value)?),
            "m" => m = Some(number(value)?),
            "modulus" => modulus = Some(value.split(',').map(number).collect::<Result<Vec<_>>>()?),
            _ => return Err(parse_err(line_no, format!("unknown key {key:?}"))),
        }
    }
    let p = p.ok_or_else(|| parse_err(line_no, "missing p"))?;
    let m = m.unwrap_or(1);
    let field = match modulus {
        Some(modulus) => Field::with_modulus(p, m, &modulus),
        None => Field::new(p, m),
    };
    field.map_err(|e| parse_err(line_no, e.to_string()))
}

/// Meaningful lines with 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Reads `rows` lines of `cols` entries each.
pub(crate) fn parse_matrix_body<'a>(
    field: &Field,
    rows: usize,
    cols: usize,
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    last_line: usize,
) -> Result<Matrix> {
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(last_line, format!("expected {rows} rows, found {r}")))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != cols {
            return Err(parse_err(no, format!("expected {cols} entries, found {}", entries.len())));
        }
        for e in entries {
            let v: u32 = e.parse().map_err(|_| parse_err(no, format!("bad entry {e:?}")))?;
            data.push(field.elem(v).map_err(|err| parse_err(no, err.to_string()))?);
        }
    }
    Matrix::from_elems(field, rows, cols, data)
}

pub(crate) fn parse_dims(line: &str, no: usize) -> Result<(usize, usize)> {
    let dims: Vec<usize> = line
        .split_whitespace()
        .map(|w| w.parse().map_err(|_| parse_err(no, format!("bad dimension {w:?}"))))
        .collect::<Result<_>>()?;
    match dims[..] {
        [r, c] => Ok((r, c)),
        _ => Err(parse_err(no, "expected `rows cols`")),
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let mut lines = content_lines(text);
    let (no, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let field = parse_field_header(header, no)?;
    let (no, dims) = lines.next().ok_or_else(|| parse_err(no, "missing dimensions"))?;
    let (rows, cols) = parse_dims(dims, no)?;
    let m = parse_matrix_body(&field, rows, cols, &mut lines, no)?;
    if let Some((no, _)) = lines.next() {
        return Err(parse_err(no, "trailing content after matrix"));
    }
    Ok(m)
}

pub fn format_matrix(m: &Matrix) -> String {
    let mut out = format!("{}\n{} {}\n", m.field().header(), m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = m.row(r).iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_matrix(path: &Path) -> Result<Matrix> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn parse_code(text: &str) -> Result<LinearCode> {
    LinearCode::new(parse_matrix(text)?)
}

pub fn read_code(path: &Path) -> Result<LinearCode> {
    LinearCode::new(read_matrix(path)?)
}
