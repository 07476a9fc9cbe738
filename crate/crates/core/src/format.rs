//! Text formats for Δ-matroids, Wick and Plücker vectors, vectors in `T^J`,
//! matrices over Puiseux scalars, and subdivision cells.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Parse
//! errors carry the 1-based line number of the offending line.

use crate::delta_matroid::EvenDeltaMatroid;
use crate::linear_spaces::{GroundSet, TropicalPluckerVector};
use crate::realization::{PuiseuxScalar, ScalarMatrix};
use crate::sets::{parse_subset, Subset};
use crate::subdivision::SubdivisionCell;
use crate::trop::{SignedVector, TropicalValue};
use crate::wick::{TropicalWickVector, MAX_WICK_N};
use crate::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(k, l)| (k + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn at(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { .. } => e,
        Error::InvalidInput(message) => Error::Parse { line, message },
        other => Error::Parse { line, message: other.to_string() },
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn size_field(line: usize, tok: Option<&str>) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing size"))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad size '{tok}'")))
}

/// Splits off the `n <n>` header.
fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<(usize, Vec<&'a str>)> {
    let (line, text) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    Ok((line, text.split_whitespace().collect()))
}

fn dimension(line: usize, tokens: &[&str]) -> Result<usize> {
    if tokens.first() != Some(&"n") {
        return Err(parse_err(line, "expected header 'n <n>'"));
    }
    let n = size_field(line, tokens.get(1).copied())?;
    if n > MAX_WICK_N {
        return Err(parse_err(line, format!("n = {n} exceeds the supported maximum {MAX_WICK_N}")));
    }
    Ok(n)
}

/// One basis per line as space-separated elements, `-` for the empty set.
pub fn parse_bases(text: &str) -> Result<(usize, Vec<Subset>)> {
    let mut lines = content_lines(text);
    let (line, tokens) = header(&mut lines)?;
    let n = dimension(line, &tokens)?;
    if tokens.len() != 2 {
        return Err(parse_err(line, "trailing tokens after header"));
    }
    let mut bases = Vec::new();
    for (line, text) in lines {
        if text == "-" || text == "{}" {
            bases.push(Subset::EMPTY);
            continue;
        }
        let mut s = Subset::EMPTY;
        for tok in text.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| parse_err(line, format!("bad element '{tok}'")))?;
            if v == 0 || v > n {
                return Err(parse_err(line, format!("element {v} outside [{n}]")));
            }
            if s.contains(v - 1) {
                return Err(parse_err(line, format!("repeated element {v}")));
            }
            s = s.union(Subset::singleton(v - 1));
        }
        bases.push(s);
    }
    Ok((n, bases))
}

pub fn parse_delta_matroid(text: &str) -> Result<EvenDeltaMatroid> {
    let (n, bases) = parse_bases(text)?;
    EvenDeltaMatroid::new(n, bases)
}

/// Canonical output: bases in increasing bitmask order.
pub fn write_bases(n: usize, bases: &[Subset]) -> String {
    let mut sorted = bases.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out = format!("n {n}\n");
    for b in sorted {
        if b.is_empty() {
            out.push('-');
        } else {
            let elems: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
            out.push_str(&elems.join(" "));
        }
        out.push('\n');
    }
    out
}

pub fn write_delta_matroid(m: &EvenDeltaMatroid) -> String {
    write_bases(m.n(), m.bases())
}

/// `<literal> <value>`, where the literal may itself contain spaces inside brackets.
fn entry<'a>(line: usize, text: &'a str) -> Result<(&'a str, TropicalValue)> {
    let (lit, value) =
        text.rsplit_once(char::is_whitespace).ok_or_else(|| parse_err(line, "expected '<subset> <value>'"))?;
    Ok((lit.trim(), value.parse().map_err(at(line))?))
}

/// `n <n>` then `<subset> <value>` lines; absent entries are `inf`.
pub fn parse_wick(text: &str) -> Result<TropicalWickVector> {
    let mut lines = content_lines(text);
    let (line, tokens) = header(&mut lines)?;
    let n = dimension(line, &tokens)?;
    let mut entries = vec![TropicalValue::Infinity; 1 << n];
    let mut seen = vec![false; 1 << n];
    for (line, text) in lines {
        let (lit, value) = entry(line, text)?;
        let s = parse_subset(lit, n).map_err(at(line))?;
        if std::mem::replace(&mut seen[s.index()], true) {
            return Err(parse_err(line, format!("duplicate entry for {s}")));
        }
        entries[s.index()] = value;
    }
    TropicalWickVector::new(n, entries).map_err(at(line))
}

pub fn write_wick(p: &TropicalWickVector) -> String {
    p.to_string()
}

/// `m <m>` for subsets of `[m]`, or `n <n> signed` for subsets of `J`.
pub fn parse_plucker(text: &str) -> Result<TropicalPluckerVector> {
    let mut lines = content_lines(text);
    let (line, tokens) = header(&mut lines)?;
    let ground = match tokens.as_slice() {
        ["m", m] => GroundSet::Plain(size_field(line, Some(m))?),
        ["n", n, "signed"] => GroundSet::Signed(size_field(line, Some(n))?),
        _ => return Err(parse_err(line, "expected header 'm <m>' or 'n <n> signed'")),
    };
    if ground.size() > MAX_WICK_N {
        return Err(parse_err(line, format!("ground set of size {} is too large", ground.size())));
    }
    let mut entries = Vec::new();
    for (line, text) in lines {
        let (lit, value) = entry(line, text)?;
        entries.push((ground.parse(lit).map_err(at(line))?, value));
    }
    TropicalPluckerVector::from_entries(ground, entries).map_err(at(line))
}

pub fn write_plucker(p: &TropicalPluckerVector) -> String {
    p.to_string()
}

/// Whitespace-separated tropical values, one vector per line.
pub fn parse_vectors(text: &str, len: usize) -> Result<Vec<Vec<TropicalValue>>> {
    content_lines(text)
        .map(|(line, text)| {
            let v =
                text.split_whitespace().map(|t| t.parse().map_err(at(line))).collect::<Result<Vec<TropicalValue>>>()?;
            if v.len() != len {
                return Err(parse_err(line, format!("expected {len} values, found {}", v.len())));
            }
            Ok(v)
        })
        .collect()
}

/// Vectors in `T^J`, `2n` values per line ordered `1..n, 1*..n*`.
pub fn parse_signed_vectors(text: &str, n: usize) -> Result<Vec<SignedVector>> {
    parse_vectors(text, 2 * n)?.into_iter().map(|v| SignedVector::new(n, v)).collect()
}

/// Exactly one vector in `T^J`.
pub fn parse_signed_vector(text: &str, n: usize) -> Result<SignedVector> {
    let mut vs = parse_signed_vectors(text, n)?;
    match vs.len() {
        1 => Ok(vs.remove(0)),
        k => Err(parse_err(1, format!("expected one vector, found {k}"))),
    }
}

/// `n <rows> cols <cols>`, then one row per line of whitespace-separated
/// scalar expressions. An expression may not contain spaces: `1-t^(1/2)`.
pub fn parse_matrix(text: &str) -> Result<ScalarMatrix> {
    let mut lines = content_lines(text);
    let (line, tokens) = header(&mut lines)?;
    let (rows, cols) = match tokens.as_slice() {
        ["n", r, "cols", c] => (size_field(line, Some(r))?, size_field(line, Some(c))?),
        _ => return Err(parse_err(line, "expected header 'n <n> cols <cols>'")),
    };
    if cols > MAX_WICK_N || rows > cols {
        return Err(parse_err(line, format!("unsupported shape {rows}×{cols}")));
    }
    let mut data = Vec::with_capacity(rows);
    for (line, text) in lines {
        let row = text
            .split_whitespace()
            .map(|t| t.parse::<PuiseuxScalar>().map_err(at(line)))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != cols {
            return Err(parse_err(line, format!("expected {cols} entries, found {}", row.len())));
        }
        data.push(row);
    }
    if data.len() != rows {
        return Err(parse_err(line, format!("expected {rows} rows, found {}", data.len())));
    }
    if rows == 0 {
        return Ok(ScalarMatrix::zeros(0, cols));
    }
    ScalarMatrix::from_rows(data)
}

pub fn write_matrix(m: &ScalarMatrix) -> String {
    let mut out = format!("n {} cols {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get(r, c).to_string().replace(' ', "")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// One cell per line: vertex literals, then `| v = (…)`.
pub fn write_cells(cells: &[SubdivisionCell]) -> String {
    cells.iter().map(|c| format!("{c}\n")).collect()
}
