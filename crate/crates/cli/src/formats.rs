//! Plain-text interchange formats.
//!
//! * Sequence file: one line of whitespace-separated tokens.
//! * Matrix file: one row per line of `0`/`1` characters, equal lengths.
//! * Polynomial-set file: one polynomial per line, comma-separated
//!   coefficients, constant term first.

use std::fmt::Write as _;

use extremal_core::envelope::Polynomial;
use extremal_core::{BitMatrix, Sequence};

use crate::error::CliError;

/// Parses a sequence file. Letters are numbered by first occurrence.
pub fn parse_sequence(text: &str) -> Result<Sequence, CliError> {
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    if lines.len() > 1 {
        return Err(CliError::Parse(format!(
            "sequence file must hold one line, found {}",
            lines.len()
        )));
    }
    Ok(Sequence::from_tokens(
        lines
            .first()
            .map(|l| l.split_whitespace())
            .into_iter()
            .flatten(),
    ))
}

/// Parses a pattern given on the command line.
///
/// With whitespace the string is split into tokens; otherwise every
/// character is a letter, so `abab` and `a b a b` agree.
pub fn parse_pattern(text: &str) -> Sequence {
    let text = text.trim();
    if text.chars().any(char::is_whitespace) {
        Sequence::from_tokens(text.split_whitespace())
    } else {
        Sequence::from_tokens(text.chars())
    }
}

/// Renders a sequence as a one-line sequence file.
pub fn write_sequence(u: &Sequence) -> String {
    let mut out = String::new();
    for (i, &x) in u.letters().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push_str(&letter_token(x));
    }
    out.push('\n');
    out
}

/// Token for letter id `x`: `a`..`z`, then `x26`, `x27`, ...
pub fn letter_token(x: u32) -> String {
    if x < 26 {
        char::from(b'a' + x as u8).to_string()
    } else {
        format!("x{x}")
    }
}

pub fn parse_matrix(text: &str) -> Result<BitMatrix, CliError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row: Vec<u8> = line
            .chars()
            .map(|ch| match ch {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(CliError::Parse(format!(
                    "line {}: unexpected character {other:?}",
                    i + 1
                ))),
            })
            .collect::<Result<_, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse("matrix file has no rows".into()));
    }
    Ok(BitMatrix::from_rows(&rows)?)
}

pub fn write_matrix(a: &BitMatrix) -> String {
    let mut out = String::new();
    for line in matrix_lines(a) {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Rows of `a` as `0`/`1` strings.
pub fn matrix_lines(a: &BitMatrix) -> Vec<String> {
    a.to_rows()
        .iter()
        .map(|r| r.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect())
        .collect()
}

pub fn parse_polynomials(text: &str) -> Result<Vec<Polynomial>, CliError> {
    let mut polys = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let coeffs = line
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<f64>()
                    .ok()
                    .filter(|c| c.is_finite())
                    .ok_or_else(|| {
                        CliError::Parse(format!("line {}: bad coefficient {t:?}", i + 1))
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        polys.push(Polynomial::new(coeffs));
    }
    Ok(polys)
}

pub fn write_polynomials(polys: &[Polynomial]) -> String {
    let mut out = String::new();
    for p in polys {
        let coeffs = if p.is_zero() { &[0.0][..] } else { p.coeffs() };
        let line: Vec<String> = coeffs.iter().map(|c| format!("{c}")).collect();
        let _ = writeln!(out, "{}", line.join(","));
    }
    out
}
