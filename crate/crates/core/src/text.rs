//! Line-oriented text formats.
//!
//! Matrix file:
//!
//! ```text
//! d <d> n <n>
//! <2n rows of 2n space-separated integers in [0, D)>
//! ```
//!
//! Gate program: one gate per line, first line applied first.
//!
//! ```text
//! F <i>
//! P <i> <e>
//! C <c> <t> <e>
//! ```
//!
//! Blank lines and lines starting with `#` are ignored in both formats.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::modring::Dimension;
use crate::symplectic::{is_symplectic, Gate, GateSequence, SymplecticMatrix};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn int<T: FromStr>(token: &str, line: usize) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::Parse(format!("line {line}: '{token}' is not a valid integer")))
}

/// A parsed matrix file whose symplecticity has not been checked yet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawMatrix {
    pub dim: Dimension,
    pub n: usize,
    pub entries: Vec<u64>,
}

impl RawMatrix {
    pub fn is_symplectic(&self) -> Result<bool> {
        is_symplectic(self.dim, 2 * self.n, &self.entries)
    }

    pub fn into_symplectic(self) -> Result<SymplecticMatrix> {
        SymplecticMatrix::new(self.dim, self.n, self.entries)
    }
}

pub fn parse_matrix(text: &str) -> Result<RawMatrix> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (d, n) = match tokens.as_slice() {
        ["d", d, "n", n] => (int::<u64>(d, hline)?, int::<usize>(n, hline)?),
        _ => {
            return Err(Error::Parse(format!(
                "line {hline}: expected header 'd <d> n <n>', got '{header}'"
            )))
        }
    };
    if n == 0 {
        return Err(Error::Parse(format!("line {hline}: n must be at least 1")));
    }
    let dim = Dimension::new(d)?;
    let side = 2 * n;
    let mut entries = Vec::with_capacity(side * side);
    let mut rows = 0;
    for (lno, line) in lines {
        let row: Vec<u64> = line
            .split_whitespace()
            .map(|t| int(t, lno))
            .collect::<Result<_>>()?;
        if row.len() != side {
            return Err(Error::Parse(format!(
                "line {lno}: expected {side} entries, got {}",
                row.len()
            )));
        }
        if let Some(e) = row.iter().find(|&&e| e >= dim.big_d()) {
            return Err(Error::Parse(format!(
                "line {lno}: entry {e} not in [0, {})",
                dim.big_d()
            )));
        }
        entries.extend(row);
        rows += 1;
    }
    if rows != side {
        return Err(Error::Parse(format!(
            "expected {side} matrix rows, got {rows}"
        )));
    }
    Ok(RawMatrix { dim, n, entries })
}

pub fn format_matrix(m: &SymplecticMatrix) -> String {
    let mut out = format!("d {} n {}\n", m.dim().d(), m.n());
    for r in 0..m.side() {
        let row: Vec<String> = m.row(r).iter().map(|e| e.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_gate(line: &str, lno: usize) -> Result<Gate> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    match tokens.as_slice() {
        ["F", i] => Ok(Gate::Fourier {
            qudit: int(i, lno)?,
        }),
        ["P", i, e] => Ok(Gate::Phase {
            qudit: int(i, lno)?,
            exp: int(e, lno)?,
        }),
        ["C", c, t, e] => Ok(Gate::Sum {
            control: int(c, lno)?,
            target: int(t, lno)?,
            exp: int(e, lno)?,
        }),
        _ => Err(Error::Parse(format!(
            "line {lno}: expected 'F <i>', 'P <i> <e>' or 'C <c> <t> <e>', got '{line}'"
        ))),
    }
}

/// Parses a gate program for `n` qudits of dimension `dim`.
pub fn parse_program(text: &str, n: usize, dim: Dimension) -> Result<GateSequence> {
    let mut seq = GateSequence::new(n, dim);
    for (lno, line) in content_lines(text) {
        let gate = parse_gate(line, lno)?;
        if let Gate::Phase { exp, .. } | Gate::Sum { exp, .. } = gate {
            if exp >= dim.big_d() {
                return Err(Error::Parse(format!(
                    "line {lno}: exponent {exp} not in [0, {})",
                    dim.big_d()
                )));
            }
        }
        seq.push(gate)
            .map_err(|e| Error::Parse(format!("line {lno}: {e}")))?;
    }
    Ok(seq)
}

/// Program text followed by the `# gates: <count>` trailer.
pub fn format_program(seq: &GateSequence) -> String {
    format!("{seq}# gates: {}\n", seq.gate_count())
}
