//! Phase-free n-qudit Pauli words as `2n`-vectors over `Z_d`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::modring::{add_mod, gcd0_all, mul_mod, sub_mod, Dimension};

/// The class of `X^a Z^b = X^{a_1}Z^{b_1} (x) ... (x) X^{a_n}Z^{b_n}` modulo
/// global phase.
///
/// The vector layout is `(a_1..a_n, b_1..b_n)`: all X exponents first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliWord {
    dim: Dimension,
    xexp: Vec<u64>,
    zexp: Vec<u64>,
}

impl PauliWord {
    /// Builds a word from X and Z exponents, reducing every entry mod `d`.
    pub fn new(dim: Dimension, xexp: Vec<u64>, zexp: Vec<u64>) -> Result<Self> {
        if xexp.is_empty() || xexp.len() != zexp.len() {
            return Err(Error::DimensionMismatch(format!(
                "word needs n >= 1 X and Z exponents, got {} and {}",
                xexp.len(),
                zexp.len()
            )));
        }
        let d = dim.d();
        Ok(Self {
            dim,
            xexp: xexp.into_iter().map(|a| a % d).collect(),
            zexp: zexp.into_iter().map(|b| b % d).collect(),
        })
    }

    pub fn identity(dim: Dimension, n: usize) -> Self {
        Self {
            dim,
            xexp: vec![0; n],
            zexp: vec![0; n],
        }
    }

    /// `X` on qudit `i`.
    pub fn x(dim: Dimension, n: usize, i: usize) -> Self {
        let mut w = Self::identity(dim, n);
        w.xexp[i] = 1;
        w
    }

    /// `Z` on qudit `i`.
    pub fn z(dim: Dimension, n: usize, i: usize) -> Self {
        let mut w = Self::identity(dim, n);
        w.zexp[i] = 1;
        w
    }

    /// Reads a `2n`-vector laid out as `(a, b)`.
    pub fn from_vector(dim: Dimension, v: &[u64]) -> Result<Self> {
        if !v.len().is_multiple_of(2) || v.is_empty() {
            return Err(Error::DimensionMismatch(format!(
                "vector length {} is not a positive even number",
                v.len()
            )));
        }
        let n = v.len() / 2;
        Self::new(dim, v[..n].to_vec(), v[n..].to_vec())
    }

    pub fn to_vector(&self) -> Vec<u64> {
        self.xexp.iter().chain(&self.zexp).copied().collect()
    }

    pub fn n(&self) -> usize {
        self.xexp.len()
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn xexp(&self) -> &[u64] {
        &self.xexp
    }

    pub fn zexp(&self) -> &[u64] {
        &self.zexp
    }

    pub fn is_identity(&self) -> bool {
        self.xexp.iter().chain(&self.zexp).all(|&e| e == 0)
    }

    /// `gcd0` of all `2n` exponents.
    pub fn exponent_gcd(&self) -> u64 {
        gcd0_all(&self.to_vector())
    }

    /// Product in the quotient group: componentwise exponent addition.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        check_compatible(self, other)?;
        let d = self.dim.d();
        Ok(Self {
            dim: self.dim,
            xexp: zip_with(&self.xexp, &other.xexp, |a, b| add_mod(a, b, d)),
            zexp: zip_with(&self.zexp, &other.zexp, |a, b| add_mod(a, b, d)),
        })
    }

    /// `r`-th power: every exponent scaled by `r`.
    pub fn pow(&self, r: u64) -> Self {
        let d = self.dim.d();
        Self {
            dim: self.dim,
            xexp: self.xexp.iter().map(|&a| mul_mod(a, r, d)).collect(),
            zexp: self.zexp.iter().map(|&b| mul_mod(b, r, d)).collect(),
        }
    }
}

fn zip_with(a: &[u64], b: &[u64], f: impl Fn(u64, u64) -> u64) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

fn check_compatible(u: &PauliWord, v: &PauliWord) -> Result<()> {
    if u.dim != v.dim || u.n() != v.n() {
        return Err(Error::DimensionMismatch(format!(
            "words on n={} ({}) and n={} ({})",
            u.n(),
            u.dim,
            v.n(),
            v.dim
        )));
    }
    Ok(())
}

/// Symplectic inner product `sum_i a_i b'_i - a'_i b_i (mod d)`.
///
/// `X^a Z^b` and `X^a' Z^b'` commute up to the scalar `omega^sip`.
pub fn sip(u: &PauliWord, v: &PauliWord) -> Result<u64> {
    check_compatible(u, v)?;
    let d = u.dim.d();
    let mut acc = 0;
    for i in 0..u.n() {
        acc = add_mod(acc, mul_mod(u.xexp[i], v.zexp[i], d), d);
        acc = sub_mod(acc, mul_mod(v.xexp[i], u.zexp[i], d), d);
    }
    Ok(acc)
}

pub fn commutes(u: &PauliWord, v: &PauliWord) -> Result<bool> {
    Ok(sip(u, v)? == 0)
}

/// The same form evaluated as `u^T S v` with `S = [[0, I], [-I, 0]]`.
/// Kept as an independent route for cross-checking [`sip`].
pub fn sip_matrix_form(u: &PauliWord, v: &PauliWord) -> Result<u64> {
    check_compatible(u, v)?;
    let d = u.dim.d();
    let n = u.n();
    let uv = u.to_vector();
    let vv = v.to_vector();
    let form = |r: usize, c: usize| -> i64 {
        if r < n && c == r + n {
            1
        } else if r >= n && c + n == r {
            -1
        } else {
            0
        }
    };
    let mut acc: i64 = 0;
    for (r, &ur) in uv.iter().enumerate() {
        for (c, &vc) in vv.iter().enumerate() {
            let s = form(r, c);
            if s != 0 {
                acc = (acc + s * mul_mod(ur, vc, d) as i64).rem_euclid(d as i64);
            }
        }
    }
    Ok(acc as u64)
}

impl fmt::Display for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u64]| {
            v.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "d={} n={} a={} b={}",
            self.dim.d(),
            self.n(),
            join(&self.xexp),
            join(&self.zexp)
        )
    }
}

/// Parses `d=<d> n=<n> a=<a1,...,an> b=<b1,...,bn>`.
impl FromStr for PauliWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut d = None;
        let mut n = None;
        let mut a = None;
        let mut b = None;
        for field in s.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got '{field}'")))?;
            match key {
                "d" => d = Some(parse_int(value)?),
                "n" => n = Some(parse_int(value)? as usize),
                "a" => a = Some(parse_list(value)?),
                "b" => b = Some(parse_list(value)?),
                other => return Err(Error::Parse(format!("unknown word field '{other}'"))),
            }
        }
        let missing = |name: &str| Error::Parse(format!("word is missing '{name}='"));
        let dim = Dimension::new(d.ok_or_else(|| missing("d"))?)?;
        let n = n.ok_or_else(|| missing("n"))?;
        let a = a.ok_or_else(|| missing("a"))?;
        let b = b.ok_or_else(|| missing("b"))?;
        if a.len() != n || b.len() != n {
            return Err(Error::Parse(format!(
                "n={n} but got {} X and {} Z exponents",
                a.len(),
                b.len()
            )));
        }
        if let Some(e) = a.iter().chain(&b).find(|&&e| e >= dim.d()) {
            return Err(Error::Parse(format!(
                "exponent {e} not in [0, {})",
                dim.d()
            )));
        }
        Self::new(dim, a, b)
    }
}

fn parse_int(s: &str) -> Result<u64> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("'{s}' is not a nonnegative integer")))
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',').map(parse_int).collect()
}
