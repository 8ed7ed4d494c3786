//! Arithmetic over `Z_d` and `Z_D`.
//!
//! Every ring element handed out by this crate is a canonical representative
//! in `[0, modulus)`. Dimensions are capped so that the product of two
//! representatives modulo `D` never overflows a `u64`.

use crate::error::{Error, Result};

/// Largest supported qudit dimension. `D <= 2^31`, so `D^2` fits in a `u64`.
pub const MAX_DIMENSION: u64 = 1 << 30;

/// A qudit dimension `d` together with its phase modulus `D`.
///
/// `D = d` for odd `d` and `D = 2d` for even `d`. Symplectic matrices and
/// gate exponents live mod `D`; Pauli exponents live mod `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dimension {
    d: u64,
    big_d: u64,
}

impl Dimension {
    pub fn new(d: u64) -> Result<Self> {
        if !(2..=MAX_DIMENSION).contains(&d) {
            return Err(Error::InvalidDimension(d));
        }
        let big_d = if d.is_multiple_of(2) { 2 * d } else { d };
        Ok(Self { d, big_d })
    }

    /// Hilbert-space dimension.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Matrix and phase modulus.
    pub fn big_d(&self) -> u64 {
        self.big_d
    }

    pub fn is_even(&self) -> bool {
        self.d.is_multiple_of(2)
    }

    pub fn reduce_d(&self, x: i64) -> u64 {
        reduce(x, self.d)
    }

    pub fn reduce_big_d(&self, x: i64) -> u64 {
        reduce(x, self.big_d)
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "d={} (D={})", self.d, self.big_d)
    }
}

/// Canonical representative of `x` modulo `m`.
pub fn reduce(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    (a % m + b % m) % m
}

pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    (a % m + m - b % m) % m
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a % m) * (b % m)) % m
}

pub fn neg_mod(a: u64, m: u64) -> u64 {
    (m - a % m) % m
}

/// Greatest common divisor with `gcd0(0, m) = gcd0(m, 0) = m` and
/// `gcd0(0, 0) = 0`.
pub fn gcd0(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `gcd0` folded over a list; zero for an empty or all-zero list.
pub fn gcd0_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |g, &v| gcd0(g, v))
}

/// Quotients of the Euclidean remainder chain `a = m1*b + c1`,
/// `b = m2*c1 + c2`, ... down to a zero remainder.
///
/// A start with either input zero is already terminated and yields no
/// quotients. `(0, 0)` is rejected.
pub fn euclid_steps(a: u64, b: u64) -> Result<Vec<u64>> {
    if a == 0 && b == 0 {
        return Err(Error::DegenerateWord);
    }
    let mut quotients = Vec::new();
    if a == 0 || b == 0 {
        return Ok(quotients);
    }
    let (mut x, mut y) = (a, b);
    while y != 0 {
        quotients.push(x / y);
        (x, y) = (y, x % y);
    }
    Ok(quotients)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: i64, m: u64) -> Option<u64> {
    if m < 2 {
        return None;
    }
    let a = reduce(a, m);
    let (g, s, _) = extended_gcd(a as i64, m as i64);
    (g == 1).then(|| reduce(s, m))
}

pub fn is_unit(a: u64, m: u64) -> bool {
    gcd0(a % m, m) == 1
}
