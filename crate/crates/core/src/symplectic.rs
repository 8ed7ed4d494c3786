//! Symplectic matrices over `Z_D`, the three generator gates, and gate
//! programs.

use std::fmt;

use crate::error::{Error, Result};
use crate::modring::{add_mod, mul_mod, neg_mod, sub_mod, Dimension};
use crate::pauli::PauliWord;

/// A `2n x 2n` matrix over `Z_D` satisfying `N^T S N = S`, with
/// `S = [[0, I_n], [-I_n, 0]]`.
///
/// Rows and columns are ordered `(x_1..x_n, z_1..z_n)`, matching
/// [`PauliWord::to_vector`]. Column `j` is the image of the `j`-th
/// generator word under conjugation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    n: usize,
    dim: Dimension,
    entries: Vec<u64>,
}

/// Checks `N^T S N = S (mod D)` for a raw row-major square matrix.
pub fn is_symplectic(dim: Dimension, side: usize, entries: &[u64]) -> Result<bool> {
    if side == 0 || !side.is_multiple_of(2) {
        return Err(Error::MalformedMatrix(format!(
            "side length {side} is not a positive even number"
        )));
    }
    if entries.len() != side * side {
        return Err(Error::MalformedMatrix(format!(
            "expected {} entries, got {}",
            side * side,
            entries.len()
        )));
    }
    let m = dim.big_d();
    let n = side / 2;
    let at = |r: usize, c: usize| entries[r * side + c] % m;
    for r in 0..side {
        for c in 0..side {
            // (N^T S N)[r][c] = sum_i N[i][r] N[n+i][c] - N[n+i][r] N[i][c]
            let mut acc = 0;
            for i in 0..n {
                acc = add_mod(acc, mul_mod(at(i, r), at(n + i, c), m), m);
                acc = sub_mod(acc, mul_mod(at(n + i, r), at(i, c), m), m);
            }
            let expected = if c == r + n && r < n {
                1
            } else if r == c + n && c < n {
                m - 1
            } else {
                0
            };
            if acc != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl SymplecticMatrix {
    /// Validates and wraps a row-major `2n x 2n` matrix. Entries are reduced
    /// mod `D` first.
    pub fn new(dim: Dimension, n: usize, entries: Vec<u64>) -> Result<Self> {
        let m = dim.big_d();
        let entries: Vec<u64> = entries.into_iter().map(|e| e % m).collect();
        if !is_symplectic(dim, 2 * n, &entries)? {
            return Err(Error::NotSymplectic(m));
        }
        Ok(Self { n, dim, entries })
    }

    /// Caller guarantees symplecticity (products of symplectic matrices).
    pub(crate) fn from_entries_unchecked(dim: Dimension, n: usize, entries: Vec<u64>) -> Self {
        debug_assert_eq!(entries.len(), 4 * n * n);
        Self { n, dim, entries }
    }

    pub fn identity(dim: Dimension, n: usize) -> Self {
        let side = 2 * n;
        let mut entries = vec![0; side * side];
        for i in 0..side {
            entries[i * side + i] = 1;
        }
        Self { n, dim, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn side(&self) -> usize {
        2 * self.n
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> u64 {
        self.entries[row * self.side() + col]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: u64) {
        let side = self.side();
        self.entries[row * side + col] = value % self.dim.big_d();
    }

    pub fn column(&self, col: usize) -> Vec<u64> {
        (0..self.side()).map(|r| self.get(r, col)).collect()
    }

    pub fn row(&self, row: usize) -> Vec<u64> {
        (0..self.side()).map(|c| self.get(row, c)).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim, self.n)
    }

    pub fn transpose(&self) -> Self {
        let side = self.side();
        let mut entries = vec![0; side * side];
        for r in 0..side {
            for c in 0..side {
                entries[c * side + r] = self.get(r, c);
            }
        }
        Self::from_entries_unchecked(self.dim, self.n, entries)
    }

    /// Determinant of a single-qudit (`2 x 2`) matrix mod `D`.
    pub fn det2(&self) -> Option<u64> {
        (self.n == 1).then(|| {
            let m = self.dim.big_d();
            sub_mod(
                mul_mod(self.get(0, 0), self.get(1, 1), m),
                mul_mod(self.get(0, 1), self.get(1, 0), m),
                m,
            )
        })
    }

    /// Matrix product `self * other` mod `D`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n || self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose n={} ({}) with n={} ({})",
                self.n, self.dim, other.n, other.dim
            )));
        }
        let side = self.side();
        let m = self.dim.big_d();
        let mut entries = vec![0; side * side];
        for r in 0..side {
            for k in 0..side {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..side {
                    let idx = r * side + c;
                    entries[idx] = add_mod(entries[idx], mul_mod(a, other.get(k, c), m), m);
                }
            }
        }
        Ok(Self::from_entries_unchecked(self.dim, self.n, entries))
    }

    /// `-S M^T S`, which for `M = [[A, B], [C, D]]` is
    /// `[[D^T, -B^T], [-C^T, A^T]]`.
    pub fn inverse(&self) -> Self {
        let n = self.n;
        let m = self.dim.big_d();
        let mut out = Self::identity(self.dim, n);
        for r in 0..n {
            for c in 0..n {
                out.set(r, c, self.get(n + c, n + r));
                out.set(r, n + c, neg_mod(self.get(c, n + r), m));
                out.set(n + r, c, neg_mod(self.get(n + c, r), m));
                out.set(n + r, n + c, self.get(c, r));
            }
        }
        out
    }

    /// `self^k`.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.dim, self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose(&base).expect("same shape");
            }
            base = base.compose(&base).expect("same shape");
            k >>= 1;
        }
        acc
    }

    /// `M v` mod `D` for a raw column vector.
    pub fn apply_to_vector(&self, v: &[u64]) -> Vec<u64> {
        let m = self.dim.big_d();
        (0..self.side())
            .map(|r| {
                v.iter().enumerate().fold(0, |acc, (c, &x)| {
                    add_mod(acc, mul_mod(self.get(r, c), x, m), m)
                })
            })
            .collect()
    }

    /// Phase-free conjugation action on a Pauli word: `M vec(w)` reduced
    /// mod `d`.
    pub fn apply_to_word(&self, w: &PauliWord) -> Result<PauliWord> {
        if w.n() != self.n || w.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "matrix on n={} ({}) applied to word on n={} ({})",
                self.n,
                self.dim,
                w.n(),
                w.dim()
            )));
        }
        let image = self.apply_to_vector(&w.to_vector());
        PauliWord::from_vector(self.dim, &image)
    }
}

impl fmt::Display for SymplecticMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = self.side();
        let rows: Vec<String> = (0..side)
            .map(|r| {
                let row: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// One generator gate. Indices are 0-based; exponents live mod `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    /// Discrete QFT on one qudit (`R`).
    Fourier { qudit: usize },
    /// Phase-shift power `P^exp` on one qudit.
    Phase { qudit: usize, exp: u64 },
    /// SUM power `C^exp` from `control` to `target`.
    Sum {
        control: usize,
        target: usize,
        exp: u64,
    },
}

impl Gate {
    pub fn validate(&self, n: usize) -> Result<()> {
        let check = |index: usize| {
            if index < n {
                Ok(())
            } else {
                Err(Error::IndexOutOfRange { index, n })
            }
        };
        match *self {
            Gate::Fourier { qudit } | Gate::Phase { qudit, .. } => check(qudit),
            Gate::Sum {
                control, target, ..
            } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(Error::SameControlTarget(control));
                }
                Ok(())
            }
        }
    }

    /// Gates whose product inverts this one. `R^-1 = R^3`; powers are
    /// inverted by negating the exponent mod `D`.
    pub fn inverse(&self, dim: Dimension) -> Vec<Gate> {
        let m = dim.big_d();
        match *self {
            Gate::Fourier { .. } => vec![*self; 3],
            Gate::Phase { qudit, exp } => vec![Gate::Phase {
                qudit,
                exp: neg_mod(exp, m),
            }],
            Gate::Sum {
                control,
                target,
                exp,
            } => vec![Gate::Sum {
                control,
                target,
                exp: neg_mod(exp, m),
            }],
        }
    }

    fn reduced(self, dim: Dimension) -> Self {
        let m = dim.big_d();
        match self {
            Gate::Phase { qudit, exp } => Gate::Phase {
                qudit,
                exp: exp % m,
            },
            Gate::Sum {
                control,
                target,
                exp,
            } => Gate::Sum {
                control,
                target,
                exp: exp % m,
            },
            g => g,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gate::Fourier { qudit } => write!(f, "F {qudit}"),
            Gate::Phase { qudit, exp } => write!(f, "P {qudit} {exp}"),
            Gate::Sum {
                control,
                target,
                exp,
            } => write!(f, "C {control} {target} {exp}"),
        }
    }
}

/// Embedded `2n x 2n` matrix of one gate.
///
/// * `Fourier(i)`: `R = [[0, -1], [1, 0]]` on qudit `i`.
/// * `Phase(i, e)`: `[[I, 0], [e E_ii, I]]`.
/// * `Sum(c, t, e)`: `[[I + e E_tc, 0], [0, I - e E_ct]]`.
pub fn gate_matrix(gate: &Gate, n: usize, dim: Dimension) -> Result<SymplecticMatrix> {
    gate.validate(n)?;
    let m = dim.big_d();
    let mut out = SymplecticMatrix::identity(dim, n);
    match *gate {
        Gate::Fourier { qudit: i } => {
            out.set(i, i, 0);
            out.set(i, n + i, m - 1);
            out.set(n + i, i, 1);
            out.set(n + i, n + i, 0);
        }
        Gate::Phase { qudit: i, exp } => out.set(n + i, i, exp % m),
        Gate::Sum {
            control: c,
            target: t,
            exp,
        } => {
            out.set(t, c, exp % m);
            out.set(n + c, n + t, neg_mod(exp, m));
        }
    }
    Ok(out)
}

/// An ordered gate program. The first gate is applied first, so the
/// program's matrix is `M_k ... M_2 M_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GateSequence {
    n: usize,
    dim: Dimension,
    gates: Vec<Gate>,
}

impl GateSequence {
    pub fn new(n: usize, dim: Dimension) -> Self {
        Self {
            n,
            dim,
            gates: Vec::new(),
        }
    }

    pub fn from_gates(n: usize, dim: Dimension, gates: Vec<Gate>) -> Result<Self> {
        let mut seq = Self::new(n, dim);
        for g in gates {
            seq.push(g)?;
        }
        Ok(seq)
    }

    /// Appends a gate (applied after everything already present). Zero
    /// exponents are kept; use [`GateSequence::push_nontrivial`] to skip them.
    pub fn push(&mut self, gate: Gate) -> Result<()> {
        gate.validate(self.n)?;
        self.gates.push(gate.reduced(self.dim));
        Ok(())
    }

    /// Like [`push`](Self::push) but drops identity powers.
    pub fn push_nontrivial(&mut self, gate: Gate) -> Result<()> {
        match gate.reduced(self.dim) {
            Gate::Phase { exp: 0, .. } | Gate::Sum { exp: 0, .. } => gate.validate(self.n),
            g => self.push(g),
        }
    }

    pub fn extend(&mut self, other: &GateSequence) -> Result<()> {
        if other.n != self.n || other.dim != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "cannot concatenate n={} ({}) with n={} ({})",
                self.n, self.dim, other.n, other.dim
            )));
        }
        self.gates.extend_from_slice(&other.gates);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Number of gates, each power counted once.
    pub fn gate_count(&self) -> usize {
        self.gates.len()
    }

    /// The program that undoes this one.
    pub fn inverse(&self) -> Self {
        let gates = self
            .gates
            .iter()
            .rev()
            .flat_map(|g| g.inverse(self.dim))
            .collect();
        Self {
            n: self.n,
            dim: self.dim,
            gates,
        }
    }

    /// Same gates, renumbered into a register of `n` qudits through `map`.
    pub fn relabel(&self, n: usize, map: impl Fn(usize) -> usize) -> Result<Self> {
        let gates = self
            .gates
            .iter()
            .map(|g| match *g {
                Gate::Fourier { qudit } => Gate::Fourier { qudit: map(qudit) },
                Gate::Phase { qudit, exp } => Gate::Phase {
                    qudit: map(qudit),
                    exp,
                },
                Gate::Sum {
                    control,
                    target,
                    exp,
                } => Gate::Sum {
                    control: map(control),
                    target: map(target),
                    exp,
                },
            })
            .collect();
        Self::from_gates(n, self.dim, gates)
    }

    pub fn matrix(&self) -> SymplecticMatrix {
        sequence_matrix(self)
    }

    pub fn without_trivial_powers(&self) -> Self {
        let gates = self
            .gates
            .iter()
            .copied()
            .filter(|g| !matches!(g, Gate::Phase { exp: 0, .. } | Gate::Sum { exp: 0, .. }))
            .collect();
        Self {
            n: self.n,
            dim: self.dim,
            gates,
        }
    }

    /// Merges adjacent gates of the same kind on the same qudits: powers add
    /// mod `D` and four consecutive Fourier gates cancel (`R^4 = I`). The
    /// matrix is unchanged.
    pub fn simplified(&self) -> Self {
        let m = self.dim.big_d();
        let mut out: Vec<Gate> = Vec::with_capacity(self.gates.len());
        for &g in &self.gates {
            match g {
                Gate::Phase { exp: 0, .. } | Gate::Sum { exp: 0, .. } => {}
                Gate::Fourier { qudit } => {
                    let k = out.len();
                    if k >= 3 && out[k - 3..].iter().all(|&h| h == g) {
                        out.truncate(k - 3);
                    } else {
                        out.push(Gate::Fourier { qudit });
                    }
                }
                Gate::Phase { qudit, exp } => match out.last_mut() {
                    Some(Gate::Phase {
                        qudit: q,
                        exp: prev,
                    }) if *q == qudit => {
                        *prev = add_mod(*prev, exp, m);
                        if *prev == 0 {
                            out.pop();
                        }
                    }
                    _ => out.push(g),
                },
                Gate::Sum {
                    control,
                    target,
                    exp,
                } => match out.last_mut() {
                    Some(Gate::Sum {
                        control: c,
                        target: t,
                        exp: prev,
                    }) if *c == control && *t == target => {
                        *prev = add_mod(*prev, exp, m);
                        if *prev == 0 {
                            out.pop();
                        }
                    }
                    _ => out.push(g),
                },
            }
        }
        Self {
            n: self.n,
            dim: self.dim,
            gates: out,
        }
    }
}

impl fmt::Display for GateSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

/// `M_k ... M_1` for a program `[g_1, ..., g_k]`; identity when empty.
pub fn sequence_matrix(seq: &GateSequence) -> SymplecticMatrix {
    seq.gates
        .iter()
        .fold(SymplecticMatrix::identity(seq.dim, seq.n), |acc, g| {
            gate_matrix(g, seq.n, seq.dim)
                .expect("gates are validated on push")
                .compose(&acc)
                .expect("same shape")
        })
}
