//! Dense complex-matrix oracle for the classical/unitary correspondence.
//!
//! Conventions: `omega = exp(2 pi i / d)`, `omega^{1/2} = exp(pi i / d)`.
//! Qudit 0 is the most significant tensor factor, so basis index
//! `sum_i x_i d^{n-1-i}` labels `|x_0 x_1 ... x_{n-1}>`.
//!
//! * `X|x> = |x+1>`, `Z|z> = omega^z |z>`.
//! * Fourier: `|j> -> d^{-1/2} sum_k omega^{jk} |k>`.
//! * Phase: `omega^{j(j-1)/2}` for odd `d`, `omega^{j^2/2}` for even `d`.
//! * SUM: `|i>|j> -> |i>|i+j>` for every `d`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::modring::Dimension;
use crate::pauli::PauliWord;
use crate::symplectic::{Gate, GateSequence, SymplecticMatrix};

/// Largest register (`d^n`) the oracle will build.
pub const MAX_ORACLE_SIDE: usize = 256;

/// Default comparison tolerance.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// `exp(2 pi i k / m)`.
pub fn root_of_unity(k: i64, m: u64) -> Complex64 {
    let m = m as i64;
    let k = k.rem_euclid(m);
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / m as f64)
}

/// A dense `d^n x d^n` operator, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    n: usize,
    dim: Dimension,
    side: usize,
    data: Vec<Complex64>,
}

fn register_side(n: usize, dim: Dimension) -> Result<usize> {
    let mut side: usize = 1;
    for _ in 0..n {
        side = side
            .checked_mul(dim.d() as usize)
            .filter(|&s| s <= MAX_ORACLE_SIDE)
            .ok_or(Error::ScaleLimit {
                size: usize::MAX,
                limit: MAX_ORACLE_SIDE,
            })?;
    }
    Ok(side)
}

impl DenseOperator {
    pub fn identity(n: usize, dim: Dimension) -> Result<Self> {
        let side = register_side(n, dim)?;
        let mut data = vec![Complex64::new(0.0, 0.0); side * side];
        for i in 0..side {
            data[i * side + i] = Complex64::new(1.0, 0.0);
        }
        Ok(Self { n, dim, side, data })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.side + col]
    }

    fn zeros_like(&self) -> Self {
        Self {
            n: self.n,
            dim: self.dim,
            side: self.side,
            data: vec![Complex64::new(0.0, 0.0); self.data.len()],
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.side != other.side {
            return Err(Error::DimensionMismatch(format!(
                "operators of side {} and {}",
                self.side, other.side
            )));
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let s = self.side;
        let mut out = self.zeros_like();
        for r in 0..s {
            for k in 0..s {
                let a = self.data[r * s + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                let row = &other.data[k * s..(k + 1) * s];
                let dst = &mut out.data[r * s..(r + 1) * s];
                for (o, &b) in dst.iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn adjoint(&self) -> Self {
        let s = self.side;
        let mut out = self.zeros_like();
        for r in 0..s {
            for c in 0..s {
                out.data[c * s + r] = self.data[r * s + c].conj();
            }
        }
        out
    }

    pub fn scale(&self, z: Complex64) -> Self {
        let mut out = self.clone();
        out.data.iter_mut().for_each(|x| *x *= z);
        out
    }

    pub fn pow(&self, k: u64) -> Result<Self> {
        let mut acc = Self::identity(self.n, self.dim)?;
        for _ in 0..k {
            acc = acc.matmul(self)?;
        }
        Ok(acc)
    }

    /// `tr(A^dagger B)`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        self.check_same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_same_shape(other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let prod = self.adjoint().matmul(self).expect("same shape");
        let id = Self::identity(self.n, self.dim).expect("same shape");
        prod.max_abs_diff(&id).expect("same shape") <= tol
    }

    /// Left-multiplies by one gate: `self <- U_g self`.
    pub fn apply_gate(&mut self, gate: &Gate) -> Result<()> {
        gate.validate(self.n)?;
        let d = self.dim.d() as usize;
        let s = self.side;
        let stride = |q: usize| d.pow((self.n - 1 - q) as u32);
        let digit = |idx: usize, q: usize| (idx / stride(q)) % d;
        match *gate {
            Gate::Fourier { qudit } => {
                let st = stride(qudit);
                let norm = 1.0 / (d as f64).sqrt();
                let mut out = self.zeros_like();
                for row in 0..s {
                    let j = digit(row, qudit);
                    let base = row - j * st;
                    // new[k-row] = sum_j omega^{jk} old[j-row] / sqrt(d)
                    for k in 0..d {
                        let w = root_of_unity((j * k) as i64, d as u64) * norm;
                        let dst = base + k * st;
                        for c in 0..s {
                            out.data[dst * s + c] += w * self.data[row * s + c];
                        }
                    }
                }
                *self = out;
            }
            Gate::Phase { qudit, exp } => {
                for row in 0..s {
                    let j = digit(row, qudit) as u64;
                    let ph = phase_diagonal(j, self.dim).powu(exp as u32);
                    for c in 0..s {
                        self.data[row * s + c] *= ph;
                    }
                }
            }
            Gate::Sum {
                control,
                target,
                exp,
            } => {
                let st = stride(target);
                let shift_by = (exp % self.dim.d()) as usize;
                let mut out = self.zeros_like();
                for row in 0..s {
                    let i = digit(row, control);
                    let j = digit(row, target);
                    let new_j = (j + shift_by * i) % d;
                    let dst = row - j * st + new_j * st;
                    out.data[dst * s..(dst + 1) * s]
                        .copy_from_slice(&self.data[row * s..(row + 1) * s]);
                }
                *self = out;
            }
        }
        Ok(())
    }
}

/// Diagonal entry of the single-qudit Phase gate on `|j>`.
pub(crate) fn phase_diagonal(j: u64, dim: Dimension) -> Complex64 {
    let d = dim.d();
    if dim.is_even() {
        // omega^{j^2 / 2} = exp(2 pi i j^2 / 2d)
        root_of_unity((j * j % (2 * d)) as i64, 2 * d)
    } else {
        root_of_unity((j * j.saturating_sub(1) / 2 % d) as i64, d)
    }
}

/// Single-qudit `X` and `Z`.
pub fn pauli_unitaries(dim: Dimension) -> (DenseOperator, DenseOperator) {
    let d = dim.d() as usize;
    let mut x = DenseOperator::identity(1, dim).expect("single qudit fits");
    let mut z = x.clone();
    x.data
        .iter_mut()
        .for_each(|e| *e = Complex64::new(0.0, 0.0));
    for col in 0..d {
        x.data[((col + 1) % d) * d + col] = Complex64::new(1.0, 0.0);
        z.data[col * d + col] = root_of_unity(col as i64, d as u64);
    }
    (x, z)
}

/// The embedded unitary of one gate.
pub fn gate_unitary(gate: &Gate, n: usize, dim: Dimension) -> Result<DenseOperator> {
    let mut u = DenseOperator::identity(n, dim)?;
    u.apply_gate(gate)?;
    Ok(u)
}

/// `U_{g_k} ... U_{g_1}` for a program.
pub fn program_unitary(seq: &GateSequence) -> Result<DenseOperator> {
    let mut u = DenseOperator::identity(seq.n(), seq.dim())?;
    for g in seq.gates() {
        u.apply_gate(g)?;
    }
    Ok(u)
}

/// `X^{a_1}Z^{b_1} (x) ... (x) X^{a_n}Z^{b_n}`, a monomial matrix.
pub fn word_unitary(w: &PauliWord) -> Result<DenseOperator> {
    let dim = w.dim();
    let n = w.n();
    let d = dim.d() as usize;
    let mut u = DenseOperator::identity(n, dim)?;
    let s = u.side;
    u.data
        .iter_mut()
        .for_each(|e| *e = Complex64::new(0.0, 0.0));
    for col in 0..s {
        let mut row = 0;
        let mut phase = 0u64;
        let mut rest = col;
        let mut digits = vec![0; n];
        for q in (0..n).rev() {
            digits[q] = rest % d;
            rest /= d;
        }
        for (q, &x) in digits.iter().enumerate() {
            // X^a Z^b |x> = omega^{b x} |x + a>
            phase += w.zexp()[q] * x as u64;
            row = row * d + (x + w.xexp()[q] as usize) % d;
        }
        u.data[row * s + col] = root_of_unity((phase % dim.d()) as i64, dim.d());
    }
    Ok(u)
}

/// `|tr(A^dagger B)| >= side (1 - tol)`: equal up to a global phase for
/// unitary `A`, `B`.
pub fn equal_up_to_phase(a: &DenseOperator, b: &DenseOperator, tol: f64) -> Result<bool> {
    Ok(a.inner(b)?.norm() >= a.side as f64 * (1.0 - tol))
}

/// The global phase `c` with `B = c A`, when the operators are equal up to
/// phase.
pub fn relative_phase(a: &DenseOperator, b: &DenseOperator, tol: f64) -> Result<Option<Complex64>> {
    if !equal_up_to_phase(a, b, tol)? {
        return Ok(None);
    }
    Ok(Some(a.inner(b)? / a.side as f64))
}

/// Outcome of [`check_program_report`] for one generator word.
#[derive(Debug, Clone)]
pub struct ConjugationCheck {
    pub generator: PauliWord,
    pub image: PauliWord,
    /// `c` with `U g U^dagger = c W(image)`, if the check passed.
    pub phase: Option<Complex64>,
}

/// Conjugates every generator `X_i`, `Z_i` by the program's unitary and
/// compares with the word predicted by `m`.
pub fn check_program_report(
    seq: &GateSequence,
    m: &SymplecticMatrix,
    tol: f64,
) -> Result<Vec<ConjugationCheck>> {
    if seq.n() != m.n() || seq.dim() != m.dim() {
        return Err(Error::DimensionMismatch(format!(
            "program on n={} ({}) vs matrix on n={} ({})",
            seq.n(),
            seq.dim(),
            m.n(),
            m.dim()
        )));
    }
    let u = program_unitary(seq)?;
    let u_dag = u.adjoint();
    let (n, dim) = (m.n(), m.dim());
    let generators = (0..n)
        .map(|i| PauliWord::x(dim, n, i))
        .chain((0..n).map(|i| PauliWord::z(dim, n, i)));
    generators
        .map(|g| {
            let conj = u.matmul(&word_unitary(&g)?)?.matmul(&u_dag)?;
            let image = m.apply_to_word(&g)?;
            let phase = relative_phase(&word_unitary(&image)?, &conj, tol)?;
            Ok(ConjugationCheck {
                generator: g,
                image,
                phase,
            })
        })
        .collect()
}

/// True iff the program's unitary conjugates each generator to the word
/// `m` predicts, up to global phase.
pub fn check_program(seq: &GateSequence, m: &SymplecticMatrix, tol: f64) -> Result<bool> {
    Ok(check_program_report(seq, m, tol)?
        .iter()
        .all(|c| c.phase.is_some()))
}
