//! GKP-style embeddings of an `n`-dimensional qunit in a qudit of dimension
//! `d = n r_x r_z`.
//!
//! Logical operators are `X_L = X^{r_x}`, `Z_L = Z^{r_z}`; the stabilizer is
//! generated by `X^{n r_x}` and `Z^{n r_z}`. A logical Clifford is
//! *symplectically feasible* if some qudit symplectic matrix maps the logical
//! generator vectors to their logical targets modulo the stabilizer lattice.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::modring::{mul_mod, neg_mod, sub_mod, Dimension};
use crate::pauli::PauliWord;
use crate::symplectic::{gate_matrix, Gate, SymplecticMatrix};
use crate::unitary::{phase_diagonal, root_of_unity};

/// Largest ambient dimension for which the two-qudit SUM action is checked
/// densely (`d^2 <= 1024`).
pub const MAX_SUM_CHECK_DIMENSION: u64 = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Embedding {
    n: u64,
    r_x: u64,
    r_z: u64,
    dim: Dimension,
}

impl Embedding {
    pub fn new(n: u64, r_x: u64, r_z: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidEmbedding(format!(
                "logical dimension must be at least 2, got {n}"
            )));
        }
        if r_x == 0 || r_z == 0 {
            return Err(Error::InvalidEmbedding(
                "r_x and r_z must be positive".into(),
            ));
        }
        let d = n
            .checked_mul(r_x)
            .and_then(|v| v.checked_mul(r_z))
            .ok_or_else(|| Error::InvalidEmbedding("n r_x r_z overflows".into()))?;
        let dim = Dimension::new(d)?;
        Ok(Self { n, r_x, r_z, dim })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r_x(&self) -> u64 {
        self.r_x
    }

    pub fn r_z(&self) -> u64 {
        self.r_z
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn is_symmetric(&self) -> bool {
        self.r_x == self.r_z
    }

    pub fn logical_x(&self) -> PauliWord {
        PauliWord::new(self.dim, vec![self.r_x], vec![0]).expect("one qudit")
    }

    pub fn logical_z(&self) -> PauliWord {
        PauliWord::new(self.dim, vec![0], vec![self.r_z]).expect("one qudit")
    }

    /// `X^{n r_x}` and `Z^{n r_z}`.
    pub fn stabilizers(&self) -> [PauliWord; 2] {
        let d = self.dim.d();
        [
            PauliWord::new(self.dim, vec![(self.n * self.r_x) % d], vec![0]).expect("one qudit"),
            PauliWord::new(self.dim, vec![0], vec![(self.n * self.r_z) % d]).expect("one qudit"),
        ]
    }

    /// Shifts `|a| < r_x / 2` and phase kicks `|b| < r_z / 2` are
    /// correctable. Metadata only, there is no decoder.
    pub fn correctable_radius(&self) -> (u64, u64) {
        ((self.r_x - 1) / 2, (self.r_z - 1) / 2)
    }

    /// Whether `(x, z)` lies in the stabilizer lattice mod `d`.
    fn in_lattice(&self, x: u64, z: u64) -> bool {
        x.is_multiple_of(self.n * self.r_x) && z.is_multiple_of(self.n * self.r_z)
    }
}

impl fmt::Display for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} r_x={} r_z={} d={}",
            self.n,
            self.r_x,
            self.r_z,
            self.dim.d()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LogicalGate {
    Qft,
    PhaseShift,
    Sum,
}

impl LogicalGate {
    pub fn name(&self) -> &'static str {
        match self {
            LogicalGate::Qft => "QFT",
            LogicalGate::PhaseShift => "PhaseShift",
            LogicalGate::Sum => "SUM",
        }
    }
}

impl fmt::Display for LogicalGate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `(1/sqrt(r_z)) sum_i |(j + i n) r_x mod d>`.
pub fn logical_basis_state(e: &Embedding, j: u64) -> Result<Vec<Complex64>> {
    if j >= e.n {
        return Err(Error::IndexOutOfRange {
            index: j as usize,
            n: e.n as usize,
        });
    }
    let d = e.dim.d();
    let mut state = vec![Complex64::new(0.0, 0.0); d as usize];
    let amp = 1.0 / (e.r_z as f64).sqrt();
    for i in 0..e.r_z {
        let k = ((j + i * e.n) * e.r_x) % d;
        state[k as usize] += amp;
    }
    Ok(state)
}

/// Images of the logical generator vectors `(r_x, 0)` and `(0, r_z)` under
/// a single-qunit logical gate, as `(x, z)` pairs mod `d`.
fn single_targets(e: &Embedding, g: LogicalGate) -> Result<[(u64, u64); 2]> {
    let d = e.dim.d();
    let (rx, rz) = (e.r_x % d, e.r_z % d);
    match g {
        // X_L -> Z_L, Z_L -> X_L^{-1}
        LogicalGate::Qft => Ok([(0, rz), (neg_mod(rx, d), 0)]),
        // X_L -> X_L Z_L, Z_L -> Z_L
        LogicalGate::PhaseShift => Ok([(rx, rz), (0, rz)]),
        LogicalGate::Sum => Err(Error::InvalidEmbedding("SUM is a two-qunit gate".into())),
    }
}

/// True iff `m` maps each logical generator vector onto its target modulo
/// the stabilizer lattice (mod `d`).
pub fn verify_single_witness(e: &Embedding, g: LogicalGate, m: &SymplecticMatrix) -> Result<bool> {
    if m.n() != 1 || m.dim() != e.dim {
        return Err(Error::DimensionMismatch(
            "witness must be a 2x2 matrix over the ambient dimension".into(),
        ));
    }
    let d = e.dim.d();
    let targets = single_targets(e, g)?;
    let inputs = [[e.r_x, 0], [0, e.r_z]];
    Ok(inputs.iter().zip(targets).all(|(v, (tx, tz))| {
        let w = m.apply_to_vector(v);
        e.in_lattice(sub_mod(w[0] % d, tx, d), sub_mod(w[1] % d, tz, d))
    }))
}

/// All `u in Z_D` with `u * coeff = target (mod d)` modulo the lattice
/// spacing `step` (which divides `d`).
fn entry_candidates(coeff: u64, target: u64, step: u64, big_d: u64) -> Vec<u64> {
    (0..big_d)
        .filter(|&u| (mul_mod(u, coeff, big_d) + step - target % step).is_multiple_of(step))
        .collect()
}

/// Searches for a symplectic `M = [[a, b], [c, e]]` over `Z_D` realizing a
/// single-qunit logical gate modulo the stabilizer lattice.
///
/// Each entry appears in exactly one congruence, so candidates are
/// enumerated per entry over all of `Z_D` and then filtered by
/// `ae - bc = 1 (mod D)`. The search is exhaustive: `None` is a proof that
/// no witness exists. The physical `R` (for QFT) or `P` (for PhaseShift) is
/// tried first so that symmetric embeddings report the natural witness.
pub fn logical_feasible_single(e: &Embedding, g: LogicalGate) -> Result<Option<SymplecticMatrix>> {
    let dim = e.dim;
    let big_d = dim.big_d();
    let natural = match g {
        LogicalGate::Qft => Gate::Fourier { qudit: 0 },
        LogicalGate::PhaseShift => Gate::Phase { qudit: 0, exp: 1 },
        LogicalGate::Sum => return Err(Error::InvalidEmbedding("SUM is a two-qunit gate".into())),
    };
    let natural = gate_matrix(&natural, 1, dim)?;
    if verify_single_witness(e, g, &natural)? {
        return Ok(Some(natural));
    }

    let [(t1x, t1z), (t2x, t2z)] = single_targets(e, g)?;
    let (sx, sz) = (e.n * e.r_x, e.n * e.r_z);
    let a_set = entry_candidates(e.r_x, t1x, sx, big_d);
    let c_set = entry_candidates(e.r_x, t1z, sz, big_d);
    let b_set = entry_candidates(e.r_z, t2x, sx, big_d);
    let mut e_ok = vec![false; big_d as usize];
    for u in entry_candidates(e.r_z, t2z, sz, big_d) {
        e_ok[u as usize] = true;
    }
    let e_set: Vec<u64> = (0..big_d).filter(|&u| e_ok[u as usize]).collect();
    if e_set.is_empty() {
        return Ok(None);
    }

    for &a in &a_set {
        for &b in &b_set {
            for &c in &c_set {
                // need a e = 1 + b c (mod D)
                let rhs = (1 + mul_mod(b, c, big_d)) % big_d;
                if let Some(&ee) = e_set.iter().find(|&&ee| mul_mod(a, ee, big_d) == rhs) {
                    let m = SymplecticMatrix::new(dim, 1, vec![a, b, c, ee])?;
                    debug_assert!(verify_single_witness(e, g, &m)?);
                    return Ok(Some(m));
                }
            }
        }
    }
    Ok(None)
}

/// Checks that the qudit SUM matrix realizes logical SUM modulo the
/// two-qudit stabilizer lattice and returns it.
///
/// The logical maps are `X_L I -> X_L X_L`, `I X_L -> I X_L`,
/// `Z_L I -> Z_L I`, `I Z_L -> Z_L^{-1} Z_L`.
pub fn logical_feasible_sum(e: &Embedding) -> Result<SymplecticMatrix> {
    let dim = e.dim;
    let d = dim.d();
    let c = gate_matrix(
        &Gate::Sum {
            control: 0,
            target: 1,
            exp: 1,
        },
        2,
        dim,
    )?;
    let (rx, rz) = (e.r_x % d, e.r_z % d);
    // (x_0, x_1, z_0, z_1)
    let cases: [([u64; 4], [u64; 4]); 4] = [
        ([rx, 0, 0, 0], [rx, rx, 0, 0]),
        ([0, rx, 0, 0], [0, rx, 0, 0]),
        ([0, 0, rz, 0], [0, 0, rz, 0]),
        ([0, 0, 0, rz], [0, 0, neg_mod(rz, d), rz]),
    ];
    for (input, target) in cases {
        let w = c.apply_to_vector(&input);
        let diff: Vec<u64> = w
            .iter()
            .zip(target)
            .map(|(&a, t)| sub_mod(a % d, t, d))
            .collect();
        if !(e.in_lattice(diff[0], diff[2]) && e.in_lattice(diff[1], diff[3])) {
            return Err(Error::InvariantViolation(format!(
                "qudit SUM does not act as logical SUM for {e}"
            )));
        }
    }
    Ok(c)
}

/// True iff both logical QFT and logical PhaseShift are symplectically
/// feasible.
pub fn is_symplectic_embedding(e: &Embedding) -> Result<bool> {
    Ok(logical_feasible_single(e, LogicalGate::Qft)?.is_some()
        && logical_feasible_single(e, LogicalGate::PhaseShift)?.is_some())
}

/// Result of the dense logical-action check for a symmetric embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct LogicalActionReport {
    /// Pauli correction `X^a Z^b` (applied after the gate) under which the
    /// qudit Fourier gate acts as logical QFT, if any.
    pub qft: Option<(u64, u64)>,
    /// Same for the qudit Phase gate and logical PhaseShift.
    pub phase_shift: Option<(u64, u64)>,
    /// Whether the qudit SUM acts as logical SUM with no correction.
    pub sum: bool,
}

impl LogicalActionReport {
    pub fn passed(&self) -> bool {
        self.qft.is_some() && self.phase_shift.is_some() && self.sum
    }

    /// Passed with no Pauli corrections at all.
    pub fn passed_exactly(&self) -> bool {
        self.qft == Some((0, 0)) && self.phase_shift == Some((0, 0)) && self.sum
    }
}

fn qft_state(state: &[Complex64], d: u64) -> Vec<Complex64> {
    let norm = 1.0 / (d as f64).sqrt();
    (0..d)
        .map(|k| {
            state
                .iter()
                .enumerate()
                .map(|(j, &a)| a * root_of_unity((j as u64 * k % d) as i64, d))
                .sum::<Complex64>()
                * norm
        })
        .collect()
}

fn phase_state(state: &[Complex64], dim: Dimension) -> Vec<Complex64> {
    state
        .iter()
        .enumerate()
        .map(|(j, &a)| a * phase_diagonal(j as u64, dim))
        .collect()
}

/// `X^a Z^b |psi>`.
fn pauli_state(state: &[Complex64], a: u64, b: u64, d: u64) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); d as usize];
    for (j, &amp) in state.iter().enumerate() {
        let j = j as u64;
        out[((j + a) % d) as usize] = amp * root_of_unity((b * j % d) as i64, d);
    }
    out
}

/// Logical phase on `|j>_L`: `omega_n^{j(j-1)/2}` for odd `n`,
/// `omega_n^{j^2/2}` for even `n`.
fn logical_phase(j: u64, n: u64) -> Complex64 {
    if n.is_multiple_of(2) {
        root_of_unity((j * j % (2 * n)) as i64, 2 * n)
    } else {
        root_of_unity((j * j.saturating_sub(1) / 2 % n) as i64, n)
    }
}

/// Whether `outputs[j] = c * expected[j]` for a single `c` of unit modulus.
fn agrees_up_to_phase(outputs: &[Vec<Complex64>], expected: &[Vec<Complex64>], tol: f64) -> bool {
    let inner = |u: &[Complex64], v: &[Complex64]| -> Complex64 {
        u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
    };
    let c = inner(&expected[0], &outputs[0]);
    if (c.norm() - 1.0).abs() > tol {
        return false;
    }
    outputs
        .iter()
        .zip(expected)
        .all(|(o, x)| o.iter().zip(x).all(|(a, b)| (a - c * b).norm() <= tol))
}

fn superpose(
    basis: &[Vec<Complex64>],
    coeffs: impl Iterator<Item = (usize, Complex64)>,
) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); basis[0].len()];
    for (k, c) in coeffs {
        for (o, b) in out.iter_mut().zip(&basis[k]) {
            *o += c * b;
        }
    }
    out
}

fn find_correction(
    raw: &[Vec<Complex64>],
    expected: &[Vec<Complex64>],
    d: u64,
    tol: f64,
) -> Option<(u64, u64)> {
    if agrees_up_to_phase(raw, expected, tol) {
        return Some((0, 0));
    }
    (0..d)
        .flat_map(|a| (0..d).map(move |b| (a, b)))
        .find(|&(a, b)| {
            let corrected: Vec<Vec<Complex64>> =
                raw.iter().map(|s| pauli_state(s, a, b, d)).collect();
            agrees_up_to_phase(&corrected, expected, tol)
        })
}

/// Dense check that the qudit Fourier, Phase and SUM unitaries act on the
/// logical basis as logical QFT, PhaseShift and SUM, up to global phase.
///
/// For the single-qudit gates a Pauli frame correction is searched when the
/// bare gate fails. With odd `n` and even `d` the qudit Phase gate picks up
/// a sign `(-1)^i` across the stabilizer branches, which a `Z` power absorbs.
pub fn check_symmetric_logical_action(e: &Embedding, tol: f64) -> Result<LogicalActionReport> {
    if !e.is_symmetric() {
        return Err(Error::InvalidEmbedding(format!(
            "logical-action check needs r_x = r_z, got {e}"
        )));
    }
    let d = e.dim.d();
    if d > MAX_SUM_CHECK_DIMENSION {
        return Err(Error::ScaleLimit {
            size: (d * d) as usize,
            limit: (MAX_SUM_CHECK_DIMENSION * MAX_SUM_CHECK_DIMENSION) as usize,
        });
    }
    let n = e.n;
    let basis: Vec<Vec<Complex64>> = (0..n)
        .map(|j| logical_basis_state(e, j))
        .collect::<Result<_>>()?;

    let qft_raw: Vec<_> = basis.iter().map(|s| qft_state(s, d)).collect();
    let norm = 1.0 / (n as f64).sqrt();
    let qft_expected: Vec<_> = (0..n)
        .map(|j| {
            superpose(
                &basis,
                (0..n).map(|k| (k as usize, root_of_unity((j * k % n) as i64, n) * norm)),
            )
        })
        .collect();
    let qft = find_correction(&qft_raw, &qft_expected, d, tol);

    let phase_raw: Vec<_> = basis.iter().map(|s| phase_state(s, e.dim)).collect();
    let phase_expected: Vec<_> = (0..n)
        .map(|j| superpose(&basis, std::iter::once((j as usize, logical_phase(j, n)))))
        .collect();
    let phase_shift = find_correction(&phase_raw, &phase_expected, d, tol);

    // Two-qudit states indexed by m0 * d + m1; SUM is |m0, m1> -> |m0, m0 + m1>.
    let tensor = |u: &[Complex64], v: &[Complex64]| -> Vec<Complex64> {
        u.iter()
            .flat_map(|&a| v.iter().map(move |&b| a * b))
            .collect()
    };
    let apply_sum = |s: &[Complex64]| -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); s.len()];
        for m0 in 0..d {
            for m1 in 0..d {
                out[(m0 * d + (m0 + m1) % d) as usize] = s[(m0 * d + m1) as usize];
            }
        }
        out
    };
    let mut sum_raw = Vec::new();
    let mut sum_expected = Vec::new();
    for j0 in 0..n {
        for j1 in 0..n {
            sum_raw.push(apply_sum(&tensor(&basis[j0 as usize], &basis[j1 as usize])));
            sum_expected.push(tensor(
                &basis[j0 as usize],
                &basis[((j0 + j1) % n) as usize],
            ));
        }
    }
    let sum = agrees_up_to_phase(&sum_raw, &sum_expected, tol);

    Ok(LogicalActionReport {
        qft,
        phase_shift,
        sum,
    })
}
