use crate::error::{Error, Result};
use crate::modring::{is_unit, mod_inverse, mul_mod, Dimension};
use crate::pauli::PauliWord;
use crate::symplectic::{gate_matrix, Gate, GateSequence, SymplecticMatrix};

use super::reduce::VectorReducer;
use super::single::{decompose_single, scale_on};

/// Which Z slot receives the gcd in [`sum_peg`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    First,
    Second,
}

/// SUM-only program on two qudits mapping `Z^a (x) Z^b` to
/// `Z^g (x) I` or `I (x) Z^g`, `g = gcd0(a, b)`.
pub fn sum_peg(a: u64, b: u64, dim: Dimension, slot: Slot) -> Result<GateSequence> {
    let d = dim.d();
    let mut red = VectorReducer::new(vec![0, 0, a % d, b % d], d, dim);
    red.sum_qudits(0, 1, slot == Slot::Second)?;
    Ok(red.seq)
}

/// Generalized PEG: a program mapping `w` to `I^{n-1} (x) Z^k` where `k` is
/// the `gcd0` of all of `w`'s exponents.
pub fn generalized_peg(w: &PauliWord) -> Result<(GateSequence, u64)> {
    if w.is_identity() {
        return Err(Error::DegenerateWord);
    }
    let mut red = VectorReducer::new(w.to_vector(), w.dim().d(), w.dim());
    let k = red.gather_into_last()?;
    Ok((red.seq, k))
}

/// A program conjugating `p` to `q`, if one exists.
///
/// One exists exactly when `gcd(p) = k gcd(q) (mod d)` for a unit `k`. The
/// program is `generalized_peg(p)`, then `S(k)` on the last qudit, then the
/// inverse of `generalized_peg(q)`.
pub fn transport(p: &PauliWord, q: &PauliWord) -> Result<Option<GateSequence>> {
    if p.n() != q.n() || p.dim() != q.dim() {
        return Err(Error::DimensionMismatch(format!(
            "cannot transport a word on n={} ({}) to n={} ({})",
            p.n(),
            p.dim(),
            q.n(),
            q.dim()
        )));
    }
    if p.is_identity() || q.is_identity() {
        return Err(Error::DegenerateWord);
    }
    let dim = p.dim();
    let n = p.n();
    if p == q {
        return Ok(Some(GateSequence::new(n, dim)));
    }
    let d = dim.d();
    let (to_p_normal, gp) = generalized_peg(p)?;
    let (to_q_normal, gq) = generalized_peg(q)?;
    let Some(k) = (1..d).find(|&k| is_unit(k, d) && mul_mod(k, gp, d) == gq % d) else {
        return Ok(None);
    };
    let mut seq = to_p_normal;
    if k != 1 {
        seq.extend(&scale_on(k, n - 1, n, dim)?)?;
    }
    seq.extend(&to_q_normal.inverse())?;
    let seq = seq.simplified();
    if seq.matrix().apply_to_word(p)? != *q {
        return Err(Error::InvariantViolation(format!(
            "transport program does not map {p} to {q}"
        )));
    }
    Ok(Some(seq))
}

fn unit_vector(len: usize, at: usize) -> Vec<u64> {
    (0..len).map(|i| u64::from(i == at)).collect()
}

/// Drops qudit `n - 1` from a matrix that acts as identity on it.
fn strip_last_qudit(m: &SymplecticMatrix) -> SymplecticMatrix {
    let n = m.n();
    let keep: Vec<usize> = (0..n - 1).chain(n..2 * n - 1).collect();
    let mut entries = Vec::with_capacity(keep.len() * keep.len());
    for &r in &keep {
        for &c in &keep {
            entries.push(m.get(r, c));
        }
    }
    SymplecticMatrix::from_entries_unchecked(m.dim(), n - 1, entries)
}

/// Right-multiplication bookkeeping for [`decompose`]: `work <- work * g`.
struct RightOps {
    gates: Vec<Gate>,
}

impl RightOps {
    fn apply(&mut self, work: &mut SymplecticMatrix, g: Gate) -> Result<()> {
        *work = work.compose(&gate_matrix(&g, work.n(), work.dim())?)?;
        self.gates.push(g);
        Ok(())
    }

    /// `C_[last, i]^{e}` on the right zeroes bottom-row entries of the Z
    /// block; the X column of `last` picks up multiples of X column `i`.
    fn clear_z_row(&mut self, work: &mut SymplecticMatrix) -> Result<()> {
        let n = work.n();
        let last = n - 1;
        for i in 0..last {
            let e = work.get(2 * n - 1, n + i);
            if e != 0 {
                self.apply(
                    work,
                    Gate::Sum {
                        control: last,
                        target: i,
                        exp: e,
                    },
                )?;
            }
        }
        Ok(())
    }

    /// Program for the inverse of the accumulated right factor.
    fn inverse_program(&self, n: usize, dim: Dimension) -> Result<GateSequence> {
        let gates = self.gates.iter().flat_map(|g| g.inverse(dim)).collect();
        GateSequence::from_gates(n, dim, gates)
    }
}

/// Program over `{Fourier, Phase, Sum}` whose matrix is `m`.
///
/// For `n > 1`, left multiplications (generalized PEG on the last column,
/// then `S(k^{-1})`) make the last column `e_{2n}`. Right multiplications
/// then clear the bottom row: SUM powers for the Z block, a Phase power for
/// the corner, `R P R P R^2` on qudit `i` for each remaining X-block entry,
/// and one more SUM pass. The result acts as identity on the last qudit and
/// the remaining `(n-1)`-qudit block is decomposed recursively.
pub fn decompose(m: &SymplecticMatrix) -> Result<GateSequence> {
    let n = m.n();
    let dim = m.dim();
    if n == 1 {
        return decompose_single(m);
    }
    if m.is_identity() {
        return Ok(GateSequence::new(n, dim));
    }
    let big_d = dim.big_d();
    let side = 2 * n;
    let last = n - 1;

    let mut red = VectorReducer::new(m.column(side - 1), big_d, dim);
    let k = red.gather_into_last()?;
    let mut left = red.seq;
    if k != 1 {
        let kinv = mod_inverse(k as i64, big_d).ok_or(Error::NotSymplectic(big_d))?;
        left.extend(&scale_on(kinv, last, n, dim)?)?;
    }
    let mut work = left.matrix().compose(m)?;
    if work.column(side - 1) != unit_vector(side, side - 1) {
        return Err(Error::InvariantViolation(
            "last column not reduced to a unit vector".into(),
        ));
    }

    let mut right = RightOps { gates: Vec::new() };
    right.clear_z_row(&mut work)?;
    let corner = work.get(side - 1, last);
    if corner != 0 {
        right.apply(
            &mut work,
            Gate::Phase {
                qudit: last,
                exp: big_d - corner,
            },
        )?;
    }
    for i in 0..last {
        if work.get(side - 1, i) != 0 {
            for g in [
                Gate::Fourier { qudit: i },
                Gate::Phase { qudit: i, exp: 1 },
                Gate::Fourier { qudit: i },
                Gate::Phase { qudit: i, exp: 1 },
                Gate::Fourier { qudit: i },
                Gate::Fourier { qudit: i },
            ] {
                right.apply(&mut work, g)?;
            }
        }
    }
    right.clear_z_row(&mut work)?;

    let ok = work.row(side - 1) == unit_vector(side, side - 1)
        && work.column(side - 1) == unit_vector(side, side - 1)
        && work.row(last) == unit_vector(side, last)
        && work.column(last) == unit_vector(side, last);
    if !ok {
        return Err(Error::InvariantViolation(format!(
            "reduced matrix does not act as identity on qudit {last}"
        )));
    }

    let inner = decompose(&strip_last_qudit(&work))?.relabel(n, |q| q)?;
    // m = left^{-1} * work * right^{-1}; the rightmost factor runs first.
    let mut out = right.inverse_program(n, dim)?;
    out.extend(&inner)?;
    out.extend(&left.inverse())?;
    Ok(out.simplified())
}

/// Fixed 9-gate SWAP program `R_j R_j C_ij R_ij C_ij R_ij C_ij` (matrix
/// product, rightmost first), where `R_ij = R_i R_j`.
pub fn swap_sequence(i: usize, j: usize, n: usize, dim: Dimension) -> Result<GateSequence> {
    let c = Gate::Sum {
        control: i,
        target: j,
        exp: 1,
    };
    let ri = Gate::Fourier { qudit: i };
    let rj = Gate::Fourier { qudit: j };
    GateSequence::from_gates(n, dim, vec![c, ri, rj, c, ri, rj, c, rj, rj])
}
