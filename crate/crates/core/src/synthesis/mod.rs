//! Gate synthesis over `{Fourier, Phase, Sum}`.
//!
//! Single-qudit decomposition and the PEG (Pauli-Euclid-Gottesman)
//! reduction live in [`single`]; the SUM-adapted reduction, Pauli
//! transport and the recursive n-qudit decomposition live in [`multi`].

mod multi;
mod reduce;
mod single;

pub use multi::{decompose, generalized_peg, sum_peg, swap_sequence, transport, Slot};
pub use single::{decompose_single, peg_reduce, scale_sequence};

use crate::error::{Error, Result};
use crate::symplectic::{GateSequence, SymplecticMatrix};

/// A program together with the matrix it realizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SynthesisResult {
    pub program: GateSequence,
    pub target: SymplecticMatrix,
    pub gate_count: usize,
}

/// Decomposes `target` and checks that the program recomposes to it.
pub fn synthesize(target: &SymplecticMatrix) -> Result<SynthesisResult> {
    let program = decompose(target)?;
    if program.matrix() != *target {
        return Err(Error::InvariantViolation(
            "synthesized program does not recompose to its target".into(),
        ));
    }
    Ok(SynthesisResult {
        gate_count: program.gate_count(),
        program,
        target: target.clone(),
    })
}

/// `ceil(log2(m))` for `m >= 1`.
pub fn ceil_log2(m: u64) -> u32 {
    64 - (m - 1).leading_zeros()
}

/// Gate budget for one qudit: `8 ceil(log2 D) + 16`.
pub fn single_qudit_budget(big_d: u64) -> usize {
    8 * ceil_log2(big_d) as usize + 16
}

/// Gate budget for `n` qudits: `n^2 (8 ceil(log2 D) + 64)`.
pub fn multi_qudit_budget(n: usize, big_d: u64) -> usize {
    n * n * (8 * ceil_log2(big_d) as usize + 64)
}
