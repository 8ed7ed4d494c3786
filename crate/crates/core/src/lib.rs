//! Exact synthesis of qudit Clifford operations.
//!
//! Clifford operations on `n` qudits of dimension `d` are represented by
//! `2n x 2n` symplectic matrices over `Z_D` (`D = d` for odd `d`, `2d` for
//! even `d`) and decomposed into programs over three gate families:
//! Fourier (`R`), Phase (`P`) and SUM (`C`).
//!
//! ```
//! use qudit_clifford::{synthesize, Dimension, SymplecticMatrix};
//!
//! let d6 = Dimension::new(6).unwrap();
//! let m = SymplecticMatrix::new(d6, 1, vec![10, 9, 3, 4]).unwrap();
//! let result = synthesize(&m).unwrap();
//! assert_eq!(result.program.matrix(), m);
//! ```

pub mod embedding;
pub mod error;
pub mod modring;
pub mod pauli;
pub mod symplectic;
pub mod synthesis;
pub mod text;
pub mod unitary;

pub use embedding::{
    check_symmetric_logical_action, is_symplectic_embedding, logical_basis_state,
    logical_feasible_single, logical_feasible_sum, Embedding, LogicalActionReport, LogicalGate,
};
pub use error::{Error, Result};
pub use modring::Dimension;
pub use pauli::{commutes, sip, PauliWord};
pub use symplectic::{gate_matrix, is_symplectic, Gate, GateSequence, SymplecticMatrix};
pub use synthesis::{
    decompose, decompose_single, generalized_peg, peg_reduce, scale_sequence, sum_peg,
    swap_sequence, synthesize, transport, Slot, SynthesisResult,
};
pub use text::{format_matrix, format_program, parse_matrix, parse_program, RawMatrix};
pub use unitary::{check_program, equal_up_to_phase, DenseOperator, DEFAULT_TOLERANCE};
