//! Euclid-driven reduction of a single symplectic vector.
//!
//! The same machinery reduces Pauli words (modulus `d`) and matrix columns
//! (modulus `D`). Emitted gate exponents are always taken mod `D`, which is
//! consistent with either modulus since `d | D`.

use crate::error::{Error, Result};
use crate::modring::{add_mod, mul_mod, neg_mod, sub_mod, Dimension};
use crate::symplectic::{Gate, GateSequence};

/// Conjugation action of one gate on a `2n`-vector mod `modulus`.
pub(crate) fn act_on_vector(gate: &Gate, v: &mut [u64], modulus: u64) {
    let n = v.len() / 2;
    let m = modulus;
    match *gate {
        Gate::Fourier { qudit: i } => {
            let (x, z) = (v[i], v[n + i]);
            v[i] = neg_mod(z, m);
            v[n + i] = x;
        }
        Gate::Phase { qudit: i, exp } => {
            v[n + i] = add_mod(v[n + i], mul_mod(exp, v[i], m), m);
        }
        Gate::Sum {
            control: c,
            target: t,
            exp,
        } => {
            v[t] = add_mod(v[t], mul_mod(exp, v[c], m), m);
            v[n + c] = sub_mod(v[n + c], mul_mod(exp, v[n + t], m), m);
        }
    }
}

/// A vector being driven towards a normal form, with the gates applied so
/// far recorded in application order.
pub(crate) struct VectorReducer {
    pub v: Vec<u64>,
    pub modulus: u64,
    pub seq: GateSequence,
}

impl VectorReducer {
    pub fn new(v: Vec<u64>, modulus: u64, dim: Dimension) -> Self {
        let n = v.len() / 2;
        Self {
            v: v.into_iter().map(|e| e % modulus).collect(),
            modulus,
            seq: GateSequence::new(n, dim),
        }
    }

    fn n(&self) -> usize {
        self.v.len() / 2
    }

    fn apply(&mut self, gate: Gate) -> Result<()> {
        self.seq.push_nontrivial(gate)?;
        act_on_vector(&gate, &mut self.v, self.modulus);
        Ok(())
    }

    /// `(P^T)^{-q} = R P^q R^3` on qudit `i`: `x_i <- x_i - q z_i`.
    fn lower_x(&mut self, i: usize, q: u64) -> Result<()> {
        for _ in 0..3 {
            self.apply(Gate::Fourier { qudit: i })?;
        }
        self.apply(Gate::Phase { qudit: i, exp: q })?;
        self.apply(Gate::Fourier { qudit: i })
    }

    /// Maps `(x_i, z_i)` to `(0, gcd0(x_i, z_i))` with Fourier/Phase gates on
    /// qudit `i`. Returns the gcd.
    pub fn peg_qudit(&mut self, i: usize) -> Result<u64> {
        let n = self.n();
        let big_d = self.seq.dim().big_d();
        loop {
            let (a, b) = (self.v[i], self.v[n + i]);
            if a == 0 {
                return Ok(b);
            }
            if b == 0 {
                self.apply(Gate::Fourier { qudit: i })?;
                return Ok(a);
            }
            if a >= b {
                self.lower_x(i, a / b)?;
            } else {
                self.apply(Gate::Phase {
                    qudit: i,
                    exp: neg_mod(b / a, big_d),
                })?;
            }
        }
    }

    /// Moves `gcd0(z_first, z_second)` into one Z slot using only SUM gates.
    /// X components must already be zero for the result to be Z-only.
    pub fn sum_qudits(&mut self, first: usize, second: usize, into_second: bool) -> Result<u64> {
        let n = self.n();
        let big_d = self.seq.dim().big_d();
        loop {
            let (a, b) = (self.v[n + first], self.v[n + second]);
            match (a, b) {
                (0, 0) => return Err(Error::DegenerateWord),
                (0, g) => {
                    if !into_second {
                        self.apply(Gate::Sum {
                            control: first,
                            target: second,
                            exp: big_d - 1,
                        })?;
                        self.apply(Gate::Sum {
                            control: second,
                            target: first,
                            exp: 1,
                        })?;
                    }
                    return Ok(g);
                }
                (g, 0) => {
                    if into_second {
                        self.apply(Gate::Sum {
                            control: second,
                            target: first,
                            exp: big_d - 1,
                        })?;
                        self.apply(Gate::Sum {
                            control: first,
                            target: second,
                            exp: 1,
                        })?;
                    }
                    return Ok(g);
                }
                (a, b) if a >= b => self.apply(Gate::Sum {
                    control: first,
                    target: second,
                    exp: a / b,
                })?,
                (a, b) => self.apply(Gate::Sum {
                    control: second,
                    target: first,
                    exp: b / a,
                })?,
            }
        }
    }

    /// Generalized PEG: collects the gcd of all entries into the Z slot of
    /// the last qudit. Returns that gcd.
    pub fn gather_into_last(&mut self) -> Result<u64> {
        let n = self.n();
        if self.v.iter().all(|&e| e == 0) {
            return Err(Error::DegenerateWord);
        }
        for i in 0..n {
            if self.v[i] != 0 || self.v[n + i] != 0 {
                self.peg_qudit(i)?;
            }
        }
        for i in 0..n - 1 {
            if self.v[n + i] != 0 || self.v[n + i + 1] != 0 {
                self.sum_qudits(i, i + 1, true)?;
            }
        }
        Ok(self.v[2 * n - 1])
    }
}
