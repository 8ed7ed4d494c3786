use crate::error::{Error, Result};
use crate::modring::{is_unit, mod_inverse, mul_mod, neg_mod, Dimension};
use crate::symplectic::{gate_matrix, Gate, GateSequence, SymplecticMatrix};

use super::reduce::VectorReducer;

/// PEG reduction of `X^a Z^b` on one qudit: a Fourier/Phase program mapping
/// `(a, b)` to `(0, g)` mod `d`, with `g = gcd0(a, b)`.
pub fn peg_reduce(a: u64, b: u64, dim: Dimension) -> Result<(GateSequence, u64)> {
    let d = dim.d();
    let (a, b) = (a % d, b % d);
    if a == 0 && b == 0 {
        return Err(Error::DegenerateWord);
    }
    let mut red = VectorReducer::new(vec![a, b], d, dim);
    let g = red.peg_qudit(0)?;
    Ok((red.seq, g))
}

/// Program for `S(k) = diag(k^{-1}, k)` on `qudit`, i.e. the matrix product
/// `R P^{k^{-1}} R P^k R P^{k^{-1}}`. `k` must be a unit mod `D`.
pub fn scale_sequence(k: u64, dim: Dimension) -> Result<GateSequence> {
    scale_on(k, 0, 1, dim)
}

pub(crate) fn scale_on(k: u64, qudit: usize, n: usize, dim: Dimension) -> Result<GateSequence> {
    let m = dim.big_d();
    let k = k % m;
    let kinv = mod_inverse(k as i64, m).ok_or(Error::NotAUnit { k, modulus: m })?;
    let gates = vec![
        Gate::Phase { qudit, exp: kinv },
        Gate::Fourier { qudit },
        Gate::Phase { qudit, exp: k },
        Gate::Fourier { qudit },
        Gate::Phase { qudit, exp: kinv },
        Gate::Fourier { qudit },
    ];
    GateSequence::from_gates(n, dim, gates)
}

fn fourier(k: usize) -> Vec<Gate> {
    vec![Gate::Fourier { qudit: 0 }; k]
}

/// `M = P^m R P^q R P^n` with `m = q^{-1}(s+1)`, `n = q^{-1}(p+1)`, valid
/// whenever the top-right entry `q` is a unit.
fn case_one(m: &SymplecticMatrix) -> Option<Vec<Gate>> {
    let big_d = m.dim().big_d();
    let (p, q, s) = (m.get(0, 0), m.get(0, 1), m.get(1, 1));
    let qinv = mod_inverse(q as i64, big_d)?;
    let left = mul_mod(qinv, s + 1, big_d);
    let right = mul_mod(qinv, p + 1, big_d);
    Some(vec![
        Gate::Phase {
            qudit: 0,
            exp: right,
        },
        Gate::Fourier { qudit: 0 },
        Gate::Phase { qudit: 0, exp: q },
        Gate::Fourier { qudit: 0 },
        Gate::Phase {
            qudit: 0,
            exp: left,
        },
    ])
}

/// Decomposes a matrix with at least one unit entry, moving that entry to
/// the top-right corner with extra Fourier gates.
fn decompose_with_unit(m: &SymplecticMatrix) -> Option<Vec<Gate>> {
    let dim = m.dim();
    let big_d = dim.big_d();
    let r = gate_matrix(&Gate::Fourier { qudit: 0 }, 1, dim).expect("qudit 0 exists");
    let unit = |row, col| is_unit(m.get(row, col), big_d);
    if unit(0, 1) {
        case_one(m)
    } else if unit(1, 0) {
        // R (R M R) R = R^2 M R^2 = M
        let inner = r.compose(m).ok()?.compose(&r).ok()?;
        let mut gates = fourier(1);
        gates.extend(case_one(&inner)?);
        gates.extend(fourier(1));
        Some(gates)
    } else if unit(0, 0) {
        // M = (M R) R^3; M R has -p top-right.
        let inner = m.compose(&r).ok()?;
        let mut gates = fourier(3);
        gates.extend(case_one(&inner)?);
        Some(gates)
    } else if unit(1, 1) {
        // M = R^3 (R M); R M has -s top-right.
        let inner = r.compose(m).ok()?;
        let mut gates = case_one(&inner)?;
        gates.extend(fourier(3));
        Some(gates)
    } else {
        None
    }
}

/// Fourier/Phase program whose matrix is the given single-qudit symplectic
/// matrix.
///
/// If no entry is a unit, Euclid's algorithm runs on the second column by
/// left-multiplying with `R P^k R^3` (top entry reduced by the bottom) and
/// `P^{-k}` (bottom reduced by the top) until some entry becomes a unit.
/// The reduced matrix is decomposed directly and the inverses of the
/// reduction steps are appended.
pub fn decompose_single(m: &SymplecticMatrix) -> Result<GateSequence> {
    if m.n() != 1 {
        return Err(Error::DimensionMismatch(format!(
            "decompose_single needs a 2x2 matrix, got n = {}",
            m.n()
        )));
    }
    let dim = m.dim();
    if m.is_identity() {
        return Ok(GateSequence::new(1, dim));
    }
    let r = gate_matrix(&Gate::Fourier { qudit: 0 }, 1, dim)?;
    let mut power = r.clone();
    for k in 1..4 {
        if power == *m {
            return GateSequence::from_gates(1, dim, fourier(k));
        }
        power = power.compose(&r)?;
    }
    let big_d = dim.big_d();
    let mut work = m.clone();
    let mut left = GateSequence::new(1, dim);
    // Each Euclid step at least halves one entry over two iterations.
    let max_steps = 4 * (64 - big_d.leading_zeros() as usize) + 8;
    let mut steps = 0;
    let inner = loop {
        if let Some(gates) = decompose_with_unit(&work) {
            break gates;
        }
        steps += 1;
        if steps > max_steps {
            return Err(Error::InvariantViolation(
                "Euclid loop did not reach a unit entry".into(),
            ));
        }
        let (q, s) = (work.get(0, 1), work.get(1, 1));
        if q == 0 || s == 0 {
            // A column of a symplectic matrix has unit gcd, so a lone
            // nonzero entry would already be a unit.
            return Err(Error::NotSymplectic(big_d));
        }
        let step = if q >= s {
            let mut g = vec![Gate::Fourier { qudit: 0 }; 3];
            g.push(Gate::Phase {
                qudit: 0,
                exp: q / s,
            });
            g.push(Gate::Fourier { qudit: 0 });
            g
        } else {
            vec![Gate::Phase {
                qudit: 0,
                exp: neg_mod(s / q, big_d),
            }]
        };
        let step = GateSequence::from_gates(1, dim, step)?;
        work = step.matrix().compose(&work)?;
        left.extend(&step)?;
    };
    let mut out = GateSequence::from_gates(1, dim, inner)?.without_trivial_powers();
    out.extend(&left.inverse())?;
    Ok(out.simplified())
}
