//! Seeded workloads shared by the benchmarks.

use qudit_clifford::{Dimension, Gate, GateSequence, SymplecticMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random program of `len` generator gates on `n` qudits.
pub fn random_program(n: usize, dim: Dimension, len: usize, seed: u64) -> GateSequence {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seq = GateSequence::new(n, dim);
    for _ in 0..len {
        let gate = match rng.gen_range(0..if n > 1 { 3 } else { 2 }) {
            0 => Gate::Fourier {
                qudit: rng.gen_range(0..n),
            },
            1 => Gate::Phase {
                qudit: rng.gen_range(0..n),
                exp: rng.gen_range(1..dim.big_d()),
            },
            _ => {
                let control = rng.gen_range(0..n);
                let target = (control + rng.gen_range(1..n)) % n;
                Gate::Sum {
                    control,
                    target,
                    exp: rng.gen_range(1..dim.big_d()),
                }
            }
        };
        seq.push(gate).expect("indices are in range");
    }
    seq
}

/// The matrix of a random program, i.e. a random-ish symplectic matrix.
pub fn random_symplectic(n: usize, d: u64, seed: u64) -> SymplecticMatrix {
    let dim = Dimension::new(d).expect("valid dimension");
    random_program(n, dim, 8 * n * n + 8, seed).matrix()
}
