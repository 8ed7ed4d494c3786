//! Acceptance suite. Prints one PASS/FAIL line per check.
//!
//! Checks marked as known deviations print FAIL with the observed result but
//! do not fail the process; any other FAIL exits non-zero.

use std::collections::{HashSet, VecDeque};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use qudit_clifford::embedding::verify_single_witness;
use qudit_clifford::modring::{gcd0, is_unit};
use qudit_clifford::synthesis::single_qudit_budget;
use qudit_clifford::unitary::{
    check_program_report, pauli_unitaries, program_unitary, root_of_unity, DenseOperator,
};
use qudit_clifford::{
    check_program, check_symmetric_logical_action, decompose, decompose_single, gate_matrix,
    is_symplectic, logical_feasible_single, logical_feasible_sum, sip, swap_sequence, transport,
    Dimension, Embedding, Gate, GateSequence, LogicalGate, PauliWord, SymplecticMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;
const SEED: u64 = 0x5eed_c11f;

struct Report {
    unexpected: usize,
}

impl Report {
    fn line(
        &mut self,
        id: &str,
        ok: bool,
        elapsed: Duration,
        limit: Option<Duration>,
        detail: &str,
    ) {
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let pass = ok && in_time;
        let timing = match limit {
            Some(l) => format!("{:.3?} (limit {:?})", elapsed, l),
            None => format!("{:.3?}", elapsed),
        };
        println!(
            "{} criterion {id}: {detail} [{timing}]",
            if pass { "PASS" } else { "FAIL" }
        );
        if !pass {
            self.unexpected += 1;
        }
    }

    fn deviation(&mut self, id: &str, holds: bool, elapsed: Duration, detail: &str) {
        if holds {
            println!("PASS criterion {id}: {detail} [{elapsed:.3?}]");
        } else {
            println!("FAIL criterion {id}: {detail} [{elapsed:.3?}] (known deviation)");
        }
    }
}

fn dim(d: u64) -> Dimension {
    Dimension::new(d).unwrap()
}

fn fourier(q: usize) -> Gate {
    Gate::Fourier { qudit: q }
}

fn phase(q: usize, exp: u64) -> Gate {
    Gate::Phase { qudit: q, exp }
}

fn sum(control: usize, target: usize) -> Gate {
    Gate::Sum {
        control,
        target,
        exp: 1,
    }
}

fn random_generator_product(n: usize, d: Dimension, rng: &mut ChaCha8Rng) -> GateSequence {
    let len = 12 * n * n;
    let gates = (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 => fourier(rng.gen_range(0..n)),
            1 => phase(rng.gen_range(0..n), 1),
            _ => {
                let c = rng.gen_range(0..n);
                sum(c, (c + rng.gen_range(1..n)) % n)
            }
        })
        .collect();
    GateSequence::from_gates(n, d, gates).unwrap()
}

fn criterion_1(r: &mut Report) {
    let start = Instant::now();
    let d6 = dim(6);
    // R P^10 R^3 P^5 R P R P^5, rightmost factor applied first
    let program = GateSequence::from_gates(
        1,
        d6,
        vec![
            phase(0, 5),
            fourier(0),
            phase(0, 1),
            fourier(0),
            phase(0, 5),
            fourier(0),
            fourier(0),
            fourier(0),
            phase(0, 10),
            fourier(0),
        ],
    )
    .unwrap();
    let target = SymplecticMatrix::new(d6, 1, vec![10, 9, 3, 4]).unwrap();
    let evaluates = program.matrix() == target;
    let recomposes = decompose_single(&target).unwrap().matrix() == target;
    r.line(
        "1",
        evaluates && recomposes,
        start.elapsed(),
        Some(Duration::from_millis(1)),
        &format!("worked example evaluates={evaluates} recomposes={recomposes}"),
    );
}

fn criterion_2(r: &mut Report) {
    let start = Instant::now();
    let mut total = 0usize;
    let mut bad = Vec::new();
    let mut worst = 0usize;
    for d in 2..=8 {
        let dm = dim(d);
        let big_d = dm.big_d();
        let budget = single_qudit_budget(big_d);
        for a in 0..big_d {
            for b in 0..big_d {
                for c in 0..big_d {
                    for e in 0..big_d {
                        if (a * e + big_d * big_d - b * c) % big_d != 1 {
                            continue;
                        }
                        total += 1;
                        let entries = vec![a, b, c, e];
                        let ok = is_symplectic(dm, 2, &entries).unwrap()
                            && SymplecticMatrix::new(dm, 1, entries.clone())
                                .and_then(|m| {
                                    let seq = decompose_single(&m)?;
                                    worst = worst.max(seq.gate_count());
                                    Ok(seq.matrix() == m && seq.gate_count() <= budget)
                                })
                                .unwrap_or(false);
                        if !ok {
                            bad.push((d, entries));
                        }
                    }
                }
            }
        }
    }
    r.line(
        "2",
        bad.is_empty(),
        start.elapsed(),
        Some(Duration::from_secs(30)),
        &format!(
            "{total} det-1 matrices for d=2..8, {} failures, max gate count {worst}",
            bad.len()
        ),
    );
}

/// Runs criterion 3 and hands back the programs for criterion 4.
fn criterion_3(r: &mut Report) -> Vec<(SymplecticMatrix, GateSequence)> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut ok = 0;
    let mut total = 0;
    let mut kept = Vec::new();
    for n in [2usize, 3] {
        for d in 2..=6 {
            let dm = dim(d);
            for _ in 0..100 {
                total += 1;
                let m = random_generator_product(n, dm, &mut rng).matrix();
                if let Ok(seq) = decompose(&m) {
                    if seq.matrix() == m {
                        ok += 1;
                    }
                    if n == 2 && d <= 5 {
                        kept.push((m, seq));
                    }
                }
            }
        }
    }
    r.line(
        "3",
        ok == total,
        start.elapsed(),
        Some(Duration::from_secs(120)),
        &format!("{ok}/{total} seeded random products recompose exactly (seed {SEED:#x})"),
    );
    kept
}

fn criterion_4(r: &mut Report, programs: &[(SymplecticMatrix, GateSequence)]) {
    let start = Instant::now();
    let mut generator_ok = true;
    for d in 2..=5 {
        let dm = dim(d);
        for n in 1..=2usize {
            let mut gates = Vec::new();
            for q in 0..n {
                gates.push(fourier(q));
                gates.extend((1..dm.big_d()).map(|e| phase(q, e)));
            }
            if n == 2 {
                for e in 1..dm.big_d() {
                    gates.push(Gate::Sum {
                        control: 0,
                        target: 1,
                        exp: e,
                    });
                    gates.push(Gate::Sum {
                        control: 1,
                        target: 0,
                        exp: e,
                    });
                }
            }
            for g in gates {
                let seq = GateSequence::from_gates(n, dm, vec![g]).unwrap();
                let m = gate_matrix(&g, n, dm).unwrap();
                generator_ok &= check_program(&seq, &m, TOL).unwrap();
            }
        }
    }
    let programs_ok = programs
        .iter()
        .filter(|(m, seq)| check_program(seq, m, TOL).unwrap())
        .count();
    // P X P^dagger = omega^{1/2} X Z for even d
    let mut half_root_ok = true;
    for d in [2u64, 4] {
        let dm = dim(d);
        let seq = GateSequence::from_gates(1, dm, vec![phase(0, 1)]).unwrap();
        let m = gate_matrix(&phase(0, 1), 1, dm).unwrap();
        let report = check_program_report(&seq, &m, TOL).unwrap();
        half_root_ok &= report[0]
            .phase
            .is_some_and(|p| (p - root_of_unity(1, 2 * d)).norm() < TOL);
    }
    r.line(
        "4",
        generator_ok && programs_ok == programs.len() && half_root_ok,
        start.elapsed(),
        Some(Duration::from_secs(120)),
        &format!(
            "generators ok={generator_ok}, synthesized programs {programs_ok}/{}, even-d half-root phase ok={half_root_ok} (tol {TOL:e})",
            programs.len()
        ),
    );
}

fn criterion_5(r: &mut Report) {
    let start = Instant::now();
    let mut matrix_ok = true;
    for d in 2..=9 {
        let dm = dim(d);
        let m = swap_sequence(0, 1, 2, dm).unwrap().matrix();
        let mut expected = vec![0; 16];
        for (row, col) in [(0, 1), (1, 0), (2, 3), (3, 2)] {
            expected[row * 4 + col] = 1;
        }
        matrix_ok &= m.entries() == expected.as_slice();
    }
    let mut unitary_ok = true;
    for d in 2..=3u64 {
        let u = program_unitary(&swap_sequence(0, 1, 2, dim(d)).unwrap()).unwrap();
        let du = d as usize;
        let mut reference = None;
        for i in 0..du {
            for j in 0..du {
                let amp = u.get(j * du + i, i * du + j);
                let p = *reference.get_or_insert(amp);
                unitary_ok &= (amp - p).norm() < TOL && (amp.norm() - 1.0).abs() < TOL;
            }
        }
    }
    r.line(
        "5a",
        matrix_ok && unitary_ok,
        start.elapsed(),
        None,
        &format!("SWAP program matrix exact for d=2..9: {matrix_ok}; |i>|j> -> |j>|i> up to phase for d=2,3: {unitary_ok}"),
    );

    let start = Instant::now();
    let conj = |d: u64| {
        let dm = dim(d);
        let seq = GateSequence::from_gates(
            2,
            dm,
            vec![fourier(0), fourier(1), sum(0, 1), fourier(0), fourier(1)],
        )
        .unwrap();
        (seq, gate_matrix(&sum(1, 0), 2, dm).unwrap())
    };
    let reduce =
        |m: &SymplecticMatrix, k: u64| m.entries().iter().map(|e| e % k).collect::<Vec<_>>();
    let (q2, c2) = conj(2);
    let (q3, c3) = conj(3);
    let mod_big_d_at_2 = q2.matrix() == c2;
    let mod_d_at_2 = reduce(&q2.matrix(), 2) == reduce(&c2, 2);
    let fails_at_3 = q3.matrix() != c3 && reduce(&q3.matrix(), 3) != reduce(&c3, 3);
    let h2 = program_unitary(&q2).unwrap();
    let c2_u =
        program_unitary(&GateSequence::from_gates(2, dim(2), vec![sum(1, 0)]).unwrap()).unwrap();
    let unitary_at_2 = qudit_clifford::equal_up_to_phase(&h2, &c2_u, TOL).unwrap();
    r.line(
        "5b",
        mod_d_at_2 && unitary_at_2 && fails_at_3,
        start.elapsed(),
        None,
        &format!(
            "R_[i,j] C_[i,j] R_[i,j] vs C_[j,i]: unitary equal at d=2: {unitary_at_2}; equal mod d at d=2: {mod_d_at_2}; differs at d=3: {fails_at_3}"
        ),
    );
    r.deviation(
        "5c",
        mod_big_d_at_2,
        start.elapsed(),
        &format!(
            "same identity compared mod D=4 at d=2: {mod_big_d_at_2} (left side is {}, i.e. R^2 = -I times C_[j,i]^-1)",
            q2.matrix()
        ),
    );
}

/// Orbit of a single-qudit word under the Fourier and Phase actions mod d.
fn orbit(w: (u64, u64), d: u64) -> HashSet<(u64, u64)> {
    let mut seen = HashSet::from([w]);
    let mut queue = VecDeque::from([w]);
    while let Some((x, z)) = queue.pop_front() {
        for next in [((d - z) % d, x), (x, (z + x) % d)] {
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    seen
}

fn criterion_6(r: &mut Report) {
    let start = Instant::now();
    let mut pairs = 0;
    let mut mismatches = 0;
    let mut wrong_programs = 0;
    for d in 2..=8 {
        let dm = dim(d);
        let words: Vec<(u64, u64)> = (0..d * d)
            .map(|k| (k / d, k % d))
            .filter(|&w| w != (0, 0))
            .collect();
        for &p in &words {
            let reachable = orbit(p, d);
            let pw = PauliWord::new(dm, vec![p.0], vec![p.1]).unwrap();
            for &q in &words {
                pairs += 1;
                let qw = PauliWord::new(dm, vec![q.0], vec![q.1]).unwrap();
                let (gp, gq) = (gcd0(p.0, p.1), gcd0(q.0, q.1));
                let gcd_rule = (1..d).any(|k| is_unit(k, d) && (k * gp) % d == gq);
                let bfs_rule = reachable.contains(&q);
                let got = transport(&pw, &qw).unwrap();
                if got.is_some() != gcd_rule || gcd_rule != bfs_rule {
                    mismatches += 1;
                }
                if let Some(seq) = got {
                    if seq.matrix().apply_to_word(&pw).unwrap() != qw {
                        wrong_programs += 1;
                    }
                }
            }
        }
    }
    r.line(
        "6",
        mismatches == 0 && wrong_programs == 0,
        start.elapsed(),
        Some(Duration::from_secs(60)),
        &format!(
            "{pairs} word pairs for d=2..8: feasibility mismatches vs gcd rule and orbit search {mismatches}, programs not mapping p to q {wrong_programs}"
        ),
    );
}

fn criterion_7(r: &mut Report) {
    let start = Instant::now();
    let e = Embedding::new(2, 3, 4).unwrap();
    let qft = logical_feasible_single(&e, LogicalGate::Qft).unwrap();
    let ps = logical_feasible_single(&e, LogicalGate::PhaseShift).unwrap();
    let sum_ok = logical_feasible_sum(&e).is_ok();
    let sym: Vec<_> = [(2, 2), (3, 2)]
        .into_iter()
        .map(|(n, rr)| {
            let emb = Embedding::new(n, rr, rr).unwrap();
            (emb, check_symmetric_logical_action(&emb, TOL).unwrap())
        })
        .collect();
    let sym_ok = sym.iter().all(|(_, rep)| rep.passed());
    let sym_detail: Vec<String> = sym
        .iter()
        .map(|(emb, rep)| {
            format!(
                "{emb}: passed={} phase frame correction X^a Z^b (a,b)={:?}",
                rep.passed(),
                rep.phase_shift
            )
        })
        .collect();
    let elapsed = start.elapsed();
    r.line(
        "7a",
        qft.is_none() && sum_ok && sym_ok,
        elapsed,
        Some(Duration::from_secs(60)),
        &format!(
            "(2,3,4): QFT infeasible={}, SUM feasible={sum_ok}; {}",
            qft.is_none(),
            sym_detail.join("; ")
        ),
    );
    let witness_checks = ps
        .as_ref()
        .map(|m| verify_single_witness(&e, LogicalGate::PhaseShift, m).unwrap());
    r.deviation(
        "7b",
        ps.is_none(),
        elapsed,
        &format!(
            "(2,3,4): PhaseShift infeasible={}; exhaustive search witness {} (re-verified: {:?})",
            ps.is_none(),
            ps.as_ref().map_or("none".to_string(), |m| m.to_string()),
            witness_checks
        ),
    );
}

fn criterion_8(r: &mut Report) {
    let start = Instant::now();
    let mut sip_ok = true;
    for d in 2..=6 {
        let dm = dim(d);
        let words: Vec<PauliWord> = (0..d.pow(4))
            .map(|k| {
                PauliWord::new(
                    dm,
                    vec![k % d, (k / d) % d],
                    vec![(k / d / d) % d, k / d.pow(3)],
                )
                .unwrap()
            })
            .collect();
        for u in &words {
            sip_ok &= sip(u, u).unwrap() == 0;
            // non-degeneracy: only the identity pairs trivially with everything
            if !u.is_identity() {
                sip_ok &= words.iter().any(|v| sip(u, v).unwrap() != 0);
            }
        }
        for u in words.iter().step_by(7) {
            for v in words.iter().step_by(5) {
                let s = sip(u, v).unwrap();
                sip_ok &= (s + sip(v, u).unwrap()).is_multiple_of(d);
                for w in words.iter().step_by(31) {
                    sip_ok &= sip(&u.mul(w).unwrap(), v).unwrap() == (s + sip(w, v).unwrap()) % d;
                }
                sip_ok &= sip(&u.pow(3), v).unwrap() == (3 * s) % d;
            }
        }
    }

    let mut preserve_ok = true;
    for d in 2..=6 {
        let dm = dim(d);
        let words: Vec<PauliWord> = (0..d.pow(4))
            .map(|k| {
                PauliWord::new(
                    dm,
                    vec![k % d, (k / d) % d],
                    vec![(k / d / d) % d, k / d.pow(3)],
                )
                .unwrap()
            })
            .collect();
        for g in [
            fourier(0),
            fourier(1),
            phase(0, 1),
            phase(1, 1),
            sum(0, 1),
            sum(1, 0),
        ] {
            let m = gate_matrix(&g, 2, dm).unwrap();
            let images: Vec<PauliWord> =
                words.iter().map(|w| m.apply_to_word(w).unwrap()).collect();
            for (i, u) in words.iter().enumerate().step_by(3) {
                for (j, v) in words.iter().enumerate().step_by(2) {
                    preserve_ok &= sip(u, v).unwrap() == sip(&images[i], &images[j]).unwrap();
                }
            }
        }
    }

    let mut pauli_ok = true;
    for d in 2..=6u64 {
        let dm = dim(d);
        let (x, z) = pauli_unitaries(dm);
        let id = DenseOperator::identity(1, dm).unwrap();
        pauli_ok &= x.pow(d).unwrap().max_abs_diff(&id).unwrap() < TOL;
        pauli_ok &= z.pow(d).unwrap().max_abs_diff(&id).unwrap() < TOL;
        let xz = x.matmul(&z).unwrap();
        for k in 1..=2 * d {
            let lhs = xz.pow(k).unwrap();
            let rhs = x
                .pow(k)
                .unwrap()
                .matmul(&z.pow(k).unwrap())
                .unwrap()
                .scale(root_of_unity((k * (k - 1) / 2) as i64, d));
            pauli_ok &= lhs.max_abs_diff(&rhs).unwrap() < TOL;
        }
    }
    r.line(
        "8",
        sip_ok && preserve_ok && pauli_ok,
        start.elapsed(),
        None,
        &format!(
            "SIP laws d=2..6 n=2: {sip_ok}; SIP preserved by generators: {preserve_ok}; X,Z order d and (XZ)^r law: {pauli_ok}"
        ),
    );
}

fn main() -> ExitCode {
    let mut r = Report { unexpected: 0 };
    criterion_1(&mut r);
    criterion_2(&mut r);
    let programs = criterion_3(&mut r);
    criterion_4(&mut r, &programs);
    criterion_5(&mut r);
    criterion_6(&mut r);
    criterion_7(&mut r);
    criterion_8(&mut r);
    if r.unexpected == 0 {
        println!("acceptance: all criteria met apart from documented deviations");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {} unexpected failure(s)", r.unexpected);
        ExitCode::FAILURE
    }
}
