//! `qclifford`: synthesize and check qudit Clifford programs.
//!
//! Exit codes: 0 success, 1 infeasible, 2 parse or usage error,
//! 3 non-symplectic input, 4 verification failure, 5 problem too large for
//! the dense oracle, 70 internal error.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qudit_clifford::unitary::DEFAULT_TOLERANCE;
use qudit_clifford::{
    check_program, check_symmetric_logical_action, format_matrix, format_program, generalized_peg,
    is_symplectic_embedding, logical_feasible_single, logical_feasible_sum, parse_matrix,
    parse_program, synthesize, transport, Dimension, Embedding, Error, Gate, GateSequence,
    LogicalGate, PauliWord, SymplecticMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest ambient dimension accepted by `embed-check`.
const MAX_EMBED_DIMENSION: u64 = 36;

#[derive(Parser)]
#[command(
    name = "qclifford",
    version,
    about = "Qudit Clifford synthesis over QFT, Phase-shift and SUM gates"
)]
struct Cli {
    /// Comparison tolerance for unitary checks (default: $CS_TOL or 1e-9).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    None,
    Symplectic,
    Unitary,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a symplectic matrix file into a gate program.
    Synth {
        /// Matrix file, or `-` for stdin.
        matrix: String,
        #[arg(long, value_enum, default_value = "none")]
        verify: VerifyMode,
    },
    /// Find a program conjugating one Pauli word into another.
    Transport {
        /// Source word, e.g. "d=5 n=1 a=1 b=0".
        from: String,
        /// Target word.
        to: String,
    },
    /// Reduce a Pauli word to `I ... I Z^k`.
    Peg { word: String },
    /// Check a program file against a matrix file.
    Verify {
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        program: String,
        /// Also run the dense unitary check.
        #[arg(long)]
        unitary: bool,
    },
    /// Decide symplectic feasibility of logical gates for an embedding.
    EmbedCheck {
        n: u64,
        r_x: u64,
        r_z: u64,
        /// For symmetric embeddings, also check the logical action densely.
        #[arg(long)]
        logical_action: bool,
    },
    /// List every embedding with d up to the bound and whether it is symplectic.
    EmbedSweep {
        #[arg(long, default_value_t = 24)]
        max_d: u64,
    },
    /// Print a seeded random symplectic matrix file.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random generator gates multiplied together.
        #[arg(long)]
        length: Option<usize>,
    },
}

enum Failure {
    Infeasible,
    Usage(String),
    NotSymplectic(String),
    Verify(String),
    Scale(String),
    Internal(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Infeasible => 1,
            Failure::Usage(_) => 2,
            Failure::NotSymplectic(_) => 3,
            Failure::Verify(_) => 4,
            Failure::Scale(_) => 5,
            Failure::Internal(_) => 70,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::NotSymplectic(_) => Failure::NotSymplectic(msg),
            Error::ScaleLimit { .. } => Failure::Scale(msg),
            Error::InvariantViolation(_) => Failure::Internal(msg),
            _ => Failure::Usage(msg),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))
    }
}

fn load_matrix(path: &str) -> Result<SymplecticMatrix, Failure> {
    let raw = parse_matrix(&read_input(path)?)?;
    if !raw.is_symplectic()? {
        return Err(Failure::NotSymplectic(format!(
            "{path}: matrix is not symplectic over Z_{}",
            raw.dim.big_d()
        )));
    }
    Ok(raw.into_symplectic()?)
}

fn tolerance(flag: Option<f64>) -> Result<f64, Failure> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("CS_TOL") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("CS_TOL='{v}' is not a number"))),
        Err(_) => Ok(DEFAULT_TOLERANCE),
    }
}

fn verify(seq: &GateSequence, m: &SymplecticMatrix, unitary: bool, tol: f64) -> CmdResult {
    if seq.matrix() != *m {
        return Err(Failure::Verify("symplectic: mismatch".into()));
    }
    println!("# symplectic: ok");
    if unitary {
        if !check_program(seq, m, tol)? {
            return Err(Failure::Verify(format!("unitary: mismatch at tol {tol:e}")));
        }
        println!("# unitary: ok (tol {tol:e})");
    }
    Ok(())
}

fn cmd_synth(path: &str, mode: VerifyMode, tol: f64) -> CmdResult {
    let m = load_matrix(path)?;
    let result = synthesize(&m)?;
    print!("{}", format_program(&result.program));
    match mode {
        VerifyMode::None => Ok(()),
        VerifyMode::Symplectic => verify(&result.program, &m, false, tol),
        VerifyMode::Unitary => verify(&result.program, &m, true, tol),
    }
}

fn cmd_transport(from: &str, to: &str) -> CmdResult {
    let p: PauliWord = from.parse()?;
    let q: PauliWord = to.parse()?;
    match transport(&p, &q)? {
        Some(seq) => {
            print!("{}", format_program(&seq));
            Ok(())
        }
        None => {
            println!("infeasible");
            Err(Failure::Infeasible)
        }
    }
}

fn cmd_peg(word: &str) -> CmdResult {
    let w: PauliWord = word.parse()?;
    let (seq, k) = generalized_peg(&w)?;
    print!("{}", format_program(&seq));
    println!("# normal form: {}", seq.matrix().apply_to_word(&w)?);
    println!("# gcd: {k}");
    Ok(())
}

fn cmd_verify(matrix: &str, program: &str, unitary: bool, tol: f64) -> CmdResult {
    let m = load_matrix(matrix)?;
    let seq = parse_program(&read_input(program)?, m.n(), m.dim())?;
    verify(&seq, &m, unitary, tol)
}

fn cmd_embed_check(n: u64, r_x: u64, r_z: u64, logical_action: bool, tol: f64) -> CmdResult {
    let e = Embedding::new(n, r_x, r_z)?;
    if e.dim().d() > MAX_EMBED_DIMENSION {
        return Err(Failure::Scale(format!(
            "d = {} exceeds the exhaustive-search bound {MAX_EMBED_DIMENSION}",
            e.dim().d()
        )));
    }
    println!("embedding: {e}");
    println!(
        "symplectic: {}",
        if is_symplectic_embedding(&e)? {
            "yes"
        } else {
            "no"
        }
    );
    for g in [LogicalGate::Qft, LogicalGate::PhaseShift] {
        match logical_feasible_single(&e, g)? {
            Some(m) => println!("{g}: feasible {m}"),
            None => println!("{g}: infeasible"),
        }
    }
    println!("SUM: feasible {}", logical_feasible_sum(&e)?);
    if logical_action {
        let report = check_symmetric_logical_action(&e, tol)?;
        let show = |c: Option<(u64, u64)>| match c {
            Some((0, 0)) => "ok".to_string(),
            Some((a, b)) => format!("ok after X^{a} Z^{b}"),
            None => "fails".to_string(),
        };
        println!("logical QFT action: {}", show(report.qft));
        println!("logical PhaseShift action: {}", show(report.phase_shift));
        println!(
            "logical SUM action: {}",
            if report.sum { "ok" } else { "fails" }
        );
        if !report.passed() {
            return Err(Failure::Verify("logical action check failed".into()));
        }
    }
    Ok(())
}

fn cmd_embed_sweep(max_d: u64) -> CmdResult {
    if max_d > MAX_EMBED_DIMENSION {
        return Err(Failure::Scale(format!(
            "max-d {max_d} exceeds the exhaustive-search bound {MAX_EMBED_DIMENSION}"
        )));
    }
    for n in 2..=max_d {
        for r_x in 1..=max_d / n {
            for r_z in 1..=max_d / (n * r_x) {
                let e = Embedding::new(n, r_x, r_z)?;
                let qft = logical_feasible_single(&e, LogicalGate::Qft)?.is_some();
                let phase = logical_feasible_single(&e, LogicalGate::PhaseShift)?.is_some();
                println!(
                    "{e} QFT={} PhaseShift={} symplectic={}",
                    qft,
                    phase,
                    if qft && phase { "yes" } else { "no" }
                );
            }
        }
    }
    Ok(())
}

fn cmd_random(n: usize, d: u64, seed: u64, length: Option<usize>) -> CmdResult {
    if n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let dim = Dimension::new(d)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = length.unwrap_or(12 * n * n + 8);
    let mut seq = GateSequence::new(n, dim);
    for _ in 0..len {
        let gate = match rng.gen_range(0..if n > 1 { 3 } else { 2 }) {
            0 => Gate::Fourier {
                qudit: rng.gen_range(0..n),
            },
            1 => Gate::Phase {
                qudit: rng.gen_range(0..n),
                exp: 1,
            },
            _ => {
                let control = rng.gen_range(0..n);
                Gate::Sum {
                    control,
                    target: (control + rng.gen_range(1..n)) % n,
                    exp: 1,
                }
            }
        };
        seq.push(gate)?;
    }
    println!("# seed {seed}, {len} random generator gates");
    print!("{}", format_matrix(&seq.matrix()));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = tolerance(cli.tol).and_then(|tol| match cli.command {
        Command::Synth { matrix, verify } => cmd_synth(&matrix, verify, tol),
        Command::Transport { from, to } => cmd_transport(&from, &to),
        Command::Peg { word } => cmd_peg(&word),
        Command::Verify {
            matrix,
            program,
            unitary,
        } => cmd_verify(&matrix, &program, unitary, tol),
        Command::EmbedCheck {
            n,
            r_x,
            r_z,
            logical_action,
        } => cmd_embed_check(n, r_x, r_z, logical_action, tol),
        Command::EmbedSweep { max_d } => cmd_embed_sweep(max_d),
        Command::Random { n, d, seed, length } => cmd_random(n, d, seed, length),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Infeasible => {}
                Failure::Usage(m)
                | Failure::NotSymplectic(m)
                | Failure::Verify(m)
                | Failure::Scale(m)
                | Failure::Internal(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.exit_code())
        }
    }
}
