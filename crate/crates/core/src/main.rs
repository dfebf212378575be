//! Command-line front end: general-purpose basis and multiplicity
//! computations on ideal files, plus the one-shot verification pipeline.
//!
//! Exit codes: 0 on success (all claims verified for `verify-paper`), 1 when a
//! verification claim fails, 2 on usage or input errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use defring::defring::{run_full_verification, Corruption, DeformationCase, RunOptions};
use defring::groebner::{buchberger, Ideal};
use defring::hilbert::{self, Colength, Dimension};
use defring::ideal_file::{format_ideal_file, parse_ideal_file};
use defring::local;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "defring",
    version,
    about = "Exact commutative-algebra engine for deformation-ring verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a reduced basis of an ideal file (standard basis for a local
    /// order)
    Gb(GbArgs),
    /// Dimension and multiplicity of the quotient by an ideal file
    Mult(MultArgs),
    /// Replay the full verification pipeline and report every claim
    VerifyPaper(VerifyArgs),
}

#[derive(Args)]
struct GbArgs {
    /// Input ideal file
    input: PathBuf,
    /// Write the basis here instead of stdout
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct MultArgs {
    /// Input ideal file
    input: PathBuf,
    /// Compute at the origin through the tangent cone
    #[arg(long)]
    local: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CaseArg {
    Ramified,
    Indecomposable,
    Split,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which case of the residual representation to verify
    #[arg(long, value_enum, default_value = "all")]
    case: CaseArg,
    /// Odd prime to verify at (repeatable)
    #[arg(long = "prime")]
    primes: Vec<u64>,
    /// Write the JSON report here
    #[arg(long)]
    report: Option<PathBuf>,
    /// Run independent claims on this many threads
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Abort any single claim after this many seconds and mark it skipped
    #[arg(long)]
    timeout: Option<u64>,
    /// Include per-claim timings in the report (breaks byte-for-byte
    /// reproducibility)
    #[arg(long)]
    timings: bool,
    /// Negative control: flip the sign of the middle term of I3
    #[arg(long)]
    corrupt_i3_sign: bool,
}

fn fail2(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn cmd_gb(args: &GbArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => return fail2(format!("{}: {e}", args.input.display())),
    };
    let file = match parse_ideal_file(&text) {
        Ok(f) => f,
        Err(e) => return fail2(e),
    };
    let ideal = match Ideal::new(&file.ring, file.polynomials.clone()) {
        Ok(i) => i,
        Err(e) => return fail2(e),
    };
    let basis = if file.order.is_global() {
        match buchberger(&ideal, &file.order) {
            Ok(gb) => gb.basis().to_vec(),
            Err(e) => return fail2(e),
        }
    } else {
        match local::standard_basis(&ideal, &local::MoraOptions::default()) {
            Ok(sb) => sb.basis().to_vec(),
            Err(e) => return fail2(e),
        }
    };
    let out = format_ideal_file(&file.ring, &file.order, &basis);
    match &args.output {
        None => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Some(path) => match std::fs::write(path, out) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail2(format!("{}: {e}", path.display())),
        },
    }
}

fn cmd_mult(args: &MultArgs) -> ExitCode {
    let text = match std::fs::read_to_string(&args.input) {
        Ok(t) => t,
        Err(e) => return fail2(format!("{}: {e}", args.input.display())),
    };
    let file = match parse_ideal_file(&text) {
        Ok(f) => f,
        Err(e) => return fail2(e),
    };
    let ideal = match Ideal::new(&file.ring, file.polynomials.clone()) {
        Ok(i) => i,
        Err(e) => return fail2(e),
    };
    let line = if args.local {
        let dim = match local::local_dimension(&ideal) {
            Ok(d) => d,
            Err(e) => return fail2(e),
        };
        match dim {
            Dimension::EmptySet => "empty".to_string(),
            Dimension::Dim(0) => {
                let tc = match local::tangent_cone(&ideal) {
                    Ok(t) => t,
                    Err(e) => return fail2(e),
                };
                match hilbert::colength(&tc) {
                    Ok(Colength::Finite(l)) => format!("dim 0, length {l}"),
                    Ok(Colength::Infinite) => "dim 0, length infinite".to_string(),
                    Err(e) => return fail2(e),
                }
            }
            Dimension::Dim(d) => match local::local_multiplicity(&ideal) {
                Ok(e) => format!("dim {d}, e {e}"),
                Err(e) => return fail2(e),
            },
        }
    } else {
        let dim = match hilbert::krull_dim(&ideal) {
            Ok(d) => d,
            Err(e) => return fail2(e),
        };
        match dim {
            Dimension::EmptySet => "empty".to_string(),
            Dimension::Dim(0) => match hilbert::colength(&ideal) {
                Ok(Colength::Finite(l)) => format!("dim 0, length {l}"),
                Ok(Colength::Infinite) => "dim 0, length infinite".to_string(),
                Err(e) => return fail2(e),
            },
            Dimension::Dim(d) => {
                if !ideal.generators().iter().all(|g| g.is_homogeneous()) {
                    return fail2(
                        "inhomogeneous ideal: pass --local to compute at the origin through the tangent cone",
                    );
                }
                match hilbert::multiplicity_graded(&ideal) {
                    Ok(e) => format!("dim {d}, e {e}"),
                    Err(e) => return fail2(e),
                }
            }
        }
    };
    println!("{line}");
    ExitCode::SUCCESS
}

fn cmd_verify(args: &VerifyArgs) -> ExitCode {
    let mut primes = if args.primes.is_empty() {
        vec![3, 5, 7, 13]
    } else {
        args.primes.clone()
    };
    primes.sort_unstable();
    primes.dedup();
    for &p in &primes {
        if defring::coeff::FieldDescriptor::prime_field(p).is_err() {
            return fail2(format!("p must be an odd prime, got {p}"));
        }
    }
    let cases = match args.case {
        CaseArg::Ramified => vec![DeformationCase::Ramified],
        CaseArg::Indecomposable => vec![DeformationCase::UnramifiedIndecomposable],
        CaseArg::Split => vec![DeformationCase::Split],
        CaseArg::All => DeformationCase::ALL.to_vec(),
    };
    let opts = RunOptions {
        cases,
        primes,
        corruption: if args.corrupt_i3_sign {
            Some(Corruption::FlipSignI3Middle)
        } else {
            None
        },
        jobs: args.jobs,
        timeout: args.timeout.map(Duration::from_secs),
        timings: args.timings,
    };
    let report = run_full_verification(&opts);
    for claim in &report.claims {
        println!("[{}] {}", claim.status, claim.claim_id);
        if claim.status == defring::defring::ClaimStatus::Failed {
            for (k, v) in &claim.witnesses {
                if k.starts_with("FAIL:") {
                    println!("    {k}: {v}");
                }
            }
        }
    }
    println!("verdict: {}", report.verdict);
    if let Some(path) = &args.report {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            return fail2(format!("{}: {e}", path.display()));
        }
    }
    if report.is_verified() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Gb(args) => cmd_gb(args),
        Command::Mult(args) => cmd_mult(args),
        Command::VerifyPaper(args) => cmd_verify(args),
    }
}
