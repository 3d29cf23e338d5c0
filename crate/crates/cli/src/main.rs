//! Command-line surface for the tameness certificate toolkit.
//!
//! Exit codes: 0 when the requested certificate or verification succeeds,
//! 1 when it runs but does not certify (or a verification fails), 2 on
//! input errors.

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use tamecert_core::certify::{certify_diagonal, certify_pair, verify_bn_suite, CertificateReport};
use tamecert_core::liealg::{ChevalleyAlgebra, RootSystem};
use tamecert_core::strata::{SymmetricPairDescriptor, DEFAULT_RANK_CAP};
use tamecert_core::weyl::WeylElement;

#[derive(Parser)]
#[command(
    name = "tamecert",
    version,
    about = "Exact certificates for root bounds of invariant differential systems on semisimple Lie algebras and symmetric pairs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certificate report for the adjoint case of a semisimple algebra.
    Report {
        /// Type string (A1, A2, ..., B2, G2, products like A1xA1) or a path
        /// to a JSON file holding an integer Cartan matrix.
        #[arg(long)]
        algebra: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cap on the rank for brute-force class enumeration.
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        rank_cap: usize,
    },
    /// Certificate report for a symmetric pair descriptor.
    PairReport {
        /// Path to the descriptor JSON.
        #[arg(long)]
        descriptor: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
        rank_cap: usize,
    },
    /// Exhaustively verify the quasi-b-function membership certificates.
    VerifyBn {
        #[arg(long, default_value_t = 3)]
        max_d: u32,
        #[arg(long, default_value_t = 3)]
        max_weight: u32,
        #[arg(long, default_value_t = 5)]
        max_n: u32,
    },
    /// Print the algebraic Fourier transform of a differential operator.
    Fourier {
        /// Operator text, e.g. "t1*Dt1 + 2*t2^2*Dt1".
        #[arg(long)]
        expr: String,
        /// Number of coordinates t1..t<dim>.
        #[arg(long)]
        dim: usize,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_NOT_CERTIFIED: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Report {
            algebra,
            out,
            rank_cap,
        } => run_report(&algebra, out.as_deref(), rank_cap),
        Command::PairReport {
            descriptor,
            out,
            rank_cap,
        } => run_pair_report(&descriptor, out.as_deref(), rank_cap),
        Command::VerifyBn {
            max_d,
            max_weight,
            max_n,
        } => run_verify_bn(max_d, max_weight, max_n),
        Command::Fourier { expr, dim } => run_fourier(&expr, dim),
    };
    ExitCode::from(code)
}

fn emit_report(report: &CertificateReport, out: Option<&std::path::Path>) -> u8 {
    let body = report.to_json_string();
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => print!("{body}"),
    }
    if report.certified() {
        EXIT_OK
    } else {
        EXIT_NOT_CERTIFIED
    }
}

fn load_algebra(spec: &str) -> Result<(ChevalleyAlgebra, String), String> {
    if spec.ends_with(".json") {
        let raw = std::fs::read_to_string(spec).map_err(|e| format!("cannot read {spec}: {e}"))?;
        let cartan: Vec<Vec<i64>> =
            serde_json::from_str(&raw).map_err(|e| format!("bad Cartan matrix JSON: {e}"))?;
        let rs = RootSystem::from_cartan(cartan).map_err(|e| e.to_string())?;
        let alg = ChevalleyAlgebra::new(rs).map_err(|e| e.to_string())?;
        let subject = std::path::Path::new(spec)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| spec.to_string());
        Ok((alg, subject))
    } else {
        let alg = ChevalleyAlgebra::from_type(spec).map_err(|e| e.to_string())?;
        Ok((alg, spec.to_string()))
    }
}

fn run_report(algebra: &str, out: Option<&std::path::Path>, rank_cap: usize) -> u8 {
    let (alg, subject) = match load_algebra(algebra) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    match certify_diagonal(&alg, &subject, rank_cap) {
        Ok(report) => emit_report(&report, out),
        Err(e) => {
            eprintln!("error: {e}");
            // Enumeration caps and unsupported factor types are input-side
            // limitations, not certification failures.
            EXIT_INPUT
        }
    }
}

fn run_pair_report(descriptor: &std::path::Path, out: Option<&std::path::Path>, rank_cap: usize) -> u8 {
    let raw = match std::fs::read_to_string(descriptor) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", descriptor.display());
            return EXIT_INPUT;
        }
    };
    let value: serde_json::Value = match serde_json::from_str(&raw) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: descriptor is not valid JSON: {e}");
            return EXIT_INPUT;
        }
    };
    let pair = match SymmetricPairDescriptor::from_json(&value) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT;
        }
    };
    match certify_pair(&pair, rank_cap) {
        Ok(report) => emit_report(&report, out),
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn run_verify_bn(max_d: u32, max_weight: u32, max_n: u32) -> u8 {
    let summary = verify_bn_suite(max_d, max_weight, max_n);
    println!(
        "verified {} membership certificates (d <= {max_d}, weights <= {max_weight}, N <= {max_n})",
        summary.cases
    );
    if summary.passed() {
        println!("failures: 0");
        EXIT_OK
    } else {
        println!("failures: {}", summary.failures.len());
        for f in &summary.failures {
            println!("  {f}");
        }
        EXIT_NOT_CERTIFIED
    }
}

fn run_fourier(expr: &str, dim: usize) -> u8 {
    if dim == 0 {
        eprintln!("error: dim must be at least 1");
        return EXIT_INPUT;
    }
    match WeylElement::parse(expr, dim, 0) {
        Ok(op) => {
            println!("{}", op.fourier().to_text(0));
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}
