use std::io::Write;
use std::process::ExitCode;

use acs_core::report::{
    combined_exit_code, emit, run_catalog, run_clifford, run_constants, run_focal, run_grassmannian,
    run_isoparametric, run_sp, run_su, AcsCertificate, Format, GridCheck, DEFAULT_SAMPLES,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit code for usage errors and failed runs.
const USAGE_ERROR: u8 = 1;

#[derive(Parser, Debug)]
#[command(name = "acs-cert", version, about = "Certify the sign of the ACS quantity and report index-bound constants")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GroupKind {
    Su,
    Sp,
}

#[derive(Args, Debug)]
struct Sampling {
    /// Number of constrained random pairs.
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// Seed; sample i uses stream i of this seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal isoparametric hypersurface with multiplicities (m1, m2, m1, m2).
    Isoparametric {
        #[arg(long)]
        m1: usize,
        #[arg(long)]
        m2: usize,
        /// Examine the focal manifold obtained by collapsing the m1 distribution.
        #[arg(long)]
        focal: bool,
        /// Cross-check the QP maximum against a grid search.
        #[arg(long)]
        oracle: bool,
        /// Grid step for --oracle; must divide 1.
        #[arg(long, requires = "oracle")]
        grid_step: Option<f64>,
    },
    /// SU(n) or Sp(n) in its matrix space.
    Group {
        #[arg(long, value_enum)]
        kind: GroupKind,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Grassmannian of quaternionic d-planes in H^n.
    Grassmannian {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Example families on both leaves; one certificate per line.
    Catalog {
        /// real:K, complex:K, quaternionic:K, e6 or fkm:M:K.
        #[arg(long)]
        family: Option<String>,
    },
    /// Clifford system and FKM focal manifold for (m, k).
    Clifford {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
    },
    /// Index-bound constants for ambient dimension D.
    Constants {
        #[arg(long)]
        dim: u64,
    },
}

const DEFAULT_GRID_STEP: f64 = 0.01;

fn run(command: Command) -> acs_core::Result<Vec<AcsCertificate>> {
    Ok(match command {
        Command::Isoparametric {
            m1,
            m2,
            focal,
            oracle,
            grid_step,
        } => {
            if focal {
                vec![run_focal(m1, m2)?]
            } else {
                let grid = oracle.then(|| GridCheck {
                    step: grid_step.unwrap_or(DEFAULT_GRID_STEP),
                });
                vec![run_isoparametric(m1, m2, grid)?]
            }
        }
        Command::Group { kind, n, sampling } => vec![match kind {
            GroupKind::Su => run_su(n, sampling.samples, sampling.seed)?,
            GroupKind::Sp => run_sp(n, sampling.samples, sampling.seed)?,
        }],
        Command::Grassmannian { d, n, sampling } => {
            vec![run_grassmannian(d, n, sampling.samples, sampling.seed)?]
        }
        Command::Catalog { family } => run_catalog(family.as_deref())?,
        Command::Clifford { m, k } => vec![run_clifford(m, k)?],
        Command::Constants { dim } => vec![run_constants(dim)?],
    })
}

fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("ACS_CERT_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| format!("ACS_CERT_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(USAGE_ERROR);
    }
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    match run(cli.command) {
        Ok(certs) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(emit(&certs, format).as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(USAGE_ERROR);
            }
            ExitCode::from(combined_exit_code(&certs) as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_ERROR)
        }
    }
}
