//! Command-line surface: graph generation, products, spectral expansion,
//! bound evaluation, and the seeded experiments as CSV.
//!
//! Exit codes: 0 on success, 1 on validation errors (bad parameters,
//! dimension mismatches, out-of-domain arguments), 2 on IO and parse
//! errors. `EXPANDER_FORGE_TOL` overrides the inequality slack used by the
//! degeneracy diagnostic.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use expander_core::error::Error;
use expander_core::experiment::{
    run_reduced_power, run_zigzag, write_reduced_power_csv, write_zigzag_csv, Case,
    ExperimentParams,
};
use expander_core::io::{read_rot, write_rot};
use expander_core::products;
use expander_core::randgen::{config_model, random_labelling, SeededRng};
use expander_core::spectral::{bound_f, bound_f_prime, lambda_report, transition_matrix};
use expander_core::Tolerances;

#[derive(Parser)]
#[command(
    name = "expander-forge",
    version,
    about = "Zig-zag products of regular digraphs and their spectral expansion"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a random m-regular digraph on [n] with a random two-way
    /// labelling and write it as a .rot file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Zig-zag product of G with (H1, H2).
    Zigzag {
        g: PathBuf,
        h1: PathBuf,
        h2: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Reduced zig-zag product of G with H.
    Rzigzag {
        g: PathBuf,
        h: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// t-th power of G (explicit rotation map; size-capped).
    Power {
        g: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Spectral expansion of a graph, printed at 7 decimals.
    Lambda { g: PathBuf },
    /// Evaluate the zig-zag bound f(alpha, beta1, beta2).
    Bound { alpha: f64, beta1: f64, beta2: f64 },
    /// Evaluate the reduced-power bound f'(alpha, beta)^(k-1).
    BoundPrime {
        alpha: f64,
        beta: f64,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Seeded experiments over random labellings, emitted as CSV.
    Experiment {
        #[command(subcommand)]
        kind: ExperimentCmd,
    },
}

#[derive(Subcommand)]
enum ExperimentCmd {
    /// Expansion of G z (H, H) over random labellings of G, with the bound f.
    Zigzag {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        /// Preset dimensions: i = 50/40/30, ii = 30/20/10, iii = 10/5/3.
        #[arg(long)]
        case: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// CSV output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Expansion of (G z' H)^k for k = 1..k-max, with the bound f'^(k-1).
    ReducedPower {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        case: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long = "k-max", default_value_t = 10)]
        k_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) | Error::Parse { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Error> {
    let tols = Tolerances::from_env()?;
    match cmd {
        Cmd::Gen { n, m, seed, out } => {
            if n == 0 || m == 0 {
                return Err(Error::InvalidArgument("gen needs n >= 1 and m >= 1".into()));
            }
            // One stream, consumed sequentially: multiset first, then labels.
            let mut rng = SeededRng::new(seed, 0);
            let edges = config_model(n, m, &mut rng);
            let g = random_labelling(&edges, m, &mut rng)?;
            write_rot(&g, out)
        }
        Cmd::Zigzag { g, h1, h2, out } => {
            let g = read_rot(g)?;
            let h1 = read_rot(h1)?;
            let h2 = read_rot(h2)?;
            write_rot(&products::zigzag(&g, &h1, &h2)?, out)
        }
        Cmd::Rzigzag { g, h, out } => {
            let g = read_rot(g)?;
            let h = read_rot(h)?;
            write_rot(&products::reduced_zigzag(&g, &h)?, out)
        }
        Cmd::Power { g, t, out } => {
            let g = read_rot(g)?;
            write_rot(
                &products::power_with_cap(&g, t, tols.explicit_power_cap)?,
                out,
            )
        }
        Cmd::Lambda { g } => {
            let g = read_rot(g)?;
            let report = lambda_report(&transition_matrix::<f64>(&g), &tols)?;
            println!("{:.7}", report.lambda);
            if report.disconnected_or_periodic {
                eprintln!("note: top singular value is degenerate; disconnected_or_periodic=maybe");
            }
            Ok(())
        }
        Cmd::Bound {
            alpha,
            beta1,
            beta2,
        } => {
            println!("{:.7}", bound_f(alpha, beta1, beta2)?);
            Ok(())
        }
        Cmd::BoundPrime { alpha, beta, k } => {
            if k == 0 {
                return Err(Error::InvalidArgument("k must be >= 1".into()));
            }
            let fp = bound_f_prime(alpha, beta)?;
            println!("{:.7}", fp.powi(k as i32 - 1));
            Ok(())
        }
        Cmd::Experiment { kind } => match kind {
            ExperimentCmd::Zigzag {
                n,
                m,
                d,
                case,
                trials,
                seed,
                out,
            } => {
                let params = resolve_params(n, m, d, case, trials, seed)?;
                let report = run_zigzag(&params, &tols)?;
                let mut buf = Vec::new();
                write_zigzag_csv(&report, &mut buf)?;
                emit(out, &buf)
            }
            ExperimentCmd::ReducedPower {
                n,
                m,
                d,
                case,
                trials,
                k_max,
                seed,
                out,
            } => {
                let params = resolve_params(n, m, d, case, trials, seed)?;
                let reports = run_reduced_power(&params, k_max, &tols)?;
                let mut buf = Vec::new();
                write_reduced_power_csv(&reports, &mut buf)?;
                emit(out, &buf)
            }
        },
    }
}

fn resolve_params(
    n: Option<usize>,
    m: Option<usize>,
    d: Option<usize>,
    case: Option<String>,
    trials: usize,
    seed: u64,
) -> Result<ExperimentParams, Error> {
    let (n, m, d) = match (case, n, m, d) {
        (Some(c), None, None, None) => Case::parse(&c)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown case {c:?}; use i, ii or iii")))?
            .dims(),
        (None, Some(n), Some(m), Some(d)) => (n, m, d),
        _ => {
            return Err(Error::InvalidArgument(
                "give either --case or all of --n --m --d".into(),
            ))
        }
    };
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be >= 1".into()));
    }
    Ok(ExperimentParams {
        n,
        m,
        d,
        trials,
        master_seed: seed,
    })
}

fn emit(out: Option<PathBuf>, bytes: &[u8]) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(Error::from),
        None => std::io::stdout().write_all(bytes).map_err(Error::from),
    }
}
