//! `polar-jacobi`: coefficients, evaluations, zeros, verification suites and
//! reference figure data for polar Jacobi polynomials.
//!
//! Exit codes: 0 success, 1 argument/parse errors and unknown figure ids,
//! 2 parameter-domain errors (degenerate denominators, gamma poles, regime
//! and capacity violations), 3 root-finder non-convergence, 4 verification
//! suite failure. Every error path prints one line starting with `error:`.

mod commands;
mod cpx;

use clap::{Args, Parser, Subcommand};
use commands::{Format, SpecArgs};
use polar_jacobi_core::error::Error;
use polar_jacobi_core::Complex64;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

fn parse_complex(s: &str) -> Result<Complex64, String> {
    cpx::parse_c64(s)
}

#[derive(Parser)]
#[command(
    name = "polar-jacobi",
    version,
    about = "Polar Jacobi polynomials: coefficients, zeros, verification suites and figure data",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct CommonArgs {
    /// Weight exponent alpha, as RE or RE+IMi / RE-IMi (no spaces)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    alpha: Complex64,
    /// Weight exponent beta, same grammar
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    beta: Complex64,
    /// Polynomial degree (at most 200)
    #[arg(long)]
    n: usize,
    /// Numerical tolerance handed to the root finder
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Output format
    #[arg(long, default_value = "json", value_parser = ["json", "csv"])]
    format: String,
    /// Output path (stdout when absent)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Coefficients of P_n(z; alpha, beta; xi), cross-checked across both
    /// constructions
    Coeffs {
        #[command(flatten)]
        common: CommonArgs,
        /// The pole xi
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        xi: Complex64,
    },
    /// Evaluate P_n(z; alpha, beta; xi) at a point
    Eval {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        xi: Complex64,
        /// Evaluation point, same grammar as the parameters
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        at: Complex64,
    },
    /// Zeros with the zero-location report, for one pole or a pole sweep
    Roots {
        #[command(flatten)]
        common: CommonArgs,
        /// The pole xi (exclusive with the sweep flags)
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true,
              conflicts_with_all = ["sweep_count", "sweep_radius"])]
        xi: Option<Complex64>,
        /// Number of pole samples on the sweep circle
        #[arg(long, requires = "sweep_radius")]
        sweep_count: Option<usize>,
        /// Radius of the sweep circle
        #[arg(long, requires = "sweep_count")]
        sweep_radius: Option<f64>,
    },
    /// Run every verification suite and report per-suite residuals
    Verify {
        /// Optional parameter override for the zero-geometry suites
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        alpha: Option<Complex64>,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        beta: Option<Complex64>,
        /// Scales every suite threshold by tol / 1e-10
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the zero data behind a reference figure as CSV (ids: 1L, 1R, 3L, 3R)
    Figure {
        id: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_out(path: &Option<PathBuf>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::NoConvergence { .. } => 3,
        _ => 2,
    }
}

fn run() -> Result<(), (u8, String)> {
    let cli = Cli::try_parse().map_err(|e| {
        use clap::error::ErrorKind;
        if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
            print!("{e}");
            (0, String::new())
        } else {
            let first = e.to_string().lines().next().unwrap_or("bad arguments").to_string();
            (1, first.trim_start_matches("error: ").to_string())
        }
    })?;

    let fmt_of = |s: &str| if s == "csv" { Format::Csv } else { Format::Json };

    match cli.cmd {
        Cmd::Coeffs { common, xi } => {
            let args = SpecArgs {
                alpha: common.alpha,
                beta: common.beta,
                xi,
                n: common.n,
                tol: common.tol,
            };
            let body = commands::cmd_coeffs(&args, fmt_of(&common.format))
                .map_err(|e| (exit_code_for(&e), e.to_string()))?;
            write_out(&common.out, &body).map_err(|e| (1, e.to_string()))?;
        }
        Cmd::Eval { common, xi, at } => {
            let args = SpecArgs {
                alpha: common.alpha,
                beta: common.beta,
                xi,
                n: common.n,
                tol: common.tol,
            };
            let body =
                commands::cmd_eval(&args, at).map_err(|e| (exit_code_for(&e), e.to_string()))?;
            write_out(&common.out, &body).map_err(|e| (1, e.to_string()))?;
        }
        Cmd::Roots {
            common,
            xi,
            sweep_count,
            sweep_radius,
        } => {
            let sweep = match (sweep_count, sweep_radius) {
                (Some(c), Some(r)) => Some((c, r)),
                _ => None,
            };
            let xi = match (xi, sweep) {
                (Some(x), _) => x,
                (None, Some(_)) => Complex64::ZERO, // unused under a sweep
                (None, None) => {
                    return Err((1, "roots needs --xi or --sweep-count/--sweep-radius".into()))
                }
            };
            let args = SpecArgs {
                alpha: common.alpha,
                beta: common.beta,
                xi,
                n: common.n,
                tol: common.tol,
            };
            let body = commands::cmd_roots(&args, sweep, fmt_of(&common.format))
                .map_err(|e| (exit_code_for(&e), e.to_string()))?;
            write_out(&common.out, &body).map_err(|e| (1, e.to_string()))?;
        }
        Cmd::Verify {
            alpha,
            beta,
            tol,
            out,
        } => {
            let (body, all_pass) = commands::cmd_verify(alpha, beta, tol)
                .map_err(|e| (exit_code_for(&e), e.to_string()))?;
            write_out(&out, &body).map_err(|e| (1, e.to_string()))?;
            if !all_pass {
                return Err((4, "one or more verification suites failed".into()));
            }
        }
        Cmd::Figure { id, tol, out } => {
            let body = commands::cmd_figure(&id, tol)
                .map_err(|e| (exit_code_for(&e), e.to_string()))?
                .ok_or_else(|| (1, format!("unknown figure id `{id}` (use 1L, 1R, 3L, 3R)")))?;
            write_out(&out, &body).map_err(|e| (1, e.to_string()))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err((0, _)) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
