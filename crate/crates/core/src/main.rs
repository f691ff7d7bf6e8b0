use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use jordan_invariants::config::Config;
use jordan_invariants::dim::Group;
use jordan_invariants::error::Error;
use jordan_invariants::lie::{dump_json, lie_basis};
use jordan_invariants::report::CheckReport;
use jordan_invariants::suites::{self, RealizeRequest};
use jordan_invariants::CompAlgebra;

/// Exact checks for invariants of several copies of a cubic Jordan algebra.
#[derive(Parser, Debug)]
#[command(name = "jinv", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Algebra V0, V1, V2 or V3.
    #[arg(long, global = true)]
    algebra: Option<CompAlgebra>,
    /// Number of copies p.
    #[arg(long, global = true)]
    copies: Option<usize>,
    /// Polynomial degree.
    #[arg(long, global = true)]
    degree: Option<usize>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Height of random rational coordinates.
    #[arg(long, global = true)]
    height: Option<u64>,
    /// Monomial cap for dimension computations.
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Residual tolerance for realizations.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Random points per check.
    #[arg(long, global = true)]
    points: Option<usize>,
    /// Suite to run (repeatable).
    #[arg(long = "suite", global = true)]
    suites: Vec<String>,
    /// Write the JSON result to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// key=value config file; flags win.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Print a table instead of JSON on stdout.
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites.
    Verify,
    /// Dimension computations.
    Dim {
        #[command(subcommand)]
        cmd: DimCmd,
    },
    /// Invariant evaluation.
    Inv {
        #[command(subcommand)]
        cmd: InvCmd,
    },
    /// Numeric constructions with prescribed invariants.
    Realize {
        #[command(subcommand)]
        cmd: RealizeCmd,
    },
    /// Lie algebra utilities.
    Lie {
        #[command(subcommand)]
        cmd: LieCmd,
    },
}

#[derive(Subcommand, Debug)]
enum DimCmd {
    /// Dimension of degree-d invariants of p copies.
    Invariants {
        /// G (full group) or Go (identity component).
        #[arg(long, default_value = "G")]
        group: Group,
    },
    /// Rank of degree-d products of the generators at random points.
    ProductRank,
}

#[derive(Subcommand, Debug)]
enum InvCmd {
    /// Evaluate a named set at a tuple read from a JSON file.
    Eval {
        file: PathBuf,
        /// One of det, p2, p3, chi, f11-tilde, P, alt5.
        #[arg(long, default_value = "p3")]
        set: String,
    },
}

#[derive(Subcommand, Debug)]
enum RealizeCmd {
    /// χ = a³ + b³ + c³ + λabc; with --mu, also f̃11 = μ in V1.
    Fermat {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<f64>,
    },
    /// χ = a³ + b³ + c³ + λabc and f̃11 = μ in V1.
    Mu {
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, allow_hyphen_values = true)]
        mu: f64,
    },
    /// Binary cubic from coefficients of a³, a²b, ab², b³.
    Binary {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        coeffs: Vec<f64>,
    },
}

#[derive(Subcommand, Debug)]
enum LieCmd {
    /// JSON dump of the Lie algebra basis.
    Dump,
}

fn build_config(c: &Common) -> Result<Config, Error> {
    let mut cfg = match &c.config {
        Some(path) => Config::from_file(path)?,
        None => Config::default(),
    };
    if let Some(v) = c.seed {
        cfg.seed = v;
    }
    if let Some(v) = c.height {
        cfg.height = v;
    }
    if let Some(v) = c.cap {
        cfg.monomial_cap = v;
    }
    if let Some(v) = c.tolerance {
        cfg.tolerance = v;
    }
    if let Some(v) = c.points {
        cfg.points = v;
    }
    if c.algebra.is_some() {
        cfg.algebra = c.algebra;
    }
    if c.copies.is_some() {
        cfg.copies = c.copies;
    }
    if !c.suites.is_empty() {
        cfg.suites = c.suites.clone();
    }
    Ok(cfg)
}

fn emit(c: &Common, json: &str, table: Option<String>) -> Result<(), Error> {
    if let Some(path) = &c.out {
        std::fs::write(path, format!("{json}\n")).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    }
    let text = match (c.table, table) {
        (true, Some(t)) => t,
        _ => format!("{json}\n"),
    };
    // a closed pipe downstream is not an error of the run
    let _ = std::io::stdout().write_all(text.as_bytes());
    Ok(())
}

fn emit_report(c: &Common, rep: &CheckReport) -> Result<i32, Error> {
    emit(c, &rep.to_json(), Some(rep.table()))?;
    Ok(rep.exit_code())
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Schema(_)
        | Error::UnknownSuite(_)
        | Error::ModelMismatch(_)
        | Error::WrongAlgebra { .. } => 2,
        _ => 1,
    }
}

fn run(cli: &Cli) -> Result<i32, Error> {
    let c = &cli.common;
    let cfg = build_config(c)?;
    let alg = cfg.algebra.unwrap_or(CompAlgebra::R);
    let copies = cfg.copies.unwrap_or(3);
    match &cli.cmd {
        Command::Verify => emit_report(c, &suites::cmd_verify(&cfg)?),
        Command::Dim {
            cmd: DimCmd::Invariants { group },
        } => {
            let degree = c.degree.unwrap_or(3);
            emit_report(c, &suites::cmd_dims(&cfg, alg, copies, degree, *group))
        }
        Command::Dim {
            cmd: DimCmd::ProductRank,
        } => {
            let degree = c.degree.unwrap_or(6);
            let points = c.points.unwrap_or(60);
            emit_report(c, &suites::cmd_product_rank(&cfg, alg, copies, degree, points)?)
        }
        Command::Inv {
            cmd: InvCmd::Eval { file, set },
        } => {
            let text = std::fs::read_to_string(file).map_err(|e| Error::Parse(format!("{}: {e}", file.display())))?;
            let tuple = suites::parse_tuple(&text)?;
            let v = suites::cmd_eval(&tuple, set)?;
            emit(c, &serde_json::to_string_pretty(&v).expect("value serializes"), None)?;
            Ok(0)
        }
        Command::Realize { cmd } => {
            let req = match cmd {
                RealizeCmd::Fermat { lambda, mu: None } => RealizeRequest::Fermat {
                    lambda: *lambda,
                    algebra: alg,
                },
                RealizeCmd::Fermat { lambda, mu: Some(mu) } | RealizeCmd::Mu { lambda, mu } => {
                    if cfg.algebra.is_some_and(|a| a != CompAlgebra::C) {
                        return Err(Error::ModelMismatch(
                            "a prescribed f̃11 needs the V1 matrix model".into(),
                        ));
                    }
                    RealizeRequest::Mu {
                        lambda: *lambda,
                        mu: *mu,
                    }
                }
                RealizeCmd::Binary { coeffs } => {
                    if coeffs.len() != 4 {
                        return Err(Error::Parse(format!("--coeffs needs 4 values, got {}", coeffs.len())));
                    }
                    RealizeRequest::Binary {
                        coeffs: [coeffs[0], coeffs[1], coeffs[2], coeffs[3]],
                        algebra: alg,
                    }
                }
            };
            let res = suites::cmd_realize(&req, cfg.tolerance)?;
            emit(c, &serde_json::to_string_pretty(&res).expect("result serializes"), None)?;
            Ok(0)
        }
        Command::Lie { cmd: LieCmd::Dump } => {
            let v = dump_json(&lie_basis(alg));
            emit(c, &serde_json::to_string_pretty(&v).expect("value serializes"), None)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}
