//! `cremona`: command-line frontend for cremona-core.

mod commands;
mod model;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand};

use commands::{CorollaryArgs, Decider, Outcome};
use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Invalid(_) => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse(_) => "parse",
            CliError::Io(_) => "io",
            CliError::Invalid(_) => "invalid model",
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "cremona", version, about = "Real birational involutions of the plane: models, invariants, conjugacy")]
struct Cli {
    /// Print the report as one JSON document.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check a model file.
    Validate { file: PathBuf },
    /// Invariants of a model.
    Invariants { file: PathBuf },
    /// Class of an involution model.
    Classify { file: PathBuf },
    /// Normal form of a conic bundle.
    Normalize {
        file: PathBuf,
        #[arg(short = 'o', long = "out")]
        out: Option<PathBuf>,
    },
    /// Decide conjugacy of two involutions.
    Conjugate {
        file1: PathBuf,
        file2: PathBuf,
        /// Only allow conjugations over the identity of the base.
        #[arg(long)]
        fix_base: bool,
    },
    /// Equivalence of binary diagonal forms <A, B> and <C, D> over R(t).
    #[command(group(ArgGroup::new("decider").args(["criterion", "oracle", "both"])))]
    EquivForms {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
        #[arg(long)]
        criterion: bool,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        both: bool,
    },
    /// Real hyperelliptic curves x^2 = sign * f.
    Curve {
        #[command(subcommand)]
        op: CurveOp,
    },
    /// Parametrized families.
    Family {
        #[command(subcommand)]
        op: FamilyOp,
    },
}

#[derive(Subcommand, Debug)]
enum CurveOp {
    /// Real components. CURVE is a model file or `POLY deg=2n`.
    Components {
        curve: String,
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<String>,
    },
    /// Real isomorphism of two curves.
    Iso {
        curve1: String,
        curve2: String,
        #[arg(long, allow_hyphen_values = true)]
        sign1: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        sign2: Option<String>,
    },
    /// Whether some real linear map sends f to -f.
    Gaussian { curve: String },
}

#[derive(Subcommand, Debug)]
enum FamilyOp {
    /// Pairwise non-conjugate conic bundles with fixed curve y^2 = -f.
    Corollary {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, allow_hyphen_values = true)]
        eps: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cmd: &Cmd) -> Outcome {
    match cmd {
        Cmd::Validate { file } => commands::validate(file),
        Cmd::Invariants { file } => commands::invariants(file),
        Cmd::Classify { file } => commands::classify(file),
        Cmd::Normalize { file, out } => commands::normalize_cmd(file, out.as_deref()),
        Cmd::Conjugate { file1, file2, fix_base } => commands::conjugate(file1, file2, *fix_base),
        Cmd::EquivForms {
            left,
            right,
            criterion,
            oracle,
            ..
        } => {
            let mode = match (criterion, oracle) {
                (true, _) => Decider::Criterion,
                (_, true) => Decider::Oracle,
                _ => Decider::Both,
            };
            commands::equiv_forms(left, right, mode)
        }
        Cmd::Curve { op } => match op {
            CurveOp::Components { curve, sign } => commands::curve_components(curve, sign.as_deref()),
            CurveOp::Iso {
                curve1,
                curve2,
                sign1,
                sign2,
            } => commands::curve_iso(curve1, curve2, sign1.as_deref(), sign2.as_deref()),
            CurveOp::Gaussian { curve } => commands::curve_gaussian(curve),
        },
        Cmd::Family {
            op: FamilyOp::Corollary {
                r,
                s,
                eps,
                a,
                b,
                count,
                seed,
            },
        } => commands::family_corollary(&CorollaryArgs {
            r: *r,
            s: *s,
            eps,
            a,
            b,
            count: *count,
            seed: *seed,
        }),
    }
}

fn command_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Validate { .. } => "validate",
        Cmd::Invariants { .. } => "invariants",
        Cmd::Classify { .. } => "classify",
        Cmd::Normalize { .. } => "normalize",
        Cmd::Conjugate { .. } => "conjugate",
        Cmd::EquivForms { .. } => "equiv-forms",
        Cmd::Curve { op } => match op {
            CurveOp::Components { .. } => "curve components",
            CurveOp::Iso { .. } => "curve iso",
            CurveOp::Gaussian { .. } => "curve gaussian",
        },
        Cmd::Family { .. } => "family corollary",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let (report, code) = run(&cli.cmd).unwrap_or_else(|e| {
        let mut r = Report::new(command_name(&cli.cmd));
        r.set("error", e.kind()).set("message", e.to_string());
        (r, e.code())
    });
    print!("{}", report.render(cli.json));
    if std::env::var_os("CREMONA_VERBOSE").is_some() {
        eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    }
    ExitCode::from(code as u8)
}
