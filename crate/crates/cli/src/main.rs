use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod config;
mod output;

use config::{Format, RunConfig};

/// Exact Schur and characteristic-class computations with Hodge-Riemann,
/// log-concavity, Pólya and Lorentzian verifiers.
///
/// Exit status: 0 when every check passes, 1 for usage or configuration
/// errors, 2 when a check is violated.
#[derive(Debug, Parser)]
#[command(name = "hrschur", version)]
pub struct Cli {
    /// JSON run configuration with a space, named bundles and partitions.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Report encoding. CSV is available for sequences and record lists.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// A split bundle given by name from the config, or inline.
#[derive(Debug, Clone, Args)]
pub struct BundleArgs {
    /// Name of a bundle in the config file.
    #[arg(long)]
    bundle: Option<String>,

    /// Factor dimensions of the space, e.g. `2,3`; overrides the config.
    #[arg(long, value_delimiter = ',')]
    factors: Option<Vec<u32>>,

    /// Line multidegrees separated by `;`, e.g. `1,0;1,0;0,1`.
    #[arg(long, allow_hyphen_values = true)]
    lines: Option<String>,

    /// Twist coefficients, e.g. `0,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    twist: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// Monomials in `x1 … xe`.
    Monomial,
    /// Polynomial in the elementary symmetric polynomials `c1 … ce`.
    Chern,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Strict,
    Perturbed,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schur or derived Schur polynomial.
    Schur {
        #[arg(long)]
        lambda: String,
        /// Number of variables.
        #[arg(long)]
        vars: usize,
        /// Coefficient of `t^i` in `s_λ(x + t)`.
        #[arg(long)]
        derived: Option<i64>,
        #[arg(long, value_enum, default_value = "monomial")]
        basis: Basis,
    },
    /// Chern classes of a split bundle.
    Chern {
        #[command(flatten)]
        bundle: BundleArgs,
    },
    /// Schur or derived Schur class of a split bundle.
    Class {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 0)]
        derived: i64,
    },
    /// Intersection form, inertia and Hodge-Riemann verdicts.
    Form {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 0)]
        derived: i64,
        /// Use `(1−t)c₃(E) + t·s_(1,1,1)(E)` for `E = O(1,0)² ⊕ O(0,1)` on
        /// `P² × P³`.
        #[arg(long)]
        two_factor_example: bool,
        /// Mixing parameter for `--two-factor-example`.
        #[arg(long, default_value = "1/4")]
        t: String,
    },
    /// Forms of `s_λ^{(i)}(E⟨t h⟩)` over a range of `t`.
    HrScan {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value_t = 0)]
        derived: i64,
        /// Coefficients of `h`; defaults to the sum of hyperplane classes.
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<String>>,
        /// Values of `t`; defaults to `0, 1/10, …, 1`.
        #[arg(long, value_delimiter = ',')]
        ts: Option<Vec<String>>,
    },
    /// Sequence `i ↦ ∫ s_λ^{(|λ|+|μ|−d−i)}(E) s_μ^{(i)}(F)` and its
    /// log-concavity.
    Kt {
        /// Config name of `E`.
        #[arg(long)]
        e: Option<String>,
        /// Config name of `F`.
        #[arg(long)]
        f: Option<String>,
        #[arg(long, value_delimiter = ',')]
        factors: Option<Vec<u32>>,
        #[arg(long)]
        e_lines: Option<String>,
        #[arg(long)]
        e_twist: Option<String>,
        #[arg(long)]
        f_lines: Option<String>,
        #[arg(long)]
        f_twist: Option<String>,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
    },
    /// Derived Schur values `i ↦ s_λ^{(i)}(x)`, or with `--mu` the pair
    /// sequence `i ↦ s_λ^{(|λ|+|μ|−d+i)}(x) s_μ^{(i)}(y)`.
    Seq {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_delimiter = ',')]
        x: Vec<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, value_delimiter = ',')]
        y: Option<Vec<String>>,
        #[arg(long)]
        d: Option<i64>,
    },
    /// Pólya frequency tests and, with `--lambda`, the combination class.
    Polya {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mus: Vec<String>,
        /// Largest minor order examined by the minor test.
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<String>>,
    },
    /// Strict or perturbed Lorentzian certification.
    Lorentzian {
        /// Test `N(s_λ)`.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        vars: Option<usize>,
        /// Polynomial as JSON terms `[{"exponents": [..], "coeff": "a/b"}]`.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, value_enum, default_value = "perturbed")]
        mode: Mode,
        #[arg(long, default_value = "1/100")]
        eps: String,
    },
    /// Hessian identities behind the Lorentzian property.
    Bridge {
        #[command(subcommand)]
        which: BridgeCommand,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, env = "HRSCHUR_SEED")]
        seed: Option<u64>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long, env = "HRSCHUR_WORKERS")]
        workers: Option<usize>,
        /// Only the two-factor example and the low-degree identity tables.
        #[arg(long)]
        examples: bool,
        /// Criteria to run, e.g. `1,4,7`.
        #[arg(long, value_delimiter = ',')]
        criteria: Option<Vec<u32>>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BridgeCommand {
    /// Hessian of `∂^α N(p)` against coefficients of the box reversal.
    Reversal {
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long)]
        vars: Option<usize>,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<u32>,
        /// Box side; defaults to the largest per-variable degree.
        #[arg(long)]
        e_prime: Option<u32>,
    },
    /// Hessian of `∂^α N(p_ε)` against the form of `s_λ̄(E′)`.
    Hessian {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        vars: usize,
        /// Box height `N`.
        #[arg(long = "box")]
        box_size: usize,
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<u32>,
        #[arg(long, default_value = "1/100")]
        eps: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Returns whether every check passed.
fn run(cli: Cli) -> anyhow::Result<bool> {
    let cfg = match &cli.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    };
    let format = cli.format.or(cfg.format).unwrap_or(Format::Json);
    let dest = cli
        .output
        .clone()
        .or_else(|| cfg.output.as_ref().map(PathBuf::from));
    let outcome = commands::dispatch(&cli.command, &cfg)?;
    output::emit(&outcome, format, dest.as_deref())?;
    Ok(!outcome.violation)
}
