//! `abcat <spec.toml> <subcommand>`: exact computations over a finite
//! dimensional algebra read from a spec file.
//!
//! Exit status: 0 pass, 1 fail, 2 input error, 3 inconclusive.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use abcat::io::{AlgebraSpecFile, FieldKind, Report};
use abcat::linalg::{Field, Fp, Q};
use abcat::singeq::Verdict;
use abcat::Error;
use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "abcat", version, about = "Exact homological algebra for finite dimensional algebras")]
pub struct Cli {
    /// Algebra spec file (TOML).
    pub spec: PathBuf,
    #[command(subcommand)]
    pub command: Command,
    /// Override the field named in the spec: `Q` or `Fp:<p>`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Maximum resolution length before a dimension is reported unknown.
    #[arg(long, global = true, default_value_t = 60)]
    pub cutoff: usize,
    /// Worker threads for independent resolutions (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Also write the structured report to this path (`-` for stdout only).
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
}

/// A category of modules: `mod Λ`, `mod Λ / [by]`, or `⊥T / [T]`.
#[derive(Debug, Clone, Args, Default)]
pub struct CategoryArgs {
    /// Quotient `mod Λ` by maps factoring through these labels.
    #[arg(long, value_name = "LABELS", conflicts_with = "perp")]
    pub by: Option<String>,
    /// Use `⊥T / [T]` for the comma-separated labels of `T`.
    #[arg(long, value_name = "LABELS")]
    pub perp: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Indecomposable modules with dimension vectors, pd and id.
    Indec,
    /// Hom dimensions between all objects of a category.
    Hom {
        #[command(flatten)]
        cat: CategoryArgs,
    },
    /// `dim Ext^k` between all indecomposables.
    Ext {
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Auslander-Reiten quiver (or the quiver of a quotient category).
    ArQuiver {
        /// Write Graphviz DOT to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        cat: CategoryArgs,
    },
    /// Check that `add T` is cotilting.
    Cotilting {
        #[arg(long = "T", value_name = "LABELS")]
        t: String,
    },
    /// The left perpendicular category `⊥T`.
    Perp {
        #[arg(long = "T", value_name = "LABELS")]
        t: String,
    },
    /// Summary of a quotient category: objects, Hom dimensions, gd, Gorenstein verdict.
    Quotient {
        #[command(flatten)]
        cat: CategoryArgs,
    },
    /// Minimal projective resolution of a functor module.
    Resolve {
        /// `rep:X`, `simple:X`, `injective:X`, `ext1:M` or `restricted:M`.
        #[arg(long)]
        functor: String,
        /// Compute exactly this many terms without recurrence detection.
        #[arg(long)]
        prefix: Option<usize>,
        #[command(flatten)]
        cat: CategoryArgs,
    },
    /// The conditions AB1-AB3 for `mod Λ ⊇ X ⊇ ω`.
    CheckAb {
        #[arg(long = "X", value_name = "LABELS")]
        x: String,
        #[arg(long, value_name = "LABELS")]
        omega: String,
    },
    /// Full cotilting pipeline certifying the hypotheses of a singular equivalence.
    Singeq {
        #[arg(long = "T", value_name = "LABELS")]
        t: String,
    },
    /// Dimension bounds for `⊥T/[T]`, or for the stable category with `--stable`.
    Bounds {
        #[arg(long = "T", value_name = "LABELS", required_unless_present = "stable")]
        t: Option<String>,
        #[arg(long, conflicts_with = "t")]
        stable: bool,
    },
    /// Ext^1 against stable and costable Hom for every ordered pair.
    ArDuality,
    /// Injective functors over `⊥T/[proj]` matched with `Ext^1(-, M)`.
    InjectivesAsExt {
        #[arg(long = "T", value_name = "LABELS")]
        t: String,
    },
    /// Report on the two-vertex family `[2n+1, 2n+2]` with `T = [1]_1 ⊕ [1]_{2n+2}`.
    FamilyReport {
        /// Family parameter; defaults to the one read off the spec.
        #[arg(long)]
        n: Option<usize>,
    },
}

/// What a subcommand produced.
pub struct Outcome {
    pub command: &'static str,
    pub text: String,
    pub payload: serde_json::Value,
    pub verdict: Option<Verdict>,
}

fn exit_code_of(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Validation(_) | Error::Unsupported(_) => 2,
        _ => 1,
    }
}

fn run_in<F: Field>(cli: &Cli, spec: &AlgebraSpecFile) -> Result<Outcome, Error> {
    let algebra = spec.build::<F>()?;
    commands::dispatch(cli, &algebra)
}

fn run(cli: &Cli) -> Result<(Outcome, FieldKind), Error> {
    let mut spec = AlgebraSpecFile::read(&cli.spec)?;
    if let Some(f) = &cli.field {
        spec.field = f.parse()?;
    }
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Error::Input("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| Error::Internal(e.to_string()))?;
    }
    spec.field.activate()?;
    let out = match spec.field {
        FieldKind::Q => run_in::<Q>(cli, &spec)?,
        FieldKind::Fp(_) => run_in::<Fp>(cli, &spec)?,
    };
    Ok((out, spec.field))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (out, field) = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("abcat: {e}");
            return ExitCode::from(exit_code_of(&e));
        }
    };
    let report = Report::new(out.command, field.to_string(), out.verdict, out.payload);
    match cli.json.as_deref() {
        Some(p) if p.as_os_str() == "-" => print!("{}", report.to_json()),
        Some(p) => {
            print!("{}", out.text);
            if let Err(e) = std::fs::write(p, report.to_json()) {
                eprintln!("abcat: cannot write {}: {e}", p.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{}", out.text),
    }
    ExitCode::from(out.verdict.map_or(0, |v| v.exit_code()) as u8)
}
