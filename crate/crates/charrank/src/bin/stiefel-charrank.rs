use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use stiefel_charrank::dump::{RingDump, SqDump};
use stiefel_charrank::table::{theorem_table, TableLimits};
use stiefel_charrank::{registry, render, schema, CliError, Document, ExitCode, GUARD_ENV};
use stiefel_core::ring::manifold_dimension;
use stiefel_core::wu::{check_corollary, ucharrank_bound, BoundOptions, Corollary, ObstructionRule, DEFAULT_CAP};
use stiefel_core::{Field, RingPresentation};

#[derive(Parser)]
#[command(name = "stiefel-charrank", version, about = "Characteristic rank of vector bundles over Stiefel manifolds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Emit JSON instead of a text table.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Manifold {
    /// R, C or H.
    #[arg(short = 'F', long = "field", default_value = "R")]
    field: Field,
    #[arg(short)]
    n: u32,
    #[arg(short)]
    k: u32,
}

#[derive(Args)]
struct Engine {
    /// Apply the bottom-sphere vanishing rule (default).
    #[arg(long, overrides_with = "no_milnor")]
    milnor: bool,
    /// Report the pure Wu bound without the vanishing rule.
    #[arg(long)]
    no_milnor: bool,
    /// Ignore the witness registry; the lower bound is then the connectivity bound.
    #[arg(long)]
    no_witnesses: bool,
    /// Alternative witness registry file.
    #[arg(long, value_name = "FILE")]
    registry: Option<PathBuf>,
    /// Maximum live branches before giving up.
    #[arg(long, env = GUARD_ENV, default_value_t = stiefel_core::wu::DEFAULT_GUARD)]
    guard: usize,
}

impl Engine {
    fn rules(&self) -> &'static [ObstructionRule] {
        if self.no_milnor {
            &[]
        } else {
            &[ObstructionRule::MILNOR]
        }
    }

    fn witnesses(&self) -> Result<Vec<stiefel_core::wu::WitnessRecord>, CliError> {
        match &self.registry {
            Some(path) => registry::load(path),
            None => Ok(registry::builtin()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the truncated cohomology ring.
    Ring {
        #[command(flatten)]
        manifold: Manifold,
        /// Truncation degree (default: manifold dimension, at most 24).
        #[arg(short = 'd', long = "max-degree")]
        max_degree: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Print Steenrod squares of every basis monomial.
    Sq {
        #[command(flatten)]
        manifold: Manifold,
        #[arg(short = 'd', long = "max-degree")]
        max_degree: Option<u32>,
        /// Only this square.
        #[arg(short = 'i')]
        i: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Bound the upper characteristic rank of V_k(F^n).
    CharrankBound {
        #[command(flatten)]
        manifold: Manifold,
        #[command(flatten)]
        engine: Engine,
        /// Highest degree explored (default 24, never above the manifold dimension).
        #[arg(long)]
        cap: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// Compare the engine with the closed-form table for every (F, n, k).
    TheoremTable {
        #[arg(long, default_value_t = 12)]
        max_n_real: u32,
        #[arg(long, default_value_t = 10)]
        max_n_complex: u32,
        #[arg(long, default_value_t = 6)]
        max_n_quaternion: u32,
        /// Restrict to one field.
        #[arg(short = 'F', long = "field")]
        field: Option<Field>,
        #[command(flatten)]
        engine: Engine,
        #[command(flatten)]
        output: Output,
    },
    /// Check one of the four vanishing statements by exhaustion.
    Corollary {
        /// 1: w_{n-k} = 0; 2: w_3 on SO(n); 3: w_{n-k+1} = 0 for even n-k; 4: w_3 = 0 on U(n).
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
        #[arg(short = 'F', long = "field")]
        field: Option<Field>,
        #[arg(short)]
        n: u32,
        /// Implied for 2 (k = n-1) and 4 (k = n).
        #[arg(short)]
        k: Option<u32>,
        #[arg(long, env = GUARD_ENV, default_value_t = stiefel_core::wu::DEFAULT_GUARD)]
        guard: usize,
        #[command(flatten)]
        output: Output,
    },
}

fn emit<T: Serialize>(output: &Output, schema: &'static str, body: &T, text: impl FnOnce(&T) -> String) -> Result<(), CliError> {
    let rendered = if output.json {
        Document::new(schema, body).to_json()
    } else {
        text(body)
    };
    match &output.out {
        Some(path) => std::fs::write(path, rendered).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn default_degree(field: Field, n: u32, k: u32) -> Result<u32, CliError> {
    stiefel_core::ring::validate_parameters(field, n, k)?;
    Ok(manifold_dimension(field, n, k).min(DEFAULT_CAP))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Ring {
            manifold: Manifold { field, n, k },
            max_degree,
            output,
        } => {
            let d = match max_degree {
                Some(d) => d,
                None => default_degree(field, n, k)?,
            };
            let ring = RingPresentation::build(field, n, k, d)?;
            emit(&output, schema::RING, &RingDump::new(&ring), render::ring)?;
            Ok(ExitCode::Ok)
        }
        Command::Sq {
            manifold: Manifold { field, n, k },
            max_degree,
            i,
            output,
        } => {
            let d = match max_degree {
                Some(d) => d,
                None => default_degree(field, n, k)?,
            };
            let ring = RingPresentation::build(field, n, k, d)?;
            emit(&output, schema::SQ, &SqDump::new(&ring, i)?, render::sq)?;
            Ok(ExitCode::Ok)
        }
        Command::CharrankBound {
            manifold: Manifold { field, n, k },
            engine,
            cap,
            output,
        } => {
            let opts = BoundOptions {
                cap,
                guard: engine.guard,
                use_witnesses: !engine.no_witnesses,
            };
            let report = ucharrank_bound(field, n, k, engine.rules(), &engine.witnesses()?, &opts)?;
            emit(&output, schema::BOUND, &report, render::bound)?;
            Ok(ExitCode::Ok)
        }
        Command::TheoremTable {
            max_n_real,
            max_n_complex,
            max_n_quaternion,
            field,
            engine,
            output,
        } => {
            if max_n_real.min(max_n_complex).min(max_n_quaternion) < 3 {
                return Err(CliError::Usage("table limits must be at least 3".into()));
            }
            let fields: Vec<Field> = match field {
                Some(f) => vec![f],
                None => Field::ALL.to_vec(),
            };
            let limits = TableLimits {
                max_n_real,
                max_n_complex,
                max_n_quaternion,
            };
            let opts = BoundOptions {
                cap: None,
                guard: engine.guard,
                use_witnesses: !engine.no_witnesses,
            };
            let table = theorem_table(&fields, limits, !engine.no_milnor, &engine.witnesses()?, &opts)?;
            emit(&output, schema::THEOREM_TABLE, &table, render::theorem_table)?;
            Ok(if table.all_match { ExitCode::Ok } else { ExitCode::Mismatch })
        }
        Command::Corollary {
            which,
            field,
            n,
            k,
            guard,
            output,
        } => {
            let which = Corollary::from_index(which).expect("clap restricts the range");
            let (field, k) = match which {
                Corollary::OrthogonalThirdClass => (field.unwrap_or(Field::Real), k.unwrap_or(n.saturating_sub(1))),
                Corollary::UnitaryThirdClass => (field.unwrap_or(Field::Complex), k.unwrap_or(n)),
                _ => (
                    field.unwrap_or(Field::Real),
                    k.ok_or_else(|| CliError::Usage(format!("corollary {} needs -k", which.index())))?,
                ),
            };
            let outcome = check_corollary(which, field, n, k, guard)?;
            emit(&output, schema::COROLLARY, &outcome, render::corollary)?;
            Ok(if outcome.passed { ExitCode::Ok } else { ExitCode::Mismatch })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    process::exit(code as i32);
}
