use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fuscat::fusionring::{catalog, catalog_names, to_json_string};
use fuscat::report::{self, parse_sections, LoadedInput, Report, RunConfig};
use fuscat::{Error, TableConfig};

#[derive(Parser)]
#[command(name = "fuscat", version, about = "Exact character tables and Galois symmetries of commutative fusion rings")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Options {
    /// Working precision in bits for the numeric eigen step.
    #[arg(long, global = true, env = "FUSCAT_PRECISION", default_value_t = 256)]
    precision: usize,
    /// Largest conductor tried during reconstruction.
    #[arg(long, global = true, default_value_t = 360)]
    conductor_max: u32,
    /// Seed for the random Hermitian combination.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Omit floating-point renderings from the report.
    #[arg(long, global = true)]
    exact_only: bool,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Maximum number of non-rational structure constants listed.
    #[arg(long, global = true)]
    witness_limit: Option<usize>,
    /// Skip the ring axioms on file inputs.
    #[arg(long, global = true)]
    no_validate: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline on a ring file or `catalog:NAME`.
    Analyze { input: String },
    /// Run selected check groups only.
    Verify {
        input: String,
        /// orthogonality, idempotents, structconst, galois, zeros, perfect
        #[arg(long, required = true, value_delimiter = ',', num_args = 1..)]
        checks: Vec<String>,
    },
    /// Check an S-matrix file, optionally against a ring.
    Modular {
        smatrix: PathBuf,
        #[arg(long)]
        ring: Option<String>,
    },
    /// List or export the built-in rings.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand)]
enum CatalogCommand {
    List,
    Emit { name: String, path: PathBuf },
}

impl Options {
    fn config(&self) -> RunConfig {
        RunConfig {
            table: TableConfig {
                precision: self.precision,
                conductor_max: self.conductor_max,
                seed: self.seed,
                ..TableConfig::default()
            },
            exact_only: self.exact_only,
            witness_limit: self.witness_limit,
            validate: !self.no_validate,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InternalInconsistency(_) => 3,
        // the remedy is a larger bound or a different input
        Error::ConductorNotFound { .. } | Error::DegenerateSpectrum { .. } | Error::ReconstructionFailed { .. } => 2,
        e if e.is_input_error() => 2,
        _ => 3,
    }
}

fn emit(report: &Report, out: Option<&Path>) -> Result<u8, Error> {
    let json = report.to_json();
    match out {
        Some(path) => std::fs::write(path, json)?,
        None => print!("{json}"),
    }
    let s = report.summary;
    eprintln!("{} passed, {} failed, {} not applicable", s.passed, s.failed, s.not_applicable);
    Ok(if report.inconsistent() {
        3
    } else if report.all_pass() {
        0
    } else {
        1
    })
}

fn run(cli: Cli) -> Result<u8, Error> {
    let config = cli.opts.config();
    let out = cli.opts.out.as_deref();
    match cli.command {
        Command::Analyze { input } => {
            config.table.check()?;
            let input = report::load_input(&input, config.validate)?;
            emit(&report::analyze(&input, &config)?, out)
        }
        Command::Verify { input, checks } => {
            let sections = parse_sections(&checks)?;
            config.table.check()?;
            let input = report::load_input(&input, config.validate)?;
            emit(&report::verify(&input, &sections, &config)?, out)
        }
        Command::Modular { smatrix, ring } => {
            let ring: Option<LoadedInput> = ring.map(|r| report::load_input(&r, config.validate)).transpose()?;
            emit(&report::modular(&smatrix, ring.as_ref(), &config)?, out)
        }
        Command::Catalog(CatalogCommand::List) => {
            for name in catalog_names() {
                let spec = catalog(name)?;
                let mut tags = vec![format!("rank {}", spec.rank)];
                if spec.declared_braided {
                    tags.push("braided".into());
                }
                if spec.declared_modular {
                    tags.push("modular".into());
                }
                println!("{name}\t{}", tags.join(", "));
            }
            Ok(0)
        }
        Command::Catalog(CatalogCommand::Emit { name, path }) => {
            let spec = catalog(&name)?;
            std::fs::write(&path, to_json_string(&spec) + "\n")?;
            eprintln!("wrote {}", path.display());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error [{}]: {e}", e.module());
            ExitCode::from(exit_code(&e))
        }
    }
}
