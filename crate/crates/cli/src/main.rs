mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use orbitclass::orbits::kazarian::load_local_classes;
use orbitclass::orbits::wvariety::{SubbundleConvention, WVariety};
use orbitclass::orbits::{CurveSpec, Engine};
use orbitclass::verify::{Suite, Verifier};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableKind {
    Quartics,
    Cubics,
    Sections,
}

#[derive(Debug, Parser)]
#[command(
    name = "orbitclass",
    version,
    about = "Equivariant classes of orbit closures of plane curves and point configurations"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// JSON list of {"name", "polynomial"} local singularity classes in c1, c2, u.
    #[arg(long, value_name = "PATH", global = true)]
    kazarian_file: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute one class, e.g. `A6`, `nodal(2,1)`, `triangle`, `points:2,1,1`.
    Class {
        id: String,
        /// Print only the projective class.
        #[arg(long, conflicts_with = "affine")]
        projective: bool,
        /// Print only the affine class.
        #[arg(long)]
        affine: bool,
        /// Report point classes as p(u,v) instead of p(-u,-v).
        #[arg(long)]
        flip_sign: bool,
    },
    /// Print a whole table.
    Table {
        #[arg(value_enum)]
        which: TableKind,
    },
    /// Run verification suites; exit status 1 on the first mismatch.
    Verify {
        #[arg(value_name = "SUITE", conflicts_with = "suite")]
        positional: Option<String>,
        #[arg(long)]
        suite: Option<String>,
        /// Corrupt the expected side of the named check.
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Describe the incidence-variety tower and its divisor classes as JSON.
    Tower,
}

/// Failure classes, mapped to exit codes 1 and 2.
enum Failure {
    Verification(anyhow::Error),
    Usage(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<orbitclass::Error>() {
            Some(orbitclass::Error::Consistency(_)) => Failure::Verification(e),
            _ => Failure::Usage(e),
        }
    }
}

impl From<orbitclass::Error> for Failure {
    fn from(e: orbitclass::Error) -> Self {
        Failure::from(anyhow::Error::from(e))
    }
}

fn engine(cli: &Cli) -> Result<Engine, Failure> {
    let Some(path) = &cli.kazarian_file else {
        return Ok(Engine::new());
    };
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading local classes from {}", path.display()))
        .map_err(Failure::Usage)?;
    let classes = load_local_classes(&text)
        .with_context(|| format!("in {}", path.display()))
        .map_err(Failure::Usage)?;
    Ok(Engine::with_local_classes(classes)?)
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let engine = engine(cli)?;
    match &cli.command {
        Command::Class {
            id,
            projective,
            affine,
            flip_sign,
        } => {
            let spec: CurveSpec = id.parse()?;
            let mut result = engine.class(&spec)?;
            if *flip_sign {
                result = result.flip_sign()?;
            }
            let which = render::Parts {
                affine: !projective,
                projective: !affine,
            };
            Ok(render::class(&result, which, cli.format))
        }
        Command::Table { which } => Ok(match which {
            TableKind::Quartics => render::table(&engine.quartic_table()?, cli.format),
            TableKind::Cubics => render::table(&engine.cubic_table()?, cli.format),
            TableKind::Sections => render::sections(&engine.section_table()?, cli.format),
        }),
        Command::Verify {
            positional,
            suite,
            inject_fault,
        } => {
            let name = positional.as_deref().or(suite.as_deref()).unwrap_or("all");
            let suite: Suite = name.parse()?;
            let mut verifier = Verifier::new(&engine);
            if let Some(f) = inject_fault {
                verifier = verifier.with_fault(f);
            }
            let report = verifier.run(suite)?;
            let out = render::report(&report, cli.format);
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                let f = report.first_failure().expect("a failing check");
                Err(Failure::Verification(anyhow::anyhow!(
                    "check `{}` failed: computed {}, expected {}",
                    f.name,
                    f.computed,
                    f.expected
                )))
            }
        }
        Command::Tower => {
            let w = WVariety::build(SubbundleConvention::Kernel)?;
            Ok(render::tower(&w))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
