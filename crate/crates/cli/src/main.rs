use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gridbraid::convert::{braid_to_grid, classical_invariants, grid_to_braid, grid_to_front};
use gridbraid::equivalence::{equivalent, MoveClass, SearchBudget};
use gridbraid::verify::{self, Suite};
use gridbraid::{symmetry, BraidWord, GridDiagram, MoveScript, Symmetry, Verdict};

/// Grid diagrams, braids and Legendrian invariants.
#[derive(Parser)]
#[command(name = "gridbraid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a grid file and report its size and component count.
    Validate { file: PathBuf },
    /// Draw a grid as text, top row first.
    Render { file: PathBuf },
    /// Replay a move script on a grid.
    Apply {
        file: PathBuf,
        script: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert a grid to a braid word, front data or classical invariants.
    Convert {
        #[arg(long)]
        to: Target,
        file: PathBuf,
    },
    /// Print tb, r and sl of a grid.
    Invariants { file: PathBuf },
    /// Build a grid whose braid is the given word, e.g. "n=3; -2 1 2".
    BraidToGrid {
        word: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply one of the four grid symmetries.
    Symmetry {
        file: PathBuf,
        #[arg(long)]
        op: SymmetryArg,
    },
    /// Search for a move sequence relating two grids.
    Equiv {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        class: ClassArg,
        #[arg(long)]
        max_grid: Option<usize>,
        #[arg(long)]
        max_states: Option<usize>,
        #[arg(long)]
        max_seconds: Option<f64>,
        /// Write the move script of a YES answer here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a seeded randomized verification suite.
    Verify {
        #[arg(long)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Braid,
    Front,
    Invariants,
}

#[derive(Clone, Copy, ValueEnum)]
enum SymmetryArg {
    S1,
    S2,
    S3,
    S4,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    #[value(name = "K")]
    K,
    #[value(name = "L")]
    L,
    #[value(name = "T")]
    T,
    #[value(name = "B")]
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Table1,
    Table2,
    Roundtrip,
    Bw,
    Slcoherence,
    Markov,
}

/// Domain failures; all map to exit code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_grid(path: &Path) -> Result<GridDiagram, Failure> {
    GridDiagram::parse(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

/// Writes to `output` when given, otherwise returns the text for stdout.
fn emit(text: String, output: Option<&Path>) -> Result<String, Failure> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

/// Output text and whether the command succeeded.
fn run(command: Command) -> Result<(String, bool), Failure> {
    let text = match command {
        Command::Validate { file } => {
            let g = read_grid(&file)?;
            format!("valid n={} components={}\n", g.size(), g.components())
        }
        Command::Render { file } => format!("{}\n", read_grid(&file)?.render_ascii()),
        Command::Apply {
            file,
            script,
            output,
        } => {
            let g = read_grid(&file)?;
            let script = MoveScript::parse(&read(&script)?)?;
            emit(script.replay(&g)?.serialize(), output.as_deref())?
        }
        Command::Convert { to, file } => {
            let g = read_grid(&file)?;
            match to {
                Target::Braid => grid_to_braid(&g).serialize(),
                Target::Front => {
                    let f = grid_to_front(&g);
                    format!(
                        "right_cusps={} left_cusps={} up_cusps={} down_cusps={} writhe={}\n",
                        f.right_cusps, f.left_cusps, f.up_cusps, f.down_cusps, f.writhe
                    )
                }
                Target::Invariants => format!("{}\n", classical_invariants(&g)),
            }
        }
        Command::Invariants { file } => format!("{}\n", classical_invariants(&read_grid(&file)?)),
        Command::BraidToGrid { word, output } => {
            let w = BraidWord::parse(&word)?;
            emit(braid_to_grid(&w).serialize(), output.as_deref())?
        }
        Command::Symmetry { file, op } => {
            let s = match op {
                SymmetryArg::S1 => Symmetry::S1,
                SymmetryArg::S2 => Symmetry::S2,
                SymmetryArg::S3 => Symmetry::S3,
                SymmetryArg::S4 => Symmetry::S4,
            };
            symmetry(&read_grid(&file)?, s).serialize()
        }
        Command::Equiv {
            a,
            b,
            class,
            max_grid,
            max_states,
            max_seconds,
            output,
        } => {
            let (g1, g2) = (read_grid(&a)?, read_grid(&b)?);
            let mut budget = SearchBudget::for_inputs(&g1, &g2);
            if let Some(n) = max_grid {
                budget.max_grid_number = n;
            }
            if let Some(m) = max_states {
                budget.max_states = m;
            }
            if let Some(s) = max_seconds {
                budget.max_seconds = s;
            }
            let class = match class {
                ClassArg::K => MoveClass::K,
                ClassArg::L => MoveClass::L,
                ClassArg::T => MoveClass::T,
                ClassArg::B => MoveClass::B,
            };
            match equivalent(&g1, &g2, class, &budget) {
                Verdict::Yes(script) => {
                    emit(script.serialize(), output.as_deref())?;
                    "YES\n".to_string()
                }
                Verdict::No(reason) => format!("NO ({reason})\n"),
                Verdict::Unknown => "UNKNOWN\n".to_string(),
            }
        }
        Command::Verify {
            suite,
            trials,
            seed,
        } => {
            let suite = match suite {
                SuiteArg::Table1 => Suite::Table1,
                SuiteArg::Table2 => Suite::Table2,
                SuiteArg::Roundtrip => Suite::Roundtrip,
                SuiteArg::Bw => Suite::Bw,
                SuiteArg::Slcoherence => Suite::SlCoherence,
                SuiteArg::Markov => Suite::Markov,
            };
            let report = verify::run(suite, trials, seed);
            return Ok((report.to_string(), report.ok()));
        }
    };
    Ok((text, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
