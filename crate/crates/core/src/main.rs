use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cnr::abf::AbfInstance;
use cnr::graph::io::{read_crg, write_crg, write_dot, RoleSidecar};
use cnr::reduce::{build_t22, build_t31};
use cnr::solver::{compute_region, cop_number, Winner};
use cnr::verify::{run_t22_suite, run_t31_suite, T22Params, T31Params};
use cnr::{Configuration, CopPositions, Error, PGraph, Turn, Variant};

#[derive(Parser)]
#[command(name = "cnr", version, about = "Exact Cops and Robbers solver and reduction toolkit")]
struct Cli {
    /// Print extra detail on stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether K cops win on a graph.
    Solve {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        cops: usize,
        file: PathBuf,
    },
    /// Classic cop number of a graph.
    Copnumber { file: PathBuf },
    /// Compile an instance into another game.
    Reduce {
        #[command(subcommand)]
        which: Reduction,
    },
    /// Decide an alternating boolean formula game.
    AbfSolve { file: PathBuf },
    /// Run an equivalence suite.
    Verify {
        #[command(subcommand)]
        which: Suite,
    },
    /// Render a graph as DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long)]
        roles: Option<PathBuf>,
        #[arg(short)]
        o: PathBuf,
    },
    /// Print an optimal play.
    Trace {
        #[arg(long)]
        variant: Variant,
        #[arg(long)]
        cops: usize,
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
        /// Comma-separated start cop vertices (default: best placement).
        #[arg(long, value_delimiter = ',')]
        start_cops: Option<Vec<usize>>,
        /// Start robber vertex (default: the robber's best reply).
        #[arg(long)]
        start_robber: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Reduction {
    /// Lazy-cops instance to protected-edge instance.
    LcrpToCrp {
        #[arg(long)]
        cops: usize,
        input: PathBuf,
        #[arg(short)]
        o: PathBuf,
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// ABF instance to lazy-cops instance.
    AbfToLcrp {
        input: PathBuf,
        #[arg(short)]
        o: PathBuf,
        #[arg(long)]
        roles: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Suite {
    T22 {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 2)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        cops: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    T31 {
        /// Run the (x1) and (y1) two-variable instance instead of the micro family.
        #[arg(long)]
        stretch: bool,
    },
}

enum Outcome {
    Done,
    Mismatch,
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Error> {
    fs::write(path, text)
        .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<PGraph, Error> {
    read_crg(&read(path)?)
}

fn trace_start(
    region: &cnr::WinRegion,
    g: &PGraph,
    cops: Option<Vec<usize>>,
    robber: Option<usize>,
) -> Result<Configuration, Error> {
    let k = region.space().cop_count();
    let cops = match cops {
        Some(c) if c.len() != k => {
            return Err(Error::InvalidArgument(format!("expected {k} start cops")));
        }
        Some(c) => CopPositions::new(c),
        None => region
            .winning_placement()
            .unwrap_or_else(|| CopPositions::new(vec![0; k])),
    };
    let robber = match robber {
        Some(r) => r,
        None => {
            // robber's best reply: outside the region if possible, else slowest capture
            let cfg = |r| Configuration::new(cops.as_slice().to_vec(), r, Turn::Cops);
            g.vertices()
                .find(|&r| !region.contains(&cfg(r)))
                .or_else(|| g.vertices().max_by_key(|&r| (region.rank_of(&cfg(r)), std::cmp::Reverse(r))))
                .ok_or_else(|| Error::InvalidArgument("empty graph".into()))?
        }
    };
    Ok(Configuration::new(cops.as_slice().to_vec(), robber, Turn::Cops))
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let verbose = cli.verbose;
    match cli.command {
        Command::Solve { variant, cops, file } => {
            let g = load_graph(&file)?;
            let region = compute_region(&g, variant, cops)?;
            let w = region.winner();
            if verbose {
                eprintln!(
                    "configurations {} winning {}",
                    region.space().total(),
                    region.len()
                );
                if let Some(p) = region.winning_placement() {
                    eprintln!("placement {p}");
                }
            }
            println!("{}", w.verdict());
        }
        Command::Copnumber { file } => {
            println!("{}", cop_number(&load_graph(&file)?)?);
        }
        Command::Reduce { which } => match which {
            Reduction::LcrpToCrp { cops, input, o, roles } => {
                let g = load_graph(&input)?;
                let out = build_t22(&g, cops)?;
                write(&o, &write_crg(&out.graph))?;
                if let Some(r) = roles {
                    write(&r, &out.sidecar().write())?;
                }
                if verbose {
                    for note in &out.notes {
                        eprintln!("{note}");
                    }
                }
                println!("vertices {} cops {}", out.graph.vertex_count(), out.cop_count);
            }
            Reduction::AbfToLcrp { input, o, roles } => {
                let inst = AbfInstance::read_abf(&read(&input)?)?;
                let out = build_t31(&inst)?;
                write(&o, &write_crg(&out.graph))?;
                if let Some(r) = roles {
                    write(&r, &out.sidecar().write())?;
                }
                if verbose {
                    eprintln!("initial {}", out.initial_config);
                }
                println!("vertices {} cops {}", out.graph.vertex_count(), out.cop_count);
            }
        },
        Command::AbfSolve { file } => {
            let inst = AbfInstance::read_abf(&read(&file)?)?;
            println!("{}", if inst.decide_a_wins() { "A-WINS" } else { "B-WINS" });
        }
        Command::Verify { which } => {
            let report = match which {
                Suite::T22 {
                    trials,
                    min_n,
                    max_n,
                    cops,
                    seed,
                } => {
                    if min_n == 0 || min_n > max_n {
                        return Err(Error::InvalidArgument("need 1 <= min-n <= max-n".into()));
                    }
                    run_t22_suite(&T22Params {
                        trials,
                        min_n,
                        max_n,
                        k: cops,
                        seed,
                        ..T22Params::default()
                    })
                }
                Suite::T31 { stretch } => run_t31_suite(&if stretch {
                    T31Params::stretch()
                } else {
                    T31Params::micro()
                }),
            };
            if verbose {
                for t in &report.trials {
                    eprintln!("{} {:.3}s", t.fingerprint, t.elapsed.as_secs_f64());
                }
            }
            println!("{report}");
            if !report.passed() {
                return Ok(Outcome::Mismatch);
            }
        }
        Command::ExportDot { file, roles, o } => {
            let g = load_graph(&file)?;
            let sidecar = roles.map(|r| read(&r).and_then(|t| RoleSidecar::read(&t))).transpose()?;
            write(&o, &write_dot(&g, sidecar.as_ref().map(|s| &s.roles)))?;
        }
        Command::Trace {
            variant,
            cops,
            file,
            max_steps,
            start_cops,
            start_robber,
        } => {
            let g = load_graph(&file)?;
            let region = compute_region(&g, variant, cops)?;
            let start = trace_start(&region, &g, start_cops, start_robber)?;
            if verbose {
                let w: Winner = region.winner();
                eprintln!("winner {w}");
            }
            println!("{}", region.extract_trace(&start, max_steps)?);
        }
    }
    Ok(Outcome::Done)
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
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
