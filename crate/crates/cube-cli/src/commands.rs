use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use cube_core::{format_sequence, parse_sequence, scramble, CubeState, Dims};
use hardness::{decide_ideal_with, ideal_moves, reduce_nae, verify_solution, NaeFormula, PuzzleInstance, DEFAULT_DECIDE_CAP};
use optimal_cxc::{bfs_oracle, check_dims};

use crate::bench::{run_bench, to_csv, BenchPlan};
use crate::error::CliError;
use crate::solve::{parse_dims, solve_state, Solver};

#[derive(Debug, Parser)]
#[command(name = "cube", version, about = "Scramble, solve and benchmark generalized Rubik's cubes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Geometry {
    N1,
    N3,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the state reached by `k` seeded random moves.
    Scramble {
        #[arg(long, value_parser = parse_dims)]
        dims: Dims,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a move sequence that solves a state file.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        solver: Option<Solver>,
        /// Expected dimensions; rejected when the file disagrees.
        #[arg(long, value_parser = parse_dims)]
        dims: Option<Dims>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 60_000)]
        budget_ms: u64,
    },
    /// Replay moves on a state or instance file and report SOLVED.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        moves: PathBuf,
        /// Move budget for instance files; defaults to the ideal count.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Seeded scramble and solve runs as CSV.
    Bench {
        /// Side lengths.
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        seeds: u64,
        #[arg(long, value_delimiter = ',', default_value = "n1-grouped")]
        solver: Vec<Solver>,
        #[arg(long)]
        k: Option<usize>,
        /// Cross-section `c1,c2` for the optimal solver.
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        cross: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 60_000)]
        budget_ms: u64,
    },
    /// Counting lower bound on the diameter.
    Bounds {
        #[arg(long, value_enum)]
        geometry: Geometry,
        #[arg(long)]
        n: usize,
    },
    /// Turn a formula file into a puzzle instance file.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// YES if an instance file has an ideal solution, else NO.
    Decide {
        #[arg(long = "in")]
        input: PathBuf,
        /// Where to write the ideal move sequence when there is one.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DECIDE_CAP)]
        cap: u64,
    },
    /// Shortest solution of a c1 x c2 x n state.
    Optimal {
        #[arg(long, value_parser = parse_dims)]
        dims: Dims,
        #[arg(long = "in")]
        input: PathBuf,
        /// Also run the breadth-first oracle, visiting at most this many states.
        #[arg(long)]
        oracle_cap: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 60_000)]
        budget_ms: u64,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn read_state(path: &PathBuf, dims: Option<Dims>) -> Result<CubeState, CliError> {
    let state = CubeState::from_json(&read(path)?)?;
    match dims {
        Some(d) if d != state.dims() => Err(CliError::Parse(format!("file holds {}, expected {d}", state.dims()))),
        _ => Ok(state),
    }
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Scramble { dims, seed, k, out } => {
            let (state, _) = scramble(dims, seed, k);
            emit(&out, &(state.to_json() + "\n"), stdout)
        }
        Command::Solve { input, solver, dims, out, budget_ms } => {
            let state = read_state(&input, dims)?;
            let solver = match solver {
                Some(s) => s,
                None => Solver::for_dims(state.dims())?,
            };
            let seq = solve_state(&state, solver, budget_ms)?;
            emit(&out, &(format_sequence(&seq) + "\n"), stdout)
        }
        Command::Verify { input, moves, budget } => {
            let text = read(&input)?;
            let seq = parse_sequence(&read(&moves)?)?;
            let solved = if text.contains("\"important\"") {
                let inst = PuzzleInstance::from_json(&text)?;
                verify_solution(&inst, &seq, budget.unwrap_or_else(|| ideal_moves(&inst)))?
            } else {
                CubeState::from_json(&text)?.apply_sequence(&seq)?.is_solved()
            };
            if solved {
                writeln!(stdout, "SOLVED")?;
                Ok(())
            } else {
                writeln!(stdout, "NOT SOLVED")?;
                Err(CliError::Io("moves do not solve the input".into()))
            }
        }
        Command::Bench { n, seeds, solver, k, cross, jobs, out, budget_ms } => {
            let mut dims = Vec::new();
            for &size in &n {
                for s in &solver {
                    let d = match s {
                        Solver::N1Naive | Solver::N1Grouped => Dims::new(size, size, 1)?,
                        Solver::N3 => Dims::new(size, size, size)?,
                        Solver::Optimal => match cross[..] {
                            [c1, c2] => {
                                let d = Dims::new(c1, c2, size)?;
                                check_dims(d)?;
                                d
                            }
                            _ => return Err(CliError::Parse("--cross needs two values".into())),
                        },
                    };
                    if !dims.contains(&d) {
                        dims.push(d);
                    }
                }
            }
            let mut records = Vec::new();
            for s in &solver {
                let mine: Vec<Dims> = dims
                    .iter()
                    .copied()
                    .filter(|d| match s {
                        Solver::N1Naive | Solver::N1Grouped => d.n == 1 && d.l == d.m,
                        Solver::N3 => d.is_cube(),
                        Solver::Optimal => check_dims(*d).is_ok(),
                    })
                    .collect();
                let plan = BenchPlan { dims: mine, seeds, k, solvers: vec![*s], jobs, budget_ms };
                records.extend(run_bench(&plan)?);
            }
            emit(&out, &to_csv(&records), stdout)
        }
        Command::Bounds { geometry, n } => {
            let b = match geometry {
                Geometry::N1 => solver_n1::lower_bound_n1(n),
                Geometry::N3 => solver_n3::lower_bound_n3(n),
            };
            writeln!(stdout, "{b}")?;
            Ok(())
        }
        Command::Reduce { input, out } => {
            let f = NaeFormula::parse(&read(&input)?)?;
            emit(&out, &(reduce_nae(&f)?.to_json() + "\n"), stdout)
        }
        Command::Decide { input, out, cap } => {
            let inst = PuzzleInstance::from_json(&read(&input)?)?;
            match decide_ideal_with(&inst, &[], cap)? {
                Some(cert) => {
                    let moves = cert.moves();
                    if !verify_solution(&inst, &moves, ideal_moves(&inst))? {
                        return Err(CliError::Unsolvable("certificate failed to verify".into()));
                    }
                    if out.is_some() {
                        emit(&out, &(format_sequence(&moves) + "\n"), stdout)?;
                    }
                    writeln!(stdout, "YES")?;
                }
                None => writeln!(stdout, "NO")?,
            }
            Ok(())
        }
        Command::Optimal { dims, input, oracle_cap, out, budget_ms } => {
            check_dims(dims)?;
            let state = read_state(&input, Some(dims))?;
            let seq = solve_state(&state, Solver::Optimal, budget_ms)?;
            if let Some(cap) = oracle_cap {
                let d = bfs_oracle(dims, &state, cap)?;
                if d as usize != seq.len() {
                    return Err(CliError::Unsolvable(format!("search found {} moves, oracle {d}", seq.len())));
                }
            }
            emit(&out, &format!("{}\n{}\n", format_sequence(&seq), seq.len()), stdout)
        }
    }
}
