use std::str::FromStr;
use std::time::Instant;

use cube_core::{CubeState, Dims, MoveSequence};
use optimal_cxc::{check_dims, solver_for, Limits};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Solver {
    N1Naive,
    N1Grouped,
    N3,
    Optimal,
}

impl Solver {
    pub fn name(self) -> &'static str {
        match self {
            Solver::N1Naive => "n1-naive",
            Solver::N1Grouped => "n1-grouped",
            Solver::N3 => "n3",
            Solver::Optimal => "optimal",
        }
    }

    /// The solver used when none is named.
    pub fn for_dims(d: Dims) -> Result<Solver, CliError> {
        if d.n == 1 && d.l == d.m && d.l > 1 {
            Ok(Solver::N1Grouped)
        } else if d.is_cube() {
            Ok(Solver::N3)
        } else if check_dims(d).is_ok() {
            Ok(Solver::Optimal)
        } else {
            Err(CliError::Parse(format!("no solver for {d}")))
        }
    }
}

impl FromStr for Solver {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "n1-naive" => Ok(Solver::N1Naive),
            "n1-grouped" => Ok(Solver::N1Grouped),
            "n3" => Ok(Solver::N3),
            "optimal" => Ok(Solver::Optimal),
            _ => Err(format!("unknown solver {s}; expected n1-naive, n1-grouped, n3 or optimal")),
        }
    }
}

pub fn parse_dims(s: &str) -> Result<Dims, String> {
    let parts: Vec<usize> =
        s.split(',').map(|p| p.trim().parse().map_err(|_| format!("bad dims {s}"))).collect::<Result<_, _>>()?;
    match parts[..] {
        [l, m, n] => Dims::new(l, m, n).map_err(|e| e.to_string()),
        _ => Err(format!("dims need three values, got {s}")),
    }
}

fn check_colors(state: &CubeState) -> Result<(), CliError> {
    if state.color_counts() != CubeState::solved(state.dims()).color_counts() {
        return Err(CliError::Unsolvable("sticker colors do not match a solved puzzle".into()));
    }
    Ok(())
}

/// Runs `solver` and replays its answer; anything that does not end solved
/// is an error.
pub fn solve_state(state: &CubeState, solver: Solver, budget_ms: u64) -> Result<MoveSequence, CliError> {
    check_colors(state)?;
    let start = Instant::now();
    let seq = match solver {
        Solver::N1Naive => solver_n1::naive_solve_n1(state)?,
        Solver::N1Grouped => solver_n1::solve_n1(state)?,
        Solver::N3 => solver_n3::solve_n3(state)?,
        Solver::Optimal => {
            let limits = Limits { max_length: None, deadline: Some(start + std::time::Duration::from_millis(budget_ms)) };
            solver_for(state.dims())?.solve_with(state, &limits)?
        }
    };
    if start.elapsed().as_millis() > budget_ms as u128 {
        return Err(CliError::Cap(format!("solve took longer than {budget_ms} ms")));
    }
    if !state.apply_sequence(&seq)?.is_solved() {
        return Err(CliError::Unsolvable(format!("{} left the puzzle unsolved", solver.name())));
    }
    Ok(seq)
}
