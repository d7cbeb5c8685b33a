//! Front end shared by the `cube` binary and its tests.

pub mod bench;
pub mod commands;
pub mod error;
pub mod solve;

pub use bench::{fit_constant, run_bench, summary, to_csv, BenchPlan, BenchRecord, CSV_HEADER};
pub use commands::{run, Cli, Command};
pub use error::CliError;
pub use solve::{parse_dims, solve_state, Solver};
