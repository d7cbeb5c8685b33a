//! Hardness of ideal solutions for n x n x 1 puzzles with important
//! clusters: gadgets, the reduction from not-all-equal 3-SAT, and an exact
//! decider over move orderings.

pub mod decide;
pub mod error;
pub mod formula;
pub mod gadget;
pub mod instance;
pub mod reduce;

pub use decide::{accepted_projections, decide_ideal, decide_ideal_with, Certificate, Event, DEFAULT_DECIDE_CAP};
pub use error::HardnessError;
pub use formula::{nae_brute, nae_solve_brute, small_formulas, NaeFormula, MAX_BRUTE_VARS};
pub use gadget::{gadget_before, gadget_between, PartialInstance};
pub use instance::{ideal_moves, line_moves, verify_solution, InstanceFile, Line, PuzzleInstance};
pub use reduce::{assignment_from, certificate_for_assignment, reduce_nae};
