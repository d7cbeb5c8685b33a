//! Geometric model of l x m x n box puzzles.
//!
//! States are plain sticker grids; a [`Move`] rotates one slice. All
//! operations are pure, [`CubeState::apply_move_mut`] aside.

pub mod bounds;
pub mod error;
pub mod geometry;
pub mod moves;
pub mod state;

pub use bounds::counting_lower_bound;
pub use error::CubeError;
pub use geometry::{Axis, Color, Dims, Face, Layout, StickerPos};
pub use moves::{
    format_move, format_sequence, invert_sequence, legal_moves, parse_move, parse_sequence,
    permute_in_place, simplify, sticker_map, Move, MoveSequence, MoveTable, Turn,
};
pub use state::{scramble, CubeState, StateFile};
