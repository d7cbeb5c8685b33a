use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::CubeError;
use crate::geometry::{Color, Dims, Face, Layout};
use crate::moves::{legal_moves, permute_in_place, Move, MoveSequence};

/// Sticker colors of an l x m x n puzzle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CubeState {
    layout: Layout,
    stickers: Vec<Color>,
}

impl CubeState {
    pub fn solved(dims: Dims) -> Self {
        let layout = Layout::new(dims);
        let mut stickers = Vec::with_capacity(layout.len());
        for f in Face::ALL {
            stickers.extend(std::iter::repeat(f).take(layout.face_range(f).len()));
        }
        CubeState { layout, stickers }
    }

    pub fn from_stickers(dims: Dims, stickers: Vec<Color>) -> Result<Self, CubeError> {
        let layout = Layout::new(dims);
        if stickers.len() != layout.len() {
            return Err(CubeError::InvalidState(format!(
                "expected {} stickers, got {}",
                layout.len(),
                stickers.len()
            )));
        }
        Ok(CubeState { layout, stickers })
    }

    pub fn dims(&self) -> Dims {
        self.layout.dims
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    pub fn stickers(&self) -> &[Color] {
        &self.stickers
    }

    pub fn stickers_mut(&mut self) -> &mut [Color] {
        &mut self.stickers
    }

    pub fn get(&self, face: Face, row: usize, col: usize) -> Color {
        self.stickers[self.layout.index(face, row, col)]
    }

    pub fn set(&mut self, face: Face, row: usize, col: usize, c: Color) {
        let i = self.layout.index(face, row, col);
        self.stickers[i] = c;
    }

    pub fn apply_move_mut(&mut self, mv: Move) -> Result<(), CubeError> {
        mv.check(self.dims())?;
        permute_in_place(&self.layout, mv, &mut self.stickers);
        Ok(())
    }

    pub fn apply_move(&self, mv: Move) -> Result<CubeState, CubeError> {
        let mut next = self.clone();
        next.apply_move_mut(mv)?;
        Ok(next)
    }

    /// Applies moves left to right. On failure the error names the offending
    /// position and `self` may be partially updated.
    pub fn apply_sequence_mut(&mut self, seq: &[Move]) -> Result<(), CubeError> {
        for (i, &mv) in seq.iter().enumerate() {
            self.apply_move_mut(mv).map_err(|e| match e {
                CubeError::IllegalMove { mv, reason, .. } => CubeError::IllegalMove {
                    mv,
                    index: Some(i),
                    reason,
                },
                other => other,
            })?;
        }
        Ok(())
    }

    pub fn apply_sequence(&self, seq: &[Move]) -> Result<CubeState, CubeError> {
        let mut next = self.clone();
        next.apply_sequence_mut(seq)?;
        Ok(next)
    }

    /// Every face monochromatic and the six face colors distinct.
    pub fn is_solved(&self) -> bool {
        let mut seen = [false; 6];
        for f in Face::ALL {
            let range = self.layout.face_range(f);
            let first = self.stickers[range.start];
            if self.stickers[range].iter().any(|&c| c != first) || seen[first.index()] {
                return false;
            }
            seen[first.index()] = true;
        }
        true
    }

    pub fn color_counts(&self) -> [usize; 6] {
        let mut counts = [0; 6];
        for c in &self.stickers {
            counts[c.index()] += 1;
        }
        counts
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&StateFile::from(self)).expect("state serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CubeError> {
        let file: StateFile =
            serde_json::from_str(text).map_err(|e| CubeError::parse(e.column(), e.to_string()))?;
        file.try_into()
    }
}

/// Deterministic scramble of `k` uniformly drawn legal moves.
pub fn scramble(dims: Dims, seed: u64, k: usize) -> (CubeState, MoveSequence) {
    let moves = legal_moves(dims);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: MoveSequence = if moves.is_empty() {
        Vec::new()
    } else {
        (0..k).map(|_| *moves.choose(&mut rng).expect("non-empty")).collect()
    };
    let state = CubeState::solved(dims)
        .apply_sequence(&seq)
        .expect("legal moves only");
    (state, seq)
}

/// On-disk form: `{"dims":[l,m,n],"faces":{"U":[["U",..],..],..}}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: [usize; 3],
    pub faces: BTreeMap<String, Vec<Vec<Color>>>,
}

impl From<&CubeState> for StateFile {
    fn from(s: &CubeState) -> Self {
        let mut faces = BTreeMap::new();
        for f in Face::ALL {
            let (rows, cols) = s.layout.shape(f);
            let grid = (0..rows)
                .map(|r| (0..cols).map(|c| s.get(f, r, c)).collect())
                .collect();
            faces.insert(f.letter().to_string(), grid);
        }
        StateFile {
            dims: s.dims().as_array(),
            faces,
        }
    }
}

impl TryFrom<StateFile> for CubeState {
    type Error = CubeError;

    fn try_from(file: StateFile) -> Result<Self, CubeError> {
        let [l, m, n] = file.dims;
        let dims = Dims::new(l, m, n)?;
        let mut state = CubeState::solved(dims);
        for f in Face::ALL {
            let key = f.letter().to_string();
            let grid = file
                .faces
                .get(&key)
                .ok_or_else(|| CubeError::InvalidState(format!("missing face {key}")))?;
            let (rows, cols) = state.layout.shape(f);
            if grid.len() != rows || grid.iter().any(|row| row.len() != cols) {
                return Err(CubeError::InvalidState(format!(
                    "face {key} must be {rows}x{cols}"
                )));
            }
            for (r, row) in grid.iter().enumerate() {
                for (c, &color) in row.iter().enumerate() {
                    state.set(f, r, c, color);
                }
            }
        }
        if file.faces.len() != 6 {
            return Err(CubeError::InvalidState("unexpected face keys".into()));
        }
        Ok(state)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Axis;
    use crate::moves::{invert_sequence, Turn};

    #[test]
    fn row_flip_on_flat_cube() {
        let dims = Dims::new(3, 3, 1).unwrap();
        let s = CubeState::solved(dims)
            .apply_move(Move::new(Axis::Y, 0, Turn::Half))
            .unwrap();
        for x in 0..3 {
            assert_eq!(s.get(Face::U, 0, x), Face::D);
            assert_eq!(s.get(Face::D, 0, x), Face::U);
            assert_eq!(s.get(Face::U, 1, x), Face::U);
        }
        // the row's side stickers trade ends
        assert_eq!(s.get(Face::L, 0, 0), Face::R);
        assert_eq!(s.get(Face::R, 0, 0), Face::L);
        assert_eq!(s.get(Face::F, 0, 1), Face::F);
        assert!(!s.is_solved());
    }

    #[test]
    fn one_move_unsolves() {
        for dims in [Dims::cube(2), Dims::cube(3), Dims::new(4, 4, 1).unwrap(), Dims::new(2, 3, 5).unwrap()] {
            for mv in legal_moves(dims) {
                assert!(!CubeState::solved(dims).apply_move(mv).unwrap().is_solved(), "{dims} {mv}");
            }
        }
    }

    #[test]
    fn scramble_is_deterministic_and_consistent() {
        let dims = Dims::new(6, 6, 1).unwrap();
        let (a, sa) = scramble(dims, 9, 40);
        let (b, sb) = scramble(dims, 9, 40);
        assert_eq!((a.clone(), sa.clone()), (b, sb));
        assert_eq!(CubeState::solved(dims).apply_sequence(&sa).unwrap(), a);
        let (z, sz) = scramble(dims, 9, 0);
        assert!(z.is_solved() && sz.is_empty());
        let back = a.apply_sequence(&invert_sequence(&sa)).unwrap();
        assert!(back.is_solved());
    }

    #[test]
    fn sequence_error_reports_position() {
        let dims = Dims::new(4, 4, 1).unwrap();
        let seq = [Move::new(Axis::X, 0, Turn::Half), Move::new(Axis::Z, 0, Turn::Half)];
        match CubeState::solved(dims).apply_sequence(&seq) {
            Err(CubeError::IllegalMove { index: Some(1), .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let (s, _) = scramble(Dims::new(2, 3, 4).unwrap(), 1, 25);
        let text = s.to_json();
        assert!(text.starts_with("{\"dims\":[2,3,4],\"faces\":{"));
        assert_eq!(CubeState::from_json(&text).unwrap(), s);
        assert!(CubeState::from_json("{\"dims\":[2,2,2],\"faces\":{}}").is_err());
        assert!(CubeState::from_json("not json").is_err());
    }

    #[test]
    fn degenerate_dims_are_solved() {
        let s = CubeState::solved(Dims::new(1, 1, 1).unwrap());
        assert!(s.is_solved());
        assert_eq!(s.stickers().len(), 6);
    }
}
