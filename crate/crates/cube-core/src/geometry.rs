//! Coordinates, faces and the sticker layout shared by every module.
//!
//! Cubie `(i, j, k)` has `0 <= i < l` along x, `0 <= j < m` along y and
//! `0 <= k < n` along z. Faces sit at the ends of the axes:
//!
//! | face | normal | grid rows | grid cols | cubie for `grid[r][c]` |
//! |------|--------|-----------|-----------|------------------------|
//! | U    | +z     | y (m)     | x (l)     | `(c, r, n-1)`          |
//! | D    | -z     | y (m)     | x (l)     | `(c, r, 0)`            |
//! | L    | -x     | z (n)     | y (m)     | `(0, c, r)`            |
//! | R    | +x     | z (n)     | y (m)     | `(l-1, c, r)`          |
//! | F    | -y     | z (n)     | x (l)     | `(c, 0, r)`            |
//! | B    | +y     | z (n)     | x (l)     | `(c, m-1, r)`          |
//!
//! Stickers are numbered face by face in the order U, D, L, R, F, B, each
//! face row-major.

use serde::{Deserialize, Serialize};

use crate::error::CubeError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dims {
    pub l: usize,
    pub m: usize,
    pub n: usize,
}

impl Dims {
    pub fn new(l: usize, m: usize, n: usize) -> Result<Self, CubeError> {
        if l == 0 || m == 0 || n == 0 {
            return Err(CubeError::InvalidState(format!(
                "dimensions must be positive, got {l}x{m}x{n}"
            )));
        }
        Ok(Dims { l, m, n })
    }

    pub fn cube(n: usize) -> Self {
        Dims { l: n, m: n, n }
    }

    pub fn as_array(&self) -> [usize; 3] {
        [self.l, self.m, self.n]
    }

    pub fn along(&self, axis: Axis) -> usize {
        self.as_array()[axis.index()]
    }

    pub fn sticker_count(&self) -> usize {
        2 * (self.l * self.m + self.l * self.n + self.m * self.n)
    }

    pub fn is_cube(&self) -> bool {
        self.l == self.m && self.m == self.n
    }
}

impl std::fmt::Display for Dims {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}x{}x{}", self.l, self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i % 3]
    }

    pub fn letter(self) -> char {
        ['x', 'y', 'z'][self.index()]
    }
}

/// One of the six outer faces. Doubles as the color that face shows when
/// solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Face {
    U = 0,
    D = 1,
    L = 2,
    R = 3,
    F = 4,
    B = 5,
}

pub type Color = Face;

impl Face {
    pub const ALL: [Face; 6] = [Face::U, Face::D, Face::L, Face::R, Face::F, Face::B];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Face {
        Face::ALL[i]
    }

    pub fn letter(self) -> char {
        ['U', 'D', 'L', 'R', 'F', 'B'][self.index()]
    }

    pub fn from_letter(c: char) -> Option<Face> {
        Face::ALL.iter().copied().find(|f| f.letter() == c)
    }

    pub fn opposite(self) -> Face {
        Face::from_index(self.index() ^ 1)
    }

    /// Outward normal as (axis, positive?).
    pub fn normal(self) -> (Axis, bool) {
        match self {
            Face::U => (Axis::Z, true),
            Face::D => (Axis::Z, false),
            Face::L => (Axis::X, false),
            Face::R => (Axis::X, true),
            Face::F => (Axis::Y, false),
            Face::B => (Axis::Y, true),
        }
    }

    pub fn from_normal(axis: Axis, positive: bool) -> Face {
        match (axis, positive) {
            (Axis::Z, true) => Face::U,
            (Axis::Z, false) => Face::D,
            (Axis::X, false) => Face::L,
            (Axis::X, true) => Face::R,
            (Axis::Y, false) => Face::F,
            (Axis::Y, true) => Face::B,
        }
    }

    /// Axes indexing the grid rows and columns of this face.
    pub fn grid_axes(self) -> (Axis, Axis) {
        match self {
            Face::U | Face::D => (Axis::Y, Axis::X),
            Face::L | Face::R => (Axis::Z, Axis::Y),
            Face::F | Face::B => (Axis::Z, Axis::X),
        }
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_char(self.letter())
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let mut it = s.chars();
        match (it.next().and_then(Face::from_letter), it.next()) {
            (Some(f), None) => Ok(f),
            _ => Err(serde::de::Error::custom(format!("bad color {s:?}"))),
        }
    }
}

/// Flat sticker numbering for a fixed set of dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Layout {
    pub dims: Dims,
    offsets: [usize; 7],
}

/// A sticker as a cubie plus the face it looks out of.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StickerPos {
    pub cubie: [usize; 3],
    pub face: Face,
}

impl Layout {
    pub fn new(dims: Dims) -> Self {
        let mut offsets = [0; 7];
        for f in Face::ALL {
            let (r, c) = Self::shape_of(dims, f);
            offsets[f.index() + 1] = offsets[f.index()] + r * c;
        }
        Layout { dims, offsets }
    }

    fn shape_of(dims: Dims, f: Face) -> (usize, usize) {
        let (ra, ca) = f.grid_axes();
        (dims.along(ra), dims.along(ca))
    }

    /// Grid shape (rows, cols) of a face.
    pub fn shape(&self, f: Face) -> (usize, usize) {
        Self::shape_of(self.dims, f)
    }

    pub fn len(&self) -> usize {
        self.offsets[6]
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn face_range(&self, f: Face) -> std::ops::Range<usize> {
        self.offsets[f.index()]..self.offsets[f.index() + 1]
    }

    pub fn index(&self, f: Face, row: usize, col: usize) -> usize {
        let (_, cols) = self.shape(f);
        self.offsets[f.index()] + row * cols + col
    }

    pub fn face_of(&self, idx: usize) -> Face {
        let f = (0..6).rev().find(|&i| self.offsets[i] <= idx).unwrap_or(0);
        Face::from_index(f)
    }

    /// (face, row, col) of a flat sticker index.
    pub fn grid_pos(&self, idx: usize) -> (Face, usize, usize) {
        let f = self.face_of(idx);
        let (_, cols) = self.shape(f);
        let rel = idx - self.offsets[f.index()];
        (f, rel / cols, rel % cols)
    }

    pub fn sticker_pos(&self, idx: usize) -> StickerPos {
        let (face, row, col) = self.grid_pos(idx);
        let (axis, positive) = face.normal();
        let (ra, ca) = face.grid_axes();
        let mut cubie = [0; 3];
        cubie[ra.index()] = row;
        cubie[ca.index()] = col;
        cubie[axis.index()] = if positive {
            self.dims.along(axis) - 1
        } else {
            0
        };
        StickerPos { cubie, face }
    }

    /// Inverse of [`Layout::sticker_pos`]. The cubie must lie on `face`.
    pub fn index_of(&self, p: StickerPos) -> usize {
        let (ra, ca) = p.face.grid_axes();
        self.index(p.face, p.cubie[ra.index()], p.cubie[ca.index()])
    }
}
