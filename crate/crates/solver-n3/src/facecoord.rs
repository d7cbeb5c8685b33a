//! Face coordinates and 24-position clusters.
//!
//! Each face is read from outside with a right and an up direction:
//!
//! | face | right | up |
//! |------|-------|----|
//! | U    | +x    | +y |
//! | D    | +x    | -y |
//! | F    | +x    | +z |
//! | B    | -x    | +z |
//! | R    | +y    | +z |
//! | L    | -y    | +z |
//!
//! All six frames have the same handedness, so the four rotations
//! `(x, y) -> (n-1-y, x)` of a coordinate, taken on every face, give the 24
//! positions of its cluster.

use cube_core::{Face, Layout, StickerPos};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceCoord {
    pub face: Face,
    pub x: usize,
    pub y: usize,
}

/// Signed unit vector as (axis index, sign).
type Dir = (usize, bool);

pub fn right_up(face: Face) -> (Dir, Dir) {
    match face {
        Face::U => ((0, true), (1, true)),
        Face::D => ((0, true), (1, false)),
        Face::F => ((0, true), (2, true)),
        Face::B => ((0, false), (2, true)),
        Face::R => ((1, true), (2, true)),
        Face::L => ((1, false), (2, true)),
    }
}

impl FaceCoord {
    pub fn new(face: Face, x: usize, y: usize) -> Self {
        FaceCoord { face, x, y }
    }

    /// Cubie and face of this sticker on an n x n x n cube.
    pub fn sticker(self, n: usize) -> StickerPos {
        let ((ra, rp), (ua, up)) = right_up(self.face);
        let (na, np) = self.face.normal();
        let mut cubie = [0; 3];
        cubie[ra] = if rp { self.x } else { n - 1 - self.x };
        cubie[ua] = if up { self.y } else { n - 1 - self.y };
        cubie[na.index()] = if np { n - 1 } else { 0 };
        StickerPos { cubie, face: self.face }
    }

    pub fn index(self, layout: &Layout) -> usize {
        layout.index_of(self.sticker(layout.dims.l))
    }

    pub fn from_index(layout: &Layout, idx: usize) -> Self {
        let n = layout.dims.l;
        let p = layout.sticker_pos(idx);
        let ((ra, rp), (ua, up)) = right_up(p.face);
        let x = if rp { p.cubie[ra] } else { n - 1 - p.cubie[ra] };
        let y = if up { p.cubie[ua] } else { n - 1 - p.cubie[ua] };
        FaceCoord { face: p.face, x, y }
    }
}

/// The four rotations of `(x, y)` on an n x n face.
pub fn rotations(n: usize, x: usize, y: usize) -> [(usize, usize); 4] {
    [(x, y), (n - 1 - y, x), (n - 1 - x, n - 1 - y), (y, n - 1 - x)]
}

/// Positions of cluster `(x, y)`: face-major in the order U, D, L, R, F, B,
/// then the four rotations. Clusters whose coordinates are fixed by some
/// rotation repeat positions; see [`distinct_positions`].
pub fn natural_positions(n: usize, x: usize, y: usize) -> [FaceCoord; 24] {
    let mut out = [FaceCoord::new(Face::U, 0, 0); 24];
    for (fi, face) in Face::ALL.into_iter().enumerate() {
        for (ri, (a, b)) in rotations(n, x, y).into_iter().enumerate() {
            out[4 * fi + ri] = FaceCoord::new(face, a, b);
        }
    }
    out
}

pub fn distinct_positions(n: usize, x: usize, y: usize) -> Vec<FaceCoord> {
    let mut out: Vec<FaceCoord> = Vec::new();
    for p in natural_positions(n, x, y) {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Positions of an off-diagonal cluster `(x, y)` (`x != y`, both below
/// `n / 2`), face-major in the order U, D, L, R, F, B and then by the edge
/// each position is nearest to, in the face's own frame: left, bottom,
/// right, top. Unlike [`natural_positions`] this order is the same for
/// `(x, y)` and `(y, x)`.
pub fn side_positions(n: usize, x: usize, y: usize) -> [FaceCoord; 24] {
    assert!(x != y, "diagonal clusters have no side order");
    let m = x.min(y);
    let far = n - 1 - m;
    let rots = rotations(n, x, y);
    let mut out = [FaceCoord::new(Face::U, 0, 0); 24];
    for (fi, face) in Face::ALL.into_iter().enumerate() {
        let sides: [&dyn Fn(&(usize, usize)) -> bool; 4] =
            [&|p| p.0 == m, &|p| p.1 == m, &|p| p.0 == far, &|p| p.1 == far];
        for (si, side) in sides.iter().enumerate() {
            let (a, b) = *rots.iter().find(|p| side(p)).expect("one rotation per side");
            out[4 * fi + si] = FaceCoord::new(face, a, b);
        }
    }
    out
}

/// Canonical representative of the cluster holding `(x, y)`: the least
/// of its four rotations.
pub fn canonical(n: usize, x: usize, y: usize) -> (usize, usize) {
    rotations(n, x, y).into_iter().min().unwrap()
}
