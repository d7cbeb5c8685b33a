//! The ten-move commutator that cycles three stickers of one cluster.
//!
//! A frame picks a front and an up face; the left face follows. In a frame,
//! `H_i` turns the i-th layer below the top clockwise as seen from above,
//! `V_j` the j-th layer from the left clockwise as seen from the left, and
//! `D_k` the k-th layer behind the front clockwise as seen from the front.
//! The sequence, applied left to right, is
//!
//! `V_j' D_k V_j D_k' H_0 D_k V_j' D_k' V_j H_0'`
//!
//! where `'` marks the counterclockwise turn.

use cube_core::{Axis, Face, Move, MoveSequence, Turn};

use crate::facecoord::{rotations, FaceCoord};

/// Signed unit vector as (axis index, positive?).
pub type Dir = (usize, bool);

pub fn dir_of(f: Face) -> Dir {
    let (a, p) = f.normal();
    (a.index(), p)
}

fn vec_of(d: Dir) -> [i32; 3] {
    let mut v = [0; 3];
    v[d.0] = if d.1 { 1 } else { -1 };
    v
}

pub fn cross(a: Dir, b: Dir) -> Dir {
    let (a, b) = (vec_of(a), vec_of(b));
    let c = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
    let i = (0..3).find(|&i| c[i] != 0).expect("perpendicular directions");
    (i, c[i] > 0)
}

/// The `k`-th layer counted from the side `dir` points to, turned
/// clockwise (`cw`) or counterclockwise as seen from that side.
pub fn layer_move(dir: Dir, k: usize, cw: bool, n: usize) -> Move {
    let index = if dir.1 { n - 1 - k } else { k };
    let turn = if dir.1 == cw { Turn::Cw } else { Turn::Ccw };
    Move::new(Axis::from_index(dir.0), index, turn)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frame {
    pub front: Face,
    pub up: Face,
}

impl Frame {
    pub fn left(self) -> Dir {
        cross(dir_of(self.front), dir_of(self.up))
    }

    /// Direction of increasing layer index for `V`: towards the right.
    pub fn right(self) -> Dir {
        cross(dir_of(self.up), dir_of(self.front))
    }

    /// Raw sequence with `V` layer `j` and `D` layer `k`.
    pub fn raw_sequence(self, j: usize, k: usize, n: usize) -> MoveSequence {
        let l = self.left();
        let f = dir_of(self.front);
        let u = dir_of(self.up);
        let v = |cw| layer_move(l, j, cw, n);
        let d = |cw| layer_move(f, k, cw, n);
        let h = |cw| layer_move(u, 0, cw, n);
        vec![v(false), d(true), v(true), d(false), h(true), d(true), v(false), d(false), v(true), h(false)]
    }

    /// Layers `(j, k)` for cluster `(x, y)`: the cycle then moves the
    /// cluster's stickers on the left side of the up face, the front side
    /// of the up face and the left side of the front face.
    pub fn layers_for(self, x: usize, y: usize, n: usize) -> (usize, usize) {
        let m = x.min(y);
        rotations(n, x, y)
            .into_iter()
            .map(|(a, b)| {
                let p = FaceCoord::new(self.front, a, b).sticker(n);
                let along = |d: Dir| if d.1 { p.cubie[d.0] } else { n - 1 - p.cubie[d.0] };
                (along(self.right()), along(dir_of(self.up)))
            })
            .filter(|&(j, _)| j == m)
            .min()
            .expect("some rotation is nearest the left edge")
    }

    /// The commutator for cluster `(x, y)` in this frame.
    pub fn sequence(self, x: usize, y: usize, n: usize) -> MoveSequence {
        let (j, k) = self.layers_for(x, y, n);
        self.raw_sequence(j, k, n)
    }
}

/// The 24 frames: front in the order U, D, L, R, F, B, then each
/// perpendicular up face in the same order.
pub fn all_frames() -> Vec<Frame> {
    let mut out = Vec::with_capacity(24);
    for front in Face::ALL {
        for up in Face::ALL {
            if up != front && up != front.opposite() {
                out.push(Frame { front, up });
            }
        }
    }
    out
}
