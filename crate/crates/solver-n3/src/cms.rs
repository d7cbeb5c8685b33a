//! Move sequences written by layer type, so one sequence serves every
//! cluster `(x, y)` of the same shape.
//!
//! Position `i` of a sequence holds three types, at most one of them
//! usually set: a face move `F_a`, a layer move `RC_{b, x}` tied to the
//! cluster's x and a layer move `RC_{c, y}` tied to its y. Instantiation at
//! `(x, y)` emits them in that order.

use cube_core::{Axis, Move, MoveSequence, Turn};

/// A move of the outer layer at one end of an axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FType {
    pub axis: Axis,
    pub high: bool,
    pub turn: Turn,
}

/// A move of layer `i` (`far == false`) or layer `n - 1 - i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RcType {
    pub axis: Axis,
    pub far: bool,
    pub turn: Turn,
}

impl FType {
    pub fn at(self, n: usize) -> Move {
        Move::new(self.axis, if self.high { n - 1 } else { 0 }, self.turn)
    }
}

impl RcType {
    pub fn at(self, i: usize, n: usize) -> Move {
        Move::new(self.axis, if self.far { n - 1 - i } else { i }, self.turn)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClusterMoveSequence {
    pub a: Vec<Option<FType>>,
    pub b: Vec<Option<RcType>>,
    pub c: Vec<Option<RcType>>,
}

impl ClusterMoveSequence {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// Types each move of `seq` against the layers of cluster `(x, y)`.
    /// Fails if a move touches none of them or `x`, `y` and the outer
    /// layers are not pairwise distinct.
    pub fn from_moves(seq: &[Move], x: usize, y: usize, n: usize) -> Option<Self> {
        let classes = [0, x, y];
        for (i, &p) in classes.iter().enumerate() {
            for &q in &classes[i + 1..] {
                if p == q || p == n - 1 - q {
                    return None;
                }
            }
        }
        let mut out = ClusterMoveSequence::default();
        for &mv in seq {
            let (axis, turn, i) = (mv.axis, mv.turn, mv.index);
            let (mut a, mut b, mut c) = (None, None, None);
            if i == 0 || i == n - 1 {
                a = Some(FType { axis, high: i != 0, turn });
            } else if i == x || i == n - 1 - x {
                b = Some(RcType { axis, far: i != x, turn });
            } else if i == y || i == n - 1 - y {
                c = Some(RcType { axis, far: i != y, turn });
            } else {
                return None;
            }
            out.a.push(a);
            out.b.push(b);
            out.c.push(c);
        }
        Some(out)
    }

    pub fn instantiate(&self, x: usize, y: usize, n: usize) -> MoveSequence {
        let mut out = Vec::new();
        for i in 0..self.len() {
            out.extend(self.a[i].map(|t| t.at(n)));
            out.extend(self.b[i].map(|t| t.at(x, n)));
            out.extend(self.c[i].map(|t| t.at(y, n)));
        }
        out
    }

    /// The face-move types alone.
    pub fn project_a(&self, n: usize) -> MoveSequence {
        self.a.iter().flatten().map(|t| t.at(n)).collect()
    }

    pub fn project_b(&self, x: usize, n: usize) -> MoveSequence {
        self.b.iter().flatten().map(|t| t.at(x, n)).collect()
    }

    pub fn project_c(&self, y: usize, n: usize) -> MoveSequence {
        self.c.iter().flatten().map(|t| t.at(y, n)).collect()
    }

    pub fn extend(&mut self, other: &ClusterMoveSequence) {
        self.a.extend_from_slice(&other.a);
        self.b.extend_from_slice(&other.b);
        self.c.extend_from_slice(&other.c);
    }
}
