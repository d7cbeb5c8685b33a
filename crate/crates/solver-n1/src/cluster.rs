//! Clusters of an n x n x 1 puzzle and their six reachable configurations.
//!
//! The puzzle lies in the xy-plane. Position `(x, y)` is the cubie in column
//! `x` and row `y`; its top sticker is `U[y][x]`. A row move is the 180
//! degree turn of y-slice `y`, a column move that of x-slice `x`.

use cube_core::{Axis, CubeState, Dims, Face, Move, MoveSequence, Turn};

use crate::error::N1Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClusterKind {
    Inner,
    Edge,
    Corner,
    Cross,
    EdgeCross,
    Center,
}

/// The cluster holding position `(x, y)` with `x, y <= n / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct N1Cluster {
    pub n: usize,
    pub x: usize,
    pub y: usize,
}

impl N1Cluster {
    pub fn new(n: usize, x: usize, y: usize) -> Self {
        assert!(x <= n / 2 && y <= n / 2, "cluster ({x}, {y}) out of range for n = {n}");
        assert!(n % 2 == 1 || (x < n / 2 && y < n / 2));
        N1Cluster { n, x, y }
    }

    fn is_mid(&self, i: usize) -> bool {
        self.n % 2 == 1 && i == self.n / 2
    }

    pub fn kind(&self) -> ClusterKind {
        let (x, y) = (self.x, self.y);
        match (x == 0, y == 0, self.is_mid(x), self.is_mid(y)) {
            (true, true, ..) => ClusterKind::Corner,
            (_, _, true, true) => ClusterKind::Center,
            (true, _, _, true) | (_, true, true, _) => ClusterKind::EdgeCross,
            (true, ..) | (_, true, ..) => ClusterKind::Edge,
            (_, _, true, _) | (_, _, _, true) => ClusterKind::Cross,
            _ => ClusterKind::Inner,
        }
    }

    /// Distinct positions of the cluster, in the order
    /// `(x,y), (x,n-1-y), (n-1-x,y), (n-1-x,n-1-y)` with duplicates dropped.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let (x, y, n) = (self.x, self.y, self.n);
        let mut out = Vec::with_capacity(4);
        for p in [(x, y), (x, n - 1 - y), (n - 1 - x, y), (n - 1 - x, n - 1 - y)] {
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }
}

/// Every cluster with `x, y < n / 2` away from the boundary.
pub fn inner_indices(n: usize) -> std::ops::Range<usize> {
    1..(n / 2).max(1)
}

/// Which top stickers of a four-cubie cluster show the bottom color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum N1ClusterState {
    Solved,
    BlueLeft,
    BlueRight,
    BlueUp,
    BlueDown,
    AllBlue,
}

impl N1ClusterState {
    pub const ALL: [N1ClusterState; 6] = [
        N1ClusterState::Solved,
        N1ClusterState::BlueLeft,
        N1ClusterState::BlueRight,
        N1ClusterState::BlueUp,
        N1ClusterState::BlueDown,
        N1ClusterState::AllBlue,
    ];

    /// Blue flags for `(x,y), (x,n-1-y), (n-1-x,y), (n-1-x,n-1-y)`.
    pub fn pattern(self) -> [bool; 4] {
        match self {
            N1ClusterState::Solved => [false; 4],
            N1ClusterState::BlueLeft => [true, true, false, false],
            N1ClusterState::BlueRight => [false, false, true, true],
            N1ClusterState::BlueUp => [true, false, true, false],
            N1ClusterState::BlueDown => [false, true, false, true],
            N1ClusterState::AllBlue => [true; 4],
        }
    }

    fn from_pattern(p: [bool; 4]) -> Option<Self> {
        N1ClusterState::ALL.into_iter().find(|s| s.pattern() == p)
    }

    /// Generalized moves that solve this configuration.
    pub fn solution(self) -> &'static [GenMove] {
        use GenMove::*;
        match self {
            N1ClusterState::Solved => &[],
            N1ClusterState::BlueLeft => &[V1, H1, V1, H1],
            N1ClusterState::BlueRight => &[V2, H1, V2, H1],
            N1ClusterState::BlueUp => &[H1, V1, H1, V1],
            N1ClusterState::BlueDown => &[H2, V1, H2, V1],
            N1ClusterState::AllBlue => &[H1, H2, V1, H1, H2, V1],
        }
    }
}

/// Row and column moves named relative to a cluster: `H1`/`H2` are rows
/// `y`/`n-1-y`, `V1`/`V2` columns `x`/`n-1-x`. `H` and `V` name the single
/// median row or column through a cross cluster.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GenMove {
    H1,
    H2,
    V1,
    V2,
    H,
    V,
}

impl GenMove {
    pub fn is_row(self) -> bool {
        matches!(self, GenMove::H1 | GenMove::H2 | GenMove::H)
    }

    /// Line index for a cluster-relative coordinate: `x` for column moves,
    /// `y` for row moves.
    pub fn line(self, n: usize, i: usize) -> usize {
        match self {
            GenMove::H1 | GenMove::V1 => i,
            GenMove::H2 | GenMove::V2 => n - 1 - i,
            GenMove::H | GenMove::V => n / 2,
        }
    }

    pub fn at(self, c: N1Cluster) -> Move {
        if self.is_row() {
            row(self.line(c.n, c.y))
        } else {
            col(self.line(c.n, c.x))
        }
    }
}

pub fn row(y: usize) -> Move {
    Move::new(Axis::Y, y, Turn::Half)
}

pub fn col(x: usize) -> Move {
    Move::new(Axis::X, x, Turn::Half)
}

pub fn instantiate(gens: &[GenMove], c: N1Cluster) -> MoveSequence {
    gens.iter().map(|g| g.at(c)).collect()
}

pub(crate) fn check_shape(state: &CubeState) -> Result<usize, N1Error> {
    let d = state.dims();
    if d.n != 1 || d.l != d.m {
        return Err(N1Error::WrongShape(d.to_string()));
    }
    Ok(d.l)
}

pub(crate) fn flat(n: usize) -> Dims {
    Dims::new(n, n, 1).expect("positive n")
}

/// Whether the top sticker at `(x, y)` shows the bottom color.
pub(crate) fn is_blue(state: &CubeState, x: usize, y: usize) -> Result<bool, N1Error> {
    match state.get(Face::U, y, x) {
        Face::U => Ok(false),
        Face::D => Ok(true),
        _ => Err(N1Error::UnrecognizedClusterPattern { x, y }),
    }
}

/// Configuration of a cluster judged by its top stickers. Accepts any
/// cluster with four distinct positions.
pub fn classify_cluster(state: &CubeState, c: N1Cluster) -> Result<N1ClusterState, N1Error> {
    let (x, y, n) = (c.x, c.y, c.n);
    let bad = || N1Error::UnrecognizedClusterPattern { x, y };
    if c.positions().len() != 4 {
        return Err(bad());
    }
    let mut p = [false; 4];
    for (flag, (px, py)) in p.iter_mut().zip([(x, y), (x, n - 1 - y), (n - 1 - x, y), (n - 1 - x, n - 1 - y)]) {
        *flag = is_blue(state, px, py).map_err(|_| bad())?;
    }
    N1ClusterState::from_pattern(p).ok_or_else(bad)
}

/// Concrete moves solving `cfg` at cluster `c` without disturbing any other
/// cluster.
pub fn cluster_solution(cfg: N1ClusterState, c: N1Cluster) -> MoveSequence {
    instantiate(cfg.solution(), c)
}
