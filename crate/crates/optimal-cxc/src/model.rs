//! Long and short moves, z-clusters and the solved orientations of a
//! c1 x c2 x n box.
//!
//! A slice is short when it is perpendicular to z, long otherwise. Cluster
//! `i` is the pair of z-slices `i` and `n - 1 - i`, a single slice in the
//! middle of an odd box. Every short move touches exactly one cluster.

use std::collections::HashSet;

use cube_core::{legal_moves, sticker_map, Axis, CubeState, Dims, Layout, Move, Turn};

use crate::error::OptError;

pub const MAX_CROSS_SECTION: usize = 6;

/// Accepts `c1 x c2 x n` with `c1 != n != c2` and `c1 * c2 <= 6`.
pub fn check_dims(dims: Dims) -> Result<(), OptError> {
    if dims.l == dims.n || dims.m == dims.n || dims.l * dims.m > MAX_CROSS_SECTION {
        return Err(OptError::WrongShape(dims.to_string()));
    }
    Ok(())
}

pub fn is_long(mv: Move) -> bool {
    mv.axis != Axis::Z
}

/// Legal moves of the x and y slices. All of them are half turns.
pub fn long_moves(dims: Dims) -> Vec<Move> {
    legal_moves(dims).into_iter().filter(|&mv| is_long(mv)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZCluster {
    pub index: usize,
    /// One slice, or two in increasing order.
    pub slices: Vec<usize>,
}

impl ZCluster {
    pub fn new(index: usize, n: usize) -> Self {
        assert!(2 * index < n, "cluster {index} out of range for n = {n}");
        let far = n - 1 - index;
        let slices = if far == index { vec![index] } else { vec![index, far] };
        ZCluster { index, slices }
    }

    pub fn all(n: usize) -> Vec<ZCluster> {
        (0..n.div_ceil(2)).map(|i| ZCluster::new(i, n)).collect()
    }

    /// The cluster a short move acts on.
    pub fn of_move(mv: Move, n: usize) -> ZCluster {
        ZCluster::new(mv.index.min(n - 1 - mv.index), n)
    }

    /// Flat indices of the stickers on cubies in this cluster's slices.
    pub fn positions(&self, layout: &Layout) -> Vec<usize> {
        (0..layout.len()).filter(|&i| self.slices.contains(&layout.sticker_pos(i).cubie[2])).collect()
    }

    /// Short moves available in one gap: at most one turn per slice. The
    /// empty combination comes first.
    pub fn combos(&self, dims: Dims) -> Vec<Vec<Move>> {
        let mut out = vec![Vec::new()];
        for &z in &self.slices {
            let turns: Vec<Move> = [Turn::Ccw, Turn::Cw, Turn::Half]
                .into_iter()
                .map(|t| Move::new(Axis::Z, z, t))
                .filter(|mv| mv.is_legal(dims))
                .collect();
            out = out
                .into_iter()
                .flat_map(|base| {
                    let mut grown = vec![base.clone()];
                    grown.extend(turns.iter().map(|&mv| {
                        let mut v = base.clone();
                        v.push(mv);
                        v
                    }));
                    grown
                })
                .collect();
        }
        out
    }
}

/// Sticker map of `mv` restricted to `positions`, in local indices.
pub fn local_map(layout: &Layout, positions: &[usize], mv: Move) -> Vec<(usize, usize)> {
    let local = |p: usize| positions.binary_search(&p).ok();
    sticker_map(layout, mv)
        .into_iter()
        .filter_map(|(a, b)| Some((local(a)?, local(b).expect("moves keep clusters apart"))))
        .collect()
}

/// Solved states reachable by turning every slice of an axis at once.
pub fn solved_states(dims: Dims) -> Vec<CubeState> {
    let whole: Vec<Vec<Move>> = Axis::ALL
        .into_iter()
        .flat_map(|axis| {
            [Turn::Ccw, Turn::Cw, Turn::Half].into_iter().map(move |t| {
                (0..dims.along(axis)).map(|i| Move::new(axis, i, t)).collect::<Vec<_>>()
            })
        })
        .filter(|seq| seq.iter().all(|mv| mv.is_legal(dims)))
        .collect();
    let start = CubeState::solved(dims);
    let mut seen = HashSet::from([start.clone()]);
    let mut out = vec![start];
    let mut i = 0;
    while i < out.len() {
        for seq in &whole {
            let next = out[i].apply_sequence(seq).expect("legal moves");
            if seen.insert(next.clone()) {
                out.push(next);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert!(check_dims(Dims::new(2, 2, 3).unwrap()).is_ok());
        assert!(check_dims(Dims::new(1, 2, 3).unwrap()).is_ok());
        assert!(check_dims(Dims::new(2, 3, 2).unwrap()).is_err());
        assert!(check_dims(Dims::new(3, 3, 4).unwrap()).is_err());
        assert!(check_dims(Dims::cube(3)).is_err());
    }

    #[test]
    fn clusters_partition_the_stickers() {
        for (l, m, n) in [(1, 2, 3), (2, 2, 3), (2, 3, 5), (1, 1, 4)] {
            let dims = Dims::new(l, m, n).unwrap();
            let layout = Layout::new(dims);
            let mut all: Vec<usize> = ZCluster::all(n).iter().flat_map(|c| c.positions(&layout)).collect();
            all.sort();
            assert_eq!(all, (0..layout.len()).collect::<Vec<_>>());
        }
        assert_eq!(ZCluster::all(5)[2].slices, vec![2]);
        assert_eq!(ZCluster::of_move(Move::new(Axis::Z, 3, Turn::Half), 5).index, 1);
    }

    #[test]
    fn combos_per_gap() {
        let square = Dims::new(2, 2, 3).unwrap();
        assert_eq!(ZCluster::new(0, 3).combos(square).len(), 16);
        assert_eq!(ZCluster::new(1, 3).combos(square).len(), 4);
        let flat = Dims::new(1, 2, 4).unwrap();
        assert_eq!(ZCluster::new(1, 4).combos(flat).len(), 4);
        assert!(ZCluster::new(0, 4).combos(flat)[0].is_empty());
    }

    #[test]
    fn long_moves_are_half_turns() {
        let dims = Dims::new(2, 2, 3).unwrap();
        let longs = long_moves(dims);
        assert_eq!(longs.len(), 4);
        assert!(longs.iter().all(|mv| mv.turn == Turn::Half));
        assert!(long_moves(Dims::new(1, 1, 3).unwrap()).is_empty());
    }

    #[test]
    fn orientations() {
        assert_eq!(solved_states(Dims::new(2, 2, 3).unwrap()).len(), 8);
        assert_eq!(solved_states(Dims::new(1, 2, 3).unwrap()).len(), 4);
        assert!(solved_states(Dims::new(1, 2, 3).unwrap()).iter().all(|s| s.is_solved()));
    }
}
