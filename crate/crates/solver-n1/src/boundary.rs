//! Corner, edge, cross and center clusters.
//!
//! The clusters met by rows and columns `0`, `n/2` (odd n) and `n-1` form a
//! puzzle of at most 3 x 3 x 1, solved by breadth-first search. Edge clusters
//! then go one at a time with sequences that touch any other edge line an
//! even number of times, and cross clusters last.

use std::collections::{HashMap, VecDeque};

use cube_core::{invert_sequence, legal_moves, CubeState, Dims, Face, Layout, Move, MoveSequence, StickerPos};

use crate::cluster::{
    check_shape, classify_cluster, cluster_solution, flat, instantiate, is_blue, GenMove, N1Cluster,
};
use crate::error::N1Error;

/// Line indices kept by the reduced puzzle.
fn frame_lines(n: usize) -> Vec<usize> {
    match n {
        1 => vec![0],
        _ if n % 2 == 1 => vec![0, n / 2, n - 1],
        _ => vec![0, n - 1],
    }
}

fn map_sticker(small: &Layout, big: &Layout, lines: &[usize], idx: usize) -> usize {
    let p = small.sticker_pos(idx);
    let cubie = [lines[p.cubie[0]], lines[p.cubie[1]], p.cubie[2]];
    big.index_of(StickerPos { cubie, face: p.face })
}

fn reduced(state: &CubeState, lines: &[usize]) -> CubeState {
    let k = lines.len();
    let small = Layout::new(Dims::new(k, k, 1).unwrap());
    let stickers = (0..small.len())
        .map(|i| state.stickers()[map_sticker(&small, state.layout(), lines, i)])
        .collect();
    CubeState::from_stickers(small.dims, stickers).unwrap()
}

/// Shortest move sequence bringing a small flat puzzle to a solved state
/// with the up color on top.
fn bfs_solve(start: &CubeState) -> Option<MoveSequence> {
    let done = |s: &CubeState| s.is_solved() && s.get(Face::U, 0, 0) == Face::U;
    if done(start) {
        return Some(Vec::new());
    }
    let moves = legal_moves(start.dims());
    let mut parent: HashMap<CubeState, (CubeState, Move)> = HashMap::new();
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(s) = queue.pop_front() {
        for &mv in &moves {
            let t = s.apply_move(mv).unwrap();
            if t == *start || parent.contains_key(&t) {
                continue;
            }
            parent.insert(t.clone(), (s.clone(), mv));
            if done(&t) {
                let mut seq = Vec::new();
                let mut cur = t;
                while let Some((p, mv)) = parent.get(&cur) {
                    seq.push(*mv);
                    cur = p.clone();
                }
                seq.reverse();
                return Some(seq);
            }
            queue.push_back(t);
        }
    }
    None
}

/// Every sticker of the cubies in a cluster.
fn cluster_stickers(layout: &Layout, c: N1Cluster) -> Vec<usize> {
    let n = c.n;
    let mut out = Vec::new();
    for (x, y) in c.positions() {
        let mut faces = vec![Face::U, Face::D];
        if x == 0 {
            faces.push(Face::L);
        }
        if x == n - 1 {
            faces.push(Face::R);
        }
        if y == 0 {
            faces.push(Face::F);
        }
        if y == n - 1 {
            faces.push(Face::B);
        }
        for face in faces {
            out.push(layout.index_of(StickerPos { cubie: [x, y, 0], face }));
        }
    }
    out
}

fn colors_at(state: &CubeState, idx: &[usize]) -> Vec<Face> {
    idx.iter().map(|&i| state.stickers()[i]).collect()
}

/// Sequences for an edge cluster with all top stickers correct, for the
/// edge along row 0. The column-edge versions swap rows and columns.
const EDGE_ROW: [&[GenMove]; 4] = {
    use GenMove::*;
    [&[], &[H1, V1, H1], &[H1, V2, H1], &[H1, V1, V2, H1]]
};
const EDGE_COL: [&[GenMove]; 4] = {
    use GenMove::*;
    [&[], &[V1, H1, V1], &[V1, H2, V1], &[V1, H1, H2, V1]]
};
const CROSS_COL: &[GenMove] = {
    use GenMove::*;
    &[H1, V, H1, V]
};
const CROSS_ROW: &[GenMove] = {
    use GenMove::*;
    &[V1, H, V1, H]
};

struct Work {
    state: CubeState,
    seq: MoveSequence,
}

impl Work {
    fn run(&mut self, moves: &[Move]) {
        self.state.apply_sequence_mut(moves).expect("legal boundary moves");
        self.seq.extend_from_slice(moves);
    }
}

/// Solves every cluster touching row or column 0, `n-1` or, for odd `n`,
/// the median row and column. Inner clusters are disturbed along the way.
pub fn solve_boundary(state: &CubeState) -> Result<MoveSequence, N1Error> {
    let n = check_shape(state)?;
    let mut w = Work {
        state: state.clone(),
        seq: Vec::new(),
    };
    let lines = frame_lines(n);
    let small = reduced(&w.state, &lines);
    let sub = bfs_solve(&small)
        .ok_or_else(|| N1Error::UnsolvableBoundary("corner and center clusters".into()))?;
    let lifted: MoveSequence = sub
        .iter()
        .map(|mv| Move::new(mv.axis, lines[mv.index], mv.turn))
        .collect();
    w.run(&lifted);
    if n <= 3 {
        return Ok(w.seq);
    }

    // the frame fixes which color each side face ends with
    let solved_small = small.apply_sequence(&sub).unwrap();
    let mut target = CubeState::solved(flat(n));
    for f in [Face::L, Face::R, Face::F, Face::B] {
        let color = solved_small.get(f, 0, 0);
        for i in target.layout().face_range(f) {
            target.stickers_mut()[i] = color;
        }
    }

    for i in 1..n / 2 {
        for (c, table) in [(N1Cluster::new(n, i, 0), &EDGE_ROW), (N1Cluster::new(n, 0, i), &EDGE_COL)] {
            let cfg = classify_cluster(&w.state, c)?;
            w.run(&cluster_solution(cfg, c));
            let idx = cluster_stickers(w.state.layout(), c);
            let now = colors_at(&w.state, &idx);
            let fix = table
                .iter()
                .map(|g| instantiate(g, c))
                .find(|seq| colors_at(&target.apply_sequence(&invert_sequence(seq)).unwrap(), &idx) == now)
                .ok_or_else(|| N1Error::UnsolvableBoundary(format!("edge cluster ({}, {})", c.x, c.y)))?;
            w.run(&fix);
        }
    }

    if n % 2 == 1 {
        let mid = n / 2;
        for i in 1..mid {
            for (c, gens) in [(N1Cluster::new(n, mid, i), CROSS_COL), (N1Cluster::new(n, i, mid), CROSS_ROW)] {
                let pos = c.positions();
                let blue = [is_blue(&w.state, pos[0].0, pos[0].1)?, is_blue(&w.state, pos[1].0, pos[1].1)?];
                match blue {
                    [false, false] => {}
                    [true, true] => w.run(&instantiate(gens, c)),
                    _ => return Err(N1Error::UnrecognizedClusterPattern { x: c.x, y: c.y }),
                }
            }
        }
    }
    Ok(w.seq)
}

/// Whether every boundary cluster of `state` is solved relative to the
/// colors its corner cluster shows.
pub fn boundary_solved(state: &CubeState) -> bool {
    let n = state.dims().l;
    let sides = [Face::L, Face::R, Face::F, Face::B];
    let side_ok = sides.iter().all(|&f| {
        let r = state.layout().face_range(f);
        let first = state.stickers()[r.start];
        state.stickers()[r].iter().all(|&c| c == first)
    });
    let on_frame = |i: usize| i == 0 || i == n - 1 || (n % 2 == 1 && i == n / 2);
    side_ok
        && (0..n).all(|y| {
            (0..n).all(|x| !(on_frame(x) || on_frame(y)) || state.get(Face::U, y, x) == Face::U)
        })
}
