//! Long configurations: where each 1 x 1 x n box of cubies sits and
//! whether it is flipped end for end. Long moves never break a box apart.

use std::collections::HashMap;

use cube_core::{Axis, Dims, Move};

use crate::error::OptError;
use crate::model::{long_moves, MAX_CROSS_SECTION};

/// Box `p = x + c1 * y` holds box `boxes[p]`, flipped if `flips[p]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LongConfig {
    pub boxes: Vec<u8>,
    pub flips: Vec<bool>,
}

impl LongConfig {
    pub fn identity(c1: usize, c2: usize) -> Self {
        LongConfig { boxes: (0..(c1 * c2) as u8).collect(), flips: vec![false; c1 * c2] }
    }

    /// Applies a long move. Panics on a z move.
    pub fn apply(&self, mv: Move, c1: usize, c2: usize) -> LongConfig {
        let mut out = self.clone();
        for x in 0..c1 {
            for y in 0..c2 {
                let to = match mv.axis {
                    Axis::X if x == mv.index => (x, c2 - 1 - y),
                    Axis::Y if y == mv.index => (c1 - 1 - x, y),
                    Axis::Z => panic!("{mv} is not a long move"),
                    _ => continue,
                };
                let (p, q) = (x + c1 * y, to.0 + c1 * to.1);
                out.boxes[q] = self.boxes[p];
                out.flips[q] = !self.flips[p];
            }
        }
        out
    }

    pub fn apply_sequence(&self, seq: &[Move], c1: usize, c2: usize) -> LongConfig {
        seq.iter().fold(self.clone(), |acc, &mv| acc.apply(mv, c1, c2))
    }
}

/// Long configurations reachable from the identity; `edges[v]` lists
/// `(move index, target)`.
#[derive(Debug, Clone)]
pub struct LongGraph {
    pub c1: usize,
    pub c2: usize,
    pub moves: Vec<Move>,
    pub nodes: Vec<LongConfig>,
    pub edges: Vec<Vec<(usize, usize)>>,
}

impl LongGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }
}

/// Breadth-first exploration from the identity, node 0.
pub fn long_config_graph(c1: usize, c2: usize) -> Result<LongGraph, OptError> {
    if c1 == 0 || c2 == 0 || c1 * c2 > MAX_CROSS_SECTION {
        return Err(OptError::CapExceeded(format!("cross-section {c1} x {c2} is too large")));
    }
    // Any length other than c1 and c2 gives the same long moves.
    let n = c1.max(c2) + 1;
    let moves = long_moves(Dims { l: c1, m: c2, n });
    let mut nodes = vec![LongConfig::identity(c1, c2)];
    let mut index = HashMap::from([(nodes[0].clone(), 0)]);
    let mut edges = Vec::new();
    let mut i = 0;
    while i < nodes.len() {
        let mut out = Vec::new();
        for (k, &mv) in moves.iter().enumerate() {
            let next = nodes[i].apply(mv, c1, c2);
            let j = *index.entry(next.clone()).or_insert_with(|| {
                nodes.push(next);
                nodes.len() - 1
            });
            out.push((k, j));
        }
        edges.push(out);
        i += 1;
    }
    Ok(LongGraph { c1, c2, moves, nodes, edges })
}

/// Closed walk from the identity around a doubled spanning tree. Its
/// composition is the identity and its suffixes realize every node.
pub fn eulerian_tour(graph: &LongGraph) -> Vec<Move> {
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; graph.nodes.len()];
    let mut children: Vec<Vec<(usize, usize)>> = vec![Vec::new(); graph.nodes.len()];
    let mut seen = vec![false; graph.nodes.len()];
    let mut queue = std::collections::VecDeque::from([0]);
    if !graph.nodes.is_empty() {
        seen[0] = true;
    }
    while let Some(v) = queue.pop_front() {
        for &(k, w) in &graph.edges[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((k, v));
                children[v].push((k, w));
                queue.push_back(w);
            }
        }
    }
    // Long moves are half turns, so each tree edge is walked back by the
    // same move.
    let mut tour = Vec::new();
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some((v, next)) = stack.pop() {
        if next < children.get(v).map_or(0, Vec::len) {
            stack.push((v, next + 1));
            let (k, w) = children[v][next];
            tour.push(graph.moves[k]);
            stack.push((w, 0));
        } else if let Some((k, _)) = parent[v] {
            tour.push(graph.moves[k]);
        }
    }
    tour
}
