//! The full n x n x n solver and the counting lower bound.

use std::collections::{BTreeSet, HashMap};

use cube_core::{counting_lower_bound, simplify, CubeState, Move, MoveSequence, MoveTable};
use num_bigint::BigUint;

use crate::boundary::{fix_parity, solve_wings, target_colors, wing_indices};
use crate::bulk::{bulk_solve_grouped_n3, solved_coloring};
use crate::cluster::{cluster_positions, simulated_toolkit, ClusterColoring, Toolkit};
use crate::error::N3Error;
use crate::facecoord::side_positions;
use crate::perm::Perm;

pub fn check_shape(state: &CubeState) -> Result<usize, N3Error> {
    let d = state.dims();
    if !d.is_cube() {
        return Err(N3Error::WrongShape(d.to_string()));
    }
    Ok(d.l)
}

/// Inner indices `1..n/2`, split into contiguous groups of
/// `ceil(sqrt(n / 2))`.
pub fn index_groups(n: usize) -> Vec<Vec<usize>> {
    let k = ((n / 2) as f64).sqrt().ceil().max(1.0) as usize;
    let idx: Vec<usize> = wing_indices(n).collect();
    idx.chunks(k).map(|c| c.to_vec()).collect()
}

/// Solves clusters one at a time, keeping the working state current.
struct Worker {
    n: usize,
    state: CubeState,
    moves: MoveTable,
    out: MoveSequence,
    kits: HashMap<Vec<Perm>, Toolkit>,
    target: [cube_core::Color; 6],
}

impl Worker {
    fn new(state: &CubeState) -> Result<Self, N3Error> {
        Ok(Worker {
            n: state.dims().l,
            state: state.clone(),
            moves: MoveTable::new(state.dims()),
            out: Vec::new(),
            kits: HashMap::new(),
            target: target_colors(state)?,
        })
    }

    fn apply(&mut self, seq: &[Move]) {
        self.moves.apply_sequence(seq, self.state.stickers_mut());
        self.out.extend_from_slice(seq);
    }

    /// Solves cluster `(x, y)`: an inner cluster, or `(x, n / 2)` on odd n.
    fn solve_one(&mut self, x: usize, y: usize) -> Result<(), N3Error> {
        let n = self.n;
        let off_diagonal = x != y && y != n / 2;
        let positions = if y == n / 2 && n % 2 == 1 { side_positions(n, x, y).to_vec() } else { cluster_positions(x, y, n)? };
        let d = ClusterColoring::read(&self.state, &positions);
        let solved = ClusterColoring::solved(&positions, &self.target);
        if d == solved {
            return Ok(());
        }
        let word = if off_diagonal {
            Toolkit::frozen().solve_word(&d, &solved)?
        } else {
            let kit = simulated_toolkit(&self.moves, &positions, x, y)?;
            let kit = self.kits.entry(kit.gens.clone()).or_insert(kit);
            kit.solve_word(&d, &solved)?
        };
        let seq: MoveSequence = word.iter().flat_map(|g| g.moves(x, y, n)).collect();
        self.apply(&seq);
        Ok(())
    }

    fn boundary(&mut self) -> Result<(), N3Error> {
        let seq = fix_parity(&self.state)?;
        self.apply(&seq);
        let seq = solve_wings(&self.state)?;
        self.apply(&seq);
        if self.n % 2 == 1 {
            for x in wing_indices(self.n) {
                self.solve_one(x, self.n / 2)?;
            }
        }
        Ok(())
    }
}

/// Boundary, then the inner clusters. Off-diagonal group pairs are solved
/// in bulk per coloring present, the clusters within one group singly.
pub fn solve_n3(state: &CubeState) -> Result<MoveSequence, N3Error> {
    let n = check_shape(state)?;
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut w = Worker::new(state)?;
    w.boundary()?;
    let groups = index_groups(n);
    if !groups.is_empty() {
        let solved = solved_coloring(&w.state)?;
        for (i, gi) in groups.iter().enumerate() {
            for (j, gj) in groups.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut present = BTreeSet::new();
                for &x in gi {
                    for &y in gj {
                        let d = ClusterColoring::read(&w.state, &cluster_positions(x, y, n)?);
                        if d != solved {
                            present.insert(d);
                        }
                    }
                }
                for d in present {
                    let seq = bulk_solve_grouped_n3(&w.state, gi, gj, &d)?;
                    w.apply(&seq);
                }
            }
        }
        for g in &groups {
            for &x in g {
                for &y in g {
                    w.solve_one(x, y)?;
                }
            }
        }
    }
    check_solved(&w.state)?;
    Ok(simplify(&w.out))
}

/// Same boundary, then every inner cluster on its own.
pub fn naive_solve_n3(state: &CubeState) -> Result<MoveSequence, N3Error> {
    let n = check_shape(state)?;
    if n < 2 {
        return Ok(Vec::new());
    }
    let mut w = Worker::new(state)?;
    w.boundary()?;
    for x in wing_indices(n) {
        for y in wing_indices(n) {
            w.solve_one(x, y)?;
        }
    }
    check_solved(&w.state)?;
    Ok(simplify(&w.out))
}

fn check_solved(state: &CubeState) -> Result<(), N3Error> {
    if state.is_solved() {
        Ok(())
    } else {
        Err(N3Error::Unsolvable("stickers remain out of place".into()))
    }
}

/// Colorings of one cluster: `24! / (4!)^6`.
pub fn cluster_colorings() -> BigUint {
    let fact = |k: u32| (1..=k).fold(BigUint::from(1u32), |acc, i| acc * i);
    fact(24) / fact(4).pow(6)
}

/// Fewest moves that can solve every n x n x n state, by counting: one less
/// than the least `c` with `(6n)^c` at least the number of inner colorings.
pub fn lower_bound_n3(n: usize) -> u64 {
    let inner = (n / 2).saturating_sub(1) as u64;
    counting_lower_bound(&cluster_colorings(), inner * inner, 6 * n as u64)
}
