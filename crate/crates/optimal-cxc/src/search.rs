//! Exact solving. Skeletons of long moves are enumerated depth first under
//! an iteratively deepened bound on the total length; along each skeleton
//! every cluster keeps its own frontier of reachable states with the fewest
//! short moves that reach them.
//!
//! Two per-cluster distances prune the search: short moves needed when long
//! moves are free, and moves needed when both kinds count. Future long
//! moves are shared, so a bound may charge them to one cluster only.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};
use std::time::Instant;

use cube_core::{CubeState, Dims, Layout, Move, MoveSequence};
use rustc_hash::FxHashMap;

use crate::error::OptError;
use crate::model::{check_dims, local_map, long_moves, solved_states, ZCluster};
use crate::pack::PackedPerm;
use crate::plan::cluster_key;

/// Largest cluster state space the solver will tabulate.
pub const SPACE_CAP: usize = 20_000_000;

const FAR: u8 = u8::MAX;

#[derive(Debug, Clone, Default)]
pub struct Limits {
    /// Give up past this total length. Defaults to the proven bound.
    pub max_length: Option<usize>,
    pub deadline: Option<Instant>,
}

/// Reachable states of one cluster, with transitions and distances.
#[derive(Debug)]
struct Space {
    positions: Vec<usize>,
    combos: Vec<Vec<Move>>,
    combo_cost: Vec<u8>,
    n_long: usize,
    index: FxHashMap<u128, u32>,
    long_next: Vec<u32>,
    combo_next: Vec<u32>,
    /// State of this cluster in each solved orientation.
    goals: Vec<u32>,
    h_short: Vec<u8>,
    h_all: Vec<u8>,
}

impl Space {
    fn build(dims: Dims, cluster: &ZCluster, longs: &[Move], solved: &[CubeState]) -> Result<Space, OptError> {
        let layout = Layout::new(dims);
        let positions = cluster.positions(&layout);
        let perm = |mv| PackedPerm::new(&local_map(&layout, &positions, mv));
        let combos = cluster.combos(dims);
        let combo_cost: Vec<u8> = combos.iter().map(|c| c.len() as u8).collect();
        let long_perms: Vec<PackedPerm> = longs.iter().map(|&mv| perm(mv)).collect();
        let combo_perms: Vec<Vec<PackedPerm>> =
            combos.iter().map(|c| c.iter().map(|&mv| perm(mv)).collect()).collect();
        let singles: Vec<usize> = (0..combos.len()).filter(|&k| combo_cost[k] == 1).collect();

        let mut keys: Vec<u128> = Vec::new();
        let mut index = FxHashMap::default();
        for s in solved {
            let k = cluster_key(s, &positions);
            if !index.contains_key(&k) {
                index.insert(k, keys.len() as u32);
                keys.push(k);
            }
        }
        let goals: Vec<u32> = solved.iter().map(|s| index[&cluster_key(s, &positions)]).collect();
        let mut i = 0;
        while i < keys.len() {
            let key = keys[i];
            let nexts = long_perms.iter().map(|p| p.apply(key)).chain(singles.iter().map(|&k| combo_perms[k][0].apply(key)));
            for next in nexts.collect::<Vec<_>>() {
                if !index.contains_key(&next) {
                    if keys.len() >= SPACE_CAP {
                        return Err(OptError::CapExceeded(format!(
                            "cluster {} has more than {SPACE_CAP} states",
                            cluster.index
                        )));
                    }
                    index.insert(next, keys.len() as u32);
                    keys.push(next);
                }
            }
            i += 1;
        }

        let mut long_next = Vec::with_capacity(keys.len() * longs.len());
        let mut combo_next = Vec::with_capacity(keys.len() * combos.len());
        for &key in &keys {
            long_next.extend(long_perms.iter().map(|p| index[&p.apply(key)]));
            combo_next.extend(combo_perms.iter().map(|ps| index[&ps.iter().fold(key, |acc, p| p.apply(acc))]));
        }

        let mut space = Space {
            positions,
            combos,
            combo_cost,
            n_long: longs.len(),
            index,
            long_next,
            combo_next,
            goals,
            h_short: Vec::new(),
            h_all: Vec::new(),
        };
        space.h_short = space.distances(0);
        space.h_all = space.distances(1);
        Ok(space)
    }

    fn len(&self) -> usize {
        self.index.len()
    }

    fn long(&self, s: u32, j: usize) -> u32 {
        self.long_next[s as usize * self.n_long + j]
    }

    fn combo(&self, s: u32, k: usize) -> u32 {
        self.combo_next[s as usize * self.combos.len() + k]
    }

    /// Distance to the nearest goal with long moves costing `long_cost`
    /// (0 or 1) and single short moves costing 1. Moves come with their
    /// inverses, so searching out from the goals is enough.
    fn distances(&self, long_cost: u8) -> Vec<u8> {
        let mut dist = vec![FAR; self.len()];
        let mut queue = VecDeque::new();
        for &g in &self.goals {
            if dist[g as usize] != 0 {
                dist[g as usize] = 0;
                queue.push_back(g);
            }
        }
        while let Some(s) = queue.pop_front() {
            let d = dist[s as usize];
            for j in 0..self.n_long {
                let t = self.long(s, j);
                if d + long_cost < dist[t as usize] {
                    dist[t as usize] = d + long_cost;
                    if long_cost == 0 {
                        queue.push_front(t);
                    } else {
                        queue.push_back(t);
                    }
                }
            }
            for k in (0..self.combos.len()).filter(|&k| self.combo_cost[k] == 1) {
                let t = self.combo(s, k);
                if d + 1 < dist[t as usize] {
                    dist[t as usize] = d + 1;
                    queue.push_back(t);
                }
            }
        }
        dist
    }
}

/// Tables for one set of dimensions, reusable across states.
#[derive(Debug)]
pub struct OptimalSolver {
    dims: Dims,
    longs: Vec<Move>,
    spaces: Vec<Space>,
    guard: usize,
}

/// The proven bounds: long moves at most `(c1 c2)! 2^(1 + 3 c1 c2 + 8 (c1 + c2))`,
/// short moves per cluster at most `2^(2 c1 c2 + 8 (c1 + c2)) - 1`.
pub fn length_guard(dims: Dims) -> u128 {
    let (a, s) = ((dims.l * dims.m) as u32, (dims.l + dims.m) as u32);
    let fact: u128 = (1..=a as u128).product();
    let long = fact.saturating_mul(1u128.checked_shl(1 + 3 * a + 8 * s).unwrap_or(u128::MAX));
    let short = 1u128.checked_shl(2 * a + 8 * s).unwrap_or(u128::MAX) - 1;
    long.saturating_add(short.saturating_mul(dims.n.div_ceil(2) as u128))
}

impl OptimalSolver {
    pub fn new(dims: Dims) -> Result<Self, OptError> {
        check_dims(dims)?;
        let longs = long_moves(dims);
        let solved = solved_states(dims);
        let spaces = ZCluster::all(dims.n)
            .iter()
            .map(|c| Space::build(dims, c, &longs, &solved))
            .collect::<Result<_, _>>()?;
        let guard = usize::try_from(length_guard(dims)).unwrap_or(usize::MAX);
        Ok(OptimalSolver { dims, longs, spaces, guard })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// Reachable states per cluster.
    pub fn cluster_sizes(&self) -> Vec<usize> {
        self.spaces.iter().map(Space::len).collect()
    }

    pub fn solve(&self, state: &CubeState) -> Result<MoveSequence, OptError> {
        self.solve_with(state, &Limits::default())
    }

    pub fn solve_with(&self, state: &CubeState, limits: &Limits) -> Result<MoveSequence, OptError> {
        if state.dims() != self.dims {
            return Err(OptError::WrongShape(state.dims().to_string()));
        }
        let mut start = Vec::new();
        for (i, sp) in self.spaces.iter().enumerate() {
            let s = *sp
                .index
                .get(&cluster_key(state, &sp.positions))
                .ok_or_else(|| OptError::Unsolvable(format!("cluster {i} is not reachable")))?;
            start.push(s);
        }
        let mut search = Search::new(self, &start, limits);
        let max = limits.max_length.unwrap_or(self.guard).min(self.guard);
        let mut bound = search.lower_bound(0);
        loop {
            if bound > max {
                return Err(OptError::CapExceeded(format!("no solution of length at most {max}")));
            }
            if let Some(seq) = search.run(bound)? {
                debug_assert!(state.apply_sequence(&seq).map(|s| s.is_solved()).unwrap_or(false));
                return Ok(seq);
            }
            bound += 1;
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    state: u32,
    cost: u8,
    parent: u32,
    combo: u8,
}

struct Search<'a> {
    solver: &'a OptimalSolver,
    /// `layers[c][d]`: cluster `c` after `d` long moves, before gap `d`.
    layers: Vec<Vec<Vec<Entry>>>,
    skeleton: Vec<usize>,
    slot: Vec<Vec<u32>>,
    mark: Vec<Vec<u32>>,
    stamp: u32,
    limits: &'a Limits,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(solver: &'a OptimalSolver, start: &[u32], limits: &'a Limits) -> Self {
        let layers = start.iter().map(|&s| vec![vec![Entry { state: s, cost: 0, parent: 0, combo: 0 }]]).collect();
        Search {
            solver,
            layers,
            skeleton: Vec::new(),
            slot: solver.spaces.iter().map(|sp| vec![0; sp.len()]).collect(),
            mark: solver.spaces.iter().map(|sp| vec![0; sp.len()]).collect(),
            stamp: 0,
            limits,
            nodes: 0,
        }
    }

    fn spaces(&self) -> &'a [Space] {
        &self.solver.spaces
    }

    /// Least of `cost + h` over the top layer of cluster `c`.
    fn best(&self, c: usize, h: &[u8]) -> usize {
        let top = self.layers[c].last().expect("at least one layer");
        top.iter().map(|e| e.cost as usize + h[e.state as usize] as usize).min().unwrap_or(usize::MAX)
    }

    fn lower_bound(&self, depth: usize) -> usize {
        let sp = self.spaces();
        let short: Vec<usize> = (0..sp.len()).map(|c| self.best(c, &sp[c].h_short)).collect();
        let total: usize = short.iter().sum();
        let mut lb = depth + total;
        for c in 0..sp.len() {
            lb = lb.max(depth + total - short[c] + self.best(c, &sp[c].h_all));
        }
        lb
    }

    fn run(&mut self, bound: usize) -> Result<Option<MoveSequence>, OptError> {
        for layers in &mut self.layers {
            layers.truncate(1);
        }
        self.skeleton.clear();
        self.dfs(bound)
    }

    fn dfs(&mut self, bound: usize) -> Result<Option<MoveSequence>, OptError> {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(t) = self.limits.deadline {
                if Instant::now() > t {
                    return Err(OptError::CapExceeded("time budget spent".into()));
                }
            }
        }
        let depth = self.skeleton.len();
        if let Some(seq) = self.finish(bound) {
            return Ok(Some(seq));
        }
        if depth + 1 > bound {
            return Ok(None);
        }
        let sp = self.spaces();
        let short: Vec<usize> = (0..sp.len()).map(|c| self.best(c, &sp[c].h_short)).collect();
        let total: usize = short.iter().sum();
        for j in 0..self.solver.longs.len() {
            let mut built = 0;
            for c in 0..sp.len() {
                let others = total - short[c];
                let Some(budget) = bound.checked_sub(depth + 1 + others) else { break };
                self.extend(c, j, budget);
                built += 1;
                if self.layers[c].last().is_some_and(Vec::is_empty) {
                    break;
                }
            }
            let complete = built == sp.len() && self.layers.iter().all(|l| l.last().is_some_and(|t| !t.is_empty()));
            if complete {
                self.skeleton.push(j);
                if self.lower_bound(depth + 1) <= bound {
                    if let Some(seq) = self.dfs(bound)? {
                        return Ok(Some(seq));
                    }
                }
                self.skeleton.pop();
            }
            for c in 0..built {
                self.layers[c].pop();
            }
        }
        Ok(None)
    }

    /// Pushes the layer of cluster `c` after one more gap and long move
    /// `j`. An entry survives if its moves so far plus the moves this
    /// cluster still needs fit in `budget`; the remaining long moves are
    /// charged here, so `budget` leaves out only the other clusters' short
    /// moves.
    fn extend(&mut self, c: usize, j: usize, budget: usize) {
        let sp = &self.solver.spaces[c];
        self.stamp += 1;
        let stamp = self.stamp;
        let (slot, mark) = (&mut self.slot[c], &mut self.mark[c]);
        let top = self.layers[c].last().expect("at least one layer");
        let mut next: Vec<Entry> = Vec::new();
        for (pi, e) in top.iter().enumerate() {
            for k in 0..sp.combos.len() {
                let cost = e.cost + sp.combo_cost[k];
                let s = sp.long(sp.combo(e.state, k), j);
                if cost as usize + sp.h_all[s as usize] as usize > budget {
                    continue;
                }
                let entry = Entry { state: s, cost, parent: pi as u32, combo: k as u8 };
                if mark[s as usize] == stamp {
                    let old = &mut next[slot[s as usize] as usize];
                    if cost < old.cost {
                        *old = entry;
                    }
                } else {
                    mark[s as usize] = stamp;
                    slot[s as usize] = next.len() as u32;
                    next.push(entry);
                }
            }
        }
        self.layers[c].push(next);
    }

    /// A solution of length at most `bound` that fills the last gap, if
    /// every cluster can reach the same orientation.
    fn finish(&self, bound: usize) -> Option<MoveSequence> {
        let sp = self.spaces();
        let orientations = sp[0].goals.len();
        let depth = self.skeleton.len();
        // best[c][g] = (cost, entry, combo)
        let mut best = vec![vec![(usize::MAX, 0, 0); orientations]; sp.len()];
        for (c, space) in sp.iter().enumerate() {
            for (i, e) in self.layers[c][depth].iter().enumerate() {
                if space.h_short[e.state as usize] > 2 {
                    continue;
                }
                for k in 0..space.combos.len() {
                    let s = space.combo(e.state, k);
                    let cost = e.cost as usize + space.combo_cost[k] as usize;
                    for g in 0..orientations {
                        if space.goals[g] == s && cost < best[c][g].0 {
                            best[c][g] = (cost, i, k);
                        }
                    }
                }
            }
        }
        let total = |g: usize| best.iter().try_fold(depth, |acc, b| (b[g].0 != usize::MAX).then(|| acc + b[g].0));
        let g = (0..orientations).filter_map(|g| total(g).map(|t| (t, g))).min()?.1;
        if total(g)? > bound {
            return None;
        }
        let mut gaps: Vec<Vec<&[Move]>> = vec![Vec::new(); depth + 1];
        for (c, space) in sp.iter().enumerate() {
            let (_, mut i, k) = best[c][g];
            gaps[depth].push(&space.combos[k]);
            for d in (1..=depth).rev() {
                let e = self.layers[c][d][i];
                gaps[d - 1].push(&space.combos[e.combo as usize]);
                i = e.parent as usize;
            }
        }
        let mut out = Vec::new();
        for (d, gap) in gaps.iter().enumerate() {
            for moves in gap {
                out.extend_from_slice(moves);
            }
            if let Some(&j) = self.skeleton.get(d) {
                out.push(self.solver.longs[j]);
            }
        }
        Some(out)
    }
}

fn solvers() -> &'static Mutex<HashMap<Dims, Arc<OptimalSolver>>> {
    static CACHE: OnceLock<Mutex<HashMap<Dims, Arc<OptimalSolver>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Shared solver for `dims`, built on first use.
pub fn solver_for(dims: Dims) -> Result<Arc<OptimalSolver>, OptError> {
    if let Some(s) = solvers().lock().expect("solver cache").get(&dims) {
        return Ok(s.clone());
    }
    let s = Arc::new(OptimalSolver::new(dims)?);
    solvers().lock().expect("solver cache").insert(dims, s.clone());
    Ok(s)
}

/// A shortest solving sequence.
pub fn optimal_solve(state: &CubeState) -> Result<MoveSequence, OptError> {
    solver_for(state.dims())?.solve(state)
}
