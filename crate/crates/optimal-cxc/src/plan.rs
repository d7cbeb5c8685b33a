//! Short moves for one cluster once the long moves are fixed.

use cube_core::{CubeState, Layout, Move, MoveSequence};
use rustc_hash::FxHashMap;

use crate::model::{local_map, ZCluster};
use crate::pack::{pack, PackedPerm};

/// Short moves for each of the `k + 1` gaps around `k` long moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortPlan {
    pub gaps: Vec<Vec<Move>>,
}

impl ShortPlan {
    pub fn cost(&self) -> usize {
        self.gaps.iter().map(Vec::len).sum()
    }
}

pub(crate) fn cluster_key(state: &CubeState, positions: &[usize]) -> u128 {
    pack(positions.iter().map(|&p| state.stickers()[p]))
}

/// Fewest short moves on `cluster` that, woven into `skeleton`, leave the
/// cluster as in `target`. Tries every combination in every gap, merging
/// paths that meet in the same cluster state. `None` if nothing works.
pub fn cluster_short_plan(
    skeleton: &[Move],
    cluster: &ZCluster,
    state: &CubeState,
    target: &CubeState,
) -> Option<ShortPlan> {
    let dims = state.dims();
    let layout = Layout::new(dims);
    let positions = cluster.positions(&layout);
    let perm = |mv| PackedPerm::new(&local_map(&layout, &positions, mv));
    let combos = cluster.combos(dims);
    let combo_perms: Vec<Vec<PackedPerm>> = combos.iter().map(|c| c.iter().map(|&mv| perm(mv)).collect()).collect();
    let long_perms: Vec<PackedPerm> = skeleton.iter().map(|&mv| perm(mv)).collect();

    // layers[g]: state before gap g -> (cost, state before gap g - 1, combo)
    let mut layers: Vec<FxHashMap<u128, (usize, u128, usize)>> = Vec::new();
    let mut current = FxHashMap::default();
    current.insert(cluster_key(state, &positions), (0, 0, 0));
    for g in 0..=skeleton.len() {
        let mut next: FxHashMap<u128, (usize, u128, usize)> = FxHashMap::default();
        for (&key, &(cost, _, _)) in &current {
            for (k, perms) in combo_perms.iter().enumerate() {
                let mut s = perms.iter().fold(key, |acc, p| p.apply(acc));
                if let Some(long) = long_perms.get(g) {
                    s = long.apply(s);
                }
                let c = cost + combos[k].len();
                let e = next.entry(s).or_insert((usize::MAX, 0, 0));
                if c < e.0 {
                    *e = (c, key, k);
                }
            }
        }
        layers.push(std::mem::replace(&mut current, next));
    }
    let mut key = cluster_key(target, &positions);
    current.get(&key)?;
    let mut gaps = vec![Vec::new(); skeleton.len() + 1];
    let mut layer = &current;
    for g in (0..=skeleton.len()).rev() {
        let &(_, prev, k) = &layer[&key];
        gaps[g] = combos[k].clone();
        key = prev;
        layer = &layers[g];
    }
    Some(ShortPlan { gaps })
}

/// Long moves with every cluster's gap moves in front of them.
pub fn interleave(skeleton: &[Move], plans: &[ShortPlan]) -> MoveSequence {
    let mut out = Vec::new();
    for g in 0..=skeleton.len() {
        for p in plans {
            out.extend_from_slice(&p.gaps[g]);
        }
        out.extend(skeleton.get(g));
    }
    out
}
