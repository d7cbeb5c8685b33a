//! Exact distances by breadth-first search over whole sticker grids.

use std::collections::hash_map::Entry;

use cube_core::{legal_moves, sticker_map, CubeState, Dims, Face, Layout};
use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::OptError;
use crate::pack::{pack, unpack, PackedPerm, MAX_STICKERS};

pub const DEFAULT_ORACLE_CAP: usize = 100_000_000;

/// Distance to the nearest solved state for every state reachable from
/// the solved one.
#[derive(Debug, Clone)]
pub struct Oracle {
    dims: Dims,
    dist: FxHashMap<u128, u8>,
    goals: usize,
    diameter: u32,
}

fn maps(dims: Dims) -> Vec<PackedPerm> {
    let layout = Layout::new(dims);
    legal_moves(dims).into_iter().map(|mv| PackedPerm::new(&sticker_map(&layout, mv))).collect()
}

fn looks_solved(layout: &Layout, key: u128) -> bool {
    let colors = unpack(key, layout.len());
    let mut seen = [false; 6];
    Face::ALL.iter().all(|&f| {
        let r = layout.face_range(f);
        let c = colors[r.start];
        let ok = colors[r].iter().all(|&x| x == c) && !seen[c.index()];
        seen[c.index()] = true;
        ok
    })
}

impl Oracle {
    /// Fails with `CapExceeded` once more than `cap` states turn up.
    pub fn build(dims: Dims, cap: usize) -> Result<Self, OptError> {
        let layout = Layout::new(dims);
        if layout.len() > MAX_STICKERS {
            return Err(OptError::CapExceeded(format!("{dims} has more than {MAX_STICKERS} stickers")));
        }
        let maps = maps(dims);
        let start = pack(CubeState::solved(dims).stickers().iter().copied());

        // Every solved-looking state in the component is a goal.
        let mut seen = FxHashSet::default();
        seen.insert(start);
        let mut queue = vec![start];
        let mut goals = Vec::new();
        while let Some(k) = queue.pop() {
            if looks_solved(&layout, k) {
                goals.push(k);
            }
            for m in &maps {
                let next = m.apply(k);
                if seen.insert(next) {
                    if seen.len() > cap {
                        return Err(OptError::CapExceeded(format!("more than {cap} states")));
                    }
                    queue.push(next);
                }
            }
        }
        drop(seen);

        let mut dist: FxHashMap<u128, u8> = goals.iter().map(|&g| (g, 0)).collect();
        let mut layer = goals.clone();
        let mut depth = 0u32;
        while !layer.is_empty() {
            let mut next_layer = Vec::new();
            for k in layer {
                for m in &maps {
                    let next = m.apply(k);
                    if let Entry::Vacant(e) = dist.entry(next) {
                        e.insert((depth + 1) as u8);
                        next_layer.push(next);
                    }
                }
            }
            if !next_layer.is_empty() {
                depth += 1;
            }
            layer = next_layer;
        }
        Ok(Oracle { dims, dist, goals: goals.len(), diameter: depth })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// Number of reachable states.
    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Number of reachable solved states.
    pub fn goals(&self) -> usize {
        self.goals
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// `None` for a state of other dimensions or one not reachable.
    pub fn distance(&self, state: &CubeState) -> Option<u32> {
        if state.dims() != self.dims {
            return None;
        }
        self.dist.get(&pack(state.stickers().iter().copied())).map(|&d| d as u32)
    }

    /// Every reachable state with its distance, in no particular order.
    pub fn states(&self) -> impl Iterator<Item = (CubeState, u32)> + '_ {
        let len = Layout::new(self.dims).len();
        self.dist.iter().map(move |(&k, &d)| {
            let state = CubeState::from_stickers(self.dims, unpack(k, len)).expect("packed from a valid state");
            (state, d as u32)
        })
    }
}

/// Distance from `state` to solved, by a fresh search.
pub fn bfs_oracle(dims: Dims, state: &CubeState, cap: usize) -> Result<u32, OptError> {
    Oracle::build(dims, cap)?
        .distance(state)
        .ok_or_else(|| OptError::Unsolvable("not reachable from solved".into()))
}
