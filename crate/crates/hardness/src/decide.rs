//! Existence of an ideal solution, decided over orderings of line moves.
//!
//! Every active line is turned twice, so it is an interval between its first
//! and second move. An important cluster on active row `y` and column `x`
//! fixes how the two intervals relate: BlueLeft needs
//! `x1 < y1 < x2 < y2`, BlueUp needs `y1 < x1 < y2 < x2`, and a solved
//! cluster needs the intervals nested or disjoint. The search keeps the
//! transitive closure of the forced precedences and branches on the four
//! ways of not crossing.

use std::collections::HashMap;

use cube_core::MoveSequence;
use solver_n1::N1ClusterState;

use crate::error::HardnessError;
use crate::instance::{line_moves, PuzzleInstance};
use crate::instance::Line;

pub const DEFAULT_DECIDE_CAP: u64 = 10_000_000;

/// The first (`second == false`) or second move of a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event {
    pub line: Line,
    pub second: bool,
}

impl Event {
    pub fn first(line: Line) -> Self {
        Event { line, second: false }
    }

    pub fn second(line: Line) -> Self {
        Event { line, second: true }
    }
}

/// An ideal move order: every active line twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub order: Vec<Line>,
}

impl Certificate {
    pub fn moves(&self) -> MoveSequence {
        line_moves(&self.order)
    }

    pub fn position(&self, e: Event) -> Option<usize> {
        let mut hits = self.order.iter().enumerate().filter(|(_, &l)| l == e.line).map(|(i, _)| i);
        let first = hits.next()?;
        if e.second {
            hits.next()
        } else {
            Some(first)
        }
    }
}

#[derive(Clone)]
struct Closure {
    words: usize,
    after: Vec<u64>,
    before: Vec<u64>,
}

impl Closure {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Closure { words, after: vec![0; n * words], before: vec![0; n * words] }
    }

    fn lt(&self, u: usize, v: usize) -> bool {
        self.after[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(bits: &[u64], i: usize, words: usize) -> Vec<usize> {
        let mut out = vec![i];
        for (w, &word) in bits[i * words..(i + 1) * words].iter().enumerate() {
            let mut b = word;
            while b != 0 {
                out.push(w * 64 + b.trailing_zeros() as usize);
                b &= b - 1;
            }
        }
        out
    }

    /// Adds `u < v` with everything it implies; false on a cycle.
    fn add(&mut self, u: usize, v: usize) -> bool {
        if u == v || self.lt(v, u) {
            return false;
        }
        if self.lt(u, v) {
            return true;
        }
        let w = self.words;
        let preds = Self::row(&self.before, u, w);
        let succs = Self::row(&self.after, v, w);
        for &p in &preds {
            for &s in &succs {
                self.after[p * w + s / 64] |= 1 << (s % 64);
                self.before[s * w + p / 64] |= 1 << (p % 64);
            }
        }
        true
    }

    /// Linear extension taking the lowest ready event each step.
    fn linearize(&self, n: usize) -> Vec<usize> {
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .find(|&e| !placed[e] && (0..n).all(|p| placed[p] || !self.lt(p, e)))
                .expect("closure is acyclic");
            placed[next] = true;
            out.push(next);
        }
        out
    }
}

type Prec = (usize, usize);

/// A solved cluster on lines `a` and `b`: the four non-crossing orders.
fn non_crossing(a: usize, b: usize) -> [Vec<Prec>; 4] {
    let (a1, a2, b1, b2) = (2 * a, 2 * a + 1, 2 * b, 2 * b + 1);
    [vec![(a2, b1)], vec![(b2, a1)], vec![(a1, b1), (b2, a2)], vec![(b1, a1), (a2, b2)]]
}

struct Search {
    options: Vec<[Vec<Prec>; 4]>,
    nodes: u64,
    cap: u64,
}

impl Search {
    fn run(&mut self, mut cl: Closure, mut pending: Vec<usize>) -> Result<Option<Closure>, HardnessError> {
        loop {
            self.nodes += 1;
            if self.nodes > self.cap {
                return Err(HardnessError::CapExceeded(format!("more than {} search nodes", self.cap)));
            }
            let mut best: Option<(usize, u8)> = None;
            let mut forced = false;
            let mut i = 0;
            while i < pending.len() {
                let opts = &self.options[pending[i]];
                if opts.iter().any(|o| o.iter().all(|&(u, v)| cl.lt(u, v))) {
                    pending.swap_remove(i);
                    continue;
                }
                let mut mask = 0u8;
                for (k, o) in opts.iter().enumerate() {
                    if o.iter().all(|&(u, v)| !cl.lt(v, u)) {
                        mask |= 1 << k;
                    }
                }
                match mask.count_ones() {
                    0 => return Ok(None),
                    1 => {
                        let k = mask.trailing_zeros() as usize;
                        if !opts[k].iter().all(|&(u, v)| cl.add(u, v)) {
                            return Ok(None);
                        }
                        pending.swap_remove(i);
                        forced = true;
                    }
                    c => {
                        if best.is_none_or(|(_, m)| c < m.count_ones()) {
                            best = Some((i, mask));
                        }
                        i += 1;
                    }
                }
            }
            if forced {
                continue;
            }
            let Some((i, mask)) = best else {
                return Ok(Some(cl));
            };
            let d = pending.swap_remove(i);
            for k in 0..4 {
                if mask >> k & 1 == 0 {
                    continue;
                }
                let mut next = cl.clone();
                if self.options[d][k].iter().all(|&(u, v)| next.add(u, v)) {
                    if let Some(done) = self.run(next, pending.clone())? {
                        return Ok(Some(done));
                    }
                }
            }
            return Ok(None);
        }
    }
}

/// Decides whether an ideal solution exists, with default search cap.
pub fn decide_ideal(inst: &PuzzleInstance) -> Result<Option<Certificate>, HardnessError> {
    decide_ideal_with(inst, &[], DEFAULT_DECIDE_CAP)
}

/// Same, with extra required precedences `(earlier, later)` between moves
/// of active lines.
pub fn decide_ideal_with(
    inst: &PuzzleInstance,
    extra: &[(Event, Event)],
    cap: u64,
) -> Result<Option<Certificate>, HardnessError> {
    let lines = inst.active_lines();
    let index: HashMap<Line, usize> = lines.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let ev = |e: Event| -> Result<usize, HardnessError> {
        index
            .get(&e.line)
            .map(|&i| 2 * i + e.second as usize)
            .ok_or_else(|| HardnessError::InvalidInstance(format!("{} is not an active line", e.line)))
    };
    let mut cl = Closure::new(2 * lines.len());
    let mut ok = (0..lines.len()).all(|i| cl.add(2 * i, 2 * i + 1));
    for &(a, b) in extra {
        ok &= cl.add(ev(a)?, ev(b)?);
    }
    let mut options = Vec::new();
    for &(x, y) in inst.important() {
        let (Some(&c), Some(&r)) = (index.get(&Line::Col(x)), index.get(&Line::Row(y))) else {
            continue;
        };
        let (c1, c2, r1, r2) = (2 * c, 2 * c + 1, 2 * r, 2 * r + 1);
        match inst.cluster_state(x, y) {
            N1ClusterState::Solved => options.push(non_crossing(c, r)),
            N1ClusterState::BlueLeft => ok &= cl.add(c1, r1) && cl.add(r1, c2) && cl.add(c2, r2),
            N1ClusterState::BlueUp => ok &= cl.add(r1, c1) && cl.add(c1, r2) && cl.add(r2, c2),
            s => unreachable!("instance holds {s:?}"),
        }
    }
    if !ok {
        return Ok(None);
    }
    let pending = (0..options.len()).collect();
    let mut search = Search { options, nodes: 0, cap };
    Ok(search.run(cl, pending)?.map(|cl| Certificate {
        order: cl.linearize(2 * lines.len()).into_iter().map(|e| lines[e / 2]).collect(),
    }))
}

/// Every order of the moves of `lines` (first before second per line) that
/// some ideal solution induces.
pub fn accepted_projections(
    inst: &PuzzleInstance,
    lines: &[Line],
    cap: u64,
) -> Result<Vec<Vec<Event>>, HardnessError> {
    fn orders(lines: &[Line], used: &mut Vec<u8>, cur: &mut Vec<Event>, out: &mut Vec<Vec<Event>>) {
        if cur.len() == 2 * lines.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..lines.len() {
            if used[i] < 2 {
                cur.push(Event { line: lines[i], second: used[i] == 1 });
                used[i] += 1;
                orders(lines, used, cur, out);
                used[i] -= 1;
                cur.pop();
            }
        }
    }
    let mut all = Vec::new();
    orders(lines, &mut vec![0; lines.len()], &mut Vec::new(), &mut all);
    let mut out = Vec::new();
    for o in all {
        let chain: Vec<(Event, Event)> = o.windows(2).map(|w| (w[0], w[1])).collect();
        if decide_ideal_with(inst, &chain, cap)?.is_some() {
            out.push(o);
        }
    }
    Ok(out)
}
