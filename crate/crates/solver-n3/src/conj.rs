//! Routing an arbitrary 3-cycle onto a known one by conjugation.
//!
//! Given step permutations (closed under inverses) and some base 3-cycles,
//! a breadth-first search over ordered triples finds, for every reachable
//! triple `(a, b, c)`, a word `w` of steps carrying it onto a base triple.
//! Then `w`, the base cycle, `w^-1` sends a to b, b to c and c to a.

use std::collections::VecDeque;

use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Entry {
    Unseen,
    Base { base: usize, inverted: bool },
    Step(usize),
}

/// How to realize one 3-cycle: apply `word`, then base `base` (inverted or
/// not), then the inverse of `word`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Routing {
    pub word: Vec<usize>,
    pub base: usize,
    pub inverted: bool,
}

#[derive(Debug, Clone)]
pub struct TripleTable {
    points: usize,
    steps: Vec<Perm>,
    inverse_step: Vec<usize>,
    entries: Vec<Entry>,
    depth: usize,
}

impl TripleTable {
    /// `steps` must be closed under inverses. Each base is a cycle
    /// `a -> b -> c`.
    pub fn build(points: usize, steps: Vec<Perm>, bases: &[[usize; 3]]) -> Self {
        let inverse_step = steps
            .iter()
            .map(|s| {
                let inv = s.inverse();
                steps.iter().position(|t| *t == inv).expect("steps closed under inverses")
            })
            .collect();
        let mut table = TripleTable {
            points,
            steps,
            inverse_step,
            entries: vec![Entry::Unseen; points * points * points],
            depth: 0,
        };
        let mut queue = VecDeque::new();
        for (base, &[a, b, c]) in bases.iter().enumerate() {
            for (t, inverted) in [([a, b, c], false), ([a, c, b], true)] {
                for r in 0..3 {
                    let t = [t[r], t[(r + 1) % 3], t[(r + 2) % 3]];
                    let k = table.key(t);
                    if table.entries[k] == Entry::Unseen {
                        table.entries[k] = Entry::Base { base, inverted };
                        queue.push_back((t, 0));
                    }
                }
            }
        }
        while let Some((t, d)) = queue.pop_front() {
            table.depth = table.depth.max(d);
            for m in 0..table.steps.len() {
                // m carries the predecessor onto t
                let inv = &table.steps[table.inverse_step[m]];
                let prev = t.map(|p| inv.image(p));
                let k = table.key(prev);
                if table.entries[k] == Entry::Unseen {
                    table.entries[k] = Entry::Step(m);
                    queue.push_back((prev, d + 1));
                }
            }
        }
        table
    }

    fn key(&self, [a, b, c]: [usize; 3]) -> usize {
        (a * self.points + b) * self.points + c
    }

    pub fn steps(&self) -> &[Perm] {
        &self.steps
    }

    pub fn inverse_step(&self, m: usize) -> usize {
        self.inverse_step[m]
    }

    /// Longest routing word.
    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn reachable(&self) -> usize {
        self.entries.iter().filter(|e| **e != Entry::Unseen).count()
    }

    /// Routing for the cycle `a -> b -> c`, if its triple is reachable.
    pub fn route(&self, mut t: [usize; 3]) -> Option<Routing> {
        let mut word = Vec::new();
        loop {
            match self.entries[self.key(t)] {
                Entry::Unseen => return None,
                Entry::Base { base, inverted } => return Some(Routing { word, base, inverted }),
                Entry::Step(m) => {
                    word.push(m);
                    t = t.map(|p| self.steps[m].image(p));
                }
            }
        }
    }

    /// The routing's word followed by the inverse word, as step indices,
    /// around a marker for the base.
    pub fn expand(&self, r: &Routing) -> (Vec<usize>, Vec<usize>) {
        let back = r.word.iter().rev().map(|&m| self.inverse_step[m]).collect();
        (r.word.clone(), back)
    }
}

/// Size of the orbit of one ordered triple under `gens` alone.
pub fn triple_orbit(points: usize, gens: &[Perm], start: [usize; 3]) -> usize {
    let mut seen = vec![false; points * points * points];
    let key = |[a, b, c]: [usize; 3]| (a * points + b) * points + c;
    let mut queue = VecDeque::from([start]);
    seen[key(start)] = true;
    let mut count = 1;
    while let Some(t) = queue.pop_front() {
        for g in gens {
            let next = t.map(|p| g.image(p));
            if !std::mem::replace(&mut seen[key(next)], true) {
                count += 1;
                queue.push_back(next);
            }
        }
    }
    count
}
