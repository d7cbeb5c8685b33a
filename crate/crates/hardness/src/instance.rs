//! n x n x 1 puzzles where only some clusters must end up solved.
//!
//! Row `y` and column `x` (both at most `n / 2`) are the lines an ideal
//! solution may turn: each line that touches an important unsolved cubie is
//! turned exactly twice, by a 180 degree half turn.

use std::collections::{BTreeMap, BTreeSet};

use cube_core::{CubeState, Face, Move, MoveSequence, StateFile};
use serde::{Deserialize, Serialize};
use solver_n1::cluster::{col, row};
use solver_n1::{classify_cluster, N1Cluster, N1ClusterState};

use crate::error::HardnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Line {
    Col(usize),
    Row(usize),
}

impl Line {
    pub fn to_move(self) -> Move {
        match self {
            Line::Col(x) => col(x),
            Line::Row(y) => row(y),
        }
    }
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Col(x) => write!(f, "col {x}"),
            Line::Row(y) => write!(f, "row {y}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PuzzleInstance {
    state: CubeState,
    important: BTreeSet<(usize, usize)>,
    labels: BTreeMap<String, Line>,
}

fn is_boundary(n: usize, x: usize, y: usize) -> bool {
    x == 0 || y == 0 || x == n / 2 || y == n / 2
}

/// Per position `(x, y)`, whether some sticker of that cubie is off its face.
fn unsolved_positions(state: &CubeState) -> Vec<bool> {
    let n = state.dims().l;
    let layout = state.layout();
    let mut out = vec![false; n * n];
    for (i, &c) in state.stickers().iter().enumerate() {
        let p = layout.sticker_pos(i);
        if c != p.face {
            out[p.cubie[0] + n * p.cubie[1]] = true;
        }
    }
    out
}

impl PuzzleInstance {
    /// `important` lists inner clusters `(x, y)` with `1 <= x, y < n / 2`;
    /// boundary clusters are always important and must be solved.
    pub fn new(
        state: CubeState,
        important: impl IntoIterator<Item = (usize, usize)>,
        labels: BTreeMap<String, Line>,
    ) -> Result<Self, HardnessError> {
        let d = state.dims();
        let bad = |m: String| Err(HardnessError::InvalidInstance(m));
        if d.n != 1 || d.l != d.m || d.l % 2 == 0 || d.l < 3 {
            return bad(format!("need an odd n x n x 1 puzzle with n >= 3, got {d}"));
        }
        let n = d.l;
        let unsolved = unsolved_positions(&state);
        let mut set = BTreeSet::new();
        for (x, y) in important {
            if x > n / 2 || y > n / 2 {
                return bad(format!("cluster ({x}, {y}) out of range"));
            }
            if !is_boundary(n, x, y) {
                set.insert((x, y));
            }
        }
        for y in 0..=n / 2 {
            for x in 0..=n / 2 {
                let c = N1Cluster::new(n, x, y);
                if is_boundary(n, x, y) {
                    if c.positions().iter().any(|&(px, py)| unsolved[px + n * py]) {
                        return bad(format!("boundary cluster ({x}, {y}) is not solved"));
                    }
                    continue;
                }
                for (px, py) in c.positions() {
                    let top = state.get(Face::U, py, px);
                    if state.get(Face::D, py, px) != top.opposite() {
                        return bad(format!("cubie ({px}, {py}) is not a top/bottom pair"));
                    }
                }
                match classify_cluster(&state, c) {
                    Ok(N1ClusterState::Solved | N1ClusterState::BlueLeft | N1ClusterState::BlueUp) => {}
                    Ok(s) => return bad(format!("cluster ({x}, {y}) is {s:?}")),
                    Err(e) => return bad(e.to_string()),
                }
            }
        }
        for (name, line) in &labels {
            let i = match *line {
                Line::Col(i) | Line::Row(i) => i,
            };
            if i > n / 2 {
                return bad(format!("label {name} points past the middle line"));
            }
        }
        Ok(PuzzleInstance { state, important: set, labels })
    }

    pub fn n(&self) -> usize {
        self.state.dims().l
    }

    pub fn state(&self) -> &CubeState {
        &self.state
    }

    /// Important inner clusters.
    pub fn important(&self) -> &BTreeSet<(usize, usize)> {
        &self.important
    }

    pub fn is_important(&self, x: usize, y: usize) -> bool {
        is_boundary(self.n(), x, y) || self.important.contains(&(x, y))
    }

    pub fn labels(&self) -> &BTreeMap<String, Line> {
        &self.labels
    }

    pub fn line(&self, label: &str) -> Option<Line> {
        self.labels.get(label).copied()
    }

    pub fn cluster_state(&self, x: usize, y: usize) -> N1ClusterState {
        classify_cluster(&self.state, N1Cluster::new(self.n(), x, y)).expect("validated on construction")
    }

    /// Lines holding an important unsolved cubie, rows first, by index.
    pub fn active_lines(&self) -> Vec<Line> {
        let mut rows = BTreeSet::new();
        let mut cols = BTreeSet::new();
        for &(x, y) in &self.important {
            if self.cluster_state(x, y) != N1ClusterState::Solved {
                rows.insert(y);
                cols.insert(x);
            }
        }
        rows.into_iter().map(Line::Row).chain(cols.into_iter().map(Line::Col)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&InstanceFile::from(self)).expect("instance serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, HardnessError> {
        let file: InstanceFile = serde_json::from_str(text)
            .map_err(|e| HardnessError::Parse { line: e.line(), msg: e.to_string() })?;
        let state = CubeState::try_from(file.state)?;
        PuzzleInstance::new(state, file.important.into_iter().map(|[x, y]| (x, y)), file.labels)
    }
}

/// On-disk form: the state file fields plus `"important": [[x, y], ..]`
/// and an optional `"labels"` map.
#[derive(Debug, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(flatten)]
    pub state: StateFile,
    pub important: Vec<[usize; 2]>,
    #[serde(default)]
    pub labels: BTreeMap<String, Line>,
}

impl From<&PuzzleInstance> for InstanceFile {
    fn from(p: &PuzzleInstance) -> Self {
        InstanceFile {
            state: StateFile::from(&p.state),
            important: p.important.iter().map(|&(x, y)| [x, y]).collect(),
            labels: p.labels.clone(),
        }
    }
}

/// Length of an ideal solution: two moves per active line.
pub fn ideal_moves(inst: &PuzzleInstance) -> usize {
    2 * inst.active_lines().len()
}

/// Whether `seq` fits in `budget` moves and leaves every important cluster
/// solved. Illegal moves are errors.
pub fn verify_solution(inst: &PuzzleInstance, seq: &[Move], budget: usize) -> Result<bool, HardnessError> {
    let end = inst.state.apply_sequence(seq)?;
    if seq.len() > budget {
        return Ok(false);
    }
    let n = inst.n();
    let unsolved = unsolved_positions(&end);
    Ok((0..n).all(|y| {
        (0..n).all(|x| {
            let (cx, cy) = (x.min(n - 1 - x), y.min(n - 1 - y));
            !unsolved[x + n * y] || !inst.is_important(cx, cy)
        })
    }))
}

/// The moves of a line order, one per entry.
pub fn line_moves(order: &[Line]) -> MoveSequence {
    order.iter().map(|l| l.to_move()).collect()
}
