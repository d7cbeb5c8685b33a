//! Instances assembled from named columns, named rows and marked clusters.
//!
//! Columns and rows are numbered from 1 in creation order. A finished
//! instance uses the smallest odd `n` whose inner lines fit every label.

use std::collections::BTreeMap;

use cube_core::{invert_sequence, CubeState, Dims};
use solver_n1::{cluster_solution, N1Cluster, N1ClusterState};

use crate::error::HardnessError;
use crate::instance::{Line, PuzzleInstance};

#[derive(Debug, Clone, Default)]
pub struct PartialInstance {
    cols: Vec<String>,
    rows: Vec<String>,
    marks: BTreeMap<(usize, usize), N1ClusterState>,
    gadgets: usize,
}

impl PartialInstance {
    pub fn new() -> Self {
        Self::default()
    }

    /// Columns `c1..ck` and nothing else.
    pub fn with_columns(k: usize) -> Self {
        let mut p = Self::new();
        for i in 1..=k {
            p.add_column(&format!("c{i}")).expect("fresh names");
        }
        p
    }

    fn taken(&self, name: &str) -> bool {
        self.cols.iter().chain(&self.rows).any(|s| s == name)
    }

    pub fn add_column(&mut self, name: &str) -> Result<usize, HardnessError> {
        if self.taken(name) {
            return Err(HardnessError::LabelCollision(format!("label {name} already used")));
        }
        self.cols.push(name.to_string());
        Ok(self.cols.len())
    }

    pub fn add_row(&mut self, name: &str) -> Result<usize, HardnessError> {
        if self.taken(name) {
            return Err(HardnessError::LabelCollision(format!("label {name} already used")));
        }
        self.rows.push(name.to_string());
        Ok(self.rows.len())
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.cols.iter().position(|s| s == name).map(|i| i + 1)
    }

    pub fn columns(&self) -> usize {
        self.cols.len()
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn marks(&self) -> &BTreeMap<(usize, usize), N1ClusterState> {
        &self.marks
    }

    /// Makes cluster `(x, y)` important in state `s`.
    pub fn mark(&mut self, x: usize, y: usize, s: N1ClusterState) -> Result<(), HardnessError> {
        if x == 0 || x > self.cols.len() || y == 0 || y > self.rows.len() {
            return Err(HardnessError::LabelCollision(format!("cluster ({x}, {y}) uses an unknown line")));
        }
        match self.marks.insert((x, y), s) {
            Some(old) if old != s => {
                Err(HardnessError::LabelCollision(format!("cluster ({x}, {y}) marked {old:?} and {s:?}")))
            }
            _ => Ok(()),
        }
    }

    fn check_cols(&self, xs: &[usize]) -> Result<(), HardnessError> {
        for (i, &x) in xs.iter().enumerate() {
            if x == 0 || x > self.cols.len() {
                return Err(HardnessError::LabelCollision(format!("column {x} does not exist")));
            }
            if xs[..i].contains(&x) {
                return Err(HardnessError::LabelCollision(format!("column {x} given twice")));
            }
        }
        Ok(())
    }

    fn fresh(&mut self) -> String {
        self.gadgets += 1;
        format!("g{}", self.gadgets)
    }

    /// Forces every column of `x1s` to make its second move before any
    /// column of `x2s`, and the first moves of each set to precede all of
    /// that set's second moves. Adds three rows and two columns.
    pub fn gadget_before(&mut self, x1s: &[usize], x2s: &[usize]) -> Result<(), HardnessError> {
        let all: Vec<usize> = x1s.iter().chain(x2s).copied().collect();
        self.check_cols(&all)?;
        let g = self.fresh();
        self.before_with(&g, x1s, x2s)
    }

    fn before_with(&mut self, g: &str, x1s: &[usize], x2s: &[usize]) -> Result<(), HardnessError> {
        use N1ClusterState::*;
        let u: Vec<usize> = (1..=3).map(|i| self.add_row(&format!("{g}.u{i}"))).collect::<Result<_, _>>()?;
        let w: Vec<usize> = (1..=2).map(|i| self.add_column(&format!("{g}.w{i}"))).collect::<Result<_, _>>()?;
        self.mark(w[0], u[1], BlueLeft)?;
        self.mark(w[1], u[2], BlueLeft)?;
        self.mark(w[0], u[0], BlueUp)?;
        self.mark(w[1], u[1], BlueUp)?;
        self.mark(w[1], u[0], Solved)?;
        for &x in x1s {
            self.mark(x, u[0], BlueLeft)?;
        }
        for &x in x2s {
            self.mark(x, u[2], BlueLeft)?;
        }
        Ok(())
    }

    /// Forces the first move of `b` to fall between the first moves of `a`
    /// and `c`, with all three second moves after all three first moves and
    /// the second move of `b` before those of `a` and `c`.
    pub fn gadget_between(&mut self, a: usize, b: usize, c: usize) -> Result<(), HardnessError> {
        use N1ClusterState::*;
        self.check_cols(&[a, b, c])?;
        let g = self.fresh();
        self.before_with(&format!("{g}.b"), &[b], &[a, c])?;
        let y: Vec<usize> = (1..=3).map(|i| self.add_row(&format!("{g}.y{i}"))).collect::<Result<_, _>>()?;
        let xs = [a, b, c];
        for (i, &x) in xs.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                self.mark(x, yj, if i == j { Solved } else { BlueUp })?;
            }
        }
        Ok(())
    }

    /// Smallest odd `n` with every label below `n / 2`.
    pub fn size(&self) -> usize {
        2 * self.cols.len().max(self.rows.len()) + 3
    }

    pub fn build(&self) -> PuzzleInstance {
        let n = self.size();
        let mut state = CubeState::solved(Dims::new(n, n, 1).expect("positive"));
        for (&(x, y), &s) in &self.marks {
            let undo = invert_sequence(&cluster_solution(s, N1Cluster::new(n, x, y)));
            state.apply_sequence_mut(&undo).expect("inner lines are legal");
        }
        let labels = self
            .cols
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), Line::Col(i + 1)))
            .chain(self.rows.iter().enumerate().map(|(i, s)| (s.clone(), Line::Row(i + 1))))
            .collect();
        PuzzleInstance::new(state, self.marks.keys().copied(), labels).expect("marks are valid states")
    }
}

/// Standalone before-gadget over columns `1..=max` of `x1s` and `x2s`.
pub fn gadget_before(x1s: &[usize], x2s: &[usize]) -> Result<PartialInstance, HardnessError> {
    let k = x1s.iter().chain(x2s).copied().max().unwrap_or(0);
    let mut p = PartialInstance::with_columns(k);
    p.gadget_before(x1s, x2s)?;
    Ok(p)
}

/// Standalone betweenness gadget over columns `1..=max(a, b, c)`.
pub fn gadget_between(a: usize, b: usize, c: usize) -> Result<PartialInstance, HardnessError> {
    let mut p = PartialInstance::with_columns(a.max(b).max(c));
    p.gadget_between(a, b, c)?;
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::ideal_moves;

    #[test]
    fn sizes() {
        let p = gadget_between(1, 2, 3).unwrap();
        assert_eq!((p.columns(), p.rows()), (5, 6));
        assert_eq!(p.marks().len(), 5 + 3 + 9);
        let inst = p.build();
        assert_eq!(inst.n(), 15);
        assert_eq!(ideal_moves(&inst), 22);
        assert_eq!(inst.line("g1.b.w2"), Some(Line::Col(5)));
    }

    #[test]
    fn collisions() {
        assert!(matches!(gadget_between(1, 1, 2), Err(HardnessError::LabelCollision(_))));
        assert!(matches!(gadget_before(&[1], &[1]), Err(HardnessError::LabelCollision(_))));
        assert!(matches!(gadget_before(&[0], &[1]), Err(HardnessError::LabelCollision(_))));
        let mut p = PartialInstance::with_columns(2);
        assert!(p.add_column("c1").is_err());
        p.add_row("r").unwrap();
        p.mark(1, 1, N1ClusterState::BlueUp).unwrap();
        assert!(p.mark(1, 1, N1ClusterState::Solved).is_err());
        assert!(p.mark(3, 1, N1ClusterState::Solved).is_err());
    }
}
