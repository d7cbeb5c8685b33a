//! Permutations of cluster positions and the 24-entry generator table.
//!
//! A permutation maps each position to the position its sticker moves to.
//! Cycles are written with 1-based labels, `(a b c)` sending a to b, b to
//! c and c to a.

use std::fmt;

use cube_core::Face;

use crate::frame::Frame;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm(Vec<usize>);

/// A permutation of the 24 positions of one cluster.
pub type Perm24 = Perm;

impl Perm {
    pub fn identity(k: usize) -> Self {
        Perm((0..k).collect())
    }

    /// `None` unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Perm(images))
    }

    /// The cycle `a -> b -> c -> a` (0-based) on `k` points.
    pub fn three_cycle(k: usize, [a, b, c]: [usize; 3]) -> Self {
        let mut p = Self::identity(k);
        p.0[a] = b;
        p.0[b] = c;
        p.0[c] = a;
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_odd(&self) -> bool {
        self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    /// The 0-based points of a 3-cycle, starting at its smallest point.
    pub fn as_three_cycle(&self) -> Option<[usize; 3]> {
        match self.cycles().as_slice() {
            [c] if c.len() == 3 => Some([c[0], c[1], c[2]]),
            _ => None,
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let labels: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", labels.join(" "))?;
        }
        Ok(())
    }
}

/// The generator 3-cycles (1-based) in the frozen position order, each
/// with the frame whose commutator realizes it.
pub const GENERATORS: [([u8; 3], (Face, Face)); 24] = {
    use Face::*;
    [
        ([1, 2, 12], (U, L)),
        ([4, 3, 10], (D, L)),
        ([2, 4, 11], (B, L)),
        ([3, 1, 9], (F, L)),
        ([5, 12, 8], (F, U)),
        ([20, 13, 19], (B, U)),
        ([12, 20, 24], (R, U)),
        ([13, 5, 4], (L, U)),
        ([6, 11, 5], (U, B)),
        ([19, 14, 18], (D, B)),
        ([11, 19, 22], (R, B)),
        ([14, 6, 3], (L, B)),
        ([7, 10, 6], (B, D)),
        ([18, 15, 17], (F, D)),
        ([10, 18, 21], (R, D)),
        ([15, 7, 1], (L, D)),
        ([8, 9, 7], (D, F)),
        ([17, 16, 20], (U, F)),
        ([9, 17, 23], (R, F)),
        ([16, 8, 2], (L, F)),
        ([21, 22, 13], (U, R)),
        ([24, 23, 15], (D, R)),
        ([22, 24, 16], (F, R)),
        ([23, 21, 14], (B, R)),
    ]
};

pub fn generator_frame(i: usize) -> Frame {
    let (front, up) = GENERATORS[i].1;
    Frame { front, up }
}

pub fn generator_perm(i: usize) -> Perm24 {
    let [a, b, c] = GENERATORS[i].0;
    Perm::three_cycle(24, [a as usize - 1, b as usize - 1, c as usize - 1])
}

/// Frozen label (1-based) of each position in the side order of
/// [`crate::facecoord::side_positions`].
pub const SIDE_LABELS: [u8; 24] =
    [5, 12, 20, 13, 7, 10, 18, 15, 4, 3, 1, 2, 24, 23, 21, 22, 8, 9, 17, 16, 19, 14, 6, 11];
