//! Reducing a set of pieces to solved with 3-cycles.
//!
//! Slots are numbered `piece * k + r` for pieces of `k` stickers listed in
//! cyclic order. The state records, per slot, the home slot of the sticker
//! sitting there. A cycle `a -> b -> c` on slots of three distinct pieces
//! moves the whole pieces, each sticker advancing by the same offset.

use crate::error::N3Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PieceState {
    pub k: usize,
    pub occupant: Vec<usize>,
}

impl PieceState {
    pub fn solved(pieces: usize, k: usize) -> Self {
        PieceState { k, occupant: (0..pieces * k).collect() }
    }

    pub fn pieces(&self) -> usize {
        self.occupant.len() / self.k
    }

    fn slot(&self, piece: usize, r: usize) -> usize {
        piece * self.k + r % self.k
    }

    fn home_piece(&self, piece: usize) -> usize {
        self.occupant[piece * self.k] / self.k
    }

    fn placed(&self, piece: usize) -> bool {
        self.home_piece(piece) == piece
    }

    fn solved_piece(&self, piece: usize) -> bool {
        (0..self.k).all(|r| self.occupant[self.slot(piece, r)] == self.slot(piece, r))
    }

    pub fn is_solved(&self) -> bool {
        self.occupant.iter().enumerate().all(|(i, &o)| i == o)
    }

    /// Applies the cycle `a -> b -> c` on slots.
    pub fn cycle(&mut self, [a, b, c]: [usize; 3]) {
        let k = self.k;
        let before = self.occupant.clone();
        for r in 0..k {
            let s = |x: usize| (x / k) * k + (x % k + r) % k;
            self.occupant[s(b)] = before[s(a)];
            self.occupant[s(c)] = before[s(b)];
            self.occupant[s(a)] = before[s(c)];
        }
    }

    /// Parity of the permutation of whole pieces.
    pub fn piece_parity_odd(&self) -> bool {
        let n = self.pieces();
        let mut seen = vec![false; n];
        let mut even_cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.home_piece(i);
                len += 1;
            }
            if len % 2 == 0 {
                even_cycles += 1;
            }
        }
        even_cycles % 2 == 1
    }
}

/// Slot 3-cycles that, applied in order, solve `state`.
pub fn solve_pieces(state: &PieceState) -> Result<Vec<[usize; 3]>, N3Error> {
    let mut s = state.clone();
    let mut out = Vec::new();
    let n = s.pieces();
    // place every piece, orientation aside
    while let Some(p) = (0..n).find(|&p| !s.placed(p)) {
        let home = s.slot(p, 0);
        let q = s.occupant.iter().position(|&o| o == home).expect("occupant is a bijection");
        let qp = q / s.k;
        let r = (0..n)
            .find(|&r| r != p && r != qp && !s.placed(r))
            .ok_or_else(|| N3Error::Unsolvable("odd piece permutation".into()))?;
        let c = [q, home, s.slot(r, 0)];
        s.cycle(c);
        out.push(c);
    }
    // then fix orientations two pieces at a time
    loop {
        let twisted: Vec<usize> = (0..n).filter(|&p| !s.solved_piece(p)).collect();
        match twisted.as_slice() {
            [] => break,
            [_] => return Err(N3Error::Unsolvable("single twisted piece".into())),
            _ => {}
        }
        let (p, z) = (twisted[0], twisted[twisted.len() - 1]);
        let x = (0..n)
            .find(|&x| x != p && x != z)
            .ok_or_else(|| N3Error::Unsolvable("too few pieces to untwist".into()))?;
        let pair = untwist(&s, p, z, x).ok_or_else(|| N3Error::Unsolvable("no untwisting pair".into()))?;
        for c in pair {
            s.cycle(c);
            out.push(c);
        }
    }
    Ok(out)
}

/// Two cycles on pieces `p`, `z`, `x` leaving `p` and `x` solved.
fn untwist(s: &PieceState, p: usize, z: usize, x: usize) -> Option<[[usize; 3]; 2]> {
    let k = s.k;
    let mut cycles = Vec::new();
    for (b, c) in [(z, x), (x, z)] {
        for j in 0..k {
            for l in 0..k {
                for i in 0..k {
                    cycles.push([s.slot(p, i), s.slot(b, j), s.slot(c, l)]);
                }
            }
        }
    }
    for &c1 in &cycles {
        let mut t1 = s.clone();
        t1.cycle(c1);
        for &c2 in &cycles {
            let mut t2 = t1.clone();
            t2.cycle(c2);
            if t2.solved_piece(p) && t2.solved_piece(x) {
                return Some([c1, c2]);
            }
        }
    }
    None
}
