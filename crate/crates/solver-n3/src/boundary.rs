//! Corners, edge pieces and the face colors the rest is solved towards.
//!
//! Corners, midges (odd n) and each wing orbit are solved with 3-cycles
//! obtained by conjugating one commutator per orbit. The commutators only
//! disturb pieces solved later: corner cycles move no other corner, midge
//! cycles no corner or wing, wing cycles nothing outside their own orbit
//! on the boundary.

use cube_core::{invert_sequence, Axis, Color, CubeState, Face, Move, MoveSequence, MoveTable, Turn};

use crate::conj::TripleTable;
use crate::error::N3Error;
use crate::facecoord::{rotations, FaceCoord};
use crate::orbit::{solve_pieces, PieceState};
use crate::perm::Perm;

/// Layer of a typed move: an outer layer, the middle one or layer `i` for
/// an orbit index `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Layer {
    Low,
    High,
    Mid,
    Near,
}

fn at(layer: Layer, n: usize, i: usize) -> usize {
    match layer {
        Layer::Low => 0,
        Layer::High => n - 1,
        Layer::Mid => n / 2,
        Layer::Near => i,
    }
}

type Typed = (Axis, Layer, Turn);

fn instantiate(seq: &[Typed], n: usize, i: usize) -> MoveSequence {
    seq.iter().map(|&(a, l, t)| Move::new(a, at(l, n, i), t)).collect()
}

fn commutator(a: &[Move], b: &[Move]) -> MoveSequence {
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    out.extend(invert_sequence(a));
    out.extend(invert_sequence(b));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitKind {
    Corners,
    Midges,
    /// Edge pieces at distance `i` from a corner, `1 <= i < n / 2`.
    Wings(usize),
}

impl OrbitKind {
    /// The commutator whose 3-cycle every other cycle is conjugated from.
    pub fn base_sequence(self, n: usize) -> MoveSequence {
        use Axis::*;
        use Layer::*;
        use Turn::*;
        let (a, b, i): (&[Typed], &[Typed], usize) = match self {
            OrbitKind::Corners => (&[(X, Low, Ccw), (Y, Low, Ccw), (X, Low, Cw)], &[(Y, High, Ccw)], 0),
            OrbitKind::Midges => (&[(X, Mid, Ccw)], &[(Y, Low, Half)], 0),
            OrbitKind::Wings(i) => (&[(X, Near, Ccw)], &[(Y, Low, Ccw), (X, Low, Ccw), (Y, Low, Cw)], i),
        };
        commutator(&instantiate(a, n, i), &instantiate(b, n, i))
    }

    /// Setup moves for conjugation.
    fn steps(self, n: usize) -> Vec<Move> {
        let mut layers = vec![0, n - 1];
        match self {
            OrbitKind::Corners => {}
            OrbitKind::Midges => layers.push(n / 2),
            OrbitKind::Wings(i) => layers.extend([i, n - 1 - i]),
        }
        let mut out = Vec::new();
        for axis in Axis::ALL {
            for &index in &layers {
                for turn in [Turn::Ccw, Turn::Cw, Turn::Half] {
                    out.push(Move::new(axis, index, turn));
                }
            }
        }
        out
    }
}

/// Pieces of one orbit as sticker indices. The first `k` stickers of each
/// piece are tracked; moves carry tracked stickers onto tracked stickers
/// with a cyclic shift.
#[derive(Debug, Clone)]
pub struct PieceOrbit {
    pub kind: OrbitKind,
    pub n: usize,
    pub pieces: Vec<Vec<usize>>,
    pub k: usize,
}

fn sticker_of(layout: &cube_core::Layout, cubie: [usize; 3], face: Face) -> usize {
    layout.index_of(cube_core::StickerPos { cubie, face })
}

/// Faces a boundary cubie shows, in x, y, z order.
fn faces_of(cubie: [usize; 3], n: usize) -> Vec<Face> {
    let mut out = Vec::new();
    for axis in Axis::ALL {
        let v = cubie[axis.index()];
        if v == 0 {
            out.push(Face::from_normal(axis, false));
        } else if v == n - 1 {
            out.push(Face::from_normal(axis, true));
        }
    }
    out
}

impl PieceOrbit {
    pub fn new(kind: OrbitKind, n: usize, layout: &cube_core::Layout) -> Self {
        let ends = [0, n - 1];
        let mut pieces = Vec::new();
        let k;
        match kind {
            OrbitKind::Corners => {
                k = 3;
                for &x in &ends {
                    for &y in &ends {
                        for &z in &ends {
                            let cubie = [x, y, z];
                            let mut faces = faces_of(cubie, n);
                            // same handedness for every corner
                            if (x == 0) ^ (y == 0) ^ (z == 0) {
                                faces.swap(1, 2);
                            }
                            pieces.push(faces.into_iter().map(|f| sticker_of(layout, cubie, f)).collect());
                        }
                    }
                }
            }
            OrbitKind::Midges | OrbitKind::Wings(_) => {
                let (inner, tracked): (Vec<usize>, usize) = match kind {
                    OrbitKind::Midges => (vec![n / 2], 2),
                    OrbitKind::Wings(i) => (vec![i, n - 1 - i], 1),
                    OrbitKind::Corners => unreachable!(),
                };
                k = tracked;
                for axis in Axis::ALL {
                    for &v in &inner {
                        for &p in &ends {
                            for &q in &ends {
                                let mut cubie = [0; 3];
                                cubie[axis.index()] = v;
                                cubie[(axis.index() + 1) % 3] = p;
                                cubie[(axis.index() + 2) % 3] = q;
                                let mut st: Vec<usize> =
                                    faces_of(cubie, n).into_iter().map(|f| sticker_of(layout, cubie, f)).collect();
                                if let OrbitKind::Wings(i) = kind {
                                    let fc = FaceCoord::from_index(layout, st[0]);
                                    if !rotations(n, i, 0).contains(&(fc.x, fc.y)) {
                                        st.swap(0, 1);
                                    }
                                }
                                pieces.push(st);
                            }
                        }
                    }
                }
            }
        }
        PieceOrbit { kind, n, pieces, k }
    }

    fn slot_of_sticker(&self, len: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; len];
        for (p, st) in self.pieces.iter().enumerate() {
            for r in 0..self.k {
                out[st[r]] = Some(p * self.k + r);
            }
        }
        out
    }

    /// Which home slot each tracked slot's sticker belongs to, by colors.
    pub fn read(&self, state: &CubeState, target: &[Color; 6]) -> Result<PieceState, N3Error> {
        let layout = state.layout();
        let home = |s: usize| target[layout.face_of(s).index()];
        let size = self.pieces[0].len();
        let shifts = if self.k == 1 { 1 } else { size };
        let mut occupant = vec![usize::MAX; self.pieces.len() * self.k];
        let mut taken = vec![false; self.pieces.len()];
        for (p, st) in self.pieces.iter().enumerate() {
            let colors: Vec<Color> = st.iter().map(|&s| state.stickers()[s]).collect();
            let found = self.pieces.iter().enumerate().find_map(|(q, hs)| {
                (0..shifts).find(|&sh| (0..size).all(|r| colors[r] == home(hs[(r + sh) % size]))).map(|sh| (q, sh))
            });
            let (q, sh) = found.ok_or_else(|| N3Error::Unsolvable(format!("unknown piece in {:?}", self.kind)))?;
            if std::mem::replace(&mut taken[q], true) {
                return Err(N3Error::Unsolvable(format!("duplicate piece in {:?}", self.kind)));
            }
            for r in 0..self.k {
                occupant[p * self.k + r] = q * self.k + (r + sh) % size;
            }
        }
        Ok(PieceState { k: self.k, occupant })
    }

    /// Conjugation table over tracked slots.
    pub fn table(&self, moves: &MoveTable) -> (TripleTable, Vec<Move>, MoveSequence) {
        let layout = moves.layout();
        let slot = self.slot_of_sticker(layout.len());
        let points = self.pieces.len() * self.k;
        let perm_of = |seq: &[Move]| {
            let mut data: Vec<usize> = (0..layout.len()).collect();
            moves.apply_sequence(seq, &mut data);
            let mut images = vec![0; points];
            for (to, &from) in data.iter().enumerate() {
                if let (Some(a), Some(b)) = (slot[from], slot[to]) {
                    images[a] = b;
                }
            }
            Perm::from_images(images).expect("moves keep the orbit")
        };
        let steps = self.kind.steps(self.n);
        let perms: Vec<Perm> = steps.iter().map(|&m| perm_of(&[m])).collect();
        let base = self.kind.base_sequence(self.n);
        // one 3-cycle per tracked sticker of a piece, all from the same moves
        let cycles: Vec<[usize; 3]> = perm_of(&base).cycles().into_iter().map(|c| [c[0], c[1], c[2]]).collect();
        assert_eq!(cycles.len(), self.k, "base moves three pieces");
        (TripleTable::build(points, perms, &cycles), steps, base)
    }

    /// Moves solving this orbit, which must have even piece parity.
    pub fn solve(&self, state: &CubeState, target: &[Color; 6], moves: &MoveTable) -> Result<MoveSequence, N3Error> {
        let ps = self.read(state, target)?;
        if ps.is_solved() {
            return Ok(Vec::new());
        }
        let cycles = solve_pieces(&ps)?;
        let (table, steps, base) = self.table(moves);
        let mut out = Vec::new();
        for c in cycles {
            let r = table.route(c).ok_or_else(|| N3Error::Unsolvable(format!("no route in {:?}", self.kind)))?;
            let (word, back) = table.expand(&r);
            out.extend(word.iter().map(|&m| steps[m]));
            if r.inverted {
                out.extend(invert_sequence(&base));
            } else {
                out.extend_from_slice(&base);
            }
            out.extend(back.iter().map(|&m| steps[m]));
        }
        Ok(out)
    }
}

/// Face colors of the solved cube to aim for: the centers for odd n, the
/// corner at x = 0, y = n - 1, z = 0 for even n.
pub fn target_colors(state: &CubeState) -> Result<[Color; 6], N3Error> {
    let n = state.dims().l;
    let mut target = [Face::U; 6];
    if n % 2 == 1 {
        for f in Face::ALL {
            target[f.index()] = state.get(f, n / 2, n / 2);
        }
    } else {
        let cubie = [0, n - 1, 0];
        for f in [Face::L, Face::B, Face::D] {
            let c = state.stickers()[sticker_of(state.layout(), cubie, f)];
            target[f.index()] = c;
            target[f.opposite().index()] = c.opposite();
        }
    }
    let mut seen = [false; 6];
    for (f, c) in Face::ALL.iter().zip(target) {
        if c.opposite() != target[f.opposite().index()] || std::mem::replace(&mut seen[c.index()], true) {
            return Err(N3Error::Unsolvable("face colors are inconsistent".into()));
        }
    }
    Ok(target)
}

/// Wing orbit indices `1 <= i < n / 2`.
pub fn wing_indices(n: usize) -> std::ops::Range<usize> {
    1..(n / 2).max(1)
}

fn apply(state: &mut CubeState, moves: &MoveTable, seq: &[Move], out: &mut MoveSequence) {
    moves.apply_sequence(seq, state.stickers_mut());
    out.extend_from_slice(seq);
}

/// Solves corners and midges, then gives every wing orbit an even
/// permutation with at most one layer quarter turn each.
pub fn fix_parity(state: &CubeState) -> Result<MoveSequence, N3Error> {
    let n = crate::solve::check_shape(state)?;
    let mut s = state.clone();
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    let moves = MoveTable::new(state.dims());
    let target = target_colors(&s)?;
    let corners = PieceOrbit::new(OrbitKind::Corners, n, moves.layout());
    if corners.read(&s, &target)?.piece_parity_odd() {
        apply(&mut s, &moves, &[Move::new(Axis::Z, n - 1, Turn::Ccw)], &mut out);
    }
    let seq = corners.solve(&s, &target, &moves)?;
    apply(&mut s, &moves, &seq, &mut out);
    if n % 2 == 1 && n >= 3 {
        let midges = PieceOrbit::new(OrbitKind::Midges, n, moves.layout());
        let seq = midges.solve(&s, &target, &moves)?;
        apply(&mut s, &moves, &seq, &mut out);
    }
    for i in wing_indices(n) {
        let wings = PieceOrbit::new(OrbitKind::Wings(i), n, moves.layout());
        if wings.read(&s, &target)?.piece_parity_odd() {
            apply(&mut s, &moves, &[Move::new(Axis::Z, i, Turn::Ccw)], &mut out);
        }
    }
    Ok(out)
}

/// Solves every wing orbit of a state whose wing parities are even.
pub fn solve_wings(state: &CubeState) -> Result<MoveSequence, N3Error> {
    let n = crate::solve::check_shape(state)?;
    let mut s = state.clone();
    let mut out = Vec::new();
    if n < 4 {
        return Ok(out);
    }
    let moves = MoveTable::new(state.dims());
    let target = target_colors(&s)?;
    for i in wing_indices(n) {
        let wings = PieceOrbit::new(OrbitKind::Wings(i), n, moves.layout());
        let seq = wings.solve(&s, &target, &moves)?;
        apply(&mut s, &moves, &seq, &mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use cube_core::{scramble, Dims};

    fn is_boundary(n: usize, layout: &cube_core::Layout, i: usize) -> bool {
        let fc = FaceCoord::from_index(layout, i);
        fc.x == 0 || fc.y == 0 || fc.x == n - 1 || fc.y == n - 1
    }

    #[test]
    fn base_cycles_are_pure_on_the_boundary() {
        for n in [4, 5, 6, 7, 8, 9, 12, 13] {
            let moves = MoveTable::new(Dims::cube(n));
            let layout = moves.layout();
            let mut kinds = vec![OrbitKind::Corners];
            if n % 2 == 1 {
                kinds.push(OrbitKind::Midges);
            }
            kinds.extend(wing_indices(n).map(OrbitKind::Wings));
            for kind in kinds {
                let orbit = PieceOrbit::new(kind, n, layout);
                let own: std::collections::HashSet<usize> = orbit.pieces.iter().flatten().copied().collect();
                let mut data: Vec<usize> = (0..layout.len()).collect();
                moves.apply_sequence(&kind.base_sequence(n), &mut data);
                let changed: Vec<usize> =
                    (0..layout.len()).filter(|&i| data[i] != i && is_boundary(n, layout, i)).collect();
                assert_eq!(changed.len(), 3 * orbit.pieces[0].len(), "{kind:?} n={n}");
                assert!(changed.iter().all(|i| own.contains(i)), "{kind:?} n={n}");
            }
        }
    }

    #[test]
    fn conjugation_reaches_every_oriented_triple() {
        let n = 7;
        let moves = MoveTable::new(Dims::cube(n));
        for (kind, count) in [
            (OrbitKind::Corners, 24 * 21 * 18),
            (OrbitKind::Midges, 24 * 22 * 20),
            (OrbitKind::Wings(1), 24 * 23 * 22),
            (OrbitKind::Wings(2), 24 * 23 * 22),
        ] {
            let orbit = PieceOrbit::new(kind, n, moves.layout());
            assert_eq!(orbit.table(&moves).0.reachable(), count, "{kind:?}");
        }
    }

    #[test]
    fn solved_cube_reads_solved() {
        for n in [2, 3, 4, 5, 8] {
            let s = CubeState::solved(Dims::cube(n));
            let target = target_colors(&s).unwrap();
            assert_eq!(target, Face::ALL);
            assert!(fix_parity(&s).unwrap().is_empty());
            assert!(solve_wings(&s).unwrap().is_empty());
        }
    }

    #[test]
    fn boundary_gets_solved() {
        for n in [2, 3, 4, 5, 6, 7, 8] {
            for seed in 0..3 {
                let (s, _) = scramble(Dims::cube(n), seed, 120);
                let target = target_colors(&s).unwrap();
                let fix = fix_parity(&s).unwrap();
                let mid = s.apply_sequence(&fix).unwrap();
                let moves = MoveTable::new(Dims::cube(n));
                for i in wing_indices(n) {
                    let w = PieceOrbit::new(OrbitKind::Wings(i), n, moves.layout()).read(&mid, &target).unwrap();
                    assert!(!w.piece_parity_odd());
                }
                let done = mid.apply_sequence(&solve_wings(&mid).unwrap()).unwrap();
                let layout = done.layout();
                for i in 0..layout.len() {
                    if is_boundary(n, layout, i) {
                        assert_eq!(done.stickers()[i], target[layout.face_of(i).index()], "n={n} seed={seed}");
                    }
                }
            }
        }
    }
}
