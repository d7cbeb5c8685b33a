//! Solving one 24-position cluster with the frame commutators.

use std::sync::OnceLock;

use cube_core::{invert_sequence, Color, CubeState, Face, MoveSequence, MoveTable};

use crate::cms::ClusterMoveSequence;
use crate::conj::TripleTable;
use crate::error::N3Error;
use crate::facecoord::{natural_positions, side_positions, FaceCoord};
use crate::orbit::{solve_pieces, PieceState};
use crate::perm::{generator_frame, generator_perm, Perm, Perm24, GENERATORS, SIDE_LABELS};

/// Whether a cluster `(x, y)` has `x < y` or `x > y`. Solutions differ
/// only in which of x and y each layer move is tied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chirality {
    Below,
    Above,
}

impl Chirality {
    pub fn of(x: usize, y: usize) -> Option<Chirality> {
        match x.cmp(&y) {
            std::cmp::Ordering::Less => Some(Chirality::Below),
            std::cmp::Ordering::Greater => Some(Chirality::Above),
            std::cmp::Ordering::Equal => None,
        }
    }

    fn representative(self) -> (usize, usize, usize) {
        match self {
            Chirality::Below => (1, 2, 8),
            Chirality::Above => (2, 1, 8),
        }
    }
}

/// One generator use: the commutator of frame `gen`, or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenRef {
    pub gen: usize,
    pub inverse: bool,
}

impl GenRef {
    pub fn perm(self, gens: &[Perm]) -> Perm {
        if self.inverse {
            gens[self.gen].inverse()
        } else {
            gens[self.gen].clone()
        }
    }

    pub fn moves(self, x: usize, y: usize, n: usize) -> MoveSequence {
        let seq = generator_frame(self.gen).sequence(x, y, n);
        if self.inverse {
            invert_sequence(&seq)
        } else {
            seq
        }
    }
}

/// Colors of one cluster, indexed by its position order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClusterColoring {
    pub colors: [Color; 24],
}

impl ClusterColoring {
    /// Fails unless every color appears exactly four times.
    pub fn new(colors: [Color; 24]) -> Result<Self, N3Error> {
        let mut counts = [0; 6];
        for c in colors {
            counts[c.index()] += 1;
        }
        if counts != [4; 6] {
            return Err(N3Error::PreconditionViolation(format!("color counts {counts:?}")));
        }
        Ok(ClusterColoring { colors })
    }

    pub fn read(state: &CubeState, positions: &[FaceCoord]) -> Self {
        let mut colors = [Face::U; 24];
        for (c, p) in colors.iter_mut().zip(positions) {
            *c = state.stickers()[p.index(state.layout())];
        }
        ClusterColoring { colors }
    }

    /// The coloring of a solved cube with face colors `target`.
    pub fn solved(positions: &[FaceCoord], target: &[Color; 6]) -> Self {
        let mut colors = [Face::U; 24];
        for (c, p) in colors.iter_mut().zip(positions) {
            *c = target[p.face.index()];
        }
        ClusterColoring { colors }
    }

    /// One byte per position.
    pub fn key(&self) -> [u8; 24] {
        self.colors.map(|c| c as u8)
    }
}

/// Positions of inner cluster `(x, y)`. Off-diagonal clusters use the
/// frozen order the generator table is written in; diagonal ones list
/// rotations face by face.
pub fn cluster_positions(x: usize, y: usize, n: usize) -> Result<Vec<FaceCoord>, N3Error> {
    let inner = |v: usize| v >= 1 && v < n / 2;
    if !inner(x) || !inner(y) {
        return Err(N3Error::OutOfRange { x, y, n });
    }
    if x == y {
        return Ok(natural_positions(n, x, y).to_vec());
    }
    let side = side_positions(n, x, y);
    let mut out = side.to_vec();
    for (i, &label) in SIDE_LABELS.iter().enumerate() {
        out[label as usize - 1] = side[i];
    }
    Ok(out)
}

/// Permutation realized on `positions` by each generator's commutator at
/// cluster `(x, y)`, found by simulation. Fails if some commutator is not
/// a 3-cycle inside the cluster.
pub fn simulated_generators(table: &MoveTable, positions: &[FaceCoord], x: usize, y: usize) -> Option<Vec<Perm>> {
    let layout = table.layout();
    let n = layout.dims.l;
    let idx: Vec<usize> = positions.iter().map(|p| p.index(layout)).collect();
    let mut out = Vec::with_capacity(24);
    for g in 0..GENERATORS.len() {
        let mut data: Vec<usize> = (0..layout.len()).collect();
        table.apply_sequence(&generator_frame(g).sequence(x, y, n), &mut data);
        let changed: Vec<usize> = (0..layout.len()).filter(|&i| data[i] != i).collect();
        if changed.len() != 3 {
            return None;
        }
        let mut images: Vec<usize> = (0..positions.len()).collect();
        for &to in &changed {
            let a = idx.iter().position(|&q| q == data[to])?;
            let b = idx.iter().position(|&q| q == to)?;
            images[a] = b;
        }
        out.push(Perm::from_images(images)?);
    }
    Some(out)
}

/// Generators and routing table for one cluster shape.
#[derive(Debug, Clone)]
pub struct Toolkit {
    pub gens: Vec<Perm>,
    pub table: TripleTable,
}

impl Toolkit {
    pub fn new(gens: Vec<Perm>) -> Self {
        let steps: Vec<Perm> = gens.iter().cloned().chain(gens.iter().map(|g| g.inverse())).collect();
        let bases: Vec<[usize; 3]> =
            gens.iter().map(|g| g.as_three_cycle().expect("generators are 3-cycles")).collect();
        let table = TripleTable::build(gens[0].len(), steps, &bases);
        Toolkit { gens, table }
    }

    /// The toolkit of off-diagonal inner clusters, built from the table.
    pub fn frozen() -> &'static Toolkit {
        static KIT: OnceLock<Toolkit> = OnceLock::new();
        KIT.get_or_init(|| Toolkit::new((0..GENERATORS.len()).map(generator_perm).collect()))
    }

    fn step_ref(&self, m: usize) -> GenRef {
        let k = self.gens.len();
        GenRef { gen: m % k, inverse: m >= k }
    }

    /// Generator word realizing the cycle `a -> b -> c` (0-based).
    pub fn express(&self, t: [usize; 3]) -> Option<Vec<GenRef>> {
        let r = self.table.route(t)?;
        let (word, back) = self.table.expand(&r);
        let mut out: Vec<GenRef> = word.into_iter().map(|m| self.step_ref(m)).collect();
        out.push(GenRef { gen: r.base, inverse: r.inverted });
        out.extend(back.into_iter().map(|m| self.step_ref(m)));
        Some(out)
    }

    /// Shortest generator word taking `d` to `solved` among the candidate
    /// permutations.
    pub fn solve_word(&self, d: &ClusterColoring, solved: &ClusterColoring) -> Result<Vec<GenRef>, N3Error> {
        let mut best: Option<Vec<GenRef>> = None;
        for sigma in coloring_permutations(d, solved)? {
            let word = self.word_for(&sigma)?;
            if best.as_ref().is_none_or(|b| word.len() < b.len()) {
                best = Some(word);
            }
        }
        best.ok_or(N3Error::OddParity)
    }

    /// Generator word moving the sticker at each position `i` to
    /// `sigma[i]`, for an even `sigma`.
    pub fn word_for(&self, sigma: &Perm) -> Result<Vec<GenRef>, N3Error> {
        let state = PieceState { k: 1, occupant: sigma.images().to_vec() };
        let mut out = Vec::new();
        for c in solve_pieces(&state).map_err(|_| N3Error::OddParity)? {
            out.extend(self.express(c).ok_or_else(|| N3Error::Unsolvable(format!("no route for {c:?}")))?);
        }
        Ok(out)
    }
}

/// Word of generators realizing a 3-cycle (0-based, `a -> b -> c`) on
/// off-diagonal clusters.
pub fn express_three_cycle(t: [usize; 3]) -> Vec<GenRef> {
    Toolkit::frozen().express(t).expect("the generators act 3-transitively")
}

/// Permutations sending each sticker of `d` to a position of its color in
/// `solved`: stickers already in place stay, the rest take the least free
/// position of their color. If that is odd, the images of a same-colored
/// pair are swapped; every pair with the most moving positions is offered,
/// lowest first. `perm[i]` is where position `i`'s sticker goes.
pub fn coloring_permutations(d: &ClusterColoring, solved: &ClusterColoring) -> Result<Vec<Perm24>, N3Error> {
    let k = d.colors.len();
    let fixed: Vec<bool> = (0..k).map(|i| d.colors[i] == solved.colors[i]).collect();
    let mut used = fixed.clone();
    let mut images = Vec::with_capacity(k);
    for i in 0..k {
        if fixed[i] {
            images.push(i);
            continue;
        }
        let j = (0..k)
            .find(|&j| !used[j] && solved.colors[j] == d.colors[i])
            .ok_or_else(|| N3Error::PreconditionViolation("coloring does not match the cluster".into()))?;
        used[j] = true;
        images.push(j);
    }
    let p = Perm::from_images(images).expect("bijection");
    if !p.is_odd() {
        return Ok(vec![p]);
    }
    let moving = |i: usize| usize::from(!fixed[i]);
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .filter(|&(i, j)| d.colors[i] == d.colors[j])
        .collect();
    let best = pairs.iter().map(|&(i, j)| moving(i) + moving(j)).max().ok_or(N3Error::OddParity)?;
    Ok(pairs
        .into_iter()
        .filter(|&(i, j)| moving(i) + moving(j) == best)
        .map(|(i, j)| {
            let mut images = p.images().to_vec();
            images.swap(i, j);
            Perm::from_images(images).expect("bijection")
        })
        .collect())
}

/// The first of [`coloring_permutations`].
pub fn coloring_permutation(d: &ClusterColoring, solved: &ClusterColoring) -> Result<Perm24, N3Error> {
    Ok(coloring_permutations(d, solved)?.swap_remove(0))
}

/// Typed solution for an off-diagonal cluster in coloring `d`, where the
/// solved coloring is `solved`.
pub fn cluster_solution(
    d: &ClusterColoring,
    solved: &ClusterColoring,
    chirality: Chirality,
) -> Result<ClusterMoveSequence, N3Error> {
    let word = Toolkit::frozen().solve_word(d, solved)?;
    Ok(type_word(&word, chirality))
}

/// Types a generator word through the representative cluster of
/// `chirality`.
pub fn type_word(word: &[GenRef], chirality: Chirality) -> ClusterMoveSequence {
    let (x, y, n) = chirality.representative();
    let moves: MoveSequence = word.iter().flat_map(|g| g.moves(x, y, n)).collect();
    ClusterMoveSequence::from_moves(&moves, x, y, n).expect("commutators only use the cluster's layers")
}

/// Toolkit of any cluster whose commutators stay inside it, such as the
/// diagonal clusters and those on a middle line.
pub fn simulated_toolkit(table: &MoveTable, positions: &[FaceCoord], x: usize, y: usize) -> Result<Toolkit, N3Error> {
    let gens = simulated_generators(table, positions, x, y)
        .ok_or_else(|| N3Error::Unsolvable(format!("commutators leave cluster ({x}, {y})")))?;
    Ok(Toolkit::new(gens))
}
