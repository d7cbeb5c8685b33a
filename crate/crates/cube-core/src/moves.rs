//! Slice moves and their textual form `<axis><index>:<turn>`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::CubeError;
use crate::geometry::{Axis, Dims, Face, Layout, StickerPos};

/// Rotation amount. `Ccw` is +90 degrees, counterclockwise when viewed from
/// the positive end of the rotation axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Turn {
    Ccw,
    Cw,
    Half,
}

impl Turn {
    pub fn inverse(self) -> Turn {
        match self {
            Turn::Ccw => Turn::Cw,
            Turn::Cw => Turn::Ccw,
            Turn::Half => Turn::Half,
        }
    }

    /// Quarter turns counterclockwise, in 1..=3.
    pub fn quarters(self) -> u8 {
        match self {
            Turn::Ccw => 1,
            Turn::Half => 2,
            Turn::Cw => 3,
        }
    }

    pub fn from_quarters(q: u8) -> Option<Turn> {
        match q % 4 {
            1 => Some(Turn::Ccw),
            2 => Some(Turn::Half),
            3 => Some(Turn::Cw),
            _ => None,
        }
    }

    pub fn is_quarter(self) -> bool {
        self != Turn::Half
    }

    fn symbol(self) -> char {
        match self {
            Turn::Ccw => '+',
            Turn::Cw => '-',
            Turn::Half => '2',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub axis: Axis,
    pub index: usize,
    pub turn: Turn,
}

pub type MoveSequence = Vec<Move>;

impl Move {
    pub fn new(axis: Axis, index: usize, turn: Turn) -> Self {
        Move { axis, index, turn }
    }

    pub fn inverse(self) -> Move {
        Move {
            turn: self.turn.inverse(),
            ..self
        }
    }

    /// Checks the legality rules for `dims`.
    pub fn check(self, dims: Dims) -> Result<(), CubeError> {
        let illegal = |reason| CubeError::IllegalMove {
            mv: self,
            index: None,
            reason,
        };
        let d = dims.as_array();
        let a = self.axis.index();
        if self.index >= d[a] {
            return Err(illegal("slice index out of range"));
        }
        if d[a] == 1 {
            return Err(illegal("only slice of a thickness-1 axis"));
        }
        if self.turn.is_quarter() && d[(a + 1) % 3] != d[(a + 2) % 3] {
            return Err(illegal("quarter turn of a non-square slice"));
        }
        Ok(())
    }

    pub fn is_legal(self, dims: Dims) -> bool {
        self.check(dims).is_ok()
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}:{}",
            self.axis.letter(),
            self.index,
            self.turn.symbol()
        )
    }
}

fn parse_move_at(text: &str, base: usize) -> Result<Move, CubeError> {
    let mut chars = text.char_indices();
    let axis = match chars.next() {
        Some((_, 'x')) => Axis::X,
        Some((_, 'y')) => Axis::Y,
        Some((_, 'z')) => Axis::Z,
        Some((_, c)) => return Err(CubeError::parse(base, format!("expected axis x, y or z, got {c:?}"))),
        None => return Err(CubeError::parse(base, "empty move")),
    };
    let colon = text
        .find(':')
        .ok_or_else(|| CubeError::parse(base + text.len(), "missing ':'"))?;
    let digits = &text[1..colon];
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(CubeError::parse(base + 1, format!("bad slice index {digits:?}")));
    }
    let index = digits
        .parse()
        .map_err(|_| CubeError::parse(base + 1, "slice index too large"))?;
    let turn = match &text[colon + 1..] {
        "+" => Turn::Ccw,
        "-" => Turn::Cw,
        "2" => Turn::Half,
        t => return Err(CubeError::parse(base + colon + 1, format!("bad turn {t:?}"))),
    };
    Ok(Move { axis, index, turn })
}

impl FromStr for Move {
    type Err = CubeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_move_at(s, 0)
    }
}

pub fn parse_move(text: &str) -> Result<Move, CubeError> {
    text.parse()
}

pub fn format_move(mv: Move) -> String {
    mv.to_string()
}

/// Parses a whitespace separated move list. Error positions are byte offsets
/// into `text`.
pub fn parse_sequence(text: &str) -> Result<MoveSequence, CubeError> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in text.char_indices().chain(std::iter::once((text.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(parse_move_at(&text[s..i], s)?);
                start = None;
            }
            _ => {}
        }
    }
    Ok(out)
}

pub fn format_sequence(seq: &[Move]) -> String {
    seq.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ")
}

/// Reversed order with every turn negated.
pub fn invert_sequence(seq: &[Move]) -> MoveSequence {
    seq.iter().rev().map(|m| m.inverse()).collect()
}

/// Merges adjacent moves on the same slice and drops those that cancel.
pub fn simplify(seq: &[Move]) -> MoveSequence {
    let mut out: MoveSequence = Vec::with_capacity(seq.len());
    for &mv in seq {
        match out.last() {
            Some(&prev) if prev.axis == mv.axis && prev.index == mv.index => {
                out.pop();
                if let Some(turn) = Turn::from_quarters(prev.turn.quarters() + mv.turn.quarters()) {
                    out.push(Move { turn, ..mv });
                }
            }
            _ => out.push(mv),
        }
    }
    out
}

/// Every legal move for `dims`, ordered by axis, index, then turn.
pub fn legal_moves(dims: Dims) -> Vec<Move> {
    let mut out = Vec::new();
    for axis in Axis::ALL {
        for index in 0..dims.along(axis) {
            for turn in [Turn::Ccw, Turn::Cw, Turn::Half] {
                let mv = Move { axis, index, turn };
                if mv.is_legal(dims) {
                    out.push(mv);
                }
            }
        }
    }
    out
}

fn rotate_point(dims: Dims, axis: Axis, turn: Turn, p: [usize; 3]) -> [usize; 3] {
    let d = dims.as_array();
    let a = axis.index();
    let (b, c) = ((a + 1) % 3, (a + 2) % 3);
    let mut q = p;
    match turn {
        Turn::Ccw => {
            q[b] = d[c] - 1 - p[c];
            q[c] = p[b];
        }
        Turn::Cw => {
            q[b] = p[c];
            q[c] = d[b] - 1 - p[b];
        }
        Turn::Half => {
            q[b] = d[b] - 1 - p[b];
            q[c] = d[c] - 1 - p[c];
        }
    }
    q
}

fn rotate_face(axis: Axis, turn: Turn, face: Face) -> Face {
    let (na, pos) = face.normal();
    let mut v = [0i8; 3];
    v[na.index()] = if pos { 1 } else { -1 };
    let a = axis.index();
    let (b, c) = ((a + 1) % 3, (a + 2) % 3);
    let mut w = v;
    match turn {
        Turn::Ccw => {
            w[b] = -v[c];
            w[c] = v[b];
        }
        Turn::Cw => {
            w[b] = v[c];
            w[c] = -v[b];
        }
        Turn::Half => {
            w[b] = -v[b];
            w[c] = -v[c];
        }
    }
    let i = (0..3).find(|&i| w[i] != 0).unwrap_or(0);
    Face::from_normal(Axis::from_index(i), w[i] > 0)
}

/// Sticker moves performed by `mv` as `(from, to)` pairs of flat indices.
/// Stickers that stay put are not listed. Legality is not checked.
pub fn sticker_map(layout: &Layout, mv: Move) -> Vec<(usize, usize)> {
    let dims = layout.dims;
    let a = mv.axis.index();
    let mut out = Vec::new();
    let mut push = |idx: usize| {
        let sp = layout.sticker_pos(idx);
        let to = StickerPos {
            cubie: rotate_point(dims, mv.axis, mv.turn, sp.cubie),
            face: rotate_face(mv.axis, mv.turn, sp.face),
        };
        let j = layout.index_of(to);
        if j != idx {
            out.push((idx, j));
        }
    };
    for face in Face::ALL {
        let (na, positive) = face.normal();
        let (rows, cols) = layout.shape(face);
        if na == mv.axis {
            let end = if positive { dims.along(na) - 1 } else { 0 };
            if mv.index == end {
                for r in 0..rows {
                    for c in 0..cols {
                        push(layout.index(face, r, c));
                    }
                }
            }
            continue;
        }
        let (ra, _) = face.grid_axes();
        if ra.index() == a {
            for c in 0..cols {
                push(layout.index(face, mv.index, c));
            }
        } else {
            for r in 0..rows {
                push(layout.index(face, r, mv.index));
            }
        }
    }
    out
}

/// Applies `mv` in place to any per-sticker data laid out by `layout`.
pub fn permute_in_place<T: Copy>(layout: &Layout, mv: Move, data: &mut [T]) {
    let map = sticker_map(layout, mv);
    let moved: Vec<T> = map.iter().map(|&(from, _)| data[from]).collect();
    for (&(_, to), v) in map.iter().zip(moved) {
        data[to] = v;
    }
}

/// Sticker maps for every legal move of one layout, computed up front.
/// Worth it when many moves are applied to the same puzzle.
#[derive(Debug, Clone)]
pub struct MoveTable {
    layout: Layout,
    maps: Vec<Option<Vec<(u32, u32)>>>,
}

impl MoveTable {
    pub fn new(dims: Dims) -> Self {
        let layout = Layout::new(dims);
        let longest = dims.as_array().into_iter().max().unwrap_or(0);
        let mut maps = vec![None; 3 * longest * 3];
        for mv in legal_moves(dims) {
            let map = sticker_map(&layout, mv).into_iter().map(|(a, b)| (a as u32, b as u32)).collect();
            maps[Self::slot(longest, mv)] = Some(map);
        }
        MoveTable { layout, maps }
    }

    fn slot(longest: usize, mv: Move) -> usize {
        (mv.axis.index() * longest + mv.index) * 3 + mv.turn.quarters() as usize - 1
    }

    pub fn layout(&self) -> &Layout {
        &self.layout
    }

    /// Panics on a move that is illegal for the table's dimensions.
    pub fn apply<T: Copy>(&self, mv: Move, data: &mut [T]) {
        let longest = self.maps.len() / 9;
        let map = self
            .maps
            .get(Self::slot(longest, mv))
            .and_then(|m| m.as_ref())
            .unwrap_or_else(|| panic!("illegal move {mv} for {}", self.layout.dims));
        let moved: Vec<T> = map.iter().map(|&(from, _)| data[from as usize]).collect();
        for (&(_, to), v) in map.iter().zip(moved) {
            data[to as usize] = v;
        }
    }

    pub fn apply_sequence<T: Copy>(&self, seq: &[Move], data: &mut [T]) {
        for &mv in seq {
            self.apply(mv, data);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_direct_maps() {
        for dims in [Dims::cube(4), Dims::new(2, 3, 5).unwrap()] {
            let table = MoveTable::new(dims);
            let layout = Layout::new(dims);
            for mv in legal_moves(dims) {
                let mut a: Vec<usize> = (0..layout.len()).collect();
                let mut b = a.clone();
                table.apply(mv, &mut a);
                permute_in_place(&layout, mv, &mut b);
                assert_eq!(a, b, "{mv}");
            }
        }
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_move("y3:2").unwrap(), Move::new(Axis::Y, 3, Turn::Half));
        assert_eq!(parse_move("z0:+").unwrap(), Move::new(Axis::Z, 0, Turn::Ccw));
        assert!(matches!(parse_move("w1:2"), Err(CubeError::Parse { pos: 0, .. })));
        assert!(parse_move("x:2").is_err());
        assert!(parse_move("x1:3").is_err());
        assert!(parse_move("x1").is_err());
    }

    #[test]
    fn sequence_errors_carry_offsets() {
        let err = parse_sequence("x0:2  y1:+ q2:2").unwrap_err();
        assert_eq!(err, CubeError::parse(11, "expected axis x, y or z, got 'q'"));
        assert_eq!(parse_sequence("  ").unwrap(), vec![]);
    }

    #[test]
    fn inversion_examples() {
        assert!(invert_sequence(&[]).is_empty());
        let half = Move::new(Axis::Y, 0, Turn::Half);
        assert_eq!(invert_sequence(&[half]), vec![half]);
        let seq = [Move::new(Axis::Z, 0, Turn::Ccw), Move::new(Axis::X, 2, Turn::Half)];
        assert_eq!(
            invert_sequence(&seq),
            vec![Move::new(Axis::X, 2, Turn::Half), Move::new(Axis::Z, 0, Turn::Cw)]
        );
    }

    #[test]
    fn legality() {
        let flat = Dims::new(5, 5, 1).unwrap();
        assert!(Move::new(Axis::Z, 0, Turn::Half).check(flat).is_err());
        assert!(Move::new(Axis::X, 1, Turn::Ccw).check(flat).is_err());
        assert!(Move::new(Axis::X, 1, Turn::Half).check(flat).is_ok());
        assert!(Move::new(Axis::X, 5, Turn::Half).check(flat).is_err());
        assert_eq!(legal_moves(flat).len(), 10);
        assert!(legal_moves(Dims::new(1, 1, 1).unwrap()).is_empty());
        assert_eq!(legal_moves(Dims::cube(3)).len(), 27);
    }

    #[test]
    fn simplify_merges_runs() {
        let a = Move::new(Axis::X, 1, Turn::Ccw);
        let b = Move::new(Axis::Y, 0, Turn::Half);
        assert_eq!(simplify(&[a, a]), vec![Move::new(Axis::X, 1, Turn::Half)]);
        assert_eq!(simplify(&[b, a, a.inverse(), b]), vec![]);
        assert_eq!(simplify(&[a, b]), vec![a, b]);
    }
}
