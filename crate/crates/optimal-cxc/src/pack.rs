//! Sticker colors packed three bits apiece into a `u128`.

use std::collections::BTreeMap;

use cube_core::{Color, Face};

pub const MAX_STICKERS: usize = 42;

pub fn pack(colors: impl IntoIterator<Item = Color>) -> u128 {
    colors
        .into_iter()
        .enumerate()
        .fold(0, |acc, (i, c)| acc | (c.index() as u128) << (3 * i))
}

pub fn unpack(key: u128, len: usize) -> Vec<Color> {
    (0..len).map(|i| Face::from_index((key >> (3 * i) & 7) as usize)).collect()
}

/// A sticker permutation on packed keys. Pairs that travel the same
/// distance move together under one mask and shift.
#[derive(Debug, Clone)]
pub struct PackedPerm {
    keep: u128,
    shifts: Vec<(i32, u128)>,
}

impl PackedPerm {
    /// From `(from, to)` pairs; unlisted stickers stay put.
    pub fn new(map: &[(usize, usize)]) -> Self {
        let mut keep = !0u128;
        let mut groups: BTreeMap<i32, u128> = BTreeMap::new();
        for &(from, to) in map {
            keep &= !(7u128 << (3 * from));
            *groups.entry(3 * (to as i32 - from as i32)).or_default() |= 7u128 << (3 * from);
        }
        PackedPerm { keep, shifts: groups.into_iter().collect() }
    }

    pub fn apply(&self, key: u128) -> u128 {
        let mut out = key & self.keep;
        for &(d, mask) in &self.shifts {
            let part = key & mask;
            out |= if d >= 0 { part << d } else { part >> -d };
        }
        out
    }
}
