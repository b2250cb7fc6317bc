//! Decomposition of a coloring into blocks around its blue rungs.
//!
//! A rung is blue when either of its vertices has the blue color. A block
//! `B_k` with `k >= 1` is a maximal run of `k` blue rungs together with the
//! blue-free rung immediately to its left; every other blue-free rung is a
//! `B0`. Each block owns its rungs' vertices and the 4-face to the right of
//! each of its rungs, so the blocks partition vertices and 4-faces.

use std::fmt;

use crate::error::{Error, Result};
use crate::lists::Color;
use crate::prism::{vertex_id, Layer, Prism};
use crate::solver::coloring::Coloring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Number of blue rungs, 0 to 3.
    pub kind: usize,
    /// Owned rungs, left to right.
    pub rungs: Vec<usize>,
}

impl Block {
    pub fn start(&self) -> usize {
        self.rungs[0]
    }

    /// Owned 4-faces: face `i` lies between rungs `i` and `i+1`.
    pub fn faces(&self) -> &[usize] {
        &self.rungs
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.rungs
            .iter()
            .flat_map(|&r| [vertex_id(Layer::U, r), vertex_id(Layer::V, r)])
            .collect()
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rungs: Vec<String> = self.rungs.iter().map(usize::to_string).collect();
        write!(f, "B{}{{{}}}", self.kind, rungs.join(","))
    }
}

/// Blocks in cyclic order, sorted by starting rung.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockSequence {
    pub n: usize,
    pub blocks: Vec<Block>,
}

impl BlockSequence {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn left_of(&self, i: usize) -> usize {
        (i + self.blocks.len() - 1) % self.blocks.len()
    }

    pub fn right_of(&self, i: usize) -> usize {
        (i + 1) % self.blocks.len()
    }

    pub fn kinds(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.kind).collect()
    }

    /// Builds the sequence for a cyclic pattern of block kinds, starting at
    /// rung 0. Used for fixtures; no coloring is involved.
    pub fn from_kinds(kinds: &[usize]) -> Result<Self> {
        let mut blocks = Vec::with_capacity(kinds.len());
        let mut r = 0;
        for &k in kinds {
            if k > 3 {
                return Err(Error::InvalidParameter(format!("no block B{k}")));
            }
            let width = if k == 0 { 1 } else { k + 1 };
            blocks.push(Block { kind: k, rungs: (r..r + width).collect() });
            r += width;
        }
        Ok(BlockSequence { n: r, blocks })
    }
}

impl fmt::Display for BlockSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.blocks.iter().map(Block::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn blue_rungs(p: &Prism, c: &Coloring, blue: Color) -> Vec<bool> {
    (0..p.n())
        .map(|i| c.color(vertex_id(Layer::U, i)) == blue || c.color(vertex_id(Layer::V, i)) == blue)
        .collect()
}

pub fn block_decompose(p: &Prism, c: &Coloring, blue: Color) -> Result<BlockSequence> {
    let n = p.n();
    let is_blue = blue_rungs(p, c, blue);
    if is_blue.iter().all(|&b| b) {
        return Err(Error::BlueRunTooLong { start: 0, len: n });
    }
    let mut lead = vec![false; n];
    let mut blocks = Vec::new();
    for s in 0..n {
        let prev = (s + n - 1) % n;
        if !is_blue[s] || is_blue[prev] {
            continue;
        }
        let len = (0..n).take_while(|&k| is_blue[(s + k) % n]).count();
        if len >= 4 {
            return Err(Error::BlueRunTooLong { start: s, len });
        }
        lead[prev] = true;
        let mut rungs = vec![prev];
        rungs.extend((0..len).map(|k| (s + k) % n));
        blocks.push(Block { kind: len, rungs });
    }
    for r in 0..n {
        if !is_blue[r] && !lead[r] {
            blocks.push(Block { kind: 0, rungs: vec![r] });
        }
    }
    blocks.sort_by_key(Block::start);
    Ok(BlockSequence { n, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coloring_with_blue(n: usize, blue: &[(Layer, usize)]) -> Coloring {
        let mut colors: Vec<Color> = (0..2 * n).map(|v| 10 + v as Color).collect();
        for &(layer, i) in blue {
            colors[vertex_id(layer, i)] = 0;
        }
        Coloring::new(colors)
    }

    #[test]
    fn isolated_blue_rungs() {
        let p = Prism::new(6).unwrap();
        let c = coloring_with_blue(6, &[(Layer::U, 0), (Layer::V, 2)]);
        let s = block_decompose(&p, &c, 0).unwrap();
        assert_eq!(s.to_string(), "B1{1,2} B0{3} B0{4} B1{5,0}");
        assert_eq!(s.kinds().iter().filter(|&&k| k == 1).count(), 2);
    }

    #[test]
    fn run_of_two() {
        let p = Prism::new(6).unwrap();
        let c = coloring_with_blue(6, &[(Layer::U, 0), (Layer::V, 1)]);
        let s = block_decompose(&p, &c, 0).unwrap();
        assert_eq!(s.to_string(), "B0{2} B0{3} B0{4} B2{5,0,1}");
    }

    #[test]
    fn long_runs_rejected() {
        let p = Prism::new(6).unwrap();
        let c = coloring_with_blue(6, &[(Layer::U, 0), (Layer::V, 1), (Layer::U, 2), (Layer::V, 3)]);
        assert_eq!(block_decompose(&p, &c, 0), Err(Error::BlueRunTooLong { start: 0, len: 4 }));
        let all: Vec<(Layer, usize)> = (0..6).map(|i| (if i % 2 == 0 { Layer::U } else { Layer::V }, i)).collect();
        let c = coloring_with_blue(6, &all);
        assert!(matches!(block_decompose(&p, &c, 0), Err(Error::BlueRunTooLong { len: 6, .. })));
    }

    #[test]
    fn partition_of_rungs() {
        let p = Prism::new(10).unwrap();
        let c = coloring_with_blue(10, &[(Layer::U, 1), (Layer::V, 2), (Layer::U, 3), (Layer::V, 6), (Layer::U, 9)]);
        let s = block_decompose(&p, &c, 0).unwrap();
        let mut seen: Vec<usize> = s.blocks.iter().flat_map(|b| b.rungs.clone()).collect();
        seen.sort_unstable();
        assert_eq!(seen, (0..10).collect::<Vec<_>>());
        assert_eq!(s.kinds(), vec![3, 0, 1, 0, 1]);
    }

    #[test]
    fn from_kinds_layout() {
        let s = BlockSequence::from_kinds(&[0, 3, 1]).unwrap();
        assert_eq!(s.n, 7);
        assert_eq!(s.to_string(), "B0{0} B3{1,2,3,4} B1{5,6}");
    }
}
