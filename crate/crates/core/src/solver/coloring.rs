use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::lists::{Color, ListAssignment};
use crate::prism::Prism;

/// A total map from vertices to colors. Properness and list-respect are
/// predicates, not construction invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    pub fn new(colors: Vec<Color>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: Color) {
        self.colors[v] = c;
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Class sizes keyed by color.
    pub fn class_sizes(&self) -> BTreeMap<Color, usize> {
        let mut m = BTreeMap::new();
        for &c in &self.colors {
            *m.entry(c).or_insert(0) += 1;
        }
        m
    }

    pub fn class_size(&self, c: Color) -> usize {
        self.colors.iter().filter(|&&x| x == c).count()
    }

    pub fn word(&self) -> ColorWord {
        ColorWord::from_sizes(self.class_sizes().into_values())
    }

    pub fn max_class(&self) -> usize {
        self.class_sizes().into_values().max().unwrap_or(0)
    }

    /// Colors whose class has maximum size, ascending.
    pub fn largest_colors(&self) -> Vec<Color> {
        let sizes = self.class_sizes();
        let max = sizes.values().copied().max().unwrap_or(0);
        sizes
            .into_iter()
            .filter(|&(_, s)| s == max)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn color_count(&self) -> usize {
        self.class_sizes().len()
    }

    pub fn is_bounded(&self, bound: usize) -> bool {
        self.max_class() <= bound
    }
}

pub fn is_proper(p: &Prism, c: &Coloring) -> bool {
    c.len() == p.vertex_count() && p.edges().into_iter().all(|(a, b)| c.color(a) != c.color(b))
}

/// Properness over an arbitrary adjacency list.
pub fn is_proper_adj(adj: &[Vec<usize>], colors: &[Color]) -> bool {
    adj.iter()
        .enumerate()
        .all(|(a, ns)| ns.iter().all(|&b| colors[a] != colors[b]))
}

pub fn respects_lists(l: &ListAssignment, c: &Coloring) -> bool {
    c.len() == l.len() && (0..c.len()).all(|v| l.contains(v, c.color(v)))
}

/// `⌈2n/3⌉`, the equitable bound for 3-uniform lists on `Π_n`.
pub fn equitable_bound(n: usize) -> usize {
    (2 * n).div_ceil(3)
}

/// Class sizes sorted in non-increasing order.
///
/// Words of different lengths compare as if the shorter one were padded
/// with zeros. Entries are positive, so that is plain lexicographic order
/// on the sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ColorWord(Vec<u32>);

impl ColorWord {
    pub fn from_sizes(sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<u32> = sizes
            .into_iter()
            .filter(|&s| s > 0)
            .map(|s| s as u32)
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        ColorWord(v)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for ColorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.0.len().max(other.0.len());
        for i in 0..len {
            let a = self.0.get(i).copied().unwrap_or(0);
            let b = other.0.get(i).copied().unwrap_or(0);
            match a.cmp(&b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for ColorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}
