//! Placing configurations on a colored prism.

use std::collections::BTreeMap;

use crate::lists::Color;
use crate::prism::Prism;
use crate::reductions::pattern::{CellSpec, Config, Hypothesis, Role};
use crate::solver::coloring::{equitable_bound, Coloring};
use crate::symmetry::{automorphism_group, VertexMap};

/// A configuration laid onto the prism: `cells[i]` is the vertex playing
/// window cell `i`, and `binding` fixes the color of every role.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    pub map: VertexMap,
    pub cells: Vec<usize>,
    pub binding: BTreeMap<Role, Color>,
}

impl Placement {
    pub fn role(&self, r: Role) -> Option<Color> {
        self.binding.get(&r).copied()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MatchOptions {
    /// Require the configuration's class-size hypothesis.
    pub hypothesis: bool,
}

impl Default for MatchOptions {
    fn default() -> Self {
        MatchOptions { hypothesis: true }
    }
}

/// Whether `c` satisfies the class-size hypothesis with the given blue
/// (and, for two-class hypotheses, red) colors.
pub fn hypothesis_holds(
    p: &Prism,
    c: &Coloring,
    hyp: Hypothesis,
    blue: Color,
    red: Option<Color>,
) -> bool {
    let sizes = c.class_sizes();
    let size = |x: Color| sizes.get(&x).copied().unwrap_or(0);
    let b = size(blue);
    let high = equitable_bound(p.n()) + 1;
    match hyp {
        Hypothesis::Pi4 => p.n() == 4 && b == 4,
        Hypothesis::Blue => {
            b >= high && sizes.iter().all(|(&x, &s)| x == blue || b >= s + 2)
        }
        Hypothesis::RedBlue => {
            let Some(red) = red else { return false };
            let r = size(red);
            b >= high
                && r <= b
                && r + 1 >= b
                && sizes
                    .iter()
                    .all(|(&x, &s)| x == blue || x == red || (b >= s + 2 && r >= s + 2))
        }
    }
}

/// Every placement over the symmetry group where the cell constraints hold.
/// Blue binds to each largest class in turn; under the two-class hypothesis
/// red binds to each largest remaining class.
pub fn find_matches(p: &Prism, c: &Coloring, cfg: &Config, opts: MatchOptions) -> Vec<Placement> {
    if cfg.width > p.n() || cfg.n.is_some_and(|n| n != p.n()) {
        return Vec::new();
    }
    let sizes = c.class_sizes();
    let mut out: Vec<Placement> = Vec::new();
    for blue in c.largest_colors() {
        let reds: Vec<Option<Color>> = if cfg.hypothesis == Hypothesis::RedBlue {
            let best = sizes.iter().filter(|(&x, _)| x != blue).map(|(_, &s)| s).max();
            sizes
                .iter()
                .filter(|(&x, &s)| x != blue && Some(s) == best)
                .map(|(&x, _)| Some(x))
                .collect()
        } else {
            vec![None]
        };
        for red in reds {
            if opts.hypothesis && !hypothesis_holds(p, c, cfg.hypothesis, blue, red) {
                continue;
            }
            for map in automorphism_group(p) {
                if let Some(pl) = place(c, cfg, &map, blue, red) {
                    if !out.iter().any(|o| o.cells == pl.cells && o.binding == pl.binding) {
                        out.push(pl);
                    }
                }
            }
        }
    }
    out
}

fn place(
    c: &Coloring,
    cfg: &Config,
    map: &VertexMap,
    blue: Color,
    red: Option<Color>,
) -> Option<Placement> {
    let cells: Vec<usize> = (0..cfg.cells.len()).map(|i| map.apply(i)).collect();
    let mut binding = BTreeMap::new();
    binding.insert(Role::Blue, blue);
    if let Some(r) = red {
        binding.insert(Role::Red, r);
    }
    for (i, spec) in cfg.cells.iter().enumerate() {
        let color = c.color(cells[i]);
        match spec {
            CellSpec::Free => {}
            CellSpec::NotBlue => {
                if color == blue {
                    return None;
                }
            }
            CellSpec::Role(role) => match binding.get(role) {
                Some(&b) if b != color => return None,
                Some(_) => {}
                None => {
                    if binding.values().any(|&b| b == color) {
                        return None;
                    }
                    binding.insert(*role, color);
                }
            },
        }
    }
    Some(Placement {
        map: map.clone(),
        cells,
        binding,
    })
}
