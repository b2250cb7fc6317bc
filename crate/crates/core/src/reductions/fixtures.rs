//! Random colorings carrying a planted configuration.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lists::{Color, ListAssignment};
use crate::prism::{layer_of, rung_of, Prism};
use crate::reductions::matching::{find_matches, hypothesis_holds, MatchOptions, Placement};
use crate::reductions::pattern::{CellSpec, Config, Hypothesis, Role};
use crate::solver::coloring::{is_proper, respects_lists, Coloring};
use crate::symmetry::automorphism_group;

/// Colors are drawn from `0..PALETTE`.
pub const PALETTE: Color = 9;
const ATTEMPTS: usize = 2_000;
pub const DEFAULT_BIAS: f64 = 0.6;

pub fn role_color(r: Role) -> Color {
    match r {
        Role::Blue => 0,
        Role::Red => 1,
        Role::Yellow => 2,
        Role::Green => 3,
        Role::Pink => 4,
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub prism: Prism,
    pub lists: ListAssignment,
    pub coloring: Coloring,
    pub placement: Placement,
}

/// Prism order used for `cfg` fixtures: fixed for configurations tied to one
/// prism, otherwise drawn from 10..=16.
pub fn fixture_order(cfg: &Config, rng: &mut impl Rng) -> usize {
    cfg.n.unwrap_or_else(|| rng.gen_range(10..=16))
}

/// Plants `cfg` at a random placement, completes the coloring so the
/// hypothesis holds and draws 3-lists around it.
pub fn planted_fixture(cfg: &Config, seed: u64) -> Result<Fixture> {
    planted_fixture_with(cfg, seed, DEFAULT_BIAS)
}

/// As [`planted_fixture`]; `bias` is the chance that a list color is drawn
/// from nearby and role colors. A bias of 1 gives the tightest lists.
pub fn planted_fixture_with(cfg: &Config, seed: u64, bias: f64) -> Result<Fixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = fixture_order(cfg, &mut rng);
    let p = Prism::new(n)?;
    let group = automorphism_group(&p);
    let blue = role_color(Role::Blue);
    let red = (cfg.hypothesis == Hypothesis::RedBlue).then(|| role_color(Role::Red));
    for _ in 0..ATTEMPTS {
        let map = group.choose(&mut rng).expect("nonempty group");
        let mut fixed: Vec<Option<Color>> = vec![None; p.vertex_count()];
        let mut not_blue = vec![false; p.vertex_count()];
        for (i, spec) in cfg.cells.iter().enumerate() {
            let v = map.apply(i);
            match spec {
                CellSpec::Role(r) => fixed[v] = Some(role_color(*r)),
                CellSpec::NotBlue => not_blue[v] = true,
                CellSpec::Free => {}
            }
        }
        let Some(c) = complete(&p, cfg.hypothesis, &fixed, &not_blue, &mut rng) else {
            continue;
        };
        if !hypothesis_holds(&p, &c, cfg.hypothesis, blue, red) {
            continue;
        }
        let cells: Vec<usize> = (0..cfg.cells.len()).map(|i| map.apply(i)).collect();
        let Some(placement) = find_matches(&p, &c, cfg, MatchOptions::default())
            .into_iter()
            .find(|pl| pl.cells == cells && pl.role(Role::Blue) == Some(blue))
        else {
            continue;
        };
        let lists = random_lists(&p, &c, bias, &mut rng)?;
        debug_assert!(is_proper(&p, &c) && respects_lists(&lists, &c));
        return Ok(Fixture { prism: p, lists, coloring: c, placement });
    }
    Err(Error::Internal(format!("no fixture for {} from seed {seed}", cfg.name)))
}

fn preferred(p: &Prism, hyp: Hypothesis, v: usize, rng: &mut impl Rng) -> Vec<Color> {
    let mut rest: Vec<Color> = (2..PALETTE).collect();
    rest.shuffle(rng);
    let mut out = Vec::with_capacity(PALETTE as usize);
    match hyp {
        Hypothesis::RedBlue => {
            let parity = (layer_of(v) as usize + rung_of(v)) % 2;
            out.extend(if parity == 0 { [0, 1] } else { [1, 0] });
            out.extend(rest);
        }
        Hypothesis::Blue | Hypothesis::Pi4 => {
            rest.push(1);
            rest.shuffle(rng);
            if rng.gen_bool(0.8) {
                out.push(0);
                out.extend(rest);
            } else {
                out.extend(rest);
                out.push(0);
            }
        }
    }
    debug_assert!(p.vertex_count() > v);
    out
}

/// Randomized backtracking completion of a partial coloring.
fn complete(
    p: &Prism,
    hyp: Hypothesis,
    fixed: &[Option<Color>],
    not_blue: &[bool],
    rng: &mut impl Rng,
) -> Option<Coloring> {
    let mut colors = fixed.to_vec();
    for v in 0..colors.len() {
        if let Some(x) = colors[v] {
            if p.neighbors(v).iter().any(|&u| colors[u] == Some(x)) {
                return None;
            }
        }
    }
    let free: Vec<usize> = (0..colors.len()).filter(|&v| colors[v].is_none()).collect();
    let options: Vec<Vec<Color>> = free
        .iter()
        .map(|&v| {
            let mut o = preferred(p, hyp, v, rng);
            if not_blue[v] {
                o.retain(|&x| x != 0);
            }
            o
        })
        .collect();
    fn go(
        p: &Prism,
        k: usize,
        free: &[usize],
        options: &[Vec<Color>],
        colors: &mut [Option<Color>],
    ) -> bool {
        let Some(&v) = free.get(k) else { return true };
        for &x in &options[k] {
            if p.neighbors(v).iter().all(|&u| colors[u] != Some(x)) {
                colors[v] = Some(x);
                if go(p, k + 1, free, options, colors) {
                    return true;
                }
            }
        }
        colors[v] = None;
        false
    }
    go(p, 0, &free, &options, &mut colors).then(|| Coloring::new(colors.into_iter().map(Option::unwrap).collect()))
}

/// Each list holds the vertex's own color and two others, drawn with bias
/// toward colors seen on its neighbours and the role colors.
pub fn random_lists(p: &Prism, c: &Coloring, bias: f64, rng: &mut impl Rng) -> Result<ListAssignment> {
    let lists = (0..p.vertex_count())
        .map(|v| {
            let own = c.color(v);
            let mut near: Vec<Color> = p.neighbors(v).iter().map(|&u| c.color(u)).collect();
            near.extend(Role::ALL.iter().map(|&r| role_color(r)));
            near.retain(|&x| x != own);
            let mut list = vec![own];
            while list.len() < 3 {
                let x = if rng.gen_bool(bias) {
                    *near.choose(rng).expect("role colors")
                } else {
                    rng.gen_range(0..PALETTE)
                };
                if !list.contains(&x) {
                    list.push(x);
                }
            }
            list.sort_unstable();
            list
        })
        .collect();
    ListAssignment::new(lists)
}
