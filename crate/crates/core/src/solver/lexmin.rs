//! Exact lexicographically minimal list coloring by branch and bound.
//!
//! Phase one finds the minimum word `W*`. Vertices are taken in scan order
//! and colors in ascending current class size; a partial coloring is cut
//! when even the most balanced completion (water-filling the remaining
//! vertices into the colors they could still use) is not below the
//! incumbent. Phase two walks the scan-order serialization from the least
//! end and stops at the first coloring whose word is `W*`, so ties break
//! toward the least serialization.

use crate::error::{Error, Result};
use crate::lists::{Color, ListAssignment};
use crate::prism::Prism;
use crate::solver::coloring::{ColorWord, Coloring};

const NONE: u8 = u8::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LexMinConfig {
    /// Shared by both phases.
    pub node_limit: u64,
    /// Largest `n` accepted by [`lexmin_with`].
    pub max_n: usize,
}

impl Default for LexMinConfig {
    fn default() -> Self {
        LexMinConfig {
            node_limit: 100_000_000,
            max_n: 9,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexMinSolution {
    pub coloring: Coloring,
    pub word: ColorWord,
    pub nodes: u64,
}

pub fn lexmin(p: &Prism, l: &ListAssignment) -> Result<LexMinSolution> {
    lexmin_with(p, l, &LexMinConfig::default())
}

pub fn lexmin_with(p: &Prism, l: &ListAssignment, cfg: &LexMinConfig) -> Result<LexMinSolution> {
    if p.n() > cfg.max_n {
        return Err(Error::SizeBudget(format!(
            "exact lexmin limited to n <= {}, got n={}",
            cfg.max_n,
            p.n()
        )));
    }
    let fixed = vec![None; p.vertex_count()];
    lexmin_core(&p.adjacency_lists(), l.lists(), &fixed, None, cfg.node_limit)?
        .ok_or(Error::Unsat)
}

/// Generic engine over an adjacency list. Vertices with `fixed[v] = Some(c)`
/// keep color `c`. With an `upper` word only colorings strictly below it are
/// sought, and `Ok(None)` means there are none (or no proper coloring at
/// all when `upper` is `None`).
pub fn lexmin_core(
    adj: &[Vec<usize>],
    lists: &[Vec<Color>],
    fixed: &[Option<Color>],
    upper: Option<&ColorWord>,
    node_limit: u64,
) -> Result<Option<LexMinSolution>> {
    let mut e = Engine::new(adj, lists, fixed, node_limit)?;
    if !e.fixed_consistent() {
        return Ok(None);
    }
    if let Some(u) = upper {
        e.best = Some(u.entries().to_vec());
    }
    e.phase_one(0)?;
    let Some(target) = e.best_found.take() else {
        return Ok(None);
    };
    e.prepare_phase_two(&target);
    if !e.phase_two(0)? {
        return Err(Error::Internal(
            "second phase missed a coloring of minimum word".into(),
        ));
    }
    let colors: Vec<Color> = e.assigned.iter().map(|&d| e.palette[d as usize]).collect();
    let coloring = Coloring::new(colors);
    let word = coloring.word();
    if word.entries() != target.as_slice() {
        return Err(Error::Internal(format!(
            "second phase word {word} differs from minimum"
        )));
    }
    Ok(Some(LexMinSolution {
        coloring,
        word,
        nodes: e.nodes,
    }))
}

struct Engine<'a> {
    adj: &'a [Vec<usize>],
    palette: Vec<Color>,
    masks: Vec<u64>,
    order: Vec<usize>,
    suffix: Vec<u64>,
    assigned: Vec<u8>,
    counts: Vec<u32>,
    nodes: u64,
    limit: u64,
    best: Option<Vec<u32>>,
    best_found: Option<Vec<u32>>,
    // phase two: ge[t] colors with count >= t, cap[t] allowed
    ge: Vec<u32>,
    cap: Vec<u32>,
    scratch: Vec<u32>,
}

impl<'a> Engine<'a> {
    fn new(
        adj: &'a [Vec<usize>],
        lists: &[Vec<Color>],
        fixed: &[Option<Color>],
        limit: u64,
    ) -> Result<Self> {
        let mut palette: Vec<Color> = lists.iter().flatten().copied().collect();
        palette.extend(fixed.iter().flatten());
        palette.sort_unstable();
        palette.dedup();
        if palette.len() > 64 {
            return Err(Error::InvalidParameter(format!(
                "at most 64 distinct colors supported, got {}",
                palette.len()
            )));
        }
        let dense = |c: Color| palette.binary_search(&c).unwrap() as u8;
        let masks: Vec<u64> = lists
            .iter()
            .map(|l| l.iter().fold(0u64, |m, &c| m | 1 << dense(c)))
            .collect();
        let mut assigned = vec![NONE; lists.len()];
        let mut counts = vec![0u32; palette.len()];
        for (v, f) in fixed.iter().enumerate() {
            if let Some(c) = f {
                let d = dense(*c);
                assigned[v] = d;
                counts[d as usize] += 1;
            }
        }
        let order: Vec<usize> = (0..lists.len()).filter(|&v| fixed[v].is_none()).collect();
        let mut suffix = vec![0u64; order.len() + 1];
        for d in (0..order.len()).rev() {
            suffix[d] = suffix[d + 1] | masks[order[d]];
        }
        Ok(Engine {
            adj,
            palette,
            masks,
            order,
            suffix,
            assigned,
            counts,
            nodes: 0,
            limit,
            best: None,
            best_found: None,
            ge: Vec::new(),
            cap: Vec::new(),
            scratch: Vec::new(),
        })
    }

    fn fixed_consistent(&self) -> bool {
        (0..self.assigned.len()).all(|v| {
            self.assigned[v] == NONE
                || self.adj[v]
                    .iter()
                    .all(|&u| self.assigned[u] != self.assigned[v])
        })
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        Ok(())
    }

    fn available(&self, v: usize) -> u64 {
        let mut blocked = 0u64;
        for &u in &self.adj[v] {
            let d = self.assigned[u];
            if d != NONE {
                blocked |= 1 << d;
            }
        }
        self.masks[v] & !blocked
    }

    /// Most balanced completion: `remaining` units poured into the colors of
    /// `union`, always onto the currently smallest. Leaves the sorted
    /// (descending, zero-free) word in `scratch`.
    fn water_fill(&mut self, remaining: u32, union: u64) {
        let out = &mut self.scratch;
        out.clear();
        let mut raisable: Vec<u32> = Vec::with_capacity(self.counts.len());
        for (d, &c) in self.counts.iter().enumerate() {
            if union >> d & 1 == 1 {
                raisable.push(c);
            } else if c > 0 {
                out.push(c);
            }
        }
        if remaining > 0 && !raisable.is_empty() {
            raisable.sort_unstable();
            let k = raisable.len();
            let mut r = remaining;
            let mut i = 0;
            while i + 1 < k {
                let step = (raisable[i + 1] - raisable[i]) * (i as u32 + 1);
                if r < step {
                    break;
                }
                r -= step;
                i += 1;
            }
            let width = i as u32 + 1;
            let level = raisable[i] + r / width;
            let extra = (r % width) as usize;
            for (j, x) in raisable.iter_mut().take(i + 1).enumerate() {
                *x = level + u32::from(j < extra);
            }
        }
        out.extend(raisable.into_iter().filter(|&c| c > 0));
        out.sort_unstable_by(|a, b| b.cmp(a));
    }

    fn phase_one(&mut self, depth: usize) -> Result<()> {
        self.tick()?;
        if depth == self.order.len() {
            self.water_fill(0, 0);
            if self.best.as_ref().map_or(true, |b| self.scratch < *b) {
                self.best = Some(self.scratch.clone());
                self.best_found = self.best.clone();
            }
            return Ok(());
        }
        if let Some(best) = &self.best {
            let best = best.clone();
            self.water_fill((self.order.len() - depth) as u32, self.suffix[depth]);
            if self.scratch >= best {
                return Ok(());
            }
        }
        let v = self.order[depth];
        let avail = self.available(v);
        let mut cand: Vec<u8> = (0..64u8).filter(|&d| avail >> d & 1 == 1).collect();
        cand.sort_by_key(|&d| (self.counts[d as usize], d));
        for d in cand {
            self.assigned[v] = d;
            self.counts[d as usize] += 1;
            let r = self.phase_one(depth + 1);
            self.counts[d as usize] -= 1;
            self.assigned[v] = NONE;
            r?;
        }
        Ok(())
    }

    fn prepare_phase_two(&mut self, target: &[u32]) {
        let top = target.first().copied().unwrap_or(0) as usize;
        self.cap = (0..=top + 1)
            .map(|t| target.iter().filter(|&&x| x as usize >= t).count() as u32)
            .collect();
        self.ge = vec![0; top + 2];
        for &c in &self.counts {
            for t in 1..=(c as usize).min(top + 1) {
                self.ge[t] += 1;
            }
        }
        self.best = Some(target.to_vec());
    }

    fn phase_two(&mut self, depth: usize) -> Result<bool> {
        self.tick()?;
        if depth == self.order.len() {
            return Ok(true);
        }
        let target = self.best.clone().unwrap();
        self.water_fill((self.order.len() - depth) as u32, self.suffix[depth]);
        if self.scratch > target {
            return Ok(false);
        }
        let v = self.order[depth];
        let avail = self.available(v);
        for d in 0..64u8 {
            if avail >> d & 1 == 0 {
                continue;
            }
            let t = self.counts[d as usize] as usize + 1;
            if t >= self.cap.len() || self.ge[t] + 1 > self.cap[t] {
                continue;
            }
            self.assigned[v] = d;
            self.counts[d as usize] += 1;
            self.ge[t] += 1;
            let r = self.phase_two(depth + 1);
            if matches!(r, Ok(true)) {
                return r;
            }
            self.ge[t] -= 1;
            self.counts[d as usize] -= 1;
            self.assigned[v] = NONE;
            r?;
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::coloring::{is_proper, respects_lists};

    #[test]
    fn identical_lists_small_prisms() {
        let p3 = Prism::new(3).unwrap();
        let l = ListAssignment::uniform(&p3, &[1, 2, 3]).unwrap();
        assert_eq!(lexmin(&p3, &l).unwrap().word.entries(), &[2, 2, 2]);
        let p6 = Prism::new(6).unwrap();
        let l = ListAssignment::uniform(&p6, &[1, 2, 3]).unwrap();
        let s = lexmin(&p6, &l).unwrap();
        assert_eq!(s.word.entries(), &[4, 4, 4]);
        assert!(is_proper(&p6, &s.coloring) && respects_lists(&l, &s.coloring));
    }

    #[test]
    fn ties_break_to_least_serialization() {
        let p = Prism::new(3).unwrap();
        let l = ListAssignment::uniform(&p, &[1, 2, 3]).unwrap();
        let s = lexmin(&p, &l).unwrap();
        // U0 V0 U1 V1 U2 V2
        assert_eq!(s.coloring.colors(), &[1, 2, 2, 3, 3, 1]);
    }

    #[test]
    fn unsat_and_budget() {
        let p = Prism::new(5).unwrap();
        let l = ListAssignment::uniform(&p, &[0, 1]).unwrap();
        assert_eq!(lexmin(&p, &l), Err(Error::Unsat));
        let l3 = ListAssignment::random_uniform(&p, 3, 6, 1).unwrap();
        let cfg = LexMinConfig {
            node_limit: 3,
            ..LexMinConfig::default()
        };
        assert!(matches!(
            lexmin_with(&p, &l3, &cfg),
            Err(Error::BudgetExceeded { .. })
        ));
        let p10 = Prism::new(10).unwrap();
        let l10 = ListAssignment::uniform(&p10, &[1, 2, 3]).unwrap();
        assert!(matches!(lexmin(&p10, &l10), Err(Error::SizeBudget(_))));
    }

    #[test]
    fn upper_bound_excludes_equal_words() {
        let p = Prism::new(6).unwrap();
        let l = ListAssignment::uniform(&p, &[1, 2, 3]).unwrap();
        let adj = p.adjacency_lists();
        let fixed = vec![None; 12];
        let w = ColorWord::from_sizes([4, 4, 4]);
        assert_eq!(lexmin_core(&adj, l.lists(), &fixed, Some(&w), u64::MAX), Ok(None));
        let w = ColorWord::from_sizes([5, 4, 3]);
        let s = lexmin_core(&adj, l.lists(), &fixed, Some(&w), u64::MAX).unwrap().unwrap();
        assert_eq!(s.word.entries(), &[4, 4, 4]);
    }

    #[test]
    fn fixed_vertices_are_respected() {
        let p = Prism::new(4).unwrap();
        let l = ListAssignment::uniform(&p, &[1, 2, 3]).unwrap();
        let mut fixed = vec![None; 8];
        fixed[0] = Some(3);
        fixed[7] = Some(3);
        let s = lexmin_core(&p.adjacency_lists(), l.lists(), &fixed, None, u64::MAX)
            .unwrap()
            .unwrap();
        assert_eq!((s.coloring.color(0), s.coloring.color(7)), (3, 3));
        assert!(is_proper(&p, &s.coloring));
    }
}
