//! Proper list coloring by DFS with domain propagation.
//!
//! Branching picks the unassigned vertex with the smallest domain (lowest id
//! on ties) and tries its colors in ascending order. When no coloring
//! exists the explored tree is returned as a refutation that a checker can
//! replay without searching.

use std::fmt;

use crate::lists::{Color, ListAssignment};
use crate::prism::{parse_vertex_name, vertex_name, Prism};
use crate::solver::coloring::Coloring;

/// One node of a refutation tree, in preorder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RefutationStep {
    /// Propagation empties the domain of this vertex.
    Conflict(usize),
    /// Branch on every remaining color of this vertex, ascending.
    Split(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Refutation {
    pub steps: Vec<RefutationStep>,
}

impl Refutation {
    pub fn to_lines(&self) -> Vec<String> {
        self.steps
            .iter()
            .map(|s| match s {
                RefutationStep::Conflict(v) => format!("conflict {}", vertex_name(*v)),
                RefutationStep::Split(v) => format!("split {}", vertex_name(*v)),
            })
            .collect()
    }

    pub fn parse_line(line: &str) -> Option<RefutationStep> {
        let (kw, rest) = line.split_once(' ')?;
        let v = parse_vertex_name(rest.trim())?;
        match kw {
            "conflict" => Some(RefutationStep::Conflict(v)),
            "split" => Some(RefutationStep::Split(v)),
            _ => None,
        }
    }
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.to_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Sat(Coloring),
    Unsat(Refutation),
}

impl SolveOutcome {
    pub fn coloring(&self) -> Option<&Coloring> {
        match self {
            SolveOutcome::Sat(c) => Some(c),
            SolveOutcome::Unsat(_) => None,
        }
    }

    pub fn is_sat(&self) -> bool {
        matches!(self, SolveOutcome::Sat(_))
    }
}

/// Domains over explicit color vectors; small enough to clone per branch.
#[derive(Clone)]
struct State {
    domains: Vec<Vec<Color>>,
    assigned: Vec<Option<Color>>,
    conflict: Option<usize>,
}

impl State {
    fn new(lists: &[Vec<Color>]) -> Self {
        State {
            domains: lists.to_vec(),
            assigned: vec![None; lists.len()],
            conflict: None,
        }
    }

    /// Assigns `v := c`, then propagates forced singletons until a fixpoint
    /// or the first empty domain.
    fn assign(&mut self, adj: &[Vec<usize>], v: usize, c: Color) {
        let mut queue = vec![(v, c)];
        while let Some((v, c)) = queue.pop() {
            if self.assigned[v].is_some() {
                continue;
            }
            if !self.domains[v].contains(&c) {
                self.conflict = Some(v);
                return;
            }
            self.assigned[v] = Some(c);
            self.domains[v] = vec![c];
            for &u in &adj[v] {
                if self.assigned[u].is_some() {
                    continue;
                }
                self.domains[u].retain(|&x| x != c);
                match self.domains[u].len() {
                    0 => {
                        self.conflict = Some(u);
                        return;
                    }
                    1 => queue.push((u, self.domains[u][0])),
                    _ => {}
                }
            }
        }
    }

    fn initial(adj: &[Vec<usize>], lists: &[Vec<Color>]) -> Self {
        let mut s = State::new(lists);
        for v in 0..lists.len() {
            if s.conflict.is_some() {
                break;
            }
            match s.domains[v].len() {
                0 => s.conflict = Some(v),
                1 if s.assigned[v].is_none() => {
                    let c = s.domains[v][0];
                    s.assign(adj, v, c)
                }
                _ => {}
            }
        }
        s
    }

    fn branch_vertex(&self) -> Option<usize> {
        (0..self.domains.len())
            .filter(|&v| self.assigned[v].is_none())
            .min_by_key(|&v| (self.domains[v].len(), v))
    }
}

fn dfs(adj: &[Vec<usize>], state: State, steps: &mut Vec<RefutationStep>) -> Option<Vec<Color>> {
    if let Some(v) = state.conflict {
        steps.push(RefutationStep::Conflict(v));
        return None;
    }
    let Some(v) = state.branch_vertex() else {
        return Some(state.assigned.iter().map(|c| c.unwrap()).collect());
    };
    steps.push(RefutationStep::Split(v));
    for &c in &state.domains[v] {
        let mut child = state.clone();
        child.assign(adj, v, c);
        if let Some(sol) = dfs(adj, child, steps) {
            return Some(sol);
        }
    }
    None
}

/// Solves over an arbitrary adjacency list.
pub fn solve_lists(adj: &[Vec<usize>], lists: &[Vec<Color>]) -> SolveOutcome {
    let state = State::initial(adj, lists);
    let mut steps = Vec::new();
    match dfs(adj, state, &mut steps) {
        Some(colors) => SolveOutcome::Sat(Coloring::new(colors)),
        None => SolveOutcome::Unsat(Refutation { steps }),
    }
}

pub fn solve_proper(p: &Prism, l: &ListAssignment) -> SolveOutcome {
    solve_lists(&p.adjacency_lists(), l.lists())
}

/// Replays a refutation: every leaf must be a propagation conflict and every
/// split must cover the full remaining domain. No search happens here.
pub fn check_refutation(
    adj: &[Vec<usize>],
    lists: &[Vec<Color>],
    refutation: &Refutation,
) -> Result<(), String> {
    let mut pos = 0;
    let state = State::initial(adj, lists);
    replay(adj, state, &refutation.steps, &mut pos)?;
    if pos != refutation.steps.len() {
        return Err(format!(
            "{} trailing refutation steps",
            refutation.steps.len() - pos
        ));
    }
    Ok(())
}

fn replay(
    adj: &[Vec<usize>],
    state: State,
    steps: &[RefutationStep],
    pos: &mut usize,
) -> Result<(), String> {
    let step = steps
        .get(*pos)
        .ok_or_else(|| "refutation ends early".to_string())?;
    *pos += 1;
    match *step {
        RefutationStep::Conflict(v) => match state.conflict {
            Some(u) if u == v => Ok(()),
            Some(u) => Err(format!(
                "conflict claimed at {} but propagation fails at {}",
                vertex_name(v),
                vertex_name(u)
            )),
            None => Err(format!(
                "conflict claimed at {} but propagation succeeds",
                vertex_name(v)
            )),
        },
        RefutationStep::Split(v) => {
            if state.conflict.is_some() {
                return Err("split below a conflict".into());
            }
            if v >= state.assigned.len() || state.assigned[v].is_some() {
                return Err(format!("split on assigned vertex {}", vertex_name(v)));
            }
            for &c in &state.domains[v] {
                let mut child = state.clone();
                child.assign(adj, v, c);
                replay(adj, child, steps, pos)?;
            }
            Ok(())
        }
    }
}
