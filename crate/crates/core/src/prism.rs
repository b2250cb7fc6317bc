//! Prism graphs `C_n □ K_2`.
//!
//! Vertices are numbered so that the id order is the scan order
//! `(U,0),(V,0),(U,1),(V,1),…`: vertex `(layer, i)` has id `2*i + layer`.
//! Four-face `i` is bounded by rungs `i` and `i+1`; the two cycle faces are
//! the `U` and `V` layers.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    U = 0,
    V = 1,
}

impl Layer {
    pub fn other(self) -> Layer {
        match self {
            Layer::U => Layer::V,
            Layer::V => Layer::U,
        }
    }

    pub fn from_index(i: usize) -> Layer {
        if i & 1 == 0 {
            Layer::U
        } else {
            Layer::V
        }
    }
}

impl fmt::Display for Layer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Layer::U => f.write_str("U"),
            Layer::V => f.write_str("V"),
        }
    }
}

/// Vertex id helpers.
pub fn vertex_id(layer: Layer, rung: usize) -> usize {
    2 * rung + layer as usize
}

pub fn layer_of(v: usize) -> Layer {
    Layer::from_index(v)
}

pub fn rung_of(v: usize) -> usize {
    v / 2
}

/// `U3`, `V0`, ...
pub fn vertex_name(v: usize) -> String {
    format!("{}{}", layer_of(v), rung_of(v))
}

/// Parses `U3` / `V0` into a vertex id.
pub fn parse_vertex_name(s: &str) -> Option<usize> {
    let mut chars = s.chars();
    let layer = match chars.next()? {
        'U' => Layer::U,
        'V' => Layer::V,
        _ => return None,
    };
    let rest = chars.as_str();
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let rung = rest.parse().ok()?;
    Some(vertex_id(layer, rung))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceKind {
    /// The 4-face between rung `i` and rung `i+1`.
    Square(usize),
    /// The n-face formed by one layer's cycle.
    Cycle(Layer),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub kind: FaceKind,
    pub vertices: Vec<usize>,
}

/// `w` consecutive rungs starting at `start` (cyclically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub start: usize,
    pub rungs: Vec<usize>,
}

impl Window {
    pub fn vertices(&self) -> Vec<usize> {
        self.rungs
            .iter()
            .flat_map(|&r| [vertex_id(Layer::U, r), vertex_id(Layer::V, r)])
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Prism {
    n: usize,
    adj: Vec<[usize; 3]>,
}

impl Prism {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "prism needs n >= 3, got {n}"
            )));
        }
        let adj = (0..2 * n)
            .map(|v| {
                let (layer, i) = (layer_of(v), rung_of(v));
                [
                    vertex_id(layer, (i + n - 1) % n),
                    vertex_id(layer, (i + 1) % n),
                    vertex_id(layer.other(), i),
                ]
            })
            .collect();
        Ok(Prism { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.n
    }

    pub fn edge_count(&self) -> usize {
        3 * self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize; 3] {
        &self.adj[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(&b)
    }

    pub fn vertex(&self, layer: Layer, rung: usize) -> usize {
        vertex_id(layer, rung % self.n)
    }

    /// Each edge once, as `(min, max)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (0..self.vertex_count())
            .flat_map(|a| self.adj[a].iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| a < b)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        self.adj.iter().map(|a| a.to_vec()).collect()
    }

    /// `n` four-faces followed by the `U` and `V` cycle faces.
    pub fn faces(&self) -> Vec<Face> {
        let n = self.n;
        let mut faces: Vec<Face> = (0..n)
            .map(|i| Face {
                kind: FaceKind::Square(i),
                vertices: self.square_face(i).to_vec(),
            })
            .collect();
        for layer in [Layer::U, Layer::V] {
            faces.push(Face {
                kind: FaceKind::Cycle(layer),
                vertices: (0..n).map(|i| vertex_id(layer, i)).collect(),
            });
        }
        faces
    }

    /// Vertices of the 4-face between rungs `i` and `i+1`.
    pub fn square_face(&self, i: usize) -> [usize; 4] {
        let j = (i + 1) % self.n;
        [
            vertex_id(Layer::U, i),
            vertex_id(Layer::U, j),
            vertex_id(Layer::V, j),
            vertex_id(Layer::V, i),
        ]
    }

    pub fn is_bipartite(&self) -> bool {
        self.n % 2 == 0
    }

    /// Computed by BFS from every vertex.
    pub fn girth(&self) -> usize {
        girth(&self.adjacency_lists()).expect("prism has cycles")
    }

    /// The `n` cyclic windows of `w` consecutive rungs.
    pub fn windows(&self, w: usize) -> Result<Vec<Window>> {
        if w == 0 || w > self.n {
            return Err(Error::InvalidParameter(format!(
                "window width {w} outside 1..={}",
                self.n
            )));
        }
        Ok((0..self.n)
            .map(|start| Window {
                start,
                rungs: (0..w).map(|k| (start + k) % self.n).collect(),
            })
            .collect())
    }
}

/// Girth of a simple graph, `None` if acyclic.
pub fn girth(adj: &[Vec<usize>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..adj.len() {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut parent = vec![usize::MAX; adj.len()];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(a) = q.pop_front() {
            for &b in &adj[a] {
                if dist[b] == usize::MAX {
                    dist[b] = dist[a] + 1;
                    parent[b] = a;
                    q.push_back(b);
                } else if parent[a] != b {
                    let len = dist[a] + dist[b] + 1;
                    best = Some(best.map_or(len, |g| g.min(len)));
                }
            }
        }
    }
    best
}
