//! The rotation/reflection/layer-swap subgroup of a prism's automorphisms.
//!
//! Every element acts as `(layer, i) ↦ (layer ⊕ swap, ±i + shift mod n)`.
//! For `n ≥ 5` this is the full automorphism group; `Π3` and `Π4` have
//! more automorphisms, which are deliberately not used.

use crate::prism::{layer_of, rung_of, vertex_id, Layer, Prism};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Identity,
    Rotation(usize),
    Reflection,
    LayerSwap,
    Composition,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMap {
    n: usize,
    shift: usize,
    reflect: bool,
    swap: bool,
    perm: Vec<usize>,
}

impl VertexMap {
    pub fn new(n: usize, shift: usize, reflect: bool, swap: bool) -> Self {
        let shift = shift % n;
        let perm = (0..2 * n)
            .map(|v| {
                let (layer, i) = (layer_of(v), rung_of(v));
                let layer = if swap { layer.other() } else { layer };
                let i = if reflect { (n - i) % n } else { i };
                vertex_id(layer, (i + shift) % n)
            })
            .collect();
        VertexMap {
            n,
            shift,
            reflect,
            swap,
            perm,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, 0, false, false)
    }

    pub fn kind(&self) -> MapKind {
        match (self.shift, self.reflect, self.swap) {
            (0, false, false) => MapKind::Identity,
            (t, false, false) => MapKind::Rotation(t),
            (0, true, false) => MapKind::Reflection,
            (0, false, true) => MapKind::LayerSwap,
            _ => MapKind::Composition,
        }
    }

    pub fn apply(&self, v: usize) -> usize {
        self.perm[v]
    }

    /// Image of rung `i` (the map sends rungs to rungs).
    pub fn apply_rung(&self, i: usize) -> usize {
        rung_of(self.perm[vertex_id(Layer::U, i)])
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &VertexMap) -> VertexMap {
        assert_eq!(self.n, other.n);
        let n = self.n;
        // i ↦ s1·(s2·i + t2) + t1
        let shift = if self.reflect {
            (self.shift + n - other.shift) % n
        } else {
            (self.shift + other.shift) % n
        };
        VertexMap::new(
            n,
            shift,
            self.reflect ^ other.reflect,
            self.swap ^ other.swap,
        )
    }

    pub fn inverse(&self) -> VertexMap {
        let n = self.n;
        let shift = if self.reflect {
            self.shift
        } else {
            (n - self.shift) % n
        };
        VertexMap::new(n, shift, self.reflect, self.swap)
    }

    pub fn is_automorphism_of(&self, p: &Prism) -> bool {
        p.edges()
            .into_iter()
            .all(|(a, b)| p.adjacent(self.apply(a), self.apply(b)))
    }
}

/// All `4n` maps, ordered by (swap, reflect, shift).
pub fn automorphism_group(p: &Prism) -> Vec<VertexMap> {
    let n = p.n();
    let mut out = Vec::with_capacity(4 * n);
    for swap in [false, true] {
        for reflect in [false, true] {
            for shift in 0..n {
                out.push(VertexMap::new(n, shift, reflect, swap));
            }
        }
    }
    out
}
