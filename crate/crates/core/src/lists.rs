use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::prism::Prism;
use crate::symmetry::VertexMap;

/// Color ids are small nonnegative integers.
pub type Color = u32;

/// A `k`-uniform list assignment. Lists are stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
    k: usize,
}

impl ListAssignment {
    /// Validates uniformity; duplicate colors inside a list are rejected.
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self> {
        let k = lists.first().map_or(0, Vec::len);
        if k == 0 {
            return Err(Error::InvalidParameter("lists must be nonempty".into()));
        }
        let mut sorted = Vec::with_capacity(lists.len());
        for (v, mut l) in lists.into_iter().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.len() != k {
                return Err(Error::InvalidParameter(format!(
                    "list of vertex {v} has {} distinct colors, expected {k}",
                    l.len()
                )));
            }
            sorted.push(l);
        }
        Ok(ListAssignment { lists: sorted, k })
    }

    /// Every vertex gets the same list.
    pub fn uniform(p: &Prism, colors: &[Color]) -> Result<Self> {
        Self::new(vec![colors.to_vec(); p.vertex_count()])
    }

    /// Each list is a uniformly random `k`-subset of `0..universe`.
    pub fn random_uniform(p: &Prism, k: usize, universe: usize, seed: u64) -> Result<Self> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(p.vertex_count(), k, universe, &mut rng)
    }

    pub fn random_with<R: rand::Rng>(
        vertices: usize,
        k: usize,
        universe: usize,
        rng: &mut R,
    ) -> Result<Self> {
        if k == 0 || universe < k {
            return Err(Error::InvalidParameter(format!(
                "need 1 <= k <= universe, got k={k}, universe={universe}"
            )));
        }
        let lists = (0..vertices)
            .map(|_| {
                sample(rng, universe, k)
                    .into_iter()
                    .map(|c| c as Color)
                    .collect()
            })
            .collect();
        Self::new(lists)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn contains(&self, v: usize, c: Color) -> bool {
        self.lists[v].binary_search(&c).is_ok()
    }

    pub fn universe(&self) -> BTreeSet<Color> {
        self.lists.iter().flatten().copied().collect()
    }

    pub fn all_identical(&self) -> bool {
        self.lists.windows(2).all(|w| w[0] == w[1])
    }

    /// The assignment `L'` with `L'(σ(v)) = L(v)`.
    pub fn permuted(&self, map: &VertexMap) -> ListAssignment {
        let mut lists = vec![Vec::new(); self.lists.len()];
        for (v, l) in self.lists.iter().enumerate() {
            lists[map.apply(v)] = l.clone();
        }
        ListAssignment { lists, k: self.k }
    }

    /// Applies a color renaming to every list.
    pub fn renamed(&self, rename: impl Fn(Color) -> Color) -> Result<ListAssignment> {
        Self::new(
            self.lists
                .iter()
                .map(|l| l.iter().map(|&c| rename(c)).collect())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_lists() {
        let p5 = Prism::new(5).unwrap();
        let l = ListAssignment::uniform(&p5, &[0, 1]).unwrap();
        assert_eq!(l.k(), 2);
        assert!(l.all_identical());
        let p6 = Prism::new(6).unwrap();
        let l = ListAssignment::uniform(&p6, &[1, 2, 3]).unwrap();
        assert_eq!((l.k(), l.len()), (3, 12));
        let p3 = Prism::new(3).unwrap();
        assert!(ListAssignment::uniform(&p3, &[]).is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let p = Prism::new(6).unwrap();
        let a = ListAssignment::random_uniform(&p, 3, 6, 42).unwrap();
        let b = ListAssignment::random_uniform(&p, 3, 6, 42).unwrap();
        assert_eq!(a, b);
        let c = ListAssignment::random_uniform(&p, 3, 6, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_with_tight_universe_is_identical() {
        let p = Prism::new(6).unwrap();
        let a = ListAssignment::random_uniform(&p, 3, 3, 9).unwrap();
        assert!(a.all_identical());
        assert_eq!(a.list(0), &[0, 1, 2]);
    }

    #[test]
    fn random_lists_have_size_k() {
        let p = Prism::new(8).unwrap();
        let a = ListAssignment::random_uniform(&p, 3, 9, 5).unwrap();
        assert!(a.lists().iter().all(|l| l.len() == 3 && l.iter().all(|&c| c < 9)));
        assert!(ListAssignment::random_uniform(&p, 4, 3, 5).is_err());
    }

    #[test]
    fn rejects_non_uniform() {
        assert!(ListAssignment::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(ListAssignment::new(vec![vec![1, 1]]).is_err());
    }
}
