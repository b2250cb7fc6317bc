//! Maximum independent set size by exhaustive branching.

use crate::error::{Error, Result};
use crate::prism::Prism;

pub const INDEPENDENCE_MAX_VERTICES: usize = 24;

pub fn independence_number(adj: &[Vec<usize>]) -> Result<usize> {
    let nv = adj.len();
    if nv > INDEPENDENCE_MAX_VERTICES {
        return Err(Error::SizeBudget(format!(
            "independence number limited to {INDEPENDENCE_MAX_VERTICES} vertices, got {nv}"
        )));
    }
    let nbr: Vec<u32> = adj
        .iter()
        .map(|ns| ns.iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();
    Ok(branch(&nbr, (1u32 << nv) - 1))
}

/// Either the lowest candidate is excluded, or it joins and its
/// neighbourhood leaves the candidate set.
fn branch(nbr: &[u32], cand: u32) -> usize {
    if cand == 0 {
        return 0;
    }
    let v = cand.trailing_zeros() as usize;
    let without = cand & !(1 << v);
    let take = 1 + branch(nbr, without & !nbr[v]);
    if take > without.count_ones() as usize {
        return take;
    }
    take.max(branch(nbr, without))
}

pub fn prism_independence_number(p: &Prism) -> Result<usize> {
    independence_number(&p.adjacency_lists())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset_oracle(adj: &[Vec<usize>]) -> usize {
        let nv = adj.len();
        (0u32..1 << nv)
            .filter(|&s| {
                (0..nv).all(|v| s >> v & 1 == 0 || adj[v].iter().all(|&u| s >> u & 1 == 0))
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    #[test]
    fn small_prisms() {
        let a = |n| prism_independence_number(&Prism::new(n).unwrap()).unwrap();
        assert_eq!(a(3), 2);
        assert_eq!(a(4), 4);
        assert_eq!(a(5), 4);
        for n in 3..10 {
            let p = Prism::new(n).unwrap();
            assert_eq!(a(n), subset_oracle(&p.adjacency_lists()), "n={n}");
            // 2⌊n/2⌋ from the two layers alternating.
            assert_eq!(a(n), 2 * (n / 2));
        }
    }

    #[test]
    fn size_budget() {
        assert!(prism_independence_number(&Prism::new(12).unwrap()).is_ok());
        assert!(prism_independence_number(&Prism::new(13).unwrap()).is_err());
    }
}
