//! Canonical keys for list assignments up to prism symmetry and color
//! renaming, and orbit enumeration for exhaustive checks.
//!
//! Colors are relabeled in order of first occurrence along the vertex scan
//! `U0, V0, U1, ...`. When several colors first appear in the same list
//! their relative order is not determined by the scan, so every order is
//! tried (colors with identical occurrence patterns are interchangeable and
//! only one order among them is kept). The key is the least serialization
//! over all `4n` symmetries and all such labelings.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lists::{Color, ListAssignment};
use crate::prism::Prism;
use crate::symmetry::{automorphism_group, VertexMap};

/// Relabeled lists flattened in scan order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Vec<u8>);

impl CanonicalKey {
    /// Rebuilds the representative assignment (colors `0..`).
    pub fn to_assignment(&self, k: usize) -> Result<ListAssignment> {
        ListAssignment::new(
            self.0
                .chunks(k)
                .map(|c| c.iter().map(|&x| x as Color).collect())
                .collect(),
        )
    }
}

pub fn canonical_form(p: &Prism, l: &ListAssignment) -> CanonicalKey {
    canonical_form_in(&automorphism_group(p), l)
}

fn canonical_form_in(group: &[VertexMap], l: &ListAssignment) -> CanonicalKey {
    let mut best: Option<Vec<u8>> = None;
    for map in group {
        let image = l.permuted(map);
        let mut search = Labeling::new(image.lists(), l.k());
        search.run(&mut best);
    }
    CanonicalKey(best.unwrap_or_default())
}

const UNSET: u8 = u8::MAX;

struct Labeling<'a> {
    lists: &'a [Vec<Color>],
    k: usize,
    // positions where each color occurs, indexed by color
    occurrences: Vec<Vec<usize>>,
    // assigned label per color, UNSET if none yet
    label: Vec<u8>,
    assigned: u8,
    key: Vec<u8>,
}

impl<'a> Labeling<'a> {
    fn new(lists: &'a [Vec<Color>], k: usize) -> Self {
        let colors = lists.iter().flatten().max().map_or(0, |&c| c as usize + 1);
        let mut occurrences = vec![Vec::new(); colors];
        for (pos, l) in lists.iter().enumerate() {
            for &c in l {
                occurrences[c as usize].push(pos);
            }
        }
        Labeling {
            lists,
            k,
            occurrences,
            label: vec![UNSET; colors],
            assigned: 0,
            key: Vec::with_capacity(lists.len() * k),
        }
    }

    fn run(&mut self, best: &mut Option<Vec<u8>>) {
        self.descend(0, false, best);
    }

    /// `below` is set once the key prefix is strictly less than `best`.
    fn descend(&mut self, pos: usize, below: bool, best: &mut Option<Vec<u8>>) {
        if pos == self.lists.len() {
            if best.as_ref().map_or(true, |b| self.key < *b) {
                *best = Some(self.key.clone());
            }
            return;
        }
        let list = &self.lists[pos];
        let next = self.assigned;
        let fresh: Vec<Color> = list
            .iter()
            .copied()
            .filter(|&c| self.label[c as usize] == UNSET)
            .collect();
        let mut entry: Vec<u8> = list
            .iter()
            .map(|&c| self.label[c as usize])
            .filter(|&x| x != UNSET)
            .collect();
        entry.extend(next..next + fresh.len() as u8);
        entry.sort_unstable();
        let start = self.key.len();
        self.key.extend_from_slice(&entry);
        let mut now_below = below;
        if !below {
            if let Some(b) = best.as_ref() {
                match self.key[start..].cmp(&b[start..start + self.k]) {
                    std::cmp::Ordering::Greater => {
                        self.key.truncate(start);
                        return;
                    }
                    std::cmp::Ordering::Less => now_below = true,
                    std::cmp::Ordering::Equal => {}
                }
            } else {
                now_below = true;
            }
        }
        for order in self.fresh_orders(&fresh, pos) {
            for (i, &c) in order.iter().enumerate() {
                self.label[c as usize] = next + i as u8;
            }
            self.assigned += order.len() as u8;
            self.descend(pos + 1, now_below, best);
            self.assigned -= order.len() as u8;
            for &c in &order {
                self.label[c as usize] = UNSET;
            }
        }
        self.key.truncate(start);
    }

    /// Orders of the fresh colors, one per arrangement of their future
    /// occurrence patterns.
    fn fresh_orders(&self, fresh: &[Color], pos: usize) -> Vec<Vec<Color>> {
        if fresh.len() <= 1 {
            return vec![fresh.to_vec()];
        }
        let pattern = |c: &Color| -> Vec<usize> {
            self.occurrences[*c as usize].iter().copied().filter(|&q| q > pos).collect()
        };
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for perm in permutations(fresh) {
            let sig: Vec<Vec<usize>> = perm.iter().map(pattern).collect();
            if seen.insert(sig) {
                out.push(perm);
            }
        }
        out
    }
}

fn permutations(items: &[Color]) -> Vec<Vec<Color>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Result of an exhaustive orbit sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitEnumeration {
    pub n: usize,
    pub k: usize,
    pub universe_cap: usize,
    /// First-occurrence normalized assignments generated.
    pub generated: u64,
    /// Canonical representatives, sorted.
    pub orbits: Vec<CanonicalKey>,
}

/// Upper limit on normalized assignments generated by one sweep.
pub const ORBIT_GENERATION_LIMIT: u64 = 50_000_000;

/// Every `k`-uniform assignment on `Π_n` whose colors come from a universe
/// of `cap` colors, up to symmetry and renaming.
pub fn enumerate_orbits(p: &Prism, k: usize, cap: usize) -> Result<OrbitEnumeration> {
    if k == 0 || cap < k || cap > 64 {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= k <= cap <= 64, got k={k}, cap={cap}"
        )));
    }
    let mut keys = HashSet::new();
    let mut generated = 0u64;
    let mut lists: Vec<Vec<Color>> = Vec::with_capacity(p.vertex_count());
    normalized(p, &automorphism_group(p), k, cap, 0, &mut lists, &mut generated, &mut keys)?;
    let mut orbits: Vec<CanonicalKey> = keys.into_iter().collect();
    orbits.sort();
    Ok(OrbitEnumeration {
        n: p.n(),
        k,
        universe_cap: cap,
        generated,
        orbits,
    })
}

fn normalized(
    p: &Prism,
    group: &[VertexMap],
    k: usize,
    cap: usize,
    used: usize,
    lists: &mut Vec<Vec<Color>>,
    generated: &mut u64,
    keys: &mut HashSet<CanonicalKey>,
) -> Result<()> {
    if lists.len() == p.vertex_count() {
        *generated += 1;
        if *generated > ORBIT_GENERATION_LIMIT {
            return Err(Error::SizeBudget(format!(
                "more than {ORBIT_GENERATION_LIMIT} assignments to canonicalize"
            )));
        }
        let l = ListAssignment::new(lists.clone())?;
        keys.insert(canonical_form_in(group, &l));
        return Ok(());
    }
    // j old colors from 0..used, then the next k-j fresh ones.
    for fresh in 0..=k.min(cap - used) {
        let old = k - fresh;
        if old > used {
            continue;
        }
        for subset in subsets(used, old) {
            let mut l: Vec<Color> = subset;
            l.extend((used..used + fresh).map(|c| c as Color));
            lists.push(l);
            normalized(p, group, k, cap, used + fresh, lists, generated, keys)?;
            lists.pop();
        }
    }
    Ok(())
}

/// All `r`-subsets of `0..m`, ascending.
fn subsets(m: usize, r: usize) -> Vec<Vec<Color>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, m: usize, r: usize, cur: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for x in start..m {
            if m - x < r - cur.len() {
                break;
            }
            cur.push(x as Color);
            rec(x + 1, m, r, cur, out);
            cur.pop();
        }
    }
    rec(0, m, r, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    #[test]
    fn rotation_and_renaming_invariance() {
        let p = Prism::new(5).unwrap();
        let l = ListAssignment::random_uniform(&p, 3, 6, 3).unwrap();
        let rot = l.permuted(&VertexMap::new(5, 1, false, false));
        assert_eq!(canonical_form(&p, &l), canonical_form(&p, &rot));
        let p6 = Prism::new(6).unwrap();
        let a = ListAssignment::uniform(&p6, &[1, 2, 3]).unwrap();
        let b = ListAssignment::uniform(&p6, &[7, 8, 9]).unwrap();
        assert_eq!(canonical_form(&p6, &a), canonical_form(&p6, &b));
    }

    #[test]
    fn key_round_trips_to_an_orbit_member() {
        let p = Prism::new(4).unwrap();
        let l = ListAssignment::random_uniform(&p, 3, 5, 8).unwrap();
        let key = canonical_form(&p, &l);
        let rep = key.to_assignment(3).unwrap();
        assert_eq!(canonical_form(&p, &rep), key);
    }

    /// All 3-subsets-of-{0..3} assignments on Π3, partitioned into orbits by
    /// BFS over symmetries and all 24 color permutations.
    #[test]
    fn keys_separate_exactly_the_orbits_on_pi3() {
        let p = Prism::new(3).unwrap();
        let choices: Vec<Vec<Color>> = subsets(4, 3);
        let decode = |mut code: usize| -> Vec<Vec<Color>> {
            (0..6)
                .map(|_| {
                    let l = choices[code % 4].clone();
                    code /= 4;
                    l
                })
                .collect()
        };
        let encode = |lists: &[Vec<Color>]| -> usize {
            lists
                .iter()
                .rev()
                .fold(0, |acc, l| acc * 4 + choices.iter().position(|c| c == l).unwrap())
        };
        let group = automorphism_group(&p);
        let perms = {
            let base: Vec<Color> = (0..4).collect();
            permutations(&base)
        };
        let mut orbit = vec![usize::MAX; 4096];
        let mut count = 0;
        for s in 0..4096 {
            if orbit[s] != usize::MAX {
                continue;
            }
            orbit[s] = count;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                let lists = decode(x);
                for g in &group {
                    let mut moved = vec![Vec::new(); 6];
                    for (v, l) in lists.iter().enumerate() {
                        moved[g.apply(v)] = l.clone();
                    }
                    for perm in &perms {
                        let renamed: Vec<Vec<Color>> = moved
                            .iter()
                            .map(|l| {
                                let mut r: Vec<Color> = l.iter().map(|&c| perm[c as usize]).collect();
                                r.sort_unstable();
                                r
                            })
                            .collect();
                        let y = encode(&renamed);
                        if orbit[y] == usize::MAX {
                            orbit[y] = count;
                            q.push_back(y);
                        }
                    }
                }
            }
            count += 1;
        }
        let mut key_of_orbit: HashMap<usize, CanonicalKey> = HashMap::new();
        let mut orbit_of_key: HashMap<CanonicalKey, usize> = HashMap::new();
        for s in 0..4096 {
            let key = canonical_form(&p, &ListAssignment::new(decode(s)).unwrap());
            assert_eq!(key_of_orbit.entry(orbit[s]).or_insert_with(|| key.clone()), &key);
            assert_eq!(*orbit_of_key.entry(key).or_insert(orbit[s]), orbit[s]);
        }
        assert_eq!(orbit_of_key.len(), count);
        let sweep = enumerate_orbits(&p, 3, 4).unwrap();
        assert_eq!(sweep.orbits.len(), count);
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(6, 3).len(), 20);
        assert_eq!(subsets(3, 0), vec![Vec::<Color>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
