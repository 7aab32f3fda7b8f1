//! Exhaustive reference algorithms.
//!
//! Everything here enumerates permutations or vertex subsets directly, in
//! lexicographic order, and refuses inputs beyond its configured caps rather
//! than falling back to anything clever. Results are ground truth for the
//! greedy procedures.

use std::collections::HashSet;

use itertools::Itertools;

use crate::bitableau::{cumulative_counts, OrderKey, Vab};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `p` for any permutation search (`8! = 40320` relabelings).
    pub max_vertices: usize,
    /// Largest number of `k`-subsets a clique search may examine.
    pub max_clique_subsets: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_vertices: 8,
            max_clique_subsets: 10_000_000,
        }
    }
}

impl OracleConfig {
    fn check_vertices(&self, p: usize) -> Result<()> {
        if p > self.max_vertices {
            Err(Error::CapExceeded {
                what: "oracle vertex count",
                requested: p as u128,
                cap: self.max_vertices as u128,
            })
        } else {
            Ok(())
        }
    }
}

/// The labeled copy of a graph with the largest `[m, n]`-order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    pub tableau: Vab,
    pub key: OrderKey,
    /// Lexicographically smallest permutation reaching `key`.
    pub witness: Permutation,
}

impl CanonicalForm {
    /// Keeps the larger key; on equal keys keeps the smaller witness.
    ///
    /// Associative and commutative, so partial results over disjoint
    /// permutation ranges can be merged in any order.
    pub fn merge(self, other: CanonicalForm) -> CanonicalForm {
        match self.key.counts().cmp(other.key.counts()) {
            std::cmp::Ordering::Greater => self,
            std::cmp::Ordering::Less => other,
            std::cmp::Ordering::Equal => {
                if other.witness < self.witness {
                    other
                } else {
                    self
                }
            }
        }
    }
}

/// All permutations of `1..=p` in lexicographic order of their image lists.
pub fn permutations(p: usize) -> impl Iterator<Item = Permutation> {
    (1..=p)
        .permutations(p)
        .map(|images| Permutation::from_images(images).expect("itertools yields permutations"))
}

/// Maximum-key relabeling of `g` among `candidates`, or `None` if there are
/// none. Candidates are visited in the given order; the first maximizer wins.
pub fn canonical_form_over(
    g: &Graph,
    candidates: impl IntoIterator<Item = Permutation>,
) -> Option<CanonicalForm> {
    let p = g.p();
    let mut rows = vec![Vec::new(); p];
    let mut best: Option<(Vec<u32>, Permutation)> = None;
    for sigma in candidates {
        for v in 1..=p {
            let row = &mut rows[sigma.apply(v) - 1];
            row.clear();
            row.extend(g.neighbors(v).iter().map(|&u| sigma.apply(u)));
            row.sort_unstable();
        }
        let key = cumulative_counts(&rows, p, p, usize::MAX);
        if best.as_ref().is_none_or(|(k, _)| key > *k) {
            best = Some((key, sigma));
        }
    }
    best.map(|(counts, witness)| {
        let tableau = crate::bitableau::build_vab(&g.relabel(&witness).expect("sizes match"));
        CanonicalForm {
            tableau,
            key: OrderKey::from_counts(p, counts),
            witness,
        }
    })
}

/// The true standard form: maximum `[m, n]`-order over all `p!` relabelings.
pub fn canonical_form_exhaustive(g: &Graph, config: &OracleConfig) -> Result<CanonicalForm> {
    config.check_vertices(g.p())?;
    Ok(canonical_form_over(g, permutations(g.p())).expect("at least the identity"))
}

/// Some `σ` with `relabel(g, σ) == h`, found by depth-first search over
/// vertex assignments that respect degrees and adjacency so far. The first
/// hit is the lexicographically smallest isomorphism.
pub fn iso_exhaustive(g: &Graph, h: &Graph, config: &OracleConfig) -> Result<Option<Permutation>> {
    config.check_vertices(g.p().max(h.p()))?;
    if g.p() != h.p() || g.q() != h.q() {
        return Ok(None);
    }
    let p = g.p();
    let mut images = vec![0usize; p];
    let mut used = vec![false; p];
    if extend_isomorphism(g, h, 1, &mut images, &mut used) {
        let sigma = Permutation::from_images(images)?;
        debug_assert_eq!(g.relabel(&sigma)?, *h);
        Ok(Some(sigma))
    } else {
        Ok(None)
    }
}

fn extend_isomorphism(
    g: &Graph,
    h: &Graph,
    v: usize,
    images: &mut [usize],
    used: &mut [bool],
) -> bool {
    let p = g.p();
    if v > p {
        return true;
    }
    for x in 1..=p {
        if used[x - 1] || g.degree(v) != h.degree(x) {
            continue;
        }
        let consistent = (1..v).all(|u| g.has_edge(u, v) == h.has_edge(images[u - 1], x));
        if !consistent {
            continue;
        }
        images[v - 1] = x;
        used[x - 1] = true;
        if extend_isomorphism(g, h, v + 1, images, used) {
            return true;
        }
        used[x - 1] = false;
    }
    false
}

/// `|Γ(G)|`: the number of permutations fixing `g`, counted over all `p!`.
pub fn automorphism_count(g: &Graph, config: &OracleConfig) -> Result<u64> {
    config.check_vertices(g.p())?;
    let mut count = 0;
    for sigma in permutations(g.p()) {
        if g.relabel(&sigma)? == *g {
            count += 1;
        }
    }
    Ok(count)
}

/// Number of distinct graphs among all `p!` relabelings of `g`.
pub fn distinct_labeled_copies(g: &Graph, config: &OracleConfig) -> Result<u64> {
    config.check_vertices(g.p())?;
    let mut seen = HashSet::new();
    for sigma in permutations(g.p()) {
        seen.insert(g.relabel(&sigma)?);
    }
    Ok(seen.len() as u64)
}

/// `C(n, k)` without overflow for the sizes used here.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// The lexicographically smallest pairwise-adjacent `k`-subset, if any.
pub fn clique_exhaustive(g: &Graph, k: usize, config: &OracleConfig) -> Result<Option<Vec<usize>>> {
    let work = binomial(g.p(), k);
    if work > config.max_clique_subsets {
        return Err(Error::CapExceeded {
            what: "clique subset count",
            requested: work,
            cap: config.max_clique_subsets,
        });
    }
    Ok((1..=g.p()).combinations(k).find(|set| {
        set.iter()
            .tuple_combinations()
            .all(|(&a, &b)| g.has_edge(a, b))
    }))
}
