//! k-clique detection by degree-restricted standardization.
//!
//! The restricted tableau only looks at the first `k - 1` entries of each row
//! and only at the first `k` rows. Greedy transpositions are allowed between
//! any two vertices of degree at least `k - 1` (degree order need not be
//! kept), and aim to make the leading `k` rows read `{1..k} \ {j}`, which
//! exhibits a `k`-clique on labels `1..=k`.

use std::fmt;

use crate::bitableau::{build_vab, cumulative_counts, render_rows, Vab};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::standardize::{degree_sort_moves, Move, Phase, TraceStep};

/// A vertex adjacency bitableau viewed through a `(k - 1)`-column restriction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedVab {
    vab: Vab,
    k: usize,
}

/// Restricted `[m, n]` counts, `n`-major over `m, n ∈ 1..=p`. Rows past `k`
/// are not counted, so every block after the `k`-th repeats the `k`-th.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RestrictedOrderKey {
    p: usize,
    k: usize,
    counts: Vec<u32>,
}

fn check_k(p: usize, k: usize) -> Result<()> {
    if k < 2 || k > p {
        Err(Error::InvalidCliqueSize { k, p })
    } else {
        Ok(())
    }
}

pub fn build_restricted_vab(g: &Graph, k: usize) -> Result<RestrictedVab> {
    check_k(g.p(), k)?;
    Ok(RestrictedVab {
        vab: build_vab(g),
        k,
    })
}

impl RestrictedVab {
    pub fn new(vab: Vab, k: usize) -> Result<RestrictedVab> {
        check_k(vab.p(), k)?;
        Ok(RestrictedVab { vab, k })
    }

    pub fn vab(&self) -> &Vab {
        &self.vab
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn p(&self) -> usize {
        self.vab.p()
    }

    /// The first `min(d(v_j), k - 1)` entries of row `j`.
    pub fn restriction(&self, j: usize) -> &[usize] {
        let row = self.vab.row(j);
        &row[..row.len().min(self.k - 1)]
    }

    pub fn order_key(&self) -> RestrictedOrderKey {
        let p = self.p();
        let mut counts = cumulative_counts(self.vab.rows(), p, self.k, self.k - 1);
        let last = counts[(self.k - 1) * p..].to_vec();
        for _ in self.k..p {
            counts.extend_from_slice(&last);
        }
        RestrictedOrderKey {
            p,
            k: self.k,
            counts,
        }
    }
}

/// Rows with the restriction bar after the first `k - 1` entries.
impl fmt::Display for RestrictedVab {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_rows(f, self.vab.rows(), Some(self.k - 1))
    }
}

impl RestrictedOrderKey {
    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `[m, n]`, both 1-based.
    pub fn get(&self, m: usize, n: usize) -> u32 {
        self.counts[(n - 1) * self.p + (m - 1)]
    }
}

pub fn restricted_order_key(t: &RestrictedVab) -> RestrictedOrderKey {
    t.order_key()
}

/// True when rows `1..=k` begin with `{1..k} \ {j}`, i.e. labels `1..=k`
/// form a clique.
pub fn leading_clique_check(t: &RestrictedVab) -> bool {
    let k = t.k;
    (1..=k).all(|j| {
        let prefix = t.restriction(j);
        prefix.len() == k - 1 && prefix.iter().copied().eq((1..=k).filter(|&x| x != j))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictedOutcome {
    Standardized,
    /// Fewer than `k` vertices have degree `≥ k - 1`; no search was run.
    DegreeFiltered,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedStandardization {
    pub tableau: RestrictedVab,
    /// Maps each original vertex to its label in `tableau`.
    pub vertex_perm: Permutation,
    pub steps: usize,
    pub trace: Vec<TraceStep>,
    pub outcome: RestrictedOutcome,
}

/// Greedy restricted standardization for clique size `k`.
pub fn restricted_standardize(g: &Graph, k: usize) -> Result<RestrictedStandardization> {
    check_k(g.p(), k)?;
    let p = g.p();
    let mut tableau = build_vab(g);
    let mut perm = Permutation::identity(p);
    let mut trace = Vec::new();

    let eligible = g.degree_sequence().iter().filter(|&&d| d + 1 >= k).count();
    if eligible < k {
        return Ok(RestrictedStandardization {
            tableau: RestrictedVab { vab: tableau, k },
            vertex_perm: perm,
            steps: 0,
            trace,
            outcome: RestrictedOutcome::DegreeFiltered,
        });
    }

    let mut apply = |tableau: &mut Vab, phase: Phase, i: usize, j: usize| {
        tableau.swap_in_place(i, j);
        perm.swap_images_of_points(i, j);
        trace.push(TraceStep {
            phase,
            action: Move::Vertex(i, j),
        });
    };

    for (i, j) in degree_sort_moves(&g.degree_sequence()) {
        apply(&mut tableau, Phase::DegreeSort, i, j);
    }
    let mut degrees: Vec<usize> = tableau.rows().iter().map(Vec::len).collect();

    let mut pass = 1;
    loop {
        let mut moved = false;
        for row in 1..=k {
            while let Some((i, j)) = best_restricted_move(&tableau, &degrees, k, row) {
                apply(&mut tableau, Phase::Row { pass, row }, i, j);
                degrees.swap(i - 1, j - 1);
                moved = true;
            }
        }
        if !moved {
            break;
        }
        pass += 1;
    }

    let steps = trace.len();
    Ok(RestrictedStandardization {
        tableau: RestrictedVab { vab: tableau, k },
        vertex_perm: perm,
        steps,
        trace,
        outcome: RestrictedOutcome::Standardized,
    })
}

fn best_restricted_move(
    tableau: &Vab,
    degrees: &[usize],
    k: usize,
    row: usize,
) -> Option<(usize, usize)> {
    let p = tableau.p();
    let width = k - 1;
    let frozen: Vec<Vec<usize>> = tableau.rows()[..row - 1]
        .iter()
        .map(|r| r[..r.len().min(width)].to_vec())
        .collect();
    let view = |t: &Vab| cumulative_counts(t.rows(), p, row, width);
    let mut best_key = view(tableau);
    let mut best = None;
    let mut scratch = tableau.clone();
    for i in row..=p {
        if degrees[i - 1] < width {
            continue;
        }
        for j in i + 1..=p {
            if degrees[j - 1] < width {
                continue;
            }
            scratch.swap_in_place(i, j);
            let keeps_frozen = scratch.rows()[..row - 1]
                .iter()
                .zip(&frozen)
                .all(|(r, f)| r[..r.len().min(width)] == f[..]);
            if keeps_frozen {
                let key = view(&scratch);
                if key > best_key {
                    best_key = key;
                    best = Some((i, j));
                }
            }
            scratch.swap_in_place(i, j);
        }
    }
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliqueVerdict {
    /// Sorted original vertex labels, checked pairwise adjacent.
    Found(Vec<usize>),
    /// Certified: fewer than `k` vertices of degree `≥ k - 1`.
    NotFound,
    /// The greedy form does not show a leading clique; one may still exist.
    Inconclusive,
}

/// Restricted standardization followed by the leading-block check.
pub fn find_k_clique(g: &Graph, k: usize) -> Result<CliqueVerdict> {
    find_k_clique_traced(g, k).map(|(verdict, _)| verdict)
}

/// [`find_k_clique`] together with the standardization it ran.
pub fn find_k_clique_traced(
    g: &Graph,
    k: usize,
) -> Result<(CliqueVerdict, RestrictedStandardization)> {
    let run = restricted_standardize(g, k)?;
    if run.outcome == RestrictedOutcome::DegreeFiltered {
        return Ok((CliqueVerdict::NotFound, run));
    }
    if !leading_clique_check(&run.tableau) {
        return Ok((CliqueVerdict::Inconclusive, run));
    }
    let back = run.vertex_perm.inverse();
    let mut witness: Vec<usize> = (1..=k).map(|label| back.apply(label)).collect();
    witness.sort_unstable();
    let pairwise = witness
        .iter()
        .enumerate()
        .all(|(a, &u)| witness[a + 1..].iter().all(|&v| g.has_edge(u, v)));
    if !pairwise {
        return Err(Error::Internal(format!(
            "leading clique block maps back to {witness:?}, which is not a clique"
        )));
    }
    Ok((CliqueVerdict::Found(witness), run))
}
