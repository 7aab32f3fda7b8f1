//! Vertex adjacency and incidence bitableaux and their `[m, n]` order keys.
//!
//! A bitableau pairs a left column of vertex labels `1..=p` with a right
//! tableau holding one row per vertex. Every action used here leaves the left
//! column as `1..=p` in order, so only the right tableau is stored. Rows are
//! kept sorted ascending, which makes tableau equality structural.
//!
//! The order key `Seq([m, n])` lists, for `n = 1..=rows` and then
//! `m = 1..=range`, the number of entries `≤ m` among the first `n` rows.
//! Keys compare lexicographically; a larger key is a larger `[m, n]`-order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeLabeledGraph, Graph};
use crate::perm::Permutation;

/// Vertex adjacency bitableau: row `j` lists the neighbors of vertex `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vab {
    rows: Vec<Vec<usize>>,
}

/// Incidence bitableau: row `j` lists the labels of the edges incident to `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ib {
    q: usize,
    rows: Vec<Vec<usize>>,
}

/// A materialized `Seq([m, n])`, laid out `n`-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderKey {
    m_range: usize,
    counts: Vec<u32>,
}

pub fn build_vab(g: &Graph) -> Vab {
    Vab {
        rows: g.rows().to_vec(),
    }
}

pub fn build_ib(g: &EdgeLabeledGraph) -> Ib {
    let mut rows = vec![Vec::new(); g.p()];
    for (e, &(u, v)) in g.edge_labels().iter().enumerate() {
        rows[u - 1].push(e + 1);
        rows[v - 1].push(e + 1);
    }
    for row in &mut rows {
        row.sort_unstable();
    }
    Ib { q: g.q(), rows }
}

/// Cumulative counts for the first `n_rows` rows, considering only the first
/// `width` entries of each row. Output has `n_rows * m_range` entries.
pub(crate) fn cumulative_counts(
    rows: &[Vec<usize>],
    m_range: usize,
    n_rows: usize,
    width: usize,
) -> Vec<u32> {
    let mut out = Vec::with_capacity(n_rows * m_range);
    let mut hist = vec![0u32; m_range + 1];
    for row in rows.iter().take(n_rows) {
        for &x in row.iter().take(width) {
            hist[x] += 1;
        }
        let mut running = 0;
        for &h in &hist[1..] {
            running += h;
            out.push(running);
        }
    }
    out
}

impl Vab {
    /// Builds a tableau from explicit rows, checking that they describe a
    /// simple undirected graph.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Vab> {
        Graph::from_adjacency(rows).map(|g| build_vab(&g))
    }

    pub fn p(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row `j`, 1-based.
    pub fn row(&self, j: usize) -> &[usize] {
        &self.rows[j - 1]
    }

    /// The graph this tableau describes.
    pub fn to_graph(&self) -> Graph {
        Graph::from_adjacency(self.rows.clone()).expect("tableau rows are symmetric")
    }

    pub fn order_key(&self) -> OrderKey {
        let p = self.p();
        OrderKey {
            m_range: p,
            counts: cumulative_counts(&self.rows, p, p, usize::MAX),
        }
    }

    /// Key restricted to the first `n_rows` rows (a prefix of [`Vab::order_key`]).
    pub(crate) fn key_prefix(&self, n_rows: usize) -> Vec<u32> {
        cumulative_counts(&self.rows, self.p(), n_rows, usize::MAX)
    }

    /// `[(i, j)]VAB`: swap rows `i` and `j` and exchange the entries `i` and
    /// `j` everywhere.
    pub fn act_transposition(&self, i: usize, j: usize) -> Result<Vab> {
        let sigma = Permutation::transposition(self.p(), i, j)?;
        self.act(&sigma)
    }

    /// `[(i_1 … i_r)]VAB`: row `i_t` moves to `i_{t+1}` and entries are
    /// rewritten the same way.
    pub fn act_cycle(&self, cycle: &[usize]) -> Result<Vab> {
        let sigma = Permutation::from_cycle(self.p(), cycle)?;
        self.act(&sigma)
    }

    /// Relabels by an arbitrary permutation: row `σ(v)` of the result is
    /// `σ(row v)`.
    pub fn act(&self, sigma: &Permutation) -> Result<Vab> {
        if sigma.len() != self.p() {
            return Err(Error::SizeMismatch {
                expected: self.p(),
                found: sigma.len(),
            });
        }
        let mut rows = vec![Vec::new(); self.p()];
        for (v, row) in self.rows.iter().enumerate() {
            let mut image: Vec<usize> = row.iter().map(|&x| sigma.apply(x)).collect();
            image.sort_unstable();
            rows[sigma.apply(v + 1) - 1] = image;
        }
        Ok(Vab { rows })
    }

    pub(crate) fn swap_in_place(&mut self, i: usize, j: usize) {
        self.rows.swap(i - 1, j - 1);
        for row in &mut self.rows {
            let mut touched = false;
            for x in row.iter_mut() {
                if *x == i {
                    *x = j;
                    touched = true;
                } else if *x == j {
                    *x = i;
                    touched = true;
                }
            }
            if touched {
                row.sort_unstable();
            }
        }
    }
}

impl Ib {
    pub fn p(&self) -> usize {
        self.rows.len()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> &[usize] {
        &self.rows[j - 1]
    }

    pub fn order_key(&self) -> OrderKey {
        OrderKey {
            m_range: self.q,
            counts: cumulative_counts(&self.rows, self.q, self.p(), usize::MAX),
        }
    }

    pub(crate) fn key_prefix(&self, n_rows: usize) -> Vec<u32> {
        cumulative_counts(&self.rows, self.q, n_rows, usize::MAX)
    }

    /// Action on the left tableau: row `v` moves to position `σ(v)`; entries
    /// are untouched.
    pub fn act_left(&self, sigma: &Permutation) -> Result<Ib> {
        if sigma.len() != self.p() {
            return Err(Error::SizeMismatch {
                expected: self.p(),
                found: sigma.len(),
            });
        }
        let mut rows = vec![Vec::new(); self.p()];
        for (v, row) in self.rows.iter().enumerate() {
            rows[sigma.apply(v + 1) - 1] = row.clone();
        }
        Ok(Ib { q: self.q, rows })
    }

    /// Action on the right tableau: every entry `e` becomes `τ(e)`; rows stay
    /// in place.
    pub fn act_right(&self, tau: &Permutation) -> Result<Ib> {
        if tau.len() != self.q {
            return Err(Error::SizeMismatch {
                expected: self.q,
                found: tau.len(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut image: Vec<usize> = row.iter().map(|&e| tau.apply(e)).collect();
                image.sort_unstable();
                image
            })
            .collect();
        Ok(Ib { q: self.q, rows })
    }

    pub(crate) fn swap_rows_in_place(&mut self, i: usize, j: usize) {
        self.rows.swap(i - 1, j - 1);
    }

    pub(crate) fn swap_entries_in_place(&mut self, a: usize, b: usize) {
        for row in &mut self.rows {
            let mut touched = false;
            for x in row.iter_mut() {
                if *x == a {
                    *x = b;
                    touched = true;
                } else if *x == b {
                    *x = a;
                    touched = true;
                }
            }
            if touched {
                row.sort_unstable();
            }
        }
    }
}

impl OrderKey {
    /// Wraps raw counts; `m_range` is the number of `m` values per row block.
    pub fn from_counts(m_range: usize, counts: Vec<u32>) -> OrderKey {
        OrderKey { m_range, counts }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn m_range(&self) -> usize {
        self.m_range
    }

    /// `[m, n]`, both 1-based.
    pub fn get(&self, m: usize, n: usize) -> u32 {
        self.counts[(n - 1) * self.m_range + (m - 1)]
    }
}

/// Lexicographic comparison of two keys of equal length.
pub fn compare_keys(a: &OrderKey, b: &OrderKey) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::KeyLengthMismatch(a.len(), b.len()));
    }
    Ok(a.counts.cmp(&b.counts))
}

pub(crate) fn render_rows(
    f: &mut fmt::Formatter<'_>,
    rows: &[Vec<usize>],
    bar_after: Option<usize>,
) -> fmt::Result {
    for (j, row) in rows.iter().enumerate() {
        if j > 0 {
            writeln!(f)?;
        }
        write!(f, "{} |", j + 1)?;
        for (t, x) in row.iter().enumerate() {
            if bar_after == Some(t) && t > 0 {
                write!(f, " |")?;
            }
            write!(f, " {x}")?;
        }
    }
    Ok(())
}

/// One line per row: `j | a1 a2 … ak`.
impl fmt::Display for Vab {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_rows(f, &self.rows, None)
    }
}

impl fmt::Display for Ib {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_rows(f, &self.rows, None)
    }
}
