//! Simple undirected graphs on the vertex labels `1..=p`.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest vertex count [`enumerate_labeled_graphs`] accepts unless told otherwise.
pub const DEFAULT_ENUMERATION_CAP: usize = 7;

/// A simple undirected graph. Vertices are `1..=p`; each adjacency list is
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// `p` isolated vertices.
    pub fn empty(p: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); p],
        }
    }

    pub fn complete(p: usize) -> Self {
        Graph {
            adjacency: (1..=p)
                .map(|v| (1..=p).filter(|&u| u != v).collect())
                .collect(),
        }
    }

    /// The path `1 - 2 - … - p`.
    pub fn path(p: usize) -> Self {
        let edges: Vec<_> = (1..p).map(|v| (v, v + 1)).collect();
        Graph::from_edges(p, &edges).expect("path edges are valid")
    }

    /// The cycle `1 - 2 - … - p - 1`, for `p >= 3`.
    pub fn cycle(p: usize) -> Self {
        let mut edges: Vec<_> = (1..p).map(|v| (v, v + 1)).collect();
        edges.push((p, 1));
        Graph::from_edges(p, &edges).expect("cycle edges are valid")
    }

    pub fn from_edges(p: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(p);
        for (idx, &(u, v)) in edges.iter().enumerate() {
            g.insert_edge(u, v).map_err(|message| Error::Parse {
                line: idx + 1,
                message,
            })?;
        }
        g.sort_rows();
        Ok(g)
    }

    /// Builds a graph from per-vertex neighbor lists, checking symmetry.
    pub fn from_adjacency(rows: Vec<Vec<usize>>) -> Result<Self> {
        let p = rows.len();
        let mut edges = Vec::new();
        for (i, row) in rows.iter().enumerate() {
            let v = i + 1;
            for &u in row {
                if u == 0 || u > p {
                    return Err(Error::IndexOutOfRange { index: u, max: p });
                }
                if !rows[u - 1].contains(&v) {
                    return Err(Error::Parse {
                        line: v,
                        message: format!("{u} is listed as a neighbor of {v} but not vice versa"),
                    });
                }
                if v < u {
                    edges.push((v, u));
                }
            }
        }
        Graph::from_edges(p, &edges)
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> std::result::Result<(), String> {
        let p = self.p();
        if u == 0 || v == 0 || u > p || v > p {
            return Err(format!("edge {u} {v} has a vertex outside 1..={p}"));
        }
        if u == v {
            return Err(format!("self-loop at vertex {u}"));
        }
        if self.adjacency[u - 1].contains(&v) {
            return Err(format!("duplicate edge {u} {v}"));
        }
        self.adjacency[u - 1].push(v);
        self.adjacency[v - 1].push(u);
        Ok(())
    }

    fn sort_rows(&mut self) {
        for row in &mut self.adjacency {
            row.sort_unstable();
        }
    }

    /// Vertex count.
    pub fn p(&self) -> usize {
        self.adjacency.len()
    }

    /// Edge count.
    pub fn q(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.q());
        for (i, row) in self.adjacency.iter().enumerate() {
            out.extend(row.iter().filter(|&&u| u > i + 1).map(|&u| (i + 1, u)));
        }
        out
    }

    /// `[d(v_1), …, d(v_p)]` in label order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// The degree multiset, largest first. Isomorphism invariant.
    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degree_sequence();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub(crate) fn rows(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    /// The graph with every edge `{u, v}` replaced by `{σ(u), σ(v)}`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Graph> {
        if sigma.len() != self.p() {
            return Err(Error::SizeMismatch {
                expected: self.p(),
                found: sigma.len(),
            });
        }
        let mut adjacency = vec![Vec::new(); self.p()];
        for (i, row) in self.adjacency.iter().enumerate() {
            adjacency[sigma.apply(i + 1) - 1] = row.iter().map(|&u| sigma.apply(u)).collect();
        }
        let mut g = Graph { adjacency };
        g.sort_rows();
        Ok(g)
    }

    /// Attaches edge labels `1..=q` to the edges in lexicographic endpoint order.
    pub fn label_edges(&self) -> EdgeLabeledGraph {
        EdgeLabeledGraph {
            base: self.clone(),
            edges: self.edges(),
        }
    }
}

/// Edge-list text: `p q` on the first line, then `q` lines `u v`.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.p(), self.q())?;
        for (u, v) in self.edges() {
            write!(f, "\n{u} {v}")?;
        }
        Ok(())
    }
}

/// Parses the edge-list format. Blank lines are skipped; line numbers in
/// errors refer to the original text.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing \"p q\" header".into(),
    })?;
    let (p, q) = parse_pair(header_line, header)?;

    let mut g = Graph::empty(p);
    let mut seen = 0;
    for (line, text) in lines {
        if seen == q {
            return Err(Error::Parse {
                line,
                message: format!("more than the declared {q} edges"),
            });
        }
        let (u, v) = parse_pair(line, text)?;
        g.insert_edge(u, v)
            .map_err(|message| Error::Parse { line, message })?;
        seen += 1;
    }
    if seen != q {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("expected {q} edges, found {seen}"),
        });
    }
    g.sort_rows();
    Ok(g)
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("expected two integers, got {text:?}"),
        })?;
        field.parse().map_err(|_| Error::Parse {
            line,
            message: format!("{field:?} is not a non-negative integer"),
        })
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, got {text:?}"),
        });
    }
    Ok((a, b))
}

/// A graph whose edges carry the labels `1..=q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeledGraph {
    base: Graph,
    // edges[e - 1] = endpoints of edge e, smaller first
    edges: Vec<(usize, usize)>,
}

impl EdgeLabeledGraph {
    /// `edges[e - 1]` are the endpoints of the edge labelled `e`; they must be
    /// exactly the edges of `base`.
    pub fn new(base: Graph, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut normalized: Vec<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        let mut sorted = normalized.clone();
        sorted.sort_unstable();
        if sorted != base.edges() {
            return Err(Error::SizeMismatch {
                expected: base.q(),
                found: edges.len(),
            });
        }
        normalized.shrink_to_fit();
        Ok(EdgeLabeledGraph {
            base,
            edges: normalized,
        })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn p(&self) -> usize {
        self.base.p()
    }

    pub fn q(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `e`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e - 1]
    }

    pub fn edge_labels(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Relabels vertices by `sigma` and edges by `tau`.
    pub fn relabel(&self, sigma: &Permutation, tau: &Permutation) -> Result<EdgeLabeledGraph> {
        if tau.len() != self.q() {
            return Err(Error::SizeMismatch {
                expected: self.q(),
                found: tau.len(),
            });
        }
        let base = self.base.relabel(sigma)?;
        let mut edges = vec![(0, 0); self.q()];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            let (a, b) = (sigma.apply(u), sigma.apply(v));
            edges[tau.apply(e + 1) - 1] = (a.min(b), a.max(b));
        }
        Ok(EdgeLabeledGraph { base, edges })
    }
}

/// Number of labeled simple graphs on `p` vertices, `2^(p(p-1)/2)`.
pub fn labeled_graph_count(p: usize) -> u128 {
    1u128 << (p * p.saturating_sub(1) / 2)
}

/// Every labeled simple graph on `p` vertices, once each.
///
/// Graph number `m` has edge `(i, j)` exactly when bit `t` of `m` is set,
/// where `t` indexes the pairs `(1,2), (1,3), …, (1,p), (2,3), …`.
pub fn enumerate_labeled_graphs(p: usize, cap: usize) -> Result<impl Iterator<Item = Graph>> {
    if p > cap {
        return Err(Error::CapExceeded {
            what: "labeled graph enumeration vertex count",
            requested: p as u128,
            cap: cap as u128,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..=p)
        .flat_map(|i| (i + 1..=p).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| {
        let mut adjacency = vec![Vec::new(); p];
        for (t, &(i, j)) in pairs.iter().enumerate() {
            if mask >> t & 1 == 1 {
                adjacency[i - 1].push(j);
                adjacency[j - 1].push(i);
            }
        }
        let mut g = Graph { adjacency };
        g.sort_rows();
        g
    }))
}
