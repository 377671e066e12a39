//! Simple undirected graphs stored as bitset adjacency rows.
//!
//! Each row is `ceil(n / 64)` machine words, so the graphs produced by the
//! enumerator (n ≤ 10) occupy one word per row while the family constructors
//! can still build the larger instances used for closed-form checks.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Values are immutable once built; every query is a pure function.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.has_edge(u, v) {
            return Ok(false);
        }
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
        self.m += 1;
        Ok(true)
    }

    /// Returns a copy with the edge `uv` added (a no-op if already present).
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    /// Degree of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Degrees in vertex-label order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Neighbours of `v` in ascending label order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    /// Δ(G). Fails on the empty graph.
    pub fn max_degree(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .max()
            .ok_or(Error::EmptyGraph)
    }

    /// Number of connected components; zero for the order-0 graph.
    pub fn components(&self) -> usize {
        let mut seen = vec![0u64; self.words];
        let mut count = 0;
        for start in 0..self.n {
            if seen[start / 64] >> (start % 64) & 1 == 1 {
                continue;
            }
            count += 1;
            let mut stack = vec![start];
            seen[start / 64] |= 1 << (start % 64);
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if seen[w / 64] >> (w % 64) & 1 == 0 {
                        seen[w / 64] |= 1 << (w % 64);
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// True iff the graph has at least one vertex and a single component.
    pub fn is_connected(&self) -> bool {
        self.n >= 1 && self.components() == 1
    }

    /// ν = m − n + c.
    pub fn cyclomatic_number(&self) -> usize {
        self.m + self.components() - self.n
    }

    /// Vertex `v` with degree n − 1, if any. Picks the lowest label.
    pub fn dominating_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.degree(v) + 1 == self.n)
    }

    /// Number of edges whose two endpoints both have degree 1 (ε₀).
    pub fn isolated_edges(&self) -> usize {
        self.edges()
            .filter(|&(u, v)| self.degree(u) == 1 && self.degree(v) == 1)
            .count()
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn edge_stats(&self) -> EdgeStats {
        let deg = self.degrees();
        let mut stats = EdgeStats::default();
        for (u, v) in self.edges() {
            let (a, b) = (deg[u].min(deg[v]), deg[u].max(deg[v]));
            *stats.mij.entry((a, b)).or_insert(0) += 1;
            *stats.epsilon.entry(a + b - 2).or_insert(0) += 1;
        }
        stats
    }

    /// Removes `v`; the remaining vertices keep their relative order.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let relabel = |x: usize| if x > v { x - 1 } else { x };
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges().filter(|&(a, b)| a != v && b != v) {
            g.insert_edge(relabel(a), relabel(b))?;
        }
        Ok(g)
    }

    /// Relabels the graph so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch(perm.len(), self.n));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let mut g = Graph::empty(self.n);
        for (a, b) in self.edges() {
            g.insert_edge(perm[a], perm[b])?;
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Vertex degrees sorted non-increasingly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// Edge-degree histogram ε_i and endpoint-degree pair counts m_{i,j} (i ≤ j).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeStats {
    pub epsilon: BTreeMap<usize, usize>,
    pub mij: BTreeMap<(usize, usize), usize>,
}

impl EdgeStats {
    pub fn epsilon(&self, i: usize) -> usize {
        self.epsilon.get(&i).copied().unwrap_or(0)
    }

    pub fn mij(&self, i: usize, j: usize) -> usize {
        self.mij.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn path_construction() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 2, 1]);
        assert_eq!(g.degree_sequence().as_slice(), &[2, 1, 1]);
        assert_eq!(g.size(), 2);
    }

    #[test]
    fn k1_and_k4() {
        let k1 = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(k1.size(), 0);
        assert_eq!(k1.degree_sequence().as_slice(), &[0]);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.size(), 6);
        assert!(k4.degrees().iter().all(|&d| d == 3));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::Loop(1)));
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn connectivity() {
        assert!(path(4).is_connected());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.components(), 2);
        let empty = Graph::empty(0);
        assert!(!empty.is_connected());
        assert_eq!(empty.components(), 0);
        assert_eq!(empty.max_degree(), Err(Error::EmptyGraph));
    }

    #[test]
    fn cyclomatic_and_edge_stats() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.cyclomatic_number(), 1);
        assert_eq!(path(6).cyclomatic_number(), 0);
        let s = c5.edge_stats();
        assert_eq!(s.epsilon(2), 5);
        assert_eq!(s.epsilon.len(), 1);
        assert_eq!(s.mij(2, 2), 5);

        let p4 = path(4).edge_stats();
        assert_eq!((p4.epsilon(1), p4.epsilon(2)), (2, 1));
        assert_eq!((p4.mij(1, 2), p4.mij(2, 2)), (2, 1));

        let k2 = path(2);
        assert_eq!(k2.edge_stats().epsilon(0), 1);
        assert_eq!(k2.isolated_edges(), 1);
    }

    #[test]
    fn delete_vertex_compacts_labels() {
        let p3 = path(3);
        let p2 = p3.delete_vertex(0).unwrap();
        assert_eq!(p2, path(2));
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let rest = star.delete_vertex(0).unwrap();
        assert_eq!(rest, Graph::empty(4));
        assert!(p3.delete_vertex(3).is_err());
    }

    #[test]
    fn wide_rows() {
        let n = 150;
        let e: Vec<_> = (1..n).map(|v| (0, v)).collect();
        let g = Graph::from_edges(n, &e).unwrap();
        assert_eq!(g.degree(0), n - 1);
        assert_eq!(g.neighbors(0).last(), Some(n - 1));
        assert_eq!(g.edges().count(), n - 1);
        assert!(g.is_connected());
    }
}
