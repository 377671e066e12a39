//! Exact canonical forms for small graphs.
//!
//! The canonical form is the lexicographically smallest upper-triangle bit
//! string (graph6 order) among the labelings reached by an
//! individualization-refinement search. Refinement is the coarsest equitable
//! refinement of an ordered partition; its cell order depends only on
//! neighbour counts, so the set of leaves is carried along by any relabeling
//! and the minimum is a complete invariant. Branches on twin vertices are
//! pruned: swapping two twins is an automorphism that fixes the current node.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANON_ORDER: usize = 10;

/// Canonical adjacency code of an isomorphism class.
///
/// Ordered by order first, then by the triangle string, so sorting a list of
/// forms of equal order sorts it lexicographically by canonical string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u64,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Triangle string x(0,1), x(0,2), x(1,2), ... packed most significant first.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn size(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn to_graph(&self) -> Graph {
        SmallGraph::from_code(self.order(), self.bits).to_graph()
    }
}

/// Fixed-capacity adjacency rows used inside the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct SmallGraph {
    pub n: usize,
    pub rows: [u32; MAX_CANON_ORDER],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_CANON_ORDER);
        SmallGraph {
            n,
            rows: [0; MAX_CANON_ORDER],
        }
    }

    pub fn from_graph(g: &Graph) -> Result<Self> {
        if g.order() > MAX_CANON_ORDER {
            return Err(Error::ScopeCap(format!(
                "canonical forms are limited to n <= {MAX_CANON_ORDER}, got n = {}",
                g.order()
            )));
        }
        let mut s = SmallGraph::empty(g.order());
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        Ok(s)
    }

    pub fn from_code(n: usize, bits: u64) -> Self {
        let len = n * n.saturating_sub(1) / 2;
        let mut s = SmallGraph::empty(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits >> (len - 1 - k) & 1 == 1 {
                    s.add_edge(i, j);
                }
                k += 1;
            }
        }
        s
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    pub fn to_graph(self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            let mut r = self.rows[u] >> (u + 1);
            while r != 0 {
                let v = u + 1 + r.trailing_zeros() as usize;
                r &= r - 1;
                g.insert_edge(u, v)
                    .expect("rows hold in-range simple edges");
            }
        }
        g
    }

    /// Triangle code of the relabeling that puts vertex `order[p]` at position `p`.
    #[inline]
    fn code_under(&self, order: &[u8]) -> u64 {
        let mut bits = 0u64;
        for j in 1..self.n {
            let row = self.rows[order[j] as usize];
            for &vi in &order[..j] {
                bits = (bits << 1) | (row >> vi & 1) as u64;
            }
        }
        bits
    }

    fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let all = (1u32 << self.n) - 1;
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }
}

/// Splits every cell by neighbour counts into splitter cells until the ordered
/// partition is equitable. Sub-cells are ordered by ascending count.
fn refine(g: &SmallGraph, cells: &mut Vec<u32>) {
    let mut scratch: Vec<u32> = Vec::with_capacity(g.n);
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s];
        scratch.clear();
        let mut split = false;
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                scratch.push(cell);
                continue;
            }
            let mut by_count = [0u32; MAX_CANON_ORDER + 1];
            let mut c = cell;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                by_count[(g.rows[v] & splitter).count_ones() as usize] |= 1 << v;
            }
            let before = scratch.len();
            scratch.extend(by_count.iter().copied().filter(|&part| part != 0));
            split |= scratch.len() - before > 1;
        }
        if split {
            std::mem::swap(cells, &mut scratch);
            s = 0;
        } else {
            s += 1;
        }
    }
}

#[inline]
fn twins(g: &SmallGraph, u: usize, v: usize) -> bool {
    let mask = !((1u32 << u) | (1u32 << v));
    g.rows[u] & mask == g.rows[v] & mask
}

fn search(g: &SmallGraph, mut cells: Vec<u32>, best: &mut u64, order: &mut Vec<u8>) {
    refine(g, &mut cells);
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        order.clear();
        order.extend(cells.iter().map(|c| c.trailing_zeros() as u8));
        let code = g.code_under(order);
        if code < *best {
            *best = code;
        }
        return;
    };
    let cell = cells[target];
    let mut tried: u32 = 0;
    let mut c = cell;
    while c != 0 {
        let v = c.trailing_zeros() as usize;
        c &= c - 1;
        let mut t = tried;
        let mut redundant = false;
        while t != 0 {
            let w = t.trailing_zeros() as usize;
            t &= t - 1;
            if twins(g, v, w) {
                redundant = true;
                break;
            }
        }
        if redundant {
            continue;
        }
        tried |= 1 << v;
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(1 << v);
        child.push(cell & !(1 << v));
        child.extend_from_slice(&cells[target + 1..]);
        search(g, child, best, order);
    }
}

pub(crate) fn canonical_small(g: &SmallGraph) -> CanonicalForm {
    if g.n <= 1 {
        return CanonicalForm {
            n: g.n as u8,
            bits: 0,
        };
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(g.n);
    search(g, vec![(1u32 << g.n) - 1], &mut best, &mut order);
    CanonicalForm {
        n: g.n as u8,
        bits: best,
    }
}

pub(crate) fn small_is_connected(g: &SmallGraph) -> bool {
    g.is_connected()
}

/// Canonical form of `g`; equal forms iff isomorphic graphs. Requires n ≤ 10.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    Ok(canonical_small(&SmallGraph::from_graph(g)?))
}

/// Isomorphism test through canonical forms.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence()
    {
        // both still have to be in scope
        SmallGraph::from_graph(a)?;
        SmallGraph::from_graph(b)?;
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
