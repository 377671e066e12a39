//! Degree-based topological indices.
//!
//! Every index is an edge sum Σ_{uv∈E} f(d(u), d(v)) evaluated by
//! [`evaluate_generic`]; the first Zagreb index is additionally computed in
//! exact integer arithmetic from both of its defining formulas.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Σ_{uv∈E} f(d(u), d(v)), summed in edge order.
pub fn evaluate_generic<F>(g: &Graph, f: F) -> Result<f64>
where
    F: Fn(usize, usize) -> f64,
{
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let deg = g.degrees();
    Ok(g.edges().map(|(u, v)| f(deg[u], deg[v])).sum())
}

#[inline]
pub fn sombor_term(a: usize, b: usize) -> f64 {
    ((a * a + b * b) as f64).sqrt()
}

#[inline]
pub fn reduced_sombor_term(a: usize, b: usize) -> f64 {
    let (x, y) = (a.saturating_sub(1), b.saturating_sub(1));
    ((x * x + y * y) as f64).sqrt()
}

#[inline]
pub fn shifted_sombor_term(a: usize, b: usize) -> f64 {
    sombor_term(a + 1, b + 1)
}

/// SO(G) = Σ √(d(u)² + d(v)²).
pub fn sombor(g: &Graph) -> Result<f64> {
    evaluate_generic(g, sombor_term)
}

/// SO_red(G) = Σ √((d(u)−1)² + (d(v)−1)²).
pub fn reduced_sombor(g: &Graph) -> Result<f64> {
    evaluate_generic(g, reduced_sombor_term)
}

/// SO‡(G) = Σ √((d(u)+1)² + (d(v)+1)²).
pub fn sombor_shifted(g: &Graph) -> Result<f64> {
    evaluate_generic(g, shifted_sombor_term)
}

/// M₁ as the edge sum Σ (d(u) + d(v)).
pub fn first_zagreb_edge_sum(g: &Graph) -> u64 {
    let deg = g.degrees();
    g.edges().map(|(u, v)| (deg[u] + deg[v]) as u64).sum()
}

/// M₁ as the vertex sum Σ d(v)².
pub fn first_zagreb_vertex_sum(g: &Graph) -> u64 {
    g.degrees().iter().map(|&d| (d * d) as u64).sum()
}

/// M₁(G), exact. Both defining formulas are evaluated and must agree.
pub fn first_zagreb(g: &Graph) -> Result<u64> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let by_edges = first_zagreb_edge_sum(g);
    let by_vertices = first_zagreb_vertex_sum(g);
    assert_eq!(by_edges, by_vertices, "first Zagreb formulas disagree");
    Ok(by_vertices)
}

/// The indices the extremal search and the CLI can target by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeIndex {
    Sombor,
    ReducedSombor,
    ShiftedSombor,
    FirstZagreb,
}

impl DegreeIndex {
    pub fn edge_term(self, a: usize, b: usize) -> f64 {
        match self {
            DegreeIndex::Sombor => sombor_term(a, b),
            DegreeIndex::ReducedSombor => reduced_sombor_term(a, b),
            DegreeIndex::ShiftedSombor => shifted_sombor_term(a, b),
            DegreeIndex::FirstZagreb => (a + b) as f64,
        }
    }

    pub fn evaluate(self, g: &Graph) -> Result<f64> {
        evaluate_generic(g, |a, b| self.edge_term(a, b))
    }

    pub fn name(self) -> &'static str {
        match self {
            DegreeIndex::Sombor => "so",
            DegreeIndex::ReducedSombor => "sored",
            DegreeIndex::ShiftedSombor => "soshifted",
            DegreeIndex::FirstZagreb => "m1",
        }
    }
}

impl fmt::Display for DegreeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DegreeIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "so" | "sombor" => Ok(DegreeIndex::Sombor),
            "sored" | "so_red" | "reduced" => Ok(DegreeIndex::ReducedSombor),
            "soshifted" | "so_shifted" => Ok(DegreeIndex::ShiftedSombor),
            "m1" | "zagreb" => Ok(DegreeIndex::FirstZagreb),
            other => Err(Error::InvalidParameter(format!("unknown index `{other}`"))),
        }
    }
}
