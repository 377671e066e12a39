//! Named graph families and the closed-form extremal values for H_{n,ν}.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// H_{n,ν}: the star S_n plus ν edges from one fixed pendant to ν other pendants.
///
/// Labels: 0 is the hub, 1 the fixed pendant, 2..=ν+1 the pendants joined to
/// it, and the remaining vertices are leaves of the hub.
pub fn h_graph(n: usize, nu: usize) -> Result<Graph> {
    check_h_range(n, nu)?;
    let mut g = star(n)?;
    for v in 2..nu + 2 {
        g.insert_edge(1, v)?;
    }
    Ok(g)
}

fn check_h_range(n: usize, nu: usize) -> Result<()> {
    if n < 2 || nu + 2 > n {
        return Err(invalid(format!(
            "H(n, nu) needs n >= 2 and 0 <= nu <= n - 2, got n = {n}, nu = {nu}"
        )));
    }
    Ok(())
}

/// S_n: one hub (vertex 0) adjacent to n − 1 leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

pub fn empty(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n))
}

/// S_{m+1} ∪ (n−m−1)K_1: a star with m edges on vertices 0..=m, the rest isolated.
pub fn star_plus_isolated(m: usize, n: usize) -> Result<Graph> {
    if m + 1 > n {
        return Err(invalid(format!(
            "star_plus_isolated needs m <= n - 1, got m = {m}, n = {n}"
        )));
    }
    let edges: Vec<_> = (1..=m).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Closed-form SO(H_{n,ν}).
pub fn so_h_closed_form(n: usize, nu: usize) -> Result<f64> {
    check_h_range(n, nu)?;
    let hub = ((n - 1) * (n - 1)) as f64;
    let (nf, v) = (n as f64, nu as f64);
    let leaves = nf - v - 2.0;
    Ok(leaves * (hub + 1.0).sqrt()
        + v * (hub + 4.0).sqrt()
        + (hub + (v + 1.0).powi(2)).sqrt()
        + v * ((v + 1.0).powi(2) + 4.0).sqrt())
}

/// Closed-form SO_red(H_{n,ν}).
pub fn so_red_h_closed_form(n: usize, nu: usize) -> Result<f64> {
    check_h_range(n, nu)?;
    let (nf, v) = (n as f64, nu as f64);
    let hub = (nf - 2.0).powi(2);
    Ok((nf - v - 2.0) * (nf - 2.0)
        + v * (hub + 1.0).sqrt()
        + v * (v * v + 1.0).sqrt()
        + (hub + v * v).sqrt())
}

/// True iff every edge shares one common endpoint, i.e. `g ≅ S_{m+1} ∪ (n−m−1)K_1`.
pub fn is_star_plus_isolated(g: &Graph) -> bool {
    let m = g.size();
    m <= 1 || (0..g.order()).any(|v| g.degree(v) == m)
}

/// `g ≅ S_n`.
pub fn is_star(g: &Graph) -> bool {
    g.is_connected() && is_star_plus_isolated(g)
}

/// `g ≅ P_n`.
pub fn is_path(g: &Graph) -> bool {
    g.is_connected() && g.size() + 1 == g.order() && (0..g.order()).all(|v| g.degree(v) <= 2)
}

/// `g ≅ C_n`.
pub fn is_cycle(g: &Graph) -> bool {
    g.order() >= 3 && g.is_connected() && (0..g.order()).all(|v| g.degree(v) == 2)
}

/// `g ≅ H_{n,ν}` for ν = m − n + 1: connected, with a dominating vertex whose
/// removal leaves a star plus isolated vertices.
pub fn is_h_graph(g: &Graph) -> bool {
    if !g.is_connected() || g.order() < 2 {
        return false;
    }
    match g.dominating_vertex() {
        Some(u) => g
            .delete_vertex(u)
            .map(|rest| is_star_plus_isolated(&rest))
            .unwrap_or(false),
        None => false,
    }
}

/// A family name plus its parameters, as exposed by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    Empty(usize),
    HGraph { n: usize, nu: usize },
    StarPlusIsolated { m: usize, n: usize },
}

impl FamilySpec {
    /// Parses a family name followed by its integer parameters,
    /// e.g. `("h_graph", [5, 2])`.
    pub fn from_parts(kind: &str, params: &[usize]) -> Result<Self> {
        let arity = |k: usize| -> Result<()> {
            if params.len() != k {
                return Err(invalid(format!(
                    "family `{kind}` takes {k} parameter(s), got {}",
                    params.len()
                )));
            }
            Ok(())
        };
        let spec = match kind.to_ascii_lowercase().replace('-', "_").as_str() {
            "path" => {
                arity(1)?;
                FamilySpec::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(params[0])
            }
            "star" => {
                arity(1)?;
                FamilySpec::Star(params[0])
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(params[0])
            }
            "empty" => {
                arity(1)?;
                FamilySpec::Empty(params[0])
            }
            "h_graph" | "h" => {
                arity(2)?;
                FamilySpec::HGraph {
                    n: params[0],
                    nu: params[1],
                }
            }
            "star_plus_isolated" => {
                arity(2)?;
                FamilySpec::StarPlusIsolated {
                    m: params[0],
                    n: params[1],
                }
            }
            other => return Err(invalid(format!("unknown family `{other}`"))),
        };
        Ok(spec)
    }

    pub fn build(self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Star(n) => star(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Empty(n) => empty(n),
            FamilySpec::HGraph { n, nu } => h_graph(n, nu),
            FamilySpec::StarPlusIsolated { m, n } => star_plus_isolated(m, n),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Star(n) => write!(f, "star {n}"),
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::Empty(n) => write!(f, "empty {n}"),
            FamilySpec::HGraph { n, nu } => write!(f, "h_graph {n} {nu}"),
            FamilySpec::StarPlusIsolated { m, n } => write!(f, "star_plus_isolated {m} {n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `"h_graph 5 2"`, `"star 4"`, ...
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let kind = parts
            .next()
            .ok_or_else(|| invalid("empty family description".into()))?;
        let params = parts
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| invalid(format!("bad family parameter `{p}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::from_parts(kind, &params)
    }
}
