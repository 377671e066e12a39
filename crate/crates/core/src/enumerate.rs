//! Isomorph-free generation of graphs by order and size, and exhaustive
//! extremal search over the resulting universes.
//!
//! Classes with m + 1 edges are produced from the classes with m edges by
//! adding every missing edge and keeping the canonical forms. Each worker
//! scans a contiguous block of parent classes into its own set; the sets are
//! merged and sorted, so the output never depends on the worker count.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};

use crate::canon::{
    canonical_form, canonical_small, small_is_connected, CanonicalForm, SmallGraph,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the generators.
pub const MAX_ENUM_ORDER: usize = 9;
/// Largest order for an unrestricted extremal sweep.
pub const MAX_EXTREMAL_ORDER: usize = 8;
/// At `MAX_ENUM_ORDER` the extremal search is limited to ν ≤ this.
pub const MAX_NU_AT_ORDER_9: usize = 2;

/// Two index values closer than this (relative to max(1, |value|)) are treated as tied.
pub const TIE_TOLERANCE: f64 = 1e-9;
/// A unique maximizer must beat the runner-up by more than this.
pub const MIN_UNIQUE_GAP: f64 = 1e-6;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::ScopeCap(format!(
            "enumeration is limited to n <= {MAX_ENUM_ORDER}, got n = {n}"
        )));
    }
    Ok(())
}

fn slots(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Generator bound to a worker pool.
#[derive(Clone, Default)]
pub struct Enumerator {
    pool: Option<Arc<ThreadPool>>,
}

impl Enumerator {
    /// Uses `workers` threads (≥ 1).
    pub fn new(workers: usize) -> Result<Self> {
        if workers == 0 {
            return Err(Error::InvalidParameter("workers must be >= 1".into()));
        }
        let pool = ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
        Ok(Enumerator {
            pool: Some(Arc::new(pool)),
        })
    }

    fn run<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        match &self.pool {
            Some(pool) => pool.install(f),
            None => f(),
        }
    }

    /// Canonical forms of every class with n vertices, grouped by edge count
    /// 0..=max_m. Each level is sorted ascending.
    pub fn levels(&self, n: usize, max_m: usize) -> Result<Vec<Vec<CanonicalForm>>> {
        check_order(n)?;
        let max_m = max_m.min(slots(n));
        let mut levels = vec![vec![canonical_small(&SmallGraph::empty(n))]];
        while levels.len() <= max_m {
            let parents = levels.last().expect("level 0 exists");
            let next = self.run(|| extend_level(n, parents));
            levels.push(next);
        }
        Ok(levels)
    }

    /// Every class at every size for order n.
    pub fn all_levels(&self, n: usize) -> Result<Vec<Vec<CanonicalForm>>> {
        self.levels(n, slots(n))
    }

    /// Canonical forms of the (n, m) classes, optionally only connected ones.
    pub fn classes(
        &self,
        n: usize,
        m: usize,
        allow_disconnected: bool,
    ) -> Result<Vec<CanonicalForm>> {
        check_order(n)?;
        if m > slots(n) {
            return Err(Error::InvalidParameter(format!(
                "m = {m} exceeds n(n-1)/2 = {}",
                slots(n)
            )));
        }
        let mut level = self.levels(n, m)?.pop().expect("non-empty levels");
        if !allow_disconnected {
            level.retain(|c| small_is_connected(&SmallGraph::from_code(n, c.bits())));
        }
        Ok(level)
    }

    /// One representative per class of (n, m)-graphs, ascending canonical order.
    pub fn all_graphs(&self, n: usize, m: usize, allow_disconnected: bool) -> Result<Vec<Graph>> {
        Ok(self
            .classes(n, m, allow_disconnected)?
            .iter()
            .map(CanonicalForm::to_graph)
            .collect())
    }

    pub fn connected_graphs(&self, n: usize, m: usize) -> Result<Vec<Graph>> {
        self.all_graphs(n, m, false)
    }

    /// Exhaustive maximization of `index` over connected n-vertex graphs with
    /// cyclomatic number ν, i.e. m = n − 1 + ν.
    pub fn extremal_search<F>(&self, n: usize, nu: usize, index: F) -> Result<ExtremalReport>
    where
        F: Fn(&Graph) -> f64 + Sync,
    {
        if n > MAX_EXTREMAL_ORDER && !(n == MAX_ENUM_ORDER && nu <= MAX_NU_AT_ORDER_9) {
            return Err(Error::ScopeCap(format!(
                "extremal search covers n <= {MAX_EXTREMAL_ORDER}, or n = {MAX_ENUM_ORDER} with nu <= {MAX_NU_AT_ORDER_9}; got n = {n}, nu = {nu}"
            )));
        }
        if n < 2 || nu + 2 > n {
            return Err(Error::InvalidParameter(format!(
                "need n >= 2 and 0 <= nu <= n - 2, got n = {n}, nu = {nu}"
            )));
        }
        let m = n - 1 + nu;
        let universe = self.classes(n, m, false)?;
        if universe.is_empty() {
            return Err(Error::EmptyUniverse { n, m });
        }
        let scored: Vec<(CanonicalForm, f64)> = self.run(|| {
            universe
                .par_iter()
                .map(|c| (*c, index(&c.to_graph())))
                .collect()
        });
        ExtremalReport::from_scores(n, nu, scored)
    }
}

fn extend_level(n: usize, parents: &[CanonicalForm]) -> Vec<CanonicalForm> {
    let merged = parents
        .par_iter()
        .fold(HashSet::new, |mut set, parent| {
            let g = SmallGraph::from_code(n, parent.bits());
            for j in 1..n {
                for i in 0..j {
                    if !g.has_edge(i, j) {
                        let mut child = g;
                        child.add_edge(i, j);
                        set.insert(canonical_small(&child));
                    }
                }
            }
            set
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let mut out: Vec<_> = merged.into_iter().collect();
    out.sort_unstable();
    out
}

/// Result of an exhaustive maximization over one (n, ν) universe.
#[derive(Debug, Clone)]
pub struct ExtremalReport {
    pub n: usize,
    pub nu: usize,
    /// Number of isomorphism classes searched.
    pub universe_size: usize,
    pub max_value: f64,
    /// Classes within [`TIE_TOLERANCE`] of the maximum, ascending canonical order.
    pub maximizers: Vec<Graph>,
    /// max_value minus the best value outside the maximizer set; infinite
    /// when the universe has a single class.
    pub runner_up_gap: f64,
    pub unique: bool,
    /// Smallest Δ among the maximizers.
    pub max_degree_all_maximizers: usize,
}

impl ExtremalReport {
    fn from_scores(n: usize, nu: usize, scored: Vec<(CanonicalForm, f64)>) -> Result<Self> {
        let max_value = scored.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max);
        let tol = TIE_TOLERANCE * max_value.abs().max(1.0);
        let (top, rest): (Vec<&(CanonicalForm, f64)>, Vec<_>) =
            scored.iter().partition(|s| s.1 >= max_value - tol);
        let runner_up = rest.iter().map(|s| s.1).fold(f64::NEG_INFINITY, f64::max);
        let runner_up_gap = max_value - runner_up;
        let maximizers: Vec<Graph> = top.iter().map(|s| s.0.to_graph()).collect();
        let unique = maximizers.len() == 1;
        if unique && runner_up_gap <= MIN_UNIQUE_GAP {
            return Err(Error::AmbiguousMaximum {
                n,
                nu,
                gap: runner_up_gap,
            });
        }
        let max_degree_all_maximizers = maximizers
            .iter()
            .map(|g| g.max_degree().unwrap_or(0))
            .min()
            .unwrap_or(0);
        Ok(ExtremalReport {
            n,
            nu,
            universe_size: scored.len(),
            max_value,
            maximizers,
            runner_up_gap,
            unique,
            max_degree_all_maximizers,
        })
    }

    /// True iff the maximizer is unique and isomorphic to `expected`.
    pub fn uniquely_attained_by(&self, expected: &Graph) -> Result<bool> {
        if !self.unique {
            return Ok(false);
        }
        Ok(canonical_form(&self.maximizers[0])? == canonical_form(expected)?)
    }
}

/// [`Enumerator::connected_graphs`] on the global pool.
pub fn connected_graphs(n: usize, m: usize) -> Result<Vec<Graph>> {
    Enumerator::default().connected_graphs(n, m)
}

/// [`Enumerator::all_graphs`] on the global pool.
pub fn all_graphs(n: usize, m: usize, allow_disconnected: bool) -> Result<Vec<Graph>> {
    Enumerator::default().all_graphs(n, m, allow_disconnected)
}

/// [`Enumerator::extremal_search`] on the global pool.
pub fn extremal_search<F>(n: usize, nu: usize, index: F) -> Result<ExtremalReport>
where
    F: Fn(&Graph) -> f64 + Sync,
{
    Enumerator::default().extremal_search(n, nu, index)
}
