//! Evaluation of every inequality and identity on individual graphs.
//!
//! Each check yields one or more [`BoundReport`]s. Slack is oriented so that
//! `slack ≥ −tolerance` means the bound holds; strict bounds additionally
//! require `slack > tolerance`. Equality is detected numerically and then
//! compared with the structural equality class the statement characterizes;
//! a disagreement is an anomaly.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{is_cycle, is_h_graph, is_path, is_star, is_star_plus_isolated};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::indices::{first_zagreb, reduced_sombor, sombor, sombor_shifted};
use crate::majorization::{dimitrov_ali_sequence, NonIncreasingSeq};

/// Relative tolerance for numeric equality: |slack| ≤ EQ_TOLERANCE · max(1, |rhs|).
pub const EQ_TOLERANCE: f64 = 1e-9;

/// Families of checks selectable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bound {
    SoShiftedUpper,
    SoRedUpper,
    TreeCorollary,
    DegreeSum,
    EpsilonIdentities,
    SoLower,
    SoRedLower,
    ZagrebSandwich,
    DegreeMajorization,
    HubDecomposition,
}

impl Bound {
    pub const ALL: [Bound; 10] = [
        Bound::SoShiftedUpper,
        Bound::SoRedUpper,
        Bound::TreeCorollary,
        Bound::DegreeSum,
        Bound::EpsilonIdentities,
        Bound::SoLower,
        Bound::SoRedLower,
        Bound::ZagrebSandwich,
        Bound::DegreeMajorization,
        Bound::HubDecomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Bound::SoShiftedUpper => "so-shifted-upper",
            Bound::SoRedUpper => "so-red-upper",
            Bound::TreeCorollary => "tree-corollary",
            Bound::DegreeSum => "degree-sum",
            Bound::EpsilonIdentities => "epsilon-identities",
            Bound::SoLower => "so-lower",
            Bound::SoRedLower => "so-red-lower",
            Bound::ZagrebSandwich => "zagreb-sandwich",
            Bound::DegreeMajorization => "degree-majorization",
            Bound::HubDecomposition => "hub-decomposition",
        }
    }

    pub fn check(self, g: &Graph) -> Vec<BoundReport> {
        match self {
            Bound::SoShiftedUpper => vec![check_so_shifted_upper(g)],
            Bound::SoRedUpper => vec![check_so_red_upper(g)],
            Bound::TreeCorollary => vec![check_tree_corollary(g)],
            Bound::DegreeSum => vec![check_degree_sum_bound(g)],
            Bound::EpsilonIdentities => check_epsilon_identities(g).to_vec(),
            Bound::SoLower => vec![check_so_lower_bound(g)],
            Bound::SoRedLower => vec![check_so_red_lower_bound(g)],
            Bound::ZagrebSandwich => check_zagreb_sandwich(g).to_vec(),
            Bound::DegreeMajorization => vec![check_degree_majorization(g)],
            Bound::HubDecomposition => vec![check_hub_decomposition(g)],
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Bound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Bound::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown bound `{s}`")))
    }
}

/// Parses `all` or a comma-separated list of bound names.
pub fn parse_bound_list(s: &str) -> Result<Vec<Bound>> {
    if s.trim() == "all" {
        return Ok(Bound::ALL.to_vec());
    }
    let mut out: Vec<Bound> = s
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Direction of an inequality between `lhs` and `rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// lhs ≤ rhs
    AtMost,
    /// lhs < rhs
    StrictlyBelow,
    /// lhs ≥ rhs
    AtLeast,
    /// lhs = rhs
    Identity,
}

/// One bound evaluated on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub bound_id: &'static str,
    pub graph6: String,
    pub orientation: Orientation,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    pub equality: bool,
    /// Whether the graph lies in the characterized equality class; `None`
    /// when the statement characterizes no class for this graph.
    pub in_class: Option<bool>,
    /// Numeric equality agrees with the structural class.
    pub class_match: bool,
    /// Hypothesis not met; the bound says nothing about this graph.
    pub vacuous: bool,
}

impl BoundReport {
    fn vacuous(bound_id: &'static str, g: &Graph, orientation: Orientation) -> Self {
        BoundReport {
            bound_id,
            graph6: encode_graph6(g),
            orientation,
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            holds: true,
            equality: false,
            in_class: None,
            class_match: true,
            vacuous: true,
        }
    }

    fn evaluate(
        bound_id: &'static str,
        g: &Graph,
        orientation: Orientation,
        lhs: f64,
        rhs: f64,
        in_class: Option<bool>,
    ) -> Self {
        let slack = match orientation {
            Orientation::AtMost | Orientation::StrictlyBelow => rhs - lhs,
            Orientation::AtLeast | Orientation::Identity => lhs - rhs,
        };
        let tol = EQ_TOLERANCE * rhs.abs().max(1.0);
        let equality = slack.abs() <= tol;
        let holds = match orientation {
            Orientation::AtMost | Orientation::AtLeast => slack >= -tol,
            Orientation::StrictlyBelow => slack > tol,
            Orientation::Identity => equality,
        };
        BoundReport {
            bound_id,
            graph6: encode_graph6(g),
            orientation,
            lhs,
            rhs,
            slack,
            holds,
            equality,
            in_class,
            class_match: in_class.is_none_or(|c| c == equality),
            vacuous: false,
        }
    }

    /// Numeric equality without structural match, or the reverse.
    pub fn is_anomaly(&self) -> bool {
        !self.class_match
    }

    pub fn is_violation(&self) -> bool {
        !self.holds
    }
}

// index functions only fail on the order-0 graph, which every check treats as vacuous
fn so(g: &Graph) -> f64 {
    sombor(g).expect("non-empty graph")
}

fn m1(g: &Graph) -> f64 {
    first_zagreb(g).expect("non-empty graph") as f64
}

/// SO‡(G) ≤ m√((m+1)² + 4); for m ≤ n − 1 equality iff G ≅ S_{m+1} ∪ (n−m−1)K_1.
pub fn check_so_shifted_upper(g: &Graph) -> BoundReport {
    const ID: &str = "so-shifted-upper";
    if g.order() == 0 {
        return BoundReport::vacuous(ID, g, Orientation::AtMost);
    }
    let m = g.size() as f64;
    let rhs = m * ((m + 1.0).powi(2) + 4.0).sqrt();
    let lhs = sombor_shifted(g).expect("non-empty graph");
    let in_class = g.size() < g.order() && is_star_plus_isolated(g);
    BoundReport::evaluate(ID, g, Orientation::AtMost, lhs, rhs, Some(in_class))
}

/// SO_red(G) ≤ m(m − 1), equality iff G ≅ S_{m+1} ∪ (n−m−1)K_1.
pub fn check_so_red_upper(g: &Graph) -> BoundReport {
    const ID: &str = "so-red-upper";
    if g.order() == 0 {
        return BoundReport::vacuous(ID, g, Orientation::AtMost);
    }
    let m = g.size() as f64;
    let lhs = reduced_sombor(g).expect("non-empty graph");
    BoundReport::evaluate(
        ID,
        g,
        Orientation::AtMost,
        lhs,
        m * (m - 1.0),
        Some(is_star_plus_isolated(g)),
    )
}

/// For a tree T, SO_red(T) ≤ (n−1)(n−2), equality iff T ≅ S_n.
pub fn check_tree_corollary(t: &Graph) -> BoundReport {
    const ID: &str = "tree-corollary";
    if !t.is_connected() || t.size() + 1 != t.order() {
        return BoundReport::vacuous(ID, t, Orientation::AtMost);
    }
    let n = t.order() as f64;
    let lhs = reduced_sombor(t).expect("non-empty graph");
    BoundReport::evaluate(
        ID,
        t,
        Orientation::AtMost,
        lhs,
        (n - 1.0) * (n - 2.0),
        Some(is_star(t)),
    )
}

/// Σ_{v ≠ v₁} √((n−1)² + d(v)²) over all vertices but one dominating vertex,
/// against its value on H_{n,ν}; equality iff G ≅ H_{n,ν}.
pub fn check_degree_sum_bound(g: &Graph) -> BoundReport {
    const ID: &str = "degree-sum";
    let n = g.order();
    let Some(hub) = g.dominating_vertex().filter(|_| g.is_connected() && n >= 2) else {
        return BoundReport::vacuous(ID, g, Orientation::AtMost);
    };
    let nu = g.cyclomatic_number();
    if nu + 2 > n {
        return BoundReport::vacuous(ID, g, Orientation::AtMost);
    }
    let sq = ((n - 1) * (n - 1)) as f64;
    let lhs: f64 = (0..n)
        .filter(|&v| v != hub)
        .map(|v| (sq + (g.degree(v) * g.degree(v)) as f64).sqrt())
        .sum();
    let (nf, v) = (n as f64, nu as f64);
    let rhs = (nf - v - 2.0) * (sq + 1.0).sqrt()
        + v * (sq + 4.0).sqrt()
        + (sq + (v + 1.0).powi(2)).sqrt();
    BoundReport::evaluate(ID, g, Orientation::AtMost, lhs, rhs, Some(is_h_graph(g)))
}

/// For ε₀ = 0: ε₁ = 4m − M₁ + Σ_{i≥3} ε_i(i−2) and ε₂ = M₁ − 3m − Σ_{i≥3} ε_i(i−1),
/// checked in exact integer arithmetic.
pub fn check_epsilon_identities(g: &Graph) -> [BoundReport; 2] {
    const ID1: &str = "epsilon-1-identity";
    const ID2: &str = "epsilon-2-identity";
    let stats = g.edge_stats();
    if g.order() == 0 || stats.epsilon(0) != 0 {
        return [
            BoundReport::vacuous(ID1, g, Orientation::Identity),
            BoundReport::vacuous(ID2, g, Orientation::Identity),
        ];
    }
    let m = g.size() as i64;
    let zagreb = first_zagreb(g).expect("non-empty graph") as i64;
    let high = stats.epsilon.iter().filter(|(&i, _)| i >= 3);
    let s2: i64 = high.clone().map(|(&i, &e)| e as i64 * (i as i64 - 2)).sum();
    let s1: i64 = high.map(|(&i, &e)| e as i64 * (i as i64 - 1)).sum();
    let eps1 = 4 * m - zagreb + s2;
    let eps2 = zagreb - 3 * m - s1;
    let exact = |id: &'static str, actual: i64, formula: i64| {
        let mut r = BoundReport::evaluate(
            id,
            g,
            Orientation::Identity,
            actual as f64,
            formula as f64,
            None,
        );
        r.holds = actual == formula;
        r.equality = r.holds;
        r
    };
    [
        exact(ID1, stats.epsilon(1) as i64, eps1),
        exact(ID2, stats.epsilon(2) as i64, eps2),
    ]
}

/// Hypothesis shared by both M₁-based lower bounds: no isolated edges, at
/// least one edge. Isolated vertices are allowed.
fn lower_bound_hypothesis(g: &Graph) -> bool {
    g.order() > 0 && g.size() > 0 && g.isolated_edges() == 0
}

/// The P_n / C_n characterization is applied to connected graphs only.
fn path_or_cycle_class(g: &Graph) -> Option<bool> {
    g.is_connected().then(|| is_path(g) || is_cycle(g))
}

/// SO(G) ≥ ⅓(2√2 − √5)(3M₁ − 4m + 2√10·m) for ε₀ = 0.
pub fn check_so_lower_bound(g: &Graph) -> BoundReport {
    const ID: &str = "so-lower";
    if !lower_bound_hypothesis(g) {
        return BoundReport::vacuous(ID, g, Orientation::AtLeast);
    }
    BoundReport::evaluate(
        ID,
        g,
        Orientation::AtLeast,
        so(g),
        so_lower_rhs(m1(g), g.size() as f64),
        path_or_cycle_class(g),
    )
}

/// SO_red(G) ≥ (√2 − 1)(M₁ − 2m + √2·m) for ε₀ = 0.
pub fn check_so_red_lower_bound(g: &Graph) -> BoundReport {
    const ID: &str = "so-red-lower";
    if !lower_bound_hypothesis(g) {
        return BoundReport::vacuous(ID, g, Orientation::AtLeast);
    }
    let lhs = reduced_sombor(g).expect("non-empty graph");
    BoundReport::evaluate(
        ID,
        g,
        Orientation::AtLeast,
        lhs,
        so_red_lower_rhs(m1(g), g.size() as f64),
        path_or_cycle_class(g),
    )
}

/// ⅓(2√2 − √5)(3M₁ − 4m + 2√5√2·m).
pub fn so_lower_rhs(m1: f64, m: f64) -> f64 {
    let (r2, r5) = (2f64.sqrt(), 5f64.sqrt());
    (2.0 * r2 - r5) * (3.0 * m1 - 4.0 * m + 2.0 * r5 * r2 * m) / 3.0
}

/// (√2 − 1)(M₁ − 2m + √2·m).
pub fn so_red_lower_rhs(m1: f64, m: f64) -> f64 {
    let r2 = 2f64.sqrt();
    (r2 - 1.0) * (m1 - 2.0 * m + r2 * m)
}

/// Every edge joins two vertices of equal degree (each non-trivial component is regular).
fn degree_balanced(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.degree(u) == g.degree(v))
}

/// Every edge has an endpoint of degree 1 (a disjoint union of stars and isolated vertices).
fn every_edge_pendant(g: &Graph) -> bool {
    g.edges().all(|(u, v)| g.degree(u) == 1 || g.degree(v) == 1)
}

/// M₁ > SO ≥ M₁/√2 and M₁ − 2m ≥ SO_red ≥ (M₁ − 2m)/√2.
///
/// The strict upper comparison for SO_red is required exactly when some edge
/// has both endpoint degrees ≥ 2; when every edge is pendant the two sides
/// coincide, so that case is checked as a non-strict bound with equality.
pub fn check_zagreb_sandwich(g: &Graph) -> [BoundReport; 4] {
    const IDS: [&str; 4] = [
        "zagreb-so-upper",
        "zagreb-so-lower",
        "zagreb-sored-upper",
        "zagreb-sored-lower",
    ];
    if g.order() == 0 || g.size() == 0 {
        return [
            BoundReport::vacuous(IDS[0], g, Orientation::StrictlyBelow),
            BoundReport::vacuous(IDS[1], g, Orientation::AtLeast),
            BoundReport::vacuous(IDS[2], g, Orientation::StrictlyBelow),
            BoundReport::vacuous(IDS[3], g, Orientation::AtLeast),
        ];
    }
    let (zagreb, s) = (m1(g), so(g));
    let shifted = zagreb - 2.0 * g.size() as f64;
    let red = reduced_sombor(g).expect("non-empty graph");
    let r2 = 2f64.sqrt();
    let balanced = degree_balanced(g);
    let pendant = every_edge_pendant(g);
    let red_upper = if pendant {
        BoundReport::evaluate(IDS[2], g, Orientation::AtMost, red, shifted, Some(true))
    } else {
        BoundReport::evaluate(IDS[2], g, Orientation::StrictlyBelow, red, shifted, None)
    };
    [
        BoundReport::evaluate(IDS[0], g, Orientation::StrictlyBelow, s, zagreb, None),
        BoundReport::evaluate(
            IDS[1],
            g,
            Orientation::AtLeast,
            s,
            zagreb / r2,
            Some(balanced),
        ),
        red_upper,
        BoundReport::evaluate(
            IDS[3],
            g,
            Orientation::AtLeast,
            red,
            shifted / r2,
            Some(balanced),
        ),
    ]
}

/// With a dominating vertex and ν ≤ n − 2, the degree sequence is majorized
/// by (n−1, ν+1, 2^ν, 1^{n−ν−2}). `lhs` is the largest prefix-sum excess,
/// which must be ≤ 0; equality means the two sequences coincide.
pub fn check_degree_majorization(g: &Graph) -> BoundReport {
    const ID: &str = "degree-majorization";
    let n = g.order();
    if n < 2
        || !g.is_connected()
        || g.dominating_vertex().is_none()
        || g.cyclomatic_number() + 2 > n
    {
        return BoundReport::vacuous(ID, g, Orientation::AtMost);
    }
    let actual = NonIncreasingSeq::from(&g.degree_sequence());
    let dominant = dimitrov_ali_sequence(n, g.cyclomatic_number()).expect("range checked");
    let (mut pa, mut pd, mut excess) = (0.0, 0.0, f64::NEG_INFINITY);
    for k in 0..n - 1 {
        pa += actual.values()[k];
        pd += dominant.values()[k];
        excess = f64::max(excess, pa - pd);
    }
    let mut r = BoundReport::evaluate(ID, g, Orientation::AtMost, excess, 0.0, Some(is_h_graph(g)));
    r.equality = actual == dominant;
    r.class_match = r.in_class == Some(r.equality);
    r
}

/// SO(G) = Σ_{v≠u} √((n−1)² + d(v)²) + SO‡(G − u) for a dominating vertex u.
pub fn check_hub_decomposition(g: &Graph) -> BoundReport {
    const ID: &str = "hub-decomposition";
    let Some(hub) = g.dominating_vertex().filter(|_| g.order() >= 2) else {
        return BoundReport::vacuous(ID, g, Orientation::Identity);
    };
    let n = g.order();
    let sq = ((n - 1) * (n - 1)) as f64;
    let spokes: f64 = (0..n)
        .filter(|&v| v != hub)
        .map(|v| (sq + (g.degree(v) * g.degree(v)) as f64).sqrt())
        .sum();
    let rest = g.delete_vertex(hub).expect("hub in range");
    let rhs = spokes + sombor_shifted(&rest).expect("n >= 2");
    BoundReport::evaluate(ID, g, Orientation::Identity, so(g), rhs, None)
}

/// Counts over a batch of reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub reports: usize,
    pub holds: usize,
    pub equality: usize,
    pub vacuous: usize,
    pub violations: usize,
    pub anomalies: usize,
}

impl SuiteSummary {
    pub fn add(&mut self, r: &BoundReport) {
        self.reports += 1;
        self.holds += (r.holds && !r.vacuous) as usize;
        self.equality += r.equality as usize;
        self.vacuous += r.vacuous as usize;
        self.violations += r.is_violation() as usize;
        self.anomalies += r.is_anomaly() as usize;
    }

    pub fn merge(mut self, other: SuiteSummary) -> SuiteSummary {
        self.reports += other.reports;
        self.holds += other.holds;
        self.equality += other.equality;
        self.vacuous += other.vacuous;
        self.violations += other.violations;
        self.anomalies += other.anomalies;
        self
    }

    pub fn is_clean(&self) -> bool {
        self.violations == 0 && self.anomalies == 0
    }
}

#[derive(Debug, Clone, Default)]
pub struct SuiteResult {
    /// Reports in input order, bounds in selection order within each graph.
    pub reports: Vec<BoundReport>,
    pub summary: SuiteSummary,
}

impl SuiteResult {
    pub fn violations(&self) -> impl Iterator<Item = &BoundReport> {
        self.reports.iter().filter(|r| r.is_violation())
    }

    pub fn anomalies(&self) -> impl Iterator<Item = &BoundReport> {
        self.reports.iter().filter(|r| r.is_anomaly())
    }
}

/// Runs `bounds` on every graph of `universe` in parallel; output order is
/// deterministic.
pub fn run_suite<I>(universe: I, bounds: &[Bound]) -> SuiteResult
where
    I: IntoIterator<Item = Graph>,
{
    let graphs: Vec<Graph> = universe.into_iter().collect();
    let per_graph: Vec<Vec<BoundReport>> = graphs
        .par_iter()
        .map(|g| bounds.iter().flat_map(|b| b.check(g)).collect())
        .collect();
    let reports: Vec<BoundReport> = per_graph.into_iter().flatten().collect();
    let summary = reports.iter().fold(SuiteSummary::default(), |mut s, r| {
        s.add(r);
        s
    });
    SuiteResult { reports, summary }
}
