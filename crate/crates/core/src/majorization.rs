//! The majorization order on non-increasing sequences with a fixed sum, and
//! the convex-function comparison it implies.

use crate::error::{Error, Result};
use crate::graph::DegreeSequence;

/// Absolute tolerance for sum equality and prefix-sum comparisons.
pub const SUM_TOLERANCE: f64 = 1e-12;

/// Slack allowed in Σf(c) ≤ Σf(d).
pub const KARAMATA_TOLERANCE: f64 = 1e-9;

/// A non-increasing real sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct NonIncreasingSeq(Vec<f64>);

impl NonIncreasingSeq {
    /// Fails unless `values` is already sorted non-increasingly.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::InvalidParameter("NaN in sequence".into()));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameter(
                "sequence is not non-increasing".into(),
            ));
        }
        Ok(NonIncreasingSeq(values))
    }

    /// Sorts `values` non-increasingly first.
    pub fn sorted(mut values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|v| v.is_nan()) {
            return Err(Error::InvalidParameter("NaN in sequence".into()));
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Ok(NonIncreasingSeq(values))
    }

    pub fn from_integers(values: &[usize]) -> Result<Self> {
        NonIncreasingSeq::new(values.iter().map(|&v| v as f64).collect())
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.0.iter().sum()
    }

    /// Drops the first `k` entries (the result stays non-increasing).
    pub fn tail(&self, k: usize) -> NonIncreasingSeq {
        NonIncreasingSeq(self.0[k.min(self.0.len())..].to_vec())
    }
}

impl From<&DegreeSequence> for NonIncreasingSeq {
    fn from(d: &DegreeSequence) -> Self {
        NonIncreasingSeq(d.as_slice().iter().map(|&v| v as f64).collect())
    }
}

/// Outcome of comparing two sequences of equal length and sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Majorization {
    /// Every prefix sum agrees.
    Equal,
    /// c ≺ d: c is majorized by d, with some prefix strictly smaller.
    Majorized,
    /// d ≺ c.
    Majorizes,
    Incomparable,
}

impl Majorization {
    /// True for c ⪯ d (Equal or Majorized).
    pub fn is_below_or_equal(self) -> bool {
        matches!(self, Majorization::Equal | Majorization::Majorized)
    }
}

/// Compares c and d in (Γ(s, n), ⪯) via prefix sums k = 1..n−1.
pub fn majorizes(c: &NonIncreasingSeq, d: &NonIncreasingSeq) -> Result<Majorization> {
    if c.len() != d.len() {
        return Err(Error::LengthMismatch(c.len(), d.len()));
    }
    let (sc, sd) = (c.sum(), d.sum());
    if (sc - sd).abs() > SUM_TOLERANCE {
        return Err(Error::SumMismatch(sc, sd));
    }
    let (mut below, mut above) = (false, false);
    let (mut pc, mut pd) = (0.0, 0.0);
    for k in 0..c.len().saturating_sub(1) {
        pc += c.0[k];
        pd += d.0[k];
        if pc < pd - SUM_TOLERANCE {
            below = true;
        } else if pc > pd + SUM_TOLERANCE {
            above = true;
        }
    }
    Ok(match (below, above) {
        (false, false) => Majorization::Equal,
        (true, false) => Majorization::Majorized,
        (false, true) => Majorization::Majorizes,
        (true, true) => Majorization::Incomparable,
    })
}

/// Σf(c) against Σf(d) for c ⪯ d.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KaramataReport {
    pub ordering: Majorization,
    pub lhs: f64,
    pub rhs: f64,
    /// c ≺ d and f strictly convex, so Σf(c) < Σf(d) is required.
    pub strict_expected: bool,
    pub holds: bool,
}

/// Evaluates both sides of Karamata's inequality. Fails with
/// [`Error::NotComparable`] unless c ⪯ d.
pub fn karamata_compare<F>(
    c: &NonIncreasingSeq,
    d: &NonIncreasingSeq,
    f: F,
    strictly_convex: bool,
) -> Result<KaramataReport>
where
    F: Fn(f64) -> f64,
{
    let ordering = majorizes(c, d)?;
    if !ordering.is_below_or_equal() {
        return Err(Error::NotComparable);
    }
    let lhs: f64 = c.0.iter().map(|&x| f(x)).sum();
    let rhs: f64 = d.0.iter().map(|&x| f(x)).sum();
    let strict_expected = strictly_convex && ordering == Majorization::Majorized;
    let holds = lhs <= rhs + KARAMATA_TOLERANCE && (!strict_expected || lhs < rhs);
    Ok(KaramataReport {
        ordering,
        lhs,
        rhs,
        strict_expected,
        holds,
    })
}

/// (n−1, ν+1, 2^ν, 1^{n−ν−2}): the degree sequence that dominates every
/// connected n-vertex graph with cyclomatic number ν and a dominating vertex.
pub fn dimitrov_ali_sequence(n: usize, nu: usize) -> Result<NonIncreasingSeq> {
    if n < 2 || nu + 2 > n {
        return Err(Error::InvalidParameter(format!(
            "dominating sequence needs n >= 2 and 0 <= nu <= n - 2, got n = {n}, nu = {nu}"
        )));
    }
    let mut v = Vec::with_capacity(n);
    v.push((n - 1) as f64);
    v.push((nu + 1) as f64);
    v.extend(std::iter::repeat_n(2.0, nu));
    v.extend(std::iter::repeat_n(1.0, n - nu - 2));
    NonIncreasingSeq::new(v)
}
