//! CSV rendering for index tables, extremal reports, and bound reports.
//!
//! Reals are printed with 12 significant digits and a '.' decimal separator.

use crate::enumerate::ExtremalReport;
use crate::graph6::encode_graph6;
use crate::verify::{BoundReport, SuiteSummary};

pub const COMPUTE_HEADER: &str = "graph6,n,m,nu,SO,SO_red,SO_shifted,M1";
pub const EXTREMAL_HEADER: &str = "n,nu,universe_size,max_value,unique,gap,maximizer_graph6";
pub const BOUND_HEADER: &str = "bound_id,graph6,lhs,rhs,slack,holds,equality,class_match,vacuous";
pub const SUMMARY_HEADER: &str = "summary,reports,holds,equality,vacuous,violations,anomalies";

/// Formats `x` with 12 significant digits; non-finite values print as `inf`, `-inf`, `nan`.
pub fn format_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn extremal_row(r: &ExtremalReport) -> String {
    let maximizers: Vec<String> = r.maximizers.iter().map(encode_graph6).collect();
    format!(
        "{},{},{},{},{},{},{}",
        r.n,
        r.nu,
        r.universe_size,
        format_real(r.max_value),
        r.unique,
        format_real(r.runner_up_gap),
        maximizers.join(";")
    )
}

pub fn bound_row(r: &BoundReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        r.bound_id,
        r.graph6,
        format_real(r.lhs),
        format_real(r.rhs),
        format_real(r.slack),
        r.holds,
        r.equality,
        r.class_match,
        r.vacuous
    )
}

pub fn summary_row(s: &SuiteSummary) -> String {
    format!(
        "total,{},{},{},{},{},{}",
        s.reports, s.holds, s.equality, s.vacuous, s.violations, s.anomalies
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_real(25.278480086544796), "25.2784800865");
        assert_eq!(format_real(0.5), "0.500000000000");
        assert_eq!(format_real(1234.0), "1234.00000000");
        assert_eq!(format_real(-2.0), "-2.00000000000");
        assert_eq!(format_real(0.0), "0");
        assert_eq!(format_real(f64::INFINITY), "inf");
        assert_eq!(format_real(f64::NAN), "nan");
    }
}
