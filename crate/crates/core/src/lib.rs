//! Degree-based topological indices (Sombor, reduced Sombor, shifted Sombor,
//! first Zagreb), the extremal graph families they are studied on, and an
//! exhaustive verifier for the bounds and extremal results relating them.
//!
//! The enumeration core generates one representative per isomorphism class
//! of graphs with up to nine vertices; every bound check runs over those
//! universes.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod majorization;
pub mod report;
pub mod verify;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, MAX_CANON_ORDER};
pub use enumerate::{all_graphs, connected_graphs, extremal_search, Enumerator, ExtremalReport};
pub use error::{Error, Result};
pub use families::{
    complete, cycle, empty, h_graph, path, so_h_closed_form, so_red_h_closed_form, star,
    star_plus_isolated, FamilySpec,
};
pub use graph::{DegreeSequence, EdgeStats, Graph};
pub use graph6::{encode_graph6, parse_graph6};
pub use indices::{
    evaluate_generic, first_zagreb, reduced_sombor, sombor, sombor_shifted, DegreeIndex,
};
pub use majorization::{
    dimitrov_ali_sequence, karamata_compare, majorizes, KaramataReport, Majorization,
    NonIncreasingSeq,
};
pub use verify::{run_suite, Bound, BoundReport, SuiteResult, SuiteSummary};
