//! Fixtures shared by the criterion benchmarks in `benches/`.

use sombor_core::{Enumerator, Graph};

/// Every class of order `n`, as labeled graphs.
pub fn corpus(n: usize) -> Vec<Graph> {
    Enumerator::default()
        .all_levels(n)
        .expect("order within the enumeration cap")
        .into_iter()
        .flatten()
        .map(|c| c.to_graph())
        .collect()
}

/// Relabels `g` by the fixed permutation v -> (3v + 1) mod n, so canonical
/// forms in benchmarks start from a non-canonical labeling.
pub fn scrambled(g: &Graph) -> Graph {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).map(|v| (3 * v + 1) % n).collect();
    if n.is_multiple_of(3) {
        perm = (0..n).rev().collect();
    }
    g.permuted(&perm).expect("perm is a bijection")
}
