//! Cross-checks the isomorph-free generator against a labeled brute force.
//!
//! The oracle walks every edge subset of K_n, computes the minimum triangle
//! code over all n! relabelings, and dedups. It shares nothing with the
//! refinement-based canonical form except the code layout.

use std::collections::{BTreeMap, BTreeSet};

use sombor_core::{canonical_form, Enumerator, Graph};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

/// Triangle code with vertex `order[p]` placed at position p.
fn code(adj: &[u32], order: &[usize]) -> u64 {
    let n = order.len();
    let mut bits = 0u64;
    for j in 1..n {
        for i in 0..j {
            bits = (bits << 1) | (adj[order[i]] >> order[j] & 1) as u64;
        }
    }
    bits
}

fn connected(adj: &[u32]) -> bool {
    let n = adj.len();
    if n == 0 {
        return false;
    }
    let mut seen = 1u32;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if adj[v] >> w & 1 == 1 && seen >> w & 1 == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// (m -> all classes, m -> connected classes) as sets of brute-force codes.
type ClassSets = (
    BTreeMap<usize, BTreeSet<u64>>,
    BTreeMap<usize, BTreeSet<u64>>,
);

fn brute_force(n: usize) -> ClassSets {
    let slots: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut all: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    let mut conn: BTreeMap<usize, BTreeSet<u64>> = BTreeMap::new();
    for mask in 0u64..(1 << slots.len()) {
        let mut adj = vec![0u32; n];
        for (k, &(i, j)) in slots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let min = perms.iter().map(|p| code(&adj, p)).min().unwrap_or(0);
        let m = mask.count_ones() as usize;
        all.entry(m).or_default().insert(min);
        if connected(&adj) {
            conn.entry(m).or_default().insert(min);
        }
    }
    (all, conn)
}

#[test]
fn class_counts_match_labeled_brute_force() {
    let e = Enumerator::default();
    for n in 1..=6 {
        let (all, conn) = brute_force(n);
        for (m, level) in e.all_levels(n).unwrap().into_iter().enumerate() {
            assert_eq!(level.len(), all[&m].len(), "n = {n}, m = {m}");
            let connected = e.classes(n, m, false).unwrap();
            assert_eq!(
                connected.len(),
                conn.get(&m).map_or(0, BTreeSet::len),
                "connected n = {n}, m = {m}"
            );
        }
    }
}

#[test]
fn canonical_forms_agree_with_brute_force_partition() {
    // Two graphs share a refinement form iff they share a brute-force form.
    let n = 5;
    let slots: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let perms = permutations(n);
    let mut pairing: BTreeMap<u64, u64> = BTreeMap::new();
    let mut reverse: BTreeMap<u64, u64> = BTreeMap::new();
    for mask in 0u64..(1 << slots.len()) {
        let edges: Vec<_> = slots
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let mut adj = vec![0u32; n];
        for &(i, j) in &edges {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        let brute = perms.iter().map(|p| code(&adj, p)).min().unwrap();
        let fast = canonical_form(&g).unwrap().bits();
        assert_eq!(*pairing.entry(brute).or_insert(fast), fast);
        assert_eq!(*reverse.entry(fast).or_insert(brute), brute);
    }
    assert_eq!(pairing.len(), 34);
}

#[test]
fn published_class_counts() {
    // graphs / connected graphs by order (counts for n <= 7 independently
    // tabulated from the networkx graph atlas)
    let e = Enumerator::default();
    let total = [1usize, 1, 2, 4, 11, 34, 156, 1044, 12346];
    let connected = [0usize, 1, 1, 2, 6, 21, 112, 853, 11117];
    for n in 1..=8 {
        let levels = e.all_levels(n).unwrap();
        let sum: usize = levels.iter().map(Vec::len).sum();
        assert_eq!(sum, total[n], "n = {n}");
        let conn: usize = (0..levels.len())
            .map(|m| e.classes(n, m, false).unwrap().len())
            .sum();
        assert_eq!(conn, connected[n], "connected n = {n}");
    }
    let by_size_7 = [
        1usize, 1, 2, 5, 10, 21, 41, 65, 97, 131, 148, 148, 131, 97, 65, 41, 21, 10, 5, 2, 1, 1,
    ];
    let levels = e.all_levels(7).unwrap();
    assert_eq!(levels.iter().map(Vec::len).collect::<Vec<_>>(), by_size_7);
    let conn_7 = [
        0usize, 0, 0, 0, 0, 0, 11, 33, 67, 107, 132, 138, 126, 95, 64, 40, 21, 10, 5, 2, 1, 1,
    ];
    for (m, &want) in conn_7.iter().enumerate() {
        assert_eq!(
            e.classes(7, m, false).unwrap().len(),
            want,
            "connected n = 7, m = {m}"
        );
    }
}

#[test]
fn order_nine_sparse_levels() {
    // trees on 9 vertices
    let trees = Enumerator::default().connected_graphs(9, 8).unwrap();
    assert_eq!(trees.len(), 47);
}
