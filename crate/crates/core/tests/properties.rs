use proptest::prelude::*;

use sombor_core::indices::{first_zagreb_edge_sum, first_zagreb_vertex_sum};
use sombor_core::majorization::{majorizes, Majorization, NonIncreasingSeq};
use sombor_core::{canonical_form, encode_graph6, first_zagreb, parse_graph6, sombor, Graph};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let edges: Vec<_> = (1..n)
                .flat_map(|j| (0..j).map(move |i| (i, j)))
                .zip(bits)
                .filter_map(|(e, b)| b.then_some(e))
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

/// Sorted sequences of length `len` summing to 2·len: `2·len` units dropped into bins.
fn int_seq(len: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0..len, 2 * len).prop_map(move |units| {
        let mut bins = vec![0u32; len];
        for u in units {
            bins[u] += 1;
        }
        bins.sort_unstable_by(|a, b| b.cmp(a));
        bins.into_iter().map(f64::from).collect()
    })
}

proptest! {
    #[test]
    fn handshake_and_edge_stats(g in graph_strategy(12)) {
        prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        let stats = g.edge_stats();
        prop_assert_eq!(stats.epsilon.values().sum::<usize>(), g.size());
        prop_assert_eq!(stats.mij.values().sum::<usize>(), g.size());
        for (&k, &count) in &stats.epsilon {
            let from_pairs: usize = stats.mij.iter().filter(|(&(i, j), _)| i + j - 2 == k).map(|(_, &c)| c).sum();
            prop_assert_eq!(count, from_pairs);
        }
        let ds = g.degree_sequence();
        prop_assert!(ds.as_slice().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(first_zagreb_edge_sum(&g), first_zagreb_vertex_sum(&g));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(20)) {
        let s = encode_graph6(&g);
        let back = parse_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(encode_graph6(&back), s);
    }

    #[test]
    fn cyclomatic_number(g in graph_strategy(12)) {
        let nu = g.cyclomatic_number();
        prop_assert_eq!(nu + g.order(), g.size() + g.components());
        if g.is_connected() {
            prop_assert_eq!(nu + g.order(), g.size() + 1);
        }
    }

    #[test]
    fn delete_vertex_degrees((g, v) in graph_strategy(12).prop_flat_map(|g| { let n = g.order(); (Just(g), 0..n) })) {
        let h = g.delete_vertex(v).unwrap();
        prop_assert_eq!(h.order(), g.order() - 1);
        prop_assert_eq!(h.size(), g.size() - g.degree(v));
        for w in (0..g.order()).filter(|&w| w != v) {
            let new_label = if w > v { w - 1 } else { w };
            prop_assert_eq!(h.degree(new_label), g.degree(w) - g.has_edge(w, v) as usize);
        }
    }

    #[test]
    fn canonical_form_is_relabeling_invariant((g, perm) in graph_and_perm(10)) {
        let h = g.permuted(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn edge_addition_increases_so_and_m1(g in graph_strategy(9), a in 0usize..9, b in 0usize..9) {
        let (a, b) = (a % g.order(), b % g.order());
        prop_assume!(a != b && !g.has_edge(a, b));
        let h = g.with_edge(a, b).unwrap();
        prop_assert!(sombor(&h).unwrap() > sombor(&g).unwrap());
        prop_assert!(first_zagreb(&h).unwrap() > first_zagreb(&g).unwrap());
    }

    #[test]
    fn majorization_reflexive_and_antisymmetric(c in int_seq(6), d in int_seq(6)) {
        let cs = NonIncreasingSeq::new(c).unwrap();
        prop_assert_eq!(majorizes(&cs, &cs).unwrap(), Majorization::Equal);
        let ds = NonIncreasingSeq::new(d).unwrap();
        let (fwd, back) = (majorizes(&cs, &ds).unwrap(), majorizes(&ds, &cs).unwrap());
        let swapped = match fwd {
            Majorization::Majorized => Majorization::Majorizes,
            Majorization::Majorizes => Majorization::Majorized,
            other => other,
        };
        prop_assert_eq!(back, swapped);
        if fwd == Majorization::Equal {
            prop_assert_eq!(cs.values(), ds.values());
        }
    }

    #[test]
    fn majorization_transitive(a in int_seq(5), b in int_seq(5), c in int_seq(5)) {
        let (a, b, c) = (NonIncreasingSeq::new(a).unwrap(), NonIncreasingSeq::new(b).unwrap(), NonIncreasingSeq::new(c).unwrap());
        let (ab, bc) = (majorizes(&a, &b).unwrap(), majorizes(&b, &c).unwrap());
        if ab.is_below_or_equal() && bc.is_below_or_equal() {
            prop_assert!(majorizes(&a, &c).unwrap().is_below_or_equal());
        }
    }
}
