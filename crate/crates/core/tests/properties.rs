use proptest::prelude::*;
use squadgraph::dicycle::{find_cycle_factor, hamilton_cycle, FactorOutcome};
use squadgraph::{Digraph, UGraph};

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<u64>(), n).prop_map(move |rows| {
            let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            Digraph::from_out_rows(rows.into_iter().map(|r| r & full).collect()).unwrap()
        })
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = UGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |pairs| {
            let pairs: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            UGraph::from_edges(n, &pairs).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn relabeling_preserves_predicates((d, p) in digraph(9).prop_flat_map(|d| {
        let n = d.order();
        (Just(d), permutation(n))
    })) {
        let e = d.permuted(&p).unwrap();
        prop_assert_eq!(d.is_strong(), e.is_strong());
        prop_assert_eq!(d.is_s_quadrangular(), e.is_s_quadrangular());
        prop_assert_eq!(d.is_eulerian(), e.is_eulerian());
        prop_assert_eq!(d.max_semidegree(), e.max_semidegree());
        prop_assert_eq!(d.arc_count(), e.arc_count());
        if d.order() >= 2 {
            prop_assert_eq!(hamilton_cycle(&d).is_some(), hamilton_cycle(&e).is_some());
            prop_assert_eq!(
                matches!(find_cycle_factor(&d).unwrap(), FactorOutcome::Factor(_)),
                matches!(find_cycle_factor(&e).unwrap(), FactorOutcome::Factor(_))
            );
        }
    }

    #[test]
    fn graph_relabeling((g, p) in graph(9).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), permutation(n))
    })) {
        let h = g.permuted(&p).unwrap();
        prop_assert_eq!(g.is_connected(), h.is_connected());
        prop_assert_eq!(g.is_s_quadrangular(), h.is_s_quadrangular());
        prop_assert_eq!(g.edge_count(), h.edge_count());
    }

    #[test]
    fn biorientation_round_trip(g in graph(12)) {
        let d = g.complete_biorientation();
        prop_assert_eq!(d.arc_count(), 2 * g.edge_count());
        prop_assert_eq!(d.is_strong(), g.is_connected());
        prop_assert!(d.is_eulerian() == g.is_connected());
        prop_assert_eq!(d.underlying_graph().unwrap(), g.clone());
        prop_assert_eq!(d.is_s_quadrangular(), g.is_s_quadrangular());
        prop_assert_eq!(d.max_semidegree(), g.max_degree());
    }

    #[test]
    fn line_digraph_degrees(d in digraph(7)) {
        prop_assume!(d.arc_count() >= 1 && d.arc_count() <= 64);
        let l = d.line_digraph().unwrap();
        prop_assert_eq!(l.digraph.order(), d.arc_count());
        for (k, &(u, v)) in l.arcs.iter().enumerate() {
            prop_assert_eq!(l.digraph.out_degree(k), d.out_degree(v));
            prop_assert_eq!(l.digraph.in_degree(k), d.in_degree(u));
        }
    }

    #[test]
    fn reverse_is_transpose(d in digraph(10)) {
        let r = d.reverse();
        for (u, v) in d.arcs() {
            prop_assert!(r.has_arc(v, u));
        }
        prop_assert_eq!(r.arc_count(), d.arc_count());
        prop_assert_eq!(r.reverse(), d);
    }

    #[test]
    fn kronecker_arc_count(a in digraph(4), b in digraph(4)) {
        let k = a.kronecker(&b).unwrap();
        prop_assert_eq!(k.order(), a.order() * b.order());
        prop_assert_eq!(k.arc_count(), a.arc_count() * b.arc_count());
    }
}
