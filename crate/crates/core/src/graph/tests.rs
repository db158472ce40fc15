use proptest::prelude::*;

use super::io::{parse, serialize};
use super::*;

fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5.
fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

#[test]
fn rejects_bad_edges() {
    assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::Loop { vertex: 1 }));
    assert_eq!(
        Graph::from_edges(3, &[(0, 1), (1, 0)]),
        Err(GraphError::DuplicateEdge { u: 0, v: 1 })
    );
    assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
}

#[test]
fn girth_values() {
    assert_eq!(petersen().girth(), Some(5));
    assert_eq!(cycle(7).girth(), Some(7));
    assert_eq!(complete(4).girth(), Some(3));
    let tree = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
    assert_eq!(tree.girth(), None);
}

#[test]
fn valency_profiles() {
    let c7 = cycle(7);
    assert_eq!(c7.valency_profile(), BTreeMap::from([(2, 7)]));
    assert!(c7.is_regular());
    let mut edges = Vec::new();
    for a in 0..3 {
        for b in 3..8 {
            edges.push((a, b));
        }
    }
    let k35 = Graph::from_edges(8, &edges).unwrap();
    assert_eq!(k35.valency_profile(), BTreeMap::from([(3, 5), (5, 3)]));
    let bp = k35.biregular_bipartition().unwrap();
    assert_eq!((bp.left_valency, bp.right_valency), (5, 3));
    assert_eq!(bp.left, vec![0, 1, 2]);
    assert!(petersen().biregular_bipartition().is_none());
}

#[test]
fn spheres_and_balls() {
    let p = petersen();
    for v in 0..10 {
        assert_eq!(p.sphere(v, 0), vec![v]);
        assert_eq!(p.sphere(v, 1).len(), 3);
        assert_eq!(p.sphere(v, 2).len(), 6);
        assert_eq!(p.ball(v, 2).len(), 10);
    }
    assert_eq!(cycle(6).sphere(1, 3), vec![4]);
}

#[test]
fn arc_counts() {
    let p = petersen();
    assert_eq!(p.s_arcs(1).count(), 30);
    assert_eq!(p.s_arcs(3).count(), 120);
    assert_eq!(cycle(5).s_arcs(7).count(), 10);
    assert_eq!(p.s_arcs(0).count(), 10);
    let from0: Vec<_> = p.s_arcs_from(0, 2).collect();
    assert_eq!(from0.len(), 6);
    assert!(from0.iter().all(|a| a[0] == 0 && a[2] != a[0]));
    assert_eq!(p.count_s_arcs_from(0, 4), 24);
}

#[test]
fn subdivisions() {
    let k4 = complete(4);
    let s1 = k4.subdivide_1();
    assert_eq!((s1.n(), s1.edge_count()), (10, 12));
    assert_eq!(s1.valency_profile(), BTreeMap::from([(2, 6), (3, 4)]));
    let s2 = k4.subdivide_2();
    assert_eq!((s2.n(), s2.edge_count()), (16, 18));
    let c3 = cycle(3).subdivide_1();
    assert!(c3.is_regular() && c3.is_connected() && c3.n() == 6 && c3.girth() == Some(6));
}

#[test]
fn smoothing() {
    let k4 = complete(4);
    let sm = k4.subdivide_1().smooth().unwrap();
    assert_eq!(sm.sigma, k4);
    assert_eq!(sm.branch, vec![0, 1, 2, 3]);
    assert!(petersen().smooth().is_none());
    assert!(cycle(6).smooth().is_none());
    assert!(k4.subdivide_2().smooth().is_none());
}

#[test]
fn text_format() {
    let g = parse("# square\nn 4\ne 0 1\ne 2 1\ne 2 3 # last but one\ne 3 0\n").unwrap();
    assert_eq!(g, cycle(4));
    assert!(g.is_connected());
    assert_eq!(serialize(&g), "n 4\ne 0 1\ne 0 3\ne 1 2\ne 2 3\n");
    let err = parse("n 3\ne 0 0\n").unwrap_err();
    assert!(matches!(err, GraphError::Parse { line: 2, ref message } if message.contains("loop")));
    assert!(matches!(parse("n 3\ne 0 1\ne 1 0\n"), Err(GraphError::Parse { line: 3, .. })));
    assert!(matches!(parse("e 0 1\n"), Err(GraphError::Parse { line: 1, .. })));
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..12).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let m = pairs.len();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |mask| {
            let edges: Vec<_> = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn round_trip(g in arb_graph()) {
        prop_assert_eq!(parse(&serialize(&g)).unwrap(), g);
    }

    #[test]
    fn spheres_are_layers(g in arb_graph(), v in 0usize..12) {
        let v = v % g.n();
        let layers = g.layers(v, 4);
        let mut seen = std::collections::BTreeSet::new();
        let mut last = 0;
        for (i, layer) in layers.iter().enumerate() {
            for &x in layer {
                prop_assert!(seen.insert(x));
            }
            let ball = g.ball(v, i);
            prop_assert!(ball.len() >= last);
            last = ball.len();
            prop_assert_eq!(&g.sphere(v, i), layer);
        }
    }

    #[test]
    fn no_collisions_at_girth_five(g in arb_graph()) {
        if g.girth().is_some_and(|x| x >= 5) {
            for v in 0..g.n() {
                let expected: usize = g.neighbors(v).iter().map(|&w| g.degree(w) - 1).sum();
                prop_assert_eq!(g.sphere(v, 2).len(), expected);
            }
        }
    }

    #[test]
    fn arc_enumeration_matches_count(g in arb_graph(), s in 0usize..5) {
        let total: u64 = (0..g.n()).map(|v| g.count_s_arcs_from(v, s)).sum();
        prop_assert_eq!(g.s_arcs(s).count() as u64, total);
        if g.is_regular() && s >= 1 {
            let k = g.degree(0) as u64;
            let expected = g.n() as u64 * k * k.saturating_sub(1).pow(s as u32 - 1);
            prop_assert_eq!(total, expected);
        }
    }

    #[test]
    fn smooth_inverts_subdivision(g in arb_graph()) {
        if g.n() > 0 && g.min_valency() >= 3 {
            let sm = g.subdivide_1().smooth().unwrap();
            prop_assert_eq!(sm.sigma, g);
        }
    }
}
