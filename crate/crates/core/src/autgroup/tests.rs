use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    graph(n, &edges)
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    graph(10, &edges)
}

/// Smallest upper-triangle adjacency string over all relabellings.
fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut best: Option<Vec<bool>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |p| {
        let mut word = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                word.push(g.has_edge(p[u], p[v]));
            }
        }
        if best.as_ref().is_none_or(|b| word < *b) {
            best = Some(word);
        }
    });
    best.unwrap_or_default()
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let edges: Vec<_> = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

#[test]
fn known_orders() {
    let limits = Limits::default();
    let cases = [(cycle(7), 14u64), (petersen(), 120), (graph(4, &[]), 24), (graph(3, &[(0, 1)]), 2)];
    for (g, order) in cases {
        assert_eq!(automorphism_group(&g, &limits).unwrap().order(), BigUint::from(order));
        assert_eq!(count_automorphisms_brute(&g).unwrap(), order);
        assert_eq!(brute_automorphisms(&g).unwrap().order(), BigUint::from(order));
    }
}

#[test]
fn colouring_restricts_group() {
    let limits = Limits::default();
    let mut colors = vec![0; 6];
    colors[0] = 1;
    let grp = automorphism_group_colored(&cycle(6), &Coloring::new(colors), &limits).unwrap();
    assert_eq!(grp.order(), BigUint::from(2u32));
    assert!(automorphism_group_colored(&cycle(6), &Coloring::uniform(5), &limits).is_err());
}

#[test]
fn size_caps() {
    let limits = Limits {
        autgroup_vertices: 5,
        ..Limits::default()
    };
    assert_eq!(
        automorphism_group(&cycle(6), &limits).unwrap_err(),
        AutError::TooLarge { n: 6, cap: 5 }
    );
    assert!(count_automorphisms_brute(&cycle(11)).is_err());
}

#[test]
fn petersen_isomorphic_to_relabelling() {
    let limits = Limits::default();
    let g = petersen();
    let sigma: Vec<usize> = vec![3, 7, 1, 9, 0, 4, 8, 2, 6, 5];
    let h = g.relabel(&sigma);
    let map = are_isomorphic(&g, &h, &limits).unwrap().unwrap();
    for (u, v) in g.edges() {
        assert!(h.has_edge(map[u], map[v]));
    }
    // two 3-regular graphs on 6 vertices: prism and K_{3,3}
    let prism = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
    let k33 = graph(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
    assert!(are_isomorphic(&prism, &k33, &limits).unwrap().is_none());
}

#[test]
fn refinement_of_path_splits_by_distance_from_ends() {
    let p5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
    let c = equitable_refinement(&p5, &Coloring::uniform(5));
    assert_eq!(c.class_count(), 3);
    assert_eq!(c.colors[0], c.colors[4]);
    assert_eq!(c.colors[1], c.colors[3]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn order_matches_exhaustive_count(g in arb_graph(8)) {
        let grp = automorphism_group(&g, &Limits::default()).unwrap();
        prop_assert_eq!(grp.order(), BigUint::from(count_automorphisms_brute(&g).unwrap()));
    }

    #[test]
    fn isomorphism_matches_canonical_form(g in arb_graph(6), h in arb_graph(6)) {
        let limits = Limits::default();
        let same = g.n() == h.n() && brute_canonical(&g) == brute_canonical(&h);
        let found = are_isomorphic(&g, &h, &limits).unwrap();
        prop_assert_eq!(found.is_some(), same);
        if let Some(map) = found {
            for (u, v) in g.edges() {
                prop_assert!(h.has_edge(map[u], map[v]));
            }
        }
    }

    #[test]
    fn relabelled_copy_is_isomorphic(g in arb_graph(9), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut images: Vec<usize> = (0..g.n()).collect();
        images.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = g.relabel(&images);
        prop_assert!(are_isomorphic(&g, &h, &Limits::default()).unwrap().is_some());
    }
}
