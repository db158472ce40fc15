use num_bigint::BigUint;
use proptest::prelude::*;

use super::*;
use crate::autgroup::automorphism_group;
use crate::families;
use crate::perm::Perm;

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

fn complete(n: usize) -> Graph {
    families::complete(n).unwrap().graph
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

fn aut(g: &Graph) -> PermGroup {
    automorphism_group(g, &Limits::default()).unwrap()
}

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Star transitivity straight from the definition over all group elements.
fn star_oracle(g: &Graph, elements: &[Perm]) -> bool {
    for v1 in 0..g.n() {
        for v2 in 0..g.n() {
            if g.degree(v1) != g.degree(v2) {
                continue;
            }
            for image in permutations(g.neighbors(v2)) {
                let ok = elements.iter().any(|a| {
                    a.apply(v1) == v2
                        && g.neighbors(v1).iter().zip(&image).all(|(&x, &y)| a.apply(x) == y)
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Edge-star transitivity straight from the definition: every
/// incidence-preserving bijection of edge-stars is realised.
fn stedge_oracle(g: &Graph, elements: &[Perm]) -> bool {
    let edges = g.edges();
    let others = |a: usize, b: usize| -> Vec<usize> {
        g.neighbors(a).iter().copied().filter(|&x| x != b).collect()
    };
    for &(u1, v1) in &edges {
        for &(p, q) in &edges {
            for (u2, v2) in [(p, q), (q, p)] {
                if g.degree(u1) != g.degree(u2) || g.degree(v1) != g.degree(v2) {
                    continue;
                }
                for img_u in permutations(&others(u2, v2)) {
                    for img_v in permutations(&others(v2, u2)) {
                        // edge {u1,x} goes to {u2, img}; a realising element must
                        // send x to img
                        let ok = elements.iter().any(|a| {
                            a.apply(u1) == u2
                                && a.apply(v1) == v2
                                && others(u1, v1).iter().zip(&img_u).all(|(&x, &y)| a.apply(x) == y)
                                && others(v1, u1).iter().zip(&img_v).all(|(&x, &y)| a.apply(x) == y)
                        });
                        if !ok {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

#[test]
fn stars_and_edge_stars() {
    let p = petersen();
    assert_eq!(open_star(&p, 0).len(), 3);
    let k3 = complete(3);
    assert_eq!(edge_star(&k3, 0, 1).unwrap().len(), 3);
    let c5 = families::cycle(5).unwrap().graph;
    assert_eq!(edge_star(&c5, 0, 1).unwrap().len(), 3);
    assert!(edge_star(&c5, 0, 2).is_err());
}

#[test]
fn permutation_unranking() {
    assert_eq!(nth_permutation(3, 0), vec![0, 1, 2]);
    assert_eq!(nth_permutation(3, 5), vec![2, 1, 0]);
    assert_eq!(nth_permutation(4, 9), vec![1, 2, 3, 0]);
    assert_eq!(factorial_u64(8), 40320);
}

#[test]
fn petersen_tower_against_elements() {
    let p = petersen();
    let grp = aut(&p);
    let elements = grp.elements();
    assert_eq!(elements.len(), 120);
    let fixing = |pts: &[usize]| elements.iter().filter(|a| pts.iter().all(|&x| a.fixes(x))).count();
    let t = stabiliser_tower(&p, &grp, 0, 1).unwrap();
    assert_eq!(t.g_v, BigUint::from(fixing(&[0])));
    assert_eq!(t.g_v, BigUint::from(12u32));
    assert_eq!(t.g_v1, BigUint::from(fixing(&p.ball(0, 1))));
    assert_eq!(t.g_v1, BigUint::from(2u32));
    assert_eq!(t.g_v2, BigUint::from(1u32));
    assert_eq!(t.g_vw, BigUint::from(fixing(&[0, 1])));
    let arcs = local_s_arc_transitivity(&p, &grp, &cfg()).unwrap();
    assert_eq!(arcs.s_transitive, Some(3));
}

#[test]
fn small_examples() {
    let spider = families::spider(3).unwrap().graph;
    let g = aut(&spider);
    assert!(!is_star_transitive_direct(&spider, &g, &cfg()).unwrap().holds());
    assert!(is_stedge_transitive_direct(&spider, &g, &cfg()).unwrap().holds());

    let k4 = complete(4);
    let g = aut(&k4);
    assert!(is_star_transitive_direct(&k4, &g, &cfg()).unwrap().holds());
    assert!(!is_stedge_transitive_direct(&k4, &g, &cfg()).unwrap().holds());
    assert!(is_stedge_transitive_fast(&k4, &g).is_err());

    let k23 = families::complete_bipartite(2, 3).unwrap().graph;
    let g = aut(&k23);
    assert!(is_stedge_transitive_direct(&k23, &g, &cfg()).unwrap().holds());

    let sub2 = complete(4).subdivide_2();
    let g = aut(&sub2);
    assert!(!is_star_transitive_fast(&sub2, &g).unwrap());
    assert!(is_stedge_transitive_direct(&sub2, &g, &cfg()).unwrap().holds());
}

#[test]
fn rejects_non_automorphisms_and_caps() {
    let c5 = families::cycle(5).unwrap().graph;
    let bad = PermGroup::from_generators(5, vec![Perm::from_cycles(5, &[&[0, 2]]).unwrap()]).unwrap();
    assert!(matches!(
        is_star_transitive_fast(&c5, &bad),
        Err(LocalSymError::NotAutomorphism { generator: 0 })
    ));
    let k10 = complete(10);
    let g = PermGroup::symmetric(10);
    assert!(matches!(
        is_star_transitive_direct(&k10, &g, &cfg()),
        Err(LocalSymError::ValencyCap { .. })
    ));
}

#[test]
fn classification_of_named_graphs() {
    let p = petersen();
    let report = analyze(&p, None, &cfg()).unwrap();
    assert_eq!(report.theorem_case, TheoremCase::VertexTransitive { case: 1 });
    let c8 = families::cycle(8).unwrap().graph;
    let report = analyze(&c8, None, &cfg()).unwrap();
    assert!(report.star_transitive && report.stedge_transitive);
    assert_eq!(report.s_annotation.as_deref(), Some("cycle"));
    assert_eq!(report.theorem_case, TheoremCase::SmallValency { case: 2 });
    let sub = complete(4).subdivide_1();
    let report = analyze(&sub, None, &cfg()).unwrap();
    assert_eq!(report.theorem_case, TheoremCase::SmallValency { case: 3 });
    let p4 = families::path(4).unwrap().graph;
    let report = analyze(&p4, None, &cfg()).unwrap();
    assert!(!report.star_transitive && report.stedge_transitive);
    let json = serde_json::to_string(&report).unwrap();
    let back: SymmetryReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, report);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(proptest::bool::weighted(0.5), len).prop_map(move |mask| {
            let edges: Vec<_> = pairs.iter().zip(&mask).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn direct_matches_definition(g in arb_graph(6)) {
        let grp = aut(&g);
        let elements = grp.elements();
        let star = is_star_transitive_direct(&g, &grp, &cfg()).unwrap();
        prop_assert_eq!(star.holds(), star_oracle(&g, &elements));
        prop_assert_eq!(star.holds(), is_star_transitive_fast(&g, &grp).unwrap());
        let stedge = is_stedge_transitive_direct(&g, &grp, &cfg()).unwrap();
        prop_assert_eq!(stedge.holds(), stedge_oracle(&g, &elements));
        if let Ok(fast) = is_stedge_transitive_fast(&g, &grp) {
            prop_assert_eq!(fast, stedge.holds());
        }
    }

    #[test]
    fn sequential_and_parallel_agree(g in arb_graph(7)) {
        let grp = aut(&g);
        let seq = CheckConfig { execution: crate::par::Execution::Sequential, ..cfg() };
        let a = is_stedge_transitive_direct(&g, &grp, &seq).unwrap();
        let b = is_stedge_transitive_direct(&g, &grp, &cfg()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn subgroup_checks_agree(g in arb_graph(6), pick in any::<u64>()) {
        // a subgroup generated by one element of Aut
        let grp = aut(&g);
        let elements = grp.elements();
        let a = elements[(pick % elements.len() as u64) as usize].clone();
        let sub = PermGroup::from_generators(g.n(), vec![a]).unwrap();
        let sub_elements = sub.elements();
        let star = is_star_transitive_direct(&g, &sub, &cfg()).unwrap();
        prop_assert_eq!(star.holds(), star_oracle(&g, &sub_elements));
        prop_assert_eq!(star.holds(), is_star_transitive_fast(&g, &sub).unwrap());
        let stedge = is_stedge_transitive_direct(&g, &sub, &cfg()).unwrap();
        prop_assert_eq!(stedge.holds(), stedge_oracle(&g, &sub_elements));
        if let Ok(fast) = is_stedge_transitive_fast(&g, &sub) {
            prop_assert_eq!(fast, stedge.holds());
        }
    }
}
