//! Named verification items grouped into suites, shared by the command line
//! and the acceptance harness.

use std::time::Instant;

use num_bigint::BigUint;

use crate::autgroup::{are_isomorphic, automorphism_group, count_automorphisms_brute};
use crate::cosetgraph;
use crate::families::{self, ConstructedInstance};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::localsym::{analyze, CheckConfig, SymmetryReport, TheoremCase};
use crate::perm::Perm;

pub const SUITES: [&str; 4] = ["small-valency", "vertex-transitive", "vertex-intransitive", "coset"];

/// Outcome of one item.
#[derive(Clone, Debug)]
pub struct ItemResult {
    pub suite: &'static str,
    pub name: String,
    pub expectation: String,
    pub passed: bool,
    pub observed: String,
    pub seconds: f64,
}

type Runner = Box<dyn Fn(&CheckConfig) -> Result<Vec<(String, bool)>, String> + Send + Sync>;

pub struct SuiteItem {
    pub suite: &'static str,
    pub name: String,
    pub expectation: String,
    run: Runner,
}

impl SuiteItem {
    fn new(
        suite: &'static str,
        name: impl Into<String>,
        expectation: impl Into<String>,
        run: impl Fn(&CheckConfig) -> Result<Vec<(String, bool)>, String> + Send + Sync + 'static,
    ) -> Self {
        SuiteItem {
            suite,
            name: name.into(),
            expectation: expectation.into(),
            run: Box::new(run),
        }
    }

    pub fn run(&self, cfg: &CheckConfig) -> ItemResult {
        let start = Instant::now();
        let outcome = (self.run)(cfg);
        let seconds = start.elapsed().as_secs_f64();
        let (passed, observed) = match outcome {
            Ok(checks) => {
                let passed = checks.iter().all(|(_, ok)| *ok);
                let observed = checks
                    .iter()
                    .map(|(text, ok)| if *ok { text.clone() } else { format!("{text} [unexpected]") })
                    .collect::<Vec<_>>()
                    .join(", ");
                (passed, observed)
            }
            Err(message) => (false, format!("error: {message}")),
        };
        ItemResult {
            suite: self.suite,
            name: self.name.clone(),
            expectation: self.expectation.clone(),
            passed,
            observed,
            seconds,
        }
    }
}

/// Items of the named suite, or of every suite for `"all"`.
pub fn suite(name: &str) -> Option<Vec<SuiteItem>> {
    match name {
        "small-valency" => Some(small_valency()),
        "vertex-transitive" => Some(vertex_transitive()),
        "vertex-intransitive" => Some(vertex_intransitive()),
        "coset" => Some(coset()),
        "all" => Some(SUITES.iter().flat_map(|s| suite(s).unwrap()).collect()),
        _ => None,
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn check(label: &str, observed: impl std::fmt::Display, ok: bool) -> (String, bool) {
    (format!("{label} = {observed}"), ok)
}

fn both_checks(r: &SymmetryReport, star: bool, stedge: bool) -> Vec<(String, bool)> {
    let show = |d: Option<bool>, f: Option<bool>| format!("direct {d:?} / fast {f:?}");
    let star_ok = r.star_transitive == star
        && r.star_checks.direct.is_none_or(|b| b == star)
        && r.star_checks.fast.is_none_or(|b| b == star);
    let stedge_ok = r.stedge_transitive == stedge
        && r.stedge_checks.direct.is_none_or(|b| b == stedge)
        && r.stedge_checks.fast.is_none_or(|b| b == stedge);
    vec![
        check("star", show(r.star_checks.direct, r.star_checks.fast), star_ok),
        check("edge-star", show(r.stedge_checks.direct, r.stedge_checks.fast), stedge_ok),
    ]
}

fn case(r: &SymmetryReport, expected: &TheoremCase) -> (String, bool) {
    let ok = match (&r.theorem_case, expected) {
        (TheoremCase::VertexIntransitive { case: a, .. }, TheoremCase::VertexIntransitive { case: b, .. }) => a == b,
        (a, b) => a == b,
    };
    check("case", &r.theorem_case, ok)
}

fn order_is(label: &str, x: &BigUint, want: u64) -> (String, bool) {
    check(label, x, *x == BigUint::from(want))
}

fn report(inst: &ConstructedInstance, use_attached: bool, cfg: &CheckConfig) -> Result<SymmetryReport, String> {
    let group = if use_attached { inst.group.as_ref() } else { None };
    analyze(&inst.graph, group, cfg).map_err(err)
}

fn plain(name: &str, graph: Graph) -> ConstructedInstance {
    ConstructedInstance::new(name, graph, None, Vec::new()).expect("no group attached")
}

fn petersen_edges() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

fn small_valency() -> Vec<SuiteItem> {
    const S: &str = "small-valency";
    let mut items = Vec::new();
    let both = |name: String, graph: Graph, star: bool, stedge: bool, case_no: Option<u8>| {
        let expectation = format!(
            "star {star}, edge-star {stedge}{}",
            case_no.map_or(String::new(), |c| format!(", small-valency case ({c})"))
        );
        SuiteItem::new(S, name.clone(), expectation, move |cfg| {
            let r = report(&plain(&name, graph.clone()), false, cfg)?;
            let mut checks = both_checks(&r, star, stedge);
            if let Some(c) = case_no {
                checks.push(case(&r, &TheoremCase::SmallValency { case: c }));
            }
            Ok(checks)
        })
    };
    for n in 1..=5 {
        let g = families::complete_bipartite(1, n).unwrap().graph;
        items.push(both(format!("K_{{1,{n}}}"), g, true, true, Some(1)));
    }
    for n in 3..=12 {
        items.push(both(format!("C_{n}"), families::cycle(n).unwrap().graph, true, true, Some(2)));
    }
    let sigmas = [
        ("K_4", families::complete(4).unwrap().graph),
        ("K_5", families::complete(5).unwrap().graph),
        ("Petersen", petersen_edges()),
        ("K_{3,3}", families::complete_bipartite(3, 3).unwrap().graph),
    ];
    for (name, sigma) in &sigmas {
        items.push(both(format!("S({name})"), sigma.subdivide_1(), true, true, Some(3)));
    }
    items.push(both("P_4".into(), families::path(4).unwrap().graph, false, true, None));
    for n in 3..=5 {
        items.push(both(format!("T_{n}"), families::spider(n).unwrap().graph, false, true, None));
    }
    items.push(both("S_2(K_4)".into(), sigmas[0].1.subdivide_2(), false, true, None));
    for n in [4, 5] {
        let g = families::complete(n).unwrap().graph;
        items.push(SuiteItem::new(S, format!("K_{n}"), "edge-star false (girth 3)", move |cfg| {
            let r = report(&plain("K", g.clone()), false, cfg)?;
            Ok(vec![check(
                "edge-star",
                r.stedge_transitive,
                !r.stedge_transitive && r.stedge_checks.direct == Some(false),
            )])
        }));
    }
    items
}

fn vertex_transitive() -> Vec<SuiteItem> {
    const S: &str = "vertex-transitive";
    vec![
        SuiteItem::new(
            S,
            "Petersen = O_3",
            "both properties by both checks, |Aut| = 120 = brute count, |G_v| = 12, edge stabiliser 8, s = 3, case (1)",
            |cfg| {
                let inst = families::odd_graph(3, &cfg.limits).map_err(err)?;
                let r = report(&inst, false, cfg)?;
                let brute = count_automorphisms_brute(&inst.graph).map_err(err)?;
                let aut = automorphism_group(&inst.graph, &cfg.limits).map_err(err)?;
                let (u, v) = inst.graph.edges()[0];
                let edge_stab = aut.setwise_stabiliser(&[u, v]).map_err(err)?.order();
                let mut checks = both_checks(&r, true, true);
                checks.push(order_is("|Aut|", &r.group_order, 120));
                checks.push(check("brute |Aut|", brute, brute == 120));
                checks.push(order_is("|G_v|", &r.towers[0].g_v, 12));
                checks.push(order_is("|G_{v,w}|", &edge_stab, 8));
                checks.push(check("s", format!("{:?}", r.s_transitive), r.s_transitive == Some(3)));
                checks.push(case(&r, &TheoremCase::VertexTransitive { case: 1 }));
                Ok(checks)
            },
        ),
        SuiteItem::new(
            S,
            "Heawood = PG(2,2) incidence",
            "|Aut| = 336, |G_v| = 24, s = 4, both properties, case (2)",
            |cfg| {
                let inst = families::pg_incidence(2).map_err(err)?;
                let r = report(&inst, false, cfg)?;
                let mut checks = both_checks(&r, true, true);
                checks.push(order_is("|Aut|", &r.group_order, 336));
                checks.push(order_is("|G_v|", &r.towers[0].g_v, 24));
                checks.push(check("s", format!("{:?}", r.s_transitive), r.s_transitive == Some(4)));
                checks.push(case(&r, &TheoremCase::VertexTransitive { case: 2 }));
                Ok(checks)
            },
        ),
        SuiteItem::new(
            S,
            "O_4 under S_7",
            "girth 6, |G_v| = 144, both properties, case (1)",
            |cfg| {
                let inst = families::odd_graph(4, &cfg.limits).map_err(err)?;
                let r = report(&inst, true, cfg)?;
                let mut checks = both_checks(&r, true, true);
                checks.push(check("girth", format!("{:?}", r.girth), r.girth == Some(6)));
                checks.push(order_is("|G_v|", &r.towers[0].g_v, 144));
                checks.push(case(&r, &TheoremCase::VertexTransitive { case: 1 }));
                Ok(checks)
            },
        ),
        SuiteItem::new(
            S,
            "PG(2,3) incidence",
            "vertex-transitive under Aut, |G_v| = 432, s = 4, both properties, case (3)",
            |cfg| {
                let inst = families::pg_incidence(3).map_err(err)?;
                let r = report(&inst, false, cfg)?;
                let mut checks = both_checks(&r, true, true);
                checks.push(check("vertex orbits", r.vertex_orbits, r.vertex_orbits == 1));
                checks.push(order_is("|G_v|", &r.towers[0].g_v, 432));
                checks.push(check("s", format!("{:?}", r.s_transitive), r.s_transitive == Some(4)));
                checks.push(case(&r, &TheoremCase::VertexTransitive { case: 3 }));
                Ok(checks)
            },
        ),
    ]
}

fn vertex_intransitive() -> Vec<SuiteItem> {
    const S: &str = "vertex-intransitive";
    vec![
        SuiteItem::new(
            S,
            "GQ(2,4) incidence",
            "bivalency {3,5}, |G_v| = 1920, |G_v^[1]| = 16, |G_vw^[1]| = 8, locally 4-arc transitive, both properties, case (1)",
            |cfg| {
                let inst = families::hermitian_gq().map_err(err)?;
                let r = report(&inst, false, cfg)?;
                let profile: Vec<usize> = r.valency_profile.keys().copied().collect();
                let mut checks = both_checks(&r, true, true);
                checks.push(check("valencies", format!("{profile:?}"), profile == [3, 5]));
                let point = r.towers.iter().find(|t| inst.graph.degree(t.v) == 5);
                match point {
                    Some(t) => {
                        checks.push(order_is("|G_v|", &t.g_v, 1920));
                        checks.push(order_is("|G_v^[1]|", &t.g_v1, 16));
                        checks.push(order_is("|G_vw^[1]|", &t.g_vw1, 8));
                    }
                    None => checks.push(("tower at a valency-5 vertex missing".into(), false)),
                }
                checks.push(check("local s", r.max_local_s, r.max_local_s >= 4));
                checks.push(case(&r, &TheoremCase::VertexIntransitive { case: 1, v: 0, w: 0 }));
                Ok(checks)
            },
        ),
        SuiteItem::new(
            S,
            "Gamma_{3,7} under S_7",
            "case (2) with |G_v| = r!(l-1)!",
            |cfg| {
                let inst = families::johnson_incidence(7, 3, &cfg.limits).map_err(err)?;
                let r = report(&inst, true, cfg)?;
                let mut checks = both_checks(&r, true, true);
                checks.push(case(&r, &TheoremCase::VertexIntransitive { case: 2, v: 0, w: 0 }));
                if let TheoremCase::VertexIntransitive { v, w, .. } = r.theorem_case {
                    let (rv, lw) = (inst.graph.degree(v), inst.graph.degree(w));
                    let tower = r.towers.iter().find(|t| t.v == v || t.w == v);
                    let gv = tower.map(|t| if t.v == v { &t.g_v } else { &t.g_w });
                    let want = crate::group::factorial(rv) * crate::group::factorial(lw - 1);
                    checks.push(match gv {
                        Some(x) => check("|G_v|", x, *x == want),
                        None => ("|G_v| unavailable".into(), false),
                    });
                }
                Ok(checks)
            },
        ),
        SuiteItem::new(
            S,
            "H(3,4) clique incidence under S_4 wr S_3",
            "case (3)",
            |cfg| {
                let inst = families::hamming_clique_incidence(3, 4, &cfg.limits).map_err(err)?;
                let r = report(&inst, true, cfg)?;
                let mut checks = both_checks(&r, true, true);
                checks.push(order_is("|G|", &r.group_order, 24u64.pow(3) * 6));
                checks.push(case(&r, &TheoremCase::VertexIntransitive { case: 3, v: 0, w: 0 }));
                Ok(checks)
            },
        ),
    ]
}

fn coset() -> Vec<SuiteItem> {
    const S: &str = "coset";
    vec![
        SuiteItem::new(S, "Cos(S_4, Sym{0,1,2}, (2 3))", "isomorphic to K_4", |cfg| {
            let g = PermGroup::symmetric(4);
            let h = g
                .subgroup(vec![
                    Perm::from_cycles(4, &[&[0, 1]]).unwrap(),
                    Perm::from_cycles(4, &[&[0, 1, 2]]).unwrap(),
                ])
                .map_err(err)?;
            let x = Perm::from_cycles(4, &[&[2, 3]]).unwrap();
            let inst = cosetgraph::sabidussi(&g, &h, &x, &cfg.limits).map_err(err)?;
            let k4 = families::complete(4).unwrap().graph;
            let iso = are_isomorphic(&inst.graph, &k4, &cfg.limits).map_err(err)?;
            Ok(vec![check("isomorphic", iso.is_some(), iso.is_some())])
        }),
        SuiteItem::new(
            S,
            "S_9 example, r = 4",
            "2520 vertices, connected, 4-regular, both properties under S_9, s = 3, |G_v| = 144",
            |cfg| {
                let inst = families::s_squared_example(4, &cfg.limits).map_err(err)?;
                let r = report(&inst, true, cfg)?;
                let mut checks = both_checks(&r, true, true);
                checks.push(check("vertices", r.vertices, r.vertices == 2520));
                let profile: Vec<usize> = r.valency_profile.keys().copied().collect();
                checks.push(check("valencies", format!("{profile:?}"), profile == [4]));
                checks.push(check("s", format!("{:?}", r.s_transitive), r.s_transitive == Some(3)));
                checks.push(order_is("|G_v|", &r.towers[0].g_v, 144));
                Ok(checks)
            },
        ),
    ]
}
