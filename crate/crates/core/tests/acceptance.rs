use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use startrans::autgroup::{automorphism_group, count_automorphisms_brute};
use startrans::families::{self, ConstructedInstance};
use startrans::graph::Graph;
use startrans::group::{factorial, ActionKind};
use startrans::localsym::LocalSymError;
use startrans::suites::{suite, ItemResult};
use startrans::{analyze, CheckConfig, Limits, PermGroup};

struct Outcome {
    passed: bool,
    detail: Vec<String>,
}

fn run_items(suite_name: &str, names: Option<&[&str]>, cfg: &CheckConfig) -> Outcome {
    let items = suite(suite_name).expect("known suite");
    let results: Vec<ItemResult> = items
        .iter()
        .filter(|it| names.is_none_or(|ns| ns.contains(&it.name.as_str())))
        .map(|it| it.run(cfg))
        .collect();
    assert!(!results.is_empty(), "no items selected from {suite_name}");
    Outcome {
        passed: results.iter().all(|r| r.passed),
        detail: results
            .iter()
            .map(|r| {
                format!(
                    "{} {}: {} ({:.2} s)",
                    if r.passed { "ok  " } else { "FAIL" },
                    r.name,
                    r.observed,
                    r.seconds
                )
            })
            .collect(),
    }
}

fn criterion(
    number: usize,
    title: &str,
    bound: Duration,
    body: impl FnOnce() -> Outcome,
) -> bool {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let in_time = elapsed < bound;
    let passed = outcome.passed && in_time;
    println!(
        "{} criterion {number:>2}: {title} [{:.2} s, bound {} s]",
        if passed { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        bound.as_secs()
    );
    for line in &outcome.detail {
        println!("      {line}");
    }
    if !in_time {
        println!("      time bound exceeded");
    }
    passed
}

fn family_corpus(limits: &Limits) -> Vec<ConstructedInstance> {
    let mut out = Vec::new();
    let mut push = |r: Result<ConstructedInstance, families::FamilyError>| out.push(r.expect("family builds"));
    for n in 3..=8 {
        push(families::cycle(n));
        push(families::path(n));
        push(families::complete(n));
        push(families::spider(n));
    }
    for (m, n) in [(1, 1), (1, 4), (2, 3), (3, 3), (3, 4), (4, 4)] {
        push(families::complete_bipartite(m, n));
    }
    push(families::odd_graph(3, limits));
    push(families::odd_graph(4, limits));
    push(families::johnson_incidence(5, 3, limits));
    push(families::johnson_incidence(7, 3, limits));
    push(families::hamming_clique_incidence(2, 3, limits));
    push(families::hamming_clique_incidence(3, 3, limits));
    push(families::hamming_clique_incidence(3, 4, limits));
    push(families::pg_incidence(2));
    push(families::pg_incidence(3));
    push(families::hermitian_gq());
    push(families::gf3_translate_graph(4, limits));
    let k4 = families::complete(4).unwrap().graph;
    let petersen = families::odd_graph(3, limits).unwrap().graph;
    for (name, g) in [
        ("S(K_4)", k4.subdivide_1()),
        ("S_2(K_4)", k4.subdivide_2()),
        ("S(Petersen)", petersen.subdivide_1()),
    ] {
        out.push(ConstructedInstance::new(name, g, None, Vec::new()).unwrap());
    }
    out
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(2..=9);
    let p = rng.gen_range(0.2..0.8);
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Invariants of a single (graph, group) pair; returns the violations and
/// whether the symmetry report could be built.
fn property_violations(
    name: &str,
    g: &Graph,
    group: &PermGroup,
    cfg: &CheckConfig,
    rng: &mut ChaCha8Rng,
) -> (Vec<String>, bool) {
    let mut bad = Vec::new();
    let order = group.order();
    for v in 0..g.n() {
        let stab = group.point_stabiliser(v).unwrap().order();
        if BigUint::from(group.orbit(v).len()) * &stab != order {
            bad.push(format!("{name}: orbit-stabiliser fails at {v}"));
        }
    }
    for _ in 0..8 {
        let x = group.random_element(rng);
        if !g.is_automorphism(&x) || !group.contains(&x).unwrap() {
            bad.push(format!("{name}: random element not sound"));
        }
    }
    if order <= BigUint::from(5000u32) && BigUint::from(group.elements().len()) != order {
        bad.push(format!("{name}: element count differs from order"));
    }
    let report = match analyze(g, Some(group), cfg) {
        Ok(r) => r,
        Err(LocalSymError::FastHypothesis(_)) => return (bad, false),
        Err(e) => {
            bad.push(format!("{name}: {e}"));
            return (bad, false);
        }
    };
    bad.extend(report.mismatches.iter().map(|m| format!("{name}: {m}")));
    let connected_thick = report.connected && g.n() > 0 && g.min_valency() >= 3;
    if connected_thick && report.stedge_transitive && !report.star_transitive {
        bad.push(format!("{name}: edge-star without star at valency >= 3"));
    }
    if report.star_transitive {
        for local in &report.local_actions {
            if local.valency > 0
                && (local.order != factorial(local.valency)
                    || local.valency >= 2 && local.kind != ActionKind::Symmetric)
            {
                bad.push(format!("{name}: star but local action at {} is not symmetric", local.vertex));
            }
        }
    }
    if connected_thick && report.star_transitive && report.stedge_transitive && g.is_regular() && report.max_local_s < 3
    {
        bad.push(format!("{name}: both properties, regular, but s = {}", report.max_local_s));
    }
    (bad, true)
}

fn property_corpus(cfg: &CheckConfig) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pairs: Vec<(String, Graph, PermGroup)> = Vec::new();
    for i in 0..240 {
        let g = random_graph(&mut rng);
        let aut = automorphism_group(&g, &cfg.limits).unwrap();
        if i % 3 == 0 {
            let x = aut.random_element(&mut rng);
            let sub = PermGroup::from_generators(g.n(), vec![x]).unwrap();
            pairs.push((format!("random #{i} (cyclic subgroup)"), g.clone(), sub));
        }
        pairs.push((format!("random #{i}"), g, aut));
    }
    let random_count = pairs.len();
    for inst in family_corpus(&cfg.limits) {
        let aut = automorphism_group(&inst.graph, &cfg.limits).unwrap();
        if let Some(grp) = &inst.group {
            pairs.push((format!("{} (attached group)", inst.name), inst.graph.clone(), grp.clone()));
        }
        pairs.push((inst.name.clone(), inst.graph, aut));
    }
    let mut violations = Vec::new();
    let mut reported = 0;
    for (name, g, grp) in &pairs {
        let (bad, ok) = property_violations(name, g, grp, cfg, &mut rng);
        violations.extend(bad);
        reported += usize::from(ok);
    }
    let mut detail = vec![format!(
        "{} pairs checked ({random_count} random, {} from families), {reported} with full reports, {} violations",
        pairs.len(),
        pairs.len() - random_count,
        violations.len()
    )];
    detail.extend(violations.iter().take(20).cloned());
    Outcome {
        passed: violations.is_empty(),
        detail,
    }
}

fn exhaustive_small_graphs(limits: &Limits) -> Outcome {
    const EXPECTED_CONNECTED: [u64; 8] = [0, 1, 1, 4, 38, 728, 26704, 1866256];
    let mut passed = true;
    let mut detail = Vec::new();
    for (n, &expected) in EXPECTED_CONNECTED.iter().enumerate().skip(1) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let (connected, mismatches) = (0u64..1 << pairs.len())
            .into_par_iter()
            .map(|mask| {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                if !g.is_connected() {
                    return (0u64, 0u64);
                }
                let fast = automorphism_group(&g, limits).unwrap().order();
                let brute = count_automorphisms_brute(&g).unwrap();
                (1, u64::from(fast != BigUint::from(brute)))
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        let ok = connected == expected && mismatches == 0;
        passed &= ok;
        detail.push(format!("n = {n}: {connected} connected graphs, {mismatches} mismatches"));
    }
    Outcome { passed, detail }
}

fn main() -> ExitCode {
    let cfg = CheckConfig::default();
    let secs = Duration::from_secs;
    let mut results = Vec::new();
    results.push(criterion(1, "Petersen graph", secs(1), || {
        run_items("vertex-transitive", Some(&["Petersen = O_3"]), &cfg)
    }));
    results.push(criterion(2, "Heawood graph", secs(1), || {
        run_items("vertex-transitive", Some(&["Heawood = PG(2,2) incidence"]), &cfg)
    }));
    results.push(criterion(3, "odd graph O_4", secs(5), || {
        run_items("vertex-transitive", Some(&["O_4 under S_7"]), &cfg)
    }));
    results.push(criterion(4, "PG(2,3) incidence graph", secs(30), || {
        run_items("vertex-transitive", Some(&["PG(2,3) incidence"]), &cfg)
    }));
    results.push(criterion(5, "generalized quadrangle of bivalency {3,5}", secs(60), || {
        run_items("vertex-intransitive", Some(&["GQ(2,4) incidence"]), &cfg)
    }));
    for (title, item) in [
        ("Johnson-type incidence graph", "Gamma_{3,7} under S_7"),
        ("Hamming clique incidence graph", "H(3,4) clique incidence under S_4 wr S_3"),
    ] {
        results.push(criterion(6, title, secs(30), || {
            run_items("vertex-intransitive", Some(&[item]), &cfg)
        }));
    }
    results.push(criterion(7, "small-valency suite", secs(10), || {
        run_items("small-valency", None, &cfg)
    }));
    results.push(criterion(8, "coset graph suite", secs(120), || run_items("coset", None, &cfg)));
    results.push(criterion(9, "property corpus", secs(600), || property_corpus(&cfg)));
    results.push(criterion(10, "automorphism orders on all connected graphs up to 7 vertices", secs(600), || {
        exhaustive_small_graphs(&cfg.limits)
    }));
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
