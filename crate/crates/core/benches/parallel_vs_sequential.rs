use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use startrans::autgroup::automorphism_group;
use startrans::families;
use startrans::localsym::{is_star_transitive_direct, is_stedge_transitive_direct};
use startrans::{analyze, CheckConfig, Execution, Limits};

fn direct_checks(c: &mut Criterion) {
    let limits = Limits::default();
    let instances = [
        families::odd_graph(4, &limits).unwrap(),
        families::pg_incidence(3).unwrap(),
        families::hermitian_gq().unwrap(),
    ];
    let mut group = c.benchmark_group("direct checks");
    for inst in &instances {
        let aut = automorphism_group(&inst.graph, &limits).unwrap();
        for execution in [Execution::Sequential, Execution::Parallel] {
            let cfg = CheckConfig { limits: limits.clone(), execution };
            group.bench_with_input(BenchmarkId::new(format!("{execution:?}"), &inst.name), &cfg, |b, cfg| {
                b.iter(|| {
                    let star = is_star_transitive_direct(&inst.graph, &aut, cfg).unwrap();
                    let stedge = is_stedge_transitive_direct(&inst.graph, &aut, cfg).unwrap();
                    (star.holds(), stedge.holds())
                })
            });
        }
    }
    group.finish();
}

fn full_report(c: &mut Criterion) {
    let limits = Limits::default();
    let inst = families::hamming_clique_incidence(3, 4, &limits).unwrap();
    let grp = inst.group.clone().unwrap();
    let mut group = c.benchmark_group("report");
    group.sample_size(20);
    for execution in [Execution::Sequential, Execution::Parallel] {
        let cfg = CheckConfig { limits: limits.clone(), execution };
        group.bench_function(BenchmarkId::new(format!("{execution:?}"), &inst.name), |b| {
            b.iter(|| analyze(&inst.graph, Some(&grp), &cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, direct_checks, full_report);
criterion_main!(benches);
