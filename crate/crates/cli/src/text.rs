//! Human-readable rendering of a report.

use std::fmt::Write as _;

use startrans::localsym::{CheckPair, SymmetryReport};

fn verdict(name: &str, value: bool, checks: &CheckPair) -> String {
    let show = |x: Option<bool>| x.map_or("skipped".to_string(), |b| b.to_string());
    let mut line = format!(
        "{name}: {value} (direct {}, fast {})",
        show(checks.direct),
        show(checks.fast)
    );
    for reason in &checks.skipped {
        let _ = write!(line, "; {reason}");
    }
    line
}

pub fn report(r: &SymmetryReport) -> String {
    let mut out = String::new();
    let source = match r.group_source {
        startrans::localsym::GroupSource::FullAut => "full automorphism group",
        startrans::localsym::GroupSource::Supplied => "supplied group",
    };
    let _ = writeln!(out, "group: {source}, order {}", r.group_order);
    let girth = r.girth.map_or("none".to_string(), |g| g.to_string());
    let _ = writeln!(
        out,
        "graph: {} vertices, {} edges, connected {}, girth {girth}",
        r.vertices, r.edges, r.connected
    );
    let profile: Vec<String> = r.valency_profile.iter().map(|(k, n)| format!("{n} of valency {k}")).collect();
    let _ = writeln!(out, "valencies: {}", profile.join(", "));
    let _ = writeln!(out, "vertex orbits: {}", r.vertex_orbits);
    let _ = writeln!(out, "{}", verdict("star-transitive", r.star_transitive, &r.star_checks));
    let _ = writeln!(out, "{}", verdict("edge-star-transitive", r.stedge_transitive, &r.stedge_checks));
    if let Some(c) = &r.star_counterexample {
        let _ = writeln!(
            out,
            "  unrealised star map: {} -> {} with neighbours {:?}",
            c.source, c.target, c.neighbours
        );
    }
    if let Some(c) = &r.stedge_counterexample {
        let _ = writeln!(
            out,
            "  unrealised edge-star map: {:?} -> {:?} (swapped {})",
            c.source, c.target, c.swapped
        );
    }
    let s = r.s_transitive.map_or("n/a".to_string(), |s| s.to_string());
    let _ = write!(out, "local s: {}, s-transitive: {s}", r.max_local_s);
    if let Some(note) = &r.s_annotation {
        let _ = write!(out, " ({note})");
    }
    out.push('\n');
    for a in &r.local_actions {
        let _ = writeln!(
            out,
            "local action at {} (valency {}): order {}, {:?}, kernel {}",
            a.vertex, a.valency, a.order, a.kind, a.kernel_order
        );
    }
    for t in &r.towers {
        let _ = writeln!(
            out,
            "tower at {{{}, {}}}: |G_v| {}, |G_w| {}, |G_vw| {}, |G_v^[1]| {}, |G_v^[2]| {}, |G_v^[3]| {}, |G_w^[1]| {}, |G_w^[2]| {}, |G_w^[3]| {}, |G_vw^[1]| {}",
            t.v, t.w, t.g_v, t.g_w, t.g_vw, t.g_v1, t.g_v2, t.g_v3, t.g_w1, t.g_w2, t.g_w3, t.g_vw1
        );
    }
    let _ = writeln!(out, "classification: {}", r.theorem_case);
    for m in &r.mismatches {
        let _ = writeln!(out, "mismatch: {m}");
    }
    out
}
