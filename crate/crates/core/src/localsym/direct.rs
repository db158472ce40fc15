use std::collections::HashMap;

use super::{
    edge_orbit_labels, factorial_u64, nth_permutation, validate, vertex_orbit_labels, Check,
    CheckConfig, EdgeStarIso, LocalSymError, StarIso,
};
use crate::graph::Graph;
use crate::group::{PermGroup, TransporterChain};

fn check_valency(g: &Graph, v: usize, cfg: &CheckConfig) -> Result<(), LocalSymError> {
    let cap = cfg.limits.direct_valency;
    if g.degree(v) > cap {
        return Err(LocalSymError::ValencyCap {
            vertex: v,
            valency: g.degree(v),
            cap,
        });
    }
    Ok(())
}

fn check_maps(count: u64, cfg: &CheckConfig) -> Result<(), LocalSymError> {
    if count > cfg.limits.direct_maps {
        return Err(LocalSymError::MapCap {
            count,
            cap: cfg.limits.direct_maps,
        });
    }
    Ok(())
}

/// Tests every star isomorphism against the group.
///
/// Star isomorphisms between vertices of one orbit reduce to those from an
/// orbit representative to itself; a vertex of matching valency in another
/// orbit is an immediate counterexample.
pub fn is_star_transitive_direct(
    g: &Graph,
    group: &PermGroup,
    cfg: &CheckConfig,
) -> Result<Check<StarIso>, LocalSymError> {
    validate(g, group)?;
    let (label, orbits) = vertex_orbit_labels(group);
    for orbit in &orbits {
        check_valency(g, orbit[0], cfg)?;
        check_maps(factorial_u64(g.degree(orbit[0])), cfg)?;
    }
    for orbit in &orbits {
        let v1 = orbit[0];
        let k = g.degree(v1);
        if let Some(v2) = (0..g.n()).find(|&x| g.degree(x) == k && label[x] != label[v1]) {
            let neighbours = g.neighbors(v1).iter().copied().zip(g.neighbors(v2).iter().copied()).collect();
            return Ok(Check::Fails(StarIso {
                source: v1,
                target: v2,
                neighbours,
            }));
        }
        let nbrs = g.neighbors(v1);
        let mut sources = vec![v1];
        sources.extend_from_slice(nbrs);
        let tc = TransporterChain::new(group, &sources);
        let failure = cfg.execution.find_first(0..factorial_u64(k), |idx| {
            let p = nth_permutation(k, idx);
            let mut targets = vec![v1];
            targets.extend(p.iter().map(|&j| nbrs[j]));
            (!tc.exists(&targets)).then(|| StarIso {
                source: v1,
                target: v1,
                neighbours: nbrs.iter().zip(&targets[1..]).map(|(&a, &b)| (a, b)).collect(),
            })
        });
        if let Some(w) = failure {
            return Ok(Check::Fails(w));
        }
    }
    Ok(Check::Holds)
}

/// Tests every edge-star isomorphism against the group.
///
/// Maps are enumerated from each edge-orbit representative to itself in
/// both orientations where valencies allow. When the two endpoints share a
/// neighbour the two bijections may disagree on it; such maps cannot be
/// realised and count as failures.
pub fn is_stedge_transitive_direct(
    g: &Graph,
    group: &PermGroup,
    cfg: &CheckConfig,
) -> Result<Check<EdgeStarIso>, LocalSymError> {
    validate(g, group)?;
    let edges = g.edges();
    let label = edge_orbit_labels(g, group);
    let mut reps: Vec<usize> = Vec::new();
    for (e, &l) in label.iter().enumerate() {
        if l == reps.len() {
            reps.push(e);
        }
    }
    let pattern = |(a, b): (usize, usize)| {
        let (x, y) = (g.degree(a), g.degree(b));
        (x.min(y), x.max(y))
    };
    let counts: Vec<(u64, u64, u64)> = reps
        .iter()
        .map(|&e| {
            let (u, v) = edges[e];
            let ra = factorial_u64(g.degree(u) - 1);
            let rb = factorial_u64(g.degree(v) - 1);
            let orient = if g.degree(u) == g.degree(v) { 2 } else { 1 };
            (ra, rb, orient)
        })
        .collect();
    for (&e, &(ra, rb, orient)) in reps.iter().zip(&counts) {
        let (u, v) = edges[e];
        check_valency(g, u, cfg)?;
        check_valency(g, v, cfg)?;
        check_maps(ra.saturating_mul(rb).saturating_mul(orient), cfg)?;
    }

    for (&e1, &(ra, rb, orient)) in reps.iter().zip(&counts) {
        let (u, v) = edges[e1];
        if let Some(e2) = (0..edges.len()).find(|&f| pattern(edges[f]) == pattern(edges[e1]) && label[f] != label[e1]) {
            let (mut u2, mut v2) = edges[e2];
            let swapped = g.degree(u) != g.degree(u2);
            if swapped {
                std::mem::swap(&mut u2, &mut v2);
            }
            return Ok(Check::Fails(EdgeStarIso {
                source: (u, v),
                target: (u2, v2),
                swapped,
                at_u: zip_others(g, u, v, u2, v2),
                at_v: zip_others(g, v, u, v2, u2),
            }));
        }
        let a: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();
        let b: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
        let mut sources = vec![u, v];
        sources.extend(&a);
        sources.extend(&b);
        let tc = TransporterChain::new(group, &sources);
        let per_orient = ra * rb;
        let failure = cfg.execution.find_first(0..per_orient * orient, |idx| {
            let swapped = idx >= per_orient;
            let rem = idx % per_orient;
            let pa = nth_permutation(a.len(), rem / rb);
            let pb = nth_permutation(b.len(), rem % rb);
            let (tu, tv, ta, tb) = if swapped { (v, u, &b, &a) } else { (u, v, &a, &b) };
            let at_u: Vec<(usize, usize)> = a.iter().zip(&pa).map(|(&x, &j)| (x, ta[j])).collect();
            let at_v: Vec<(usize, usize)> = b.iter().zip(&pb).map(|(&x, &j)| (x, tb[j])).collect();
            let mut pairs = vec![(u, tu), (v, tv)];
            pairs.extend(&at_u);
            pairs.extend(&at_v);
            let realised = consistent_targets(&pairs, tc.sources()).is_some_and(|t| tc.exists(&t));
            (!realised).then_some(EdgeStarIso {
                source: (u, v),
                target: (u, v),
                swapped,
                at_u,
                at_v,
            })
        });
        if let Some(w) = failure {
            return Ok(Check::Fails(w));
        }
    }
    Ok(Check::Holds)
}

/// Pairs the other neighbours of `a` with those of `a2` in listed order.
fn zip_others(g: &Graph, a: usize, b: usize, a2: usize, b2: usize) -> Vec<(usize, usize)> {
    let xs = g.neighbors(a).iter().copied().filter(|&x| x != b);
    let ys = g.neighbors(a2).iter().copied().filter(|&y| y != b2);
    xs.zip(ys).collect()
}

/// Targets in the order of `sources`, or `None` when the pairs do not
/// describe an injective map.
fn consistent_targets(pairs: &[(usize, usize)], sources: &[usize]) -> Option<Vec<usize>> {
    let mut forward: HashMap<usize, usize> = HashMap::new();
    let mut backward: HashMap<usize, usize> = HashMap::new();
    for &(s, t) in pairs {
        if *forward.entry(s).or_insert(t) != t || *backward.entry(t).or_insert(s) != s {
            return None;
        }
    }
    Some(sources.iter().map(|s| forward[s]).collect())
}
