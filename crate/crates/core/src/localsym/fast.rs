use super::{edge_orbit_labels, validate, vertex_orbit_labels, LocalSymError};
use crate::graph::Graph;
use crate::group::{factorial, PermGroup};

/// Star transitivity from local actions: every vertex stabiliser induces
/// the full symmetric group on its neighbours and vertices of equal
/// valency form one orbit.
pub fn is_star_transitive_fast(g: &Graph, group: &PermGroup) -> Result<bool, LocalSymError> {
    validate(g, group)?;
    let (label, orbits) = vertex_orbit_labels(group);
    for orbit in &orbits {
        let v = orbit[0];
        let k = g.degree(v);
        if (0..g.n()).any(|x| g.degree(x) == k && label[x] != label[v]) {
            return Ok(false);
        }
        let (local, _) = group.point_stabiliser(v)?.induced_action(g.neighbors(v))?;
        if local.order() != factorial(k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Edge-star transitivity from the action of edge stabilisers on the
/// neighbourhood of the edge. Needs minimum valency at least 3 and no
/// triangles.
pub fn is_stedge_transitive_fast(g: &Graph, group: &PermGroup) -> Result<bool, LocalSymError> {
    validate(g, group)?;
    if g.n() > 0 && g.min_valency() < 3 {
        return Err(LocalSymError::FastHypothesis(format!(
            "minimum valency at least 3, found {}",
            g.min_valency()
        )));
    }
    if g.girth().is_some_and(|girth| girth < 4) {
        return Err(LocalSymError::FastHypothesis("girth at least 4, found 3".into()));
    }
    let edges = g.edges();
    let label = edge_orbit_labels(g, group);
    let pattern = |(a, b): (usize, usize)| {
        let (x, y) = (g.degree(a), g.degree(b));
        (x.min(y), x.max(y))
    };
    let mut label_of_pattern = std::collections::BTreeMap::new();
    let mut reps = Vec::new();
    for (e, &edge) in edges.iter().enumerate() {
        if *label_of_pattern.entry(pattern(edge)).or_insert(label[e]) != label[e] {
            return Ok(false);
        }
        if label[e] == reps.len() {
            reps.push(edge);
        }
    }
    for (u, v) in reps {
        let (k, l) = (g.degree(u), g.degree(v));
        if k == l && group.transporter(&[(u, v), (v, u)])?.is_none() {
            return Ok(false);
        }
        let guv = group.pointwise_stabiliser(&[u, v])?;
        let a: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();
        let b: Vec<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
        let (side_a, _) = guv.induced_action(&a)?;
        let (side_b, _) = guv.induced_action(&b)?;
        let both: Vec<usize> = a.iter().chain(&b).copied().collect();
        let (joint, _) = guv.induced_action(&both)?;
        let (fa, fb) = (factorial(k - 1), factorial(l - 1));
        if side_a.order() != fa || side_b.order() != fb || joint.order() != fa * fb {
            return Ok(false);
        }
    }
    Ok(true)
}
