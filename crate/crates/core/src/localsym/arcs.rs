use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{validate, vertex_orbit_labels, CheckConfig, LocalSymError};
use crate::graph::Graph;
use crate::group::PermGroup;

/// Local s-arc transitivity per vertex orbit.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SArcReport {
    /// `(representative, s)` for each vertex orbit: the largest `s` up to
    /// the cap such that the stabiliser of the representative is transitive
    /// on the (non-empty) sets of t-arcs starting there, for all `t <= s`.
    pub per_orbit: Vec<(usize, usize)>,
    /// Minimum over the orbits.
    pub max_local_s: usize,
    /// Set when the group is vertex-transitive.
    pub s_transitive: Option<usize>,
    /// The graph is a cycle, transitive on s-arcs for every s; values are
    /// reported at the cap.
    pub cycle: bool,
    pub cap: usize,
}

pub fn local_s_arc_transitivity(
    g: &Graph,
    group: &PermGroup,
    cfg: &CheckConfig,
) -> Result<SArcReport, LocalSymError> {
    validate(g, group)?;
    let cap = cfg.limits.max_s;
    let (_, orbits) = vertex_orbit_labels(group);
    let reps: Vec<usize> = orbits.iter().map(|o| o[0]).collect();
    let per_orbit = cfg
        .execution
        .map(&reps, |&v| local_s_at(g, group, v, cap).map(|s| (v, s)))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let max_local_s = per_orbit.iter().map(|&(_, s)| s).min().unwrap_or(0);
    Ok(SArcReport {
        max_local_s,
        s_transitive: (orbits.len() == 1).then_some(max_local_s),
        cycle: g.n() >= 3 && g.is_regular() && g.degree(0) == 2 && g.is_connected(),
        per_orbit,
        cap,
    })
}

fn local_s_at(g: &Graph, group: &PermGroup, v: usize, cap: usize) -> Result<usize, LocalSymError> {
    // prefixes of one long arc serve every s
    let longest: Vec<usize> = (1..=cap)
        .rev()
        .find_map(|s| g.s_arcs_from(v, s).next())
        .unwrap_or_else(|| vec![v]);
    let rebased = group.with_base_prefix(&longest);
    let gv = rebased.pointwise_stabiliser(&[v])?.order();
    let mut best = 0;
    for s in 1..=cap {
        let count = g.count_s_arcs_from(v, s);
        if count == 0 || s >= longest.len() {
            break;
        }
        let stab = rebased.pointwise_stabiliser(&longest[..=s])?.order();
        if &gv / stab != BigUint::from(count) {
            break;
        }
        best = s;
    }
    Ok(best)
}
