use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::arcs::{local_s_arc_transitivity, SArcReport};
use super::fast::{is_star_transitive_fast, is_stedge_transitive_fast};
use super::tower::{stabiliser_tower, StabiliserTower};
use super::{direct, validate, CheckConfig, LocalSymError};
use crate::autgroup::automorphism_group;
use crate::graph::Graph;
use crate::group::{factorial, PermGroup};

/// Which shape of the classification an instance with both properties
/// matches.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TheoremCase {
    /// The graph is disconnected or lacks one of the two properties.
    NotApplicable { reason: String },
    /// Valency at least 3, vertex-transitive group.
    VertexTransitive { case: u8 },
    /// Minimum valency at least 3, group not vertex-transitive. `v` is the
    /// endpoint playing the role of valency `r`.
    VertexIntransitive { case: u8, v: usize, w: usize },
    /// Minimum valency one or two.
    SmallValency { case: u8 },
    /// Both properties hold but no case matches, or a matched case's
    /// consequences fail.
    Contradiction { reason: String },
}

impl TheoremCase {
    pub fn is_contradiction(&self) -> bool {
        matches!(self, TheoremCase::Contradiction { .. })
    }
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremCase::NotApplicable { reason } => write!(f, "not applicable ({reason})"),
            TheoremCase::VertexTransitive { case } => write!(f, "vertex-transitive case ({case})"),
            TheoremCase::VertexIntransitive { case, v, w } => {
                write!(f, "vertex-intransitive case ({case}) at v = {v}, w = {w}")
            }
            TheoremCase::SmallValency { case } => write!(f, "small-valency case ({case})"),
            TheoremCase::Contradiction { reason } => write!(f, "contradiction: {reason}"),
        }
    }
}

/// Everything the classifier reads.
pub(crate) struct Facts<'a> {
    pub star: bool,
    pub stedge: bool,
    pub vertex_orbits: usize,
    pub arcs: &'a SArcReport,
    /// Tower at the smallest edge, if there is one.
    pub tower: Option<&'a StabiliserTower>,
}

/// Computes the facts for `(g, group)` and classifies.
pub fn classify_instance(
    g: &Graph,
    group: &PermGroup,
    cfg: &CheckConfig,
) -> Result<TheoremCase, LocalSymError> {
    validate(g, group)?;
    let star = is_star_transitive_fast(g, group)?;
    let stedge = match is_stedge_transitive_fast(g, group) {
        Ok(b) => b,
        Err(LocalSymError::FastHypothesis(_)) => {
            direct::is_stedge_transitive_direct(g, group, cfg)?.holds()
        }
        Err(e) => return Err(e),
    };
    let arcs = local_s_arc_transitivity(g, group, cfg)?;
    let tower = match g.edges().first() {
        Some(&(v, w)) => Some(stabiliser_tower(g, group, v, w)?),
        None => None,
    };
    let facts = Facts {
        star,
        stedge,
        vertex_orbits: group.orbits().len(),
        arcs: &arcs,
        tower: tower.as_ref(),
    };
    classify(g, &facts, cfg)
}

pub(crate) fn classify(
    g: &Graph,
    facts: &Facts,
    cfg: &CheckConfig,
) -> Result<TheoremCase, LocalSymError> {
    if g.n() == 0 || !g.is_connected() {
        return Ok(TheoremCase::NotApplicable {
            reason: "graph is empty or disconnected".into(),
        });
    }
    if !(facts.star && facts.stedge) {
        return Ok(TheoremCase::NotApplicable {
            reason: "not both star- and edge-star-transitive".into(),
        });
    }
    if g.min_valency() <= 2 {
        return small_valency(g, cfg);
    }
    let tower = facts.tower.expect("connected graph with valency >= 3 has edges");
    if facts.vertex_orbits == 1 {
        Ok(vertex_transitive(g, facts, tower))
    } else {
        Ok(vertex_intransitive(g, facts, tower))
    }
}

fn contradiction(reason: impl Into<String>) -> TheoremCase {
    TheoremCase::Contradiction {
        reason: reason.into(),
    }
}

fn vertex_transitive(g: &Graph, facts: &Facts, tower: &StabiliserTower) -> TheoremCase {
    let r = g.degree(0);
    let s = facts.arcs.s_transitive.unwrap_or(0);
    let gv = &tower.g_v;
    let is = |x: u32| *gv == BigUint::from(x);
    if *gv == factorial(r) * factorial(r - 1) && s == 3 {
        TheoremCase::VertexTransitive { case: 1 }
    } else if r == 3 && (4..=5).contains(&s) && (is(24) || is(48)) {
        TheoremCase::VertexTransitive { case: 2 }
    } else if r == 4 && (s == 4 || s == 7) && (is(432) || is(11664)) {
        TheoremCase::VertexTransitive { case: 3 }
    } else {
        contradiction(format!(
            "vertex-transitive of valency {r} with s = {s} and |G_v| = {gv} matches no case"
        ))
    }
}

fn vertex_intransitive(g: &Graph, facts: &Facts, tower: &StabiliserTower) -> TheoremCase {
    let (v, w) = (tower.v, tower.w);
    let (dv, dw) = (g.degree(v), g.degree(w));
    if facts.vertex_orbits != 2 || g.biregular_bipartition().is_none() || dv == dw {
        return contradiction("not vertex-transitive but not a biregular bipartite graph with two valencies");
    }
    if facts.arcs.max_local_s < 3 {
        return contradiction(format!(
            "locally only {}-arc transitive, expected at least 3",
            facts.arcs.max_local_s
        ));
    }
    let one = BigUint::from(1u32);
    if tower.g_vw1_moves_sphere2_v && tower.g_vw1_moves_sphere2_w {
        let valencies = (dv.min(dw), dv.max(dw));
        return if valencies == (3, 5) {
            TheoremCase::VertexIntransitive { case: 1, v, w }
        } else {
            contradiction(format!("case (1) shape with valencies {{{dv},{dw}}}, expected {{3,5}}"))
        };
    }
    if tower.g_vw1 == one {
        let (r, l) = (dv, dw);
        let expect_v = factorial(r) * factorial(l - 1);
        let expect_w = factorial(l) * factorial(r - 1);
        return if tower.g_v == expect_v && tower.g_w == expect_w {
            TheoremCase::VertexIntransitive { case: 2, v, w }
        } else {
            contradiction(format!(
                "G_vw^[1] = 1 but |G_v| = {}, |G_w| = {}; expected {expect_v} and {expect_w}",
                tower.g_v, tower.g_w
            ))
        };
    }
    // case (3), trying both orientations: v has valency r and G_w^[2] = 1
    for (a, b, da, db, gb2) in [(v, w, dv, dw, &tower.g_w2), (w, v, dw, dv, &tower.g_v2)] {
        if *gb2 != one {
            continue;
        }
        let full = factorial(da - 1).pow(db as u32 - 1);
        let half = (factorial(da - 1) / 2u32).pow(db as u32 - 1);
        let x = &tower.g_vw1;
        if x % &half == BigUint::from(0u32) && &full % x == BigUint::from(0u32) {
            return TheoremCase::VertexIntransitive { case: 3, v: a, w: b };
        }
    }
    if dv.min(dw) <= 5 {
        let (a, b) = if dv <= dw { (v, w) } else { (w, v) };
        TheoremCase::VertexIntransitive { case: 4, v: a, w: b }
    } else {
        contradiction(format!("valencies {{{dv},{dw}}} both exceed 5 and no case matches"))
    }
}

fn small_valency(g: &Graph, cfg: &CheckConfig) -> Result<TheoremCase, LocalSymError> {
    let n = g.n();
    let leaves = (0..n).filter(|&x| g.degree(x) == 1).count();
    if n >= 2 && g.edge_count() == n - 1 && leaves == n - 1 || n == 2 && g.edge_count() == 1 {
        return Ok(TheoremCase::SmallValency { case: 1 });
    }
    if n >= 3 && g.is_regular() && g.degree(0) == 2 {
        return Ok(TheoremCase::SmallValency { case: 2 });
    }
    let Some(smoothing) = g.smooth() else {
        return Ok(contradiction("minimum valency at most 2 but not a star, cycle or subdivision"));
    };
    let sigma = &smoothing.sigma;
    if sigma.n() == 0 || sigma.min_valency() < 3 {
        return Ok(contradiction("smoothed graph has a vertex of valency below 3"));
    }
    let aut = automorphism_group(sigma, &cfg.limits)?;
    let arcs = local_s_arc_transitivity(sigma, &aut, cfg)?;
    let arc_transitive = arcs.s_transitive.is_some_and(|s| s >= 1);
    let fully_symmetric = is_star_transitive_fast(sigma, &aut)?;
    Ok(if arc_transitive && fully_symmetric {
        TheoremCase::SmallValency { case: 3 }
    } else {
        contradiction("smoothed graph is not arc-transitive and locally fully symmetric")
    })
}
