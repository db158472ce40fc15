use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::arcs::{local_s_arc_transitivity, SArcReport};
use super::classify::{classify, Facts, TheoremCase};
use super::direct::{is_star_transitive_direct, is_stedge_transitive_direct};
use super::fast::{is_star_transitive_fast, is_stedge_transitive_fast};
use super::tower::{stabiliser_tower, StabiliserTower};
use super::{
    decimal, validate, vertex_orbit_labels, CheckConfig, EdgeStarIso, LocalSymError, StarIso,
};
use crate::autgroup::automorphism_group;
use crate::graph::Graph;
use crate::group::{identify_with_kernel, ActionKind, PermGroup};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GroupSource {
    FullAut,
    Supplied,
}

/// Results of the definitional and the characterisation check; `None`
/// when a check was not applicable (cap or hypothesis).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckPair {
    pub direct: Option<bool>,
    pub fast: Option<bool>,
    /// Why a check was skipped.
    pub skipped: Vec<String>,
}

impl CheckPair {
    fn verdict(&self) -> bool {
        self.direct.or(self.fast).expect("at least one check ran")
    }

    fn agree(&self) -> bool {
        match (self.direct, self.fast) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }
}

/// Action of a vertex stabiliser on the neighbours of the vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalAction {
    pub vertex: usize,
    pub valency: usize,
    #[serde(with = "decimal")]
    pub order: BigUint,
    pub kind: ActionKind,
    #[serde(with = "decimal")]
    pub kernel_order: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub schema: u32,
    pub group_source: GroupSource,
    #[serde(with = "decimal")]
    pub group_order: BigUint,
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub girth: Option<usize>,
    pub valency_profile: BTreeMap<usize, usize>,
    pub vertex_orbits: usize,
    pub star_transitive: bool,
    pub stedge_transitive: bool,
    pub star_checks: CheckPair,
    pub stedge_checks: CheckPair,
    pub star_counterexample: Option<StarIso>,
    pub stedge_counterexample: Option<EdgeStarIso>,
    pub max_local_s: usize,
    pub s_transitive: Option<usize>,
    /// `"cycle"` when every s is attained and values sit at the cap.
    pub s_annotation: Option<String>,
    pub arcs: SArcReport,
    /// One tower per vertex orbit, at the representative and its smallest
    /// neighbour.
    pub towers: Vec<StabiliserTower>,
    pub local_actions: Vec<LocalAction>,
    pub theorem_case: TheoremCase,
    /// Disagreements between the direct and fast checks.
    pub mismatches: Vec<String>,
}

impl SymmetryReport {
    /// Whether the report records a classification contradiction or a
    /// direct/fast disagreement.
    pub fn is_falsification(&self) -> bool {
        self.theorem_case.is_contradiction() || !self.mismatches.is_empty()
    }
}

/// Full report for `g` under `group`, or under the full automorphism group
/// when `group` is `None`.
pub fn analyze(
    g: &Graph,
    group: Option<&PermGroup>,
    cfg: &CheckConfig,
) -> Result<SymmetryReport, LocalSymError> {
    let (owned, group_source);
    let group = match group {
        Some(grp) => {
            group_source = GroupSource::Supplied;
            grp
        }
        None => {
            owned = automorphism_group(g, &cfg.limits)?;
            group_source = GroupSource::FullAut;
            &owned
        }
    };
    validate(g, group)?;

    let mut star_checks = CheckPair {
        direct: None,
        fast: Some(is_star_transitive_fast(g, group)?),
        skipped: Vec::new(),
    };
    let mut star_counterexample = None;
    match is_star_transitive_direct(g, group, cfg) {
        Ok(check) => {
            star_checks.direct = Some(check.holds());
            star_counterexample = check.counterexample().cloned();
        }
        Err(e @ (LocalSymError::ValencyCap { .. } | LocalSymError::MapCap { .. })) => {
            star_checks.skipped.push(format!("direct: {e}"))
        }
        Err(e) => return Err(e),
    }
    let mut stedge_checks = CheckPair {
        direct: None,
        fast: None,
        skipped: Vec::new(),
    };
    match is_stedge_transitive_fast(g, group) {
        Ok(b) => stedge_checks.fast = Some(b),
        Err(e @ LocalSymError::FastHypothesis(_)) => stedge_checks.skipped.push(format!("fast: {e}")),
        Err(e) => return Err(e),
    }
    let mut stedge_counterexample = None;
    match is_stedge_transitive_direct(g, group, cfg) {
        Ok(check) => {
            stedge_checks.direct = Some(check.holds());
            stedge_counterexample = check.counterexample().cloned();
        }
        Err(e @ (LocalSymError::ValencyCap { .. } | LocalSymError::MapCap { .. })) => {
            stedge_checks.skipped.push(format!("direct: {e}"))
        }
        Err(e) => return Err(e),
    }
    if stedge_checks.direct.is_none() && stedge_checks.fast.is_none() {
        // neither applies; nothing sound to report
        return Err(LocalSymError::FastHypothesis(format!(
            "a definitional check within caps or the fast hypotheses ({})",
            stedge_checks.skipped.join("; ")
        )));
    }
    let mut mismatches = Vec::new();
    if !star_checks.agree() {
        mismatches.push(format!("star: direct {:?} vs fast {:?}", star_checks.direct, star_checks.fast));
    }
    if !stedge_checks.agree() {
        mismatches.push(format!(
            "edge-star: direct {:?} vs fast {:?}",
            stedge_checks.direct, stedge_checks.fast
        ));
    }

    let arcs = local_s_arc_transitivity(g, group, cfg)?;
    let (_, orbits) = vertex_orbit_labels(group);
    let reps: Vec<usize> = orbits.iter().map(|o| o[0]).collect();
    let towers = cfg
        .execution
        .map(&reps, |&v| match g.neighbors(v).first() {
            Some(&w) => stabiliser_tower(g, group, v, w).map(Some),
            None => Ok(None),
        })
        .into_iter()
        .filter_map(Result::transpose)
        .collect::<Result<Vec<_>, _>>()?;
    let local_actions = cfg
        .execution
        .map(&reps, |&v| -> Result<LocalAction, LocalSymError> {
            let (local, kernel) = group.point_stabiliser(v)?.induced_action(g.neighbors(v))?;
            let id = identify_with_kernel(&local, g.degree(v), kernel);
            Ok(LocalAction {
                vertex: v,
                valency: g.degree(v),
                order: id.order,
                kind: id.kind,
                kernel_order: id.kernel_order,
            })
        })
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;

    let edge_tower = match g.edges().first() {
        Some(&(v, w)) => match towers.iter().find(|t| t.v == v && t.w == w) {
            Some(t) => Some(t.clone()),
            None => Some(stabiliser_tower(g, group, v, w)?),
        },
        None => None,
    };
    let facts = Facts {
        star: star_checks.verdict(),
        stedge: stedge_checks.verdict(),
        vertex_orbits: orbits.len(),
        arcs: &arcs,
        tower: edge_tower.as_ref(),
    };
    let theorem_case = classify(g, &facts, cfg)?;

    Ok(SymmetryReport {
        schema: REPORT_SCHEMA,
        group_source,
        group_order: group.order(),
        vertices: g.n(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        girth: g.girth(),
        valency_profile: g.valency_profile(),
        vertex_orbits: orbits.len(),
        star_transitive: facts.star,
        stedge_transitive: facts.stedge,
        star_checks,
        stedge_checks,
        star_counterexample,
        stedge_counterexample,
        max_local_s: arcs.max_local_s,
        s_transitive: arcs.s_transitive,
        s_annotation: arcs.cycle.then(|| "cycle".to_string()),
        arcs,
        towers,
        local_actions,
        theorem_case,
        mismatches,
    })
}
