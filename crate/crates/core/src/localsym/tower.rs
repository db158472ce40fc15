use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{decimal, validate, LocalSymError};
use crate::graph::Graph;
use crate::group::PermGroup;

/// Orders of the stabilisers around an edge `{v, w}`. `G_x^[i]` fixes the
/// ball of radius `i` about `x` pointwise, and `G_vw^[1]` fixes both
/// neighbourhoods.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabiliserTower {
    pub v: usize,
    pub w: usize,
    #[serde(with = "decimal")]
    pub g_v: BigUint,
    #[serde(with = "decimal")]
    pub g_w: BigUint,
    #[serde(with = "decimal")]
    pub g_vw: BigUint,
    #[serde(with = "decimal")]
    pub g_v1: BigUint,
    #[serde(with = "decimal")]
    pub g_v2: BigUint,
    #[serde(with = "decimal")]
    pub g_v3: BigUint,
    #[serde(with = "decimal")]
    pub g_w1: BigUint,
    #[serde(with = "decimal")]
    pub g_w2: BigUint,
    #[serde(with = "decimal")]
    pub g_w3: BigUint,
    #[serde(with = "decimal")]
    pub g_vw1: BigUint,
    /// `G_vw^[1]` moves some vertex at distance 2 from `v`.
    pub g_vw1_moves_sphere2_v: bool,
    /// `G_vw^[1]` moves some vertex at distance 2 from `w`.
    pub g_vw1_moves_sphere2_w: bool,
}

pub fn stabiliser_tower(
    g: &Graph,
    group: &PermGroup,
    v: usize,
    w: usize,
) -> Result<StabiliserTower, LocalSymError> {
    validate(g, group)?;
    if v >= g.n() || w >= g.n() || !g.has_edge(v, w) {
        return Err(LocalSymError::NotAnEdge { u: v, v: w });
    }
    let order_fixing = |points: &[usize]| -> Result<BigUint, LocalSymError> {
        Ok(group.pointwise_stabiliser(points)?.order())
    };
    let ball = |x: usize, r: usize| g.ball(x, r);
    let both: Vec<usize> = ball(v, 1)
        .into_iter()
        .chain(ball(w, 1))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let gvw1 = group.pointwise_stabiliser(&both)?;
    Ok(StabiliserTower {
        v,
        w,
        g_v: order_fixing(&[v])?,
        g_w: order_fixing(&[w])?,
        g_vw: order_fixing(&[v, w])?,
        g_v1: order_fixing(&ball(v, 1))?,
        g_v2: order_fixing(&ball(v, 2))?,
        g_v3: order_fixing(&ball(v, 3))?,
        g_w1: order_fixing(&ball(w, 1))?,
        g_w2: order_fixing(&ball(w, 2))?,
        g_w3: order_fixing(&ball(w, 3))?,
        g_vw1: gvw1.order(),
        g_vw1_moves_sphere2_v: !gvw1.acts_trivially_on(&g.sphere(v, 2)),
        g_vw1_moves_sphere2_w: !gvw1.acts_trivially_on(&g.sphere(w, 2)),
    })
}
