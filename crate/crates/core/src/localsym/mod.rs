//! Star and edge-star transitivity relative to a group of automorphisms,
//! s-arc transitivity, stabiliser towers and classification.

mod arcs;
mod classify;
mod direct;
mod fast;
mod report;
mod tower;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::autgroup::AutError;
use crate::graph::Graph;
use crate::group::{GroupError, PermGroup};
use crate::limits::Limits;
use crate::par::Execution;

pub use arcs::{local_s_arc_transitivity, SArcReport};
pub use classify::{classify_instance, TheoremCase};
pub use direct::{is_star_transitive_direct, is_stedge_transitive_direct};
pub use fast::{is_star_transitive_fast, is_stedge_transitive_fast};
pub use report::{analyze, CheckPair, GroupSource, LocalAction, SymmetryReport, REPORT_SCHEMA};
pub use tower::{stabiliser_tower, StabiliserTower};

#[derive(Debug, Error)]
pub enum LocalSymError {
    #[error("group has degree {group} but the graph has {graph} vertices")]
    DegreeMismatch { group: usize, graph: usize },
    #[error("generator {generator} is not an automorphism of the graph")]
    NotAutomorphism { generator: usize },
    #[error("vertex {vertex} has valency {valency}, above the direct-check cap of {cap}")]
    ValencyCap {
        vertex: usize,
        valency: usize,
        cap: usize,
    },
    #[error("{count} candidate maps exceed the direct-check cap of {cap}")]
    MapCap { count: u64, cap: u64 },
    #[error("fast check needs {0}")]
    FastHypothesis(String),
    #[error("{u} and {v} are not adjacent")]
    NotAnEdge { u: usize, v: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Aut(#[from] AutError),
}

/// Caps and execution mode for the checks.
#[derive(Clone, Debug, Default)]
pub struct CheckConfig {
    pub limits: Limits,
    pub execution: Execution,
}

/// A star isomorphism `st(v1) -> st(v2)` as a neighbour bijection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarIso {
    pub source: usize,
    pub target: usize,
    /// Pairs `(x, y)`: the edge `{source, x}` goes to `{target, y}`.
    pub neighbours: Vec<(usize, usize)>,
}

/// An edge-star isomorphism `st({u1,v1}) -> st({u2,v2})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeStarIso {
    pub source: (usize, usize),
    pub target: (usize, usize),
    /// Whether `u1` goes to `v2` rather than `u2`.
    pub swapped: bool,
    /// Bijection of the other neighbours of `u1`.
    pub at_u: Vec<(usize, usize)>,
    /// Bijection of the other neighbours of `v1`.
    pub at_v: Vec<(usize, usize)>,
}

/// Outcome of a definitional check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Check<W> {
    Holds,
    /// A map that no group element realises.
    Fails(W),
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn counterexample(&self) -> Option<&W> {
        match self {
            Check::Holds => None,
            Check::Fails(w) => Some(w),
        }
    }
}

/// The incident edges of `v`, each as `(v, x)`.
pub fn open_star(g: &Graph, v: usize) -> Vec<(usize, usize)> {
    g.neighbors(v).iter().map(|&x| (v, x)).collect()
}

/// The edges incident to `u` or `v`, each listed once with the edge itself
/// first.
pub fn edge_star(g: &Graph, u: usize, v: usize) -> Result<Vec<(usize, usize)>, LocalSymError> {
    if !g.has_edge(u, v) {
        return Err(LocalSymError::NotAnEdge { u, v });
    }
    let mut out = vec![(u.min(v), u.max(v))];
    for &(a, b) in [(u, v), (v, u)].iter() {
        out.extend(g.neighbors(a).iter().filter(|&&x| x != b).map(|&x| (a.min(x), a.max(x))));
    }
    Ok(out)
}

pub(crate) fn validate(g: &Graph, group: &PermGroup) -> Result<(), LocalSymError> {
    if group.degree() != g.n() {
        return Err(LocalSymError::DegreeMismatch {
            group: group.degree(),
            graph: g.n(),
        });
    }
    match group.generators().iter().position(|s| !g.is_automorphism(s)) {
        Some(generator) => Err(LocalSymError::NotAutomorphism { generator }),
        None => Ok(()),
    }
}

/// Orbit index of every vertex; orbits are numbered by smallest member.
pub(crate) fn vertex_orbit_labels(group: &PermGroup) -> (Vec<usize>, Vec<Vec<usize>>) {
    let orbits = group.orbits();
    let mut label = vec![0; group.degree()];
    for (i, orbit) in orbits.iter().enumerate() {
        for &p in orbit {
            label[p] = i;
        }
    }
    (label, orbits)
}

/// Orbits of the group on unordered edges, as indices into `g.edges()`,
/// numbered by smallest member.
pub(crate) fn edge_orbit_labels(g: &Graph, group: &PermGroup) -> Vec<usize> {
    let edges = g.edges();
    let index = |a: usize, b: usize| edges.binary_search(&(a.min(b), a.max(b))).unwrap();
    let mut label = vec![usize::MAX; edges.len()];
    let mut next = 0;
    for start in 0..edges.len() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        let mut stack = vec![start];
        while let Some(e) = stack.pop() {
            let (a, b) = edges[e];
            for s in group.generators() {
                let f = index(s.apply(a), s.apply(b));
                if label[f] == usize::MAX {
                    label[f] = next;
                    stack.push(f);
                }
            }
        }
        next += 1;
    }
    label
}

/// The `index`-th permutation of `0..k` in lexicographic order.
pub(crate) fn nth_permutation(k: usize, mut index: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..k).collect();
    let mut out = Vec::with_capacity(k);
    for i in (0..k).rev() {
        let f = factorial_u64(i);
        let j = (index / f) as usize;
        index %= f;
        out.push(pool.remove(j));
    }
    out
}

pub(crate) fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).fold(1u64, |acc, k| acc.saturating_mul(k))
}

/// Serialises big integers as decimal strings.
pub(crate) mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests;
