//! Graph automorphism groups by individualization and refinement, with an
//! exhaustive oracle for tiny graphs.

mod brute;
mod refine;

use thiserror::Error;

use crate::graph::Graph;
use crate::group::{orbits_under, PermGroup};
use crate::limits::Limits;
use crate::perm::Perm;

pub use brute::{brute_automorphisms, count_automorphisms_brute, BRUTE_MAX_VERTICES};
pub use refine::{equitable_refinement, Coloring};

use refine::{Node, SearchGraph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutError {
    #[error("graph has {n} vertices, above the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("colouring has {found} entries for {n} vertices")]
    ColoringSize { n: usize, found: usize },
}

fn check_cap(n: usize, cap: usize) -> Result<(), AutError> {
    if n > cap {
        Err(AutError::TooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Full automorphism group of `g`.
pub fn automorphism_group(g: &Graph, limits: &Limits) -> Result<PermGroup, AutError> {
    automorphism_group_colored(g, &Coloring::uniform(g.n()), limits)
}

/// Automorphisms of `g` that preserve the colour classes of `colors`.
pub fn automorphism_group_colored(
    g: &Graph,
    colors: &Coloring,
    limits: &Limits,
) -> Result<PermGroup, AutError> {
    check_cap(g.n(), limits.autgroup_vertices)?;
    if colors.len() != g.n() {
        return Err(AutError::ColoringSize {
            n: g.n(),
            found: colors.len(),
        });
    }
    let sg = SearchGraph::new(g);
    let root = Node::root(&sg, colors);
    let first = first_path(&sg, root);
    let leaf = &first.last().unwrap().0;

    let mut gens: Vec<Perm> = Vec::new();
    let path_points: Vec<usize> = first.iter().filter_map(|(_, chosen)| *chosen).collect();
    // bottom-up over the first path
    for depth in (0..first.len() - 1).rev() {
        let (node, chosen) = &first[depth];
        let v = chosen.unwrap();
        let cell = node.target_cell().unwrap();
        for &w in &node.cells[cell] {
            if w == v {
                continue;
            }
            let orbits = orbit_labels(g.n(), &gens);
            if orbits[w] == orbits[v] {
                continue;
            }
            let child = node.individualize(&sg, w);
            if let Some(gamma) = find_leaf_map(&sg, &sg, &first, depth + 1, child, leaf) {
                debug_assert!(g.is_automorphism(&gamma));
                gens.push(gamma);
            }
        }
    }
    let group = PermGroup::new(g.n(), gens, &path_points).expect("automorphisms share the degree");
    for s in group.generators() {
        assert!(g.is_automorphism(s), "search produced a non-automorphism");
    }
    Ok(group)
}

/// An isomorphism `g1 -> g2` as an image list, if one exists.
pub fn are_isomorphic(g1: &Graph, g2: &Graph, limits: &Limits) -> Result<Option<Vec<usize>>, AutError> {
    check_cap(g1.n().max(g2.n()), limits.autgroup_vertices)?;
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    if g1.valency_profile() != g2.valency_profile() {
        return Ok(None);
    }
    let (s1, s2) = (SearchGraph::new(g1), SearchGraph::new(g2));
    let r1 = Node::root(&s1, &Coloring::uniform(g1.n()));
    let r2 = Node::root(&s2, &Coloring::uniform(g2.n()));
    if r1.invariant != r2.invariant {
        return Ok(None);
    }
    let first = first_path(&s1, r1);
    let leaf = first.last().unwrap().0.clone();
    let found = find_leaf_map(&s2, &s1, &first, 0, r2, &leaf);
    Ok(found.map(|gamma| {
        let map: Vec<usize> = gamma.images().collect();
        debug_assert!(g1.edges().iter().all(|&(u, v)| g2.has_edge(map[u], map[v])));
        map
    }))
}

/// Nodes along the leftmost path, each paired with the vertex individualized
/// there (`None` at the leaf).
fn first_path(sg: &SearchGraph, root: Node) -> Vec<(Node, Option<usize>)> {
    let mut path = Vec::new();
    let mut node = root;
    while let Some(cell) = node.target_cell() {
        let v = node.cells[cell][0];
        let child = node.individualize(sg, v);
        path.push((node, Some(v)));
        node = child;
    }
    path.push((node, None));
    path
}

/// Depth-first search below `node` (in `target`, at `depth` of the reference
/// first path built in `source`) for a leaf whose induced map from the
/// reference leaf is an isomorphism.
fn find_leaf_map(
    target: &SearchGraph,
    source: &SearchGraph,
    first: &[(Node, Option<usize>)],
    depth: usize,
    node: Node,
    leaf: &Node,
) -> Option<Perm> {
    if depth >= first.len() || node.invariant != first[depth].0.invariant {
        return None;
    }
    match node.target_cell() {
        None => {
            let n = node.cells.len();
            let mut images = vec![0; n];
            for (a, b) in leaf.cells.iter().zip(&node.cells) {
                images[a[0]] = b[0];
            }
            let gamma = Perm::from_images(images).ok()?;
            source.maps_onto(target, &gamma).then_some(gamma)
        }
        Some(cell) => {
            for &w in &node.cells[cell] {
                let child = node.individualize(target, w);
                if let Some(found) = find_leaf_map(target, source, first, depth + 1, child, leaf)
                {
                    return Some(found);
                }
            }
            None
        }
    }
}

fn orbit_labels(n: usize, gens: &[Perm]) -> Vec<usize> {
    let mut label = vec![0; n];
    for (i, orbit) in orbits_under(n, gens).iter().enumerate() {
        for &p in orbit {
            label[p] = i;
        }
    }
    label
}

#[cfg(test)]
mod tests;
