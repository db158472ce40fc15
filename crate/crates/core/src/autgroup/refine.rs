use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};

use crate::graph::Graph;
use crate::perm::Perm;

/// A vertex colouring; automorphisms found under it preserve each class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn uniform(n: usize) -> Self {
        Coloring { colors: vec![0; n] }
    }

    pub fn new(colors: Vec<usize>) -> Self {
        Coloring { colors }
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.colors.iter().collect::<HashSet<_>>().len()
    }

    fn cells(&self) -> Vec<Vec<usize>> {
        let mut keys: Vec<usize> = self.colors.clone();
        keys.sort_unstable();
        keys.dedup();
        let mut cells = vec![Vec::new(); keys.len()];
        for (v, c) in self.colors.iter().enumerate() {
            cells[keys.binary_search(c).unwrap()].push(v);
        }
        cells
    }
}

/// The coarsest equitable colouring finer than `colors`, with classes
/// numbered in a labelling-independent order.
pub fn equitable_refinement(g: &Graph, colors: &Coloring) -> Coloring {
    let cells = refine(&SearchGraph::new(g), colors.cells());
    let mut out = vec![0; g.n()];
    for (i, cell) in cells.iter().enumerate() {
        for &v in cell {
            out[v] = i;
        }
    }
    Coloring { colors: out }
}

pub(super) struct SearchGraph {
    adj: Vec<Vec<usize>>,
    edges: HashSet<(usize, usize)>,
}

impl SearchGraph {
    pub fn new(g: &Graph) -> Self {
        let adj = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        let edges = g.edges().into_iter().collect();
        SearchGraph { adj, edges }
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Whether `gamma` is an isomorphism from `self` onto `other`.
    pub fn maps_onto(&self, other: &SearchGraph, gamma: &Perm) -> bool {
        self.edges.len() == other.edges.len()
            && self
                .edges
                .iter()
                .all(|&(u, v)| other.has_edge(gamma.apply(u), gamma.apply(v)))
    }
}

/// An ordered partition, equitable after refinement.
#[derive(Clone, Debug)]
pub(super) struct Node {
    pub cells: Vec<Vec<usize>>,
    pub invariant: u64,
}

impl Node {
    pub fn root(sg: &SearchGraph, colors: &Coloring) -> Node {
        Node::from_cells(sg, refine(sg, colors.cells()))
    }

    fn from_cells(sg: &SearchGraph, cells: Vec<Vec<usize>>) -> Node {
        let invariant = quotient_hash(sg, &cells);
        Node { cells, invariant }
    }

    /// First smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
    }

    pub fn individualize(&self, sg: &SearchGraph, v: usize) -> Node {
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        for cell in &self.cells {
            if cell.contains(&v) {
                cells.push(vec![v]);
                cells.push(cell.iter().copied().filter(|&w| w != v).collect());
            } else {
                cells.push(cell.clone());
            }
        }
        Node::from_cells(sg, refine(sg, cells))
    }
}

fn cell_index(n: usize, cells: &[Vec<usize>]) -> Vec<usize> {
    let mut of = vec![0; n];
    for (i, cell) in cells.iter().enumerate() {
        for &v in cell {
            of[v] = i;
        }
    }
    of
}

fn refine(sg: &SearchGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = sg.adj.len();
    loop {
        let of = cell_index(n, &cells);
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<usize> = sg.adj[v].iter().map(|&w| of[w]).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        cells = next;
        if stable {
            return cells;
        }
    }
}

fn quotient_hash(sg: &SearchGraph, cells: &[Vec<usize>]) -> u64 {
    let of = cell_index(sg.adj.len(), cells);
    let mut h = DefaultHasher::new();
    for cell in cells {
        cell.len().hash(&mut h);
        let mut sig: Vec<usize> = sg.adj[cell[0]].iter().map(|&w| of[w]).collect();
        sig.sort_unstable();
        sig.hash(&mut h);
    }
    h.finish()
}
