//! Finite simple undirected graphs on dense vertex indices.

mod arcs;
pub mod io;

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::perm::Perm;

pub use arcs::SArcs;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// Simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// The two sides of a biregular bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    /// Side containing vertex 0.
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub left_valency: usize,
    pub right_valency: usize,
}

/// Result of undoing a 1-subdivision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smoothing {
    pub sigma: Graph,
    /// Vertex of the original graph for each vertex of `sigma`.
    pub branch: Vec<usize>,
    /// For each edge `(a, b)` of `sigma` (with `a < b`), the valency-2
    /// vertex that subdivided it.
    pub midpoints: BTreeMap<(usize, usize), usize>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge {
                    u: u.min(w[0]),
                    v: u.max(w[0]),
                });
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn min_valency(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_valency(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Map from valency to number of vertices with that valency.
    pub fn valency_profile(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for list in &self.adj {
            *out.entry(list.len()).or_insert(0) += 1;
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        self.valency_profile().len() <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances(0).iter().all(|&d| d != usize::MAX)
    }

    /// Breadth-first distances from `v`; unreachable vertices get `usize::MAX`.
    pub fn distances(&self, v: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices at distance exactly `i` from `v`, sorted.
    pub fn sphere(&self, v: usize, i: usize) -> Vec<usize> {
        self.layers(v, i).pop().unwrap_or_default()
    }

    /// Vertices at distance at most `i` from `v`, sorted.
    pub fn ball(&self, v: usize, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.layers(v, i).into_iter().flatten().collect();
        out.sort_unstable();
        out
    }

    /// Spheres of radius `0..=i` around `v`; trailing empty spheres included.
    pub fn layers(&self, v: usize, i: usize) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        seen[v] = true;
        let mut layers = vec![vec![v]];
        for _ in 0..i {
            let mut next = Vec::new();
            for &u in layers.last().unwrap() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        next.push(w);
                    }
                }
            }
            next.sort_unstable();
            layers.push(next);
        }
        layers
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            let mut touched = vec![root];
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            'bfs: while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        touched.push(w);
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
            for t in touched {
                dist[t] = usize::MAX;
                parent[t] = usize::MAX;
            }
            if best == 3 {
                break;
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// Proper 2-colouring (colour of vertex 0 is `false`), if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                let c = colour[u].unwrap();
                for &w in &self.adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            stack.push(w);
                        }
                        Some(d) if d == c => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    /// The bipartition of a connected biregular bipartite graph.
    pub fn biregular_bipartition(&self) -> Option<Bipartition> {
        if self.n() < 2 || !self.is_connected() {
            return None;
        }
        let colour = self.bipartition()?;
        let (left, right): (Vec<usize>, Vec<usize>) = (0..self.n()).partition(|&v| !colour[v]);
        let uniform = |side: &[usize]| {
            let d = self.degree(side[0]);
            side.iter().all(|&v| self.degree(v) == d).then_some(d)
        };
        let left_valency = uniform(&left)?;
        let right_valency = uniform(&right)?;
        Some(Bipartition {
            left,
            right,
            left_valency,
            right_valency,
        })
    }

    /// Whether `p` maps edges to edges.
    pub fn is_automorphism(&self, p: &Perm) -> bool {
        p.degree() == self.n()
            && self.adj.iter().enumerate().all(|(u, list)| {
                let pu = p.apply(u);
                self.degree(pu) == list.len() && list.iter().all(|&v| self.has_edge(pu, p.apply(v)))
            })
    }

    /// Image of the graph under the relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edges(self.n(), &edges).expect("relabelling is a bijection")
    }

    /// Replaces each edge by a path of length two. The new vertex for the
    /// `k`-th edge of [`Graph::edges`] is `n + k`.
    pub fn subdivide_1(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for (k, (u, v)) in self.edges().into_iter().enumerate() {
            edges.push((u, n + k));
            edges.push((n + k, v));
        }
        Graph::from_edges(n + self.edge_count(), &edges).unwrap()
    }

    /// Replaces each edge `(u, v)`, `u < v`, by a path `u, n + 2k, n + 2k + 1, v`.
    pub fn subdivide_2(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for (k, (u, v)) in self.edges().into_iter().enumerate() {
            let (a, b) = (n + 2 * k, n + 2 * k + 1);
            edges.extend([(u, a), (a, b), (b, v)]);
        }
        Graph::from_edges(n + 2 * self.edge_count(), &edges).unwrap()
    }

    /// Recognises `self` as the 1-subdivision of a simple graph of minimum
    /// valency at least 3.
    pub fn smooth(&self) -> Option<Smoothing> {
        let n = self.n();
        let is_mid = |v: usize| self.degree(v) == 2;
        let branch: Vec<usize> = (0..n).filter(|&v| !is_mid(v)).collect();
        if branch.is_empty() {
            return None;
        }
        let mut index = vec![usize::MAX; n];
        for (i, &v) in branch.iter().enumerate() {
            if self.degree(v) < 3 {
                return None;
            }
            index[v] = i;
        }
        let mut midpoints = BTreeMap::new();
        for v in (0..n).filter(|&v| is_mid(v)) {
            let (a, b) = (self.adj[v][0], self.adj[v][1]);
            if is_mid(a) || is_mid(b) {
                return None;
            }
            let key = (index[a].min(index[b]), index[a].max(index[b]));
            if midpoints.insert(key, v).is_some() {
                return None;
            }
        }
        // branch vertices must only meet midpoints
        if branch.iter().any(|&v| self.adj[v].iter().any(|&w| !is_mid(w))) {
            return None;
        }
        let edges: Vec<(usize, usize)> = midpoints.keys().copied().collect();
        let sigma = Graph::from_edges(branch.len(), &edges).ok()?;
        Some(Smoothing {
            sigma,
            branch,
            midpoints,
        })
    }

    /// Disjoint union, with `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n();
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + n, v + n)));
        Graph::from_edges(n + other.n(), &edges).unwrap()
    }

    /// Enumerates all `s`-arcs.
    pub fn s_arcs(&self, s: usize) -> SArcs<'_> {
        SArcs::new(self, None, s)
    }

    /// Enumerates the `s`-arcs starting at `v`.
    pub fn s_arcs_from(&self, v: usize, s: usize) -> SArcs<'_> {
        SArcs::new(self, Some(v), s)
    }

    pub fn enumerate_s_arcs(&self, s: usize) -> Vec<Vec<usize>> {
        self.s_arcs(s).collect()
    }

    pub fn count_s_arcs_from(&self, v: usize, s: usize) -> u64 {
        arcs::count_from(self, v, s)
    }
}

#[cfg(test)]
mod tests;
