//! Constructors for the concrete graph families, each optionally carrying
//! an acting group given by vertex permutations.
//!
//! Subset-indexed families number their vertices in colexicographic order,
//! which for subsets of a small ground set is increasing order of the
//! characteristic bit mask.

mod fields;
mod geometry;
mod subsets;

use thiserror::Error;

use crate::cosetgraph::{self, CosetError};
use crate::graph::Graph;
use crate::group::{GroupError, PermGroup};
use crate::limits::Limits;
use crate::perm::Perm;

pub use geometry::{gf3_translate_graph, hermitian_gq, pg_incidence};
pub use subsets::{hamming_clique_incidence, johnson_incidence, odd_graph};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("{family}: {message}")]
    InvalidParameter {
        family: &'static str,
        message: String,
    },
    #[error("{family}: {vertices} vertices exceeds the cap of {cap}")]
    SizeCap {
        family: &'static str,
        vertices: usize,
        cap: usize,
    },
    #[error("{family}: {message}")]
    Postcondition {
        family: &'static str,
        message: String,
    },
    #[error("generator {generator} is not an automorphism of the graph")]
    NotAutomorphism { generator: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Coset(#[from] CosetError),
}

/// A graph together with the group the construction supplies, if any.
#[derive(Clone, Debug)]
pub struct ConstructedInstance {
    pub name: String,
    pub graph: Graph,
    pub group: Option<PermGroup>,
    /// Human-readable description of each vertex.
    pub labels: Vec<String>,
    /// Remarks such as special parameter cases.
    pub notes: Vec<String>,
}

impl ConstructedInstance {
    /// Checks that every generator of `group` preserves adjacency.
    pub fn new(
        name: impl Into<String>,
        graph: Graph,
        group: Option<PermGroup>,
        labels: Vec<String>,
    ) -> Result<Self, FamilyError> {
        if let Some(g) = &group {
            check_automorphisms(&graph, g.generators())?;
        }
        debug_assert!(labels.is_empty() || labels.len() == graph.n());
        Ok(ConstructedInstance {
            name: name.into(),
            graph,
            group,
            labels,
            notes: Vec::new(),
        })
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

pub(crate) fn check_automorphisms(graph: &Graph, gens: &[Perm]) -> Result<(), FamilyError> {
    match gens.iter().position(|g| !graph.is_automorphism(g)) {
        Some(generator) => Err(FamilyError::NotAutomorphism { generator }),
        None => Ok(()),
    }
}

fn invalid(family: &'static str, message: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameter {
        family,
        message: message.into(),
    }
}

fn check_size(family: &'static str, vertices: usize, limits: &Limits) -> Result<(), FamilyError> {
    if vertices > limits.max_vertices {
        Err(FamilyError::SizeCap {
            family,
            vertices,
            cap: limits.max_vertices,
        })
    } else {
        Ok(())
    }
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|v| v.to_string()).collect()
}

fn plain(name: String, graph: Graph) -> ConstructedInstance {
    let labels = numbered(graph.n());
    ConstructedInstance::new(name, graph, None, labels).expect("no group attached")
}

/// The cycle `C_n` on `0..n`.
pub fn cycle(n: usize) -> Result<ConstructedInstance, FamilyError> {
    if n < 3 {
        return Err(invalid("cycle", format!("need n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(plain(format!("C_{n}"), Graph::from_edges(n, &edges).unwrap()))
}

/// The path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<ConstructedInstance, FamilyError> {
    if n < 2 {
        return Err(invalid("path", format!("need n >= 2, got {n}")));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(plain(format!("P_{n}"), Graph::from_edges(n, &edges).unwrap()))
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<ConstructedInstance, FamilyError> {
    if n < 1 {
        return Err(invalid("complete", "need n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    Ok(plain(format!("K_{n}"), Graph::from_edges(n, &edges).unwrap()))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<ConstructedInstance, FamilyError> {
    if m < 1 || n < 1 {
        return Err(invalid("complete_bipartite", format!("need m, n >= 1, got {m}, {n}")));
    }
    let mut edges = Vec::new();
    for u in 0..m {
        edges.extend((m..m + n).map(|v| (u, v)));
    }
    Ok(plain(format!("K_{{{m},{n}}}"), Graph::from_edges(m + n, &edges).unwrap()))
}

/// The spider `T_n`: centre `0`, inner vertices `1..=n`, feet `n+1..=2n`,
/// with foot `n + i` attached to inner vertex `i`.
pub fn spider(n: usize) -> Result<ConstructedInstance, FamilyError> {
    if n < 3 {
        return Err(invalid("spider", format!("need n >= 3, got {n}")));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push((0, i));
        edges.push((i, n + i));
    }
    Ok(plain(format!("T_{n}"), Graph::from_edges(2 * n + 1, &edges).unwrap()))
}

/// The coset graph `Cos(S_n, S_r x S_{r-1}, g)` with `n = (r-1)^2`, on the
/// points of two families of 2-subsets.
///
/// Points `0..C(r,2)` are the 2-subsets of `A = {0..r-1}` and the remaining
/// points are the 2-subsets of `B = {0..r-2}`, both in colex order. The
/// involution `g` swaps each 2-subset of `A \ {r-1}` with the equal 2-subset
/// of `B`.
pub fn s_squared_example(r: usize, limits: &Limits) -> Result<ConstructedInstance, FamilyError> {
    let inst = s_squared_construction(r, limits)?;
    let graph = &inst.graph;
    let valencies: Vec<usize> = graph.valency_profile().into_keys().collect();
    if valencies != [r] {
        return Err(FamilyError::Postcondition {
            family: "s_squared_example",
            message: format!("coset graph has valencies {valencies:?}, expected {r}"),
        });
    }
    if !graph.is_connected() {
        return Err(FamilyError::Postcondition {
            family: "s_squared_example",
            message: "coset graph is disconnected".into(),
        });
    }
    Ok(inst)
}

/// The coset graph of [`s_squared_example`] without the valency and
/// connectivity checks.
pub fn s_squared_construction(
    r: usize,
    limits: &Limits,
) -> Result<ConstructedInstance, FamilyError> {
    if r < 4 {
        return Err(invalid("s_squared_example", format!("need r >= 4, got {r}")));
    }
    if r > limits.s_squared_max_r {
        return Err(invalid(
            "s_squared_example",
            format!("r = {r} exceeds the configured cap {}", limits.s_squared_max_r),
        ));
    }
    let pairs_a = subsets::k_subsets(r, 2);
    let pairs_b = subsets::k_subsets(r - 1, 2);
    let n = pairs_a.len() + pairs_b.len();
    debug_assert_eq!(n, (r - 1) * (r - 1));
    let offset = pairs_a.len();
    let index_a = |m: u64| pairs_a.binary_search(&m).unwrap();
    let index_b = |m: u64| offset + pairs_b.binary_search(&m).unwrap();

    let on_a = |sigma: &Perm| {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &m) in pairs_a.iter().enumerate() {
            images[i] = index_a(subsets::map_mask(m, sigma));
        }
        Perm::from_images(images).unwrap()
    };
    let on_b = |sigma: &Perm| {
        let mut images: Vec<usize> = (0..n).collect();
        for (i, &m) in pairs_b.iter().enumerate() {
            images[offset + i] = index_b(subsets::map_mask(m, sigma));
        }
        Perm::from_images(images).unwrap()
    };
    let mut h_gens = Vec::new();
    for sigma in PermGroup::symmetric(r).generators() {
        h_gens.push(on_a(sigma));
    }
    for sigma in PermGroup::symmetric(r - 1).generators() {
        h_gens.push(on_b(sigma));
    }
    let mut g_images: Vec<usize> = (0..n).collect();
    for &m in &pairs_b {
        let (x, y) = (index_a(m), index_b(m));
        g_images[x] = y;
        g_images[y] = x;
    }
    let g = Perm::from_images(g_images).unwrap();

    let big = PermGroup::symmetric(n);
    let h = big.subgroup(h_gens)?;
    let inst = cosetgraph::sabidussi(&big, &h, &g, limits)?;
    Ok(ConstructedInstance {
        name: format!("Cos(S_{n}, S_{r} x S_{}, g)", r - 1),
        ..inst
    })
}
