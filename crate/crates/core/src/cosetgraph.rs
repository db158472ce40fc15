//! Coset actions, Sabidussi coset graphs `Cos(G, H, g)` and bipartite coset
//! graphs `Cos(G, L, R)`.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use thiserror::Error;

use crate::families::{ConstructedInstance, FamilyError};
use crate::graph::Graph;
use crate::group::{GroupError, PermGroup};
use crate::limits::Limits;
use crate::perm::Perm;

#[derive(Debug, Error)]
pub enum CosetError {
    #[error("generator {index} of the subgroup is not in the parent group")]
    NotSubgroup { index: usize },
    #[error("element is not in the parent group")]
    ElementNotInGroup,
    #[error("index exceeds the cap of {cap} cosets")]
    IndexCap { cap: usize },
    #[error("g^2 is not in H")]
    SquareNotInSubgroup,
    #[error("g normalises H")]
    NormalisesSubgroup,
    #[error("the subgroups generate a group of order {found}, not {expected}")]
    DoesNotGenerate { found: BigUint, expected: BigUint },
    #[error("coset graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("constructed graph rejected: {0}")]
    Instance(String),
}

/// Right cosets of a subgroup, with the parent generators acting on them.
#[derive(Clone, Debug)]
pub struct CosetTable {
    parent: PermGroup,
    subgroup: PermGroup,
    parent_base: Vec<usize>,
    reps: Vec<Perm>,
    index: HashMap<Vec<u32>, usize>,
    action: Vec<Perm>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Coset representatives; the first is the identity.
    pub fn reps(&self) -> &[Perm] {
        &self.reps
    }

    /// Permutation of coset indices for each parent generator, in order.
    pub fn action(&self) -> &[Perm] {
        &self.action
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn subgroup(&self) -> &PermGroup {
        &self.subgroup
    }

    /// Index of the coset `Hx`.
    pub fn coset_of(&self, x: &Perm) -> Option<usize> {
        self.index.get(&self.key(x)).copied()
    }

    /// The parent group acting on the cosets.
    pub fn action_group(&self) -> Result<PermGroup, GroupError> {
        PermGroup::from_generators(self.len(), self.action.clone())
    }

    /// Canonical key of `Hx`: the lexicographically least image of the
    /// parent base under elements of `Hx`.
    fn key(&self, x: &Perm) -> Vec<u32> {
        let mut y = x.clone();
        let mut scratch = Vec::new();
        for level in &self.subgroup.chain().levels {
            let best = level
                .orbit
                .iter()
                .map(|&p| p as usize)
                .min_by_key(|&p| y.apply(p))
                .unwrap();
            let u = level.transversal(best);
            y.mul_assign_left(&u, &mut scratch);
        }
        self.parent_base.iter().map(|&b| y.apply(b) as u32).collect()
    }
}

/// Right-multiplication action of `group` on the right cosets of `subgroup`.
pub fn coset_action(
    group: &PermGroup,
    subgroup: &PermGroup,
    limits: &Limits,
) -> Result<CosetTable, CosetError> {
    for (index, h) in subgroup.generators().iter().enumerate() {
        if !group.contains(h)? {
            return Err(CosetError::NotSubgroup { index });
        }
    }
    let parent_base = group.base();
    let rebased = subgroup.with_base_prefix(&parent_base);
    let mut table = CosetTable {
        parent: group.clone(),
        subgroup: rebased,
        parent_base,
        reps: Vec::new(),
        index: HashMap::new(),
        action: Vec::new(),
    };
    let identity = Perm::identity(group.degree());
    table.index.insert(table.key(&identity), 0);
    table.reps.push(identity);
    let gens = group.generators();
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
    let mut pos = 0;
    while pos < table.reps.len() {
        for (k, s) in gens.iter().enumerate() {
            let y = &table.reps[pos] * s;
            let key = table.key(&y);
            let next = table.reps.len();
            let j = *table.index.entry(key).or_insert(next);
            if j == next {
                if next >= limits.max_cosets {
                    return Err(CosetError::IndexCap {
                        cap: limits.max_cosets,
                    });
                }
                table.reps.push(y);
            }
            images[k].push(j);
        }
        pos += 1;
    }
    table.action = images
        .into_iter()
        .map(|im| Perm::from_images(im).expect("coset action is a permutation"))
        .collect();
    Ok(table)
}

/// Breadth-first closure of `start` under right multiplication by `gens`,
/// deduplicated by coset of `table`; returns one element per coset reached.
fn coset_orbit(table: &CosetTable, start: Perm, gens: &[Perm]) -> Vec<Perm> {
    let mut seen = BTreeSet::from([table.key(&start)]);
    let mut out = vec![start];
    let mut pos = 0;
    while pos < out.len() {
        for h in gens {
            let y = &out[pos] * h;
            if seen.insert(table.key(&y)) {
                out.push(y);
            }
        }
        pos += 1;
    }
    out
}

fn generated_order(group: &PermGroup, gens: Vec<Perm>) -> Result<(), CosetError> {
    let found = PermGroup::from_generators(group.degree(), gens)?.order();
    if found != group.order() {
        return Err(CosetError::DoesNotGenerate {
            found,
            expected: group.order(),
        });
    }
    Ok(())
}

fn coset_label(prefix: &str, rep: &Perm) -> String {
    format!("{prefix}{rep}")
}

fn to_instance(
    name: String,
    graph: Graph,
    group: PermGroup,
    labels: Vec<String>,
) -> Result<ConstructedInstance, CosetError> {
    ConstructedInstance::new(name, graph, Some(group), labels).map_err(|e| match e {
        FamilyError::Group(g) => CosetError::Group(g),
        other => CosetError::Instance(other.to_string()),
    })
}

/// `Cos(G, H, g)`: cosets `Hx` and `Hy` are adjacent when `x y^-1` lies in
/// `HgH`.
pub fn sabidussi(
    group: &PermGroup,
    subgroup: &PermGroup,
    g: &Perm,
    limits: &Limits,
) -> Result<ConstructedInstance, CosetError> {
    if !group.contains(g)? {
        return Err(CosetError::ElementNotInGroup);
    }
    if !subgroup.contains(&(g * g))? {
        return Err(CosetError::SquareNotInSubgroup);
    }
    let g_inv = g.inverse();
    let normalises = subgroup
        .generators()
        .iter()
        .all(|h| subgroup.contains(&(&(&g_inv * h) * g)).unwrap_or(false));
    if normalises {
        return Err(CosetError::NormalisesSubgroup);
    }
    let mut gens = subgroup.generators().to_vec();
    gens.push(g.clone());
    generated_order(group, gens)?;

    let table = coset_action(group, subgroup, limits)?;
    // neighbours of H are the cosets Hgh
    let base_nbrs = coset_orbit(&table, g.clone(), subgroup.generators());
    let mut edges = BTreeSet::new();
    for (i, r) in table.reps().iter().enumerate() {
        for n in &base_nbrs {
            let j = table.coset_of(&(n * r)).expect("coset of a group element");
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    let graph = Graph::from_edges(table.len(), &edges).expect("coset graph is simple");
    if !graph.is_connected() {
        return Err(CosetError::Disconnected);
    }
    let labels = table.reps().iter().map(|r| coset_label("H", r)).collect();
    let action = table.action_group()?;
    to_instance("Cos(G,H,g)".to_string(), graph, action, labels)
}

/// `Cos(G, L, R)`: the cosets of `L` (vertices `0..|G:L|`) and of `R` (the
/// remaining vertices), adjacent when they intersect.
pub fn bipartite_coset(
    group: &PermGroup,
    left: &PermGroup,
    right: &PermGroup,
    limits: &Limits,
) -> Result<ConstructedInstance, CosetError> {
    let mut gens = left.generators().to_vec();
    gens.extend_from_slice(right.generators());
    let tl = coset_action(group, left, limits)?;
    let tr = coset_action(group, right, limits)?;
    if tl.len() + tr.len() > limits.max_cosets {
        return Err(CosetError::IndexCap {
            cap: limits.max_cosets,
        });
    }
    generated_order(group, gens)?;

    // Lx meets Ry exactly when Ry = R l x for some l in L
    let base_nbrs = coset_orbit(&tr, Perm::identity(group.degree()), left.generators());
    let offset = tl.len();
    let mut edges = Vec::new();
    for (i, x) in tl.reps().iter().enumerate() {
        for l in &base_nbrs {
            let j = tr.coset_of(&(l * x)).expect("coset of a group element");
            edges.push((i, offset + j));
        }
    }
    let graph = Graph::from_edges(offset + tr.len(), &edges).expect("coset graph is simple");
    let action: Vec<Perm> = tl
        .action()
        .iter()
        .zip(tr.action())
        .map(|(a, b)| {
            let images = a.images().chain(b.images().map(|x| x + offset)).collect();
            Perm::from_images(images).unwrap()
        })
        .collect();
    let action = PermGroup::from_generators(graph.n(), action)?;
    let labels = tl
        .reps()
        .iter()
        .map(|r| coset_label("L", r))
        .chain(tr.reps().iter().map(|r| coset_label("R", r)))
        .collect();
    to_instance("Cos(G,L,R)".to_string(), graph, action, labels)
}
