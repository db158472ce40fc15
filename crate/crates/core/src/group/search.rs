//! Transporter elements and setwise stabilisers by walking a chain whose
//! base begins with the points of interest.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::chain::Chain;
use super::PermGroup;
use crate::perm::Perm;

const SETWISE_SEED: u64 = 0x05e7_a15e;

/// A group re-based on a fixed list of source points, answering many
/// "is there an element sending these sources to those targets" queries.
#[derive(Clone, Debug)]
pub struct TransporterChain {
    group: PermGroup,
    /// Distinct sources in first-occurrence order.
    sources: Vec<usize>,
    /// For each distinct source: its level in the chain, or `None` when the
    /// whole group fixes it.
    level_of: Vec<Option<usize>>,
}

impl TransporterChain {
    pub fn new(group: &PermGroup, sources: &[usize]) -> Self {
        let mut seen = BTreeSet::new();
        let distinct: Vec<usize> = sources.iter().copied().filter(|&p| seen.insert(p)).collect();
        let rebased = group.with_base_prefix(&distinct);
        let base = rebased.base();
        let level_of = distinct
            .iter()
            .map(|p| base.iter().position(|b| b == p))
            .collect();
        TransporterChain {
            group: rebased,
            sources: distinct,
            level_of,
        }
    }

    pub fn sources(&self) -> &[usize] {
        &self.sources
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    /// Resolves targets per chain level. `targets[i]` belongs to
    /// `sources()[i]`. Returns `None` when a fixed source is sent elsewhere.
    fn level_targets(&self, targets: &[usize]) -> Option<Vec<usize>> {
        assert_eq!(targets.len(), self.sources.len(), "one target per source");
        let depth = self.level_of.iter().flatten().map(|&l| l + 1).max().unwrap_or(0);
        let mut per_level = vec![usize::MAX; depth];
        for ((&s, &t), level) in self.sources.iter().zip(targets).zip(&self.level_of) {
            match level {
                None if s != t => return None,
                None => {}
                Some(l) => per_level[*l] = t,
            }
        }
        Some(per_level)
    }

    /// Whether some element maps every source to its target.
    pub fn exists(&self, targets: &[usize]) -> bool {
        let Some(mut pending) = self.level_targets(targets) else {
            return false;
        };
        let levels = &self.group.chain().levels;
        for i in 0..pending.len() {
            let t = pending[i];
            if t == usize::MAX {
                continue;
            }
            let level = &levels[i];
            if !level.in_orbit(t) {
                return false;
            }
            for later in pending.iter_mut().skip(i + 1) {
                if *later != usize::MAX {
                    *later = level.strip_point(t, *later);
                }
            }
        }
        true
    }

    /// Some element mapping every source to its target.
    pub fn find(&self, targets: &[usize]) -> Option<Perm> {
        let per_level = self.level_targets(targets)?;
        let chain = self.group.chain();
        let mut x = Perm::identity(chain.degree);
        let mut x_inv = Perm::identity(chain.degree);
        let mut scratch = Vec::new();
        for (level, &t) in chain.levels.iter().zip(&per_level) {
            if t == usize::MAX {
                continue;
            }
            let t = x_inv.apply(t);
            if !level.in_orbit(t) {
                return None;
            }
            let u = level.transversal(t);
            level.strip(&mut x_inv, t);
            x.mul_assign_left(&u, &mut scratch);
        }
        debug_assert!(self
            .sources
            .iter()
            .zip(targets)
            .all(|(&s, &t)| x.apply(s) == t));
        Some(x)
    }
}

pub(super) fn setwise_stabiliser(group: &PermGroup, points: &[usize]) -> PermGroup {
    let set: BTreeSet<usize> = points.iter().copied().filter(|&p| group.moves(p)).collect();
    if set.is_empty() {
        return group.clone();
    }
    let prefix: Vec<usize> = set.iter().copied().collect();
    let rebased = group.with_base_prefix(&prefix);
    let chain = rebased.chain();
    let k = prefix.len();
    let pointwise = chain.suffix(k);

    let mut leaves = Vec::new();
    let mut used = vec![false; k];
    collect_leaves(
        chain,
        &prefix,
        0,
        &mut used,
        Perm::identity(chain.degree),
        Perm::identity(chain.degree),
        &mut leaves,
    );

    let target = pointwise.order() * BigUint::from(leaves.len());
    let mut moved = vec![false; chain.degree];
    for g in leaves.iter().chain(pointwise.strong_generators().iter().map(|g| &**g)) {
        for (i, x) in g.images().enumerate() {
            if i != x {
                moved[i] = true;
            }
        }
    }
    let seeds: Vec<Perm> = pointwise
        .strong_generators()
        .iter()
        .map(|g| (**g).clone())
        .chain(leaves.iter().take(8).cloned())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SETWISE_SEED);
    let result = Chain::random_with_order(
        chain.degree,
        &prefix,
        &moved,
        &target,
        seeds,
        |r| {
            let leaf = &leaves[r.gen_range(0..leaves.len())];
            &pointwise.random_element(r) * leaf
        },
        &mut rng,
    );
    PermGroup::from_chain(result)
}

/// Depth-first walk over base images restricted to the set itself; each
/// leaf is a representative of one coset of the pointwise stabiliser.
fn collect_leaves(
    chain: &Chain,
    set: &[usize],
    depth: usize,
    used: &mut [bool],
    x: Perm,
    x_inv: Perm,
    out: &mut Vec<Perm>,
) {
    if depth == set.len() {
        out.push(x);
        return;
    }
    let level = &chain.levels[depth];
    let mut scratch = Vec::new();
    for j in 0..set.len() {
        if used[j] {
            continue;
        }
        let t = x_inv.apply(set[j]);
        if !level.in_orbit(t) {
            continue;
        }
        let u = level.transversal(t);
        let mut nx = x.clone();
        nx.mul_assign_left(&u, &mut scratch);
        let mut nx_inv = x_inv.clone();
        level.strip(&mut nx_inv, t);
        used[j] = true;
        collect_leaves(chain, set, depth + 1, used, nx, nx_inv, out);
        used[j] = false;
    }
}
