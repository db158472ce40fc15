//! Exact permutation groups backed by stabiliser chains.

mod chain;
pub mod io;
mod search;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{Perm, PermError};
use chain::Chain;

pub use search::TransporterChain;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("generator {index} has degree {found}, expected {expected}")]
    GeneratorDegree {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("domain is not invariant: generator {generator} maps {from} to {to} outside the domain")]
    DomainNotInvariant {
        generator: usize,
        from: usize,
        to: usize,
    },
}

/// A permutation group given by generators, with a complete stabiliser chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: Chain,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            generators: Vec::new(),
            chain: Chain::trivial(degree),
        }
    }

    /// Builds the group generated by `generators`; the base starts with the
    /// points of `base_hint` that the group moves.
    pub fn new(
        degree: usize,
        generators: Vec<Perm>,
        base_hint: &[usize],
    ) -> Result<Self, GroupError> {
        for (index, g) in generators.iter().enumerate() {
            if g.degree() != degree {
                return Err(GroupError::GeneratorDegree {
                    index,
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        for &p in base_hint {
            check_point(p, degree)?;
        }
        let chain = Chain::schreier_sims(degree, &generators, base_hint);
        Ok(PermGroup {
            degree,
            generators: generators.into_iter().filter(|g| !g.is_identity()).collect(),
            chain,
        })
    }

    pub fn from_generators(degree: usize, generators: Vec<Perm>) -> Result<Self, GroupError> {
        PermGroup::new(degree, generators, &[])
    }

    /// Symmetric group on `0..degree`.
    pub fn symmetric(degree: usize) -> Self {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Perm::from_cycles(degree, &[&[0, 1]]).unwrap());
        }
        if degree >= 3 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Perm::from_cycles(degree, &[&cycle]).unwrap());
        }
        PermGroup::from_generators(degree, gens).unwrap()
    }

    fn from_chain(chain: Chain) -> Self {
        let generators = chain.strong_generators().iter().map(|g| (**g).clone()).collect();
        PermGroup {
            degree: chain.degree,
            generators,
            chain,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn strong_generators(&self) -> Vec<Perm> {
        self.chain
            .strong_generators()
            .iter()
            .map(|g| (**g).clone())
            .collect()
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.base()
    }

    /// Fundamental orbit sizes along the chain.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit_len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    /// Order as `u128` when it fits.
    pub fn order_u128(&self) -> Option<u128> {
        self.order().to_u128()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> Result<bool, GroupError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            }
            .into());
        }
        Ok(self.chain.contains(p))
    }

    /// Whether every element of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> bool {
        other.degree == self.degree && other.generators.iter().all(|g| self.chain.contains(g))
    }

    pub fn orbit(&self, point: usize) -> BTreeSet<usize> {
        orbit_under(&self.generators, point)
    }

    /// All orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_under(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn random_element(&self, rng: &mut impl rand::Rng) -> Perm {
        self.chain.random_element(rng)
    }

    /// Enumerates all elements; intended for small groups only.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.chain.levels.iter().rev() {
            let reps: Vec<Perm> = level
                .orbit
                .iter()
                .map(|&p| level.transversal(p as usize))
                .collect();
            let mut next = Vec::with_capacity(out.len() * reps.len());
            for g in &out {
                for u in &reps {
                    next.push(g * u);
                }
            }
            out = next;
        }
        out
    }

    /// Same group with a chain whose base begins with the moved points of
    /// `prefix`, in order. Returns `self` unchanged when it already does.
    pub fn with_base_prefix(&self, prefix: &[usize]) -> PermGroup {
        let base = self.chain.base();
        let moved: Vec<usize> = {
            let mut seen = BTreeSet::new();
            prefix
                .iter()
                .copied()
                .filter(|&p| self.moves(p) && seen.insert(p))
                .collect()
        };
        if base.len() >= moved.len() && base[..moved.len()] == moved[..] {
            return self.clone();
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain: self.chain.rebuild_with_base(&moved),
        }
    }

    /// Whether some element moves `point`.
    pub fn moves(&self, point: usize) -> bool {
        self.generators.iter().any(|g| !g.fixes(point))
    }

    pub fn point_stabiliser(&self, point: usize) -> Result<PermGroup, GroupError> {
        self.pointwise_stabiliser(&[point])
    }

    /// Elements fixing every listed point.
    pub fn pointwise_stabiliser(&self, points: &[usize]) -> Result<PermGroup, GroupError> {
        for &p in points {
            check_point(p, self.degree)?;
        }
        let rebuilt = self.with_base_prefix(points);
        let depth = {
            let set: BTreeSet<usize> = points.iter().copied().filter(|&p| self.moves(p)).collect();
            set.len()
        };
        Ok(PermGroup::from_chain(rebuilt.chain.suffix(depth)))
    }

    /// Elements permuting `points` among themselves.
    pub fn setwise_stabiliser(&self, points: &[usize]) -> Result<PermGroup, GroupError> {
        for &p in points {
            check_point(p, self.degree)?;
        }
        Ok(search::setwise_stabiliser(self, points))
    }

    /// Some element mapping each constraint source to its target, if any.
    pub fn transporter(&self, constraints: &[(usize, usize)]) -> Result<Option<Perm>, GroupError> {
        for &(a, b) in constraints {
            check_point(a, self.degree)?;
            check_point(b, self.degree)?;
        }
        let sources: Vec<usize> = constraints.iter().map(|c| c.0).collect();
        let tc = TransporterChain::new(self, &sources);
        let targets: Vec<usize> = constraints.iter().map(|c| c.1).collect();
        Ok(tc.find(&targets))
    }

    /// Action on an invariant ordered domain, relabelled to `0..domain.len()`,
    /// together with the order of the kernel.
    pub fn induced_action(&self, domain: &[usize]) -> Result<(PermGroup, BigUint), GroupError> {
        let image = self.restricted_generators(domain)?;
        let group = PermGroup::from_generators(domain.len(), image)?;
        let kernel = self.order() / group.order();
        Ok((group, kernel))
    }

    fn restricted_generators(&self, domain: &[usize]) -> Result<Vec<Perm>, GroupError> {
        let mut index = vec![usize::MAX; self.degree];
        for (i, &p) in domain.iter().enumerate() {
            check_point(p, self.degree)?;
            index[p] = i;
        }
        self.generators
            .iter()
            .enumerate()
            .map(|(gi, g)| {
                let images = domain
                    .iter()
                    .map(|&p| {
                        let q = g.apply(p);
                        match index[q] {
                            usize::MAX => Err(GroupError::DomainNotInvariant {
                                generator: gi,
                                from: p,
                                to: q,
                            }),
                            j => Ok(j),
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Perm::from_images(images)?)
            })
            .collect()
    }

    /// Whether every element fixes every point of `domain`; cheaper than
    /// building the induced group.
    pub fn acts_trivially_on(&self, domain: &[usize]) -> bool {
        self.generators
            .iter()
            .all(|g| domain.iter().all(|&p| g.fixes(p)))
    }

    /// Subgroup generated by the given elements, which must lie in `self`.
    pub fn subgroup(&self, generators: Vec<Perm>) -> Result<PermGroup, GroupError> {
        PermGroup::from_generators(self.degree, generators)
    }

    pub(crate) fn chain(&self) -> &Chain {
        &self.chain
    }
}

fn check_point(point: usize, degree: usize) -> Result<(), GroupError> {
    if point >= degree {
        Err(GroupError::PointOutOfRange { point, degree })
    } else {
        Ok(())
    }
}

pub(crate) fn orbit_under(gens: &[Perm], point: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([point]);
    let mut stack = vec![point];
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g.apply(p);
            if seen.insert(q) {
                stack.push(q);
            }
        }
    }
    seen
}

pub(crate) fn orbits_under(degree: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[start] = id;
        let mut members = vec![start];
        let mut pos = 0;
        while pos < members.len() {
            let p = members[pos];
            for g in gens {
                let q = g.apply(p);
                if label[q] == usize::MAX {
                    label[q] = id;
                    members.push(q);
                }
            }
            pos += 1;
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionKind {
    Symmetric,
    Alternating,
    Other,
}

/// Identification of an induced permutation group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalActionReport {
    pub degree: usize,
    pub order: BigUint,
    pub kind: ActionKind,
    pub transitive: bool,
    pub kernel_order: BigUint,
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Classifies `group` acting on `0..degree` as symmetric, alternating or
/// other. The kernel order is not known here and is reported as 1.
pub fn identify(group: &PermGroup, degree: usize) -> LocalActionReport {
    identify_with_kernel(group, degree, BigUint::one())
}

pub fn identify_with_kernel(
    group: &PermGroup,
    degree: usize,
    kernel_order: BigUint,
) -> LocalActionReport {
    let order = group.order();
    let full = factorial(degree);
    let kind = if order == full {
        ActionKind::Symmetric
    } else if order.clone() * 2u32 == full && group.generators().iter().all(|g| g.is_even()) {
        ActionKind::Alternating
    } else {
        ActionKind::Other
    };
    let transitive = degree == 0 || group.orbit(0).len() == degree;
    LocalActionReport {
        degree,
        order,
        kind,
        transitive,
        kernel_order,
    }
}
