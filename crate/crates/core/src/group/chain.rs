//! Stabiliser chains with Schreier-vector transversals.
//!
//! Two constructions are provided: the deterministic Schreier–Sims algorithm
//! for groups given only by generators, and a rebuild that sifts uniformly
//! random elements of a group whose order is already known until the new
//! chain reaches that order. The second is used for every base change; the
//! order match certifies completeness, so the result does not depend on luck,
//! and the seeded generator keeps runs reproducible.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::perm::Perm;

const NOT_IN_ORBIT: u32 = u32::MAX;
const ROOT: u32 = u32::MAX - 1;

/// Seed for the base-change rebuild.
const REBUILD_SEED: u64 = 0x5eed_57a7;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base: usize,
    pub(crate) gens: Vec<Arc<Perm>>,
    inv: Vec<Arc<Perm>>,
    /// `sv[p]` is the index of the generator carrying the parent of `p` to `p`.
    sv: Vec<u32>,
    pub(crate) orbit: Vec<u32>,
    /// Per generator: orbit positions whose Schreier generators already sift.
    checked: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut sv = vec![NOT_IN_ORBIT; degree];
        sv[base] = ROOT;
        Level {
            base,
            gens: Vec::new(),
            inv: Vec::new(),
            sv,
            orbit: vec![base as u32],
            checked: Vec::new(),
        }
    }

    #[inline]
    pub(crate) fn in_orbit(&self, p: usize) -> bool {
        self.sv[p] != NOT_IN_ORBIT
    }

    pub(crate) fn orbit_len(&self) -> usize {
        self.orbit.len()
    }

    /// Adds a generator, extending the Schreier tree without disturbing
    /// existing entries (verified Schreier generators stay valid).
    fn add_gen(&mut self, g: Arc<Perm>) {
        let k = self.gens.len() as u32;
        self.inv.push(Arc::new(g.inverse()));
        self.gens.push(g);
        self.checked.push(0);
        let start = self.orbit.len();
        for pos in 0..start {
            let q = self.gens[k as usize].apply(self.orbit[pos] as usize);
            if self.sv[q] == NOT_IN_ORBIT {
                self.sv[q] = k;
                self.orbit.push(q as u32);
            }
        }
        let mut pos = start;
        while pos < self.orbit.len() {
            let p = self.orbit[pos] as usize;
            for (j, g) in self.gens.iter().enumerate() {
                let q = g.apply(p);
                if self.sv[q] == NOT_IN_ORBIT {
                    self.sv[q] = j as u32;
                    self.orbit.push(q as u32);
                }
            }
            pos += 1;
        }
    }

    /// Transversal element carrying the base point to `p`.
    pub(crate) fn transversal(&self, mut p: usize) -> Perm {
        let mut path = Vec::new();
        while self.sv[p] != ROOT {
            let k = self.sv[p] as usize;
            path.push(k);
            p = self.inv[k].apply(p);
        }
        let mut u = Perm::identity(self.sv.len());
        for &k in path.iter().rev() {
            u.mul_assign_right(&self.gens[k]);
        }
        u
    }

    /// `h <- h * u_p^{-1}`, where `p` is the image of the base point under
    /// `h`; afterwards `h` fixes the base point.
    #[inline]
    pub(crate) fn strip(&self, h: &mut Perm, mut p: usize) {
        while self.sv[p] != ROOT {
            let k = self.sv[p] as usize;
            h.mul_assign_right(&self.inv[k]);
            p = self.inv[k].apply(p);
        }
    }

    /// Applies `u_p^{-1}` to a single point.
    pub(crate) fn strip_point(&self, mut p: usize, mut x: usize) -> usize {
        while self.sv[p] != ROOT {
            let k = self.sv[p] as usize;
            x = self.inv[k].apply(x);
            p = self.inv[k].apply(p);
        }
        x
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Chain {
    pub(crate) degree: usize,
    pub(crate) levels: Vec<Level>,
}

pub(crate) enum Sift {
    Member,
    /// The residue and the level where sifting stopped (`levels.len()` when
    /// all base points are fixed but the residue is not the identity).
    Dropout(Perm, usize),
}

impl Chain {
    pub(crate) fn trivial(degree: usize) -> Self {
        Chain {
            degree,
            levels: Vec::new(),
        }
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub(crate) fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit_len()))
    }

    pub(crate) fn strong_generators(&self) -> &[Arc<Perm>] {
        self.levels.first().map(|l| &l.gens[..]).unwrap_or(&[])
    }

    pub(crate) fn suffix(&self, from: usize) -> Chain {
        Chain {
            degree: self.degree,
            levels: self.levels[from.min(self.levels.len())..].to_vec(),
        }
    }

    pub(crate) fn sift_from(&self, mut h: Perm, start: usize) -> Sift {
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let p = h.apply(level.base);
            if !level.in_orbit(p) {
                return Sift::Dropout(h, j);
            }
            level.strip(&mut h, p);
        }
        if h.is_identity() {
            Sift::Member
        } else {
            Sift::Dropout(h, self.levels.len())
        }
    }

    pub(crate) fn contains(&self, p: &Perm) -> bool {
        matches!(self.sift_from(p.clone(), 0), Sift::Member)
    }

    /// Inserts `h` into levels `from..=dropout`, creating a new level when
    /// `h` fixes every base point.
    fn insert(&mut self, h: Perm, from: usize, dropout: usize) {
        if dropout == self.levels.len() {
            let b = h.first_moved().expect("residue must be non-trivial");
            self.levels.push(Level::new(b, self.degree));
        }
        let h = Arc::new(h);
        for level in &mut self.levels[from..=dropout] {
            level.add_gen(Arc::clone(&h));
        }
    }

    /// Uniformly random element of a complete chain.
    pub(crate) fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        let mut scratch = Vec::new();
        for level in &self.levels {
            let p = level.orbit[rng.gen_range(0..level.orbit.len())] as usize;
            let u = level.transversal(p);
            // g = u_k ... u_0, deepest level applied first
            g.mul_assign_left(&u, &mut scratch);
        }
        g
    }

    fn with_prefix(degree: usize, hint: &[usize], moved: &[bool]) -> Self {
        let mut levels: Vec<Level> = Vec::new();
        for &b in hint {
            if moved[b] && !levels.iter().any(|l| l.base == b) {
                levels.push(Level::new(b, degree));
            }
        }
        Chain { degree, levels }
    }

    /// Deterministic Schreier–Sims.
    pub(crate) fn schreier_sims(degree: usize, gens: &[Perm], hint: &[usize]) -> Self {
        let gens: Vec<Perm> = {
            let mut v: Vec<Perm> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
            v.sort();
            v.dedup();
            v
        };
        let mut moved = vec![false; degree];
        for g in &gens {
            for (i, x) in g.images().enumerate() {
                if i != x {
                    moved[i] = true;
                }
            }
        }
        let mut chain = Chain::with_prefix(degree, hint, &moved);
        for g in gens {
            let j = chain
                .levels
                .iter()
                .position(|l| !g.fixes(l.base))
                .unwrap_or(chain.levels.len());
            chain.insert(g, 0, j);
        }

        let mut i = chain.levels.len();
        while i > 0 {
            match chain.process_level(i - 1) {
                None => i -= 1,
                Some(j) => i = j + 1,
            }
        }
        chain
    }

    /// Checks Schreier generators of level `i`; on the first failure inserts
    /// the residue and returns the deepest level that changed.
    fn process_level(&mut self, i: usize) -> Option<usize> {
        let (upper, lower) = self.levels.split_at_mut(i + 1);
        let level = &mut upper[i];
        for k in 0..level.gens.len() {
            while level.checked[k] < level.orbit.len() {
                let pos = level.checked[k];
                level.checked[k] += 1;
                let p = level.orbit[pos] as usize;
                let s = &level.gens[k];
                let q = s.apply(p);
                if level.sv[q] == k as u32 {
                    // tree edge: trivial Schreier generator
                    continue;
                }
                let mut h = level.transversal(p);
                h.mul_assign_right(s);
                level.strip(&mut h, q);
                if let Some((h, rel)) = sift_through(lower, h) {
                    let dropout = i + 1 + rel;
                    self.insert(h, i + 1, dropout);
                    return Some(dropout);
                }
            }
        }
        None
    }

    /// Builds a chain for the group of `self` with the given base prefix,
    /// using the known order to certify completeness.
    pub(crate) fn rebuild_with_base(&self, hint: &[usize]) -> Chain {
        let target = self.order();
        let mut moved = vec![false; self.degree];
        for g in self.strong_generators() {
            for (i, x) in g.images().enumerate() {
                if i != x {
                    moved[i] = true;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(REBUILD_SEED);
        let gens: Vec<Perm> = self.strong_generators().iter().map(|g| (**g).clone()).collect();
        Chain::random_with_order(self.degree, hint, &moved, &target, gens, |r| {
            self.random_element(r)
        }, &mut rng)
    }

    /// Sifts `seed_gens` and then random elements drawn from `sample` until
    /// the chain order reaches `target`. Every element must lie in the group.
    pub(crate) fn random_with_order<F>(
        degree: usize,
        hint: &[usize],
        moved: &[bool],
        target: &BigUint,
        seed_gens: Vec<Perm>,
        mut sample: F,
        rng: &mut ChaCha8Rng,
    ) -> Chain
    where
        F: FnMut(&mut ChaCha8Rng) -> Perm,
    {
        let mut chain = Chain::with_prefix(degree, hint, moved);
        for g in seed_gens {
            if chain.order() == *target {
                break;
            }
            if let Sift::Dropout(h, j) = chain.sift_from(g, 0) {
                chain.insert(h, 0, j);
            }
        }
        let mut misses = 0u32;
        while chain.order() < *target {
            let r = sample(rng);
            match chain.sift_from(r, 0) {
                Sift::Dropout(h, j) => {
                    chain.insert(h, 0, j);
                    misses = 0;
                }
                Sift::Member => {
                    misses += 1;
                    assert!(
                        misses < 100_000,
                        "random Schreier-Sims stalled below the known order"
                    );
                }
            }
        }
        debug_assert_eq!(chain.order(), *target);
        chain
    }
}

fn sift_through(levels: &[Level], mut h: Perm) -> Option<(Perm, usize)> {
    for (j, level) in levels.iter().enumerate() {
        let p = h.apply(level.base);
        if !level.in_orbit(p) {
            return Some((h, j));
        }
        level.strip(&mut h, p);
    }
    if h.is_identity() {
        None
    } else {
        Some((h, levels.len()))
    }
}
