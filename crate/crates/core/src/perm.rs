//! Point permutations of a fixed degree.
//!
//! Permutations act on the right: `p.apply(i)` is the image `i^p`, and the
//! product `a * b` first applies `a` and then `b`.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("image list is not a bijection on 0..{degree}: {reason}")]
    NotBijection { degree: usize, reason: String },
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image list, rejecting anything that is
    /// not a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for (i, &x) in images.iter().enumerate() {
            if x >= degree {
                return Err(PermError::NotBijection {
                    degree,
                    reason: format!("image {x} of point {i} is out of range"),
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijection {
                    degree,
                    reason: format!("point {x} appears twice"),
                });
            }
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Product of disjoint or overlapping cycles, applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut result = Perm::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x >= degree || y >= degree {
                    return Err(PermError::NotBijection {
                        degree,
                        reason: format!("cycle point {} out of range", x.max(y)),
                    });
                }
                images[x] = y;
            }
            let c = Perm::from_images(images)?;
            result = &result * &c;
        }
        Ok(result)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl ExactSizeIterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    /// `a.compose(b)` maps `i` to `b(a(i))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self * other)
    }

    /// In-place right multiplication: `self <- self * other`.
    #[inline]
    pub(crate) fn mul_assign_right(&mut self, other: &Perm) {
        debug_assert_eq!(self.degree(), other.degree());
        for x in self.images.iter_mut() {
            *x = other.images[*x as usize];
        }
    }

    /// In-place left multiplication: `self <- other * self`.
    pub(crate) fn mul_assign_left(&mut self, other: &Perm, scratch: &mut Vec<u32>) {
        debug_assert_eq!(self.degree(), other.degree());
        scratch.clear();
        scratch.extend(other.images.iter().map(|&x| self.images[x as usize]));
        std::mem::swap(&mut self.images, scratch);
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.apply(point) == point
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i)
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Cycle decomposition, omitting fixed points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer_lcm(acc, c.len() as u64))
    }
}

fn num_integer_lcm(a: u64, b: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    a / gcd(a, b) * b
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch in product");
        Perm {
            images: self.images.iter().map(|&x| rhs.images[x as usize]).collect(),
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
