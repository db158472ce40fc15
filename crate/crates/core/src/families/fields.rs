//! Arithmetic in the fields of order 2, 3 and 4 by lookup.

/// A field of order at most 4 with elements `0..q`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct SmallField {
    pub q: u8,
    add: [[u8; 4]; 4],
    mul: [[u8; 4]; 4],
}

impl SmallField {
    pub fn prime(p: u8) -> Self {
        assert!(p == 2 || p == 3);
        let mut add = [[0; 4]; 4];
        let mut mul = [[0; 4]; 4];
        for a in 0..p {
            for b in 0..p {
                add[a as usize][b as usize] = (a + b) % p;
                mul[a as usize][b as usize] = (a * b) % p;
            }
        }
        SmallField { q: p, add, mul }
    }

    /// GF(4) = {0, 1, w, w + 1} encoded as 0, 1, 2, 3 with `w^2 = w + 1`.
    pub fn gf4() -> Self {
        let add = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]];
        let mul = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
        SmallField { q: 4, add, mul }
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize][b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize][b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q).find(|&b| self.add(a, b) == 0).unwrap()
    }

    pub fn inv(&self, a: u8) -> u8 {
        (1..self.q).find(|&b| self.mul(a, b) == 1).expect("zero has no inverse")
    }

    pub fn dot(&self, x: &[u8], y: &[u8]) -> u8 {
        x.iter().zip(y).fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// Scales `x` so that its first non-zero entry is 1.
    pub fn normalize(&self, x: &[u8]) -> Vec<u8> {
        match x.iter().find(|&&a| a != 0) {
            None => x.to_vec(),
            Some(&lead) => {
                let s = self.inv(lead);
                x.iter().map(|&a| self.mul(s, a)).collect()
            }
        }
    }

    /// All vectors of length `dim`, with the first coordinate varying slowest.
    pub fn vectors(&self, dim: usize) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::new()];
        for _ in 0..dim {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..self.q).map(move |a| {
                        let mut w = v.clone();
                        w.push(a);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// Normalized representatives of the 1-spaces of `GF(q)^dim`.
    pub fn projective_points(&self, dim: usize) -> Vec<Vec<u8>> {
        self.vectors(dim)
            .into_iter()
            .filter(|v| v.iter().any(|&a| a != 0) && self.normalize(v) == *v)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf4_is_a_field() {
        let f = SmallField::gf4();
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let lhs = f.mul(a, f.add(b, c));
                    assert_eq!(lhs, f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                }
            }
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
        // w^3 = 1 for every non-zero element
        for a in 1..4 {
            assert_eq!(f.mul(a, f.mul(a, a)), 1);
        }
    }

    #[test]
    fn projective_point_counts() {
        assert_eq!(SmallField::prime(2).projective_points(3).len(), 7);
        assert_eq!(SmallField::prime(3).projective_points(3).len(), 13);
        assert_eq!(SmallField::gf4().projective_points(4).len(), 85);
        assert_eq!(SmallField::prime(3).neg(1), 2);
    }
}
