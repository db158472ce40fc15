use std::collections::HashMap;

use super::{check_size, invalid, ConstructedInstance, FamilyError};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Perm;

/// All `k`-subsets of `0..n` as bit masks, in colex order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    assert!(n < 64);
    let mut out: Vec<u64> = Vec::new();
    if k > n {
        return out;
    }
    // Gosper's hack walks masks of fixed popcount in increasing order.
    if k == 0 {
        return vec![0];
    }
    let mut m: u64 = (1 << k) - 1;
    while m < (1 << n) {
        out.push(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

/// Image of a subset under a point permutation of its ground set.
pub(crate) fn map_mask(mask: u64, sigma: &Perm) -> u64 {
    let mut out = 0;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        out |= 1 << sigma.apply(i);
        rest &= rest - 1;
    }
    out
}

pub(crate) fn mask_label(mask: u64) -> String {
    let items: Vec<String> = (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Permutation of vertices induced by a point permutation acting on a list
/// of subset layers laid out consecutively.
fn induced_on_layers(layers: &[&[u64]], sigma: &Perm) -> Perm {
    let mut images = Vec::new();
    let mut offset = 0;
    for layer in layers {
        for &m in layer.iter() {
            let j = layer.binary_search(&map_mask(m, sigma)).unwrap();
            images.push(offset + j);
        }
        offset += layer.len();
    }
    Perm::from_images(images).unwrap()
}

fn natural_symmetric_on(layers: &[&[u64]], points: usize) -> Result<PermGroup, FamilyError> {
    let gens = PermGroup::symmetric(points)
        .generators()
        .iter()
        .map(|s| induced_on_layers(layers, s))
        .collect();
    let degree = layers.iter().map(|l| l.len()).sum();
    Ok(PermGroup::from_generators(degree, gens)?)
}

/// The Odd graph `O_k`: the `(k-1)`-subsets of a `(2k-1)`-set, adjacent
/// when disjoint, with the natural action of `S_{2k-1}`.
pub fn odd_graph(k: usize, limits: &Limits) -> Result<ConstructedInstance, FamilyError> {
    if k < 3 {
        return Err(invalid("odd_graph", format!("need k >= 3, got {k}")));
    }
    let (n, points) = (k - 1, 2 * k - 1);
    if points >= 64 {
        return Err(invalid("odd_graph", format!("k = {k} is too large")));
    }
    check_size("odd_graph", binomial(points, n), limits)?;
    let verts = k_subsets(points, n);
    let mut edges = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(verts.len(), &edges).unwrap();
    let group = natural_symmetric_on(&[&verts], points)?;
    let labels = verts.iter().map(|&m| mask_label(m)).collect();
    ConstructedInstance::new(format!("O_{k}"), graph, Some(group), labels)
}

/// Inclusion graph of the `m`-subsets (vertices `0..C(n,m)`) and the
/// `(m-1)`-subsets (the remaining vertices) of an `n`-set, with `S_n`.
pub fn johnson_incidence(
    n: usize,
    m: usize,
    limits: &Limits,
) -> Result<ConstructedInstance, FamilyError> {
    if m < 2 || m + 1 > n || n >= 64 {
        return Err(invalid(
            "johnson_incidence",
            format!("need 2 <= m <= n - 1, got n = {n}, m = {m}"),
        ));
    }
    check_size("johnson_incidence", binomial(n, m) + binomial(n, m - 1), limits)?;
    let upper = k_subsets(n, m);
    let lower = k_subsets(n, m - 1);
    let offset = upper.len();
    let mut edges = Vec::new();
    for (i, &a) in upper.iter().enumerate() {
        for (j, &b) in lower.iter().enumerate() {
            if a & b == b {
                edges.push((i, offset + j));
            }
        }
    }
    let graph = Graph::from_edges(offset + lower.len(), &edges).unwrap();
    let group = natural_symmetric_on(&[&upper, &lower], n)?;
    let labels = upper.iter().chain(&lower).map(|&s| mask_label(s)).collect();
    let mut inst =
        ConstructedInstance::new(format!("Gamma_{{{m},{n}}}"), graph, Some(group), labels)?;
    if n == 2 * m + 1 {
        inst = inst.with_note("doubled Odd graph");
    }
    if m == n - m + 1 {
        inst = inst.with_note("equal-valency exception");
    }
    Ok(inst)
}

/// Incidence graph of the words of length `k` over `0..n` and the maximal
/// cliques of the Hamming graph, with `S_n wr S_k`.
///
/// Word `t` is vertex `sum t_i n^i`. The clique in which coordinate `i`
/// varies and the others agree with a word `t` is vertex
/// `n^k + i n^(k-1) + j`, where `j` indexes `t` with coordinate `i` removed.
pub fn hamming_clique_incidence(
    k: usize,
    n: usize,
    limits: &Limits,
) -> Result<ConstructedInstance, FamilyError> {
    if k < 2 || n < 3 {
        return Err(invalid(
            "hamming_clique_incidence",
            format!("need k >= 2 and n >= 3, got k = {k}, n = {n}"),
        ));
    }
    let words = n
        .checked_pow(k as u32)
        .filter(|&w| w <= limits.max_vertices)
        .ok_or(FamilyError::SizeCap {
            family: "hamming_clique_incidence",
            vertices: usize::MAX,
            cap: limits.max_vertices,
        })?;
    let per_dir = words / n;
    let total = words + k * per_dir;
    check_size("hamming_clique_incidence", total, limits)?;

    let decode = |mut x: usize| -> Vec<usize> {
        (0..k)
            .map(|_| {
                let d = x % n;
                x /= n;
                d
            })
            .collect()
    };
    let encode = |t: &[usize]| t.iter().rev().fold(0, |acc, &d| acc * n + d);
    let clique_of = |i: usize, t: &[usize]| {
        let rest: Vec<usize> = t
            .iter()
            .enumerate()
            .filter(|&(c, _)| c != i)
            .map(|(_, &d)| d)
            .collect();
        words + i * per_dir + encode(&rest)
    };

    let mut edges = Vec::new();
    for w in 0..words {
        let t = decode(w);
        for i in 0..k {
            edges.push((w, clique_of(i, &t)));
        }
    }
    let graph = Graph::from_edges(total, &edges).unwrap();

    // a generator as a map on words, extended to cliques through two members
    let extend = |f: &dyn Fn(&[usize]) -> Vec<usize>| -> Perm {
        let mut images = vec![0; total];
        for (w, image) in images.iter_mut().enumerate().take(words) {
            *image = encode(&f(&decode(w)));
        }
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for w in 0..words {
            let t = decode(w);
            for i in 0..k {
                let c = clique_of(i, &t);
                if seen.contains_key(&c) {
                    continue;
                }
                let mut t2 = t.clone();
                t2[i] = (t[i] + 1) % n;
                let (a, b) = (f(&t), f(&t2));
                let j = (0..k).find(|&c| a[c] != b[c]).unwrap();
                seen.insert(c, clique_of(j, &a));
            }
        }
        for (c, img) in seen {
            images[c] = img;
        }
        Perm::from_images(images).unwrap()
    };
    let swap01 = |t: &[usize]| {
        let mut u = t.to_vec();
        u[0] = match t[0] {
            0 => 1,
            1 => 0,
            d => d,
        };
        u
    };
    let cycle0 = |t: &[usize]| {
        let mut u = t.to_vec();
        u[0] = (t[0] + 1) % n;
        u
    };
    let shift = |t: &[usize]| {
        let mut u = t.to_vec();
        u.rotate_right(1);
        u
    };
    let transpose = |t: &[usize]| {
        let mut u = t.to_vec();
        u.swap(0, 1);
        u
    };
    let gens = vec![
        extend(&swap01),
        extend(&cycle0),
        extend(&shift),
        extend(&transpose),
    ];
    let group = PermGroup::from_generators(total, gens)?;
    let mut labels: Vec<String> = (0..words)
        .map(|w| format!("{:?}", decode(w)))
        .collect();
    for i in 0..k {
        for j in 0..per_dir {
            let mut rest: Vec<String> = {
                let mut x = j;
                (0..k - 1)
                    .map(|_| {
                        let d = x % n;
                        x /= n;
                        d.to_string()
                    })
                    .collect()
            };
            rest.insert(i, "*".to_string());
            labels.push(format!("[{}]", rest.join(", ")));
        }
    }
    ConstructedInstance::new(format!("H({k},{n}) cliques"), graph, Some(group), labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_order() {
        let s = k_subsets(4, 2);
        assert_eq!(s, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(7, 3).len(), 35);
        assert_eq!(mask_label(0b1010), "{1,3}");
    }
}
