use std::collections::{BTreeSet, HashMap};

use super::fields::SmallField;
use super::{check_size, invalid, ConstructedInstance, FamilyError};
use crate::graph::Graph;
use crate::group::PermGroup;
use crate::limits::Limits;
use crate::perm::Perm;

fn vec_label(prefix: &str, v: &[u8]) -> String {
    let parts: Vec<String> = v.iter().map(|a| a.to_string()).collect();
    format!("{prefix}({})", parts.join(","))
}

/// Point-line incidence graph of the projective plane over the field of
/// order `q` in {2, 3}. Points are vertices `0..q^2+q+1`, lines follow; both
/// are indexed by normalized coordinate vectors in lexicographic order.
pub fn pg_incidence(q: usize) -> Result<ConstructedInstance, FamilyError> {
    if q != 2 && q != 3 {
        return Err(invalid("pg_incidence", format!("unsupported q = {q}; expected 2 or 3")));
    }
    let f = SmallField::prime(q as u8);
    let pts = f.projective_points(3);
    let n = pts.len();
    let mut edges = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if f.dot(p, l) == 0 {
                edges.push((i, n + j));
            }
        }
    }
    let graph = Graph::from_edges(2 * n, &edges).unwrap();
    let labels = pts
        .iter()
        .map(|p| vec_label("p", p))
        .chain(pts.iter().map(|l| vec_label("L", l)))
        .collect();
    ConstructedInstance::new(format!("PG(2,{q}) incidence"), graph, None, labels)
}

/// The generalised quadrangle of order (2,4) from the Hermitian form
/// `x1 y1^2 + x2 y2^2 + x3 y3^2 + x4 y4^2` over GF(4): the 45 isotropic
/// points (vertices `0..45`) and the 27 totally isotropic lines.
pub fn hermitian_gq() -> Result<ConstructedInstance, FamilyError> {
    let f = SmallField::gf4();
    let form = |x: &[u8], y: &[u8]| {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, f.mul(b, b))))
    };
    let pts: Vec<Vec<u8>> = f
        .projective_points(4)
        .into_iter()
        .filter(|p| form(p, p) == 0)
        .collect();
    let index: HashMap<Vec<u8>, usize> = pts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, q) in pts.iter().enumerate().skip(i + 1) {
            if form(p, q) != 0 {
                continue;
            }
            let mut members = vec![i, j];
            for lambda in 1..4 {
                let v: Vec<u8> = p.iter().zip(q).map(|(&a, &b)| f.add(a, f.mul(lambda, b))).collect();
                members.push(index[&f.normalize(&v)]);
            }
            members.sort_unstable();
            members.dedup();
            lines.insert(members);
        }
    }
    let n = pts.len();
    let mut edges = Vec::new();
    for (j, line) in lines.iter().enumerate() {
        edges.extend(line.iter().map(|&p| (p, n + j)));
    }
    let graph = Graph::from_edges(n + lines.len(), &edges).unwrap();
    let labels = pts
        .iter()
        .map(|p| vec_label("p", p))
        .chain(lines.iter().map(|l| format!("L{l:?}")))
        .collect();
    ConstructedInstance::new("GQ(2,4)", graph, None, labels)
}

/// Bipartite graph of the sum-zero vectors `W` of `GF(3)^n` and the affine
/// lines `w + <v_i>`, where `v_i` has `1 - n` in coordinate `i` and 1
/// elsewhere. The group is generated by translations, coordinate
/// permutations and negation.
///
/// A vector is the vertex given by its first `n - 1` coordinates read in
/// base 3 (coordinate 0 least significant); lines follow, sorted by their
/// point sets.
pub fn gf3_translate_graph(n: usize, limits: &Limits) -> Result<ConstructedInstance, FamilyError> {
    if n < 4 {
        return Err(invalid("gf3_translate_graph", format!("need n >= 4, got {n}")));
    }
    if n.is_multiple_of(3) {
        return Err(invalid("gf3_translate_graph", format!("3 divides n = {n}")));
    }
    let words = 3usize
        .checked_pow(n as u32 - 1)
        .filter(|&w| w <= limits.max_vertices)
        .ok_or(FamilyError::SizeCap {
            family: "gf3_translate_graph",
            vertices: usize::MAX,
            cap: limits.max_vertices,
        })?;
    check_size("gf3_translate_graph", words + words * n / 3, limits)?;
    let f = SmallField::prime(3);
    let decode = |mut x: usize| -> Vec<u8> {
        let mut v: Vec<u8> = (0..n - 1)
            .map(|_| {
                let d = (x % 3) as u8;
                x /= 3;
                d
            })
            .collect();
        let sum = v.iter().fold(0, |acc, &a| f.add(acc, a));
        v.push(f.neg(sum));
        v
    };
    let encode = |v: &[u8]| v[..n - 1].iter().rev().fold(0usize, |acc, &d| acc * 3 + d as usize);
    let add = |x: &[u8], y: &[u8]| -> Vec<u8> { x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect() };

    let special = ((1 + 3 * n - n) % 3) as u8; // 1 - n mod 3
    let dirs: Vec<Vec<u8>> = (0..n)
        .map(|i| (0..n).map(|c| if c == i { special } else { 1 }).collect())
        .collect();
    let mut line_set: BTreeSet<[usize; 3]> = BTreeSet::new();
    for w in 0..words {
        let x = decode(w);
        for d in &dirs {
            let y = add(&x, d);
            let z = add(&y, d);
            let mut pts = [w, encode(&y), encode(&z)];
            pts.sort_unstable();
            line_set.insert(pts);
        }
    }
    let lines: Vec<[usize; 3]> = line_set.into_iter().collect();
    let line_index: HashMap<[usize; 3], usize> =
        lines.iter().enumerate().map(|(i, &l)| (l, words + i)).collect();
    let total = words + lines.len();
    let mut edges = Vec::new();
    for (i, l) in lines.iter().enumerate() {
        edges.extend(l.iter().map(|&p| (p, words + i)));
    }
    let graph = Graph::from_edges(total, &edges).unwrap();

    let extend = |f_vec: &dyn Fn(&[u8]) -> Vec<u8>| -> Perm {
        let mut images: Vec<usize> = (0..words).map(|w| encode(&f_vec(&decode(w)))).collect();
        for l in &lines {
            let mut img = l.map(|p| images[p]);
            img.sort_unstable();
            images.push(line_index[&img]);
        }
        Perm::from_images(images).unwrap()
    };
    let mut gens = Vec::new();
    for j in 1..n {
        let mut t = vec![0u8; n];
        t[0] = 1;
        t[j] = 2;
        gens.push(extend(&|x: &[u8]| add(x, &t)));
    }
    gens.push(extend(&|x: &[u8]| {
        let mut y = x.to_vec();
        y.swap(0, 1);
        y
    }));
    gens.push(extend(&|x: &[u8]| {
        let mut y = x.to_vec();
        y.rotate_right(1);
        y
    }));
    gens.push(extend(&|x: &[u8]| x.iter().map(|&a| f.neg(a)).collect()));
    let group = PermGroup::from_generators(total, gens)?;

    let labels = (0..words)
        .map(|w| vec_label("", &decode(w)))
        .chain(lines.iter().map(|l| {
            let pts: Vec<String> = l.iter().map(|&p| vec_label("", &decode(p))).collect();
            format!("{{{}}}", pts.join(" "))
        }))
        .collect();
    ConstructedInstance::new(format!("GF(3)^{n} translates"), graph, Some(group), labels)
}
