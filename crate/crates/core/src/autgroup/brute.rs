use crate::graph::Graph;
use crate::group::PermGroup;
use crate::perm::Perm;

use super::AutError;

/// Largest graph the exhaustive search accepts.
pub const BRUTE_MAX_VERTICES: usize = 10;

/// Calls `visit` on every automorphism, as an image list, by extending
/// partial maps vertex by vertex.
fn for_each_automorphism(g: &Graph, mut visit: impl FnMut(&[usize])) {
    let n = g.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        g: &Graph,
        v: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if v == g.n() {
            visit(image);
            return;
        }
        for w in 0..g.n() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != g.has_edge(image[u], w)) {
                continue;
            }
            image[v] = w;
            used[w] = true;
            go(g, v + 1, image, used, visit);
            used[w] = false;
        }
        image[v] = usize::MAX;
    }
    go(g, 0, &mut image, &mut used, &mut visit);
}

/// Number of automorphisms by exhaustive search.
pub fn count_automorphisms_brute(g: &Graph) -> Result<u64, AutError> {
    super::check_cap(g.n(), BRUTE_MAX_VERTICES)?;
    let mut count = 0;
    for_each_automorphism(g, |_| count += 1);
    Ok(count)
}

/// Automorphism group by exhaustive search.
pub fn brute_automorphisms(g: &Graph) -> Result<PermGroup, AutError> {
    super::check_cap(g.n(), BRUTE_MAX_VERTICES)?;
    let mut group = PermGroup::trivial(g.n());
    let mut gens = Vec::new();
    for_each_automorphism(g, |img| {
        let p = Perm::from_images(img.to_vec()).unwrap();
        if !group.contains(&p).unwrap() {
            gens.push(p);
            group = PermGroup::from_generators(g.n(), gens.clone()).unwrap();
        }
    });
    Ok(group)
}
