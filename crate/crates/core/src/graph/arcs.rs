use super::Graph;

/// Iterator over `s`-arcs in lexicographic order, driven by an explicit stack.
pub struct SArcs<'a> {
    graph: &'a Graph,
    s: usize,
    starts: std::ops::Range<usize>,
    path: Vec<usize>,
    cursor: Vec<usize>,
}

impl<'a> SArcs<'a> {
    pub(super) fn new(graph: &'a Graph, start: Option<usize>, s: usize) -> Self {
        let starts = match start {
            Some(v) => v..v + 1,
            None => 0..graph.n(),
        };
        SArcs {
            graph,
            s,
            starts,
            path: Vec::with_capacity(s + 1),
            cursor: Vec::with_capacity(s + 1),
        }
    }
}

impl Iterator for SArcs<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            if self.path.is_empty() {
                let v = self.starts.next()?;
                self.path.push(v);
                self.cursor.push(0);
            }
            if self.path.len() == self.s + 1 {
                let arc = self.path.clone();
                self.path.pop();
                self.cursor.pop();
                return Some(arc);
            }
            let depth = self.path.len();
            let top = self.path[depth - 1];
            let prev = (depth >= 2).then(|| self.path[depth - 2]);
            let list = self.graph.neighbors(top);
            let c = self.cursor.last_mut().unwrap();
            while *c < list.len() && Some(list[*c]) == prev {
                *c += 1;
            }
            if *c < list.len() {
                let w = list[*c];
                *c += 1;
                self.path.push(w);
                self.cursor.push(0);
            } else {
                self.path.pop();
                self.cursor.pop();
            }
        }
    }
}

/// Number of `s`-arcs starting at `v`, by dynamic programming over arcs.
pub(super) fn count_from(graph: &Graph, v: usize, s: usize) -> u64 {
    if s == 0 {
        return 1;
    }
    // ways[(a, b)] = number of walks ending in arc a -> b
    let mut frontier: Vec<((usize, usize), u64)> =
        graph.neighbors(v).iter().map(|&w| ((v, w), 1)).collect();
    for _ in 1..s {
        let mut next: std::collections::BTreeMap<(usize, usize), u64> = Default::default();
        for &((a, b), ways) in &frontier {
            for &c in graph.neighbors(b) {
                if c != a {
                    *next.entry((b, c)).or_insert(0) += ways;
                }
            }
        }
        frontier = next.into_iter().collect();
    }
    frontier.iter().map(|&(_, w)| w).sum()
}
