//! Induced-subgraph search by backtracking.

use crate::graph::{Graph, VertexSet};

/// Pattern vertices ordered so each one is adjacent to as many earlier
/// vertices as possible, which tightens candidate sets early.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(pattern.n());
    let mut placed = VertexSet::EMPTY;
    while order.len() < pattern.n() {
        let next = (pattern.vertices() - placed)
            .iter()
            .max_by_key(|&v| ((pattern.neighbors(v) & placed).len(), pattern.degree(v), usize::MAX - v))
            .expect("unplaced vertex");
        order.push(next);
        placed.insert(next);
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut candidates = self.host.vertices() - used;
        for &q in &self.order[..depth] {
            let h = self.image[q];
            if self.pattern.has_edge(p, q) {
                candidates &= self.host.neighbors(h);
            } else {
                candidates -= self.host.neighbors(h);
            }
        }
        let need = self.pattern.degree(p);
        let need_non = self.pattern.n() - 1 - need;
        let host_n = self.host.n();
        for h in candidates {
            let deg = self.host.degree(h);
            if deg < need || host_n - 1 - deg < need_non {
                continue;
            }
            self.image[p] = h;
            if self.extend(depth + 1, used.with(h)) {
                return true;
            }
        }
        false
    }
}

/// An embedding `image[p]` of `pattern` as an induced subgraph of `host`.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() {
        return None;
    }
    let mut m = Matcher {
        host,
        pattern,
        order: search_order(pattern),
        image: vec![usize::MAX; pattern.n()],
    };
    m.extend(0, VertexSet::EMPTY).then_some(m.image)
}

pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_induced(host, pattern).is_some()
}
