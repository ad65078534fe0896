use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Quotient of a graph by its maximal homogeneous cliques (true-twin classes).
///
/// Classes are numbered by their lowest vertex; that vertex is the class
/// representative and class `i` is vertex `i` of the contracted graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionMap {
    class_of: Vec<usize>,
    classes: Vec<VertexSet>,
    contracted: Graph,
}

impl ContractionMap {
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    pub fn representative(&self, class: usize) -> usize {
        self.classes[class].first().expect("classes are nonempty")
    }

    pub fn representatives(&self) -> VertexSet {
        (0..self.classes.len()).map(|c| self.representative(c)).collect()
    }

    pub fn contracted(&self) -> &Graph {
        &self.contracted
    }

    pub fn is_identity(&self) -> bool {
        self.classes.len() == self.class_of.len()
    }

    pub fn report(&self) -> ContractionReport {
        ContractionReport {
            classes: self.classes.iter().map(|c| c.to_vec()).collect(),
            contracted_edges: self.contracted.edges().collect(),
        }
    }
}

/// Plain-data view of a [`ContractionMap`] for output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionReport {
    pub classes: Vec<Vec<usize>>,
    pub contracted_edges: Vec<(usize, usize)>,
}

pub fn mhc_contraction(g: &Graph) -> ContractionMap {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let closed = g.closed_neighbors(v);
        let class: VertexSet = (v..n)
            .filter(|&u| class_of[u] == usize::MAX && g.closed_neighbors(u) == closed)
            .collect();
        for u in class {
            class_of[u] = classes.len();
        }
        classes.push(class);
    }
    let reps: VertexSet = classes.iter().filter_map(|c| c.first()).collect();
    ContractionMap { class_of, classes, contracted: g.induced_subgraph(reps) }
}

/// A nonempty set whose vertices are pairwise true twins.
pub fn is_homogeneous_clique(g: &Graph, s: VertexSet) -> Result<bool> {
    let Some(first) = s.first() else {
        return Err(Error::EmptySet("homogeneous clique candidate"));
    };
    if !s.is_subset(g.vertices()) {
        return Err(Error::VertexOutOfRange { vertex: s.span() - 1, n: g.n() });
    }
    let closed = g.closed_neighbors(first);
    Ok(s.iter().all(|v| g.closed_neighbors(v) == closed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn clique_collapses_to_a_point() {
        let m = mhc_contraction(&catalog::complete(5));
        assert_eq!(m.classes().len(), 1);
        assert_eq!(m.contracted(), &catalog::complete(1));
    }

    #[test]
    fn path_is_twin_free() {
        let m = mhc_contraction(&catalog::path(5));
        assert!(m.is_identity());
        assert_eq!(m.contracted(), &catalog::path(5));
    }

    #[test]
    fn diamond_merges_its_hubs() {
        // 0 and 3 are the degree-2 vertices, 1 and 2 the degree-3 hubs.
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let m = mhc_contraction(&diamond);
        assert_eq!(m.classes().len(), 3);
        assert_eq!(m.class_of(1), m.class_of(2));
        assert_eq!(m.contracted(), &catalog::path(3));
        // The merged class is the middle vertex of the path.
        assert_eq!(m.class_of(1), 1);
    }

    #[test]
    fn contraction_is_idempotent() {
        let g = Graph::parse_edge_list("7; 0 1; 0 2; 1 2; 2 3; 3 4; 3 5; 4 5; 5 6").unwrap();
        let once = mhc_contraction(&g);
        let twice = mhc_contraction(once.contracted());
        assert!(twice.is_identity());
        for class in once.classes() {
            assert!(is_homogeneous_clique(&g, *class).unwrap());
        }
    }

    #[test]
    fn homogeneous_clique_checks() {
        let p3 = catalog::path(3);
        assert!(is_homogeneous_clique(&p3, VertexSet::singleton(1)).unwrap());
        assert!(!is_homogeneous_clique(&p3, VertexSet::from_iter([0, 1])).unwrap());
        assert!(is_homogeneous_clique(&p3, VertexSet::EMPTY).is_err());
        assert!(is_homogeneous_clique(&p3, VertexSet::singleton(5)).is_err());
        // Non-adjacent vertices are never true twins.
        assert!(!is_homogeneous_clique(&p3, VertexSet::from_iter([0, 2])).unwrap());
    }
}
