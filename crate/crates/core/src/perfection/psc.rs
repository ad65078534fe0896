//! Perfect sets of cliques and the two construction operators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Pairwise disjoint, nonempty vertex sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<VertexSet>", into = "Vec<VertexSet>")]
pub struct CliqueFamily {
    cliques: Vec<VertexSet>,
}

impl CliqueFamily {
    pub fn new(cliques: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::EMPTY;
        for (i, q) in cliques.iter().enumerate() {
            if q.is_empty() {
                return Err(Error::InvalidArgument(format!("clique {i} is empty")));
            }
            if q.intersects(seen) {
                return Err(Error::InvalidArgument(format!("clique {i} overlaps an earlier clique")));
            }
            seen |= *q;
        }
        Ok(CliqueFamily { cliques })
    }

    pub fn empty() -> Self {
        CliqueFamily::default()
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// `V(Q)`, the union of all cliques.
    pub fn vertices(&self) -> VertexSet {
        self.cliques.iter().fold(VertexSet::EMPTY, |acc, &q| acc | q)
    }

    /// Applies `f` to every vertex, preserving clique order.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Result<Self> {
        CliqueFamily::new(self.cliques.iter().map(|q| q.iter().map(&f).collect()).collect())
    }
}

impl TryFrom<Vec<VertexSet>> for CliqueFamily {
    type Error = Error;

    fn try_from(cliques: Vec<VertexSet>) -> Result<Self> {
        CliqueFamily::new(cliques)
    }
}

impl From<CliqueFamily> for Vec<VertexSet> {
    fn from(f: CliqueFamily) -> Self {
        f.cliques
    }
}

impl fmt::Display for CliqueFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, q) in self.cliques.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            let items: Vec<String> = q.iter().map(|v| v.to_string()).collect();
            f.write_str(&items.join(","))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for CliqueFamily {
    type Err = Error;

    /// `"0,1;4;6,7"`; the empty string is the empty family.
    fn from_str(s: &str) -> Result<Self> {
        let mut cliques = Vec::new();
        for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let mut q = VertexSet::EMPTY;
            for item in part.split(',').map(str::trim) {
                let v: usize = item
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad vertex {item:?} in clique family")))?;
                if v >= 64 {
                    return Err(Error::VertexOutOfRange { vertex: v, n: 64 });
                }
                q.insert(v);
            }
            cliques.push(q);
        }
        CliqueFamily::new(cliques)
    }
}

/// The first clause of the perfect-set-of-cliques definition that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum PscViolation {
    OutOfRange { clique: usize },
    Homogeneity { clique: usize },
    Distance { first: usize, second: usize, distance: Option<usize> },
    Join { first: usize, second: usize, u: usize, v: usize },
}

impl fmt::Display for PscViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PscViolation::OutOfRange { clique } => {
                write!(f, "clique {clique} has vertices outside the graph")
            }
            PscViolation::Homogeneity { clique } => {
                write!(f, "homogeneity: clique {clique} is not a homogeneous clique")
            }
            PscViolation::Distance { first, second, distance } => match distance {
                Some(d) => write!(f, "distance: cliques {first} and {second} are at distance {d}, not 3"),
                None => write!(f, "distance: cliques {first} and {second} are disconnected"),
            },
            PscViolation::Join { first, second, u, v } => write!(
                f,
                "join: {u} (next to clique {first}) and {v} (next to clique {second}) are not adjacent"
            ),
        }
    }
}

/// Checks every clause of the definition in order: homogeneity of each
/// clique, then pairwise distance exactly 3, then complete joins between
/// the open neighbourhoods.
pub fn check_psc(g: &Graph, family: &CliqueFamily) -> std::result::Result<(), PscViolation> {
    let cliques = family.cliques();
    for (i, &q) in cliques.iter().enumerate() {
        if !q.is_subset(g.vertices()) {
            return Err(PscViolation::OutOfRange { clique: i });
        }
        let closed = g.closed_neighbors(q.first().expect("nonempty"));
        if q.iter().any(|v| g.closed_neighbors(v) != closed) {
            return Err(PscViolation::Homogeneity { clique: i });
        }
    }
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let d = g.set_distance(cliques[i], cliques[j]).expect("nonempty cliques in range");
            if d != Some(3) {
                return Err(PscViolation::Distance { first: i, second: j, distance: d });
            }
        }
    }
    let boundaries: Vec<VertexSet> = cliques.iter().map(|&q| g.boundary(q)).collect();
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            for u in boundaries[i] {
                if let Some(v) = (boundaries[j] - g.neighbors(u)).first() {
                    return Err(PscViolation::Join { first: i, second: j, u, v });
                }
            }
        }
    }
    Ok(())
}

pub fn is_psc(g: &Graph, family: &CliqueFamily) -> bool {
    check_psc(g, family).is_ok()
}

/// `G ∪ K_s`, the new clique taking the last `s` indices.
pub fn apply_union(g: &Graph, s: usize) -> Result<Graph> {
    if s == 0 {
        return Err(Error::InvalidArgument("union needs a clique of order at least 1".into()));
    }
    let total = g.n() + s;
    if total > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge(total, crate::graph::MAX_VERTICES));
    }
    g.disjoint_union(&Graph::complete(s)?)
}

/// Adds a new last vertex adjacent to every vertex outside the family.
pub fn apply_extend(g: &Graph, family: &CliqueFamily) -> Result<Graph> {
    check_psc(g, family).map_err(Error::NotPsc)?;
    let n = g.n();
    if n + 1 > crate::graph::MAX_VERTICES {
        return Err(Error::TooLarge(n + 1, crate::graph::MAX_VERTICES));
    }
    let attached = g.vertices() - family.vertices();
    let mut adj = g.adjacency().to_vec();
    for v in attached {
        adj[v].insert(n);
    }
    adj.push(attached);
    Ok(Graph::from_rows_unchecked(adj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::game::{domination_number, game_value, GameVariant, Mover};

    fn family(s: &str) -> CliqueFamily {
        s.parse().unwrap()
    }

    fn gamma_and_game(g: &Graph) -> (usize, usize) {
        (domination_number(g), game_value(g, GameVariant::Domination, Mover::Dominator).unwrap())
    }

    #[test]
    fn family_parsing() {
        let f = family("0,1; 4 ;6");
        assert_eq!(f.len(), 3);
        assert_eq!(f.to_string(), "0,1;4;6");
        assert!(family("").is_empty());
        assert!("0,1;1".parse::<CliqueFamily>().is_err());
        assert!("a".parse::<CliqueFamily>().is_err());
        assert!(CliqueFamily::new(vec![VertexSet::EMPTY]).is_err());
    }

    #[test]
    fn trivial_families_are_perfect() {
        let g = catalog::cycle(7);
        assert!(is_psc(&g, &CliqueFamily::empty()));
        assert!(is_psc(&g, &family("3")));
        let k = catalog::complete(4);
        assert!(is_psc(&k, &family("0,1,2,3")));
    }

    #[test]
    fn ends_of_p4() {
        let p4 = catalog::path(4);
        assert!(is_psc(&p4, &family("0;3")));
        let p5 = catalog::path(5);
        assert_eq!(
            check_psc(&p5, &family("0;4")),
            Err(PscViolation::Distance { first: 0, second: 1, distance: Some(4) })
        );
    }

    #[test]
    fn violations_name_their_clause() {
        let p3 = catalog::path(3);
        assert_eq!(check_psc(&p3, &family("0,1")), Err(PscViolation::Homogeneity { clique: 0 }));
        // Ends of C6 at distance 3 but their neighbourhoods are not joined.
        let c6 = catalog::cycle(6);
        assert!(matches!(check_psc(&c6, &family("0;3")), Err(PscViolation::Join { .. })));
        let two = catalog::two_p3();
        assert!(matches!(
            check_psc(&two, &family("0;3")),
            Err(PscViolation::Distance { distance: None, .. })
        ));
        assert_eq!(check_psc(&p3, &family("5")), Err(PscViolation::OutOfRange { clique: 0 }));
    }

    #[test]
    fn union_operator() {
        let k1 = catalog::complete(1);
        assert_eq!(apply_union(&k1, 1).unwrap(), Graph::empty(2).unwrap());
        let g = apply_union(&catalog::path(3), 2).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(gamma_and_game(&g), (2, 2));
        assert!(apply_union(&k1, 0).is_err());
        assert!(apply_union(&Graph::empty(60).unwrap(), 5).is_err());
    }

    #[test]
    fn extend_with_empty_family_adds_universal_vertex() {
        let g = apply_extend(&catalog::path(5), &CliqueFamily::empty()).unwrap();
        assert_eq!(g.degree(5), 5);
        assert_eq!(gamma_and_game(&g), (1, 1));
    }

    #[test]
    fn extend_p4_by_its_ends() {
        let g = apply_extend(&catalog::path(4), &family("0;3")).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (1, 4), (2, 3), (2, 4)]);
        assert_eq!(gamma_and_game(&g), (2, 2));
    }

    #[test]
    fn extend_rejects_non_psc() {
        match apply_extend(&catalog::path(5), &family("0;4")) {
            Err(Error::NotPsc(PscViolation::Distance { .. })) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
