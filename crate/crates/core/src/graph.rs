//! Simple undirected graphs on at most 64 vertices with one-word adjacency rows.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into a single machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Lowest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Highest element the set would need to be valid for, i.e. `max + 1`.
    pub fn span(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

/// An immutable simple graph. `adj[v]` is the open neighbourhood of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_size(n)?;
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_size(n)?;
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from adjacency rows, validating symmetry, loops and range.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        check_size(n)?;
        let full = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if !row.is_subset(full) {
                return Err(Error::VertexOutOfRange { vertex: row.span() - 1, n });
            }
            if row.contains(v) {
                return Err(Error::InvalidArgument(format!("self-loop at vertex {v}")));
            }
            for u in row.iter() {
                if !adj[u].contains(v) {
                    return Err(Error::InvalidArgument(format!(
                        "asymmetric adjacency between {v} and {u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Caller guarantees the adjacency invariants.
    pub(crate) fn from_rows_unchecked(adj: Vec<VertexSet>) -> Self {
        debug_assert!(Graph::from_adjacency(adj.clone()).is_ok());
        Graph { n: adj.len(), adj }
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        check_size(n)?;
        let full = VertexSet::full(n);
        Ok(Graph { n, adj: (0..n).map(|v| full.without(v)).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::full(u + 1)).iter().map(move |v| (u, v))
        })
    }

    /// `N[S]`.
    pub fn closed_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    /// `N(S)`, the union of the open neighbourhoods of the members of `S`.
    pub fn open_neighborhood(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc | self.adj[v])
    }

    /// `N'(S) = N[S] \ S`.
    pub fn boundary(&self, s: VertexSet) -> VertexSet {
        self.closed_neighborhood(s) - s
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    pub fn is_isolate_free(&self) -> bool {
        self.isolated_vertices().is_empty()
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: s.span() - 1, n: self.n })
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Subgraph induced by `s`, vertices renumbered in increasing original order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        self.induced_with_map(s).0
    }

    /// Like [`Graph::induced_subgraph`], also returning `map[new] = old`.
    pub fn induced_with_map(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let s = s & self.vertices();
        let map = s.to_vec();
        let mut index = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|u| index[u]).collect())
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    pub fn remove_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices().without(v))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| (full - self.adj[v]).without(v)).collect(),
        }
    }

    /// Vertices of `other` are appended after those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_size(n)?;
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| VertexSet::from_bits(r.bits() << shift)));
        Ok(Graph { n, adj })
    }

    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n);
        let right = g.vertices() - left;
        for v in left {
            g.adj[v] |= right;
        }
        for v in right {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let seen: VertexSet = perm.iter().copied().filter(|&p| p < self.n).collect();
        if seen != self.vertices() {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for v in 0..self.n {
            adj[perm[v]] = self.adj[v].iter().map(|u| perm[u]).collect();
        }
        Ok(Graph { n: self.n, adj })
    }

    /// BFS layers from `sources`; `dist[v] = None` when unreachable.
    fn bfs(&self, sources: VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in sources {
            dist[s] = Some(0);
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest `u,v`-path, `None` if they lie in different components.
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs(VertexSet::singleton(u))[v])
    }

    /// Minimum distance between a vertex of `a` and a vertex of `b`.
    pub fn set_distance(&self, a: VertexSet, b: VertexSet) -> Result<Option<usize>> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptySet("set_distance argument"));
        }
        self.check_set(a)?;
        self.check_set(b)?;
        let dist = self.bfs(a);
        Ok(b.iter().filter_map(|v| dist[v]).min())
    }

    /// Vertex sets of the connected components, ordered by their lowest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of the subgraph induced by `s`, in original vertex labels.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut remaining = s & self.vertices();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = (self.open_neighborhood(frontier) & s) - comp;
                comp |= next;
                frontier = next;
            }
            remaining -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.adj[v]).without(v).is_empty())
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !self.adj[u].intersects(self.adj[v]))
    }

    /// `N[u] = N[v]`.
    pub fn are_true_twins(&self, u: usize, v: usize) -> bool {
        self.closed_neighbors(u) == self.closed_neighbors(v)
    }

    /// `N(u) = N(v)`.
    pub fn are_false_twins(&self, u: usize, v: usize) -> bool {
        self.adj[u] == self.adj[v]
    }

    /// Human-readable `"n; u v; u v"` form.
    pub fn to_edge_list(&self) -> String {
        let mut out = self.n.to_string();
        for (u, v) in self.edges() {
            out.push_str(&format!("; {u} {v}"));
        }
        out
    }

    /// Parses the `"n; u v; u v; ..."` fixture format.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut parts = text.trim().split(';').map(str::trim);
        let head = parts.next().unwrap_or("");
        let n: usize = head
            .parse()
            .map_err(|_| Error::EdgeList(format!("bad vertex count {head:?}")))?;
        let mut edges = Vec::new();
        for part in parts.filter(|p| !p.is_empty()) {
            let ends: Vec<&str> = part.split_whitespace().collect();
            let [a, b] = ends[..] else {
                return Err(Error::EdgeList(format!("expected `u v`, got {part:?}")));
            };
            let parse = |s: &str| {
                s.parse::<usize>().map_err(|_| Error::EdgeList(format!("bad vertex {s:?}")))
            };
            edges.push((parse(a)?, parse(b)?));
        }
        Graph::from_edges(n, edges)
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooLarge(n, MAX_VERTICES))
    } else {
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn induced_path_prefix_is_p3() {
        let p5 = catalog::path(5);
        assert_eq!(p5.induced_subgraph(set(&[0, 1, 2])), catalog::path(3));
        assert_eq!(p5.induced_subgraph(p5.vertices()), p5);
    }

    #[test]
    fn induced_keeps_index_map() {
        let c6 = catalog::cycle(6);
        let (h, map) = c6.induced_with_map(set(&[1, 2, 4]));
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn complement_of_c6_is_the_antihole() {
        let co = catalog::cycle(6).complement();
        assert_eq!(co, catalog::antihole(6));
        assert_eq!(co.edge_count(), 9);
        assert!((0..6).all(|v| co.degree(v) == 3));
    }

    #[test]
    fn union_of_two_p3() {
        let p3 = catalog::path(3);
        let two = p3.disjoint_union(&p3).unwrap();
        assert_eq!(two.n(), 6);
        assert_eq!(two.components(), vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
        assert_eq!(two.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (3, 4), (4, 5)]);
    }

    #[test]
    fn union_overflow_is_rejected() {
        let big = Graph::empty(40).unwrap();
        assert!(matches!(big.disjoint_union(&big), Err(Error::TooLarge(80, 64))));
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn distances() {
        let p4 = catalog::path(4);
        assert_eq!(p4.distance(0, 3).unwrap(), Some(3));
        assert_eq!(p4.distance(2, 2).unwrap(), Some(0));
        let two = catalog::path(3).disjoint_union(&catalog::path(3)).unwrap();
        assert_eq!(two.distance(0, 4).unwrap(), None);
        assert!(p4.distance(0, 4).is_err());
    }

    #[test]
    fn set_distances() {
        let p4 = catalog::path(4);
        assert_eq!(p4.set_distance(set(&[0]), set(&[3])).unwrap(), Some(3));
        assert_eq!(p4.set_distance(set(&[0, 1]), set(&[1, 2])).unwrap(), Some(0));
        assert!(matches!(
            p4.set_distance(VertexSet::EMPTY, set(&[1])),
            Err(Error::EmptySet(_))
        ));
    }

    #[test]
    fn twins() {
        let k3 = Graph::complete(3).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert!(k3.are_true_twins(u, v));
            }
        }
        let star = catalog::complete_bipartite(1, 3);
        assert!(star.are_false_twins(1, 2));
        assert!(!star.are_true_twins(1, 2));
    }

    #[test]
    fn clique_and_triangle_checks() {
        let k4 = Graph::complete(4).unwrap();
        assert!(k4.is_clique(k4.vertices()));
        assert!(!k4.is_triangle_free());
        assert!(catalog::kc_graph(2, 1).is_triangle_free());
        assert!(!catalog::path(3).is_clique(set(&[0, 2])));
        assert!(catalog::path(3).is_clique(VertexSet::EMPTY));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::parse_edge_list("5; 0 1; 1 2;2 3; 3 4").unwrap();
        assert_eq!(g, catalog::path(5));
        assert_eq!(g.to_edge_list(), "5; 0 1; 1 2; 2 3; 3 4");
        assert_eq!(Graph::parse_edge_list("0").unwrap().n(), 0);
        assert!(Graph::parse_edge_list("3; 0 3").is_err());
        assert!(Graph::parse_edge_list("3; 1 1").is_err());
        assert!(Graph::parse_edge_list("x; 0 1").is_err());
        assert!(Graph::parse_edge_list("3; 0 1 2").is_err());
    }

    #[test]
    fn from_adjacency_validates() {
        let bad = vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(bad).is_err());
        let looped = vec![VertexSet::singleton(0)];
        assert!(Graph::from_adjacency(looped).is_err());
        let out = vec![VertexSet::singleton(3)];
        assert!(Graph::from_adjacency(out).is_err());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let p3 = catalog::path(3);
        assert!(p3.relabel(&[0, 0, 1]).is_err());
        let r = p3.relabel(&[1, 0, 2]).unwrap();
        assert_eq!(r.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn empty_graph_is_legal() {
        let g = Graph::empty(0).unwrap();
        assert!(g.components().is_empty());
        assert_eq!(g.complement(), g);
        assert_eq!(g.max_degree(), 0);
    }
}
