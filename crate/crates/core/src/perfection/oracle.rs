//! Definition-level checks. Exponential in `n`; used as trust anchors for
//! the recognizers and as the slow path of a few reports.

use crate::game::{domination_number, game_value, total_domination_number, GameVariant, Mover};
use crate::graph::{Graph, VertexSet};

use super::recognize::is_gg_perfect;

const SUBSET_WARN: usize = 8;
const MINIMAL_WARN: usize = 10;

fn warn_size(what: &str, n: usize, limit: usize) {
    if n > limit {
        log::warn!("{what} on {n} vertices enumerates 2^{n} subgraphs; recommended n <= {limit}");
    }
}

fn subsets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    let n = g.n();
    let top = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (1..=top).map(VertexSet::from_bits)
}

/// `γ_g(G) = γ(G)`.
pub fn is_gg_graph(g: &Graph) -> bool {
    let value = game_value(g, GameVariant::Domination, Mover::Dominator).expect("domination game is always defined");
    value == domination_number(g)
}

/// `γ'_g(G) = γ(G)`.
pub fn is_gg_prime_graph(g: &Graph) -> bool {
    let value = game_value(g, GameVariant::Domination, Mover::Staller).expect("domination game is always defined");
    value == domination_number(g)
}

/// `γ_tg(G) = γ_t(G)` (or `γ'_tg` with `first = Staller`). `None` if the
/// graph has an isolated vertex or is empty.
pub fn is_total_game_graph(g: &Graph, first: Mover) -> Option<bool> {
    let gt = total_domination_number(g).ok()?;
    Some(game_value(g, GameVariant::TotalDomination, first).ok()? == gt)
}

/// Every induced subgraph, disconnected ones included, is a `γ_g`-graph.
pub fn brute_force_gg_perfect(g: &Graph) -> bool {
    warn_size("brute_force_gg_perfect", g.n(), SUBSET_WARN);
    subsets(g).all(|s| is_gg_graph(&g.induced_subgraph(s)))
}

/// Every induced subgraph with domination number 2 is a `γ_g`-graph.
pub fn is_2_gg_perfect(g: &Graph) -> bool {
    warn_size("is_2_gg_perfect", g.n(), SUBSET_WARN);
    subsets(g).filter(|s| s.len() >= 2).all(|s| {
        let f = g.induced_subgraph(s);
        domination_number(&f) != 2 || is_gg_graph(&f)
    })
}

/// Every induced subgraph satisfies `γ'_g = γ`.
pub fn brute_force_gg_prime_perfect(g: &Graph) -> bool {
    warn_size("brute_force_gg_prime_perfect", g.n(), SUBSET_WARN);
    subsets(g).all(|s| is_gg_prime_graph(&g.induced_subgraph(s)))
}

/// Every isolate-free induced subgraph satisfies `γ_tg = γ_t`
/// (`γ'_tg = γ_t` with `first = Staller`).
pub fn brute_force_total_perfect(g: &Graph, first: Mover) -> bool {
    warn_size("brute_force_total_perfect", g.n(), SUBSET_WARN);
    subsets(g).all(|s| is_total_game_graph(&g.induced_subgraph(s), first).unwrap_or(true))
}

/// Not a `γ_g`-graph while every proper induced subgraph is `γ_g`-perfect.
///
/// Perfection is hereditary, so only the vertex-deleted subgraphs are
/// checked, with the polynomial recognizer.
pub fn is_minimally_gg_imperfect(g: &Graph) -> bool {
    warn_size("is_minimally_gg_imperfect", g.n(), MINIMAL_WARN);
    if g.n() == 0 || !g.vertices().iter().all(|v| is_gg_perfect(&g.remove_vertex(v))) {
        return false;
    }
    let minimal = !is_gg_graph(g);
    debug_assert!(!minimal || domination_number(g) == 2, "minimally imperfect graph with γ != 2: {g:?}");
    minimal
}

/// A pair `u, v` such that both `N[u] \ N[v]` and `N[v] \ N[u]` contain
/// two non-adjacent vertices. Its existence rules out 2-`γ_g`-perfection.
pub fn two_nonadjacent_witness(g: &Graph) -> Option<(usize, usize)> {
    let has_non_edge = |s: VertexSet| s.iter().any(|x| !(s - g.closed_neighbors(x)).is_empty());
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let (nu, nv) = (g.closed_neighbors(u), g.closed_neighbors(v));
            if has_non_edge(nu - nv) && has_non_edge(nv - nu) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Shrinks an imperfect graph to a vertex set inducing a minimally
/// imperfect subgraph. `None` when `g` is `γ_g`-perfect.
pub fn minimal_forbidden_subgraph(g: &Graph) -> Option<VertexSet> {
    if is_gg_perfect(g) {
        return None;
    }
    let mut keep = g.vertices();
    for v in g.vertices() {
        let smaller = keep.without(v);
        if !is_gg_perfect(&g.induced_subgraph(smaller)) {
            keep = smaller;
        }
    }
    Some(keep)
}
