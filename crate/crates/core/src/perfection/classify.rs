use serde::{Deserialize, Serialize};

use super::oracle::{is_2_gg_perfect, is_minimally_gg_imperfect, minimal_forbidden_subgraph};
use super::recognize::{recognize_gg_perfect, Certificate};
use super::subgraph::{contains_induced, find_induced};
use crate::catalog;
use crate::graph::Graph;

/// Above this order the 2-perfection verdict is taken from the recognizer
/// instead of the subgraph enumeration.
pub const TWO_PERFECT_BRUTE_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenHit {
    pub name: String,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub gg_perfect: bool,
    pub two_gg_perfect: bool,
    pub gg_prime_perfect: bool,
    /// `None` when the graph is empty or has an isolated vertex.
    pub tg_perfect: Option<bool>,
    pub tg_prime_perfect: Option<bool>,
    pub min_imperfect: bool,
    pub certificate: Certificate,
    pub forbidden: Option<ForbiddenHit>,
}

/// Named minimal obstructions that fit in a graph on `n` vertices.
fn obstructions(n: usize) -> Vec<(String, Graph)> {
    let mut out = vec![("2P3".to_string(), catalog::two_p3())];
    out.extend((5..=n.min(6)).flat_map(catalog::known_min_imperfect).filter(|(name, _)| name != "F1"));
    out.extend((7..=n).map(|k| (format!("antihole{k}"), catalog::antihole(k))));
    out
}

/// Looks for a catalog obstruction inside `g`; with `shrink`, falls back to
/// deleting vertices while imperfection persists.
pub fn forbidden_subgraph(g: &Graph, shrink: bool) -> Option<ForbiddenHit> {
    for (name, pattern) in obstructions(g.n()) {
        if let Some(image) = find_induced(g, &pattern) {
            let mut vertices = image;
            vertices.sort_unstable();
            return Some(ForbiddenHit { name, vertices });
        }
    }
    if shrink {
        return minimal_forbidden_subgraph(g).map(|s| ForbiddenHit { name: "unnamed".into(), vertices: s.to_vec() });
    }
    None
}

fn is_cluster(g: &Graph) -> bool {
    g.components().into_iter().all(|c| g.is_clique(c))
}

pub fn classify(g: &Graph) -> ClassificationReport {
    classify_with(g, false)
}

pub fn classify_with(g: &Graph, shrink: bool) -> ClassificationReport {
    let recognition = recognize_gg_perfect(g);
    let two_gg_perfect =
        if g.n() <= TWO_PERFECT_BRUTE_LIMIT { is_2_gg_perfect(g) } else { recognition.perfect };
    let total_applies = g.n() > 0 && g.is_isolate_free();
    let p4_free = !contains_induced(g, &catalog::path(4));
    let forbidden = if recognition.perfect { None } else { forbidden_subgraph(g, shrink) };
    ClassificationReport {
        n: g.n(),
        gg_perfect: recognition.perfect,
        two_gg_perfect,
        gg_prime_perfect: is_cluster(g),
        tg_perfect: total_applies.then(|| p4_free && !contains_induced(g, &catalog::co_two_p3())),
        tg_prime_perfect: total_applies.then_some(p4_free),
        min_imperfect: !recognition.perfect && is_minimally_gg_imperfect(g),
        certificate: recognition.certificate,
        forbidden,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_cliques() {
        let g = catalog::complete(4).disjoint_union(&catalog::complete(4)).unwrap();
        let g = g.disjoint_union(&catalog::complete(4)).unwrap();
        let r = classify(&g);
        assert!(r.gg_perfect && r.gg_prime_perfect && r.two_gg_perfect);
        assert_eq!(r.tg_prime_perfect, Some(true));
        assert!(r.forbidden.is_none());
    }

    #[test]
    fn p4_total_verdicts() {
        let r = classify(&catalog::path(4));
        assert_eq!(r.tg_perfect, Some(false));
        assert_eq!(r.tg_prime_perfect, Some(false));
        assert!(r.gg_perfect);
        assert!(!r.gg_prime_perfect);
    }

    #[test]
    fn c4_is_total_perfect() {
        assert_eq!(classify(&catalog::cycle(4)).tg_perfect, Some(true));
    }

    #[test]
    fn co_domino_is_minimal() {
        let r = classify(&catalog::co_domino());
        assert!(r.min_imperfect && !r.gg_perfect && !r.two_gg_perfect);
        assert_eq!(r.forbidden.unwrap().name, "co-domino");
    }

    #[test]
    fn kc_and_k1() {
        assert!(classify(&catalog::kc_graph(3, 2)).gg_perfect);
        let r = classify(&catalog::complete(1));
        assert!(r.gg_perfect && r.two_gg_perfect && r.gg_prime_perfect && !r.min_imperfect);
        assert_eq!(r.tg_perfect, None);
        let r = classify(&catalog::complete(2));
        assert_eq!((r.tg_perfect, r.tg_prime_perfect), (Some(true), Some(true)));
    }

    #[test]
    fn forbidden_hits() {
        let r = classify(&catalog::path(7));
        let hit = r.forbidden.unwrap();
        assert!(hit.name == "P5" || hit.name == "2P3", "{}", hit.name);
        let g = catalog::antihole(8);
        assert_eq!(classify(&g).forbidden.unwrap().name, "antihole8");
        assert!(forbidden_subgraph(&catalog::path(4), true).is_none());
    }
}
