//! Twin contraction, perfect sets of cliques, the construction operators
//! and the recognizers built on them.

mod classify;
mod contraction;
mod oracle;
mod psc;
mod recognize;
mod script;
mod subgraph;

pub use crate::catalog::{
    antihole, co_domino, co_two_p3, complete, complete_bipartite, cycle, family_f, kc_graph,
    known_min_imperfect, named_graph, path, recognize_kc, two_p3,
};
pub use classify::{
    classify, classify_with, forbidden_subgraph, ClassificationReport, ForbiddenHit,
    TWO_PERFECT_BRUTE_LIMIT,
};
pub use contraction::{is_homogeneous_clique, mhc_contraction, ContractionMap, ContractionReport};
pub use oracle::{
    brute_force_gg_perfect, brute_force_gg_prime_perfect, brute_force_total_perfect, is_2_gg_perfect,
    is_gg_graph, is_gg_prime_graph, is_minimally_gg_imperfect, is_total_game_graph,
    minimal_forbidden_subgraph, two_nonadjacent_witness,
};
pub use psc::{apply_extend, apply_union, check_psc, is_psc, CliqueFamily, PscViolation};
pub use recognize::{
    is_gg_perfect, recognize_gg_perfect, verify_certificate, Certificate, FailureStage, Recognition,
};
pub use script::{build, BuildScript, BuildStep};
pub use subgraph::{contains_induced, find_induced};
