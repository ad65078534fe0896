//! Polynomial recognition of game-perfect graphs.
//!
//! The graph is peeled one vertex at a time. Complete components are set
//! aside as `union` steps; at most one non-complete component may remain.
//! From that component a vertex of maximum degree in the twin-contracted
//! graph is removed, after checking that the vertices it does not dominate
//! split into a perfect set of cliques of what is left. Reversing the peel
//! gives a [`BuildScript`] for the input.

use serde::{Deserialize, Serialize};

use super::contraction::mhc_contraction;
use super::psc::{check_psc, CliqueFamily, PscViolation};
use super::script::{BuildScript, BuildStep};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "stage", rename_all = "snake_case")]
pub enum FailureStage {
    /// Two non-complete components, hence an induced `2P3`.
    TwoNonCompleteComponents { depth: usize, first: Vec<usize>, second: Vec<usize> },
    /// The vertices not dominated by `vertex` are not a perfect set of
    /// cliques in `component - vertex`.
    NotPsc {
        depth: usize,
        component: Vec<usize>,
        vertex: usize,
        cliques: Vec<Vec<usize>>,
        violation: PscViolation,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `build(script)` relabelled by `order` (built index `i` is vertex
    /// `order[i]` of the input) equals the input.
    Build { script: BuildScript, order: Vec<usize> },
    Failure { stage: FailureStage },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recognition {
    pub perfect: bool,
    pub certificate: Certificate,
}

type Peel = Result<(Vec<BuildStep>, Vec<usize>), FailureStage>;

fn peel(g: &Graph, s: VertexSet, depth: usize) -> Peel {
    if s.is_empty() {
        return Ok((Vec::new(), Vec::new()));
    }
    let comps = g.components_within(s);
    let (complete, rest): (Vec<VertexSet>, Vec<VertexSet>) =
        comps.into_iter().partition(|&c| g.is_clique(c));

    let (mut steps, mut order, cliques) = match rest[..] {
        [first, second, ..] => {
            return Err(FailureStage::TwoNonCompleteComponents {
                depth,
                first: first.to_vec(),
                second: second.to_vec(),
            })
        }
        [h] => {
            let (steps, order) = peel_connected(g, h, depth)?;
            (steps, order, &complete[..])
        }
        [] => {
            let first = complete[0];
            let order = first.to_vec();
            let mut steps = vec![BuildStep::Start];
            steps.extend((1..order.len()).map(|_| BuildStep::Extend(CliqueFamily::empty())));
            (steps, order, &complete[1..])
        }
    };
    for c in cliques {
        steps.push(BuildStep::Union(c.len()));
        order.extend(c.iter());
    }
    Ok((steps, order))
}

fn peel_connected(g: &Graph, h: VertexSet, depth: usize) -> Peel {
    let (local, map) = g.induced_with_map(h);
    let contraction = mhc_contraction(&local);
    let hat = contraction.contracted();
    let top = hat.max_degree();
    let class = (0..hat.n()).find(|&c| hat.degree(c) == top).expect("nonempty component");
    let v = map[contraction.representative(class)];

    let rest = h.without(v);
    let outer = rest - g.closed_neighbors(v);
    let cliques = g.components_within(outer);

    let (sub, sub_map) = g.induced_with_map(rest);
    let mut index = [usize::MAX; 64];
    for (i, &x) in sub_map.iter().enumerate() {
        index[x] = i;
    }
    let local_family = CliqueFamily::new(
        cliques.iter().map(|q| q.iter().map(|x| index[x]).collect()).collect(),
    )
    .expect("components are disjoint and nonempty");
    if let Err(violation) = check_psc(&sub, &local_family) {
        return Err(FailureStage::NotPsc {
            depth,
            component: h.to_vec(),
            vertex: v,
            cliques: cliques.iter().map(|q| q.to_vec()).collect(),
            violation,
        });
    }

    let (mut steps, mut order) = peel(g, rest, depth + 1)?;
    let mut position = [usize::MAX; 64];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    let family = CliqueFamily::new(
        cliques.iter().map(|q| q.iter().map(|x| position[x]).collect()).collect(),
    )
    .expect("components are disjoint and nonempty");
    steps.push(BuildStep::Extend(family));
    order.push(v);
    Ok((steps, order))
}

/// Decides whether every induced subgraph `F` of `g` has `γ_g(F) = γ(F)`.
///
/// On success the certificate is a construction script for `g`; otherwise
/// it names the recursion stage where the structure breaks.
pub fn recognize_gg_perfect(g: &Graph) -> Recognition {
    match peel(g, g.vertices(), 0) {
        Ok((steps, order)) => Recognition {
            perfect: true,
            certificate: Certificate::Build { script: BuildScript::new(steps), order },
        },
        Err(stage) => Recognition { perfect: false, certificate: Certificate::Failure { stage } },
    }
}

pub fn is_gg_perfect(g: &Graph) -> bool {
    recognize_gg_perfect(g).perfect
}

/// Checks that a build certificate really reconstructs `g`.
pub fn verify_certificate(g: &Graph, certificate: &Certificate) -> bool {
    let Certificate::Build { script, order } = certificate else {
        return false;
    };
    match super::script::build(script) {
        Ok(built) => built.n() == g.n() && built.relabel(order).is_ok_and(|r| r == *g),
        Err(_) => false,
    }
}
