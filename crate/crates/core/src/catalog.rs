//! Named graph fixtures and the `KC(m, n)` family.
//!
//! Constructors panic if the requested order exceeds 64 vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("catalog graph within limits")
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::complete(n).expect("catalog graph within limits")
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// The complement of `C_n`.
pub fn antihole(n: usize) -> Graph {
    cycle(n).complement()
}

pub fn co_domino() -> Graph {
    build(6, [(0, 1), (2, 1), (3, 4), (4, 5), (3, 5), (0, 2), (1, 3), (4, 2)])
}

pub fn two_p3() -> Graph {
    family_f(1)
}

pub fn co_two_p3() -> Graph {
    two_p3().complement()
}

/// The six bipartite graphs `F1..F6`, from `2P3` up to `K_{3,3}`.
pub fn family_f(index: usize) -> Graph {
    let edges: &[(usize, usize)] = match index {
        1 => &[(1, 2), (3, 2), (4, 5), (5, 6)],
        2 => &[(1, 3), (3, 2), (4, 3), (5, 4), (6, 4)],
        3 => &[(1, 2), (3, 2), (4, 5), (5, 6), (2, 5), (3, 6)],
        4 => &[(1, 2), (3, 2), (4, 3), (5, 4), (6, 5), (2, 5), (1, 4)],
        5 => &[(1, 2), (3, 2), (4, 3), (6, 4), (6, 5), (2, 6), (1, 4), (3, 5)],
        6 => &[(1, 5), (3, 5), (4, 2), (6, 1), (2, 5), (3, 6), (1, 4), (2, 6), (3, 4)],
        _ => panic!("family F has members F1..F6, got F{index}"),
    };
    build(6, edges.iter().map(|&(u, v)| (u - 1, v - 1)))
}

/// `KC(m, n)`: centre `c` = 0, co-centre `d` = 1, then `u_1..u_m`
/// (adjacent to both), then the pendants `v_1..v_n` of `c`.
/// `KC(0, n)` is the star `K_{1,n}` with the centre at 0.
pub fn kc_graph(m: usize, n: usize) -> Graph {
    if m == 0 {
        return build(n + 1, (1..=n).map(|v| (0, v)));
    }
    let u = 2..2 + m;
    let v = 2 + m..2 + m + n;
    let edges = u.flat_map(|x| [(0, x), (1, x)]).chain(v.map(|x| (0, x)));
    build(2 + m + n, edges)
}

/// Returns `(m, n)` with `g` isomorphic to `KC(m, n)`, preferring the
/// smallest `m` when several parameterisations fit.
pub fn recognize_kc(g: &Graph) -> Option<(usize, usize)> {
    let order = g.n();
    if order == 0 || !g.is_connected() {
        return None;
    }
    if g.edge_count() == order - 1 && (0..order).any(|c| g.degree(c) == order - 1) {
        return Some((0, order - 1));
    }
    let mut best: Option<(usize, usize)> = None;
    for c in 0..order {
        let nc = g.neighbors(c);
        if nc.len() + 2 != order {
            continue;
        }
        let Some(d) = (g.vertices() - g.closed_neighbors(c)).first() else {
            continue;
        };
        let nd = g.neighbors(d);
        if nd.is_empty() || !nd.is_subset(nc) {
            continue;
        }
        let common_ok = nd.iter().all(|u| g.neighbors(u) == VertexSet::from_iter([c, d]));
        let pendant_ok = (nc - nd).iter().all(|v| g.neighbors(v) == VertexSet::singleton(c));
        if common_ok && pendant_ok {
            let cand = (nd.len(), nc.len() - nd.len());
            if best.is_none_or(|b| cand.0 < b.0) {
                best = Some(cand);
            }
        }
    }
    best
}

/// Parses names such as `P5`, `C6`, `K4`, `K3,3`, `K_{3,3}`, `F2`,
/// `co-domino`, `antihole7` (or `co-C7`), `2P3`, `co-2P3` and `KC3,2`.
pub fn named_graph(name: &str) -> Result<Graph> {
    let key: String = name.trim().chars().filter(|c| !matches!(c, '_' | '{' | '}' | ' ')).collect();
    let lower = key.to_ascii_lowercase();
    let unknown = || Error::UnknownName(name.to_string());
    let num = |s: &str| s.parse::<usize>().map_err(|_| unknown());
    let bounded = |k: usize| if k <= 64 { Ok(k) } else { Err(Error::TooLarge(k, 64)) };

    match lower.as_str() {
        "co-domino" | "codomino" => return Ok(co_domino()),
        "2p3" => return Ok(two_p3()),
        "co-2p3" | "co2p3" => return Ok(co_two_p3()),
        _ => {}
    }
    if let Some((a, b)) = lower.strip_prefix("kc").and_then(|r| r.split_once(',')) {
        let (m, n) = (num(a)?, num(b)?);
        bounded(m + n + 2)?;
        return Ok(kc_graph(m, n));
    }
    let anti = lower.strip_prefix("antihole").or_else(|| lower.strip_prefix("co-c"));
    if let Some(rest) = anti {
        let k = bounded(num(rest)?)?;
        if k < 5 {
            return Err(Error::InvalidArgument(format!("anti-holes need at least 5 vertices, got {k}")));
        }
        return Ok(antihole(k));
    }
    let (head, rest) = lower.split_at(1);
    match head {
        "p" => Ok(path(bounded(num(rest)?)?)),
        "c" => {
            let k = bounded(num(rest)?)?;
            if k < 3 {
                return Err(Error::InvalidArgument(format!("cycles need at least 3 vertices, got {k}")));
            }
            Ok(cycle(k))
        }
        "k" => match rest.split_once(',') {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                bounded(a + b)?;
                Ok(complete_bipartite(a, b))
            }
            None => Ok(complete(bounded(num(rest)?)?)),
        },
        "f" => match num(rest)? {
            i @ 1..=6 => Ok(family_f(i)),
            _ => Err(unknown()),
        },
        _ => Err(unknown()),
    }
}

/// Minimally game-imperfect graphs on `n` vertices known in closed form.
pub fn known_min_imperfect(n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    if n == 5 {
        out.push(("P5".to_string(), path(5)));
        out.push(("C5".to_string(), cycle(5)));
    }
    if n == 6 {
        for i in 1..=6 {
            out.push((format!("F{i}"), family_f(i)));
        }
        out.push(("co-domino".to_string(), co_domino()));
    }
    if n >= 6 {
        out.push((format!("antihole{n}"), antihole(n)));
    }
    out
}
