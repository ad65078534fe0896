//! Non-isomorphic graph streams and the exhaustive perfection counts.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::parse_graph6;
use crate::perfection::{is_gg_perfect, is_minimally_gg_imperfect};

/// Largest order the builtin generator produces.
pub const BUILTIN_MAX: usize = 7;

/// Ordered colour classes from iterated degree refinement. The order of
/// the classes depends only on the isomorphism type of the graph.
fn refined_cells(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut colour = vec![0usize; n];
    let mut count = usize::from(n > 0);
    loop {
        let signature: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signature.iter().collect();
        distinct.sort();
        distinct.dedup();
        for v in 0..n {
            colour[v] = distinct.binary_search(&&signature[v]).expect("present");
        }
        if distinct.len() == count {
            break;
        }
        count = distinct.len();
    }
    let mut cells = vec![VertexSet::EMPTY; count];
    for (v, &c) in colour.iter().enumerate() {
        cells[c].insert(v);
    }
    cells
}

struct Search<'a> {
    g: &'a Graph,
    slot: Vec<VertexSet>,
    order: Vec<usize>,
    code: Vec<bool>,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, used: VertexSet) {
        let i = self.order.len();
        if i == self.g.n() {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.code < *best,
            };
            if better {
                self.best = Some((self.code.clone(), self.order.clone()));
            }
            return;
        }
        let prefix = self.code.len();
        for v in self.slot[i] - used {
            self.code.extend(self.order.iter().map(|&u| self.g.has_edge(u, v)));
            let keep = match &self.best {
                None => true,
                Some((best, _)) => self.code[..] <= best[..self.code.len()],
            };
            if keep {
                self.order.push(v);
                self.run(used.with(v));
                self.order.pop();
            }
            self.code.truncate(prefix);
        }
    }
}

/// `perm[v]` is the canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let mut slot = Vec::with_capacity(g.n());
    for cell in refined_cells(g) {
        slot.extend(std::iter::repeat_n(cell, cell.len()));
    }
    let mut search = Search { g, slot, order: Vec::new(), code: Vec::new(), best: None };
    search.run(VertexSet::EMPTY);
    let (_, order) = search.best.expect("at least one labelling");
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

/// The relabelling of `g` whose upper triangle, read column by column, is
/// smallest among all labellings that respect the refined colour classes.
/// Two graphs are isomorphic iff their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Graph {
    g.relabel(&canonical_labeling(g)).expect("permutation")
}

/// Sort key: order, then the column-order bit string of the canonical form.
pub fn canonical_key(g: &Graph) -> (usize, Vec<bool>) {
    column_bits(&canonical_form(g))
}

fn column_bits(g: &Graph) -> (usize, Vec<bool>) {
    let bits = (1..g.n()).flat_map(|j| (0..j).map(move |i| (i, j))).map(|(i, j)| g.has_edge(i, j));
    (g.n(), bits.collect())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

fn sort_canonical(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<_> = graphs.into_par_iter().map(|g| (canonical_key(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// One canonical representative of every graph on `n` vertices, in
/// canonical order. Built by adding a vertex to every graph on `n - 1`
/// vertices in every possible way.
pub fn enumerate_nonisomorphic(n: usize) -> Result<Vec<Graph>> {
    if !(1..=BUILTIN_MAX).contains(&n) {
        return Err(Error::EnumerationRange { n, max: BUILTIN_MAX });
    }
    let mut level: Vec<Graph> = vec![catalog::complete(1)];
    for k in 1..n {
        let mut next: BTreeMap<(usize, Vec<bool>), Graph> = BTreeMap::new();
        for g in &level {
            for bits in 0u64..1 << k {
                let attach = VertexSet::from_bits(bits);
                let mut adj = g.adjacency().to_vec();
                for v in attach {
                    adj[v].insert(k);
                }
                adj.push(attach);
                let h = canonical_form(&Graph::from_rows_unchecked(adj));
                next.entry(column_bits(&h)).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}

/// Where a stream of graphs comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    Builtin(usize),
    Graph6File(PathBuf),
}

impl fmt::Display for GraphSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSource::Builtin(n) => write!(f, "builtin n={n}"),
            GraphSource::Graph6File(p) => write!(f, "{}", p.display()),
        }
    }
}

pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })?;
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            parse_graph6(line.trim()).map_err(|e| Error::SourceLine {
                path: path.to_path_buf(),
                line: i + 1,
                source: Box::new(e),
            })
        })
        .collect()
}

impl GraphSource {
    pub fn load(&self) -> Result<Vec<Graph>> {
        match self {
            GraphSource::Builtin(n) => enumerate_nonisomorphic(*n),
            GraphSource::Graph6File(p) => read_graph6_file(p),
        }
    }
}

/// One row of the perfection counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsRow {
    pub n: usize,
    pub perfect_all: usize,
    pub perfect_connected: usize,
    pub min_imperfect: usize,
}

impl CountsRow {
    pub fn tsv(&self) -> String {
        format!("{}\t{}\t{}\t{}", self.n, self.perfect_all, self.perfect_connected, self.min_imperfect)
    }
}

impl std::ops::Add for CountsRow {
    type Output = CountsRow;

    fn add(self, o: CountsRow) -> CountsRow {
        CountsRow {
            n: self.n,
            perfect_all: self.perfect_all + o.perfect_all,
            perfect_connected: self.perfect_connected + o.perfect_connected,
            min_imperfect: self.min_imperfect + o.min_imperfect,
        }
    }
}

/// Published counts for `n = 3..=9`, used by `--check`.
pub fn expected_counts(n: usize) -> Option<CountsRow> {
    let (perfect_all, perfect_connected, min_imperfect) = match n {
        3 => (4, 2, 0),
        4 => (11, 6, 0),
        5 => (32, 19, 2),
        6 => (122, 81, 8),
        7 => (536, 386, 1),
        8 => (2754, 2102, 1),
        9 => (15752, 12476, 1),
        _ => return None,
    };
    Some(CountsRow { n, perfect_all, perfect_connected, min_imperfect })
}

fn common_order(graphs: &[Graph]) -> Result<usize> {
    let Some(first) = graphs.first() else {
        return Err(Error::InvalidArgument("graph source is empty".into()));
    };
    match graphs.iter().find(|g| g.n() != first.n()) {
        Some(other) => Err(Error::InvalidArgument(format!(
            "graph source mixes orders {} and {}",
            first.n(),
            other.n()
        ))),
        None => Ok(first.n()),
    }
}

fn in_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs == 0 {
        return Ok(work());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(work))
}

/// Counts over a list of graphs of one order.
pub fn count_graphs(graphs: &[Graph], jobs: usize) -> Result<CountsRow> {
    let n = common_order(graphs)?;
    let zero = CountsRow { n, perfect_all: 0, perfect_connected: 0, min_imperfect: 0 };
    in_pool(jobs, || {
        graphs
            .par_iter()
            .map(|g| {
                let perfect = is_gg_perfect(g);
                CountsRow {
                    n,
                    perfect_all: usize::from(perfect),
                    perfect_connected: usize::from(perfect && g.is_connected()),
                    min_imperfect: usize::from(!perfect && is_minimally_gg_imperfect(g)),
                }
            })
            .reduce(|| zero, |a, b| a + b)
    })
}

/// `jobs = 0` uses the global thread pool.
pub fn table1(source: &GraphSource, jobs: usize) -> Result<CountsRow> {
    count_graphs(&source.load()?, jobs)
}

/// A minimally imperfect graph and the catalog name it matches, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinImperfect {
    pub graph: Graph,
    pub name: Option<String>,
}

pub fn find_min_imperfect_in(graphs: Vec<Graph>, jobs: usize) -> Result<Vec<MinImperfect>> {
    let found = in_pool(jobs, || {
        let hits: Vec<Graph> =
            graphs.into_par_iter().filter(|g| !is_gg_perfect(g) && is_minimally_gg_imperfect(g)).collect();
        sort_canonical(hits)
    })?;
    Ok(found
        .into_iter()
        .map(|graph| {
            let name = catalog::known_min_imperfect(graph.n())
                .into_iter()
                .find(|(_, h)| are_isomorphic(&graph, h))
                .map(|(name, _)| name);
            MinImperfect { graph, name }
        })
        .collect())
}

/// Every minimally imperfect graph of the stream, canonically sorted.
pub fn find_min_imperfect(source: &GraphSource, jobs: usize) -> Result<Vec<MinImperfect>> {
    find_min_imperfect_in(source.load()?, jobs)
}

/// Compares graphs by their canonical keys.
pub fn canonical_cmp(g: &Graph, h: &Graph) -> Ordering {
    canonical_key(g).cmp(&canonical_key(h))
}
