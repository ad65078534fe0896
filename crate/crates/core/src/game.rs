//! Exact domination numbers and game values.
//!
//! A game position is the set of already (totally) dominated vertices plus
//! the player to move; the value of a position is the number of moves still
//! played under optimal play. Positions are memoised per invocation.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GameVariant {
    Domination,
    TotalDomination,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mover {
    Dominator,
    Staller,
}

impl Mover {
    pub fn other(self) -> Mover {
        match self {
            Mover::Dominator => Mover::Staller,
            Mover::Staller => Mover::Dominator,
        }
    }
}

impl FromStr for GameVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dom" | "domination" => Ok(GameVariant::Domination),
            "total" | "total_domination" => Ok(GameVariant::TotalDomination),
            _ => Err(Error::InvalidArgument(format!("unknown game variant {s:?}"))),
        }
    }
}

impl FromStr for Mover {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d" | "dominator" => Ok(Mover::Dominator),
            "s" | "staller" => Ok(Mover::Staller),
            _ => Err(Error::InvalidArgument(format!("unknown mover {s:?}"))),
        }
    }
}

impl fmt::Display for GameVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GameVariant::Domination => "domination",
            GameVariant::TotalDomination => "total_domination",
        })
    }
}

impl fmt::Display for Mover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mover::Dominator => "dominator",
            Mover::Staller => "staller",
        })
    }
}

/// A game position: dominated set and the player about to move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub covered: VertexSet,
    pub mover: Mover,
}

/// What playing `v` dominates: `N[v]`, or `N(v)` in the total game.
pub fn gain(g: &Graph, variant: GameVariant, v: usize) -> VertexSet {
    match variant {
        GameVariant::Domination => g.closed_neighbors(v),
        GameVariant::TotalDomination => g.neighbors(v),
    }
}

fn check_total(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyTotal);
    }
    match g.isolated_vertices().first() {
        Some(v) => Err(Error::IsolatedVertex(v)),
        None => Ok(()),
    }
}

/// Smallest `k` such that `k` more gains cover `target - covered`.
fn min_cover(gains: &[VertexSet], target: VertexSet) -> usize {
    fn feasible(gains: &[VertexSet], covers: &[VertexSet], left: VertexSet, k: usize) -> bool {
        let Some(u) = left.first() else {
            return true;
        };
        if k == 0 {
            return false;
        }
        // Some chosen vertex must cover `u`.
        covers[u].iter().any(|v| feasible(gains, covers, left - gains[v], k - 1))
    }

    let n = gains.len();
    let mut covers = vec![VertexSet::EMPTY; n];
    for (v, gv) in gains.iter().enumerate() {
        for u in *gv {
            covers[u].insert(v);
        }
    }
    (0..=n)
        .find(|&k| feasible(gains, &covers, target, k))
        .expect("every vertex can be covered")
}

/// `γ(G)`: the minimum size of a dominating set. Zero on the empty graph.
pub fn domination_number(g: &Graph) -> usize {
    let gains: Vec<_> = (0..g.n()).map(|v| g.closed_neighbors(v)).collect();
    min_cover(&gains, g.vertices())
}

/// `γ_t(G)`: the minimum size of a total dominating set.
pub fn total_domination_number(g: &Graph) -> Result<usize> {
    check_total(g)?;
    let gains: Vec<_> = (0..g.n()).map(|v| g.neighbors(v)).collect();
    Ok(min_cover(&gains, g.vertices()))
}

const DENSE_LIMIT: usize = 16;
const UNKNOWN: u8 = u8::MAX;

enum Memo {
    Dense([Vec<u8>; 2]),
    Sparse([HashMap<u64, u8>; 2]),
}

impl Memo {
    fn new(n: usize) -> Self {
        if n <= DENSE_LIMIT {
            Memo::Dense([vec![UNKNOWN; 1 << n], vec![UNKNOWN; 1 << n]])
        } else {
            Memo::Sparse([HashMap::new(), HashMap::new()])
        }
    }

    fn get(&self, covered: VertexSet, mover: Mover) -> Option<u8> {
        let side = mover as usize;
        match self {
            Memo::Dense(t) => Some(t[side][covered.bits() as usize]).filter(|&x| x != UNKNOWN),
            Memo::Sparse(t) => t[side].get(&covered.bits()).copied(),
        }
    }

    fn put(&mut self, covered: VertexSet, mover: Mover, value: u8) {
        let side = mover as usize;
        match self {
            Memo::Dense(t) => t[side][covered.bits() as usize] = value,
            Memo::Sparse(t) => {
                t[side].insert(covered.bits(), value);
            }
        }
    }

    fn len(&self) -> usize {
        match self {
            Memo::Dense(t) => t.iter().flatten().filter(|&&x| x != UNKNOWN).count(),
            Memo::Sparse(t) => t[0].len() + t[1].len(),
        }
    }
}

/// Minimax solver for one graph and one game variant.
pub struct GameSolver {
    variant: GameVariant,
    gains: Vec<VertexSet>,
    full: VertexSet,
    memo: Memo,
}

impl GameSolver {
    pub fn new(g: &Graph, variant: GameVariant) -> Result<Self> {
        if variant == GameVariant::TotalDomination {
            check_total(g)?;
        }
        Ok(GameSolver {
            variant,
            gains: (0..g.n()).map(|v| gain(g, variant, v)).collect(),
            full: g.vertices(),
            memo: Memo::new(g.n()),
        })
    }

    pub fn variant(&self) -> GameVariant {
        self.variant
    }

    /// Number of memoised positions.
    pub fn states(&self) -> usize {
        self.memo.len()
    }

    /// Vertices that are legal moves at `covered`.
    pub fn legal_moves(&self, covered: VertexSet) -> VertexSet {
        (0..self.gains.len()).filter(|&v| !self.gains[v].is_subset(covered)).collect()
    }

    /// Remaining number of moves from a position under optimal play.
    pub fn value(&mut self, covered: VertexSet, mover: Mover) -> Result<usize> {
        if !covered.is_subset(self.full) {
            return Err(Error::VertexOutOfRange { vertex: covered.span() - 1, n: self.gains.len() });
        }
        Ok(self.solve(covered, mover) as usize)
    }

    fn solve(&mut self, covered: VertexSet, mover: Mover) -> u8 {
        if covered == self.full {
            return 0;
        }
        if let Some(v) = self.memo.get(covered, mover) {
            return v;
        }
        // Moves with equal fresh gain lead to the same position.
        let mut seen: Vec<VertexSet> = Vec::with_capacity(self.gains.len());
        let mut best = match mover {
            Mover::Dominator => u8::MAX,
            Mover::Staller => 0,
        };
        for v in 0..self.gains.len() {
            let fresh = self.gains[v] - covered;
            if fresh.is_empty() || seen.contains(&fresh) {
                continue;
            }
            seen.push(fresh);
            let value = 1 + self.solve(covered | fresh, mover.other());
            best = match mover {
                Mover::Dominator => best.min(value),
                Mover::Staller => best.max(value),
            };
        }
        debug_assert!(!seen.is_empty(), "non-terminal position without legal moves");
        self.memo.put(covered, mover, best);
        best
    }

    /// Each legal first move at `covered` and the value it leads to
    /// (counting the move itself).
    pub fn move_values(&mut self, covered: VertexSet, mover: Mover) -> Result<Vec<(usize, usize)>> {
        self.value(covered, mover)?;
        let moves = self.legal_moves(covered);
        Ok(moves
            .iter()
            .map(|v| (v, 1 + self.solve(covered | self.gains[v], mover.other()) as usize))
            .collect())
    }
}

/// `γ_g`, `γ'_g`, `γ_tg` or `γ'_tg` depending on `variant` and `first`.
pub fn game_value(g: &Graph, variant: GameVariant, first: Mover) -> Result<usize> {
    GameSolver::new(g, variant)?.value(VertexSet::EMPTY, first)
}

/// Value of the game continued from an arbitrary dominated set.
pub fn residual_game_value(
    g: &Graph,
    covered: VertexSet,
    variant: GameVariant,
    mover: Mover,
) -> Result<usize> {
    GameSolver::new(g, variant)?.value(covered, mover)
}

/// All first moves that achieve the game value for the starting player.
pub fn optimal_first_moves(g: &Graph, variant: GameVariant, first: Mover) -> Result<VertexSet> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("the empty graph has no moves".into()));
    }
    let mut solver = GameSolver::new(g, variant)?;
    let target = solver.value(VertexSet::EMPTY, first)?;
    Ok(solver
        .move_values(VertexSet::EMPTY, first)?
        .into_iter()
        .filter(|&(_, value)| value == target)
        .map(|(v, _)| v)
        .collect())
}

/// Exhaustive reference implementations.
pub mod oracle {
    use super::*;

    /// Plain minimax without memo or move merging.
    pub fn naive_value(g: &Graph, variant: GameVariant, covered: VertexSet, mover: Mover) -> usize {
        if covered == g.vertices() {
            return 0;
        }
        let values = (0..g.n())
            .filter(|&v| !gain(g, variant, v).is_subset(covered))
            .map(|v| 1 + naive_value(g, variant, covered | gain(g, variant, v), mover.other()));
        match mover {
            Mover::Dominator => values.min().unwrap(),
            Mover::Staller => values.max().unwrap(),
        }
    }

    /// Smallest subset whose gains cover everything, by exhaustive search.
    pub fn naive_cover(g: &Graph, variant: GameVariant) -> usize {
        (0u64..1 << g.n())
            .map(VertexSet::from_bits)
            .filter(|s| {
                s.iter().fold(VertexSet::EMPTY, |acc, v| acc | gain(g, variant, v)) == g.vertices()
            })
            .map(|s| s.len())
            .min()
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::oracle::*;
    use super::*;
    use crate::catalog;
    use GameVariant::*;
    use Mover::*;

    #[test]
    fn domination_numbers() {
        assert_eq!(domination_number(&catalog::path(5)), 2);
        assert_eq!(domination_number(&catalog::complete(1)), 1);
        assert_eq!(domination_number(&catalog::complete(6)), 1);
        assert_eq!(domination_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(domination_number(&Graph::empty(4).unwrap()), 4);
        for n in 5..=10 {
            assert_eq!(domination_number(&catalog::antihole(n)), 2, "n = {n}");
        }
    }

    #[test]
    fn total_domination_numbers() {
        assert_eq!(total_domination_number(&catalog::path(4)).unwrap(), 2);
        assert_eq!(total_domination_number(&catalog::complete(2)).unwrap(), 2);
        let two = catalog::two_p3();
        assert_eq!(naive_cover(&two, TotalDomination), 4);
        assert_eq!(total_domination_number(&two).unwrap(), 4);
        assert!(matches!(
            total_domination_number(&Graph::empty(3).unwrap()),
            Err(Error::IsolatedVertex(0))
        ));
        let k2_plus_k1 = catalog::complete(2).disjoint_union(&catalog::complete(1)).unwrap();
        assert!(matches!(total_domination_number(&k2_plus_k1), Err(Error::IsolatedVertex(2))));
        assert!(matches!(total_domination_number(&Graph::empty(0).unwrap()), Err(Error::EmptyTotal)));
    }

    #[test]
    fn game_values_from_the_literature() {
        let p5 = catalog::path(5);
        assert_eq!(naive_value(&p5, Domination, VertexSet::EMPTY, Dominator), 3);
        assert_eq!(game_value(&p5, Domination, Dominator).unwrap(), 3);
        assert_eq!(game_value(&catalog::path(4), TotalDomination, Dominator).unwrap(), 3);
        for n in 5..=9 {
            assert_eq!(game_value(&catalog::antihole(n), Domination, Dominator).unwrap(), 3);
        }
        assert_eq!(game_value(&catalog::path(3), Domination, Staller).unwrap(), 2);
        assert_eq!(domination_number(&catalog::path(3)), 1);
        assert_eq!(game_value(&catalog::co_two_p3(), TotalDomination, Dominator).unwrap(), 3);
        assert_eq!(total_domination_number(&catalog::co_two_p3()).unwrap(), 2);
    }

    #[test]
    fn empty_graph_conventions() {
        let g = Graph::empty(0).unwrap();
        assert_eq!(game_value(&g, Domination, Dominator).unwrap(), 0);
        assert_eq!(game_value(&g, Domination, Staller).unwrap(), 0);
        assert!(game_value(&g, TotalDomination, Dominator).is_err());
        assert!(game_value(&catalog::complete(1), TotalDomination, Dominator).is_err());
        assert!(optimal_first_moves(&g, Domination, Dominator).is_err());
    }

    #[test]
    fn residual_values() {
        let p5 = catalog::path(5);
        let all = p5.vertices();
        assert_eq!(residual_game_value(&p5, all, Domination, Staller).unwrap(), 0);
        let centre = p5.closed_neighbors(2);
        assert_eq!(naive_value(&p5, Domination, centre, Staller), 2);
        assert_eq!(residual_game_value(&p5, centre, Domination, Staller).unwrap(), 2);
        assert_eq!(
            residual_game_value(&p5, VertexSet::EMPTY, Domination, Dominator).unwrap(),
            game_value(&p5, Domination, Dominator).unwrap()
        );
        assert!(residual_game_value(&p5, VertexSet::singleton(7), Domination, Staller).is_err());
    }

    #[test]
    fn optimal_first_moves_brute_force() {
        let star = catalog::complete_bipartite(1, 4);
        assert!(optimal_first_moves(&star, Domination, Dominator).unwrap().contains(0));

        let p5 = catalog::path(5);
        let expected: VertexSet = (0..5)
            .filter(|&v| {
                1 + naive_value(&p5, Domination, p5.closed_neighbors(v), Staller) == 3
            })
            .collect();
        let got = optimal_first_moves(&p5, Domination, Dominator).unwrap();
        assert_eq!(got, expected);
    }

    #[test]
    fn staller_first_moves_maximise() {
        let p3 = catalog::path(3);
        let moves = optimal_first_moves(&p3, Domination, Staller).unwrap();
        assert_eq!(moves.to_vec(), vec![0, 2]);
    }

    #[test]
    fn solver_reports_state_count() {
        let mut s = GameSolver::new(&catalog::cycle(6), Domination).unwrap();
        assert_eq!(s.value(VertexSet::EMPTY, Dominator).unwrap(), 3);
        assert!(s.states() > 0);
        let big = catalog::path(20);
        let mut s = GameSolver::new(&big, Domination).unwrap();
        assert!(s.value(VertexSet::EMPTY, Dominator).unwrap() >= domination_number(&big));
    }

    #[test]
    fn parse_variants_and_movers() {
        assert_eq!("dom".parse::<GameVariant>().unwrap(), Domination);
        assert_eq!("total".parse::<GameVariant>().unwrap(), TotalDomination);
        assert_eq!("s".parse::<Mover>().unwrap(), Staller);
        assert!("x".parse::<Mover>().is_err());
    }
}
