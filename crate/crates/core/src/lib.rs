//! Exact solvers for the domination game and the total domination game on
//! small graphs, with recognizers for the graph classes on which the game
//! value always equals the domination number.

pub mod catalog;
pub mod cli;
pub mod enumeration;
pub mod error;
pub mod game;
pub mod graph;
pub mod graph6;
pub mod perfection;

pub use error::{Error, Result};
pub use game::{
    domination_number, game_value, optimal_first_moves, residual_game_value, total_domination_number,
    GameSolver, GameState, GameVariant, Mover,
};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, write_graph6};
