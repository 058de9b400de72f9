//! Solution graphs as explicit vertex sets: the exhaustive engine every
//! polynomial answer is checked against.

pub mod search;
pub mod set;

pub use search::{
    bfs_distances, components, diameter, diameter_with_budget, export_dot, graph_stats,
    is_connected, is_induced_path, shortest_path, ComponentLabeling, DiameterMode, GraphStats,
    EXACT_DIAMETER_BUDGET,
};
pub use set::{enumerate_solutions, random_relation, SolutionSet};
