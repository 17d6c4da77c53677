//! Brute-force oracles on graphs and Hasse diagrams: induced cubes,
//! maximal cubes, disjoint packings, spectra and metrics.

mod cubes;
mod metrics;
mod packing;
mod spectra;

pub use cubes::{
    count_induced_cubes, count_induced_cubes_hasse, cube_spectrum, cube_spectrum_hasse,
    enumerate_cubes, enumerate_maximal_cubes, max_cube_dimension, CubeSet, MAX_CUBE_GRAPH,
};
pub use metrics::{graph_metrics, graph_metrics_with, hamiltonian_path, GraphMetrics};
pub use packing::{
    max_disjoint_cubes, max_disjoint_cubes_with, max_independent_set, max_matching, SearchLimits,
};
pub use spectra::{degree_spectrum, indegree_spectrum, rank_counts, SpectrumVector};
