//! Filter lattices, Hasse diagrams, interval doubling and the Ω/Γ/Λ
//! families.

mod build;
mod doubling;
mod hasse;
mod isomorphism;

pub use build::{
    fibonacci_cube, fibonacci_strings, filter_lattice, filter_lattice_with, gamma, lucas_cube,
    omega, MAX_LATTICE_VERTICES,
};
pub use doubling::{
    cutting_decompositions, cutting_for_element, cuttings_isomorphic_to, day_double,
    day_double_interval, doubled_index, find_cutting_decomposition, is_cutting,
    reconstruct_by_doubling, reconstruct_in_two_steps, Decomposition,
};
pub use hasse::{join_irreducible_poset, HasseGraph, Interval, Order, Payload};
pub use isomorphism::{
    find_isomorphism_graph, find_isomorphism_hasse, is_isomorphic_graph, is_isomorphic_hasse,
    MAX_ISO_VERTICES,
};
