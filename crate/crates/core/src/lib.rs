//! Matchable Lucas cubes and their relatives.
//!
//! The crate builds the matchable Lucas lattices `Ω_n` (filter lattices of
//! L-fences), the Fibonacci cubes `Γ_n` and the Lucas cubes `Λ_n`, checks
//! their structure through interval doubling and through the resonance
//! digraphs of hexagonal chains, and computes six polynomial families
//! (rank, cube, maximal cube, disjoint cube, degree, indegree) both by
//! brute force on the graphs and by recurrences, closed forms and
//! generating functions.
//!
//! Module map:
//!
//! - [`poset`]: posets, fences, L-fences, filters, antichains
//! - [`lattice`]: filter lattices, Hasse graphs, doubling, isomorphism
//! - [`enumeration`]: graph oracles (cubes, packings, spectra, metrics)
//! - [`formulas`]: exact polynomials, sequences and every formula family
//! - [`resonance`]: hexagonal chains, perfect matchings, Z-transformation digraphs
//! - [`verify`]: verification suites and run reports

pub mod enumeration;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod lattice;
pub mod poset;
pub mod resonance;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
pub use lattice::{HasseGraph, Interval};
pub use poset::{Filter, Poset};
