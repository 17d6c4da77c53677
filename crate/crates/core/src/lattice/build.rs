use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lattice::hasse::{HasseGraph, Payload};
use crate::poset::{bits, make_fence, make_lfence, FilterLimits, Poset};

/// Default ceiling on the number of filters a lattice may have.
pub const MAX_LATTICE_VERTICES: usize = 1_000_000;

/// Hasse diagram of the filter lattice `F(P)` under anti-inclusion.
///
/// The full ground set is the bottom and the empty filter the top; the
/// rank of a filter is the number of poset elements it leaves out. Vertices
/// are ordered by rank, ties broken by filter mask, and carry their filter
/// as payload.
pub fn filter_lattice(p: &Poset) -> Result<HasseGraph> {
    filter_lattice_with(p, MAX_LATTICE_VERTICES)
}

pub fn filter_lattice_with(p: &Poset, max_vertices: usize) -> Result<HasseGraph> {
    let limits = FilterLimits {
        max_filters: max_vertices,
        ..FilterLimits::default()
    };
    let mut filters = p.filters_with(limits)?;
    filters.sort_by_key(|f| (p.len() - f.len(), f.0));
    let index: HashMap<u64, usize> = filters.iter().enumerate().map(|(i, f)| (f.0, i)).collect();
    let mut arcs = Vec::new();
    for (i, f) in filters.iter().enumerate() {
        // removing a minimal element of F gives an upper cover
        for x in bits(p.minimal_in(f.0)) {
            arcs.push((i, index[&(f.0 & !(1u64 << x))]));
        }
    }
    let payload = filters.iter().map(|&f| Payload::Filter(f)).collect();
    Ok(HasseGraph::new(filters.len(), arcs)?.with_payload(payload))
}

/// The matchable Lucas lattice `Ω_n` (a single vertex for `n = 0`).
pub fn omega(n: usize) -> Result<HasseGraph> {
    if n == 0 {
        return filter_lattice(&Poset::new(0, vec![])?);
    }
    filter_lattice(&make_lfence(n)?)
}

/// The Fibonacci lattice `Γ_n` as the filter lattice of the fence `Z_n`.
pub fn gamma(n: usize) -> Result<HasseGraph> {
    filter_lattice(&make_fence(n)?)
}

/// Binary strings of length `n` with no two adjacent ones, in lexicographic
/// order. With `cyclic`, the first and last position also count as adjacent.
pub fn fibonacci_strings(n: usize, cyclic: bool) -> Vec<String> {
    let mut out = Vec::new();
    for s in 0..(1u64 << n) {
        if s & (s >> 1) != 0 {
            continue;
        }
        if cyclic && n >= 1 && (s & 1 == 1) && (s >> (n - 1) & 1 == 1) {
            continue;
        }
        out.push(s);
    }
    out.iter()
        .map(|&s| (0..n).rev().map(|i| if s >> i & 1 == 1 { '1' } else { '0' }).collect())
        .collect()
}

fn hamming_graph(strings: &[String]) -> Graph {
    let codes: Vec<u64> = strings
        .iter()
        .map(|s| u64::from_str_radix(s, 2).unwrap_or(0))
        .collect();
    let index: HashMap<u64, usize> = codes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let width = strings.first().map_or(0, String::len);
    let mut edges = Vec::new();
    for (i, &c) in codes.iter().enumerate() {
        for b in 0..width {
            if let Some(&j) = index.get(&(c ^ (1u64 << b))) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    Graph::new(codes.len(), edges).expect("hamming edges are valid")
}

/// The Fibonacci cube `Γ_n` built from strings (vertex order as in
/// [`fibonacci_strings`]).
pub fn fibonacci_cube(n: usize) -> Graph {
    hamming_graph(&fibonacci_strings(n, false))
}

/// The Lucas cube `Λ_n`: strings without circular `11`, Hamming edges.
pub fn lucas_cube(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument("Lucas cube needs n >= 1".into()));
    }
    if n > 40 {
        return Err(Error::SizeLimit {
            what: "Lucas cube length",
            actual: n,
            limit: 40,
        });
    }
    Ok(hamming_graph(&fibonacci_strings(n, true)))
}
