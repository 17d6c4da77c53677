//! Values computed once by independent means and kept fixed.

use lucas_cubes::enumeration::{max_cube_dimension, max_disjoint_cubes_with, SearchLimits};
use lucas_cubes::formulas::{cube_poly, cube_roots, disjoint_cube_poly, poly, CubeMethod, DisjointMethod, PolyKind};
use lucas_cubes::lattice::{is_isomorphic_graph, lucas_cube, omega};
use lucas_cubes::resonance::{build_chain, HexChain, LucaseneVariant};

/// Maximum numbers of vertex-disjoint induced `k`-cubes in `Ω_n`, `k = 1..`.
const PACKINGS: [(usize, &[usize]); 4] = [
    (9, &[38, 18, 7, 2]),
    (10, &[61, 30, 14, 3, 1]),
    (11, &[99, 49, 23, 8, 2]),
    (12, &[161, 79, 38, 17, 3, 1]),
];

#[test]
fn packing_oracle_table() {
    for (n, row) in PACKINGS {
        let g = omega(n).unwrap().undirected();
        assert_eq!(max_cube_dimension(&g).unwrap(), row.len());
        for (i, &s) in row.iter().enumerate() {
            assert_eq!(max_disjoint_cubes_with(&g, i + 1, SearchLimits::default()).unwrap(), s, "n={n} k={}", i + 1);
        }
    }
}

#[test]
fn disjoint_formula_differs_where_recorded() {
    let mut differ = Vec::new();
    for (n, row) in PACKINGS {
        let s = disjoint_cube_poly(n, DisjointMethod::Recurrence).unwrap();
        for (i, &packed) in row.iter().enumerate() {
            if s.coeff(i + 1) != packed.into() {
                differ.push((n, i + 1));
            }
        }
    }
    assert_eq!(differ, lucas_cubes::verify::checks::DISJOINT_MISMATCHES);
}

#[test]
fn cube_roots_of_q4() {
    let q = cube_poly(4, CubeMethod::Recurrence).unwrap();
    assert_eq!(q.to_plain(), "7 8 2");
    let disc = 8f64 * 8.0 - 4.0 * 2.0 * 7.0;
    let mut expected = [(-8.0 - disc.sqrt()) / 4.0, (-8.0 + disc.sqrt()) / 4.0];
    let mut roots = cube_roots(4).unwrap();
    roots.sort_by(f64::total_cmp);
    expected.sort_by(f64::total_cmp);
    assert_eq!(roots.len(), 2);
    for (r, e) in roots.iter().zip(expected) {
        assert!((r - e).abs() < 1e-9, "{r} vs {e}");
    }
    assert!((expected[0] + 2.70711).abs() < 1e-5 && (expected[1] + 1.29289).abs() < 1e-5);
}

#[test]
fn small_examples() {
    assert_eq!(poly(PolyKind::Rank, 6, None).unwrap().to_plain(), "1 2 3 4 4 3 1");
    assert_eq!(poly(PolyKind::Indegree, 4, None).unwrap().to_plain(), "1 4 2");
    assert_eq!(poly(PolyKind::Degree, 4, None).unwrap().to_plain(), "0 1 3 3");
    let g = build_chain(&HexChain::lucasene(6, LucaseneVariant::StraightFirst).unwrap()).unwrap();
    assert_eq!(g.vertex_count(), 26);
    assert_eq!(g.graph().edge_count(), 31);
}

#[test]
fn omega_4_is_not_the_lucas_cube() {
    let o = omega(4).unwrap().undirected();
    let l = lucas_cube(4).unwrap();
    assert_eq!((o.vertex_count(), l.vertex_count()), (7, 7));
    let max_deg = |g: &lucas_cubes::Graph| (0..g.vertex_count()).map(|v| g.degree(v)).max().unwrap();
    assert_eq!((max_deg(&o), max_deg(&l)), (3, 4));
    assert!(!is_isomorphic_graph(&o, &l).unwrap());
}
