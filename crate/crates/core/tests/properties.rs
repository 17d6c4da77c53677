use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use lucas_cubes::enumeration::{cube_spectrum, cube_spectrum_hasse, degree_spectrum, indegree_spectrum, rank_counts};
use lucas_cubes::formulas::IntPolynomial;
use lucas_cubes::lattice::{filter_lattice, is_isomorphic_hasse, omega};
use lucas_cubes::poset::make_lfence;
use lucas_cubes::resonance::{build_chain, perfect_matchings, z_digraph, HexChain};
use lucas_cubes::Poset;

/// Random strict orders on up to 7 elements, from pairs `i < j`.
fn poset_strategy() -> impl Strategy<Value = Poset> {
    (1usize..=7)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec((0..n, 0..n), 0..12)))
        .prop_map(|(n, pairs)| {
            let pairs: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            Poset::from_relations(n, &pairs).expect("acyclic by construction")
        })
}

fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
    proptest::collection::vec(-20i64..=20, 0..6).prop_map(|c| IntPolynomial::from_i64(&c))
}

fn weighted_sum(v: &[BigUint]) -> BigUint {
    v.iter().enumerate().map(|(k, c)| c * BigUint::from(k)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn filters_are_up_closed(p in poset_strategy()) {
        let filters = p.filters().unwrap();
        for f in &filters {
            prop_assert!(p.is_filter(f.0));
            prop_assert_eq!(p.up_closure(f.0), f.0);
        }
        let antichains: u64 = p.antichain_sizes().unwrap().iter().sum();
        prop_assert_eq!(antichains, filters.len() as u64);
    }

    #[test]
    fn filter_lattices_are_distributive(p in poset_strategy()) {
        let l = filter_lattice(&p).unwrap();
        prop_assert_eq!(l.vertex_count(), p.filters().unwrap().len());
        prop_assert!(l.is_lattice());
        prop_assert!(l.is_distributive());
        prop_assert_eq!(l.height(), p.len());
        for &(lo, hi) in l.arcs() {
            prop_assert_eq!(l.rank(hi), l.rank(lo) + 1);
        }
        prop_assert_eq!(l.join_irreducibles().len(), p.len());
    }

    #[test]
    fn cube_fast_path_matches_generic(p in poset_strategy()) {
        let l = filter_lattice(&p).unwrap();
        prop_assert_eq!(cube_spectrum(&l.undirected()).unwrap(), cube_spectrum_hasse(&l));
    }

    #[test]
    fn degree_sums_count_edges(p in poset_strategy()) {
        let l = filter_lattice(&p).unwrap();
        let g = l.undirected();
        let edges = BigUint::from(g.edge_count());
        prop_assert_eq!(weighted_sum(degree_spectrum(&g).counts()), &edges * 2u32);
        prop_assert_eq!(weighted_sum(indegree_spectrum(&l).counts()), edges);
        prop_assert_eq!(rank_counts(&l).total(), BigUint::from(l.vertex_count()));
    }

    #[test]
    fn dual_is_involution(p in poset_strategy()) {
        let l = filter_lattice(&p).unwrap();
        prop_assert!(is_isomorphic_hasse(&l.dual().dual(), &l).unwrap());
        prop_assert!(is_isomorphic_hasse(&l.dual(), &filter_lattice(&p.dual()).unwrap()).unwrap());
    }

    #[test]
    fn polynomial_ring_laws(p in poly_strategy(), q in poly_strategy(), r in poly_strategy(), x in -5i64..=5) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q), &(&q * &p));
        prop_assert_eq!(&(&p - &p), &IntPolynomial::zero());
        let x = BigInt::from(x);
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p * &q).derivative(), &(&p.derivative() * &q) + &(&p * &q.derivative()));
        prop_assert_eq!(p.compose(&q).eval(&x), p.eval(&q.eval(&x)));
    }

    #[test]
    fn chain_code_round_trip(code in "[LRS]{1,10}") {
        let chain = HexChain::parse(&code).unwrap();
        prop_assert_eq!(chain.to_string(), code.clone());
        prop_assert_eq!(chain.hexagons(), code.len() + 2);
        prop_assert_eq!(chain.to_string().parse::<HexChain>().unwrap(), chain);
    }

    #[test]
    fn chain_resonance_digraphs_are_distributive(code in "[LRS]{0,5}") {
        let chain = HexChain::parse(&code).unwrap();
        // Chains that overlap themselves are rejected, not built.
        let Ok(g) = build_chain(&chain) else { return Ok(()); };
        prop_assert!(g.is_properly_colored());
        prop_assert!(g.cells_are_hexagons());
        let (ms, z) = z_digraph(&g).unwrap();
        prop_assert_eq!(ms.len(), perfect_matchings(&g).len());
        prop_assert!(z.is_lattice());
        prop_assert!(z.is_distributive());
        for m in &ms {
            prop_assert_eq!(m.edges().len() * 2, g.vertex_count());
        }
    }
}

#[test]
fn omega_is_filter_lattice_of_lfence() {
    for n in 1..=9 {
        let l = filter_lattice(&make_lfence(n).unwrap()).unwrap();
        assert!(is_isomorphic_hasse(&l, &omega(n).unwrap()).unwrap(), "n={n}");
    }
}
