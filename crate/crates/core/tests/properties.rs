use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use loopgraph::deletion::{self, CharpolyEngine, LeafMethod};
use loopgraph::oracle;
use loopgraph::sachs;
use loopgraph::{IntPolynomial, Pseudograph, VertexSet};

fn pseudograph(max_order: usize) -> impl Strategy<Value = Pseudograph> {
    (1..=max_order, 0.0..=1.0f64, 0.0..=1.0f64, any::<u64>()).prop_map(|(p, ed, ld, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Pseudograph::random(p, ed, ld, &mut rng)
    })
}

fn with_permutation(max_order: usize) -> impl Strategy<Value = (Pseudograph, Vec<usize>)> {
    pseudograph(max_order).prop_flat_map(|g| {
        let p = g.order();
        (Just(g), Just((0..p).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sachs_matches_oracle(g in pseudograph(9)) {
        prop_assert_eq!(sachs::charpoly_sachs(&g), oracle::charpoly_of_graph(&g));
    }

    #[test]
    fn subset_sum_matches_enumeration(g in pseudograph(8)) {
        prop_assert_eq!(sachs::charpoly_sachs(&g), sachs::charpoly_sachs_enumerated(&g));
    }

    #[test]
    fn charpoly_is_relabeling_invariant((g, perm) in with_permutation(8)) {
        prop_assert_eq!(sachs::charpoly_sachs(&g), sachs::charpoly_sachs(&g.permuted(&perm)));
    }

    #[test]
    fn figure_weights_partition_coefficients(g in pseudograph(7)) {
        let phi = sachs::charpoly_sachs(&g);
        let mut by_order: BTreeMap<usize, BigInt> = BTreeMap::new();
        for b in sachs::enumerate_basic_figures(&g, None) {
            prop_assert!(b.is_valid_in(&g));
            *by_order.entry(b.order()).or_default() += b.weight();
        }
        let p = g.order();
        for k in 1..=p {
            let total = by_order.get(&k).cloned().unwrap_or_default();
            prop_assert_eq!(phi.coefficient_of(p - k), total);
        }
    }

    #[test]
    fn vertex_deletion_any_prefix((g, perm) in with_permutation(8), cut in 0usize..=8) {
        let prefix = &perm[..cut.min(perm.len())];
        let engine = CharpolyEngine::new(LeafMethod::Oracle);
        let p = deletion::charpoly_vertex_deletion_with(&g, prefix, &engine).unwrap();
        prop_assert_eq!(p, oracle::charpoly_of_graph(&g));
    }

    #[test]
    fn loops_removed_is_order_independent((g, perm) in with_permutation(8)) {
        let loops: Vec<usize> = perm.iter().copied().filter(|&v| g.has_loop(v)).collect();
        let mut sorted = loops.clone();
        sorted.sort_unstable();
        let a = deletion::charpoly_loops_removed(&g, &loops).unwrap();
        let b = deletion::charpoly_loops_removed(&g, &sorted).unwrap();
        prop_assert_eq!(&a, &b);
        let stripped = g.delete_loops(&g.loop_set()).unwrap();
        prop_assert_eq!(a, oracle::charpoly_of_graph(&stripped));
    }

    #[test]
    fn single_loop_removal_identity(g in pseudograph(8)) {
        for v in g.loop_set().iter() {
            let lhs = deletion::charpoly_single_loop_removal(&g, v).unwrap();
            prop_assert_eq!(lhs, oracle::charpoly_of_graph(&g));
        }
    }

    #[test]
    fn delete_vertices_composes(g in pseudograph(9), a in any::<u16>(), b in any::<u16>()) {
        let p = g.order();
        let xs: VertexSet = (0..p).filter(|v| a >> v & 1 == 1).collect();
        let ys: VertexSet = (0..p).filter(|v| b >> v & 1 == 1).collect::<VertexSet>().difference(&xs);
        let (g1, map) = g.delete_vertices(&xs).unwrap();
        let twice = g1.without_vertices(&map.image(&ys)).unwrap();
        let once = g.without_vertices(&xs.union(&ys)).unwrap();
        prop_assert_eq!(twice, once);
    }

    #[test]
    fn coefficient_routes_agree(g in pseudograph(7)) {
        let phi = oracle::charpoly_of_graph(&g);
        let p = g.order();
        for i in 0..=p {
            let expected = phi.coefficient_of(p - i);
            prop_assert_eq!(deletion::coefficient_via_subsets(&g, i).unwrap(), expected.clone());
            prop_assert_eq!(deletion::coefficient_basic_figure_form(&g, i).unwrap(), expected.clone());
            prop_assert_eq!(sachs::sachs_coefficient(&g, i).unwrap(), expected);
        }
    }

    #[test]
    fn loops_plus_edge_aggregates_loop_pairs(g in pseudograph(9), k in 3usize..=9) {
        // Σ over (k-2)-subsets S of the loops of (q - Σ_{v∈S} deg v + |E(G[S])|),
        // signed: a direct count of loops-plus-edge figures.
        let loops = g.loop_set().to_vec();
        let mut total = BigInt::from(0);
        if k - 2 <= loops.len() {
            for mask in 0u32..(1 << loops.len()) {
                if mask.count_ones() as usize != k - 2 {
                    continue;
                }
                let s: VertexSet = loops.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
                let free = g.edges().filter(|&(u, v)| !s.contains(u) && !s.contains(v)).count();
                total += free;
            }
        }
        if k % 2 == 0 {
            total = -total;
        }
        prop_assert_eq!(sachs::contribution_loops_plus_edge(&g, k).unwrap(), total);
    }
}

#[test]
fn all_loops_contribution_is_constant_term_of_loop_graph() {
    // m isolated looped vertices: φ = (x - 1)^m, so coefficient of x^(m-k) is (-1)^k C(m, k).
    for m in 0..=8 {
        let g = Pseudograph::new(m, &[], &(0..m).collect::<Vec<_>>()).unwrap();
        let phi = oracle::charpoly_of_graph(&g);
        assert_eq!(phi, IntPolynomial::pow_x_minus_one(m));
        for k in 0..=m {
            assert_eq!(
                sachs::contribution_all_loops(m, k),
                phi.coefficient_of(m - k)
            );
        }
    }
}
