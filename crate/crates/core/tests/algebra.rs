mod common;

use bei_core::canon::enumerate_connected;
use bei_core::clique::{maximal_cliques, SimplicialComplex};
use bei_core::degeneration::{betti_table, betti_table_with, initial_ideal, stanley_reisner};
use bei_core::homology::{
    alternating_sum, faces_by_size, homology_of_faces, homology_of_faces_exact, reduced_euler_characteristic,
};
use bei_core::invariants::invariants;
use bei_core::oracle::{verify_colon_theorem, verify_initial_ideal, verify_ohtani, verify_primary_decomposition};
use bei_core::Graph;
use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

#[test]
fn initial_ideal_matches_buchberger_on_all_small_labelings() {
    for n in 1..=4 {
        for g in labeled_graphs(n) {
            assert!(verify_initial_ideal(&g).unwrap(), "{g:?}");
        }
    }
}

#[test]
fn initial_ideal_matches_buchberger_on_random_five_vertex_labelings() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(5);
    let classes = enumerate_connected(5).unwrap();
    for g in classes.iter() {
        let mut perm: Vec<usize> = (0..5).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm);
        assert!(verify_initial_ideal(&h).unwrap(), "{h:?}");
    }
}

#[test]
fn symbolic_identities_on_small_classes() {
    for n in 2..=4 {
        for g in enumerate_connected(n).unwrap() {
            assert!(verify_primary_decomposition(&g).unwrap(), "{g:?}");
            for (i, j) in g.edges() {
                assert!(verify_colon_theorem(&g, i, j).unwrap(), "{g:?} e={{{},{}}}", i + 1, j + 1);
            }
            for v in (0..n).filter(|&v| g.is_cut_vertex(v)) {
                assert!(verify_ohtani(&g, v).unwrap(), "{g:?} v={}", v + 1);
            }
        }
    }
}

#[test]
fn linear_strand_counts_generators() {
    for n in 2..=5 {
        for g in enumerate_connected(n).unwrap() {
            let i = initial_ideal(&g);
            let t = betti_table(&i).unwrap();
            assert_eq!(t.get(0, 0), 1);
            for d in 1..=2 * n {
                let count = i.gens().iter().filter(|m| m.degree() == d).count();
                assert_eq!(t.get(1, d), count, "{g:?} degree {d}");
            }
        }
    }
}

#[test]
fn stanley_reisner_dimension_matches_primes() {
    for n in 1..=6 {
        for g in enumerate_connected(n).unwrap() {
            let c = stanley_reisner(&initial_ideal(&g)).unwrap();
            let inv = invariants(&g).unwrap();
            assert_eq!((c.dimension() + 1) as usize, inv.dim, "{g:?}");
            assert!(inv.depth <= inv.dim);
            assert!(!inv.cm || inv.unmixed, "{g:?}");
            assert_eq!(inv.height + inv.dim, 2 * n);
        }
    }
}

#[test]
fn regularity_bounds_by_cliques() {
    for n in 2..=6 {
        for g in enumerate_connected(n).unwrap() {
            let reg = invariants(&g).unwrap().reg;
            let omega = maximal_cliques(&g).omega;
            // Every clique W gives reg <= n - |W| + 1; the largest clique is the binding case.
            assert!(reg + omega <= n + 1, "{g:?}");
            assert!(reg < n);
        }
    }
}

#[test]
fn regularity_is_additive_over_decompositions() {
    for n in 3..=6 {
        for g in enumerate_connected(n).unwrap() {
            let reg = invariants(&g).unwrap().reg;
            for w in g.decomposition_witnesses().unwrap() {
                let [a, b] = &w.parts;
                let (ra, rb) = (invariants(&a.graph).unwrap().reg, invariants(&b.graph).unwrap().reg);
                assert_eq!(reg, ra + rb, "{g:?} at {}", w.vertex + 1);
                if reg + 2 == n {
                    let ok = |p: &Graph, q: &Graph, rq: usize| p.is_path_graph() && rq + 2 == q.n();
                    assert!(ok(&a.graph, &b.graph, rb) || ok(&b.graph, &a.graph, ra), "{g:?}");
                }
            }
        }
    }
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (1usize..=8).prop_flat_map(|v| {
        prop::collection::vec(1u64..(1 << v), 1..8).prop_map(move |faces| SimplicialComplex::from_faces(v, faces))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_are_label_invariant((g, p) in arb_graph_with_perm(1, 6)) {
        prop_assert_eq!(invariants(&g).unwrap(), invariants(&g.relabel(&p)).unwrap());
    }

    #[test]
    fn parallel_scan_is_identical(g in arb_graph(1, 6)) {
        let i = initial_ideal(&g);
        prop_assert_eq!(betti_table_with(&i, false).unwrap(), betti_table_with(&i, true).unwrap());
    }

    #[test]
    fn certified_homology_equals_exact(c in arb_complex()) {
        let by_size = faces_by_size(&c);
        let mut index = vec![0u32; 1 << c.vertex_count];
        let fast = homology_of_faces(&by_size, &mut index);
        let exact = homology_of_faces_exact(&by_size, &mut index);
        prop_assert_eq!(&fast, &exact);
        prop_assert_eq!(alternating_sum(&fast), reduced_euler_characteristic(&by_size));
    }
}
