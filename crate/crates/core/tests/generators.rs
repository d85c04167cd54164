mod common;

use proptest::prelude::*;

use ramified::generators::{
    asymmetric_tree7, cartesian_product, cliques, cogwheel, gen_cycle, gen_grid, gen_hypercube,
    gen_path, gen_polyomino_polygon, gen_random_connected_bipartite, gen_random_tree,
    gen_staircase_polygon, peripheral_expansion, simplex_graph,
};
use ramified::graph::{is_bipartite, is_connected, Graph};
use ramified::recognition::recognize;
use ramified::reference::{
    automorphism_count, graphs_isomorphic, inc_graph, is_median_graph, MedianCheck,
};

use common::small_graphs;

#[test]
fn simplex_graphs_of_small_graphs() {
    for f in small_graphs(5) {
        let k = simplex_graph(&f);
        assert_eq!(k.cliques, cliques(&f));
        assert_eq!(is_median_graph(&k.graph), MedianCheck::Median);
        let inc = inc_graph(&k.graph).unwrap();
        assert_eq!(
            graphs_isomorphic(&inc.graph, &f),
            Ok(true),
            "{:?}",
            f.edges()
        );
        assert_eq!(recognize(&k.graph).is_yes(), is_bipartite(&f).is_ok());
    }
}

#[test]
fn cogwheel_parity() {
    for n in 3..=10 {
        assert_eq!(
            recognize(&cogwheel(n).unwrap()).is_yes(),
            n % 2 == 0,
            "n = {n}"
        );
    }
}

#[test]
fn named_families() {
    assert_eq!(gen_hypercube(4).unwrap().edge_count(), 32);
    assert_eq!(gen_grid(3, 4).unwrap().edge_count(), 17);
    assert_eq!(gen_cycle(7).unwrap().edge_count(), 7);
    assert_eq!(automorphism_count(&asymmetric_tree7()), Ok(1));
    let p3 = gen_path(3).unwrap();
    assert!(graphs_isomorphic(&cartesian_product(&p3, &p3), &gen_grid(3, 3).unwrap()).unwrap());
    let c3 = gen_cycle(3).unwrap();
    assert!(graphs_isomorphic(&simplex_graph(&c3).graph, &gen_hypercube(3).unwrap()).unwrap());
}

#[test]
fn peripheral_expansion_keeps_median_graphs() {
    let g = gen_grid(3, 3).unwrap();
    let h = peripheral_expansion(&g, &[0, 1, 2]).unwrap();
    assert_eq!(h.vertex_count(), 12);
    assert_eq!(is_median_graph(&h), MedianCheck::Median);
    assert!(peripheral_expansion(&g, &[0, 2]).is_err(), "not convex");
}

fn is_tree(t: &Graph) -> bool {
    t.vertex_count() == t.edge_count() + 1 && is_connected(t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn seeded_generators_are_deterministic(n in 2usize..60, seed in any::<u64>()) {
        let t = gen_random_tree(n, seed).unwrap();
        prop_assert!(is_tree(&t));
        prop_assert_eq!(&t, &gen_random_tree(n, seed).unwrap());
        let b = gen_random_connected_bipartite(n, 0.1, seed).unwrap();
        prop_assert!(is_connected(&b) && is_bipartite(&b).is_ok());
        prop_assert_eq!(&b, &gen_random_connected_bipartite(n, 0.1, seed).unwrap());
        let s = gen_staircase_polygon(1 + n % 10, seed, 1..=4).unwrap();
        prop_assert_eq!(&s, &gen_staircase_polygon(1 + n % 10, seed, 1..=4).unwrap());
        prop_assert_eq!(s.corners().len(), 2 * (1 + n % 10) + 2);
        let p = gen_polyomino_polygon(n, seed, 1..=4).unwrap();
        prop_assert_eq!(&p, &gen_polyomino_polygon(n, seed, 1..=4).unwrap());
    }

    #[test]
    fn products_of_trees_are_yes_instances(a in 1usize..8, b in 1usize..8, seed in any::<u64>()) {
        let g = cartesian_product(&gen_random_tree(a, seed).unwrap(), &gen_random_tree(b, seed ^ 1).unwrap());
        prop_assert!(recognize(&g).is_yes());
    }
}
