mod common;

use proptest::prelude::*;

use ramified::factorization::{embed, verify_isometry, Color, FactorError, Pairs};
use ramified::generators::{cogwheel, gen_grid, gen_random_tree, iterated_simplex, seeded_rng};
use ramified::graph::{bfs_distances, is_connected, Graph};
use ramified::recognition::Witness;
use ramified::reference::{reference_recognizer, theta_by_distance};

use common::{random_bipartite, shuffled, small_yes_instances};

fn is_tree(t: &Graph) -> bool {
    t.vertex_count() == t.edge_count() + 1 && is_connected(t)
}

fn check_embedding(g: &Graph) {
    let e = embed(g).unwrap();
    assert!(e.trees.iter().all(is_tree));
    assert!(verify_isometry(&e, g, Pairs::All), "{:?}", g.edges());
    assert_eq!(e.partition.class_of, theta_by_distance(g));
    for s in &e.squares {
        let c: Vec<Color> = s.edges.iter().map(|&x| e.edge_color(x)).collect();
        assert_eq!(c[0], c[2], "opposite sides share a color");
        assert_eq!(c[1], c[3]);
        assert_ne!(c[0], c[1], "adjacent sides differ");
    }
    let mut coords: Vec<_> = g.vertices().map(|v| e.coordinate(v)).collect();
    for v in g.vertices() {
        assert_eq!(e.vertex_at(coords[v].0, coords[v].1), Some(v));
    }
    coords.sort_unstable();
    coords.dedup();
    assert_eq!(coords.len(), g.vertex_count());
    for (x, &(u, v)) in g.edges().iter().enumerate() {
        let i = e.edge_color(x).index();
        let (a, b) = (e.coords[i][u], e.coords[i][v]);
        assert!(e.trees[i].has_edge(a, b));
        assert_eq!(e.coords[1 - i][u], e.coords[1 - i][v]);
    }
}

#[test]
fn small_yes_instances_embed_isometrically() {
    for g in small_yes_instances(6) {
        check_embedding(&g);
    }
}

#[test]
fn named_instances_embed() {
    for g in [
        gen_grid(6, 9).unwrap(),
        cogwheel(8).unwrap(),
        gen_random_tree(60, 9).unwrap(),
    ] {
        check_embedding(&g);
    }
    let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    check_embedding(&iterated_simplex(&p4));
}

#[test]
fn no_instances_are_refused_with_a_witness() {
    let c5 = cogwheel(5).unwrap();
    assert!(matches!(
        embed(&c5),
        Err(FactorError::NotPartialDoubleTree(
            Witness::OddLinkCycle { .. }
        ))
    ));
}

#[test]
fn weighted_grid_distances_add_up() {
    let g = gen_grid(5, 5).unwrap();
    let mut rng = seeded_rng(4);
    let row: Vec<u64> = (0..4)
        .map(|_| rand::Rng::gen_range(&mut rng, 1..9))
        .collect();
    let col: Vec<u64> = (0..4)
        .map(|_| rand::Rng::gen_range(&mut rng, 1..9))
        .collect();
    let edges: Vec<_> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let len = if v == u + 1 { col[u % 5] } else { row[u / 5] };
            (u, v, len)
        })
        .collect();
    let w = Graph::from_weighted_edges(25, &edges).unwrap();
    let e = embed(&w).unwrap();
    for u in w.vertices() {
        let d = bfs_distances(&w, u);
        let d1 = bfs_distances(&e.trees[0], e.coords[0][u]);
        let d2 = bfs_distances(&e.trees[1], e.coords[1][u]);
        for v in w.vertices() {
            assert_eq!(d[v], d1[e.coords[0][v]] + d2[e.coords[1][v]]);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn random_yes_instances_embed(seed in any::<u64>(), shuffle in any::<u64>()) {
        let g = random_bipartite(seed);
        if reference_recognizer(&g) {
            check_embedding(&g);
            check_embedding(&shuffled(&g, shuffle).0);
        }
    }
}
