mod common;

use proptest::prelude::*;
use rand::Rng;

use ramified::factorization::embed;
use ramified::generators::{gen_random_tree, gen_staircase_polygon, seeded_rng};
use ramified::graph::{bfs_distances, Graph};
use ramified::oracle::{ComplexPoint, DistanceOracle, LcaStructure, OracleError};
use ramified::polygon::{complex_from_network, grid_network, CellComplex};
use ramified::reference::{all_pairs, brute_force_median};

use common::small_yes_instances;

#[test]
fn distances_and_medians_on_small_yes_instances() {
    for g in small_yes_instances(6) {
        let o = DistanceOracle::build(&embed(&g).unwrap());
        let d = all_pairs(&g);
        let n = g.vertex_count();
        for (u, row) in d.iter().enumerate() {
            for (v, &duv) in row.iter().enumerate() {
                assert_eq!(o.dist(u, v), Ok(duv));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assert_eq!(o.median(x, y, z).ok(), brute_force_median(&g, x, y, z));
                }
            }
        }
    }
}

#[test]
fn sampled_distances_on_a_staircase_network() {
    let arr = grid_network(&gen_staircase_polygon(60, 2, 1..=10).unwrap());
    let g = &arr.network;
    let o = DistanceOracle::build(&embed(g).unwrap());
    let mut rng = seeded_rng(11);
    for _ in 0..20 {
        let u = rng.gen_range(0..g.vertex_count());
        let d = bfs_distances(g, u);
        for v in g.vertices() {
            assert_eq!(o.dist_unchecked(u, v), d[v]);
        }
    }
}

#[test]
fn unknown_vertices_are_errors() {
    let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let o = DistanceOracle::build(&embed(&g).unwrap());
    assert_eq!(o.dist(0, 2), Err(OracleError::UnknownVertex(2)));
    assert_eq!(o.median(0, 1, 5), Err(OracleError::UnknownVertex(5)));
}

/// Lowest common ancestor by definition: the vertex of the `u`-`v` path
/// closest to the root.
fn naive_lca(t: &Graph, u: usize, v: usize) -> usize {
    let (du, dv, d0) = (
        bfs_distances(t, u),
        bfs_distances(t, v),
        bfs_distances(t, 0),
    );
    t.vertices()
        .filter(|&w| du[w] + dv[w] == du[v])
        .min_by_key(|&w| d0[w])
        .unwrap()
}

fn random_point(c: &CellComplex, rng: &mut impl Rng) -> ComplexPoint {
    let g = &c.graph;
    match rng.gen_range(0..3) {
        0 => ComplexPoint::Vertex(rng.gen_range(0..g.vertex_count())),
        1 => {
            let edge = rng.gen_range(0..g.edge_count());
            ComplexPoint::Edge {
                edge,
                offset: rng.gen_range(0..=g.length(edge)),
            }
        }
        _ => {
            let square = rng.gen_range(0..c.squares.len());
            let (x, y) = c.side_lengths(square);
            let side = x.min(y);
            ComplexPoint::Square {
                square,
                a: rng.gen_range(0..=side),
                b: rng.gen_range(0..=side),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lca_matches_definition(n in 1usize..40, seed in any::<u64>()) {
        let t = gen_random_tree(n, seed).unwrap();
        let l = LcaStructure::new(&t);
        let mut rng = seeded_rng(seed);
        for _ in 0..20 {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            prop_assert_eq!(l.lca(u, v), naive_lca(&t, u, v));
            prop_assert_eq!(l.dist(u, v), bfs_distances(&t, u)[v]);
        }
    }

    #[test]
    fn point_distance_is_a_metric(steps in 1usize..8, seed in any::<u64>()) {
        let arr = grid_network(&gen_staircase_polygon(steps, seed, 1..=5).unwrap());
        let c = complex_from_network(&arr.network).unwrap();
        let o = DistanceOracle::build(&embed(&c.graph).unwrap());
        let mut rng = seeded_rng(seed);
        for _ in 0..30 {
            let (p, q, r) = (random_point(&c, &mut rng), random_point(&c, &mut rng), random_point(&c, &mut rng));
            let pq = o.point_dist(&c, p, q).unwrap();
            prop_assert_eq!(pq, o.point_dist(&c, q, p).unwrap());
            prop_assert_eq!(o.point_dist(&c, p, p).unwrap(), 0);
            prop_assert!(pq <= o.point_dist(&c, p, r).unwrap() + o.point_dist(&c, r, q).unwrap());
        }
        for (edge, &(u, v)) in c.graph.edges().iter().enumerate() {
            let start = ComplexPoint::Edge { edge, offset: 0 };
            let end = ComplexPoint::Edge { edge, offset: c.graph.length(edge) };
            prop_assert_eq!(o.point_dist(&c, start, ComplexPoint::Vertex(u)).unwrap(), 0);
            prop_assert_eq!(o.point_dist(&c, end, ComplexPoint::Vertex(v)).unwrap(), 0);
        }
    }
}
