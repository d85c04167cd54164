mod common;

use proptest::prelude::*;

use ramified::generators::gen_random_connected;
use ramified::graph::{
    articulation_points, bfs_distances, bfs_order, is_bipartite, is_connected, lexbfs, parse_graph,
    write_graph, Graph, GraphKind, LexBfsOrder,
};

use common::{connected_graphs, naive_lexbfs, small_graphs};

/// The first three earlier-numbered neighbors of each vertex, in numbering order.
fn labels_agree(g: &Graph, o: &LexBfsOrder) -> bool {
    g.vertices().all(|v| {
        let mut earlier: Vec<_> = g
            .neighbors(v)
            .iter()
            .filter(|&&(w, _)| o.number[w] < o.number[v])
            .copied()
            .collect();
        earlier.sort_by_key(|&(w, _)| o.number[w]);
        earlier.truncate(3);
        let l = o.label(v);
        l.vertices().iter().copied().eq(earlier.iter().map(|p| p.0))
            && l.edges().iter().copied().eq(earlier.iter().map(|p| p.1))
    })
}

/// For `a < b < c` in the order with `ac` an edge and `ab` not, some `d < a`
/// is adjacent to `b` but not to `c`.
fn four_point_condition(g: &Graph, order: &[usize]) -> bool {
    let n = order.len();
    for ia in 0..n {
        for ib in ia + 1..n {
            for ic in ib + 1..n {
                let (a, b, c) = (order[ia], order[ib], order[ic]);
                if g.has_edge(a, c) && !g.has_edge(a, b) {
                    let found = order[..ia]
                        .iter()
                        .any(|&d| g.has_edge(d, b) && !g.has_edge(d, c));
                    if !found {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[test]
fn lexbfs_matches_naive_search_on_small_graphs() {
    for g in small_graphs(6) {
        let o = lexbfs(&g, 0).unwrap();
        assert_eq!(o.order, naive_lexbfs(&g), "{:?}", g.edges());
        assert!(labels_agree(&g, &o));
    }
}

#[test]
fn four_cycle_order() {
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let o = lexbfs(&c4, 0).unwrap();
    assert_eq!(o.order, vec![0, 1, 3, 2]);
    assert_eq!(o.label(2).vertices(), &[1, 3]);
}

#[test]
fn articulation_points_match_vertex_deletion() {
    for g in small_graphs(5) {
        let n = g.vertex_count();
        let expected: Vec<usize> = (0..n)
            .filter(|&x| {
                let edges: Vec<_> = g
                    .edges()
                    .iter()
                    .copied()
                    .filter(|&(u, v)| u != x && v != x)
                    .collect();
                let rename = |v: usize| if v > x { v - 1 } else { v };
                let edges: Vec<_> = edges
                    .into_iter()
                    .map(|(u, v)| (rename(u), rename(v)))
                    .collect();
                n > 1 && !is_connected(&Graph::from_edges(n - 1, &edges).unwrap())
            })
            .collect();
        let mut got = articulation_points(&g);
        got.sort_unstable();
        assert_eq!(got, expected, "{:?}", g.edges());
    }
}

#[test]
fn odd_cycles_are_genuine() {
    for g in connected_graphs(5) {
        if let Err(cycle) = is_bipartite(&g) {
            assert!(cycle.is_valid_for(&g));
            assert_eq!(cycle.vertices.len() % 2, 1);
        }
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=9, 0.0f64..0.6, any::<u64>())
        .prop_map(|(n, p, seed)| gen_random_connected(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn lexbfs_orders_are_valid(g in arb_graph()) {
        let o = lexbfs(&g, 0).unwrap();
        prop_assert_eq!(o.order[0], 0);
        prop_assert!(o.order.iter().enumerate().all(|(i, &v)| o.number[v] == i));
        prop_assert!(four_point_condition(&g, &o.order));
        prop_assert!(labels_agree(&g, &o));
        prop_assert_eq!(&o, &lexbfs(&g, 0).unwrap());
    }

    #[test]
    fn bfs_orders_are_layered(g in arb_graph()) {
        let o = bfs_order(&g, 0).unwrap();
        let d = bfs_distances(&g, 0);
        prop_assert!(o.order.windows(2).all(|w| d[w[0]] <= d[w[1]]));
        prop_assert!(o.order[1..].iter().all(|&v| o.parent(v).is_some_and(|p| d[p] + 1 == d[v])));
        prop_assert!(labels_agree(&g, &o));
    }

    #[test]
    fn graph_files_round_trip(g in arb_graph(), weighted in any::<bool>()) {
        let g = if weighted {
            let edges: Vec<_> = g.edges().iter().enumerate().map(|(e, &(u, v))| (u, v, 1 + e as u64 % 5)).collect();
            Graph::from_weighted_edges(g.vertex_count(), &edges).unwrap()
        } else {
            g
        };
        let text = write_graph(&g, None, GraphKind::Graph);
        let back = parse_graph(text.as_bytes()).unwrap();
        prop_assert_eq!(back.graph, g);
    }
}
