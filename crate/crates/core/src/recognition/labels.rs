use std::collections::HashMap;

use super::{OrderingMode, Witness};
use crate::graph::{Graph, LexBfsOrder, Vertex};

/// Size of `L(y) ∩ L(z)` for labels already known to hold at most two entries.
pub(super) fn intersection_size(o: &LexBfsOrder, y: Vertex, z: Vertex) -> usize {
    let lz = o.label(z).vertices();
    o.label(y)
        .vertices()
        .iter()
        .filter(|u| lz.contains(u))
        .count()
}

/// Checks the three label conditions of strong dismantlability, scanning
/// vertices in search order and reporting the first violation.
pub fn check_labels(g: &Graph, o: &LexBfsOrder, mode: OrderingMode) -> Result<(), Witness> {
    debug_assert_eq!(o.order.len(), g.vertex_count());
    check_label_order(o, mode)
}

pub(super) fn check_label_order(o: &LexBfsOrder, mode: OrderingMode) -> Result<(), Witness> {
    let mut seen_pairs: HashMap<(Vertex, Vertex), Vertex> = HashMap::new();
    for (i, &x) in o.order.iter().enumerate() {
        let label = o.label(x);
        match label.len() {
            3 => {
                let l = label.vertices();
                return Err(Witness::LabelTooLarge {
                    vertex: x,
                    label: [l[0], l[1], l[2]],
                });
            }
            2 => {
                let (y, z) = (label.vertices()[0], label.vertices()[1]);
                let size = intersection_size(o, y, z);
                if size != 1 {
                    return Err(Witness::BadLabelIntersection {
                        vertex: x,
                        y,
                        z,
                        size,
                    });
                }
                match mode {
                    OrderingMode::LexBfs => {
                        if i > 0 {
                            let prev = o.order[i - 1];
                            if o.label(prev).vertices() == label.vertices() {
                                return Err(Witness::ConsecutiveEqualLabels {
                                    first: prev,
                                    second: x,
                                });
                            }
                        }
                    }
                    OrderingMode::Bfs => {
                        if let Some(&first) = seen_pairs.get(&(y, z)) {
                            return Err(Witness::DuplicateLabels { first, second: x });
                        }
                        seen_pairs.insert((y, z), x);
                    }
                }
            }
            _ => {}
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_cycle, gen_hypercube};
    use crate::graph::lexbfs;

    #[test]
    fn square_passes() {
        let g = gen_cycle(4).unwrap();
        let o = lexbfs(&g, 0).unwrap();
        assert_eq!(check_labels(&g, &o, OrderingMode::LexBfs), Ok(()));
    }

    #[test]
    fn cube_reports_antipode() {
        let g = gen_hypercube(3).unwrap();
        let o = lexbfs(&g, 0).unwrap();
        assert_eq!(
            check_labels(&g, &o, OrderingMode::LexBfs),
            Err(Witness::LabelTooLarge {
                vertex: 7,
                label: [3, 5, 6]
            })
        );
    }

    #[test]
    fn six_cycle_reports_empty_intersection() {
        let g = gen_cycle(6).unwrap();
        let o = lexbfs(&g, 0).unwrap();
        assert_eq!(o.order, vec![0, 1, 5, 2, 4, 3]);
        assert_eq!(
            check_labels(&g, &o, OrderingMode::LexBfs),
            Err(Witness::BadLabelIntersection {
                vertex: 3,
                y: 2,
                z: 4,
                size: 0
            })
        );
    }
}
