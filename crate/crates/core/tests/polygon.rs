use proptest::prelude::*;
use rand::Rng;

use ramified::factorization::embed;
use ramified::generators::{gen_polyomino_polygon, gen_staircase_polygon, seeded_rng};
use ramified::oracle::DistanceOracle;
use ramified::polygon::{
    check_ramified, complex_from_network, geodesic_dist, grid_network, Point, RectPolygon,
};
use ramified::recognition::recognize;

fn random_inside(p: &RectPolygon, rng: &mut impl Rng) -> Point {
    let xs = p.corners().iter().map(|c| c.x);
    let ys = p.corners().iter().map(|c| c.y);
    let (x0, x1) = (xs.clone().min().unwrap(), xs.max().unwrap());
    let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
    loop {
        let q = Point::new(rng.gen_range(x0..=x1), rng.gen_range(y0..=y1));
        if p.contains(q) {
            return q;
        }
    }
}

/// Geodesic distance through the expanded network against the oracle on
/// the plain grid network, for `pairs` random point pairs.
fn compare_routes(p: &RectPolygon, seed: u64, pairs: usize) {
    let arr = grid_network(p);
    let complex = complex_from_network(&arr.network).unwrap();
    let e = embed(&arr.network).unwrap();
    let o = DistanceOracle::build(&e);
    let mut rng = seeded_rng(seed);
    for _ in 0..pairs {
        let (s, t) = (random_inside(p, &mut rng), random_inside(p, &mut rng));
        let g = geodesic_dist(p, s, t).unwrap();
        assert_eq!(g, geodesic_dist(p, t, s).unwrap());
        assert!(g >= s.l1(t));
        let (ps, ts) = (
            arr.placements(&complex, &e, s),
            arr.placements(&complex, &e, t),
        );
        assert!(!ps.is_empty() && !ts.is_empty());
        for &a in &ps {
            for &b in &ts {
                assert_eq!(o.point_dist(&complex, a, b), Ok(g), "{s:?} {t:?}");
            }
        }
    }
}

#[test]
fn fixed_polygons() {
    let rect = RectPolygon::new(vec![
        Point::new(0, 0),
        Point::new(3, 0),
        Point::new(3, 2),
        Point::new(0, 2),
    ])
    .unwrap();
    assert_eq!(
        geodesic_dist(&rect, Point::new(0, 0), Point::new(3, 2)),
        Ok(5)
    );
    let u = RectPolygon::new(
        [
            (0, 0),
            (5, 0),
            (5, 3),
            (4, 3),
            (4, 1),
            (1, 1),
            (1, 3),
            (0, 3),
        ]
        .into_iter()
        .map(Point::from)
        .collect(),
    )
    .unwrap();
    assert_eq!(geodesic_dist(&u, Point::new(0, 3), Point::new(5, 3)), Ok(9));
    compare_routes(&u, 1, 50);
}

#[test]
fn networks_are_partial_double_trees() {
    for seed in 0..30 {
        for p in [
            gen_staircase_polygon(1 + seed as usize % 9, seed, 1..=6).unwrap(),
            gen_polyomino_polygon(1 + seed as usize * 2, seed, 1..=6).unwrap(),
        ] {
            let arr = grid_network(&p);
            assert!(recognize(&arr.network).is_yes(), "{:?}", p.corners());
            assert!(check_ramified(&complex_from_network(&arr.network).unwrap()).ramified);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn staircase_routes_agree(steps in 1usize..12, seed in any::<u64>()) {
        compare_routes(&gen_staircase_polygon(steps, seed, 1..=8).unwrap(), seed, 10);
    }

    #[test]
    fn polyomino_routes_agree(cells in 1usize..25, seed in any::<u64>()) {
        compare_routes(&gen_polyomino_polygon(cells, seed, 1..=5).unwrap(), seed, 10);
    }

    #[test]
    fn rectangles_are_l1(w in 1i64..50, h in 1i64..50, seed in any::<u64>()) {
        let r = RectPolygon::new(vec![Point::new(0, 0), Point::new(w, 0), Point::new(w, h), Point::new(0, h)]).unwrap();
        let mut rng = seeded_rng(seed);
        for _ in 0..10 {
            let (s, t) = (random_inside(&r, &mut rng), random_inside(&r, &mut rng));
            prop_assert_eq!(geodesic_dist(&r, s, t), Ok(s.l1(t)));
        }
    }
}
