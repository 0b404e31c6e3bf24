//! Mutual visibility among vertices and obstacles.

use crate::geom::{on_open_segment, segment_properly_intersects_polygon, Segment};
use crate::graph::Graph;
use crate::scene::Scene;

/// Whether `u` and `v` see each other: no obstacle is properly crossed and
/// no third vertex sits on the open segment. Running along an obstacle edge
/// and grazing corners do not block.
pub fn visible(scene: &Scene, u: usize, v: usize) -> bool {
    let (pu, pv) = (scene.point(u), scene.point(v));
    let Ok(seg) = Segment::new(pu.clone(), pv.clone()) else {
        return false;
    };
    if scene
        .vertices()
        .iter()
        .enumerate()
        .any(|(w, pw)| w != u && w != v && on_open_segment(pw, pu, pv))
    {
        return false;
    }
    !scene
        .polygons()
        .iter()
        .any(|poly| segment_properly_intersects_polygon(&seg, poly))
}

pub fn visibility_graph(scene: &Scene) -> Graph {
    let n = scene.len();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if visible(scene, u, v) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{locate_in_polygon, Location, Point};
    use proptest::prelude::*;

    fn triangle_scene() -> Scene {
        // triangle (0,0),(4,0),(2,3); a left of it, b right of it
        Scene::from_ints(&[(0, 0), (4, 0), (2, 3), (-2, 1), (6, 2)], vec![vec![0, 1, 2]])
    }

    #[test]
    fn no_obstacles_gives_complete_graph() {
        let s = Scene::from_ints(&[(0, 0), (1, 3), (5, 1), (-2, 7)], vec![]);
        let g = visibility_graph(&s);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn triangle_blocks_across() {
        let s = triangle_scene();
        let g = visibility_graph(&s);
        assert!(!g.has_edge(3, 4));
        for (a, b) in s.boundary_edges() {
            assert!(g.has_edge(a, b), "boundary edge ({a},{b}) missing");
        }
        assert!(g.is_connected());
        // brute-force oracle: sample the open segment densely
        for u in 0..s.len() {
            for v in u + 1..s.len() {
                let (pu, pv) = (s.point(u), s.point(v));
                let blocked = (1..400).any(|k| {
                    let t = crate::geom::rat_frac(k, 400);
                    locate_in_polygon(&pu.lerp(pv, &t), s.polygon(0)) == Location::Inside
                });
                assert_eq!(g.has_edge(u, v), !blocked, "pair ({u},{v})");
            }
        }
    }

    #[test]
    fn chord_through_interior_is_blocked() {
        // non-convex L: the chord between the two arm tips leaves the shape
        let s = Scene::from_ints(
            &[(0, 0), (6, 0), (6, 2), (2, 2), (2, 6), (0, 6)],
            vec![vec![0, 1, 2, 3, 4, 5]],
        );
        assert!(visible(&s, 2, 4), "chord outside the L through the notch");
        assert!(!visible(&s, 0, 3), "diagonal through the interior");
        assert!(!visible(&s, 1, 5), "crosses the interior corner region");
    }

    #[test]
    fn third_vertex_on_segment_blocks() {
        let s = Scene::from_ints(&[(0, 0), (1, 1), (2, 2)], vec![]);
        assert!(!visible(&s, 0, 2));
        assert!(visible(&s, 0, 1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn symmetric_and_monotone(pts in proptest::collection::vec((-20i64..20, -20i64..20), 3..8)) {
            let mut with = vec![(0, 0), (6, 1), (3, 5)];
            with.extend(pts.iter().copied());
            let s = Scene::from_ints(&with, vec![vec![0, 1, 2]]);
            let points: Vec<Point> = s.vertices().to_vec();
            let bare = Scene::new(points, vec![]);
            for u in 0..s.len() {
                for v in 0..s.len() {
                    if u == v { continue; }
                    prop_assert_eq!(visible(&s, u, v), visible(&s, v, u));
                    if visible(&s, u, v) {
                        prop_assert!(visible(&bare, u, v));
                    }
                }
            }
        }
    }
}
