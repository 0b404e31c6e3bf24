//! Input model: vertices plus vertex-disjoint simple polygonal obstacles.

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::TAU;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, Zero};

use crate::error::SceneError;
use crate::geom::{
    cross, locate_in_polygon, on_open_segment, orient, rat, segments_properly_intersect,
    segments_touch, signed_area2, ExactScalar, Location, Orientation, Point, Rational, Segment,
};

/// The obstacle corner a vertex belongs to, with its boundary neighbours in
/// counterclockwise order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corner {
    pub obstacle: usize,
    pub prev: usize,
    pub next: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scene {
    vertices: Vec<Point>,
    obstacles: Vec<Vec<usize>>,
    polygons: Vec<Vec<Point>>,
    corners: Vec<Option<Corner>>,
}

impl Scene {
    /// Builds a scene without validating it. Obstacles whose indices are all
    /// in range are reoriented counterclockwise.
    pub fn new(vertices: Vec<Point>, obstacles: Vec<Vec<usize>>) -> Self {
        let n = vertices.len();
        let mut obstacles = obstacles;
        let mut polygons = Vec::with_capacity(obstacles.len());
        for ob in obstacles.iter_mut() {
            if ob.iter().all(|&i| i < n) {
                let mut poly: Vec<Point> = ob.iter().map(|&i| vertices[i].clone()).collect();
                if ob.len() >= 3 && signed_area2(&poly).is_negative() {
                    ob.reverse();
                    poly.reverse();
                }
                polygons.push(poly);
            } else {
                polygons.push(Vec::new());
            }
        }
        let mut corners = vec![None; n];
        for (oi, ob) in obstacles.iter().enumerate() {
            let k = ob.len();
            if k < 3 || ob.iter().any(|&i| i >= n) {
                continue;
            }
            for j in 0..k {
                let v = ob[j];
                if corners[v].is_none() {
                    corners[v] = Some(Corner {
                        obstacle: oi,
                        prev: ob[(j + k - 1) % k],
                        next: ob[(j + 1) % k],
                    });
                }
            }
        }
        Scene {
            vertices,
            obstacles,
            polygons,
            corners,
        }
    }

    pub fn from_ints(points: &[(i64, i64)], obstacles: Vec<Vec<usize>>) -> Self {
        Scene::new(
            points.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(),
            obstacles,
        )
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.vertices[i]
    }

    pub fn obstacles(&self) -> &[Vec<usize>] {
        &self.obstacles
    }

    /// Corner coordinates of obstacle `i`, counterclockwise.
    pub fn polygon(&self, i: usize) -> &[Point] {
        &self.polygons[i]
    }

    pub fn polygons(&self) -> &[Vec<Point>] {
        &self.polygons
    }

    pub fn corner(&self, v: usize) -> Option<Corner> {
        self.corners[v]
    }

    /// Every obstacle boundary edge as an index pair.
    pub fn boundary_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for ob in &self.obstacles {
            for j in 0..ob.len() {
                out.push((ob[j], ob[(j + 1) % ob.len()]));
            }
        }
        out
    }

    /// Validates and checks general position; the precondition of every
    /// construction entry point.
    pub fn ensure_ready(&self) -> Result<(), SceneError> {
        let violations = validate(self);
        if !violations.is_empty() {
            return Err(SceneError::Invalid(violations));
        }
        let report = check_general_position(self);
        if !report.is_ok() {
            return Err(SceneError::NotInGeneralPosition(report));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    IndexOutOfRange { obstacle: usize, index: usize },
    TooFewCorners { obstacle: usize },
    RepeatedOnBoundary { obstacle: usize, vertex: usize },
    SharedVertex { vertex: usize, obstacles: (usize, usize) },
    NotSimple { obstacle: usize },
    ObstaclesIntersect { a: usize, b: usize },
    VertexInsideObstacle { vertex: usize, obstacle: usize },
    VertexOnObstacleBoundary { vertex: usize, obstacle: usize },
    DuplicatePoint { a: usize, b: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IndexOutOfRange { obstacle, index } => {
                write!(f, "index out of range: obstacle {obstacle} uses vertex {index}")
            }
            Violation::TooFewCorners { obstacle } => {
                write!(f, "obstacle {obstacle} has fewer than 3 corners")
            }
            Violation::RepeatedOnBoundary { obstacle, vertex } => {
                write!(f, "vertex repeated on boundary: {vertex} in obstacle {obstacle}")
            }
            Violation::SharedVertex { vertex, obstacles } => write!(
                f,
                "shared vertex: {vertex} is a corner of obstacles {} and {}",
                obstacles.0, obstacles.1
            ),
            Violation::NotSimple { obstacle } => write!(f, "obstacle {obstacle} is not simple"),
            Violation::ObstaclesIntersect { a, b } => write!(f, "obstacles {a} and {b} intersect"),
            Violation::VertexInsideObstacle { vertex, obstacle } => {
                write!(f, "vertex {vertex} lies inside obstacle {obstacle}")
            }
            Violation::VertexOnObstacleBoundary { vertex, obstacle } => {
                write!(f, "vertex {vertex} lies on the boundary of obstacle {obstacle}")
            }
            Violation::DuplicatePoint { a, b } => {
                write!(f, "vertices {a} and {b} have identical coordinates")
            }
        }
    }
}

/// Every violated scene invariant; empty iff the scene is valid.
pub fn validate(scene: &Scene) -> Vec<Violation> {
    let n = scene.len();
    let mut out = Vec::new();
    let mut well_formed = vec![true; scene.obstacles.len()];

    for (oi, ob) in scene.obstacles.iter().enumerate() {
        for &i in ob {
            if i >= n {
                out.push(Violation::IndexOutOfRange { obstacle: oi, index: i });
                well_formed[oi] = false;
            }
        }
        if ob.len() < 3 {
            out.push(Violation::TooFewCorners { obstacle: oi });
            well_formed[oi] = false;
        }
        let mut seen = BTreeMap::new();
        for &i in ob {
            *seen.entry(i).or_insert(0usize) += 1;
        }
        for (&v, &c) in &seen {
            if c > 1 {
                out.push(Violation::RepeatedOnBoundary { obstacle: oi, vertex: v });
                well_formed[oi] = false;
            }
        }
    }

    for (v, obs) in obstacle_membership(scene) {
        for a in 0..obs.len() {
            for b in a + 1..obs.len() {
                out.push(Violation::SharedVertex {
                    vertex: v,
                    obstacles: (obs[a], obs[b]),
                });
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| scene.vertices[a].cmp(&scene.vertices[b]));
    for w in order.windows(2) {
        if scene.vertices[w[0]] == scene.vertices[w[1]] {
            out.push(Violation::DuplicatePoint {
                a: w[0].min(w[1]),
                b: w[0].max(w[1]),
            });
        }
    }

    for (oi, ob) in scene.obstacles.iter().enumerate() {
        if well_formed[oi] && !is_simple(ob, &scene.vertices) {
            out.push(Violation::NotSimple { obstacle: oi });
            well_formed[oi] = false;
        }
    }

    let m = scene.obstacles.len();
    for a in 0..m {
        for b in a + 1..m {
            if well_formed[a] && well_formed[b] && obstacles_intersect(scene, a, b) {
                out.push(Violation::ObstaclesIntersect { a, b });
            }
        }
    }

    for (oi, ob) in scene.obstacles.iter().enumerate() {
        if !well_formed[oi] {
            continue;
        }
        for v in 0..n {
            if ob.contains(&v) {
                continue;
            }
            match locate_in_polygon(&scene.vertices[v], &scene.polygons[oi]) {
                Location::Inside => out.push(Violation::VertexInsideObstacle { vertex: v, obstacle: oi }),
                Location::Boundary => {
                    out.push(Violation::VertexOnObstacleBoundary { vertex: v, obstacle: oi })
                }
                Location::Outside => {}
            }
        }
    }
    out
}

/// Vertices that are corners of two or more distinct obstacles.
fn obstacle_membership(scene: &Scene) -> BTreeMap<usize, Vec<usize>> {
    let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (oi, ob) in scene.obstacles.iter().enumerate() {
        for &v in ob {
            let e = map.entry(v).or_default();
            if !e.contains(&oi) {
                e.push(oi);
            }
        }
    }
    map.retain(|_, obs| obs.len() > 1);
    map
}

fn edge_segment(pts: &[Point], a: usize, b: usize) -> Option<Segment> {
    Segment::new(pts[a].clone(), pts[b].clone()).ok()
}

fn is_simple(ob: &[usize], pts: &[Point]) -> bool {
    let poly: Vec<Point> = ob.iter().map(|&i| pts[i].clone()).collect();
    if signed_area2(&poly).is_zero() {
        return false;
    }
    let k = ob.len();
    let mut edges = Vec::with_capacity(k);
    for j in 0..k {
        match edge_segment(pts, ob[j], ob[(j + 1) % k]) {
            Some(s) => edges.push(s),
            None => return false,
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let adjacent = j == i + 1 || (i == 0 && j == k - 1);
            let bad = if adjacent {
                segments_properly_intersect(&edges[i], &edges[j])
            } else {
                segments_touch(&edges[i], &edges[j])
            };
            if bad {
                return false;
            }
        }
    }
    true
}

fn obstacles_intersect(scene: &Scene, a: usize, b: usize) -> bool {
    let (oa, ob) = (&scene.obstacles[a], &scene.obstacles[b]);
    let pts = &scene.vertices;
    for i in 0..oa.len() {
        let (a0, a1) = (oa[i], oa[(i + 1) % oa.len()]);
        let Some(sa) = edge_segment(pts, a0, a1) else { continue };
        for j in 0..ob.len() {
            let (b0, b1) = (ob[j], ob[(j + 1) % ob.len()]);
            let Some(sb) = edge_segment(pts, b0, b1) else { continue };
            let shares = a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
            let hit = if shares {
                segments_properly_intersect(&sa, &sb)
            } else {
                segments_touch(&sa, &sb)
            };
            if hit {
                return true;
            }
        }
    }
    let inside = |from: &[usize], poly: &[Point], other: &[usize]| {
        from.iter()
            .filter(|v| !other.contains(v))
            .any(|&v| locate_in_polygon(&pts[v], poly) == Location::Inside)
    };
    inside(oa, &scene.polygons[b], ob) || inside(ob, &scene.polygons[a], oa)
}

/// Pairs parallel to a cone boundary and collinear triples.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneralPositionReport {
    pub parallel_violations: Vec<(usize, usize)>,
    pub collinear_violations: Vec<(usize, usize, usize)>,
}

impl GeneralPositionReport {
    pub fn is_ok(&self) -> bool {
        self.parallel_violations.is_empty() && self.collinear_violations.is_empty()
    }
}

impl fmt::Display for GeneralPositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} boundary-parallel pairs {:?}, {} collinear triples {:?}",
            self.parallel_violations.len(),
            truncate(&self.parallel_violations),
            self.collinear_violations.len(),
            truncate(&self.collinear_violations)
        )
    }
}

fn truncate<T: Clone>(v: &[T]) -> Vec<T> {
    v.iter().take(8).cloned().collect()
}

/// True iff the direction `(dx, dy)` has slope 0, √3 or −√3.
pub fn parallel_to_cone_boundary(dx: &Rational, dy: &Rational) -> bool {
    // cross products with (1, 0), (1, √3) and (-1, √3)
    dy.is_zero()
        || ExactScalar::new(dy.clone(), -dx).is_zero()
        || ExactScalar::new(dy.clone(), dx.clone()).is_zero()
}

pub fn check_general_position(scene: &Scene) -> GeneralPositionReport {
    let pts = &scene.vertices;
    let n = pts.len();
    let mut report = GeneralPositionReport::default();
    for i in 0..n {
        // group later vertices by direction from i; a group of two or more is
        // a collinear triple with i as its smallest index
        let mut by_slope: HashMap<Option<Rational>, Vec<usize>> = HashMap::new();
        for j in i + 1..n {
            let (dx, dy) = pts[j].sub(&pts[i]);
            if dx.is_zero() && dy.is_zero() {
                continue;
            }
            if parallel_to_cone_boundary(&dx, &dy) {
                report.parallel_violations.push((i, j));
            }
            let key = if dx.is_zero() { None } else { Some(dy / dx) };
            by_slope.entry(key).or_default().push(j);
        }
        for group in by_slope.values() {
            for a in 0..group.len() {
                for b in a + 1..group.len() {
                    report.collinear_violations.push((i, group[a], group[b]));
                }
            }
        }
    }
    report.collinear_violations.sort();
    report
}

/// Rotates every vertex about the origin by the angle with
/// `cos = (k²−1)/(k²+1)` and `sin = 2k/(k²+1)`.
pub fn perturb_by_rotation(scene: &Scene, k: u64) -> Scene {
    let k = BigInt::from(k);
    let den: BigInt = &k * &k + 1;
    let cos = BigRational::new(&k * &k - BigInt::from(1), den.clone());
    let sin = BigRational::new(BigInt::from(2) * &k, den);
    let vertices = scene
        .vertices
        .iter()
        .map(|p| Point::new(&cos * &p.x - &sin * &p.y, &sin * &p.x + &cos * &p.y))
        .collect();
    Scene::new(vertices, scene.obstacles.clone())
}

/// Smallest rotation index at or above this is tried first; rotations grow
/// smaller as `k` grows.
pub const FIRST_ROTATION_K: u64 = 10;

/// Searches `k = FIRST_ROTATION_K, FIRST_ROTATION_K + 1, …` for a rotation
/// that puts the scene in general position. Rotation preserves collinearity,
/// so scenes with collinear triples are rejected.
pub fn restore_general_position(scene: &Scene) -> Result<(Scene, Option<u64>), SceneError> {
    let report = check_general_position(scene);
    if report.is_ok() {
        return Ok((scene.clone(), None));
    }
    if !report.collinear_violations.is_empty() {
        return Err(SceneError::CollinearTriples(report));
    }
    let n = scene.len() as u64;
    let limit = FIRST_ROTATION_K + 16 + 2 * n * n;
    for k in FIRST_ROTATION_K..=limit {
        let rotated = perturb_by_rotation(scene, k);
        if check_general_position(&rotated).is_ok() {
            return Ok((rotated, Some(k)));
        }
    }
    Err(SceneError::RotationExhausted(limit))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitMode {
    /// Paths may pass between the two polygons.
    Passable,
    /// The polygons are merged into one across the shared corner.
    Blocked,
}

const MAX_HALVINGS: u32 = 48;

/// Removes shared corners by duplicating each shared vertex. See
/// [`SplitMode`] for the two behaviours.
pub fn split_shared_vertices(scene: &Scene, mode: SplitMode) -> Result<Scene, SceneError> {
    let mut current = scene.clone();
    loop {
        let shared = obstacle_membership(&current);
        let Some((&s, obs)) = shared.iter().next() else {
            return Ok(current);
        };
        if obs.len() > 2 {
            return Err(SceneError::SharedByMany {
                vertex: s,
                count: obs.len(),
            });
        }
        let (a, b) = (obs[0], obs[1]);
        current = match mode {
            SplitMode::Passable => separate(&current, s, a, b)?,
            SplitMode::Blocked => merge(&current, s, a, b)?,
        };
    }
}

/// Neighbours of `s` on obstacle `ob`, as (prev, next) in stored order.
fn neighbours_on(scene: &Scene, ob: usize, s: usize) -> (usize, usize) {
    let o = &scene.obstacles[ob];
    let j = o.iter().position(|&v| v == s).expect("corner on obstacle");
    let k = o.len();
    (o[(j + k - 1) % k], o[(j + 1) % k])
}

fn angle_of(from: &Point, to: &Point) -> f64 {
    let (fx, fy) = from.to_f64();
    let (tx, ty) = to.to_f64();
    (ty - fy).atan2(tx - fx)
}

/// Rational direction approximating the bisector of the wedge swept
/// counterclockwise from angle `start` to angle `end`.
fn wedge_bisector(start: f64, end: f64) -> (Rational, Rational) {
    let sweep = (end - start).rem_euclid(TAU);
    let mid = start + sweep / 2.0;
    let q = |v: f64| Rational::new(BigInt::from((v * 1024.0).round() as i64), BigInt::from(1024));
    (q(mid.cos()), q(mid.sin()))
}

fn min_distance_from(scene: &Scene, s: usize) -> f64 {
    let p = scene.point(s);
    scene
        .vertices
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != s)
        .map(|(_, q)| p.dist_f64(q))
        .fold(f64::INFINITY, f64::min)
}

fn initial_epsilon(scene: &Scene, s: usize) -> Rational {
    let d = min_distance_from(scene, s);
    let d = if d.is_finite() { d } else { 1.0 };
    let mut eps = rat(1);
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let limit = BigRational::from_f64(d / 8.0).unwrap_or_else(|| rat(1));
    while eps > limit {
        eps = &eps * &half;
    }
    eps
}

fn offset(p: &Point, dir: &(Rational, Rational), eps: &Rational) -> Point {
    Point::new(&p.x + eps * &dir.0, &p.y + eps * &dir.1)
}

/// Accepts a candidate when it validates and introduces no general-position
/// violation involving the moved vertices.
fn acceptable(candidate: &Scene, moved: &[usize]) -> bool {
    if !validate(candidate).is_empty() {
        return false;
    }
    let report = check_general_position(candidate);
    let touches = |i: usize| moved.contains(&i);
    report
        .parallel_violations
        .iter()
        .all(|&(a, b)| !touches(a) && !touches(b))
        && report
            .collinear_violations
            .iter()
            .all(|&(a, b, c)| !touches(a) && !touches(b) && !touches(c))
}

fn separate(scene: &Scene, s: usize, a: usize, b: usize) -> Result<Scene, SceneError> {
    let origin = scene.point(s).clone();
    let interior = |ob: usize| {
        let (prev, next) = neighbours_on(scene, ob, s);
        wedge_bisector(
            angle_of(&origin, scene.point(next)),
            angle_of(&origin, scene.point(prev)),
        )
    };
    let dir_a = interior(a);
    let dir_b = interior(b);
    let copy = scene.len();
    let mut obstacles = scene.obstacles.clone();
    for v in obstacles[b].iter_mut() {
        if *v == s {
            *v = copy;
        }
    }
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut eps = initial_epsilon(scene, s);
    for _ in 0..MAX_HALVINGS {
        let mut vertices = scene.vertices.clone();
        vertices[s] = offset(&origin, &dir_a, &eps);
        vertices.push(offset(&origin, &dir_b, &eps));
        let candidate = Scene::new(vertices, obstacles.clone());
        if acceptable(&candidate, &[s, copy]) {
            return Ok(candidate);
        }
        eps = &eps * &half;
    }
    Err(SceneError::NoSeparation(s))
}

fn merge(scene: &Scene, s: usize, a: usize, b: usize) -> Result<Scene, SceneError> {
    let origin = scene.point(s).clone();
    let rotate_to = |ob: usize| {
        let o = &scene.obstacles[ob];
        let j = o.iter().position(|&v| v == s).expect("corner on obstacle");
        let mut r = o[j..].to_vec();
        r.extend_from_slice(&o[..j]);
        r
    };
    let ra = rotate_to(a);
    let rb = rotate_to(b);
    if ra[1..].iter().any(|v| rb.contains(v)) {
        return Err(SceneError::SharedTwice(a, b));
    }
    let (a_first, a_last) = (ra[1], *ra.last().unwrap());
    let (b_first, b_last) = (rb[1], *rb.last().unwrap());
    let ang = |v: usize| angle_of(&origin, scene.point(v));
    // s keeps its index and moves into the gap from b_last to a_first; the
    // copy moves into the gap from a_last to b_first.
    let dir_s = wedge_bisector(ang(b_last), ang(a_first));
    let dir_copy = wedge_bisector(ang(a_last), ang(b_first));
    let copy = scene.len();
    let mut merged = ra.clone();
    merged.push(copy);
    merged.extend_from_slice(&rb[1..]);
    let mut obstacles: Vec<Vec<usize>> = Vec::new();
    for (oi, ob) in scene.obstacles.iter().enumerate() {
        if oi == a {
            obstacles.push(merged.clone());
        } else if oi != b {
            obstacles.push(ob.clone());
        }
    }
    let half = Rational::new(BigInt::from(1), BigInt::from(2));
    let mut eps = initial_epsilon(scene, s);
    for _ in 0..MAX_HALVINGS {
        let mut vertices = scene.vertices.clone();
        vertices[s] = offset(&origin, &dir_s, &eps);
        vertices.push(offset(&origin, &dir_copy, &eps));
        let candidate = Scene::new(vertices, obstacles.clone());
        if acceptable(&candidate, &[s, copy]) {
            return Ok(candidate);
        }
        eps = &eps * &half;
    }
    Err(SceneError::NoSeparation(s))
}

/// Vertex `w` on the open segment between vertices `u` and `v`.
pub fn vertex_between(scene: &Scene, u: usize, v: usize) -> Option<usize> {
    let (pu, pv) = (scene.point(u), scene.point(v));
    (0..scene.len()).find(|&w| w != u && w != v && on_open_segment(scene.point(w), pu, pv))
}

/// Orientation of three scene vertices.
pub fn orient_idx(scene: &Scene, a: usize, b: usize, c: usize) -> Orientation {
    orient(scene.point(a), scene.point(b), scene.point(c))
}

/// Exact cross product of `b - a` and `c - a`.
pub fn cross_idx(scene: &Scene, a: usize, b: usize, c: usize) -> Rational {
    let (bx, by) = scene.point(b).sub(scene.point(a));
    let (cx, cy) = scene.point(c).sub(scene.point(a));
    cross(&bx, &by, &cx, &cy)
}
