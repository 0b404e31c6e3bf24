//! Executable checks of the construction's guarantees.

use std::collections::BTreeMap;
use std::fmt;

use petgraph::algo::dijkstra;
use petgraph::graph::{NodeIndex, UnGraph};

use crate::cones::canonical_triangle;
use crate::error::{BuildError, VerifyError};
use crate::geom::{
    locate_in_polygon, on_open_segment, orient, rat, rat_frac, segment_properly_intersects_polygon,
    segments_properly_intersect, ExactScalar, Location, Orientation, Point, Segment,
};
use crate::graph::Graph;
use crate::scene::Scene;
use crate::spanners::{ChargeLedger, ConeEdgeIndex, Shortcut, SpannerSuite};

/// Relative slack allowed on every floating-point ratio.
pub const RATIO_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlanarityReport {
    pub crossing_pairs: Vec<((usize, usize), (usize, usize))>,
    /// Edge and the index of the obstacle it cuts through.
    pub obstacle_conflicts: Vec<((usize, usize), usize)>,
}

impl PlanarityReport {
    pub fn ok(&self) -> bool {
        self.crossing_pairs.is_empty() && self.obstacle_conflicts.is_empty()
    }
}

fn segment(scene: &Scene, (a, b): (usize, usize)) -> Segment {
    Segment::new(scene.point(a).clone(), scene.point(b).clone())
        .expect("vertices of a valid scene are distinct")
}

/// Exhaustive pairwise test of edges against each other and against the
/// obstacles. Shared endpoints never count.
pub fn check_planarity(scene: &Scene, g: &Graph) -> PlanarityReport {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let segs: Vec<Segment> = edges.iter().map(|&e| segment(scene, e)).collect();
    let mut report = PlanarityReport::default();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if segments_properly_intersect(&segs[i], &segs[j]) {
                report.crossing_pairs.push((edges[i], edges[j]));
            }
        }
        for (oi, poly) in scene.polygons().iter().enumerate() {
            if segment_properly_intersects_polygon(&segs[i], poly) {
                report.obstacle_conflicts.push((edges[i], oi));
            }
        }
    }
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub max_degree: usize,
    /// Degree to number of vertices with that degree.
    pub histogram: BTreeMap<usize, usize>,
}

pub fn degree_report(g: &Graph) -> DegreeReport {
    let mut histogram = BTreeMap::new();
    for v in 0..g.n() {
        *histogram.entry(g.degree(v)).or_insert(0) += 1;
    }
    DegreeReport {
        max_degree: g.max_degree(),
        histogram,
    }
}

/// Single-source Euclidean shortest paths from every vertex.
pub struct Distances {
    rows: Vec<Vec<Option<f64>>>,
}

impl Distances {
    pub fn compute(scene: &Scene, g: &Graph) -> Self {
        let mut pg = UnGraph::<(), f64>::with_capacity(g.n(), g.edge_count());
        let nodes: Vec<NodeIndex> = (0..g.n()).map(|_| pg.add_node(())).collect();
        for (a, b) in g.edges() {
            pg.add_edge(nodes[a], nodes[b], scene.point(a).dist_f64(scene.point(b)));
        }
        let rows = nodes
            .iter()
            .map(|&s| {
                let d = dijkstra(&pg, s, None, |e| *e.weight());
                nodes.iter().map(|t| d.get(t).copied()).collect()
            })
            .collect();
        Distances { rows }
    }

    pub fn get(&self, a: usize, b: usize) -> Option<f64> {
        self.rows[a][b]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StretchReport {
    /// Infinite if a pair connected in the base graph is disconnected in
    /// the subgraph.
    pub max_ratio: f64,
    pub witness_pair: Option<(usize, usize)>,
}

impl StretchReport {
    pub fn within(&self, t: f64) -> bool {
        self.max_ratio <= t * (1.0 + RATIO_TOLERANCE)
    }
}

pub fn stretch_factor(scene: &Scene, sub: &Graph, base: &Graph) -> Result<StretchReport, VerifyError> {
    if sub.n() != base.n() {
        return Err(VerifyError::VertexSetMismatch {
            sub: sub.n(),
            base: base.n(),
        });
    }
    let ds = Distances::compute(scene, sub);
    let db = Distances::compute(scene, base);
    Ok(stretch_from(&ds, &db, base.n()))
}

fn stretch_from(ds: &Distances, db: &Distances, n: usize) -> StretchReport {
    let mut report = StretchReport {
        max_ratio: 1.0,
        witness_pair: None,
    };
    for a in 0..n {
        for b in a + 1..n {
            let Some(base) = db.get(a, b) else { continue };
            let ratio = ds.get(a, b).map_or(f64::INFINITY, |d| d / base);
            if ratio > report.max_ratio {
                report.max_ratio = ratio;
                report.witness_pair = Some((a, b));
            }
        }
    }
    report
}

/// `√3·cos θ + sin θ`: the per-edge path length factor for an edge at
/// angle θ from the bisector.
pub fn per_edge_factor(theta: f64) -> f64 {
    3f64.sqrt() * theta.cos() + theta.sin()
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeBoundWitness {
    pub u: usize,
    pub v: usize,
    pub path: f64,
    pub bound: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct EdgeBoundReport {
    pub violations: Vec<EdgeBoundWitness>,
    /// Largest path / bound over all visibility edges.
    pub worst: f64,
}

impl EdgeBoundReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Bound on the G∞ path between the ends of visibility edge `(u, v)`, with
/// `v` in a positive cone of `u`.
pub fn per_edge_bound(scene: &Scene, u: usize, v: usize) -> Option<f64> {
    let tri = canonical_triangle(scene.point(u), scene.point(v)).ok()?;
    let (bx, by) = tri.label.bisector_f64();
    let (ux, uy) = scene.point(u).to_f64();
    let (vx, vy) = scene.point(v).to_f64();
    let (dx, dy) = (vx - ux, vy - uy);
    let along = dx * bx + dy * by;
    let across = (dx * by - dy * bx).abs();
    // |uv|·(√3 cos θ + sin θ)
    Some(3f64.sqrt() * along + across)
}

pub fn check_per_edge_bound_ginf(scene: &Scene, vis: &Graph, ginf: &Graph) -> EdgeBoundReport {
    per_edge_from(scene, vis, &Distances::compute(scene, ginf))
}

fn per_edge_from(scene: &Scene, vis: &Graph, dg: &Distances) -> EdgeBoundReport {
    let mut report = EdgeBoundReport::default();
    for (a, b) in vis.edges() {
        let (u, v, bound) = match per_edge_bound(scene, a, b) {
            Some(bd) => (a, b, bd),
            None => match per_edge_bound(scene, b, a) {
                Some(bd) => (b, a, bd),
                None => continue,
            },
        };
        let path = dg.get(u, v).unwrap_or(f64::INFINITY);
        report.worst = report.worst.max(path / bound);
        if path > bound * (1.0 + RATIO_TOLERANCE) {
            report.violations.push(EdgeBoundWitness { u, v, path, bound });
        }
    }
    report
}

/// Consecutive canonical-sequence pairs `(apex, a, b)` of `ginf`.
pub fn canonical_pairs(scene: &Scene, ginf: &Graph) -> Result<Vec<(usize, usize, usize)>, BuildError> {
    let index = ConeEdgeIndex::build(scene, ginf)?;
    let mut out = Vec::new();
    for u in 0..scene.len() {
        for (sub, entries) in index.subcones_of(u) {
            if sub.label.is_positive() {
                continue;
            }
            for w in entries.windows(2) {
                out.push((u, w[0].vertex, w[1].vertex));
            }
        }
    }
    Ok(out)
}

/// Canonical-path pairs missing from `g15`.
pub fn check_canonical_paths(
    scene: &Scene,
    ginf: &Graph,
    g15: &Graph,
) -> Result<Vec<(usize, usize, usize)>, BuildError> {
    Ok(canonical_pairs(scene, ginf)?
        .into_iter()
        .filter(|&(_, a, b)| !g15.has_edge(a, b))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriangleWitness {
    Vertex { apex: usize, a: usize, b: usize, inside: usize },
    Obstacle { apex: usize, a: usize, b: usize, obstacle: usize },
}

impl fmt::Display for TriangleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleWitness::Vertex { apex, a, b, inside } => {
                write!(f, "triangle ({apex}, {a}, {b}) contains vertex {inside}")
            }
            TriangleWitness::Obstacle { apex, a, b, obstacle } => {
                write!(f, "triangle ({apex}, {a}, {b}) meets obstacle {obstacle}")
            }
        }
    }
}

/// Triangles spanned by an apex and two consecutive canonical vertices
/// that hold a vertex in their interior or meet an obstacle.
pub fn check_empty_triangles(scene: &Scene, ginf: &Graph) -> Result<Vec<TriangleWitness>, BuildError> {
    let mut out = Vec::new();
    for (apex, a, b) in canonical_pairs(scene, ginf)? {
        let tri = [
            scene.point(apex).clone(),
            scene.point(a).clone(),
            scene.point(b).clone(),
        ];
        for (w, pw) in scene.vertices().iter().enumerate() {
            if locate_in_polygon(pw, &tri) == Location::Inside {
                out.push(TriangleWitness::Vertex { apex, a, b, inside: w });
            }
        }
        let third = rat_frac(1, 3);
        let centroid = Point::new(
            (&tri[0].x + &tri[1].x + &tri[2].x) * &third,
            (&tri[0].y + &tri[1].y + &tri[2].y) * &third,
        );
        for (oi, ob) in scene.obstacles().iter().enumerate() {
            let poly = scene.polygon(oi);
            let cuts = (0..ob.len()).any(|j| {
                let s = segment(scene, (ob[j], ob[(j + 1) % ob.len()]));
                segment_properly_intersects_polygon(&s, &tri)
            });
            if cuts || locate_in_polygon(&centroid, poly) == Location::Inside {
                out.push(TriangleWitness::Obstacle { apex, a, b, obstacle: oi });
            }
        }
    }
    Ok(out)
}

/// Shortcut edges of `g7` that are not logged or leave their
/// quadrilateral `u, x, v, y`.
pub fn check_shortcuts(scene: &Scene, g10: &Graph, g7: &Graph, log: &[Shortcut]) -> Vec<(usize, usize)> {
    g7.difference(g10)
        .into_iter()
        .filter(|&(a, b)| {
            !log.iter().any(|sc| {
                sc.added
                    && (sc.x.min(sc.y), sc.x.max(sc.y)) == (a, b)
                    && inside_quadrilateral(scene, sc)
            })
        })
        .collect()
}

fn inside_quadrilateral(scene: &Scene, sc: &Shortcut) -> bool {
    let quad: Vec<Point> = [sc.u, sc.x, sc.v, sc.y]
        .iter()
        .map(|&i| scene.point(i).clone())
        .collect();
    let xy = segment(scene, (sc.x, sc.y));
    let crosses = (0..4).any(|i| {
        Segment::new(quad[i].clone(), quad[(i + 1) % 4].clone())
            .map(|side| segments_properly_intersect(&xy, &side))
            .unwrap_or(true)
    });
    let mid = xy.point_at(&rat_frac(1, 2));
    !crosses && locate_in_polygon(&mid, &quad) == Location::Inside
}

/// G∞ restated directly from its definition, sharing only the exact
/// predicates with the construction.
pub fn oracle_g_infinity(scene: &Scene) -> Result<Graph, BuildError> {
    scene.ensure_ready()?;
    let n = scene.len();
    let pts = scene.vertices();
    // positive-cone bisectors at 90°, 210° and 330°, as (x, y) in Q(√3)
    let half = rat_frac(1, 2);
    let bisectors = [
        (ExactScalar::zero(), ExactScalar::from_rational(rat(1))),
        (
            ExactScalar::new(rat(0), -half.clone()),
            ExactScalar::from_rational(-half.clone()),
        ),
        (
            ExactScalar::new(rat(0), half.clone()),
            ExactScalar::from_rational(-half.clone()),
        ),
    ];
    // obstacle corner: (prev, next) with the obstacle's interior on the left
    let mut corner: Vec<Option<(usize, usize)>> = vec![None; n];
    for ob in scene.obstacles() {
        for j in 0..ob.len() {
            corner[ob[j]] = Some((ob[(j + ob.len() - 1) % ob.len()], ob[(j + 1) % ob.len()]));
        }
    }
    let sees = |u: usize, v: usize| -> bool {
        let Ok(s) = Segment::new(pts[u].clone(), pts[v].clone()) else { return false };
        (0..n).all(|w| w == u || w == v || !on_open_segment(&pts[w], &pts[u], &pts[v]))
            && scene
                .polygons()
                .iter()
                .all(|poly| !segment_properly_intersects_polygon(&s, poly))
    };
    let mut g = Graph::new(n);
    for u in 0..n {
        for (bx, by) in &bisectors {
            let (fbx, fby) = (bx.to_f64(), by.to_f64());
            let exact_member = |p: &Point| -> Option<ExactScalar> {
                let dx = ExactScalar::from_rational(&p.x - &pts[u].x);
                let dy = ExactScalar::from_rational(&p.y - &pts[u].y);
                let along = &(&dx * bx) + &(&dy * by);
                let across = &(bx * &dy) - &(by * &dx);
                let three = ExactScalar::from_rational(rat(3));
                let inside = along > ExactScalar::zero()
                    && &three * &(&across * &across) < &along * &along;
                inside.then_some(along)
            };
            // strictly inside the cone iff the angle to the bisector is below
            // π/6; floating point settles the clear cases, the margin dwarfs
            // its rounding error, and anything near a boundary is redone
            // exactly
            let member = |p: &Point| -> Option<ExactScalar> {
                let (px, py) = p.to_f64();
                let (ux, uy) = pts[u].to_f64();
                let (fx, fy) = (px - ux, py - uy);
                let norm2 = fx * fx + fy * fy;
                if !(norm2.is_normal()) {
                    return exact_member(p);
                }
                let (fa, fc) = (fx * fbx + fy * fby, fbx * fy - fby * fx);
                let gap = fa * fa - 3.0 * fc * fc;
                let margin = 1e-9 * norm2;
                if fa < 0.0 && gap.abs() > margin || gap < -margin {
                    None
                } else if fa > 0.0 && gap > margin {
                    let dx = ExactScalar::from_rational(&p.x - &pts[u].x);
                    let dy = ExactScalar::from_rational(&p.y - &pts[u].y);
                    Some(&(&dx * bx) + &(&dy * by))
                } else {
                    exact_member(p)
                }
            };
            // the obstacle at u splits this cone iff both of its edges lie
            // in it and the corner is convex
            let split = corner[u].filter(|&(a, b)| {
                member(&pts[a]).is_some()
                    && member(&pts[b]).is_some()
                    && orient(&pts[a], &pts[u], &pts[b]) == Orientation::CounterClockwise
            });
            let mut best: [Option<(ExactScalar, usize)>; 2] = [None, None];
            for v in 0..n {
                if v == u {
                    continue;
                }
                let Some(key) = member(&pts[v]) else { continue };
                if !sees(u, v) {
                    continue;
                }
                let part = match split {
                    Some((a, _)) => usize::from(orient(&pts[u], &pts[a], &pts[v]) == Orientation::Clockwise),
                    None => 0,
                };
                if best[part].as_ref().is_none_or(|(k, _)| key < *k) {
                    best[part] = Some((key, v));
                }
            }
            for (_, v) in best.into_iter().flatten() {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// One named pass/fail line of a verification run.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// The graphs under test. Any of them may come from outside; the
/// construction is always rebuilt for reference.
#[derive(Clone, Debug)]
pub struct GraphSet {
    pub vis: Graph,
    pub ginf: Graph,
    pub g15: Graph,
    pub g10: Graph,
    pub g7: Graph,
}

impl GraphSet {
    pub fn from_suite(s: &SpannerSuite) -> Self {
        GraphSet {
            vis: s.vis.clone(),
            ginf: s.ginf.clone(),
            g15: s.g15.clone(),
            g10: s.g10.clone(),
            g7: s.g7.clone(),
        }
    }

    pub fn get(&self, kind: GraphKind) -> &Graph {
        match kind {
            GraphKind::Vis => &self.vis,
            GraphKind::Ginf => &self.ginf,
            GraphKind::G15 => &self.g15,
            GraphKind::G10 => &self.g10,
            GraphKind::G7 => &self.g7,
        }
    }

    pub fn get_mut(&mut self, kind: GraphKind) -> &mut Graph {
        match kind {
            GraphKind::Vis => &mut self.vis,
            GraphKind::Ginf => &mut self.ginf,
            GraphKind::G15 => &mut self.g15,
            GraphKind::G10 => &mut self.g10,
            GraphKind::G7 => &mut self.g7,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphKind {
    Vis,
    Ginf,
    G15,
    G10,
    G7,
}

impl GraphKind {
    pub const ALL: [GraphKind; 5] = [
        GraphKind::Vis,
        GraphKind::Ginf,
        GraphKind::G15,
        GraphKind::G10,
        GraphKind::G7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Vis => "vis",
            GraphKind::Ginf => "ginf",
            GraphKind::G15 => "g15",
            GraphKind::G10 => "g10",
            GraphKind::G7 => "g7",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        GraphKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

fn outcome(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> CheckOutcome {
    CheckOutcome {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn list<T: fmt::Debug>(items: &[T]) -> String {
    const SHOWN: usize = 5;
    let head: Vec<String> = items.iter().take(SHOWN).map(|x| format!("{x:?}")).collect();
    let more = items.len().saturating_sub(SHOWN);
    if more > 0 {
        format!("{} (+{more} more)", head.join(", "))
    } else {
        head.join(", ")
    }
}

/// Runs every check against `set`, with `suite` as the reference
/// construction for `scene`.
pub fn run_checks(scene: &Scene, suite: &SpannerSuite, set: &GraphSet) -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    let n = scene.len();
    let reference = GraphSet::from_suite(suite);
    for kind in GraphKind::ALL {
        let g = set.get(kind);
        if g.n() != n {
            out.push(outcome(
                format!("{}.vertex_count", kind.name()),
                false,
                format!("graph has {} vertices, scene has {n}", g.n()),
            ));
            return out;
        }
        let same = g == reference.get(kind);
        let detail = if same {
            format!("{} edges", g.edge_count())
        } else {
            let extra = g.difference(reference.get(kind));
            let missing = reference.get(kind).difference(g);
            format!("extra [{}] missing [{}]", list(&extra), list(&missing))
        };
        out.push(outcome(format!("{}.matches_construction", kind.name()), same, detail));
    }

    match oracle_g_infinity(scene) {
        Ok(oracle) => {
            let same = oracle == set.ginf;
            let detail = if same {
                format!("{} edges", oracle.edge_count())
            } else {
                format!(
                    "extra [{}] missing [{}]",
                    list(&set.ginf.difference(&oracle)),
                    list(&oracle.difference(&set.ginf))
                )
            };
            out.push(outcome("ginf.oracle", same, detail));
        }
        Err(e) => out.push(outcome("ginf.oracle", false, e.to_string())),
    }
    out.push(outcome(
        "vis.connected",
        set.vis.is_connected(),
        format!("{} edges", set.vis.edge_count()),
    ));

    for kind in [GraphKind::Ginf, GraphKind::G15, GraphKind::G10, GraphKind::G7] {
        let r = check_planarity(scene, set.get(kind));
        let detail = if r.ok() {
            "no crossings".to_string()
        } else {
            format!(
                "crossings [{}] obstacle conflicts [{}]",
                list(&r.crossing_pairs),
                list(&r.obstacle_conflicts)
            )
        };
        out.push(outcome(format!("{}.planarity", kind.name()), r.ok(), detail));
    }

    for (kind, cap) in [(GraphKind::G15, 15), (GraphKind::G10, 10), (GraphKind::G7, 7)] {
        let d = degree_report(set.get(kind));
        out.push(outcome(
            format!("{}.degree", kind.name()),
            d.max_degree <= cap,
            format!("max degree {} (bound {cap})", d.max_degree),
        ));
    }
    let ledger_issues = ledger_issues(&suite.ledger, &set.g10);
    out.push(outcome(
        "g10.charges",
        ledger_issues.is_empty(),
        if ledger_issues.is_empty() {
            format!("{} charges", suite.ledger.len())
        } else {
            list(&ledger_issues)
        },
    ));

    let chain = [
        (GraphKind::G10, GraphKind::G15),
        (GraphKind::G15, GraphKind::Ginf),
        (GraphKind::Ginf, GraphKind::Vis),
    ];
    for (sub, sup) in chain {
        let extra = set.get(sub).difference(set.get(sup));
        out.push(outcome(
            format!("{}.subgraph_of_{}", sub.name(), sup.name()),
            extra.is_empty(),
            if extra.is_empty() {
                "ok".to_string()
            } else {
                format!("edges outside: [{}]", list(&extra))
            },
        ));
    }
    let stray = check_shortcuts(scene, &set.g10, &set.g7, &suite.shortcuts);
    out.push(outcome(
        "g7.shortcuts",
        stray.is_empty(),
        if stray.is_empty() {
            format!("{} transformations", suite.shortcuts.len())
        } else {
            format!("edges not explained by a shortcut: [{}]", list(&stray))
        },
    ));

    let dist: BTreeMap<GraphKind, Distances> = GraphKind::ALL
        .into_iter()
        .map(|k| (k, Distances::compute(scene, set.get(k))))
        .collect();
    let stretch_checks = [
        (GraphKind::Ginf, GraphKind::Vis, 2.0),
        (GraphKind::G15, GraphKind::Ginf, 3.0),
        (GraphKind::G10, GraphKind::Ginf, 3.0),
        (GraphKind::G7, GraphKind::Ginf, 3.0),
        (GraphKind::G15, GraphKind::Vis, 6.0),
        (GraphKind::G10, GraphKind::Vis, 6.0),
        (GraphKind::G7, GraphKind::Vis, 6.0),
    ];
    for (sub, base, t) in stretch_checks {
        let r = stretch_from(&dist[&sub], &dist[&base], n);
        out.push(outcome(
            format!("{}.stretch_vs_{}", sub.name(), base.name()),
            r.within(t),
            format!("max ratio {:.9} at {:?} (bound {t})", r.max_ratio, r.witness_pair),
        ));
    }

    let eb = per_edge_from(scene, &set.vis, &dist[&GraphKind::Ginf]);
    out.push(outcome(
        "ginf.per_edge_bound",
        eb.ok(),
        if eb.ok() {
            format!("worst path/bound {:.9}", eb.worst)
        } else {
            list(&eb.violations)
        },
    ));

    match check_canonical_paths(scene, &set.ginf, &set.g15) {
        Ok(missing) => out.push(outcome(
            "g15.canonical_paths",
            missing.is_empty(),
            if missing.is_empty() {
                "all consecutive pairs present".to_string()
            } else {
                format!("missing (apex, a, b): [{}]", list(&missing))
            },
        )),
        Err(e) => out.push(outcome("g15.canonical_paths", false, e.to_string())),
    }
    match check_empty_triangles(scene, &set.ginf) {
        Ok(w) => out.push(outcome(
            "ginf.empty_triangles",
            w.is_empty(),
            if w.is_empty() {
                "all empty".to_string()
            } else {
                w.iter().take(5).map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
            },
        )),
        Err(e) => out.push(outcome("ginf.empty_triangles", false, e.to_string())),
    }
    out
}

fn ledger_issues(ledger: &ChargeLedger, g10: &Graph) -> Vec<String> {
    let mut issues = ledger.bound_violations(g10);
    for (a, b) in g10.edges() {
        for end in [a, b] {
            if ledger.get(a, b, end).is_none() {
                issues.push(format!("edge ({a}, {b}) uncharged at {end}"));
            }
        }
    }
    issues
}
