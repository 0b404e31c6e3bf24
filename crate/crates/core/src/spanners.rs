//! G∞ and its bounded-degree subgraphs G15, G10 and G7.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use crate::cones::{
    cone_of, raw_projection_key, split_cone, subcone_of, subcones, ConeLabel, Side, SubconeRef,
};
use crate::error::{BuildError, ConeError};
use crate::geom::{cross, ExactScalar, Rational};
use crate::graph::Graph;
use crate::scene::Scene;
use crate::visibility::visibility_graph;

/// A neighbour of an apex, as seen from inside one of its subcones.
#[derive(Clone, Debug)]
pub struct NeighborEntry {
    pub vertex: usize,
    pub key: ExactScalar,
    dir: (Rational, Rational),
}

fn ccw_order(a: &NeighborEntry, b: &NeighborEntry) -> Ordering {
    // both directions lie in one cone of angle π/3, so the cross product
    // decides the angular order
    let c = cross(&a.dir.0, &a.dir.1, &b.dir.0, &b.dir.1);
    if c.is_positive() {
        Ordering::Less
    } else if c.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// Incident edges of every vertex grouped by subcone, sorted
/// counterclockwise around the apex.
#[derive(Clone, Debug)]
pub struct ConeEdgeIndex {
    per_vertex: Vec<BTreeMap<SubconeRef, Vec<NeighborEntry>>>,
}

impl ConeEdgeIndex {
    pub fn build(scene: &Scene, g: &Graph) -> Result<Self, ConeError> {
        let per_vertex = (0..scene.len())
            .map(|u| index_vertex(scene, g, u))
            .collect::<Result<_, _>>()?;
        Ok(ConeEdgeIndex { per_vertex })
    }

    pub fn entries(&self, sub: &SubconeRef) -> &[NeighborEntry] {
        self.per_vertex[sub.apex]
            .get(sub)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Non-empty subcones of `u` with their entries.
    pub fn subcones_of(&self, u: usize) -> impl Iterator<Item = (&SubconeRef, &[NeighborEntry])> {
        self.per_vertex[u].iter().map(|(k, v)| (k, v.as_slice()))
    }

    /// Neighbour with the smallest bisector projection.
    pub fn closest(&self, sub: &SubconeRef) -> Option<usize> {
        self.entries(sub)
            .iter()
            .min_by(|a, b| a.key.cmp(&b.key))
            .map(|e| e.vertex)
    }

    /// Clockwise extreme.
    pub fn leftmost(&self, sub: &SubconeRef) -> Option<usize> {
        self.entries(sub).first().map(|e| e.vertex)
    }

    /// Counterclockwise extreme.
    pub fn rightmost(&self, sub: &SubconeRef) -> Option<usize> {
        self.entries(sub).last().map(|e| e.vertex)
    }

    pub fn sequence(&self, sub: &SubconeRef) -> Vec<usize> {
        self.entries(sub).iter().map(|e| e.vertex).collect()
    }
}

fn index_vertex(
    scene: &Scene,
    g: &Graph,
    u: usize,
) -> Result<BTreeMap<SubconeRef, Vec<NeighborEntry>>, ConeError> {
    let mut map: BTreeMap<SubconeRef, Vec<NeighborEntry>> = BTreeMap::new();
    let pu = scene.point(u);
    for v in g.neighbors(u) {
        let sub = subcone_of(scene, u, v)?;
        let pv = scene.point(v);
        map.entry(sub).or_default().push(NeighborEntry {
            vertex: v,
            key: raw_projection_key(pu, sub.label, pv),
            dir: pv.sub(pu),
        });
    }
    for list in map.values_mut() {
        list.sort_by(ccw_order);
    }
    Ok(map)
}

/// For every vertex and positive subcone, the edge to the visible vertex
/// with the smallest bisector projection.
pub fn build_g_infinity(scene: &Scene) -> Result<Graph, BuildError> {
    scene.ensure_ready()?;
    Ok(g_infinity_from_visibility(scene, &visibility_graph(scene))?)
}

fn g_infinity_from_visibility(scene: &Scene, vis: &Graph) -> Result<Graph, ConeError> {
    let n = scene.len();
    let mut g = Graph::new(n);
    for u in 0..n {
        let pu = scene.point(u);
        let mut best: BTreeMap<SubconeRef, (ExactScalar, usize)> = BTreeMap::new();
        for v in vis.neighbors(u) {
            let sub = subcone_of(scene, u, v)?;
            if !sub.label.is_positive() {
                continue;
            }
            let key = raw_projection_key(pu, sub.label, scene.point(v));
            match best.get(&sub) {
                Some((k, _)) if *k <= key => {}
                _ => {
                    best.insert(sub, (key, v));
                }
            }
        }
        for (_, v) in best.into_values() {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSequence {
    pub apex: usize,
    pub subcone: SubconeRef,
    pub vertices: Vec<usize>,
}

/// G∞-neighbours of `apex` in a negative subcone, counterclockwise.
pub fn canonical_sequence(
    scene: &Scene,
    ginf: &Graph,
    apex: usize,
    subcone: SubconeRef,
) -> Result<CanonicalSequence, ConeError> {
    if subcone.label.is_positive() {
        return Err(ConeError::WrongSign { expected: "negative" });
    }
    if apex >= scene.len() {
        return Err(ConeError::NoSuchVertex(apex));
    }
    let map = index_vertex(scene, ginf, apex)?;
    let vertices = map
        .get(&SubconeRef { apex, ..subcone })
        .map(|l| l.iter().map(|e| e.vertex).collect())
        .unwrap_or_default();
    Ok(CanonicalSequence { apex, subcone, vertices })
}

fn negative_subcones(
    index: &ConeEdgeIndex,
    u: usize,
) -> impl Iterator<Item = (&SubconeRef, &[NeighborEntry])> {
    index.subcones_of(u).filter(|(s, _)| !s.label.is_positive())
}

/// Keeps, in every negative subcone, the leftmost, rightmost and closest
/// edge.
pub fn build_g15(scene: &Scene, ginf: &Graph) -> Result<Graph, BuildError> {
    let index = ConeEdgeIndex::build(scene, ginf)?;
    let mut g = Graph::new(scene.len());
    for u in 0..scene.len() {
        for (sub, _) in negative_subcones(&index, u) {
            for v in [index.leftmost(sub), index.rightmost(sub), index.closest(sub)]
                .into_iter()
                .flatten()
            {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Keeps, in every negative subcone, the closest edge and the canonical
/// path.
pub fn build_g10(scene: &Scene, ginf: &Graph) -> Result<Graph, BuildError> {
    let index = ConeEdgeIndex::build(scene, ginf)?;
    Ok(g10_from_index(scene.len(), &index))
}

fn g10_from_index(n: usize, index: &ConeEdgeIndex) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for (sub, entries) in negative_subcones(index, u) {
            if let Some(c) = index.closest(sub) {
                g.add_edge(u, c);
            }
            for pair in entries.windows(2) {
                g.add_edge(pair[0].vertex, pair[1].vertex);
            }
        }
    }
    g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scenario {
    /// Far end of a closest edge.
    A,
    /// Apex end of a closest edge.
    B,
    /// Canonical-path edge whose other end lies in a neighbouring negative
    /// cone.
    C,
    /// Canonical-path edge whose other end lies in a positive cone.
    D,
    /// Edge added by the degree-7 transformation.
    Shortcut,
}

impl Scenario {
    fn priority(self) -> u8 {
        match self {
            Scenario::A | Scenario::B => 0,
            Scenario::C => 1,
            Scenario::D => 2,
            Scenario::Shortcut => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Charge {
    /// `(min, max)` endpoints.
    pub edge: (usize, usize),
    pub endpoint: usize,
    pub subcone: SubconeRef,
    pub scenario: Scenario,
    /// Apex and negative subcone of the canonical path the edge belongs to.
    pub path: Option<(usize, SubconeRef)>,
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) at {} -> {} [{:?}]",
            self.edge.0, self.edge.1, self.endpoint, self.subcone, self.scenario
        )
    }
}

fn ekey(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// One charge per edge endpoint.
#[derive(Clone, Debug, Default)]
pub struct ChargeLedger {
    charges: BTreeMap<((usize, usize), usize), Charge>,
}

impl ChargeLedger {
    pub fn get(&self, u: usize, v: usize, endpoint: usize) -> Option<&Charge> {
        self.charges.get(&(ekey(u, v), endpoint))
    }

    pub fn iter(&self) -> impl Iterator<Item = &Charge> {
        self.charges.values()
    }

    pub fn len(&self) -> usize {
        self.charges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.charges.is_empty()
    }

    fn offer(&mut self, c: Charge) {
        let k = (c.edge, c.endpoint);
        match self.charges.get(&k) {
            Some(old) if old.scenario.priority() <= c.scenario.priority() => {}
            _ => {
                self.charges.insert(k, c);
            }
        }
    }

    fn remove_edge(&mut self, u: usize, v: usize) {
        let e = ekey(u, v);
        self.charges.remove(&(e, u));
        self.charges.remove(&(e, v));
    }

    pub fn charges_at(&self, v: usize) -> usize {
        self.charges.values().filter(|c| c.endpoint == v).count()
    }

    pub fn by_subcone(&self) -> BTreeMap<SubconeRef, Vec<&Charge>> {
        let mut out: BTreeMap<SubconeRef, Vec<&Charge>> = BTreeMap::new();
        for c in self.charges.values() {
            out.entry(c.subcone).or_default().push(c);
        }
        out
    }

    fn in_subcone(&self, sub: &SubconeRef) -> Vec<Charge> {
        self.charges
            .values()
            .filter(|c| c.subcone == *sub)
            .cloned()
            .collect()
    }

    /// Violations of the per-vertex and per-subcone accounting against `g`:
    /// total charge at least the degree, at most one charge per negative
    /// subcone and two per positive subcone.
    pub fn bound_violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        for v in 0..g.n() {
            let (c, d) = (self.charges_at(v), g.degree(v));
            if c < d {
                out.push(format!("vertex {v}: charge {c} < degree {d}"));
            }
        }
        for (sub, list) in self.by_subcone() {
            let cap = if sub.label.is_positive() { 2 } else { 1 };
            if list.len() > cap {
                let names: Vec<String> = list.iter().map(|c| c.to_string()).collect();
                out.push(format!("{sub}: {} charges > {cap}: {}", list.len(), names.join("; ")));
            }
        }
        out
    }
}

/// Charge of a canonical-path edge `(w, other)` at `w`, where `w` belongs
/// to the path of `apex` in `path`.
fn path_charge(
    scene: &Scene,
    w: usize,
    other: usize,
    apex: usize,
    path: SubconeRef,
) -> Result<Option<Charge>, ConeError> {
    let p = subcone_of(scene, w, apex)?;
    if !p.label.is_positive() {
        return Ok(None);
    }
    let o = cone_of(scene.point(w), scene.point(other))?;
    let diff = (o.position() as i8 - p.label.position() as i8).rem_euclid(6);
    let (subcone, scenario) = match (o.is_positive(), diff) {
        (false, 1 | 5) => (p, Scenario::C),
        (true, 2 | 4) => {
            let step = if diff == 2 { 1 } else { -1 };
            let label = p.label.rotated(step);
            let side = if split_cone(scene, w) != Some(label) {
                Side::Whole
            } else if diff == 2 {
                Side::Left
            } else {
                Side::Right
            };
            (SubconeRef { apex: w, label, side }, Scenario::D)
        }
        _ => return Ok(None),
    };
    Ok(Some(Charge {
        edge: ekey(w, other),
        endpoint: w,
        subcone,
        scenario,
        path: Some((apex, path)),
    }))
}

fn candidate_charges(scene: &Scene, index: &ConeEdgeIndex) -> Result<ChargeLedger, ConeError> {
    let mut ledger = ChargeLedger::default();
    for u in 0..scene.len() {
        for (sub, entries) in negative_subcones(index, u) {
            if let Some(c) = index.closest(sub) {
                ledger.offer(Charge {
                    edge: ekey(u, c),
                    endpoint: u,
                    subcone: *sub,
                    scenario: Scenario::B,
                    path: None,
                });
                ledger.offer(Charge {
                    edge: ekey(u, c),
                    endpoint: c,
                    subcone: subcone_of(scene, c, u)?,
                    scenario: Scenario::A,
                    path: None,
                });
            }
            for pair in entries.windows(2) {
                let (a, b) = (pair[0].vertex, pair[1].vertex);
                for (w, o) in [(a, b), (b, a)] {
                    if let Some(ch) = path_charge(scene, w, o, u, *sub)? {
                        ledger.offer(ch);
                    }
                }
            }
        }
    }
    Ok(ledger)
}

/// Charges every G10 edge at both endpoints. Closest-edge roles win over
/// path roles, so an edge that is both is charged once per endpoint.
pub fn compute_charges(scene: &Scene, ginf: &Graph, g10: &Graph) -> Result<ChargeLedger, BuildError> {
    let index = ConeEdgeIndex::build(scene, ginf)?;
    charges_for(scene, &index, g10)
}

fn charges_for(scene: &Scene, index: &ConeEdgeIndex, g10: &Graph) -> Result<ChargeLedger, BuildError> {
    let all = candidate_charges(scene, index)?;
    let mut ledger = ChargeLedger::default();
    for (a, b) in g10.edges() {
        for end in [a, b] {
            let c = all
                .get(a, b, end)
                .ok_or(BuildError::Unclassifiable(a, b, end))?;
            ledger.charges.insert(((a, b), end), c.clone());
        }
    }
    Ok(ledger)
}

/// One application of the degree-7 transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shortcut {
    /// Apex of the canonical path.
    pub u: usize,
    pub subcone: SubconeRef,
    /// Vertex whose positive cone was charged twice.
    pub v: usize,
    /// Path neighbour of `v` on the side of the closest vertex.
    pub x: usize,
    pub y: usize,
    /// The edge `(x, w)` removed afterwards, if any.
    pub removed_w: Option<usize>,
    /// False if `(x, y)` was already present.
    pub added: bool,
}

#[derive(Clone, Debug)]
pub struct G7Build {
    pub graph: Graph,
    pub ledger: ChargeLedger,
    pub shortcuts: Vec<Shortcut>,
}

pub fn build_g7(scene: &Scene, ginf: &Graph, g10: &Graph) -> Result<Graph, BuildError> {
    Ok(build_g7_logged(scene, ginf, g10)?.graph)
}

/// Resolves every positive cone charged twice by one canonical path by
/// replacing `(v, y)` with `(x, y)`, then drops `(x, w)` where that keeps
/// the charge at `x` unchanged.
pub fn build_g7_logged(scene: &Scene, ginf: &Graph, g10: &Graph) -> Result<G7Build, BuildError> {
    if g10.n() != scene.len() {
        return Err(BuildError::VertexCount {
            expected: scene.len(),
            got: g10.n(),
        });
    }
    let index = ConeEdgeIndex::build(scene, ginf)?;
    let mut ledger = charges_for(scene, &index, g10)?;
    let mut g = g10.clone();
    let mut shortcuts = Vec::new();
    let is_closest = |apex: usize, other: usize| -> Result<bool, ConeError> {
        let sub = subcone_of(scene, apex, other)?;
        Ok(index.closest(&sub) == Some(other))
    };

    for v in 0..scene.len() {
        for p in subcones(scene, v).into_iter().filter(|s| s.label.is_positive()) {
            let mut groups: BTreeMap<(usize, SubconeRef), usize> = BTreeMap::new();
            for c in ledger.in_subcone(&p) {
                if let (Scenario::C, Some(path)) = (c.scenario, c.path) {
                    *groups.entry(path).or_default() += 1;
                }
            }
            for ((u, s), count) in groups {
                if count < 2 {
                    continue;
                }
                let seq = index.sequence(&s);
                let Some(iv) = seq.iter().position(|&z| z == v) else { continue };
                let Some(ic) = index.closest(&s).and_then(|c| seq.iter().position(|&z| z == c))
                else {
                    continue;
                };
                if iv == 0 || iv + 1 >= seq.len() || ic == iv {
                    continue;
                }
                let (x, y) = if ic < iv {
                    (seq[iv - 1], seq[iv + 1])
                } else {
                    (seq[iv + 1], seq[iv - 1])
                };
                if !g.has_edge(x, v) || !g.has_edge(v, y) {
                    continue;
                }
                if is_closest(v, x)? || is_closest(v, y)? {
                    continue;
                }
                let y_slot = ledger
                    .get(v, y, y)
                    .map(|c| c.subcone)
                    .map_or_else(|| subcone_of(scene, y, v), Ok)?;
                g.remove_edge(v, y);
                ledger.remove_edge(v, y);
                let added = g.add_edge(x, y);

                let mut removed_w = None;
                let vx = subcone_of(scene, v, x)?;
                let vseq = index.sequence(&vx);
                if added {
                    if let Some(w) = path_neighbor(&vseq, x, index.closest(&vx)) {
                        let wl = cone_of(scene.point(x), scene.point(w))?;
                        if wl == ConeLabel::negative(p.label.index)
                            && !is_closest(x, w)?
                            && g.remove_edge(x, w)
                        {
                            ledger.remove_edge(x, w);
                            removed_w = Some(w);
                        }
                    }
                    ledger.charges.insert(
                        (ekey(x, y), y),
                        Charge {
                            edge: ekey(x, y),
                            endpoint: y,
                            subcone: y_slot,
                            scenario: Scenario::Shortcut,
                            path: Some((u, s)),
                        },
                    );
                    ledger.charges.insert(
                        (ekey(x, y), x),
                        Charge {
                            edge: ekey(x, y),
                            endpoint: x,
                            subcone: subcone_of(scene, x, v)?,
                            scenario: Scenario::Shortcut,
                            path: Some((u, s)),
                        },
                    );
                }
                shortcuts.push(Shortcut {
                    u,
                    subcone: s,
                    v,
                    x,
                    y,
                    removed_w,
                    added,
                });
            }
        }
    }
    Ok(G7Build {
        graph: g,
        ledger,
        shortcuts,
    })
}

/// Neighbour of `x` along `seq`; when `x` is interior, the one towards the
/// closest vertex.
fn path_neighbor(seq: &[usize], x: usize, closest: Option<usize>) -> Option<usize> {
    let ix = seq.iter().position(|&z| z == x)?;
    let before = ix.checked_sub(1).map(|i| seq[i]);
    let after = seq.get(ix + 1).copied();
    match (before, after) {
        (Some(b), Some(a)) => {
            let ic = closest.and_then(|c| seq.iter().position(|&z| z == c))?;
            Some(if ic < ix { b } else { a })
        }
        (b, a) => b.or(a),
    }
}

/// Every graph of the construction, built once from a scene.
#[derive(Clone, Debug)]
pub struct SpannerSuite {
    pub vis: Graph,
    pub ginf: Graph,
    pub g15: Graph,
    pub g10: Graph,
    pub g7: Graph,
    pub ledger: ChargeLedger,
    pub g7_ledger: ChargeLedger,
    pub shortcuts: Vec<Shortcut>,
}

impl SpannerSuite {
    pub fn build(scene: &Scene) -> Result<Self, BuildError> {
        scene.ensure_ready()?;
        let vis = visibility_graph(scene);
        let ginf = g_infinity_from_visibility(scene, &vis)?;
        let index = ConeEdgeIndex::build(scene, &ginf)?;
        let g15 = build_g15(scene, &ginf)?;
        let g10 = g10_from_index(scene.len(), &index);
        let ledger = charges_for(scene, &index, &g10)?;
        let g7 = build_g7_logged(scene, &ginf, &g10)?;
        Ok(SpannerSuite {
            vis,
            ginf,
            g15,
            g10,
            g7: g7.graph,
            ledger,
            g7_ledger: g7.ledger,
            shortcuts: g7.shortcuts,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::ConeSign;

    fn three_points() -> Scene {
        Scene::from_ints(&[(0, 0), (-1, 2), (1, 3)], vec![])
    }

    #[test]
    fn g_infinity_three_points() {
        let g = build_g_infinity(&three_points()).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn g_infinity_trivial_cases() {
        let one = Scene::from_ints(&[(3, 4)], vec![]);
        assert_eq!(build_g_infinity(&one).unwrap().edge_count(), 0);
        let two = Scene::from_ints(&[(0, 0), (2, 7)], vec![]);
        assert_eq!(build_g_infinity(&two).unwrap().edge_count(), 1);
        let bad = Scene::from_ints(&[(0, 0), (5, 0)], vec![]);
        assert!(matches!(build_g_infinity(&bad), Err(BuildError::Scene(_))));
    }

    #[test]
    fn g10_and_g15_of_three_points() {
        let s = three_points();
        let ginf = build_g_infinity(&s).unwrap();
        assert_eq!(build_g15(&s, &ginf).unwrap(), ginf);
        assert_eq!(build_g10(&s, &ginf).unwrap(), ginf);
    }

    #[test]
    fn charges_of_a_vertical_pair() {
        let s = Scene::from_ints(&[(0, 0), (0, -1)], vec![]);
        let ginf = build_g_infinity(&s).unwrap();
        let g10 = build_g10(&s, &ginf).unwrap();
        let ledger = compute_charges(&s, &ginf, &g10).unwrap();
        let at_u = ledger.get(0, 1, 0).unwrap();
        assert_eq!(at_u.scenario, Scenario::B);
        assert_eq!(at_u.subcone.label, ConeLabel::negative(0));
        let at_v = ledger.get(0, 1, 1).unwrap();
        assert_eq!(at_v.scenario, Scenario::A);
        assert_eq!(at_v.subcone.label, ConeLabel::positive(0));
        assert!(ledger.bound_violations(&g10).is_empty());
    }

    /// A fan of vertices below `u` that all see `u` as closest upward.
    fn fan() -> Scene {
        Scene::from_ints(
            &[(0, 0), (-9, -20), (-4, -13), (1, -11), (5, -14), (10, -21)],
            vec![],
        )
    }

    #[test]
    fn canonical_sequence_of_a_fan() {
        let s = fan();
        let ginf = build_g_infinity(&s).unwrap();
        let sub = SubconeRef {
            apex: 0,
            label: ConeLabel::negative(0),
            side: Side::Whole,
        };
        let seq = canonical_sequence(&s, &ginf, 0, sub).unwrap();
        // counterclockwise around u inside the downward cone: left to right
        assert_eq!(seq.vertices, vec![1, 2, 3, 4, 5]);
        for w in seq.vertices.windows(2) {
            assert!(ginf.has_edge(w[0], w[1]));
        }
        let g15 = build_g15(&s, &ginf).unwrap();
        let kept: Vec<usize> = (1..6).filter(|&v| g15.has_edge(0, v)).collect();
        assert_eq!(kept, vec![1, 3, 5]);
        let g10 = build_g10(&s, &ginf).unwrap();
        let kept: Vec<usize> = (1..6).filter(|&v| g10.has_edge(0, v)).collect();
        assert_eq!(kept, vec![3]);
        assert!(g10.is_subgraph_of(&g15));
        let positive = SubconeRef {
            apex: 0,
            label: ConeLabel::positive(0),
            side: Side::Whole,
        };
        assert!(canonical_sequence(&s, &ginf, 0, positive).is_err());
    }

    #[test]
    fn ledger_scenarios_on_a_fan() {
        let s = fan();
        let ginf = build_g_infinity(&s).unwrap();
        let g10 = build_g10(&s, &ginf).unwrap();
        let ledger = compute_charges(&s, &ginf, &g10).unwrap();
        assert!(ledger.bound_violations(&g10).is_empty(), "{:?}", ledger.bound_violations(&g10));
        // every edge charged exactly twice
        assert_eq!(ledger.len(), 2 * g10.edge_count());
        for c in ledger.iter() {
            let ok = match c.scenario {
                Scenario::A | Scenario::C => c.subcone.label.sign == ConeSign::Positive,
                Scenario::B | Scenario::D => c.subcone.label.sign == ConeSign::Negative,
                Scenario::Shortcut => false,
            };
            assert!(ok, "{c}");
        }
    }

    #[test]
    fn path_neighbor_prefers_closest_side() {
        assert_eq!(path_neighbor(&[4, 5, 6], 4, Some(6)), Some(5));
        assert_eq!(path_neighbor(&[4, 5, 6], 5, Some(6)), Some(6));
        assert_eq!(path_neighbor(&[4, 5, 6], 5, Some(4)), Some(4));
        assert_eq!(path_neighbor(&[4], 4, Some(4)), None);
        assert_eq!(path_neighbor(&[4, 5], 7, None), None);
    }

    #[test]
    fn g7_on_a_fan_is_g10_or_lower_degree() {
        let s = fan();
        let suite = SpannerSuite::build(&s).unwrap();
        assert!(suite.g7.max_degree() <= 7);
        for (a, b) in suite.g7.difference(&suite.g10) {
            assert!(suite
                .shortcuts
                .iter()
                .any(|sc| ekey(sc.x, sc.y) == (a, b)));
        }
    }
}
