use thiserror::Error;

use crate::geom::Point;
use crate::scene::{GeneralPositionReport, Violation};

#[derive(Debug, Error)]
pub enum GeomError {
    #[error("degenerate segment: both endpoints at {0}")]
    DegenerateSegment(Point),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("point coincides with the apex {0}")]
    Coincident(Point),
    #[error("general position violated: direction {apex} -> {p} is parallel to a cone boundary")]
    BoundaryDirection { apex: Point, p: Point },
    #[error("point {p} is not in the requested cone of {apex}")]
    OutsideCone { apex: Point, p: Point },
    #[error("direction {apex} -> {p} points into the obstacle at the apex")]
    InsideObstacleWedge { apex: Point, p: Point },
    #[error("expected a {expected} cone")]
    WrongSign { expected: &'static str },
    #[error("vertex index {0} out of range")]
    NoSuchVertex(usize),
}

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("invalid scene: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("scene is not in general position: {0}")]
    NotInGeneralPosition(GeneralPositionReport),
    #[error("vertex {vertex} is shared by {count} obstacles (at most 2 supported)")]
    SharedByMany { vertex: usize, count: usize },
    #[error("obstacles {0} and {1} share more than one vertex; cannot merge")]
    SharedTwice(usize, usize),
    #[error("could not separate duplicated vertex {0}")]
    NoSeparation(usize),
    #[error("rotation cannot remove collinear triples: {0}")]
    CollinearTriples(GeneralPositionReport),
    #[error("no rotation up to k = {0} restores general position")]
    RotationExhausted(u64),
}

#[derive(Debug, Error)]
pub enum BuildError {
    #[error(transparent)]
    Scene(#[from] SceneError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error("edge ({0}, {1}) has no charge at endpoint {2}")]
    Unclassifiable(usize, usize, usize),
    #[error("graph has {got} vertices, scene has {expected}")]
    VertexCount { expected: usize, got: usize },
}

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("malformed instance: {0}")]
    Json(#[from] serde_json::Error),
    #[error("vertex {vertex}: bad coordinate {text:?}")]
    Coordinate { vertex: usize, text: String },
    #[error("obstacle {obstacle}: index out of range: {index} (have {n} vertices)")]
    IndexOutOfRange { obstacle: usize, index: usize, n: usize },
    #[error("invalid scene: {}", join(.0))]
    Invalid(Vec<Violation>),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("vertex sets differ: subgraph has {sub} vertices, base has {base}")]
    VertexSetMismatch { sub: usize, base: usize },
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Error)]
pub enum GenerateError {
    #[error("{vertices} obstacle vertices do not fit in {n_points} points")]
    TooManyObstacleVertices { vertices: usize, n_points: usize },
    #[error("obstacle size must be at least 3, got {0}")]
    ObstacleTooSmall(usize),
    #[error("gave up placing {what} after {attempts} attempts")]
    Exhausted { what: &'static str, attempts: usize },
}
