//! Six cones of angle π/3 around every vertex, their subcones, bisector
//! projections and canonical triangles.
//!
//! Cones are addressed by *position*, counting counterclockwise from the
//! upward cone: `C0, C̄2, C1, C̄0, C2, C̄1`. Position `p` spans the open
//! angular interval `(60° + 60°·p, 120° + 60°·p)`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;

use crate::error::ConeError;
use crate::geom::{cross, rat, rat_frac, ExactScalar, Point, Rational};
use crate::scene::Scene;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConeSign {
    Positive,
    Negative,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeLabel {
    pub sign: ConeSign,
    pub index: u8,
}

impl ConeLabel {
    pub const fn positive(index: u8) -> Self {
        ConeLabel { sign: ConeSign::Positive, index }
    }

    pub const fn negative(index: u8) -> Self {
        ConeLabel { sign: ConeSign::Negative, index }
    }

    pub fn is_positive(self) -> bool {
        self.sign == ConeSign::Positive
    }

    pub fn position(self) -> u8 {
        match self.sign {
            ConeSign::Positive => 2 * self.index,
            ConeSign::Negative => (2 * self.index + 3) % 6,
        }
    }

    pub fn from_position(pos: u8) -> Self {
        let pos = pos % 6;
        if pos.is_multiple_of(2) {
            ConeLabel::positive(pos / 2)
        } else {
            ConeLabel::negative(((pos + 3) / 2) % 3)
        }
    }

    pub fn opposite(self) -> Self {
        ConeLabel::from_position(self.position() + 3)
    }

    /// The cone rotated `steps` positions counterclockwise.
    pub fn rotated(self, steps: i8) -> Self {
        ConeLabel::from_position((self.position() as i8 + steps).rem_euclid(6) as u8)
    }

    /// Twice the unit bisector, as (coefficient of √3 in x, y).
    fn doubled_bisector(self) -> (i64, i64) {
        match self.position() {
            0 => (0, 2),
            1 => (-1, 1),
            2 => (-1, -1),
            3 => (0, -2),
            4 => (1, -1),
            _ => (1, 1),
        }
    }

    /// Unit bisector in floating point.
    pub fn bisector_f64(self) -> (f64, f64) {
        let (xs, y) = self.doubled_bisector();
        (xs as f64 * 3f64.sqrt() / 2.0, y as f64 / 2.0)
    }

    pub fn all() -> [ConeLabel; 6] {
        [0, 1, 2, 3, 4, 5].map(ConeLabel::from_position)
    }
}

impl fmt::Debug for ConeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            ConeSign::Positive => write!(f, "C{}", self.index),
            ConeSign::Negative => write!(f, "~C{}", self.index),
        }
    }
}

impl fmt::Display for ConeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Which part of a cone, when the apex's obstacle splits it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Whole,
    /// Counterclockwise of the obstacle wedge.
    Left,
    /// Clockwise of the obstacle wedge.
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubconeRef {
    pub apex: usize,
    pub label: ConeLabel,
    pub side: Side,
}

impl fmt::Display for SubconeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Whole => write!(f, "{}@{}", self.label, self.apex),
            Side::Left => write!(f, "{}L@{}", self.label, self.apex),
            Side::Right => write!(f, "{}R@{}", self.label, self.apex),
        }
    }
}

/// Cone of `apex` containing direction `(dx, dy)`.
pub fn cone_of_direction(dx: &Rational, dy: &Rational) -> Option<ConeLabel> {
    let h = dy.cmp(&rat(0));
    // signs of the cross products with the 60° and 120° boundary directions
    let a60 = ExactScalar::new(dy.clone(), -dx).signum();
    let a120 = ExactScalar::new(-dy, -dx).signum();
    use Ordering::*;
    if h == Equal || a60 == Equal || a120 == Equal {
        return None;
    }
    let sector = if h == Greater {
        if a120 == Greater {
            2
        } else if a60 == Greater {
            1
        } else {
            0
        }
    } else if a120 == Less {
        5
    } else if a60 == Greater {
        3
    } else {
        4
    };
    Some(ConeLabel::from_position((sector + 5) % 6))
}

pub fn cone_of(apex: &Point, p: &Point) -> Result<ConeLabel, ConeError> {
    if apex == p {
        return Err(ConeError::Coincident(apex.clone()));
    }
    let (dx, dy) = p.sub(apex);
    cone_of_direction(&dx, &dy).ok_or_else(|| ConeError::BoundaryDirection {
        apex: apex.clone(),
        p: p.clone(),
    })
}

/// Twice the dot product of `p - apex` with the unit bisector of `label`.
/// Strictly monotone in the distance from the apex to the projection.
pub fn projection_key(apex: &Point, label: ConeLabel, p: &Point) -> Result<ExactScalar, ConeError> {
    if cone_of(apex, p)? != label {
        return Err(ConeError::OutsideCone {
            apex: apex.clone(),
            p: p.clone(),
        });
    }
    Ok(raw_projection_key(apex, label, p))
}

pub(crate) fn raw_projection_key(apex: &Point, label: ConeLabel, p: &Point) -> ExactScalar {
    let (dx, dy) = p.sub(apex);
    let (xs, y) = label.doubled_bisector();
    ExactScalar::new(dy * rat(y), dx * rat(xs))
}

/// The cone of `apex` whose interior contains the obstacle wedge at `apex`,
/// if there is one.
pub fn split_cone(scene: &Scene, apex: usize) -> Option<ConeLabel> {
    let corner = scene.corner(apex)?;
    let a = scene.point(apex);
    let (nx, ny) = scene.point(corner.next).sub(a);
    let (px, py) = scene.point(corner.prev).sub(a);
    let cn = cone_of_direction(&nx, &ny)?;
    let cp = cone_of_direction(&px, &py)?;
    // convex corner with both edges in one cone: the interior wedge is the
    // short sweep from next to prev, inside that cone
    (cn == cp && cross(&nx, &ny, &px, &py).is_positive()).then_some(cn)
}

/// The subcone of `apex` containing vertex `p`. Directions along the two
/// obstacle edges belong to the subcone on their side.
pub fn subcone_of(scene: &Scene, apex: usize, p: usize) -> Result<SubconeRef, ConeError> {
    if apex >= scene.len() {
        return Err(ConeError::NoSuchVertex(apex));
    }
    if p >= scene.len() {
        return Err(ConeError::NoSuchVertex(p));
    }
    let a = scene.point(apex);
    let label = cone_of(a, scene.point(p))?;
    let whole = SubconeRef { apex, label, side: Side::Whole };
    if split_cone(scene, apex) != Some(label) {
        return Ok(whole);
    }
    let corner = scene.corner(apex).expect("split implies corner");
    let (dx, dy) = scene.point(p).sub(a);
    let (nx, ny) = scene.point(corner.next).sub(a);
    let (px, py) = scene.point(corner.prev).sub(a);
    let side = if !cross(&px, &py, &dx, &dy).is_negative() {
        Side::Left
    } else if !cross(&nx, &ny, &dx, &dy).is_positive() {
        Side::Right
    } else {
        return Err(ConeError::InsideObstacleWedge {
            apex: a.clone(),
            p: scene.point(p).clone(),
        });
    };
    Ok(SubconeRef { apex, label, side })
}

/// All subcones of a vertex: six, or seven when one cone is split.
pub fn subcones(scene: &Scene, apex: usize) -> Vec<SubconeRef> {
    let split = split_cone(scene, apex);
    let mut out = Vec::with_capacity(7);
    for label in ConeLabel::all() {
        if split == Some(label) {
            out.push(SubconeRef { apex, label, side: Side::Right });
            out.push(SubconeRef { apex, label, side: Side::Left });
        } else {
            out.push(SubconeRef { apex, label, side: Side::Whole });
        }
    }
    out
}

/// A point with coordinates in Q(√3).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactPoint {
    pub x: ExactScalar,
    pub y: ExactScalar,
}

impl ExactPoint {
    pub fn from_point(p: &Point) -> Self {
        ExactPoint {
            x: ExactScalar::from_rational(p.x.clone()),
            y: ExactScalar::from_rational(p.y.clone()),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTriangle {
    pub apex: Point,
    pub label: ConeLabel,
    /// Far corner counterclockwise of the bisector.
    pub a: ExactPoint,
    /// Far corner clockwise of the bisector.
    pub b: ExactPoint,
    pub m: ExactPoint,
}

impl CanonicalTriangle {
    /// Distance from the apex to the far side, doubled (the projection key
    /// of the point that defined the triangle).
    pub fn doubled_height(&self) -> ExactScalar {
        let apex = ExactPoint::from_point(&self.apex);
        let (xs, y) = self.label.doubled_bisector();
        let dx = &self.m.x - &apex.x;
        let dy = &self.m.y - &apex.y;
        &(&dx * &ExactScalar::new(rat(0), rat(xs))) + &(&dy * &ExactScalar::from_rational(rat(y)))
    }
}

/// Equilateral triangle bounded by the positive cone of `u` containing `v`
/// and the line through `v` perpendicular to that cone's bisector.
pub fn canonical_triangle(u: &Point, v: &Point) -> Result<CanonicalTriangle, ConeError> {
    let label = cone_of(u, v)?;
    if !label.is_positive() {
        return Err(ConeError::WrongSign { expected: "positive" });
    }
    let (xs, y) = label.doubled_bisector();
    let half = rat_frac(1, 2);
    let bx = ExactScalar::new(rat(0), rat(xs) * &half);
    let by = ExactScalar::from_rational(rat(y) * &half);
    // height h = key / 2, half-width = h / √3 = h·√3/3
    let h = raw_projection_key(u, label, v).scale(&half);
    let w = &h * &ExactScalar::new(rat(0), rat_frac(1, 3));
    let ux = ExactScalar::from_rational(u.x.clone());
    let uy = ExactScalar::from_rational(u.y.clone());
    let m = ExactPoint {
        x: &ux + &(&h * &bx),
        y: &uy + &(&h * &by),
    };
    // counterclockwise normal to the bisector: (-by, bx)
    let nx = -&by;
    let ny = bx.clone();
    let a = ExactPoint {
        x: &m.x + &(&w * &nx),
        y: &m.y + &(&w * &ny),
    };
    let b = ExactPoint {
        x: &m.x - &(&w * &nx),
        y: &m.y - &(&w * &ny),
    };
    Ok(CanonicalTriangle {
        apex: u.clone(),
        label,
        a,
        b,
        m,
    })
}
