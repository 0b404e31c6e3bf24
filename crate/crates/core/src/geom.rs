//! Exact predicates over rational points.
//!
//! Every decision that feeds graph construction goes through this module.
//! Coordinates are arbitrary-precision rationals and the only irrational
//! quantity in the whole crate, √3, is carried symbolically by
//! [`ExactScalar`]. Nothing here rounds.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::GeomError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rat(x), rat(y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub fn sub(&self, other: &Point) -> (Rational, Rational) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    /// `self + t * (to - self)`
    pub fn lerp(&self, to: &Point, t: &Rational) -> Point {
        Point::new(
            &self.x + t * (&to.x - &self.x),
            &self.y + t * (&to.y - &self.y),
        )
    }

    pub fn dist_f64(&self, other: &Point) -> f64 {
        let (ax, ay) = self.to_f64();
        let (bx, by) = other.to_f64();
        (ax - bx).hypot(ay - by)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn cross(ax: &Rational, ay: &Rational, bx: &Rational, by: &Rational) -> Rational {
    ax * by - ay * bx
}

pub fn dot(ax: &Rational, ay: &Rational, bx: &Rational, by: &Rational) -> Rational {
    ax * bx + ay * by
}

/// An element `a + b·√3` of the field Q(√3).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    pub a: Rational,
    pub b: Rational,
}

impl ExactScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        ExactScalar { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        ExactScalar::new(a, Rational::zero())
    }

    pub fn zero() -> Self {
        ExactScalar::from_rational(Rational::zero())
    }

    pub fn sqrt3() -> Self {
        ExactScalar::new(Rational::zero(), rat(1))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        ExactScalar::new(&self.a * k, &self.b * k)
    }

    /// Exact sign of `a + b√3`.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // Opposite signs: the larger magnitude wins, compare a² with 3b².
        let a2 = &self.a * &self.a;
        let b2 = &self.b * &self.b * rat(3);
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.signum() == Ordering::Equal
    }

    pub fn to_f64(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·√3", self.a, self.b)
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: &ExactScalar) -> ExactScalar {
        ExactScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: &ExactScalar) -> ExactScalar {
        // (a + b√3)(c + d√3) = (ac + 3bd) + (ad + bc)√3
        ExactScalar::new(
            &self.a * &rhs.a + rat(3) * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar::new(-&self.a, -&self.b)
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: ExactScalar) -> ExactScalar {
        &self + &rhs
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: ExactScalar) -> ExactScalar {
        &self - &rhs
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: ExactScalar) -> ExactScalar {
        &self * &rhs
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    fn from_sign(v: &Rational) -> Self {
        if v.is_positive() {
            Orientation::CounterClockwise
        } else if v.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

/// Integer coordinate small enough that differences and their products fit
/// in `i128`.
fn small_int(v: &Rational) -> Option<i128> {
    const LIMIT: i64 = 1 << 62;
    if !v.denom().is_one() {
        return None;
    }
    v.numer()
        .to_i64()
        .filter(|n| (-LIMIT..LIMIT).contains(n))
        .map(i128::from)
}

/// Sign of `(q - p) × (r - p)`.
pub fn orient(p: &Point, q: &Point, r: &Point) -> Orientation {
    // integer scenes are the common case; skip the allocation there
    let ints = [&p.x, &p.y, &q.x, &q.y, &r.x, &r.y].map(small_int);
    if let [Some(px), Some(py), Some(qx), Some(qy), Some(rx), Some(ry)] = ints {
        let v = (qx - px) * (ry - py) - (qy - py) * (rx - px);
        return match v.signum() {
            1 => Orientation::CounterClockwise,
            -1 => Orientation::Clockwise,
            _ => Orientation::Collinear,
        };
    }
    let (ax, ay) = q.sub(p);
    let (bx, by) = r.sub(p);
    Orientation::from_sign(&cross(&ax, &ay, &bx, &by))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Result<Self, GeomError> {
        if p == q {
            return Err(GeomError::DegenerateSegment(p));
        }
        Ok(Segment { p, q })
    }

    pub fn from_ints(p: (i64, i64), q: (i64, i64)) -> Result<Self, GeomError> {
        Segment::new(Point::from_ints(p.0, p.1), Point::from_ints(q.0, q.1))
    }

    /// Parameter `t` of the projection of `w` onto the carrier line, with
    /// `p` at 0 and `q` at 1.
    pub fn param_of(&self, w: &Point) -> Rational {
        let (dx, dy) = self.q.sub(&self.p);
        let (wx, wy) = w.sub(&self.p);
        dot(&wx, &wy, &dx, &dy) / dot(&dx, &dy, &dx, &dy)
    }

    pub fn point_at(&self, t: &Rational) -> Point {
        self.p.lerp(&self.q, t)
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}-{:?}", self.p, self.q)
    }
}

/// True iff `w` lies strictly between `a` and `b` on segment `ab`.
pub fn on_open_segment(w: &Point, a: &Point, b: &Point) -> bool {
    if orient(a, b, w) != Orientation::Collinear || w == a || w == b {
        return false;
    }
    within_box(w, a, b)
}

/// True iff `w` lies on the closed segment `ab`.
pub fn on_closed_segment(w: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, w) == Orientation::Collinear && within_box(w, a, b)
}

fn within_box(w: &Point, a: &Point, b: &Point) -> bool {
    let (lx, hx) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ly, hy) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    &w.x >= lx && &w.x <= hx && &w.y >= ly && &w.y <= hy
}

/// Collinear segments: length of the overlap of `s2` with `s1`, measured in
/// `s1`'s parameter.
fn collinear_overlap(s1: &Segment, s2: &Segment) -> Rational {
    let t0 = s1.param_of(&s2.p);
    let t1 = s1.param_of(&s2.q);
    let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let lo = lo.max(Rational::zero());
    let hi = hi.min(rat(1));
    hi - lo
}

/// Relative interiors cross at a single point, or the segments overlap
/// collinearly with positive length. Touching at an endpoint (including
/// T-junctions) is not a proper intersection.
pub fn segments_properly_intersect(s1: &Segment, s2: &Segment) -> bool {
    let o1 = orient(&s1.p, &s1.q, &s2.p);
    let o2 = orient(&s1.p, &s1.q, &s2.q);
    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        return collinear_overlap(s1, s2).is_positive();
    }
    let o3 = orient(&s2.p, &s2.q, &s1.p);
    let o4 = orient(&s2.p, &s2.q, &s1.q);
    strictly_opposite(o1, o2) && strictly_opposite(o3, o4)
}

/// Closed segments share at least one point.
pub fn segments_touch(s1: &Segment, s2: &Segment) -> bool {
    let o1 = orient(&s1.p, &s1.q, &s2.p);
    let o2 = orient(&s1.p, &s1.q, &s2.q);
    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        return !collinear_overlap(s1, s2).is_negative();
    }
    let o3 = orient(&s2.p, &s2.q, &s1.p);
    let o4 = orient(&s2.p, &s2.q, &s1.q);
    o1 != o2 && o3 != o4
        || on_closed_segment(&s2.p, &s1.p, &s1.q)
        || on_closed_segment(&s2.q, &s1.p, &s1.q)
        || on_closed_segment(&s1.p, &s2.p, &s2.q)
        || on_closed_segment(&s1.q, &s2.p, &s2.q)
}

fn strictly_opposite(a: Orientation, b: Orientation) -> bool {
    matches!(
        (a, b),
        (Orientation::CounterClockwise, Orientation::Clockwise)
            | (Orientation::Clockwise, Orientation::CounterClockwise)
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Exact point location against a simple polygon of either orientation.
pub fn locate_in_polygon(w: &Point, poly: &[Point]) -> Location {
    let n = poly.len();
    let mut winding = 0i64;
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        if on_closed_segment(w, a, b) {
            return Location::Boundary;
        }
        if a.y <= w.y {
            if b.y > w.y && orient(a, b, w) == Orientation::CounterClockwise {
                winding += 1;
            }
        } else if b.y <= w.y && orient(a, b, w) == Orientation::Clockwise {
            winding -= 1;
        }
    }
    if winding != 0 {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// Twice the signed area; positive for counterclockwise boundaries.
pub fn signed_area2(poly: &[Point]) -> Rational {
    let n = poly.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        acc += cross(&a.x, &a.y, &b.x, &b.y);
    }
    acc
}

/// True iff the relative interior of `s` meets the open interior of `poly`
/// or crosses one of its edges. Running along the boundary and touching
/// corners is allowed.
pub fn segment_properly_intersects_polygon(s: &Segment, poly: &[Point]) -> bool {
    let n = poly.len();
    let mut cuts = vec![Rational::zero(), rat(1)];
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        let o1 = orient(&s.p, &s.q, a);
        let o2 = orient(&s.p, &s.q, b);
        if strictly_opposite(o1, o2)
            && strictly_opposite(orient(a, b, &s.p), orient(a, b, &s.q))
        {
            return true;
        }
        if on_open_segment(a, &s.p, &s.q) {
            cuts.push(s.param_of(a));
        }
    }
    cuts.sort();
    cuts.dedup();
    // Between consecutive cuts the open sub-segment never meets the boundary
    // except by running along it, so one interior probe decides each piece.
    let half = rat_frac(1, 2);
    cuts.windows(2).any(|w| {
        let mid = (&w[0] + &w[1]) * &half;
        locate_in_polygon(&s.point_at(&mid), poly) == Location::Inside
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::from_ints(a, b).unwrap()
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orient(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orient(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn degenerate_segment_rejected() {
        assert!(Segment::from_ints((1, 1), (1, 1)).is_err());
    }

    #[test]
    fn proper_intersection_examples() {
        assert!(segments_properly_intersect(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))));
        assert!(!segments_properly_intersect(&seg((0, 0), (1, 0)), &seg((1, 0), (2, 1))));
        assert!(segments_properly_intersect(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))));
        // collinear, touching only at an endpoint
        assert!(!segments_properly_intersect(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0))));
        // T-junction
        assert!(!segments_properly_intersect(&seg((0, 0), (2, 0)), &seg((1, 0), (1, 5))));
        // disjoint collinear
        assert!(!segments_properly_intersect(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 0))));
    }

    /// Independent interval-overlap oracle for collinear pairs on the x axis.
    fn interval_overlap(a: (i64, i64), b: (i64, i64)) -> bool {
        let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
        let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
        a1.min(b1) > a0.max(b0)
    }

    #[test]
    fn collinear_overlap_matches_interval_oracle() {
        for a0 in -3..=3 {
            for a1 in -3..=3 {
                for b0 in -3..=3 {
                    for b1 in -3..=3 {
                        if a0 == a1 || b0 == b1 {
                            continue;
                        }
                        let got = segments_properly_intersect(
                            &seg((a0, 0), (a1, 0)),
                            &seg((b0, 0), (b1, 0)),
                        );
                        assert_eq!(got, interval_overlap((a0, a1), (b0, b1)), "{a0} {a1} {b0} {b1}");
                    }
                }
            }
        }
    }

    fn triangle() -> Vec<Point> {
        vec![p(0, 0), p(2, 0), p(1, 2)]
    }

    #[test]
    fn polygon_intersection_examples() {
        let tri = triangle();
        let crossing = seg((-1, 1), (3, 1));
        assert!(segment_properly_intersects_polygon(&crossing, &tri));
        // midpoint oracle: (1,1) is strictly inside
        assert_eq!(locate_in_polygon(&p(1, 1), &tri), Location::Inside);
        assert!(!segment_properly_intersects_polygon(&seg((0, 0), (2, 0)), &tri));
        assert!(!segment_properly_intersects_polygon(&seg((-5, -5), (-4, -5)), &tri));
    }

    #[test]
    fn polygon_chords_and_touches() {
        // square, diagonal chord goes through the interior
        let sq = vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4)];
        assert!(segment_properly_intersects_polygon(&seg((0, 0), (4, 4)), &sq));
        // touching a corner from outside
        assert!(!segment_properly_intersects_polygon(&seg((-1, 3), (1, 5)), &sq));
        // passing exactly through two corners, outside elsewhere: along the
        // diagonal line but outside the square
        assert!(!segment_properly_intersects_polygon(&seg((5, 5), (6, 6)), &sq));
        // through a corner into the interior
        assert!(segment_properly_intersects_polygon(&seg((-1, -1), (2, 2)), &sq));
        // sub-segment of an edge
        assert!(!segment_properly_intersects_polygon(&seg((1, 0), (3, 0)), &sq));
        // extending along an edge beyond a corner
        assert!(!segment_properly_intersects_polygon(&seg((-2, 0), (6, 0)), &sq));
        // endpoint strictly inside
        assert!(segment_properly_intersects_polygon(&seg((2, 2), (9, 2)), &sq));
        // reflex notch: L-shape, segment across the notch stays outside
        let l = vec![p(0, 0), p(4, 0), p(4, 2), p(2, 2), p(2, 4), p(0, 4)];
        assert!(!segment_properly_intersects_polygon(&seg((4, 2), (2, 4)), &l));
        assert!(segment_properly_intersects_polygon(&seg((4, 0), (0, 4)), &l));
    }

    #[test]
    fn clockwise_polygons_behave_the_same() {
        let mut tri = triangle();
        tri.reverse();
        assert!(segment_properly_intersects_polygon(&seg((-1, 1), (3, 1)), &tri));
        assert_eq!(locate_in_polygon(&p(1, 1), &tri), Location::Inside);
    }

    #[test]
    fn exact_scalar_sign_cases() {
        // 2 - √3 > 0, 1 - √3 < 0, -7 + 4√3 < 0 (48 < 49)
        assert_eq!(ExactScalar::new(rat(2), rat(-1)).signum(), Ordering::Greater);
        assert_eq!(ExactScalar::new(rat(1), rat(-1)).signum(), Ordering::Less);
        assert_eq!(ExactScalar::new(rat(-7), rat(4)).signum(), Ordering::Less);
        assert_eq!(ExactScalar::zero().signum(), Ordering::Equal);
        let s = ExactScalar::sqrt3();
        assert_eq!(&s * &s, ExactScalar::from_rational(rat(3)));
    }

    fn small_rat() -> impl Strategy<Value = (i64, i64)> {
        (-1000i64..1000, 1i64..50)
    }

    proptest! {
        #[test]
        fn orient_antisymmetric(a in (-50i64..50, -50i64..50), b in (-50i64..50, -50i64..50), c in (-50i64..50, -50i64..50)) {
            let (a, b, c) = (p(a.0, a.1), p(b.0, b.1), p(c.0, c.1));
            prop_assert_eq!(orient(&a, &b, &c), orient(&a, &c, &b).reversed());
        }

        #[test]
        fn orient_integer_path_matches_rational(
            a in (any::<i64>(), any::<i64>()),
            b in (any::<i64>(), any::<i64>()),
            c in (any::<i64>(), any::<i64>()),
            shift in 0u32..64,
        ) {
            // large magnitudes exercise both sides of the fast-path limit;
            // halving every coordinate forces the rational path
            let f = |v: i64| v >> shift;
            let (a, b, c) = (p(f(a.0), f(a.1)), p(f(b.0), f(b.1)), p(f(c.0), f(c.1)));
            let half = rat_frac(1, 2);
            let h = |q: &Point| Point::new(&q.x * &half, &q.y * &half);
            let (ax, ay) = b.sub(&a);
            let (bx, by) = c.sub(&a);
            let exact = Orientation::from_sign(&cross(&ax, &ay, &bx, &by));
            prop_assert_eq!(orient(&a, &b, &c), exact);
            prop_assert_eq!(orient(&h(&a), &h(&b), &h(&c)), exact);
        }

        #[test]
        fn proper_intersection_symmetric(a in (-9i64..9, -9i64..9), b in (-9i64..9, -9i64..9), c in (-9i64..9, -9i64..9), d in (-9i64..9, -9i64..9)) {
            prop_assume!(a != b && c != d);
            let s1 = seg(a, b);
            let s2 = seg(c, d);
            prop_assert_eq!(segments_properly_intersect(&s1, &s2), segments_properly_intersect(&s2, &s1));
        }

        #[test]
        fn exact_scalar_sign_agrees_with_float((an, ad) in small_rat(), (bn, bd) in small_rat()) {
            let v = ExactScalar::new(rat_frac(an, ad), rat_frac(bn, bd));
            let f = v.to_f64();
            prop_assume!(f.abs() > 1e-6);
            let expect = if f > 0.0 { Ordering::Greater } else { Ordering::Less };
            prop_assert_eq!(v.signum(), expect);
        }

        #[test]
        fn exact_scalar_ring_ops_match_float((an, ad) in small_rat(), (bn, bd) in small_rat(), (cn, cd) in small_rat(), (dn, dd) in small_rat()) {
            let x = ExactScalar::new(rat_frac(an, ad), rat_frac(bn, bd));
            let y = ExactScalar::new(rat_frac(cn, cd), rat_frac(dn, dd));
            let (fx, fy) = (x.to_f64(), y.to_f64());
            prop_assert!(((&x + &y).to_f64() - (fx + fy)).abs() < 1e-6 * (1.0 + fx.abs() + fy.abs()));
            prop_assert!(((&x - &y).to_f64() - (fx - fy)).abs() < 1e-6 * (1.0 + fx.abs() + fy.abs()));
            prop_assert!(((&x * &y).to_f64() - fx * fy).abs() < 1e-6 * (1.0 + (fx * fy).abs()));
        }
    }
}
