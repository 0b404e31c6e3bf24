//! Seeded random scenes: integer points in general position plus disjoint
//! convex obstacles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenerateError;
use crate::geom::Point;
use crate::scene::Scene;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorConfig {
    /// Total vertex count, obstacle corners included.
    pub n_points: usize,
    pub n_obstacles: usize,
    /// Corners per obstacle.
    pub obstacle_size: usize,
    /// Coordinates are drawn from `0..=bbox`.
    pub bbox: i64,
    pub seed: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig {
            n_points: 20,
            n_obstacles: 0,
            obstacle_size: 4,
            bbox: 1000,
            seed: 0,
        }
    }
}

const ATTEMPTS: usize = 10_000;

type P = (i64, i64);

fn orient(a: P, b: P, c: P) -> i128 {
    (b.0 - a.0) as i128 * (c.1 - a.1) as i128 - (b.1 - a.1) as i128 * (c.0 - a.0) as i128
}

/// Strictly convex hull, counterclockwise.
fn convex_hull(mut pts: Vec<P>) -> Vec<P> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<P> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<P> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Whether `p` keeps `pts` in general position: no shared y (horizontal is
/// the only cone-boundary slope an integer pair can have) and no collinear
/// triple.
fn fits(pts: &[P], p: P) -> bool {
    if pts.iter().any(|q| q.1 == p.1) {
        return false;
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            if orient(pts[i], pts[j], p) == 0 {
                return false;
            }
        }
    }
    true
}

/// Inside or on the boundary of a counterclockwise convex polygon.
fn in_convex(poly: &[P], p: P) -> bool {
    (0..poly.len()).all(|i| orient(poly[i], poly[(i + 1) % poly.len()], p) >= 0)
}

pub fn generate(config: &GeneratorConfig) -> Result<Scene, GenerateError> {
    if config.n_obstacles > 0 && config.obstacle_size < 3 {
        return Err(GenerateError::ObstacleTooSmall(config.obstacle_size));
    }
    let corners = config.n_obstacles * config.obstacle_size;
    if corners > config.n_points {
        return Err(GenerateError::TooManyObstacleVertices {
            vertices: corners,
            n_points: config.n_points,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut pts: Vec<P> = Vec::with_capacity(config.n_points);
    let mut polys: Vec<Vec<P>> = Vec::new();
    let mut obstacles: Vec<Vec<usize>> = Vec::new();

    // one obstacle per grid cell, cells chosen at random
    let side = (1..).find(|k| k * k >= config.n_obstacles.max(1)).unwrap_or(1) as i64;
    let cell = config.bbox / side;
    let mut cells: Vec<(i64, i64)> = (0..side).flat_map(|i| (0..side).map(move |j| (i, j))).collect();
    cells.shuffle(&mut rng);
    for &(ci, cj) in cells.iter().take(config.n_obstacles) {
        let (cx, cy) = (ci * cell + cell / 2, cj * cell + cell / 2);
        let r = (cell * 3 / 8) as f64;
        let mut placed = false;
        for _ in 0..ATTEMPTS {
            let mut angles: Vec<f64> = (0..config.obstacle_size)
                .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
                .collect();
            angles.sort_by(f64::total_cmp);
            let cand: Vec<P> = angles
                .iter()
                .map(|&a| {
                    let rr = r * rng.gen_range(0.5..1.0);
                    (cx + (rr * a.cos()).round() as i64, cy + (rr * a.sin()).round() as i64)
                })
                .collect();
            let hull = convex_hull(cand);
            if hull.len() != config.obstacle_size {
                continue;
            }
            let mut trial = pts.clone();
            if hull.iter().all(|&p| {
                let ok = fits(&trial, p);
                trial.push(p);
                ok
            }) {
                let base = pts.len();
                obstacles.push((base..base + hull.len()).collect());
                pts = trial;
                polys.push(hull);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(GenerateError::Exhausted {
                what: "obstacle",
                attempts: ATTEMPTS,
            });
        }
    }

    while pts.len() < config.n_points {
        let mut placed = false;
        for _ in 0..ATTEMPTS {
            let p = (rng.gen_range(0..=config.bbox), rng.gen_range(0..=config.bbox));
            if fits(&pts, p) && !polys.iter().any(|poly| in_convex(poly, p)) {
                pts.push(p);
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(GenerateError::Exhausted {
                what: "point",
                attempts: ATTEMPTS,
            });
        }
    }

    let scene = Scene::new(
        pts.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(),
        obstacles,
    );
    debug_assert!(scene.ensure_ready().is_ok());
    Ok(scene)
}

/// The configuration of the `i`-th instance of the standard property set:
/// 10 to 60 points, up to five obstacles of three to six corners.
pub fn standard_instance(i: u64) -> GeneratorConfig {
    let n_points = 10 + ((i * 7) % 51) as usize;
    let obstacle_size = 3 + (i % 4) as usize;
    let n_obstacles = ((i % 6) as usize).min(n_points / obstacle_size);
    GeneratorConfig {
        n_points,
        n_obstacles,
        obstacle_size,
        bbox: 1000,
        seed: i,
    }
}
