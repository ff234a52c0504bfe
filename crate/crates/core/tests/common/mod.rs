//! Shared fixtures and independent oracles for the integration suites.

#![allow(dead_code)]

use std::path::PathBuf;

use dlab::geometry::{is_general_position, Point, PointSet, Segment};
use dlab::graph::SimpleGraph;
use dlab::ordertype::{database_file_name, read_database};
use num::{BigInt, BigRational, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn database(n: usize) -> Vec<PointSet> {
    let path = data_dir().join(database_file_name(n));
    read_database(&path, n).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `n` points in general position with coordinates in `[0, range)`.
pub fn random_point_set(rng: &mut ChaCha8Rng, n: usize, range: i64) -> PointSet {
    loop {
        let pts: Vec<Point> = (0..n).map(|_| Point::new(rng.gen_range(0..range), rng.gen_range(0..range))).collect();
        if is_general_position(&pts) {
            return PointSet::new(pts).unwrap();
        }
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Disjointness by solving `a + s (b - a) = c + t (d - c)` over the
/// rationals and testing `s, t` against `[0, 1]`.
pub fn rational_disjoint(s: &Segment, t: &Segment) -> bool {
    let (a, b, c, d) = (s.a(), s.b(), t.a(), t.b());
    let (ux, uy) = (q(b.x) - q(a.x), q(b.y) - q(a.y));
    let (vx, vy) = (q(d.x) - q(c.x), q(d.y) - q(c.y));
    let (wx, wy) = (q(c.x) - q(a.x), q(c.y) - q(a.y));
    let cross = |ax: &BigRational, ay: &BigRational, bx: &BigRational, by: &BigRational| ax * by - ay * bx;
    let unit = |r: &BigRational| r >= &BigRational::zero() && r <= &q(1);

    let denom = cross(&ux, &uy, &vx, &vy);
    if !denom.is_zero() {
        let s_par = cross(&wx, &wy, &vx, &vy) / &denom;
        let t_par = cross(&wx, &wy, &ux, &uy) / &denom;
        return !(unit(&s_par) && unit(&t_par));
    }
    if !cross(&wx, &wy, &ux, &uy).is_zero() {
        return true;
    }
    // Collinear: parameters of c and d along a -> b.
    let len2 = &ux * &ux + &uy * &uy;
    let sc = (&wx * &ux + &wy * &uy) / &len2;
    let (zx, zy) = (q(d.x) - q(a.x), q(d.y) - q(a.y));
    let sd = (&zx * &ux + &zy * &uy) / &len2;
    let (lo, hi) = if sc <= sd { (sc, sd) } else { (sd, sc) };
    hi < BigRational::zero() || lo > q(1)
}

pub fn random_segment(rng: &mut ChaCha8Rng, range: i64) -> Segment {
    loop {
        let mut p = || Point::new(rng.gen_range(-range..range), rng.gen_range(-range..range));
        if let Some(s) = Segment::new(p(), p()) {
            return s;
        }
    }
}
