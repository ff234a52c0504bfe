//! Builds a complete list of order types with small integer coordinates.
//!
//! Every order type of `n` points is reached by adding one point to a
//! realization of an order type of `n - 1` points. For a fixed base
//! realization, all extensions inside the coordinate grid are found by
//! scanning the grid and grouping grid points by the cell of the line
//! arrangement spanned by the base. Each newly found `n`-point set feeds its
//! `n` sub-realizations back as further bases, and the closure runs until the
//! known count is reached or no base is left.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{canonical_signature, known_order_type_count, OrderTypeSignature};
use crate::geometry::{is_general_position, Point, PointSet};

/// Reported after every extension round.
#[derive(Clone, Debug)]
pub struct EnumerationProgress {
    pub n: usize,
    pub found: usize,
    pub target: Option<usize>,
    pub bases_extended: usize,
    pub bases_pending: usize,
}

const ROUND: usize = 512;
const RANDOM_SEEDS: u64 = 20_000;

/// One representative per cell of the arrangement of lines through pairs of
/// `base`, restricted to grid points off every line.
fn extension_cells(base: &[Point], grid: i64) -> Vec<Point> {
    let m = base.len();
    let mut lines = Vec::with_capacity(m * (m - 1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (base[i], base[j]);
            // orient(a, b, q) = dx * (q.y - a.y) - dy * (q.x - a.x)
            let (dx, dy) = (b.x - a.x, b.y - a.y);
            lines.push((-dy, dx, dy * a.x - dx * a.y));
        }
    }
    let mut cells: HashMap<u64, Point> = HashMap::new();
    for x in 0..grid {
        'q: for y in 0..grid {
            let mut key = 0u64;
            for (bit, &(cx, cy, c0)) in lines.iter().enumerate() {
                let v = cx * x + cy * y + c0;
                if v == 0 {
                    continue 'q;
                }
                if v > 0 {
                    key |= 1 << bit;
                }
            }
            cells.entry(key).or_insert(Point::new(x, y));
        }
    }
    let mut reps: Vec<Point> = cells.into_values().collect();
    reps.sort_unstable();
    reps
}

fn extend(base: &[Point], grid: i64) -> Vec<(OrderTypeSignature, PointSet)> {
    extension_cells(base, grid)
        .into_iter()
        .map(|q| {
            let mut pts = base.to_vec();
            pts.push(q);
            let set = PointSet::new(pts).expect("cell points avoid every spanned line");
            (canonical_signature(&set, true), set)
        })
        .collect()
}

fn normalized(points: &[Point]) -> Vec<Point> {
    let mut v = points.to_vec();
    v.sort_unstable();
    v
}

/// Order types of `3..=max_n` points with mirror images identified, each
/// realized with coordinates in `[0, grid)`. Entry `k` of the result holds the
/// sets of `k + 3` points, sorted by signature.
pub fn enumerate_order_types(
    max_n: usize,
    grid: i64,
    seed: u64,
    mut progress: impl FnMut(&EnumerationProgress),
) -> Vec<Vec<PointSet>> {
    assert!((3..=9).contains(&max_n), "enumeration supports up to 9 points");
    assert!((8..=1 << 12).contains(&grid));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let triangle = vec![Point::new(0, 0), Point::new(grid - 1, 0), Point::new(0, grid - 1)];
    let mut levels: Vec<Vec<PointSet>> = vec![vec![PointSet::new(triangle).expect("triangle")]];

    for n in 4..=max_n {
        let target = known_order_type_count(n);
        let mut found: HashMap<OrderTypeSignature, PointSet> = HashMap::new();
        let mut seen: HashSet<Vec<Point>> = HashSet::new();
        let mut queue: Vec<Vec<Point>> = Vec::new();

        let admit = |found: &mut HashMap<OrderTypeSignature, PointSet>,
                         queue: &mut Vec<Vec<Point>>,
                         seen: &mut HashSet<Vec<Point>>,
                         sig: OrderTypeSignature,
                         set: PointSet| {
            if found.contains_key(&sig) {
                return;
            }
            for skip in 0..n {
                let sub: Vec<Point> = (0..n).filter(|&i| i != skip).map(|i| set.point(i)).collect();
                let key = normalized(&sub);
                if seen.insert(key.clone()) {
                    queue.push(key);
                }
            }
            found.insert(sig, set);
        };

        for base in &levels[n - 4] {
            let key = normalized(base.points());
            if seen.insert(key.clone()) {
                queue.push(key);
            }
        }
        for _ in 0..RANDOM_SEEDS {
            let pts: Vec<Point> =
                (0..n).map(|_| Point::new(rng.gen_range(0..grid), rng.gen_range(0..grid))).collect();
            if is_general_position(&pts) {
                let set = PointSet::new(pts).expect("validated");
                let sig = canonical_signature(&set, true);
                admit(&mut found, &mut queue, &mut seen, sig, set);
            }
        }

        let mut extended = 0;
        while !queue.is_empty() && target.is_none_or(|t| found.len() < t) {
            let take = queue.len().min(ROUND);
            let round: Vec<Vec<Point>> = queue.drain(..take).collect();
            let results: Vec<Vec<(OrderTypeSignature, PointSet)>> =
                round.par_iter().map(|b| extend(b, grid)).collect();
            extended += round.len();
            for (sig, set) in results.into_iter().flatten() {
                admit(&mut found, &mut queue, &mut seen, sig, set);
            }
            progress(&EnumerationProgress {
                n,
                found: found.len(),
                target,
                bases_extended: extended,
                bases_pending: queue.len(),
            });
        }

        let mut sorted: Vec<(OrderTypeSignature, PointSet)> = found.into_iter().collect();
        sorted.sort_by(|a, b| a.0.cmp(&b.0));
        levels.push(sorted.into_iter().map(|(_, s)| s).collect());
    }
    levels
}
