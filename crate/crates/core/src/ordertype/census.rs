//! Random sampling of order types.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{canonical_signature, OrderTypeSignature};
use crate::geometry::{is_general_position, Point, PointSet};

const CHUNK: u64 = 1 << 14;

/// First sighting of an order type.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    /// Zero-based index of the trial that produced `representative`.
    pub trial: u64,
    pub representative: PointSet,
}

#[derive(Clone, Debug)]
pub struct Census {
    pub n: usize,
    pub trials: u64,
    pub include_reflection: bool,
    pub entries: BTreeMap<OrderTypeSignature, CensusEntry>,
}

impl Census {
    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    /// Number of distinct signatures seen within the first `trials` trials.
    pub fn distinct_after(&self, trials: u64) -> usize {
        self.entries.values().filter(|e| e.trial < trials).count()
    }

    /// `(trials, distinct)` at powers of ten, ending with the full run.
    pub fn saturation_curve(&self) -> Vec<(u64, usize)> {
        let mut curve = Vec::new();
        let mut t = 1;
        while t < self.trials {
            curve.push((t, self.distinct_after(t)));
            t *= 10;
        }
        curve.push((self.trials, self.distinct()));
        curve
    }

    /// Sampling trial index at which the last new signature appeared.
    pub fn last_discovery(&self) -> Option<u64> {
        self.entries.values().map(|e| e.trial).max()
    }
}

fn sample(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Point> {
    (0..n).map(|_| Point::new(rng.gen_range(0..range), rng.gen_range(0..range))).collect()
}

/// Draws `trials` sets of `n` points with coordinates uniform in
/// `[0, coordinate_range)`, discards degenerate ones, and records the first
/// representative of every signature. The result depends only on the
/// arguments, not on the number of worker threads.
pub fn census(
    n: usize,
    trials: u64,
    seed: u64,
    coordinate_range: i64,
    include_reflection: bool,
) -> Census {
    assert!((3..=10).contains(&n), "census supports 3 <= n <= 10");
    assert!((2..=crate::geometry::COORD_LIMIT).contains(&coordinate_range));

    let chunks = trials.div_ceil(CHUNK);
    let entries = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let mut found = BTreeMap::new();
            let end = ((c + 1) * CHUNK).min(trials);
            for trial in c * CHUNK..end {
                let pts = sample(&mut rng, n, coordinate_range);
                if !is_general_position(&pts) {
                    continue;
                }
                let set = PointSet::new(pts).expect("validated above");
                found
                    .entry(canonical_signature(&set, include_reflection))
                    .or_insert(CensusEntry { trial, representative: set });
            }
            found
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (sig, e) in b {
                match a.get(&sig) {
                    Some(old) if old.trial <= e.trial => {}
                    _ => {
                        a.insert(sig, e);
                    }
                }
            }
            a
        });
    Census { n, trials, include_reflection, entries }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordertype::known_order_type_count;

    #[test]
    fn triangles_have_one_type() {
        let c = census(3, 500, 1, 1 << 16, true);
        assert_eq!(c.distinct(), 1);
    }

    #[test]
    fn five_points_saturate() {
        let c = census(5, 20_000, 7, 1 << 16, true);
        assert_eq!(c.distinct(), known_order_type_count(5).unwrap());
    }

    #[test]
    fn deterministic_and_monotone() {
        let a = census(6, 30_000, 42, 1 << 16, true);
        let b = census(6, 30_000, 42, 1 << 16, true);
        assert_eq!(a.entries.keys().collect::<Vec<_>>(), b.entries.keys().collect::<Vec<_>>());
        let curve = a.saturation_curve();
        assert!(curve.windows(2).all(|w| w[0].1 <= w[1].1));
        assert!(a.distinct() <= 16);
        // A shorter run is a prefix of the longer one.
        let short = census(6, 20_000, 42, 1 << 16, true);
        assert_eq!(short.distinct(), a.distinct_after(20_000));
    }

    #[test]
    fn single_trial_partial_census() {
        let c = census(6, 1, 3, 1 << 16, true);
        assert_eq!(c.distinct(), 1);
        assert_eq!(census(6, 0, 3, 1 << 16, true).distinct(), 0);
    }
}
