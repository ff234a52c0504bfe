//! Order types: chirotopes, canonical signatures and equivalence.
//!
//! Two point sets have the same order type when some bijection between them
//! preserves the orientation of every ordered triple. The canonical signature
//! of a set is the lexicographically smallest encoding of its chirotope over
//! all relabellings, optionally also over the mirror image.
//!
//! The encoding lists the triples `i < j < k` in lexicographic order, one bit
//! per triple, set when the triple turns clockwise, packed most significant
//! bit first. Because counterclockwise sorts first, a minimizing labelling
//! must make every triple through point `0` counterclockwise: point `0` is a
//! hull vertex and the remaining points follow in counterclockwise radial
//! order around it. [`canonical_signature`] only scores those `h` labellings
//! (`2h` with mirrors), while [`canonical_signature_exhaustive`] scores all
//! `n!` of them; both return identical bytes.

mod census;
mod database;
mod generate;

pub use census::{census, Census, CensusEntry};
pub use database::{
    database_file_name, expected_record_count, ingest_database, read_database, write_database,
    DatabaseReader,
};
pub use generate::{enumerate_order_types, EnumerationProgress};

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;

use crate::error::Result;
use crate::geometry::{Orientation, PointSet};

/// Number of order types of `n` points with mirror images identified, for
/// `2 <= n <= 8`.
pub fn known_order_type_count(n: usize) -> Option<usize> {
    const COUNTS: [usize; 7] = [1, 1, 2, 3, 16, 135, 3315];
    n.checked_sub(2).and_then(|i| COUNTS.get(i).copied())
}

/// The orientation of every ordered triple of a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chirotope {
    n: usize,
    signs: Vec<i8>,
}

impl Chirotope {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Sign of the ordered triple; `0` when two indices coincide.
    pub fn sign(&self, i: usize, j: usize, k: usize) -> i8 {
        self.signs[(i * self.n + j) * self.n + k]
    }

    /// The chirotope of the mirror image.
    pub fn negated(&self) -> Chirotope {
        Chirotope { n: self.n, signs: self.signs.iter().map(|s| -s).collect() }
    }
}

/// Orientation of every ordered triple. A [`PointSet`] is always in general
/// position, so every triple of distinct indices gets a nonzero sign.
pub fn chirotope(points: &PointSet) -> Chirotope {
    let n = points.len();
    let mut signs = vec![0i8; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k && i != k {
                    signs[(i * n + j) * n + k] = points.orient(i, j, k).as_i8();
                }
            }
        }
    }
    Chirotope { n, signs }
}

/// Canonical form of an order type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderTypeSignature {
    n: usize,
    bytes: Vec<u8>,
}

impl OrderTypeSignature {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    /// Lowercase hex of the packed bits, prefixed by `n` and a colon.
    pub fn to_hex(&self) -> String {
        let mut s = format!("{}:", self.n);
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Debug for OrderTypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderTypeSignature({})", self.to_hex())
    }
}

impl fmt::Display for OrderTypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Bit-packs the chirotope under `labelling` (new index `a` is old point
/// `labelling[a]`), flipping every sign when `mirror` is set.
fn encode(points: &PointSet, labelling: &[usize], mirror: bool) -> Vec<u8> {
    let n = labelling.len();
    let triples = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    let mut bytes = vec![0u8; triples.div_ceil(8)];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let cw = points.orient(labelling[i], labelling[j], labelling[k])
                    == Orientation::Clockwise;
                if cw != mirror {
                    bytes[bit / 8] |= 0x80 >> (bit % 8);
                }
                bit += 1;
            }
        }
    }
    bytes
}

/// A canonical labelling: the signature plus the relabelling achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub signature: OrderTypeSignature,
    /// New index `a` holds old point `labelling[a]`.
    pub labelling: Vec<usize>,
    /// The minimum was attained on the mirror image.
    pub mirrored: bool,
}

/// Radial labellings from each hull vertex; `clockwise` sweeps the other way.
fn radial_labellings(points: &PointSet, clockwise: bool) -> impl Iterator<Item = Vec<usize>> + '_ {
    let n = points.len();
    let turn = if clockwise { Orientation::Clockwise } else { Orientation::CounterClockwise };
    points.hull_indices().into_iter().map(move |h| {
        let mut rest: Vec<usize> = (0..n).filter(|&i| i != h).collect();
        // All other points lie in an open half-plane at a hull vertex, so
        // the turn direction is a strict total order on them.
        rest.sort_by(|&a, &b| {
            if a == b {
                Ordering::Equal
            } else if points.orient(h, a, b) == turn {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        });
        let mut lab = Vec::with_capacity(n);
        lab.push(h);
        lab.extend(rest);
        lab
    })
}

/// Canonical form scoring only the hull-radial labellings.
pub fn canonical_form(points: &PointSet, include_reflection: bool) -> CanonicalForm {
    let n = points.len();
    if n < 3 {
        return CanonicalForm {
            signature: OrderTypeSignature { n, bytes: Vec::new() },
            labelling: (0..n).collect(),
            mirrored: false,
        };
    }
    let mut best: Option<CanonicalForm> = None;
    let mirrors: &[bool] = if include_reflection { &[false, true] } else { &[false] };
    for &mirror in mirrors {
        for lab in radial_labellings(points, mirror) {
            let bytes = encode(points, &lab, mirror);
            if best.as_ref().is_none_or(|b| bytes < b.signature.bytes) {
                best = Some(CanonicalForm {
                    signature: OrderTypeSignature { n, bytes },
                    labelling: lab,
                    mirrored: mirror,
                });
            }
        }
    }
    best.expect("a hull has at least three vertices")
}

pub fn canonical_signature(points: &PointSet, include_reflection: bool) -> OrderTypeSignature {
    canonical_form(points, include_reflection).signature
}

/// Minimum over all `n!` relabellings. Exponential; meant to cross-check
/// [`canonical_signature`] for small `n`.
pub fn canonical_signature_exhaustive(
    points: &PointSet,
    include_reflection: bool,
) -> OrderTypeSignature {
    let n = points.len();
    let mirrors: &[bool] = if include_reflection { &[false, true] } else { &[false] };
    let bytes = (0..n)
        .permutations(n)
        .flat_map(|lab| mirrors.iter().map(move |&m| encode(points, &lab, m)))
        .min()
        .unwrap_or_default();
    OrderTypeSignature { n, bytes }
}

/// True iff an orientation-preserving bijection maps `p` onto `q`.
/// Mirror images count as different unless the set is achiral.
pub fn same_order_type(p: &PointSet, q: &PointSet) -> bool {
    p.len() == q.len() && canonical_signature(p, false) == canonical_signature(q, false)
}

/// An orientation-preserving bijection `gamma` (point `i` of `p` to point
/// `gamma[i]` of `q`), if one exists.
pub fn order_type_isomorphism(p: &PointSet, q: &PointSet) -> Option<Vec<usize>> {
    if p.len() != q.len() {
        return None;
    }
    let cp = canonical_form(p, false);
    let cq = canonical_form(q, false);
    if cp.signature != cq.signature {
        return None;
    }
    let mut gamma = vec![0; p.len()];
    for (a, &i) in cp.labelling.iter().enumerate() {
        gamma[i] = cq.labelling[a];
    }
    Some(gamma)
}

/// Reads a point set from text: the count `n` on the first line, then `n`
/// lines `x y`. Lines starting with `#` and blank lines are skipped.
pub fn parse_point_set(text: &str) -> Result<PointSet> {
    use crate::error::Error;
    use crate::geometry::Point;

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing point count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::parse(hline, format!("expected a point count, got `{header}`")))?;
    let mut points = Vec::with_capacity(n);
    for (line, body) in lines {
        let coords: Vec<i64> = body
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::parse(line, format!("bad coordinate `{t}`"))))
            .collect::<Result<_>>()?;
        let [x, y] = coords[..] else {
            return Err(Error::parse(line, "expected `x y`"));
        };
        points.push(Point::new(x, y));
    }
    if points.len() != n {
        return Err(Error::parse(hline, format!("announced {n} points, found {}", points.len())));
    }
    PointSet::new(points)
}

/// Inverse of [`parse_point_set`].
pub fn format_point_set(points: &PointSet) -> String {
    let mut out = format!("{}\n", points.len());
    for p in points.points() {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn set(coords: &[(i64, i64)]) -> PointSet {
        PointSet::from_coords(coords).unwrap()
    }

    fn hexagon() -> PointSet {
        set(&[(0, 0), (2, -1), (4, 0), (4, 2), (2, 3), (0, 2)])
    }

    /// Orientation-preserving bijection search over all n! maps.
    fn bijection_exists(p: &PointSet, q: &PointSet) -> bool {
        let n = p.len();
        n == q.len()
            && (0..n).permutations(n).any(|g| {
                (0..n).tuple_combinations().all(|(i, j, k)| {
                    p.orient(i, j, k) == q.orient(g[i], g[j], g[k])
                })
            })
    }

    #[test]
    fn chirotope_examples() {
        let tri = set(&[(0, 0), (1, 0), (0, 1)]);
        let c = chirotope(&tri);
        assert_eq!(c.sign(0, 1, 2), 1);
        assert_eq!(c.sign(1, 0, 2), -1);
        assert_eq!(c.sign(0, 0, 2), 0);
        assert_eq!(chirotope(&tri.mirrored()), c.negated());

        let h = chirotope(&hexagon());
        for (i, j, k) in (0..6).tuple_combinations() {
            assert_eq!(h.sign(i, j, k), -h.sign(j, i, k));
            assert_eq!(h.sign(i, j, k), h.sign(j, k, i));
        }
    }

    #[test]
    fn hexagon_versus_square_with_two_inside() {
        let other = set(&[(0, 0), (10, 0), (10, 10), (0, 10), (3, 4), (6, 7)]);
        assert!(!bijection_exists(&hexagon(), &other));
        assert_ne!(canonical_signature(&hexagon(), true), canonical_signature(&other, true));
        assert!(!same_order_type(&hexagon(), &other));
    }

    #[test]
    fn two_convex_hexagons_agree() {
        let other = set(&[(10, 0), (30, 1), (41, 20), (33, 42), (12, 40), (0, 19)]);
        assert!(bijection_exists(&hexagon(), &other));
        assert_eq!(canonical_signature(&hexagon(), true), canonical_signature(&other, true));
        assert!(same_order_type(&hexagon(), &other));
    }

    #[test]
    fn translation_and_scaling_keep_order_type() {
        let p = set(&[(0, 0), (7, 1), (3, 2), (5, 9), (1, 6)]);
        let q = PointSet::from_coords(
            &p.points().iter().map(|pt| (3 * pt.x + 11, 3 * pt.y - 4)).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(same_order_type(&p, &q));
        let g = order_type_isomorphism(&p, &q).unwrap();
        for (i, j, k) in (0..5).tuple_combinations() {
            assert_eq!(p.orient(i, j, k), q.orient(g[i], g[j], g[k]));
        }
    }

    #[test]
    fn mirror_images() {
        // Achiral: the convex hexagon is its own mirror image.
        let h = hexagon();
        assert!(bijection_exists(&h, &h.mirrored()));
        assert!(same_order_type(&h, &h.mirrored()));

        // Chiral: a triangle with three interior points arranged like a pinwheel.
        let chiral = set(&[(0, 0), (100, 0), (50, 90), (52, 20), (68, 45), (33, 40)]);
        let m = chiral.mirrored();
        let oracle = bijection_exists(&chiral, &m);
        assert_eq!(same_order_type(&chiral, &m), oracle);
        assert_eq!(canonical_signature(&chiral, true), canonical_signature(&m, true));
    }

    #[test]
    fn size_mismatch_is_not_equivalent() {
        let tri = set(&[(0, 0), (1, 0), (0, 1)]);
        assert!(!same_order_type(&tri, &hexagon()));
        assert!(order_type_isomorphism(&tri, &hexagon()).is_none());
    }

    #[test]
    fn tiny_sets() {
        let two = set(&[(0, 0), (5, 5)]);
        assert_eq!(canonical_signature(&two, true).as_bytes(), &[] as &[u8]);
        assert_eq!(canonical_signature_exhaustive(&two, true), canonical_signature(&two, true));
    }

    #[test]
    fn point_set_text_format() {
        let text = "# a triangle\n3\n0 0\n4 0\n# apex\n1 3\n";
        let p = parse_point_set(text).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(parse_point_set(&format_point_set(&p)).unwrap(), p);
        assert!(matches!(parse_point_set("3\n0 0\n1 1\n2 2\n"), Err(Error::Collinear { .. })));
        assert!(matches!(parse_point_set("3\n0 0\n1 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_point_set("2\n0 0\n1 x\n"), Err(Error::Parse { line: 3, .. })));
    }

    fn random_set(n: usize, seed: u64) -> PointSet {
        use rand::Rng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        loop {
            let pts: Vec<(i64, i64)> = (0..n).map(|_| (rng.gen_range(0..40), rng.gen_range(0..40))).collect();
            if let Ok(p) = PointSet::from_coords(&pts) {
                return p;
            }
        }
    }

    #[test]
    fn fast_and_exhaustive_forms_agree() {
        for seed in 0..60 {
            let n = 3 + (seed as usize % 5);
            let p = random_set(n, seed);
            for refl in [false, true] {
                assert_eq!(canonical_signature(&p, refl), canonical_signature_exhaustive(&p, refl));
            }
        }
    }

    #[test]
    fn exhaustive_agreement_at_eight_points() {
        for seed in 0..3 {
            let p = random_set(8, 1000 + seed);
            assert_eq!(canonical_signature(&p, true), canonical_signature_exhaustive(&p, true));
        }
    }

    #[test]
    fn equivalence_matches_bijection_oracle() {
        let mut pairs = 0;
        for seed in 0..200u64 {
            let n = 4 + (seed as usize % 4);
            let p = random_set(n, 2 * seed);
            let q = random_set(n, 2 * seed + 1);
            let same = same_order_type(&p, &q);
            assert_eq!(same, bijection_exists(&p, &q), "seed {seed}");
            if same {
                pairs += 1;
            }
        }
        assert!(pairs > 10, "too few equivalent pairs to be meaningful: {pairs}");
    }

    proptest! {
        #[test]
        fn signature_ignores_labelling(seed in 0u64..10_000, shuffle in 0u64..1000) {
            let n = 3 + (seed as usize % 6);
            let p = random_set(n, seed);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(shuffle));
            let q = p.permuted(&perm);
            prop_assert_eq!(canonical_signature(&p, false), canonical_signature(&q, false));
            prop_assert_eq!(canonical_signature(&p, true), canonical_signature(&q, true));
            prop_assert!(same_order_type(&p, &q));
        }
    }
}
