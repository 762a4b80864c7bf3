//! Unit-disk instances, their lifted point sets with blocking points, and
//! the checkers that certify the construction.
//!
//! Disk `i` is lifted to `lift(c_i)` on the paraboloid. Every tangent pair
//! `(i, j)` contributes the blocking point `(lift(c_i) + lift(c_j)) / 2`.
//! Indices are 0-based in this API; error values and external files are
//! 1-based.

use std::fmt;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{circle_lift_plane, lift, plane_side, Plane3, Point2, Point3, Sign};
use crate::hull::{bits, check_distinct, is_convex_position, point_in_hull, HullIndex};
use crate::rational::{int, Rational};

/// Centres of unit disks. Validity is checked separately so that files
/// describing broken instances can still be loaded and reported on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiskInstance {
    centers: Vec<Point2>,
}

impl DiskInstance {
    pub fn new(centers: Vec<Point2>) -> Self {
        DiskInstance { centers }
    }

    pub fn from_ints(centers: &[(i64, i64)]) -> Self {
        DiskInstance::new(centers.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect())
    }

    pub fn centers(&self) -> &[Point2] {
        &self.centers
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    /// Interiors pairwise disjoint: every squared centre distance is at least 4.
    /// Reports the first violating pair, 1-based.
    pub fn validate(&self) -> Result<()> {
        let four = int(4);
        for i in 0..self.centers.len() {
            for j in i + 1..self.centers.len() {
                if self.centers[i].squared_distance(&self.centers[j]) < four {
                    return Err(Error::InvalidInstance(i + 1, j + 1));
                }
            }
        }
        Ok(())
    }
}

pub fn validate_instance(d: &DiskInstance) -> bool {
    d.validate().is_ok()
}

/// Two touching disks, stored with `i < j` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TangentPair {
    pub i: usize,
    pub j: usize,
}

impl TangentPair {
    pub fn new(a: usize, b: usize) -> Self {
        TangentPair {
            i: a.min(b),
            j: a.max(b),
        }
    }

    pub fn one_based(&self) -> (usize, usize) {
        (self.i + 1, self.j + 1)
    }
}

impl fmt::Display for TangentPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.i + 1, self.j + 1)
    }
}

fn tangent(a: &Point2, b: &Point2) -> bool {
    a.squared_distance(b) == int(4)
}

/// Pairs at centre distance exactly 2, in lexicographic order.
pub fn tangent_pairs(d: &DiskInstance) -> Result<Vec<TangentPair>> {
    d.validate()?;
    Ok(raw_tangent_pairs(d.centers()))
}

fn raw_tangent_pairs(centers: &[Point2]) -> Vec<TangentPair> {
    let mut out = Vec::new();
    for i in 0..centers.len() {
        for j in i + 1..centers.len() {
            if tangent(&centers[i], &centers[j]) {
                out.push(TangentPair { i, j });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Blocker {
    pub point: Point3,
    pub pair: TangentPair,
}

/// The lifted centres `L` and blocking points `B`; `P = L ⊎ B` is exposed by
/// [`ReductionOutput::points`] with `L` first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReductionOutput {
    lifted: Vec<Point3>,
    blockers: Vec<Blocker>,
}

impl ReductionOutput {
    /// Assemble without validation, e.g. from a file that may be corrupted.
    pub fn from_parts(lifted: Vec<Point3>, blockers: Vec<Blocker>) -> Self {
        ReductionOutput { lifted, blockers }
    }

    pub fn lifted(&self) -> &[Point3] {
        &self.lifted
    }

    pub fn blockers(&self) -> &[Blocker] {
        &self.blockers
    }

    pub fn blocker_points(&self) -> Vec<Point3> {
        self.blockers.iter().map(|b| b.point.clone()).collect()
    }

    pub fn pairs(&self) -> Vec<TangentPair> {
        self.blockers.iter().map(|b| b.pair).collect()
    }

    /// `L` followed by `B`.
    pub fn points(&self) -> Vec<Point3> {
        self.lifted
            .iter()
            .cloned()
            .chain(self.blockers.iter().map(|b| b.point.clone()))
            .collect()
    }

    pub fn disk_count(&self) -> usize {
        self.lifted.len()
    }

    pub fn point_count(&self) -> usize {
        self.lifted.len() + self.blockers.len()
    }

    /// Centres recovered from the lifted points.
    pub fn centers(&self) -> Vec<Point2> {
        self.lifted.iter().map(Point3::xy).collect()
    }

    pub fn blocker_for(&self, pair: TangentPair) -> Option<usize> {
        self.blockers.iter().position(|b| b.pair == pair)
    }
}

pub fn build_reduction(d: &DiskInstance) -> Result<ReductionOutput> {
    let pairs = tangent_pairs(d)?;
    let lifted: Vec<Point3> = d.centers().iter().map(lift).collect();
    let blockers = pairs
        .into_iter()
        .map(|pair| Blocker {
            point: lifted[pair.i].midpoint(&lifted[pair.j]),
            pair,
        })
        .collect();
    let out = ReductionOutput { lifted, blockers };
    check_distinct(&out.points())?;
    Ok(out)
}

/// Plane through `lift(c_i)`, `lift(c_j)` and their blocking point: the lift
/// of the unit circle centred at the midpoint of `c_i c_j`.
pub fn witness_plane(r: &ReductionOutput, pair: TangentPair) -> Result<Plane3> {
    let n = r.disk_count();
    if pair.j >= n {
        return Err(Error::IndexOutOfRange(pair.j + 1));
    }
    let ci = r.lifted[pair.i].xy();
    let cj = r.lifted[pair.j].xy();
    if !tangent(&ci, &cj) {
        return Err(Error::NotTangent(pair.i + 1, pair.j + 1));
    }
    circle_lift_plane(&ci.midpoint(&cj), &int(1))
}

/// The witness plane passes through the pair's two lifted centres and its
/// blocking point, and has every other point of `P` strictly on its
/// positive side.
pub fn verify_witness_plane(r: &ReductionOutput, pair: TangentPair) -> bool {
    let Ok(h) = witness_plane(r, pair) else {
        return false;
    };
    let Some(own) = r.blocker_for(pair) else {
        return false;
    };
    let lifted_ok = r.lifted.iter().enumerate().all(|(k, p)| {
        let want = if k == pair.i || k == pair.j {
            Sign::Zero
        } else {
            Sign::Positive
        };
        plane_side(&h, p) == want
    });
    let blockers_ok = r.blockers.iter().enumerate().all(|(k, b)| {
        let want = if k == own { Sign::Zero } else { Sign::Positive };
        plane_side(&h, &b.point) == want
    });
    lifted_ok && blockers_ok
}

/// For the subset `q` of `L` (0-based indices): every blocking point is in
/// `conv(q)` exactly when both of its lifted endpoints are in `q`.
pub fn check_encoding_lemma(r: &ReductionOutput, q: &[usize]) -> Result<bool> {
    let n = r.disk_count();
    if let Some(&bad) = q.iter().find(|&&i| i >= n) {
        return Err(Error::IndexOutOfRange(bad + 1));
    }
    let chosen: Vec<Point3> = q.iter().map(|&i| r.lifted[i].clone()).collect();
    for b in &r.blockers {
        let inside = !chosen.is_empty() && point_in_hull(&b.point, &chosen)?;
        let both = q.contains(&b.pair.i) && q.contains(&b.pair.j);
        if inside != both {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EncodingReport {
    pub subsets_checked: u64,
    /// `(subset mask over L, blocker index)` for every mismatch.
    pub failures: Vec<(u64, usize)>,
}

impl EncodingReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn encoding_on_masks(r: &ReductionOutput, masks: impl Iterator<Item = u64>) -> Result<EncodingReport> {
    let index = HullIndex::with_queries(&r.lifted, &r.blocker_points())?;
    let mut report = EncodingReport::default();
    for mask in masks {
        report.subsets_checked += 1;
        for (k, b) in r.blockers.iter().enumerate() {
            let both = mask & (1 << b.pair.i) != 0 && mask & (1 << b.pair.j) != 0;
            if index.contains(k, mask) != both {
                report.failures.push((mask, k));
            }
        }
    }
    Ok(report)
}

/// Encoding check over all `2^n` subsets of `L`.
pub fn check_encoding_lemma_exhaustive(r: &ReductionOutput) -> Result<EncodingReport> {
    let n = r.disk_count();
    if n >= 40 {
        return Err(Error::TooManyPoints(n, 39));
    }
    encoding_on_masks(r, 0..1u64 << n)
}

/// Encoding check over `count` seeded random subsets of `L`.
pub fn check_encoding_lemma_sampled(r: &ReductionOutput, count: u64, seed: u64) -> Result<EncodingReport> {
    use rand::Rng;
    let n = r.disk_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    encoding_on_masks(r, (0..count).map(move |_| rng.gen::<u64>() & full))
}

/// Testable form of "L and B are each in convex position and share the hull
/// of L": both sets are in convex position, every lifted point is a vertex of
/// `conv(L ∪ B)`, and every blocking point lies in `conv(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConvexityReport {
    pub lifted_convex: bool,
    pub blockers_convex: bool,
    pub lifted_are_vertices: bool,
    pub blockers_inside_lifted_hull: bool,
}

impl ConvexityReport {
    pub fn passed(&self) -> bool {
        self.lifted_convex && self.blockers_convex && self.lifted_are_vertices && self.blockers_inside_lifted_hull
    }
}

pub fn check_convexity(r: &ReductionOutput) -> Result<ConvexityReport> {
    let all = r.points();
    let lifted_convex = is_convex_position(&r.lifted)?;
    let blockers_convex = is_convex_position(&r.blocker_points())?;
    let mut lifted_are_vertices = true;
    for (i, p) in r.lifted.iter().enumerate() {
        let others: Vec<Point3> = all
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, q)| q.clone())
            .collect();
        if !others.is_empty() && point_in_hull(p, &others)? {
            lifted_are_vertices = false;
            break;
        }
    }
    let mut blockers_inside_lifted_hull = true;
    for b in &r.blockers {
        if !point_in_hull(&b.point, &r.lifted)? {
            blockers_inside_lifted_hull = false;
            break;
        }
    }
    Ok(ConvexityReport {
        lifted_convex,
        blockers_convex,
        lifted_are_vertices,
        blockers_inside_lifted_hull,
    })
}

/// For every `L' ⊆ L` and `B' ⊆ B`: `L' ∪ B'` is in convex position iff no
/// point of `B'` lies in `conv(L')`. Returns the number of mismatching pairs
/// of subsets.
pub fn check_corollary_exhaustive(r: &ReductionOutput) -> Result<u64> {
    let n = r.disk_count();
    let total = r.point_count();
    if total > 24 {
        return Err(Error::TooManyPoints(total, 24));
    }
    let index = HullIndex::new(&r.points())?;
    let lifted_mask = (1u64 << n) - 1;
    let mut failures = 0;
    for mask in 0..1u64 << total {
        let l_part = mask & lifted_mask;
        let blocked = bits(mask & !lifted_mask).any(|b| index.contains(b, l_part));
        if index.is_convex(mask) == blocked {
            failures += 1;
        }
    }
    Ok(failures)
}

/// Result of turning a large convex subset of `P` into an independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapOutcome {
    /// `m` pairwise non-tangent disks, 0-based, ascending.
    pub independent: Vec<usize>,
    /// Pairs swapped, in order.
    pub swaps: Vec<TangentPair>,
    /// The final convex subset, as indices into [`ReductionOutput::points`].
    pub final_set: Vec<usize>,
}

/// Given `s ⊆ P` (indices into [`ReductionOutput::points`]) in convex
/// position with `|s| = m + |B|`, repeatedly replace the lower lifted
/// centre of a chosen tangent pair by that pair's blocking point until the
/// chosen centres are pairwise non-tangent. Every intermediate set is
/// re-checked for convex position; a failure aborts with
/// [`Error::SwapBrokeConvexity`].
pub fn convex_set_to_independent_set(r: &ReductionOutput, s: &[usize], m: usize) -> Result<SwapOutcome> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let n = r.disk_count();
    let total = r.point_count();
    let expected = m + r.blockers.len();
    if s.len() != expected {
        return Err(Error::WrongSize {
            expected,
            found: s.len(),
        });
    }
    if let Some(&bad) = s.iter().find(|&&i| i >= total) {
        return Err(Error::IndexOutOfRange(bad + 1));
    }
    let index = HullIndex::new(&r.points())?;
    let mut mask = s.iter().fold(0u64, |acc, &i| acc | 1 << i);
    if mask.count_ones() as usize != s.len() {
        return Err(Error::InvalidParameter("subset lists a point twice".into()));
    }
    if !index.is_convex(mask) {
        return Err(Error::NotConvex);
    }
    let mut swaps = Vec::new();
    loop {
        let offending = r
            .blockers
            .iter()
            .enumerate()
            .find(|(_, b)| mask & (1 << b.pair.i) != 0 && mask & (1 << b.pair.j) != 0);
        let Some((k, b)) = offending else { break };
        let blocker_bit = 1u64 << (n + k);
        if mask & blocker_bit != 0 {
            return Err(Error::SwapBrokeConvexity(b.pair.i + 1, b.pair.j + 1));
        }
        mask = (mask & !(1 << b.pair.i)) | blocker_bit;
        if !index.is_convex(mask) {
            return Err(Error::SwapBrokeConvexity(b.pair.i + 1, b.pair.j + 1));
        }
        swaps.push(b.pair);
    }
    let chosen: Vec<usize> = bits(mask).filter(|&i| i < n).collect();
    debug_assert!(chosen.len() >= m);
    Ok(SwapOutcome {
        independent: chosen.into_iter().take(m).collect(),
        swaps,
        final_set: bits(mask).collect(),
    })
}

/// True iff no two of the listed disks are tangent.
pub fn is_independent(centers: &[Point2], chosen: &[usize]) -> bool {
    chosen.iter().enumerate().all(|(a, &i)| {
        chosen[a + 1..]
            .iter()
            .all(|&j| i != j && !tangent(&centers[i], &centers[j]))
    })
}

/// Random lattice instance: `n` distinct cells of the smallest square grid
/// with `side² · density ≥ n`, centred at `(2a, 2b)`, listed row by row.
/// Lattice neighbours touch and diagonal neighbours are `√8` apart, so any
/// such subset is a valid instance.
pub fn generate_lattice_instance(seed: u64, n: usize, density: &Rational) -> Result<DiskInstance> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if *density <= int(0) || *density > int(1) {
        return Err(Error::InvalidParameter("density must lie in (0, 1]".into()));
    }
    let target = Rational::from_integer(n.into());
    let mut side = 1usize;
    while Rational::from_integer((side * side).into()) * density < target {
        side += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cells: Vec<(usize, usize)> = sample(&mut rng, side * side, n)
        .into_iter()
        .map(|c| (c / side, c % side))
        .collect();
    cells.sort_unstable();
    Ok(DiskInstance::new(
        cells
            .into_iter()
            .map(|(row, col)| Point2::from_ints(2 * col as i64, 2 * row as i64))
            .collect(),
    ))
}
