//! Hull membership and convex-position predicates.
//!
//! Membership follows Carathéodory: `p ∈ conv(Q)` iff `p` lies in the hull of
//! some affinely independent `T ⊆ Q` with `|T| ≤ 4`. Affinely dependent
//! candidates are skipped because their hull is covered by their proper
//! subsets, which are enumerated as well. Each simplex test solves the
//! barycentric system by Cramer's rule on integer coordinates obtained by
//! clearing all denominators at once.

use std::collections::HashMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geom::Point3;

/// Coordinates below this bound keep every degree-4 predicate inside `i128`.
const SMALL_BOUND: i64 = 1 << 28;

type V3<T> = [T; 3];

fn sub<T: Signed + Clone>(a: &V3<T>, b: &V3<T>) -> V3<T> {
    [
        a[0].clone() - b[0].clone(),
        a[1].clone() - b[1].clone(),
        a[2].clone() - b[2].clone(),
    ]
}

fn cross<T: Signed + Clone>(a: &V3<T>, b: &V3<T>) -> V3<T> {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

fn dot<T: Signed + Clone>(a: &V3<T>, b: &V3<T>) -> T {
    a[0].clone() * b[0].clone() + a[1].clone() * b[1].clone() + a[2].clone() * b[2].clone()
}

fn is_null<T: Signed + Clone>(a: &V3<T>) -> bool {
    a.iter().all(Zero::is_zero)
}

fn orient<T: Signed + Clone>(a: &V3<T>, b: &V3<T>, c: &V3<T>, d: &V3<T>) -> T {
    dot(&cross(&sub(b, a), &sub(c, a)), &sub(d, a))
}

/// Closed-simplex membership. Degenerate simplices report `false`.
fn in_simplex<T: Signed + Clone + PartialOrd>(p: &V3<T>, s: &[&V3<T>]) -> bool {
    match s {
        [a] => p == *a,
        [a, b] => {
            let d = sub(b, a);
            if is_null(&d) {
                return false;
            }
            let w = sub(p, a);
            if !is_null(&cross(&d, &w)) {
                return false;
            }
            let t = dot(&w, &d);
            !t.is_negative() && t <= dot(&d, &d)
        }
        [a, b, c] => {
            let n = cross(&sub(b, a), &sub(c, a));
            if is_null(&n) || !dot(&n, &sub(p, a)).is_zero() {
                return false;
            }
            [(a, b), (b, c), (c, a)]
                .iter()
                .all(|(u, v)| !dot(&n, &cross(&sub(v, u), &sub(p, u))).is_negative())
        }
        [a, b, c, d] => {
            let total = orient(a, b, c, d);
            if total.is_zero() {
                return false;
            }
            let parts = [
                orient(p, b, c, d),
                orient(a, p, c, d),
                orient(a, b, p, d),
                orient(a, b, c, p),
            ];
            let positive = total.is_positive();
            parts.iter().all(|w| w.is_zero() || w.is_positive() == positive)
        }
        _ => false,
    }
}

enum Coords {
    Small(Vec<V3<i128>>),
    Big(Vec<V3<BigInt>>),
}

/// A point list with denominators cleared, ready for exact predicates.
pub(crate) struct Scaled {
    coords: Coords,
}

impl Scaled {
    pub(crate) fn new<'a>(points: impl IntoIterator<Item = &'a Point3>) -> Self {
        let points: Vec<&Point3> = points.into_iter().collect();
        let mut lcm = BigInt::one();
        for p in &points {
            for c in [&p.x, &p.y, &p.z] {
                lcm = lcm.lcm(c.denom());
            }
        }
        let big: Vec<V3<BigInt>> = points
            .iter()
            .map(|p| [&p.x, &p.y, &p.z].map(|c| c.numer() * (&lcm / c.denom())))
            .collect();
        let small: Option<Vec<V3<i128>>> = big
            .iter()
            .map(|v| {
                let mut out = [0i128; 3];
                for (o, c) in out.iter_mut().zip(v) {
                    let x = c.to_i64()?;
                    if x.abs() >= SMALL_BOUND {
                        return None;
                    }
                    *o = x as i128;
                }
                Some(out)
            })
            .collect();
        let coords = match small {
            Some(s) => Coords::Small(s),
            None => Coords::Big(big),
        };
        Scaled { coords }
    }

    /// Is point `q` in the closed hull of the points `simplex` (1 to 4 of them)?
    pub(crate) fn in_simplex(&self, q: usize, simplex: &[usize]) -> bool {
        match &self.coords {
            Coords::Small(c) => {
                let s: Vec<&V3<i128>> = simplex.iter().map(|&i| &c[i]).collect();
                in_simplex(&c[q], &s)
            }
            Coords::Big(c) => {
                let s: Vec<&V3<BigInt>> = simplex.iter().map(|&i| &c[i]).collect();
                in_simplex(&c[q], &s)
            }
        }
    }

    pub(crate) fn in_hull(&self, q: usize, sites: &[usize]) -> bool {
        (1..=4.min(sites.len())).any(|k| sites.iter().copied().combinations(k).any(|t| self.in_simplex(q, &t)))
    }
}

pub(crate) fn check_distinct(points: &[Point3]) -> Result<()> {
    let mut seen: HashMap<&Point3, usize> = HashMap::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(Error::DuplicatePoint(j, i));
        }
        seen.insert(p, i);
    }
    Ok(())
}

/// Exact test for `p ∈ conv(q)`.
pub fn point_in_hull(p: &Point3, q: &[Point3]) -> Result<bool> {
    if q.is_empty() {
        return Err(Error::EmptyHull);
    }
    let scaled = Scaled::new(q.iter().chain(std::iter::once(p)));
    let sites: Vec<usize> = (0..q.len()).collect();
    Ok(scaled.in_hull(q.len(), &sites))
}

/// Every point is a vertex of the hull. Sets of at most two points qualify.
pub fn is_convex_position(s: &[Point3]) -> Result<bool> {
    check_distinct(s)?;
    let scaled = Scaled::new(s);
    Ok(convex_in(&scaled, &(0..s.len()).collect::<Vec<_>>()))
}

fn convex_in(scaled: &Scaled, members: &[usize]) -> bool {
    members.iter().all(|&i| {
        let others: Vec<usize> = members.iter().copied().filter(|&j| j != i).collect();
        !scaled.in_hull(i, &others)
    })
}

/// `s` is in convex position and its hull holds no other point of `ambient`.
pub fn is_empty_convex_position(s: &[Point3], ambient: &[Point3]) -> Result<bool> {
    check_distinct(s)?;
    check_distinct(ambient)?;
    let position: HashMap<&Point3, usize> = ambient.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut members = Vec::with_capacity(s.len());
    for (k, p) in s.iter().enumerate() {
        members.push(*position.get(p).ok_or(Error::NotSubset(k))?);
    }
    let scaled = Scaled::new(ambient);
    if !convex_in(&scaled, &members) {
        return Ok(false);
    }
    if members.is_empty() {
        return Ok(true);
    }
    let inside: Vec<bool> = {
        let mut v = vec![false; ambient.len()];
        for &m in &members {
            v[m] = true;
        }
        v
    };
    Ok((0..ambient.len())
        .filter(|&q| !inside[q])
        .all(|q| !scaled.in_hull(q, &members)))
}

/// Largest site count a [`HullIndex`] accepts (sites are addressed by `u64` masks).
pub const MAX_SITES: usize = 64;

/// Precomputed Carathéodory supports.
///
/// For every query point the index stores each inclusion-minimal set of at
/// most four sites whose hull contains it, as a bitmask over sites. A query
/// lies in the hull of a site subset exactly when one of its supports is a
/// subset of it, which turns every hull test of the exhaustive searches into
/// a handful of mask comparisons.
#[derive(Clone, Debug)]
pub struct HullIndex {
    sites: usize,
    supports: Vec<Vec<u64>>,
    self_indexed: bool,
}

impl HullIndex {
    /// Index a point set against itself; point `i` is never part of its own supports.
    pub fn new(points: &[Point3]) -> Result<Self> {
        check_distinct(points)?;
        Self::build(points, None)
    }

    /// Index external `queries` against `sites`. A query equal to a site has
    /// that site as a singleton support.
    pub fn with_queries(sites: &[Point3], queries: &[Point3]) -> Result<Self> {
        Self::build(sites, Some(queries))
    }

    fn build(sites: &[Point3], queries: Option<&[Point3]>) -> Result<Self> {
        if sites.len() > MAX_SITES {
            return Err(Error::TooManyPoints(sites.len(), MAX_SITES));
        }
        let n = sites.len();
        let scaled = Scaled::new(sites.iter().chain(queries.into_iter().flatten()));
        let query_count = queries.map_or(n, <[Point3]>::len);
        let mut supports = Vec::with_capacity(query_count);
        for q in 0..query_count {
            let (slot, candidates): (usize, Vec<usize>) = match queries {
                None => (q, (0..n).filter(|&i| i != q).collect()),
                Some(_) => (n + q, (0..n).collect()),
            };
            let mut found: Vec<u64> = Vec::new();
            for k in 1..=4.min(candidates.len()) {
                for t in candidates.iter().copied().combinations(k) {
                    let mask = t.iter().fold(0u64, |m, &i| m | 1 << i);
                    if found.iter().any(|&f| f & !mask == 0) {
                        continue;
                    }
                    if scaled.in_simplex(slot, &t) {
                        found.push(mask);
                    }
                }
            }
            supports.push(found);
        }
        Ok(HullIndex {
            sites: n,
            supports,
            self_indexed: queries.is_none(),
        })
    }

    pub fn site_count(&self) -> usize {
        self.sites
    }

    pub fn query_count(&self) -> usize {
        self.supports.len()
    }

    pub fn supports(&self, query: usize) -> &[u64] {
        &self.supports[query]
    }

    pub fn full_mask(&self) -> u64 {
        if self.sites == 64 {
            u64::MAX
        } else {
            (1u64 << self.sites) - 1
        }
    }

    /// Is `query` in the hull of the sites in `mask`? For a self-indexed
    /// set the query's own bit is ignored.
    #[inline]
    pub fn contains(&self, query: usize, mask: u64) -> bool {
        self.supports[query].iter().any(|&t| t & !mask == 0)
    }

    pub fn is_convex(&self, mask: u64) -> bool {
        debug_assert!(self.self_indexed);
        bits(mask).all(|i| !self.contains(i, mask))
    }

    /// No site outside `mask` lies in the hull of `mask`.
    pub fn is_hull_closed(&self, mask: u64) -> bool {
        debug_assert!(self.self_indexed);
        bits(self.full_mask() & !mask).all(|q| !self.contains(q, mask))
    }

    pub fn is_empty_convex(&self, mask: u64) -> bool {
        self.is_convex(mask) && self.is_hull_closed(mask)
    }

    /// Given `mask` in convex position, does adding site `x` keep it so?
    pub fn extends_convex(&self, mask: u64, x: usize) -> bool {
        debug_assert!(self.self_indexed);
        let grown = mask | 1 << x;
        if self.contains(x, mask) {
            return false;
        }
        bits(mask).all(|s| self.supports[s].iter().all(|&t| t & (1 << x) == 0 || t & grown != t))
    }
}

/// Iterates the set bits of a mask from lowest to highest.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

pub fn mask_of(indices: &[usize]) -> u64 {
    indices.iter().fold(0, |m, &i| m | 1 << i)
}
