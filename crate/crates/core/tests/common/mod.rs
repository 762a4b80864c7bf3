#![allow(dead_code)]

use emptyconv::geom::{Point2, Point3};
use emptyconv::hull::HullIndex;
use emptyconv::rational::{ratio, Rational};
use emptyconv::reduction::{build_reduction, generate_lattice_instance, DiskInstance, ReductionOutput};
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded lattice instances with at most `max_disks` disks and `max_points`
/// reduction points.
pub fn lattice_suite(count: usize, max_disks: usize, max_points: usize) -> Vec<(DiskInstance, ReductionOutput)> {
    let densities = [ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(1, 1)];
    let mut out = Vec::new();
    let mut seed = 0u64;
    while out.len() < count {
        let n = 1 + (seed as usize % max_disks);
        let density = &densities[(seed as usize / max_disks) % densities.len()];
        let d = generate_lattice_instance(seed, n, density).unwrap();
        let r = build_reduction(&d).unwrap();
        if r.point_count() <= max_points {
            out.push((d, r));
        }
        seed += 1;
    }
    out
}

pub fn random_int_points(rng: &mut ChaCha8Rng, count: usize, lo: i64, hi: i64) -> Vec<Point3> {
    let mut pts: Vec<Point3> = (0..count)
        .map(|_| Point3::from_ints(rng.gen_range(lo..=hi), rng.gen_range(lo..=hi), rng.gen_range(lo..=hi)))
        .collect();
    pts.sort();
    pts.dedup();
    pts
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random planar set in general position (rejection sampling).
pub fn random_general_position_2d(rng: &mut ChaCha8Rng, count: usize, span: i64) -> Vec<Point2> {
    loop {
        let mut pts: Vec<Point2> = (0..count)
            .map(|_| Point2::from_ints(rng.gen_range(-span..=span), rng.gen_range(-span..=span)))
            .collect();
        pts.sort();
        pts.dedup();
        if pts.len() == count && emptyconv::general_position_2d(&pts) {
            return pts;
        }
    }
}

/// Largest mask satisfying `pred`, over all `2^n` masks.
pub fn naive_max(n: usize, pred: impl Fn(u64) -> bool) -> usize {
    (0u64..1 << n)
        .filter(|&m| pred(m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn naive_es(points: &[Point3]) -> usize {
    let idx = HullIndex::new(points).unwrap();
    naive_max(points.len(), |m| idx.is_convex(m))
}

pub fn naive_lecs(points: &[Point3]) -> usize {
    let idx = HullIndex::new(points).unwrap();
    naive_max(points.len(), |m| idx.is_empty_convex(m))
}

fn sub(a: &Point3, b: &Point3) -> [Rational; 3] {
    [&a.x - &b.x, &a.y - &b.y, &a.z - &b.z]
}

fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn dot(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

fn null(a: &[Rational; 3]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Does the halfspace family `{x : sign·h(x) ≥ 0}` of every supporting
/// functional of `q` contain `p`? `h` ranges over the candidates produced
/// by `functionals`.
fn inside_supports(p: &Point3, q: &[Point3], functionals: Vec<([Rational; 3], Point3)>) -> bool {
    for (normal, base) in functionals {
        let values: Vec<Rational> = q.iter().map(|x| dot(&normal, &sub(x, &base))).collect();
        let nonneg = values.iter().all(|v| !v.is_negative());
        let nonpos = values.iter().all(|v| !v.is_positive());
        let at_p = dot(&normal, &sub(p, &base));
        if nonneg && at_p.is_negative() || nonpos && at_p.is_positive() {
            return false;
        }
    }
    true
}

/// Hull membership from the facet description: `p ∈ conv(q)` iff `p` lies
/// on the inner side of every supporting plane (or, in lower dimension,
/// inside the affine hull and every supporting line / endpoint).
pub fn facet_oracle_in_hull(p: &Point3, q: &[Point3]) -> bool {
    let mut q = q.to_vec();
    q.sort();
    q.dedup();
    let a = &q[0];
    let dirs: Vec<[Rational; 3]> = q.iter().map(|x| sub(x, a)).filter(|v| !null(v)).collect();
    if dirs.is_empty() {
        return p == a;
    }
    let d0 = dirs[0].clone();
    let plane_normal = dirs.iter().map(|v| cross(&d0, v)).find(|n| !null(n));
    let Some(n0) = plane_normal else {
        // Collinear: p on the line and between the extreme parameters.
        let w = sub(p, a);
        if !null(&cross(&d0, &w)) {
            return false;
        }
        let t = dot(&w, &d0);
        let ts: Vec<Rational> = q.iter().map(|x| dot(&sub(x, a), &d0)).collect();
        return ts.iter().min().unwrap() <= &t && &t <= ts.iter().max().unwrap();
    };
    let full = dirs.iter().any(|v| !dot(&n0, v).is_zero());
    if !full {
        if !dot(&n0, &sub(p, a)).is_zero() {
            return false;
        }
        let mut lines = Vec::new();
        for i in 0..q.len() {
            for j in 0..q.len() {
                if i != j {
                    lines.push((cross(&sub(&q[j], &q[i]), &n0), q[i].clone()));
                }
            }
        }
        return inside_supports(p, &q, lines);
    }
    let mut planes = Vec::new();
    for i in 0..q.len() {
        for j in i + 1..q.len() {
            for k in j + 1..q.len() {
                let n = cross(&sub(&q[j], &q[i]), &sub(&q[k], &q[i]));
                if !null(&n) {
                    planes.push((n, q[i].clone()));
                }
            }
        }
    }
    inside_supports(p, &q, planes)
}
