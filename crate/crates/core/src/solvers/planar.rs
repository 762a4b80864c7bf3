use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::geom::{collinear_triple, orient2d, Point2, Point3, Sign};
use crate::hull::is_convex_position;
use crate::rational::int;

use super::SolveResult;

fn check_distinct_2d(points: &[Point2]) -> Result<()> {
    let mut seen: HashMap<&Point2, usize> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            return Err(Error::DuplicatePoint(j, i));
        }
        seen.insert(p, i);
    }
    Ok(())
}

/// Planar convex position, decided by embedding into `z = 0`.
pub fn is_convex_position_2d(points: &[Point2]) -> Result<bool> {
    let embedded: Vec<Point3> = points
        .iter()
        .map(|p| Point3::new(p.x.clone(), p.y.clone(), int(0)))
        .collect();
    is_convex_position(&embedded)
}

fn left_turn(a: &Point2, b: &Point2, c: &Point2) -> bool {
    orient2d(a, b, c) == Sign::Positive
}

/// Exact largest convex-position subset of a planar point set.
///
/// Every convex polygon has a unique lowest vertex (ties broken by `x`).
/// For each anchor `p`, the points above it are sorted by angle around `p`
/// and `chain[i][j]` holds the most vertices of a strictly convex chain
/// `p, …, q_i, q_j` with increasing angles. A chain closes into a polygon
/// when `q_i, q_j, p` is a left turn. The witness lists the polygon
/// counter-clockwise from its anchor.
pub fn planar_largest_convex_subset(points: &[Point2]) -> Result<SolveResult> {
    check_distinct_2d(points)?;
    let n = points.len();
    if n <= 2 {
        let witness: Vec<usize> = (0..n).collect();
        return Ok(SolveResult {
            size: n,
            witness,
            explored: 0,
        });
    }
    let mut best: Vec<usize> = vec![0, 1];
    let mut explored = 0u64;
    let key = |i: usize| (&points[i].y, &points[i].x);

    for anchor in 0..n {
        let p = &points[anchor];
        let mut cands: Vec<usize> = (0..n).filter(|&q| key(q) > key(anchor)).collect();
        cands.sort_by(|&a, &b| match orient2d(p, &points[a], &points[b]) {
            Sign::Positive => std::cmp::Ordering::Less,
            Sign::Negative => std::cmp::Ordering::Greater,
            Sign::Zero => p.squared_distance(&points[a]).cmp(&p.squared_distance(&points[b])),
        });
        let m = cands.len();
        if m < best.len() {
            continue;
        }
        let q = |i: usize| &points[cands[i]];
        // chain[i][j] == 0 marks an impossible chain.
        let mut chain = vec![vec![0usize; m]; m];
        let mut prev: Vec<Vec<Option<usize>>> = vec![vec![None; m]; m];
        for j in 0..m {
            for i in 0..j {
                explored += 1;
                if !left_turn(p, q(i), q(j)) {
                    continue;
                }
                chain[i][j] = 3;
                for k in 0..i {
                    if chain[k][i] > 0 && chain[k][i] + 1 > chain[i][j] && left_turn(q(k), q(i), q(j)) {
                        chain[i][j] = chain[k][i] + 1;
                        prev[i][j] = Some(k);
                    }
                }
                if chain[i][j] > best.len() && left_turn(q(i), q(j), p) {
                    let mut tail = vec![cands[j], cands[i]];
                    let (mut a, mut b) = (i, j);
                    while let Some(k) = prev[a][b] {
                        tail.push(cands[k]);
                        b = a;
                        a = k;
                    }
                    tail.push(anchor);
                    tail.reverse();
                    best = tail;
                }
            }
        }
    }
    Ok(SolveResult {
        size: best.len(),
        witness: best,
        explored,
    })
}

/// `C(2k - 4, k - 2) + 1`: every planar set in general position with at
/// least this many points contains `k` points in convex position.
/// `None` when the value does not fit in `usize`.
pub fn es_threshold(k: usize) -> Option<usize> {
    if k < 3 {
        return Some(k);
    }
    let (top, choose) = (2 * k - 4, k - 2);
    let mut c: u128 = 1;
    for i in 0..choose {
        c = c.checked_mul((top - i) as u128)? / (i as u128 + 1);
    }
    usize::try_from(c.checked_add(1)?).ok()
}

/// Decides whether a planar set in general position has `k ≥ 3` points in
/// convex position: answers yes outright once `|P|` reaches
/// [`es_threshold`], otherwise tries every `k`-subset.
pub fn es_fpt_decide(points: &[Point2], k: usize) -> Result<bool> {
    if k < 3 {
        return Err(Error::InvalidParameter(format!("k must be at least 3, got {k}")));
    }
    check_distinct_2d(points)?;
    if let Some((a, b, c)) = collinear_triple(points) {
        return Err(Error::NotGeneralPosition(a, b, c));
    }
    if es_threshold(k).is_some_and(|t| points.len() >= t) {
        return Ok(true);
    }
    for subset in (0..points.len()).combinations(k) {
        let chosen: Vec<Point2> = subset.iter().map(|&i| points[i].clone()).collect();
        if is_convex_position_2d(&chosen)? {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(raw: &[(i64, i64)]) -> Vec<Point2> {
        raw.iter().map(|&(x, y)| Point2::from_ints(x, y)).collect()
    }

    #[test]
    fn dp_examples() {
        let square = pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]);
        let r = planar_largest_convex_subset(&square).unwrap();
        assert_eq!(r.size, 4);
        assert_eq!(r.witness, vec![0, 1, 2, 3]);

        // triangle with its centroid
        let tri = pts(&[(0, 0), (6, 0), (0, 6), (2, 2)]);
        assert_eq!(planar_largest_convex_subset(&tri).unwrap().size, 3);

        let line = pts(&[(0, 0), (1, 0), (2, 0)]);
        assert_eq!(planar_largest_convex_subset(&line).unwrap().size, 2);
    }

    #[test]
    fn dp_small_and_degenerate() {
        assert_eq!(planar_largest_convex_subset(&[]).unwrap().size, 0);
        assert_eq!(planar_largest_convex_subset(&pts(&[(3, 4)])).unwrap().size, 1);
        // collinear points on a hull edge are not vertices
        let sq = pts(&[(0, 0), (1, 0), (2, 0), (2, 2), (0, 2)]);
        assert_eq!(planar_largest_convex_subset(&sq).unwrap().size, 4);
        assert!(planar_largest_convex_subset(&pts(&[(1, 1), (1, 1)])).is_err());
    }

    #[test]
    fn dp_witness_is_convex() {
        let cloud = pts(&[(0, 0), (5, 1), (7, 4), (4, 8), (-1, 5), (2, 3), (3, 2), (6, 6), (1, 7)]);
        let r = planar_largest_convex_subset(&cloud).unwrap();
        let chosen: Vec<Point2> = r.witness.iter().map(|&i| cloud[i].clone()).collect();
        assert!(is_convex_position_2d(&chosen).unwrap());
        assert_eq!(chosen.len(), r.size);
    }

    #[test]
    fn thresholds() {
        assert_eq!(es_threshold(3), Some(3));
        assert_eq!(es_threshold(4), Some(7));
        assert_eq!(es_threshold(5), Some(21));
        assert_eq!(es_threshold(6), Some(71));
        assert_eq!(es_threshold(200), None);
    }

    #[test]
    fn fpt_examples() {
        assert!(es_fpt_decide(&pts(&[(0, 0), (1, 0), (0, 1)]), 3).unwrap());
        assert!(es_fpt_decide(&pts(&[(0, 0), (2, 0), (2, 2), (0, 2)]), 4).unwrap());
        assert!(!es_fpt_decide(&pts(&[(0, 0), (6, 0), (0, 6), (2, 2)]), 4).unwrap());
        assert!(!es_fpt_decide(&pts(&[(0, 0), (1, 0)]), 3).unwrap());
    }

    #[test]
    fn fpt_rejects_bad_input() {
        assert_eq!(
            es_fpt_decide(&pts(&[(0, 0), (1, 0), (2, 0)]), 3),
            Err(Error::NotGeneralPosition(0, 1, 2))
        );
        assert!(es_fpt_decide(&pts(&[(0, 0), (1, 0), (0, 1)]), 2).is_err());
    }

    #[test]
    fn fpt_shortcut_fires_at_threshold() {
        // Seven points in general position always hold a convex quadrilateral.
        let seven = pts(&[(0, 0), (10, 1), (3, 2), (7, 3), (2, 7), (8, 9), (5, 5)]);
        assert!(general_position(&seven));
        assert!(es_fpt_decide(&seven, 4).unwrap());
    }

    fn general_position(p: &[Point2]) -> bool {
        crate::geom::general_position_2d(p)
    }
}
