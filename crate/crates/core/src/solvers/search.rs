use crate::error::Result;
use crate::geom::Point3;
use crate::hull::{bits, HullIndex};

use super::SolveResult;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Convex,
    EmptyConvex,
}

/// Depth-first include/exclude search over points in lexicographic order.
///
/// Only convex-position sets are extended (convex position is inherited by
/// subsets), and a branch is cut once even taking every undecided point
/// cannot beat the incumbent. For the empty variant, emptiness is tested at
/// every node that would improve the incumbent, since it is not inherited.
struct Search<'a> {
    index: &'a HullIndex,
    order: Vec<usize>,
    goal: Goal,
    target: Option<usize>,
    best: usize,
    best_mask: u64,
    explored: u64,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.target.is_some_and(|k| self.best >= k)
    }

    fn visit(&mut self, pos: usize, mask: u64, size: usize) {
        self.explored += 1;
        if size > self.best && (self.goal == Goal::Convex || self.index.is_hull_closed(mask)) {
            self.best = size;
            self.best_mask = mask;
        }
        if self.done() || pos == self.order.len() {
            return;
        }
        if size + (self.order.len() - pos) <= self.best {
            return;
        }
        let x = self.order[pos];
        if self.index.extends_convex(mask, x) {
            self.visit(pos + 1, mask | 1 << x, size + 1);
            if self.done() {
                return;
            }
        }
        self.visit(pos + 1, mask, size);
    }
}

fn run(points: &[Point3], goal: Goal, target: Option<usize>) -> Result<SolveResult> {
    let index = HullIndex::new(points)?;
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));
    let mut search = Search {
        index: &index,
        order,
        goal,
        target,
        best: 0,
        best_mask: 0,
        explored: 0,
    };
    if !search.done() {
        search.visit(0, 0, 0);
    }
    let mut witness: Vec<usize> = bits(search.best_mask).collect();
    witness.sort_by(|&a, &b| points[a].cmp(&points[b]));
    Ok(SolveResult {
        size: search.best,
        witness,
        explored: search.explored,
    })
}

/// Largest subset in convex position.
pub fn largest_convex_subset(points: &[Point3]) -> Result<SolveResult> {
    run(points, Goal::Convex, None)
}

/// Largest subset in convex position whose hull holds no other input point.
pub fn largest_empty_convex_subset(points: &[Point3]) -> Result<SolveResult> {
    run(points, Goal::EmptyConvex, None)
}

/// Are there `k` points in convex position? Stops at the first witness.
pub fn decide_es(points: &[Point3], k: usize) -> Result<bool> {
    Ok(run(points, Goal::Convex, Some(k))?.size >= k)
}

/// Are there `k` points in empty convex position? Stops at the first witness.
pub fn decide_lecs(points: &[Point3], k: usize) -> Result<bool> {
    Ok(run(points, Goal::EmptyConvex, Some(k))?.size >= k)
}
