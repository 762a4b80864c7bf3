//! Weak ε-nets and red/blue discrepancy with respect to convex ranges.
//!
//! Both searches replace the continuum of convex ranges by point subsets:
//! a convex range avoiding the net and holding `T ⊆ X` may as well be
//! `conv(T)`, and the trace `A = C ∩ P` of a convex range `C` is hull-closed
//! (`conv(A) ∩ P = A`) while `conv(A)` realises any hull-closed `A`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::geom::Point3;
use crate::hull::{bits, check_distinct, HullIndex};
use crate::rational::Rational;
use crate::reduction::{build_reduction, DiskInstance};
use crate::solvers::{max_independent_set, TangencyGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetInstance {
    ground: Vec<Point3>,
    net: Vec<Point3>,
    epsilon: Rational,
}

impl NetInstance {
    pub fn new(ground: Vec<Point3>, net: Vec<Point3>, epsilon: Rational) -> Result<Self> {
        if ground.is_empty() {
            return Err(Error::InvalidParameter("ground set is empty".into()));
        }
        if !epsilon.is_positive() || epsilon > Rational::one() {
            return Err(Error::InvalidParameter(format!("epsilon {epsilon} outside (0, 1]")));
        }
        Ok(NetInstance { ground, net, epsilon })
    }

    pub fn ground(&self) -> &[Point3] {
        &self.ground
    }

    pub fn net(&self) -> &[Point3] {
        &self.net
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    /// Smallest `t` with `t ≥ ε·|X|`.
    pub fn heavy_size(&self) -> usize {
        let need = &self.epsilon * Rational::from_integer(BigInt::from(self.ground.len()));
        let ceil = need.ceil().to_integer();
        usize::try_from(ceil).expect("bounded by |X|")
    }

    /// `size ≥ ε·|X|`, by cross-multiplication.
    pub fn is_heavy(&self, size: usize) -> bool {
        BigInt::from(size) * self.epsilon.denom() >= self.epsilon.numer() * BigInt::from(self.ground.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetVerdict {
    pub is_net: bool,
    /// Ground indices `T` with `|T| ≥ ε|X|` and `conv(T)` missing every net point.
    pub violation: Option<Vec<usize>>,
    pub explored: u64,
}

struct NetSearch<'a> {
    index: &'a HullIndex,
    net_len: usize,
    needed: usize,
    found: Option<u64>,
    explored: u64,
}

impl NetSearch<'_> {
    fn blocked(&self, mask: u64) -> bool {
        (0..self.net_len).any(|y| self.index.contains(y, mask))
    }

    fn visit(&mut self, pos: usize, mask: u64, size: usize) {
        self.explored += 1;
        if size >= self.needed {
            self.found = Some(mask);
            return;
        }
        let n = self.index.site_count();
        if pos == n || size + (n - pos) < self.needed {
            return;
        }
        let grown = mask | 1 << pos;
        if !self.blocked(grown) {
            self.visit(pos + 1, grown, size + 1);
            if self.found.is_some() {
                return;
            }
        }
        self.visit(pos + 1, mask, size);
    }
}

/// Is `net` a weak ε-net for `ground` with respect to convex sets?
///
/// Searches for a subset `T` of the ground set with `|T| ≥ ε|X|` whose hull
/// avoids all net points. Hulls only grow with `T`, so once a net point is
/// caught every extension is skipped.
pub fn verify_weak_eps_net(instance: &NetInstance) -> Result<NetVerdict> {
    let index = HullIndex::with_queries(&instance.ground, &instance.net)?;
    let mut search = NetSearch {
        index: &index,
        net_len: instance.net.len(),
        needed: instance.heavy_size(),
        found: None,
        explored: 0,
    };
    search.visit(0, 0, 0);
    let violation = search.found.map(|mask| bits(mask).collect::<Vec<_>>());
    Ok(NetVerdict {
        is_net: violation.is_none(),
        violation,
        explored: search.explored,
    })
}

/// Both sides of "the blocking points form an (m/n)-net for the lifted
/// centres iff no m disks are pairwise non-touching", evaluated separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetTheoremCheck {
    pub m: usize,
    pub is_net: bool,
    pub mis_size: usize,
}

impl NetTheoremCheck {
    pub fn holds(&self) -> bool {
        self.is_net == (self.mis_size < self.m)
    }
}

pub fn net_theorem_check(d: &DiskInstance, m: usize) -> Result<NetTheoremCheck> {
    let n = d.len();
    if m == 0 || m > n {
        return Err(Error::InvalidParameter(format!("m = {m} outside 1..={n}")));
    }
    let r = build_reduction(d)?;
    let eps = Rational::new(BigInt::from(m), BigInt::from(n));
    let instance = NetInstance::new(r.lifted().to_vec(), r.blocker_points(), eps)?;
    let is_net = verify_weak_eps_net(&instance)?.is_net;
    let mis_size = max_independent_set(&TangencyGraph::from_instance(d)?).size;
    Ok(NetTheoremCheck { m, is_net, mis_size })
}

/// True iff the net/independent-set equivalence holds on `d` for this `m`.
pub fn net_iff_no_independent_set(d: &DiskInstance, m: usize) -> Result<bool> {
    Ok(net_theorem_check(d, m)?.holds())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredPoints {
    red: Vec<Point3>,
    blue: Vec<Point3>,
}

impl ColoredPoints {
    pub fn new(red: Vec<Point3>, blue: Vec<Point3>) -> Result<Self> {
        check_distinct(&red)?;
        check_distinct(&blue)?;
        for (i, r) in red.iter().enumerate() {
            if let Some(j) = blue.iter().position(|b| b == r) {
                return Err(Error::ColorOverlap(i, j));
            }
        }
        Ok(ColoredPoints { red, blue })
    }

    pub fn red(&self) -> &[Point3] {
        &self.red
    }

    pub fn blue(&self) -> &[Point3] {
        &self.blue
    }

    /// Red points followed by blue points.
    pub fn points(&self) -> Vec<Point3> {
        self.red.iter().chain(&self.blue).cloned().collect()
    }

    /// `|A ∩ red| - |A ∩ blue|` for a mask over [`ColoredPoints::points`].
    pub fn signed_count(&self, mask: u64) -> i64 {
        let reds = (mask & red_mask(self.red.len())).count_ones() as i64;
        let blues = mask.count_ones() as i64 - reds;
        reds - blues
    }
}

fn red_mask(reds: usize) -> u64 {
    if reds >= 64 {
        u64::MAX
    } else {
        (1u64 << reds) - 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub value: usize,
    /// A maximising hull-closed subset, as indices into [`ColoredPoints::points`].
    pub witness: Vec<usize>,
    pub explored: u64,
}

struct DiscSearch<'a> {
    index: &'a HullIndex,
    /// +1 for points that count towards the maximised colour, -1 otherwise.
    weight: Vec<i64>,
    best: i64,
    best_mask: u64,
    explored: u64,
}

impl DiscSearch<'_> {
    fn visit(&mut self, pos: usize, mask: u64, excluded: u64, score: i64, gain_left: i64) {
        self.explored += 1;
        if score > self.best && self.index.is_hull_closed(mask) {
            self.best = score;
            self.best_mask = mask;
        }
        let n = self.weight.len();
        if pos == n || score + gain_left <= self.best {
            return;
        }
        let w = self.weight[pos];
        let rest = gain_left - w.max(0);
        let grown = mask | 1 << pos;
        if bits(excluded).all(|e| !self.index.contains(e, grown)) {
            self.visit(pos + 1, grown, excluded, score + w, rest);
        }
        if !self.index.contains(pos, mask) {
            self.visit(pos + 1, mask, excluded | 1 << pos, score, rest);
        }
    }
}

/// Maximum over convex ranges `C` of `| |red ∩ C| - |blue ∩ C| |`.
///
/// Searches hull-closed subsets depth-first: a subset whose hull already
/// holds an excluded point can never become hull-closed, so the branch is
/// cut; the bound is the number of favourable points still undecided.
pub fn discrepancy(c: &ColoredPoints) -> Result<Discrepancy> {
    let points = c.points();
    let index = HullIndex::new(&points)?;
    let reds = c.red.len();
    let mut best = Discrepancy {
        value: 0,
        witness: Vec::new(),
        explored: 0,
    };
    for favour_red in [true, false] {
        let weight: Vec<i64> = (0..points.len())
            .map(|i| if (i < reds) == favour_red { 1 } else { -1 })
            .collect();
        let gain = weight.iter().filter(|&&w| w > 0).count() as i64;
        let mut search = DiscSearch {
            index: &index,
            weight,
            best: 0,
            best_mask: 0,
            explored: 0,
        };
        search.visit(0, 0, 0, 0, gain);
        best.explored += search.explored;
        if search.best as usize > best.value {
            best.value = search.best as usize;
            best.witness = bits(search.best_mask).collect();
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hull::point_in_hull;
    use crate::rational::{int, ratio};
    use crate::reduction::ReductionOutput;

    fn chain3() -> DiskInstance {
        DiskInstance::from_ints(&[(0, 0), (2, 0), (4, 0)])
    }

    fn reduce(d: &DiskInstance) -> ReductionOutput {
        build_reduction(d).unwrap()
    }

    #[test]
    fn chain_is_not_a_two_thirds_net() {
        let r = reduce(&chain3());
        let inst = NetInstance::new(r.lifted().to_vec(), r.blocker_points(), ratio(2, 3)).unwrap();
        assert_eq!(inst.heavy_size(), 2);
        let v = verify_weak_eps_net(&inst).unwrap();
        assert!(!v.is_net);
        let t = v.violation.unwrap();
        assert_eq!(t, vec![0, 2]);
        let chosen: Vec<Point3> = t.iter().map(|&i| r.lifted()[i].clone()).collect();
        for b in r.blocker_points() {
            assert!(!point_in_hull(&b, &chosen).unwrap());
        }
        assert!(inst.is_heavy(t.len()));
    }

    #[test]
    fn ground_is_its_own_net() {
        let r = reduce(&chain3());
        for eps in [ratio(1, 3), ratio(1, 2), int(1)] {
            let inst = NetInstance::new(r.points(), r.points(), eps).unwrap();
            assert!(verify_weak_eps_net(&inst).unwrap().is_net);
        }
    }

    #[test]
    fn single_pair_full_net() {
        let r = reduce(&DiskInstance::from_ints(&[(0, 0), (2, 0)]));
        let inst = NetInstance::new(r.lifted().to_vec(), r.blocker_points(), int(1)).unwrap();
        let v = verify_weak_eps_net(&inst).unwrap();
        assert!(v.is_net);
        assert_eq!(v.violation, None);
    }

    #[test]
    fn threshold_is_exact() {
        let ground: Vec<Point3> = (0..3).map(|i| Point3::from_ints(i, 0, i * i)).collect();
        let inst = NetInstance::new(ground.clone(), vec![], ratio(2, 3)).unwrap();
        assert!(inst.is_heavy(2));
        assert!(!inst.is_heavy(1));
        let inst = NetInstance::new(ground, vec![], ratio(7, 10)).unwrap();
        assert_eq!(inst.heavy_size(), 3);
        assert!(!inst.is_heavy(2));
    }

    #[test]
    fn net_instance_validation() {
        let g = vec![Point3::from_ints(0, 0, 0)];
        assert!(NetInstance::new(vec![], vec![], int(1)).is_err());
        assert!(NetInstance::new(g.clone(), vec![], int(0)).is_err());
        assert!(NetInstance::new(g, vec![], ratio(3, 2)).is_err());
    }

    #[test]
    fn theorem_examples() {
        let c = net_theorem_check(&chain3(), 2).unwrap();
        assert_eq!(
            c,
            NetTheoremCheck {
                m: 2,
                is_net: false,
                mis_size: 2
            }
        );
        assert!(c.holds());

        let pair = DiskInstance::from_ints(&[(0, 0), (2, 0)]);
        let c = net_theorem_check(&pair, 2).unwrap();
        assert!(c.is_net && c.mis_size == 1 && c.holds());

        let apart = DiskInstance::from_ints(&[(0, 0), (4, 0), (0, 4)]);
        let c = net_theorem_check(&apart, 3).unwrap();
        assert!(!c.is_net && c.mis_size == 3 && c.holds());

        for m in 1..=3 {
            assert!(net_iff_no_independent_set(&chain3(), m).unwrap());
        }
        assert!(net_iff_no_independent_set(&chain3(), 0).is_err());
        assert!(net_iff_no_independent_set(&chain3(), 4).is_err());
    }

    #[test]
    fn discrepancy_examples() {
        let r = reduce(&chain3());
        let c = ColoredPoints::new(r.lifted().to_vec(), r.blocker_points()).unwrap();
        let d = discrepancy(&c).unwrap();
        assert_eq!(d.value, 2);
        let pts = c.points();
        let index = HullIndex::new(&pts).unwrap();
        let mask = crate::hull::mask_of(&d.witness);
        assert!(index.is_hull_closed(mask));
        assert_eq!(c.signed_count(mask).unsigned_abs() as usize, d.value);

        let q: Vec<Point3> = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
            .iter()
            .map(|&(x, y, z)| Point3::from_ints(x, y, z))
            .collect();
        let c = ColoredPoints::new(vec![], q).unwrap();
        assert_eq!(discrepancy(&c).unwrap().value, 4);

        let c = ColoredPoints::new(vec![Point3::from_ints(0, 0, 0)], vec![Point3::from_ints(9, 9, 9)]).unwrap();
        assert_eq!(discrepancy(&c).unwrap().value, 1);
    }

    #[test]
    fn colour_overlap_rejected() {
        let p = Point3::from_ints(1, 2, 3);
        assert_eq!(
            ColoredPoints::new(vec![p.clone()], vec![p]),
            Err(Error::ColorOverlap(0, 0))
        );
    }
}
