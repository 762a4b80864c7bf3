mod common;

use common::{lattice_suite, random_int_points, rng};
use emptyconv::geom::Point3;
use emptyconv::hull::{bits, point_in_hull, HullIndex};
use emptyconv::nets::{discrepancy, net_theorem_check, verify_weak_eps_net, ColoredPoints, NetInstance};
use emptyconv::rational::ratio;
use emptyconv::solvers::{max_independent_set, TangencyGraph};
use rand::Rng;

fn brute_discrepancy(c: &ColoredPoints) -> usize {
    let pts = c.points();
    let idx = HullIndex::new(&pts).unwrap();
    (0u64..1 << pts.len())
        .filter(|&m| idx.is_hull_closed(m))
        .map(|m| c.signed_count(m).unsigned_abs() as usize)
        .max()
        .unwrap()
}

#[test]
fn net_theorem_on_many_instances() {
    let mut checked = 0;
    for (d, _) in lattice_suite(1000, 12, 64) {
        for m in 1..=d.len() {
            let c = net_theorem_check(&d, m).unwrap();
            assert!(c.holds(), "{d:?}: {c:?}");
            checked += 1;
        }
    }
    assert!(checked > 5000);
}

#[test]
fn violations_reverify() {
    let mut r = rng(41);
    for _ in 0..150 {
        let gsize = r.gen_range(1..=9);
        let ground = random_int_points(&mut r, gsize, -3, 3);
        let nsize = r.gen_range(0..=4);
        let net = random_int_points(&mut r, nsize, -3, 3);
        let eps = ratio(r.gen_range(1..=6), 6);
        let inst = NetInstance::new(ground.clone(), net.clone(), eps).unwrap();
        let v = verify_weak_eps_net(&inst).unwrap();
        assert_eq!(v.is_net, v.violation.is_none());
        if let Some(t) = v.violation {
            assert!(inst.is_heavy(t.len()));
            let chosen: Vec<Point3> = t.iter().map(|&i| ground[i].clone()).collect();
            for y in &net {
                assert!(!point_in_hull(y, &chosen).unwrap());
            }
        } else {
            // no heavy subset avoids the net
            let need = inst.heavy_size();
            for mask in (0u64..1 << ground.len()).filter(|m| m.count_ones() as usize >= need) {
                let chosen: Vec<Point3> = bits(mask).map(|i| ground[i].clone()).collect();
                assert!(net.iter().any(|y| point_in_hull(y, &chosen).unwrap()));
            }
        }
    }
}

#[test]
fn hull_hits_are_monotone() {
    let mut r = rng(42);
    for _ in 0..300 {
        let pts = random_int_points(&mut r, 8, -3, 3);
        let y = Point3::from_ints(r.gen_range(-2..=2), r.gen_range(-2..=2), r.gen_range(-2..=2));
        let full = (1u64 << pts.len()) - 1;
        let small = r.gen::<u64>() & full;
        let large = small | (r.gen::<u64>() & full);
        if small == 0 {
            continue;
        }
        let get = |m: u64| -> Vec<Point3> { bits(m).map(|i| pts[i].clone()).collect() };
        if point_in_hull(&y, &get(small)).unwrap() {
            assert!(point_in_hull(&y, &get(large)).unwrap());
        }
    }
}

#[test]
fn discrepancy_matches_brute_force() {
    let mut r = rng(43);
    for _ in 0..40 {
        let size = r.gen_range(1..=14);
        let pts = random_int_points(&mut r, size, -4, 4);
        let split = r.gen_range(0..=pts.len());
        let c = ColoredPoints::new(pts[..split].to_vec(), pts[split..].to_vec()).unwrap();
        let d = discrepancy(&c).unwrap();
        assert_eq!(d.value, brute_discrepancy(&c));
        let idx = HullIndex::new(&c.points()).unwrap();
        let mask = emptyconv::hull::mask_of(&d.witness);
        assert!(idx.is_hull_closed(mask));
        assert_eq!(c.signed_count(mask).unsigned_abs() as usize, d.value);
    }
}

#[test]
fn discrepancy_bounds_independent_sets_on_reductions() {
    for (d, r) in lattice_suite(60, 12, 18) {
        let c = ColoredPoints::new(r.lifted().to_vec(), r.blocker_points()).unwrap();
        let disc = discrepancy(&c).unwrap();
        let mis = max_independent_set(&TangencyGraph::from_instance(&d).unwrap()).size;
        assert!(disc.value >= mis, "{d:?}");
        assert_eq!(disc.value, brute_discrepancy(&c));
    }
}
