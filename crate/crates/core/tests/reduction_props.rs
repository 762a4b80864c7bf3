mod common;

use common::lattice_suite;
use emptyconv::hull::{bits, HullIndex};
use emptyconv::rational::ratio;
use emptyconv::reduction::{
    check_convexity, check_corollary_exhaustive, check_encoding_lemma, check_encoding_lemma_exhaustive,
    convex_set_to_independent_set, generate_lattice_instance, is_independent, tangent_pairs, verify_witness_plane,
    TangentPair,
};
use emptyconv::solvers::{largest_convex_subset, max_independent_set, TangencyGraph};
use rand::Rng;

#[test]
fn encoding_lemma_exhaustive_on_suite() {
    for (d, r) in lattice_suite(120, 12, 40) {
        let report = check_encoding_lemma_exhaustive(&r).unwrap();
        assert_eq!(report.subsets_checked, 1 << d.len());
        assert!(
            report.passed(),
            "{d:?}: {:?}",
            &report.failures[..report.failures.len().min(3)]
        );
    }
}

#[test]
fn encoding_lemma_direct_route_agrees() {
    let mut rng = common::rng(21);
    for (d, r) in lattice_suite(40, 9, 30) {
        for _ in 0..10 {
            let q: Vec<usize> = (0..d.len()).filter(|_| rng.gen_bool(0.5)).collect();
            assert!(check_encoding_lemma(&r, &q).unwrap());
        }
    }
}

#[test]
fn witness_planes_on_many_instances() {
    let mut instances = 0;
    let mut pairs = 0;
    for seed in 0..1100u64 {
        let n = 1 + (seed as usize % 14);
        let d = generate_lattice_instance(seed, n, &ratio(2, 3)).unwrap();
        let r = emptyconv::reduction::build_reduction(&d).unwrap();
        for pair in r.pairs() {
            assert!(verify_witness_plane(&r, pair), "seed {seed}, pair {pair}");
            pairs += 1;
        }
        instances += 1;
    }
    assert!(instances >= 1000);
    assert!(pairs > 2000);
}

#[test]
fn convexity_proposition_on_suite() {
    for (d, r) in lattice_suite(80, 12, 30) {
        let report = check_convexity(&r).unwrap();
        assert!(report.passed(), "{d:?}: {report:?}");
    }
}

#[test]
fn corollary_exhaustive_small() {
    for (d, r) in lattice_suite(60, 8, 18) {
        assert_eq!(check_corollary_exhaustive(&r).unwrap(), 0, "{d:?}");
    }
}

#[test]
fn generated_tangencies_are_lattice_adjacency() {
    for (d, _) in lattice_suite(100, 12, 64) {
        let cells: Vec<(i64, i64)> = d
            .centers()
            .iter()
            .map(|c| {
                (
                    c.x.to_integer().try_into().unwrap(),
                    c.y.to_integer().try_into().unwrap(),
                )
            })
            .collect();
        let mut adjacent = Vec::new();
        for i in 0..cells.len() {
            for j in i + 1..cells.len() {
                let (dx, dy) = (cells[i].0 - cells[j].0, cells[i].1 - cells[j].1);
                if dx.abs() + dy.abs() == 2 {
                    adjacent.push(TangentPair::new(i, j));
                }
            }
        }
        assert_eq!(tangent_pairs(&d).unwrap(), adjacent);
    }
}

#[test]
fn swap_procedure_on_every_maximum_convex_set() {
    for (d, r) in lattice_suite(80, 10, 16) {
        let pts = r.points();
        let best = largest_convex_subset(&pts).unwrap();
        let mis = max_independent_set(&TangencyGraph::from_instance(&d).unwrap()).size;
        let m = best.size - r.blockers().len();
        assert_eq!(m, mis);
        // every convex set of the optimal size, not only the reported witness
        let idx = HullIndex::new(&pts).unwrap();
        for mask in (0u64..1 << pts.len()).filter(|m| m.count_ones() as usize == best.size) {
            if !idx.is_convex(mask) {
                continue;
            }
            let s: Vec<usize> = bits(mask).collect();
            let out = convex_set_to_independent_set(&r, &s, m).unwrap();
            assert_eq!(out.independent.len(), m);
            assert!(is_independent(d.centers(), &out.independent));
        }
    }
}
