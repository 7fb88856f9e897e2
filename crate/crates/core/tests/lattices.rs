//! Minimal vectors and design strength of the bundled lattices, checked
//! against an exact rational enumeration and under changes of basis.

use designlat::exactmath::BigRational;
use designlat::feasibility::scan;
use designlat::lattice::{
    fixtures, minimal_vectors, moment_profile, pair_distribution, verify_design, verify_design_on,
    PairBudget,
};
use designlat::moments::DesignProblem;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use proptest::prelude::*;

mod common;
use common::exact_minimum;

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[test]
fn small_fixtures_against_exact_enumeration() {
    for (name, g, half) in [
        ("z2", fixtures::z2(), 2usize),
        ("d4", fixtures::d4(), 12),
        ("e8", fixtures::e8(), 120),
        ("bw16", fixtures::barnes_wall(), 2160),
    ] {
        let set = minimal_vectors(&g).unwrap();
        assert_eq!(set.half_kissing_number(), half, "{name}");
        assert_eq!(exact_minimum(&g), (set.minimum, half), "{name}");
        for v in &set.vectors {
            assert_eq!(g.norm(v), set.minimum as i128);
            assert!(v.iter().find(|&&c| c != 0).unwrap().is_positive());
        }
    }
}

#[test]
fn fixture_invariants() {
    let e8 = fixtures::e8();
    assert!(e8.is_even());
    assert_eq!(e8.determinant(), BigRational::one());
    let bw = fixtures::barnes_wall();
    assert!(bw.is_even());
    assert_eq!(bw.determinant(), q(256));
    let leech = fixtures::leech();
    assert!(leech.is_even());
    assert_eq!(leech.determinant(), BigRational::one());
    assert_eq!((0..24).map(|i| leech.get(i, i)).min(), Some(4));
}

#[test]
fn design_strengths() {
    let d4 = verify_design(&fixtures::d4(), 7, PairBudget::default()).unwrap();
    assert_eq!(
        (d4.passes, d4.strength, d4.failing_moment),
        (false, 5, Some(3))
    );
    let e8 = verify_design(&fixtures::e8(), 9, PairBudget::default()).unwrap();
    assert_eq!((e8.passes, e8.strength), (false, 7));
    let bw = verify_design(&fixtures::barnes_wall(), 9, PairBudget::default()).unwrap();
    assert_eq!(
        (bw.passes, bw.strength, bw.kissing_number),
        (false, 7, 4320)
    );
}

#[test]
fn e8_histogram_matches_count_system() {
    // X(E8) is a 7-design with minimum 2, so every α ∈ X sees s_1 = 56
    let report = scan(DesignProblem::new(2, 7).unwrap(), 1, 64).unwrap();
    assert_eq!(report.dimensions(), vec![8]);
    let sol = report.solution(8).unwrap();
    assert_eq!(sol.s, BigInt::from(120));
    assert_eq!(sol.counts, vec![BigInt::from(56)]);

    let g = fixtures::e8();
    let set = minimal_vectors(&g).unwrap();
    for alpha in &set.vectors {
        let p = moment_profile(&g, &set, alpha, 7).unwrap();
        assert!(p.moments.iter().all(|m| m.holds));
        assert_eq!(p.counts_up_to(1), vec![56]);
        assert_eq!(p.counts, vec![63, 56, 1]);
    }
}

#[test]
fn histogram_is_constant_on_barnes_wall() {
    let g = fixtures::barnes_wall();
    let set = minimal_vectors(&g).unwrap();
    let first = moment_profile(&g, &set, &set.vectors[0], 7).unwrap().counts;
    for alpha in set.vectors.iter().step_by(37) {
        assert_eq!(moment_profile(&g, &set, alpha, 7).unwrap().counts, first);
    }
    let total: u64 = first.iter().sum();
    assert_eq!(total, 2160);
}

fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    // columns of U, built from elementary column operations
    let mut u: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    for &(a, b, c) in ops {
        let (a, b) = (a % n, b % n);
        if a == b {
            u.swap(a, (a + 1) % n);
            continue;
        }
        let src = u[b].clone();
        for (x, y) in u[a].iter_mut().zip(src) {
            *x += c * y;
        }
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn basis_change_preserves_certificate(ops in prop::collection::vec((0usize..8, 0usize..8, -2i64..=2), 1..10)) {
        let g = fixtures::e8();
        let h = g.transform(&unimodular(8, &ops)).unwrap();
        prop_assert_eq!(h.determinant(), g.determinant());
        let a = verify_design(&g, 9, PairBudget::default()).unwrap();
        let b = verify_design(&h, 9, PairBudget::default()).unwrap();
        prop_assert_eq!(a.kissing_number, b.kissing_number);
        prop_assert_eq!(a.strength, b.strength);
        prop_assert_eq!(a.moments, b.moments);
        prop_assert_eq!(a.inner_product_distribution, b.inner_product_distribution);
    }
}

#[test]
fn distribution_sums_to_all_pairs() {
    let g = fixtures::d4();
    let set = minimal_vectors(&g).unwrap();
    let dist = pair_distribution(&g, &set).unwrap();
    assert_eq!(dist.iter().map(|(_, c)| c).sum::<u64>(), 144);
    let c = verify_design_on(
        &g,
        &set,
        5,
        PairBudget {
            max_pairs: 10,
            force: false,
        },
    );
    assert!(c.is_err());
}
