//! Cross-module invariants: exact identities between the coefficient,
//! divisor, and block-evaluation views, plus representation round trips.

mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::Rng;

use common::*;
use qtoric::complex::{
    moment_angle_homology, power_complex, power_fan, underlying_complex, SimplicialComplex,
};
use qtoric::configs::{
    divisor_membership, divisor_to_polynomial, polynomial_to_divisor, squash_point, Divisor,
};
use qtoric::cox::evaluate_system;
use qtoric::fan::Cone;
use qtoric::num::GaussianRational;
use qtoric::poly::MonicPolynomial;
use qtoric::polysys::{
    bounded_closure_multiplicity, bounded_real_multiplicity, mult_locus, Field, PolySystem,
};

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[test]
fn mult_locus_root_set_matches_planted_data_exactly() {
    let mut rng = seeded(0x9CD);
    for _ in 0..300 {
        let n = 1 + rng.gen_range(0..3usize);
        let planted = plant_system(&mut rng, 1, n, Field::Complex, 6);
        let divisor = &planted.divisors[0];
        let locus = mult_locus(&planted.system.polys[0], n).unwrap();
        let monic = MonicPolynomial::from_polynomial(&locus).unwrap();
        let got = polynomial_to_divisor(&monic).unwrap();
        // a multiplicity-k root survives with multiplicity k - n + 1
        let mut expected = Divisor::empty();
        for (pt, m) in divisor.points() {
            if m >= n {
                expected.add(pt.clone(), m - n + 1);
            }
        }
        assert_eq!(got, expected, "n={n}, f={}", planted.system.polys[0]);
    }
}

#[test]
fn closure_membership_implies_real_membership_and_is_monotone() {
    let k3 = SimplicialComplex::from_min_non_faces(3, &[vec![0, 1, 2]]).unwrap();
    let mut rng = seeded(0xA11);
    for draw in 0..300 {
        let n = 1 + draw % 3;
        let field = if draw % 2 == 0 {
            Field::Real
        } else {
            Field::Complex
        };
        let planted = plant_system(&mut rng, 3, n, field, 6);
        let real = bounded_real_multiplicity(&planted.system, &k3).unwrap();
        let closure = bounded_closure_multiplicity(&planted.system, &k3).unwrap();
        assert!(!closure || real);
        if real {
            // a weaker bound can only stay a member
            for higher in n + 1..=4 {
                let sys = PolySystem::new(field, higher, planted.system.polys.clone()).unwrap();
                assert!(bounded_real_multiplicity(&sys, &k3).unwrap());
            }
        }
    }
}

#[test]
fn conjugation_preserves_membership_verdicts() {
    let k = SimplicialComplex::from_min_non_faces(2, &[vec![0, 1]]).unwrap();
    let mut rng = seeded(0xC0);
    for draw in 0..200 {
        let n = 1 + draw % 3;
        let planted = plant_system(&mut rng, 2, n, Field::Complex, 5);
        let c = planted.system.conj();
        assert_eq!(
            bounded_real_multiplicity(&planted.system, &k).unwrap(),
            bounded_real_multiplicity(&c, &k).unwrap()
        );
        assert_eq!(
            bounded_closure_multiplicity(&planted.system, &k).unwrap(),
            bounded_closure_multiplicity(&c, &k).unwrap()
        );
    }
}

#[test]
fn divisor_membership_commutes_with_the_coefficient_oracle() {
    let complexes = [
        SimplicialComplex::from_min_non_faces(2, &[vec![0, 1]]).unwrap(),
        SimplicialComplex::from_min_non_faces(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
    ];
    let mut rng = seeded(0x500);
    for draw in 0..500 {
        let k = &complexes[draw % complexes.len()];
        let n = 1 + draw % 3;
        let field = if draw % 2 == 0 {
            Field::Real
        } else {
            Field::Complex
        };
        let sys = plant_divisor_system(&mut rng, k.num_vertices(), n, field, 5);
        let polys = sys.divisors.iter().map(divisor_to_polynomial).collect();
        let psys = PolySystem::new(field, n, polys).unwrap();
        assert_eq!(
            divisor_membership(&sys, k).unwrap(),
            bounded_real_multiplicity(&psys, k).unwrap(),
        );
    }
}

#[test]
fn squash_is_injective_on_a_large_grid_and_lands_below_the_bound() {
    let bound = q(7, 1);
    let mut seen = std::collections::BTreeSet::new();
    let mut count = 0usize;
    for a in 0..100i64 {
        for b in 0..100i64 {
            let p = GaussianRational::new(q(a - 50, 3), q(b - 50, 7));
            let s = squash_point(&p, &bound);
            assert!(s.re < bound);
            assert!(
                seen.insert((s.re.clone(), s.im.clone())),
                "collision at {p}"
            );
            count += 1;
        }
    }
    assert_eq!(count, 10_000);
}

#[test]
fn zero_pattern_of_evaluation_reads_off_multiplicities() {
    let mut rng = seeded(0x2B);
    for draw in 0..150 {
        let n = 1 + draw % 3;
        let planted = plant_system(&mut rng, 3, n, Field::Complex, 6);
        for x in [-3i64, -1, 0, 1, 2, 5] {
            let x = GaussianRational::from_int(x);
            let p = evaluate_system(&planted.system, &x).unwrap();
            let expected: Vec<usize> = planted
                .divisors
                .iter()
                .enumerate()
                .filter(|(_, d)| d.multiplicity(&x) >= n)
                .map(|(i, _)| i)
                .collect();
            assert_eq!(p.zero_pattern(), expected, "n={n} x={x}");
        }
    }
}

#[test]
fn moment_angle_models_agree_through_the_power_complex() {
    for (name, fan) in corpus() {
        let k = underlying_complex(&fan).unwrap();
        for n in 1..=2usize {
            let direct = moment_angle_homology(&k, n, 2 * n).unwrap();
            let kn = power_complex(&k, n).unwrap();
            let via_power = moment_angle_homology(&kn, 1, 2).unwrap();
            assert_eq!(direct, via_power, "{name} n={n}");
        }
    }
}

#[test]
fn power_fan_consistency_extends_to_n_three() {
    for (name, fan) in corpus() {
        for n in 1..=3usize {
            let pf = power_fan(&fan, n).unwrap();
            let direct = underlying_complex(&pf).unwrap();
            let powered = power_complex(&underlying_complex(&fan).unwrap(), n).unwrap();
            assert_eq!(direct, powered, "{name} n={n}");
            assert!(pf.is_smooth(), "{name} n={n}");
        }
    }
}

#[test]
fn smooth_corpus_fans_have_strongly_convex_cones() {
    for (name, fan) in corpus() {
        assert!(fan.is_smooth(), "{name}");
        for cone in fan.max_cones() {
            assert!(
                fan.is_strongly_convex(&Cone::new(cone.generator_indices().to_vec())),
                "{name}"
            );
        }
    }
}

/// Textbook monic Euclid over Q(i), as an independent route for gcd checks.
fn euclid_gcd(a: &qtoric::poly::Polynomial, b: &qtoric::poly::Polynomial) -> qtoric::poly::Polynomial {
    let (mut f, mut g) = (a.clone(), b.clone());
    while !g.is_zero() {
        let (_, r) = f.div_rem(&g);
        f = g;
        g = r;
    }
    f.monic()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subresultant_gcd_agrees_with_monic_euclid(
        left in prop::collection::vec((0usize..6, 1usize..3), 1..4),
        right in prop::collection::vec((0usize..6, 1usize..3), 1..4),
        shared in prop::collection::vec((0usize..6, 1usize..3), 0..3),
    ) {
        let pool = [
            GaussianRational::from_int(1),
            GaussianRational::from_int(-2),
            GaussianRational::from_parts(1, 3, 0, 1),
            GaussianRational::i(),
            GaussianRational::from_parts(0, 1, -1, 2),
            GaussianRational::from_parts(3, 2, 1, 1),
        ];
        let build = |picks: &[(usize, usize)]| {
            let mut d = Divisor::empty();
            for (idx, mult) in picks {
                d.add(pool[*idx].clone(), *mult);
            }
            divisor_to_polynomial(&d).to_polynomial()
        };
        let common = build(&shared);
        let f = &build(&left) * &common;
        let g = &build(&right) * &common;
        prop_assert_eq!(qtoric::poly::gcd(&f, &g), euclid_gcd(&f, &g));
    }

    #[test]
    fn complex_reconstruction_from_minimal_non_faces(
        vertices in 2usize..7,
        raw in prop::collection::vec(prop::collection::vec(0usize..7, 2..4), 0..6),
    ) {
        let sets: Vec<Vec<usize>> = raw
            .iter()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|v| v % vertices).collect();
                t.sort_unstable();
                t.dedup();
                t
            })
            .filter(|t| t.len() >= 2)
            .collect();
        let k = SimplicialComplex::from_min_non_faces(vertices, &sets).unwrap();
        prop_assert_eq!(k.min_non_faces(), k.minimal_non_faces_by_enumeration().unwrap());
    }

    #[test]
    fn divisor_polynomial_round_trip(
        picks in prop::collection::vec((0usize..7, 1usize..4), 1..5),
    ) {
        let pool = [
            GaussianRational::from_int(0),
            GaussianRational::from_int(2),
            GaussianRational::from_int(-3),
            GaussianRational::from_parts(1, 2, 0, 1),
            GaussianRational::i(),
            GaussianRational::from_parts(-1, 1, 2, 1),
            GaussianRational::from_parts(2, 3, -1, 5),
        ];
        let mut d = Divisor::empty();
        for (idx, mult) in picks {
            d.add(pool[idx].clone(), mult);
        }
        let f = divisor_to_polynomial(&d);
        prop_assert_eq!(f.degree(), d.degree());
        let back = polynomial_to_divisor(&f).unwrap();
        prop_assert_eq!(back, d);
    }

    #[test]
    fn power_identity_on_random_complexes(
        vertices in 2usize..5,
        raw in prop::collection::vec(prop::collection::vec(0usize..5, 2..4), 1..4),
        n in 1usize..4,
    ) {
        let sets: Vec<Vec<usize>> = raw
            .iter()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|v| v % vertices).collect();
                t.sort_unstable();
                t.dedup();
                t
            })
            .filter(|t| t.len() >= 2)
            .collect();
        prop_assume!(!sets.is_empty());
        let k = SimplicialComplex::from_min_non_faces(vertices, &sets).unwrap();
        let kn = power_complex(&k, n).unwrap();
        let expected: Vec<Vec<usize>> = k
            .min_non_faces()
            .iter()
            .map(|tau| tau.iter().flat_map(|&i| (0..n).map(move |j| i * n + j)).collect())
            .collect();
        let mut expected = expected;
        expected.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
        prop_assert_eq!(kn.min_non_faces(), expected);
        if let (Ok(a), Ok(b)) = (kn.min_non_face_size(), k.min_non_face_size()) {
            prop_assert_eq!(a, n * b);
        }
    }
}
