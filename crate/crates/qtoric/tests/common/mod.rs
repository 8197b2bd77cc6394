//! Shared fixtures for the integration suites: the fan corpus and a
//! deterministic generator of planted polynomial systems whose membership
//! is known from their root data.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qtoric::complex::SimplicialComplex;
use qtoric::configs::{divisor_to_polynomial, Divisor, DivisorSystem};
use qtoric::fan::Fan;
use qtoric::num::GaussianRational;
use qtoric::polysys::{Field, PolySystem};

pub fn cp1() -> Fan {
    Fan::from_ints(1, &[&[1], &[-1]], &[&[0], &[1]]).unwrap()
}

pub fn cp2() -> Fan {
    Fan::from_ints(
        2,
        &[&[1, 0], &[0, 1], &[-1, -1]],
        &[&[0, 1], &[1, 2], &[0, 2]],
    )
    .unwrap()
}

pub fn cp1xcp1() -> Fan {
    Fan::from_ints(
        2,
        &[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
    )
    .unwrap()
}

pub fn hirzebruch(a: i64) -> Fan {
    Fan::from_ints(
        2,
        &[&[1, 0], &[0, 1], &[-1, a], &[0, -1]],
        &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]],
    )
    .unwrap()
}

/// The whole corpus: projective line and plane, the product of two lines,
/// and the first four Hirzebruch-type fans (the a = 0 member coincides with
/// the product up to ray order and is kept for the sweep).
pub fn corpus() -> Vec<(&'static str, Fan)> {
    vec![
        ("cp1", cp1()),
        ("cp2", cp2()),
        ("cp1xcp1", cp1xcp1()),
        ("hirzebruch0", hirzebruch(0)),
        ("hirzebruch1", hirzebruch(1)),
        ("hirzebruch2", hirzebruch(2)),
        ("hirzebruch3", hirzebruch(3)),
    ]
}

fn q(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A planted system: explicit root data per polynomial plus the induced
/// coefficient system.
pub struct Planted {
    pub divisors: Vec<Divisor>,
    pub system: PolySystem,
}

/// Ground-truth membership from root data: no minimal non-face may carry a
/// common root of multiplicity >= n (restricted to real points when
/// `real_only`).
pub fn ground_truth(
    divisors: &[Divisor],
    k: &SimplicialComplex,
    n: usize,
    real_only: bool,
) -> bool {
    for sigma in k.min_non_faces() {
        let first = &divisors[sigma[0]];
        for (pt, _) in first.points() {
            if real_only && !pt.is_real() {
                continue;
            }
            let common = sigma
                .iter()
                .map(|&i| divisors[i].multiplicity(pt))
                .min()
                .unwrap();
            if common >= n {
                return false;
            }
        }
    }
    true
}

/// Small pool of candidate roots: rationals on the real line plus a few
/// conjugate pairs off it.
fn root_pool() -> Vec<GaussianRational> {
    let mut pool = Vec::new();
    for v in [-3i64, -1, 0, 1, 2, 5] {
        pool.push(GaussianRational::real(q(v, 1)));
    }
    pool.push(GaussianRational::real(q(1, 2)));
    pool.push(GaussianRational::real(q(-5, 3)));
    for (re, im) in [(0i64, 1i64), (1, 1), (-2, 3)] {
        pool.push(GaussianRational::new(q(re, 1), q(im, 1)));
    }
    pool
}

/// Draw a planted system: degrees `<= max_degree`, bound `n`, `r` equal to
/// the vertex count of `k`. Real systems use real points and conjugate
/// pairs so the coefficients stay real. Deterministic in the rng.
pub fn plant_system(
    rng: &mut ChaCha8Rng,
    r: usize,
    n: usize,
    field: Field,
    max_degree: usize,
) -> Planted {
    let pool = root_pool();
    let divisors: Vec<Divisor> = (0..r)
        .map(|_| {
            let degree = rng.gen_range(1..=max_degree);
            let mut d = Divisor::empty();
            let mut left = degree;
            while left > 0 {
                let mult = rng.gen_range(1..=left.min(n + 1));
                let idx = rng.gen_range(0..pool.len());
                let pt = pool[idx].clone();
                match field {
                    Field::Real => {
                        if pt.is_real() {
                            d.add(pt, mult);
                            left -= mult;
                        } else if 2 * mult <= left {
                            // conjugate pairs keep the coefficients real
                            d.add(pt.clone(), mult);
                            d.add(pt.conj(), mult);
                            left -= 2 * mult;
                        }
                    }
                    Field::Complex => {
                        d.add(pt, mult);
                        left -= mult;
                    }
                }
            }
            d
        })
        .collect();
    let polys = divisors.iter().map(divisor_to_polynomial).collect();
    let system = PolySystem::new(field, n, polys).expect("planted system is well formed");
    Planted { divisors, system }
}

/// Planted divisor system with the same drawing rules.
pub fn plant_divisor_system(
    rng: &mut ChaCha8Rng,
    r: usize,
    n: usize,
    field: Field,
    max_degree: usize,
) -> DivisorSystem {
    let p = plant_system(rng, r, n, field, max_degree);
    DivisorSystem::new(field, n, p.divisors).expect("planted divisors are well formed")
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
