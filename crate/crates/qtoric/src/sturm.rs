//! Sturm-sequence real root counting and isolation for rational polynomials.
//!
//! Everything is exact over Q. The entry points accept polynomials over Q(i)
//! and first reduce real-root questions to the rational gcd of the real and
//! imaginary coefficient parts.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::num::GaussianRational;
use crate::poly::{gcd, Polynomial};

/// Rational polynomial as ascending coefficients without trailing zeros.
type RatPoly = Vec<BigRational>;

fn rp_degree(p: &RatPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn rp_eval(p: &RatPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn rp_derivative(p: &RatPoly) -> RatPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
        .collect()
}

fn rp_neg_rem(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let db = rp_degree(b).expect("nonzero divisor");
    let lb = b[db].clone();
    let mut r = a.clone();
    while let Some(dr) = rp_degree(&r) {
        if dr < db {
            break;
        }
        let q = &r[dr] / &lb;
        let shift = dr - db;
        for (k, bc) in b.iter().enumerate().take(db + 1) {
            let s = &q * bc;
            r[shift + k] -= s;
        }
        r.truncate(dr);
    }
    r.truncate(rp_degree(&r).map_or(0, |d| d + 1));
    r.iter().map(|c| -c.clone()).collect()
}

fn to_rat_poly(p: &Polynomial) -> RatPoly {
    p.coeffs().iter().map(|c| c.re.clone()).collect()
}

/// Sturm chain of a squarefree rational polynomial.
fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone()];
    let d = rp_derivative(p);
    if rp_degree(&d).is_none() {
        return chain;
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let r = rp_neg_rem(&chain[n - 2], &chain[n - 1]);
        if rp_degree(&r).is_none() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign(x: &BigRational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

fn variations_at(chain: &[RatPoly], x: &BigRational) -> usize {
    variations(chain.iter().map(|p| sign(&rp_eval(p, x))))
}

fn variations_at_neg_inf(chain: &[RatPoly]) -> usize {
    variations(chain.iter().map(|p| match rp_degree(p) {
        None => 0,
        Some(d) => {
            let s = sign(&p[d]);
            if d % 2 == 0 {
                s
            } else {
                -s
            }
        }
    }))
}

fn variations_at_pos_inf(chain: &[RatPoly]) -> usize {
    variations(chain.iter().map(|p| match rp_degree(p) {
        None => 0,
        Some(d) => sign(&p[d]),
    }))
}

/// Bound `B` with every real root of `p` inside `(-B, B)`.
fn root_bound(p: &RatPoly) -> BigRational {
    let d = rp_degree(p).expect("nonzero polynomial");
    let lead = p[d].clone();
    let mut m = BigRational::zero();
    for c in &p[..d] {
        let a = (c / &lead).abs();
        if a > m {
            m = a;
        }
    }
    m + BigRational::one()
}

/// Squarefree part `p / gcd(p, p')` of a rational polynomial.
fn squarefree_part(p: &RatPoly) -> RatPoly {
    let poly = Polynomial::from_coeffs(
        p.iter()
            .map(|c| GaussianRational::real(c.clone()))
            .collect(),
    );
    let g = gcd(&poly, &poly.derivative());
    let (q, r) = poly.div_rem(&g);
    debug_assert!(r.is_zero());
    to_rat_poly(&q.monic())
}

/// Reduce a nonzero polynomial over Q(i) to the real polynomial whose real
/// roots are exactly the real roots of the input: the rational gcd of the
/// real and imaginary coefficient parts.
fn real_root_carrier(g: &Polynomial) -> Result<Polynomial> {
    if g.is_zero() {
        return Err(Error::InvalidInput(
            "real-root test on the zero polynomial".into(),
        ));
    }
    let (re, im) = g.real_imag_parts();
    let rp = Polynomial::from_coeffs(re.into_iter().map(GaussianRational::real).collect());
    let ip = Polynomial::from_coeffs(im.into_iter().map(GaussianRational::real).collect());
    Ok(gcd(&rp, &ip))
}

/// Number of distinct real roots of a nonzero polynomial over Q(i).
pub fn count_real_roots(g: &Polynomial) -> Result<usize> {
    let h = real_root_carrier(g)?;
    if h.degree().is_none_or(|d| d == 0) {
        return Ok(0);
    }
    let sf = squarefree_part(&to_rat_poly(&h));
    let chain = sturm_chain(&sf);
    Ok(variations_at_neg_inf(&chain) - variations_at_pos_inf(&chain))
}

/// True when the polynomial has at least one real root.
pub fn has_real_root(g: &Polynomial) -> Result<bool> {
    Ok(count_real_roots(g)? > 0)
}

/// Disjoint rational intervals `(a, b]`, one per distinct real root,
/// in increasing order.
pub fn isolate_real_roots(g: &Polynomial) -> Result<Vec<(BigRational, BigRational)>> {
    let h = real_root_carrier(g)?;
    if h.degree().is_none_or(|d| d == 0) {
        return Ok(Vec::new());
    }
    let sf = squarefree_part(&to_rat_poly(&h));
    let chain = sturm_chain(&sf);
    let bound = root_bound(&sf);
    let lo = -bound.clone();
    let total = variations_at(&chain, &lo) - variations_at(&chain, &bound);
    let mut out = Vec::new();
    if total > 0 {
        isolate_rec(&chain, lo, bound, total, &mut out);
    }
    Ok(out)
}

fn isolate_rec(
    chain: &[RatPoly],
    lo: BigRational,
    hi: BigRational,
    count: usize,
    out: &mut Vec<(BigRational, BigRational)>,
) {
    if count == 0 {
        return;
    }
    if count == 1 {
        out.push((lo, hi));
        return;
    }
    let mid = (&lo + &hi) / BigRational::from_integer(BigInt::from(2));
    let vm = variations_at(chain, &mid);
    let left = variations_at(chain, &lo) - vm;
    let right = vm - variations_at(chain, &hi);
    isolate_rec(chain, lo, mid.clone(), left, out);
    isolate_rec(chain, mid, hi, right, out);
}
