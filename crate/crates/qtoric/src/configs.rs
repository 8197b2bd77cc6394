//! The divisor (configuration) model: monic polynomials as finite multisets
//! of exact points, membership at the level of root data, stabilization into
//! a half-plane with fresh anchor roots, and strip-clipping scanning.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::gaussint::{divisors_up_to_units_bounded, GaussInt};
use crate::num::GaussianRational;
use crate::poly::{MonicPolynomial, Polynomial};
use crate::polysys::Field;

/// Finite formal sum of distinct exact points with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Divisor {
    entries: BTreeMap<GaussianRational, usize>,
}

impl Divisor {
    pub fn empty() -> Self {
        Divisor::default()
    }

    pub fn from_points(points: &[(GaussianRational, usize)]) -> Result<Self> {
        let mut d = Divisor::empty();
        for (pt, mult) in points {
            if *mult == 0 {
                return Err(Error::InvalidInput("zero multiplicity".into()));
            }
            if d.entries.insert(pt.clone(), *mult).is_some() {
                return Err(Error::InvalidInput(format!("duplicate point {pt}")));
            }
        }
        Ok(d)
    }

    pub fn add(&mut self, pt: GaussianRational, mult: usize) {
        if mult > 0 {
            *self.entries.entry(pt).or_insert(0) += mult;
        }
    }

    pub fn points(&self) -> impl Iterator<Item = (&GaussianRational, usize)> {
        self.entries.iter().map(|(p, &m)| (p, m))
    }

    pub fn multiplicity(&self, pt: &GaussianRational) -> usize {
        self.entries.get(pt).copied().unwrap_or(0)
    }

    /// Sum of multiplicities.
    pub fn degree(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn conj(&self) -> Divisor {
        let mut d = Divisor::empty();
        for (p, m) in self.points() {
            d.add(p.conj(), m);
        }
        d
    }

    /// Conjugation closed with equal multiplicities on conjugate points.
    pub fn is_conjugation_closed(&self) -> bool {
        self.points()
            .all(|(p, m)| self.multiplicity(&p.conj()) == m)
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "(empty)");
        }
        let parts: Vec<String> = self
            .points()
            .map(|(p, m)| {
                if m == 1 {
                    format!("{p}")
                } else {
                    format!("{p}:{m}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An r-tuple of divisors with a multiplicity bound and field marker.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorSystem {
    pub field: Field,
    pub n: usize,
    pub divisors: Vec<Divisor>,
}

impl DivisorSystem {
    pub fn new(field: Field, n: usize, divisors: Vec<Divisor>) -> Result<Self> {
        if n == 0 {
            return Err(Error::RangeError(
                "multiplicity bound n must be >= 1".into(),
            ));
        }
        let sys = DivisorSystem { field, n, divisors };
        if sys.field == Field::Real && !sys.is_conjugation_closed() {
            return Err(Error::InvalidInput(
                "system marked real is not conjugation closed".into(),
            ));
        }
        Ok(sys)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.divisors.iter().map(Divisor::degree).collect()
    }

    pub fn is_conjugation_closed(&self) -> bool {
        self.divisors.iter().all(Divisor::is_conjugation_closed)
    }

    pub fn conj(&self) -> DivisorSystem {
        DivisorSystem {
            field: self.field,
            n: self.n,
            divisors: self.divisors.iter().map(Divisor::conj).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: DivisorSystemFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut divisors = Vec::with_capacity(file.divisors.len());
        for entries in file.divisors {
            let points: Vec<(GaussianRational, usize)> =
                entries.into_iter().map(|e| (e.pt, e.mult)).collect();
            divisors.push(Divisor::from_points(&points)?);
        }
        DivisorSystem::new(file.field, file.n, divisors)
    }

    pub fn to_json(&self) -> String {
        let file = DivisorSystemFile {
            field: self.field,
            n: self.n,
            divisors: self
                .divisors
                .iter()
                .map(|d| {
                    d.points()
                        .map(|(p, m)| PointEntry {
                            pt: p.clone(),
                            mult: m,
                        })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("divisor system serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct PointEntry {
    pt: GaussianRational,
    mult: usize,
}

#[derive(Serialize, Deserialize)]
struct DivisorSystemFile {
    field: Field,
    n: usize,
    divisors: Vec<Vec<PointEntry>>,
}

/// Expand the monic polynomial with the divisor's roots: the product of
/// `(z - p)^m` over the divisor.
pub fn divisor_to_polynomial(d: &Divisor) -> MonicPolynomial {
    let mut p = Polynomial::one();
    for (pt, m) in d.points() {
        for _ in 0..m {
            p = p.mul_linear(pt);
        }
    }
    MonicPolynomial::from_polynomial(&p).expect("a product of monic linears is monic")
}

/// Recover the divisor of roots of a monic polynomial when every root lies
/// in Q(i). Exhaustive Gaussian rational-root extraction: after scaling by
/// the coefficient denominator lcm the candidate roots are Gaussian-integer
/// divisors of the constant term. Partial by design: a polynomial with a
/// root outside Q(i) is rejected.
pub fn polynomial_to_divisor(f: &MonicPolynomial) -> Result<Divisor> {
    let mut d = Divisor::empty();
    let mut p = f.to_polynomial();
    // strip roots at zero first so constant terms below are nonzero
    loop {
        match p.degree() {
            None => unreachable!("monic polynomials are nonzero"),
            Some(0) => break,
            Some(_) => {}
        }
        if !p.coeff(0).is_zero() {
            break;
        }
        d.add(GaussianRational::zero(), 1);
        let coeffs = p.coeffs()[1..].to_vec();
        p = Polynomial::from_coeffs(coeffs);
    }
    while p.degree().is_some_and(|deg| deg > 0) {
        let root = find_gaussian_root(&p)?
            .ok_or_else(|| Error::NotSplittable(format!("no Q(i) root of {p}")))?;
        let linear = Polynomial::from_coeffs(vec![-&root, GaussianRational::one()]);
        let (q, rem) = p.div_rem(&linear);
        debug_assert!(rem.is_zero());
        d.add(root, 1);
        p = q;
    }
    Ok(d)
}

/// Some Q(i)-root of `p` (nonzero constant term), or `None`.
fn find_gaussian_root(p: &Polynomial) -> Result<Option<GaussianRational>> {
    // scale z = w / m so the polynomial becomes monic over Z[i];
    // then any Q(i) root w is a Gaussian integer dividing the constant
    let mut m = BigInt::one();
    for c in p.coeffs() {
        use num_integer::Integer;
        m = m.lcm(c.re.denom());
        m = m.lcm(c.im.denom());
    }
    let deg = p.degree().expect("nonzero polynomial");
    let scale = GaussianRational::real(BigRational::from_integer(m.clone()));
    // g(w) = m^deg p(w/m), computed coefficientwise: g_k = p_k m^(deg-k)
    let g: Vec<GaussianRational> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * scale.pow((deg - k) as i64).expect("positive power"))
        .collect();
    let constant = GaussInt::new(g[0].re.numer().clone(), g[0].im.numer().clone());
    debug_assert!(g[0].re.denom().is_one() && g[0].im.denom().is_one());
    debug_assert!(!constant.is_zero());
    // cheap divisibility filters: a root w also satisfies (w - t) | g(t)
    let eval_at_int = |t: i64| -> GaussInt {
        let mut acc = GaussInt::zero();
        for c in g.iter().rev() {
            acc = &(&acc * &GaussInt::from_int(t))
                + &GaussInt::new(c.re.numer().clone(), c.im.numer().clone());
        }
        acc
    };
    let g_at_one = eval_at_int(1);
    let g_at_minus_one = eval_at_int(-1);
    // Cauchy bound on the original polynomial: |root| <= 1 + max |coeff|,
    // so norm(w) = m^2 |root|^2 is capped; prune the divisor enumeration
    let coeff_bound = p
        .coeffs()
        .iter()
        .map(|c| c.re.abs() + c.im.abs())
        .max()
        .expect("nonzero polynomial")
        + BigRational::one();
    let cap_rat =
        BigRational::from_integer(&m * &m) * &coeff_bound * &coeff_bound;
    let norm_cap = cap_rat.ceil().to_integer();
    for base in divisors_up_to_units_bounded(&constant, Some(&norm_cap)) {
        for unit in [
            GaussInt::one(),
            GaussInt::from_int(-1),
            GaussInt::new(BigInt::zero(), BigInt::one()),
            GaussInt::new(BigInt::zero(), -BigInt::one()),
        ] {
            let w = &base * &unit;
            if !g_at_one.is_zero() {
                let shifted = &w - &GaussInt::one();
                if !shifted.is_zero() && !shifted.divides(&g_at_one) {
                    continue;
                }
            }
            if !g_at_minus_one.is_zero() {
                let shifted = &w + &GaussInt::one();
                if !shifted.is_zero() && !shifted.divides(&g_at_minus_one) {
                    continue;
                }
            }
            let cand = GaussianRational::new(
                BigRational::new(w.re.clone(), m.clone()),
                BigRational::new(w.im.clone(), m.clone()),
            );
            if p.eval(&cand).is_zero() {
                return Ok(Some(cand));
            }
        }
    }
    Ok(None)
}

/// Membership at the divisor level: for every minimal non-face, the
/// pointwise minimum multiplicity over its divisors, restricted to real
/// points, stays below `n`.
pub fn divisor_membership(sys: &DivisorSystem, k: &SimplicialComplex) -> Result<bool> {
    if sys.divisors.len() != k.num_vertices() {
        return Err(Error::ShapeError(format!(
            "system has {} divisors, complex has {} vertices",
            sys.divisors.len(),
            k.num_vertices()
        )));
    }
    for sigma in k.min_non_faces() {
        let first = &sys.divisors[sigma[0]];
        for (pt, m0) in first.points() {
            if !pt.is_real() {
                continue;
            }
            let common = sigma
                .iter()
                .map(|&i| sys.divisors[i].multiplicity(pt))
                .min()
                .unwrap_or(m0);
            if common >= sys.n {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Total degree of the system, the anchor offset for stabilization.
pub fn total_degree(sys: &DivisorSystem) -> usize {
    sys.degrees().iter().sum()
}

/// The half-plane squash: a strictly increasing piecewise-rational
/// homeomorphism of the real line onto `(-inf, bound)` applied to real
/// parts, leaving imaginary parts untouched. Below `bound - 2` it is the
/// identity; above, `x` maps to `bound - 2 + t/(1+t)` with
/// `t = x - bound + 2`.
pub fn squash_point(p: &GaussianRational, bound: &BigRational) -> GaussianRational {
    let knee = bound - BigRational::from_integer(BigInt::from(2));
    if p.re <= knee {
        return p.clone();
    }
    let t = &p.re - &knee;
    let re = &knee + &t / (BigRational::one() + &t);
    GaussianRational::new(re, p.im.clone())
}

/// Stabilize: squash every point into the half-plane of real part below the
/// total degree, then adjoin `a_i` copies of the real anchor point
/// `total_degree + i + 1` to the i-th divisor. Degrees grow by `a`; real
/// systems stay real; the map commutes with conjugation pointwise.
pub fn stabilize(sys: &DivisorSystem, a: &[usize]) -> Result<DivisorSystem> {
    if a.len() != sys.divisors.len() {
        return Err(Error::ShapeError(format!(
            "{} increments for {} divisors",
            a.len(),
            sys.divisors.len()
        )));
    }
    if a.iter().all(|&x| x == 0) {
        return Err(Error::InvalidInput(
            "the degree increment must be nonzero".into(),
        ));
    }
    let bound = BigRational::from_integer(BigInt::from(total_degree(sys) as i64));
    let mut divisors = Vec::with_capacity(sys.divisors.len());
    for (i, d) in sys.divisors.iter().enumerate() {
        let mut nd = Divisor::empty();
        for (pt, m) in d.points() {
            nd.add(squash_point(pt, &bound), m);
        }
        if a[i] > 0 {
            let anchor = GaussianRational::real(
                &bound + BigRational::from_integer(BigInt::from(i as i64 + 1)),
            );
            nd.add(anchor, a[i]);
        }
        divisors.push(nd);
    }
    DivisorSystem::new(sys.field, sys.n, divisors)
}

/// Clip to the open vertical strip of half-width `eps` around `x`
/// intersected with the open unit band around the real axis: keep the
/// points `w` with `|Re(w) - x| < eps` and `|Im(w)| < 1`, multiplicities
/// unchanged.
pub fn scan_at(sys: &DivisorSystem, x: &BigRational, eps: &BigRational) -> Result<DivisorSystem> {
    if !eps.is_positive() {
        return Err(Error::RangeError(
            "strip half-width must be positive".into(),
        ));
    }
    let one = BigRational::one();
    let mut divisors = Vec::with_capacity(sys.divisors.len());
    for d in &sys.divisors {
        let mut nd = Divisor::empty();
        for (pt, m) in d.points() {
            if (&pt.re - x).abs() < *eps && pt.im.abs() < one {
                nd.add(pt.clone(), m);
            }
        }
        divisors.push(nd);
    }
    // clipping a conjugation-closed system stays closed, so the field
    // marker carries over
    DivisorSystem::new(sys.field, sys.n, divisors)
}
