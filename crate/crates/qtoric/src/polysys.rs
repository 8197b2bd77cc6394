//! Systems of monic polynomials with bounded real root multiplicity.
//!
//! A system pairs a coefficient field marker (R or C inside Q(i)) with a
//! multiplicity bound `n` and one monic polynomial per ray of a fan. The
//! membership oracles decide, exactly, whether some minimal non-face of the
//! underlying complex carries a common root of multiplicity at least `n`:
//! on the real line only (the real-bounded space) or anywhere in the
//! algebraic closure (the stricter non-resultant space). Closed-form
//! stability and connectivity dimensions live here too.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::num::GaussianRational;
use crate::poly::{gcd, gcd_many, MonicPolynomial, Polynomial};
use crate::sturm;

/// Coefficient field marker: the real or complex points of the system space.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Field {
    #[serde(rename = "R")]
    Real,
    #[serde(rename = "C")]
    Complex,
}

impl Field {
    /// Real dimension of the coefficient field: 1 for R, 2 for C.
    pub fn real_dim(self) -> i64 {
        match self {
            Field::Real => 1,
            Field::Complex => 2,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Real => write!(f, "R"),
            Field::Complex => write!(f, "C"),
        }
    }
}

/// An r-tuple of monic polynomials with a multiplicity bound.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolySystem {
    pub field: Field,
    pub n: usize,
    pub polys: Vec<MonicPolynomial>,
}

impl PolySystem {
    pub fn new(field: Field, n: usize, polys: Vec<MonicPolynomial>) -> Result<Self> {
        if n == 0 {
            return Err(Error::RangeError(
                "multiplicity bound n must be >= 1".into(),
            ));
        }
        let sys = PolySystem { field, n, polys };
        if sys.field == Field::Real && !sys.is_real() {
            return Err(Error::InvalidInput(
                "system marked real has a non-real coefficient".into(),
            ));
        }
        Ok(sys)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.polys.iter().map(|p| p.degree()).collect()
    }

    pub fn is_real(&self) -> bool {
        self.polys.iter().all(|p| p.is_real())
    }

    /// Conjugate every coefficient.
    pub fn conj(&self) -> PolySystem {
        PolySystem {
            field: self.field,
            n: self.n,
            polys: self.polys.iter().map(|p| p.conj()).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let sys: PolySystem =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        PolySystem::new(sys.field, sys.n, sys.polys)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("system serializes")
    }
}

/// The probe tuple `(f, f + f', .., f + f^(n-1))`: all components vanish at
/// a point exactly when the point is a root of `f` of multiplicity >= n.
pub fn derivative_probe(f: &MonicPolynomial, n: usize) -> Result<Vec<MonicPolynomial>> {
    if n == 0 {
        return Err(Error::RangeError("probe length n must be >= 1".into()));
    }
    let base = f.to_polynomial();
    let mut out = Vec::with_capacity(n);
    out.push(f.clone());
    let mut deriv = base.clone();
    for _ in 1..n {
        deriv = deriv.derivative();
        let sum = &base + &deriv;
        out.push(
            MonicPolynomial::from_polynomial(&sum)
                .expect("adding a lower-degree polynomial keeps the leading 1"),
        );
    }
    Ok(out)
}

/// Monic polynomial whose roots are exactly the roots of `f` of multiplicity
/// at least `n`: the gcd of `f, f', .., f^(n-1)`. A multiplicity-k root of
/// `f` appears with multiplicity `k - n + 1`.
pub fn mult_locus(f: &MonicPolynomial, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::RangeError(
            "multiplicity bound n must be >= 1".into(),
        ));
    }
    let mut derivs = Vec::with_capacity(n);
    let mut d = f.to_polynomial();
    derivs.push(d.clone());
    for _ in 1..n {
        d = d.derivative();
        derivs.push(d.clone());
    }
    Ok(gcd_many(&derivs))
}

fn check_shapes(sys: &PolySystem, k: &SimplicialComplex) -> Result<()> {
    if sys.polys.len() != k.num_vertices() {
        return Err(Error::ShapeError(format!(
            "system has {} polynomials, complex has {} vertices",
            sys.polys.len(),
            k.num_vertices()
        )));
    }
    Ok(())
}

/// Common multiplicity locus along one vertex set: gcd over the set of the
/// per-polynomial multiplicity loci.
fn common_locus(sys: &PolySystem, sigma: &[usize]) -> Result<Polynomial> {
    let mut acc = Polynomial::zero();
    for &i in sigma {
        let li = mult_locus(&sys.polys[i], sys.n)?;
        acc = gcd(&acc, &li);
        if acc.degree() == Some(0) {
            break;
        }
    }
    Ok(acc)
}

/// Witness to a membership failure: a minimal non-face whose polynomials
/// share a real root of multiplicity >= n, with an isolating interval.
#[derive(Clone, Debug)]
pub struct RealViolation {
    pub sigma: Vec<usize>,
    pub interval: (BigRational, BigRational),
}

/// Membership in the real-bounded space: no minimal non-face of `k` carries
/// a common *real* root of multiplicity >= n. Testing minimal non-faces
/// suffices: a larger non-face's vanishing locus is contained in the locus
/// of any subset.
pub fn bounded_real_multiplicity(sys: &PolySystem, k: &SimplicialComplex) -> Result<bool> {
    Ok(real_violation(sys, k)?.is_none())
}

/// As `bounded_real_multiplicity`, but returns the failing non-face and an
/// isolating interval for a violating real root.
pub fn real_violation(sys: &PolySystem, k: &SimplicialComplex) -> Result<Option<RealViolation>> {
    check_shapes(sys, k)?;
    for sigma in k.min_non_faces() {
        let g = common_locus(sys, &sigma)?;
        debug_assert!(!g.is_zero());
        if g.degree().is_some_and(|d| d > 0) && sturm::has_real_root(&g)? {
            let intervals = sturm::isolate_real_roots(&g)?;
            let interval = intervals
                .into_iter()
                .next()
                .expect("a detected real root has an isolating interval");
            return Ok(Some(RealViolation { sigma, interval }));
        }
    }
    Ok(None)
}

/// Membership in the stricter non-resultant space: no minimal non-face
/// carries a common root of multiplicity >= n anywhere in the algebraic
/// closure, i.e. every common locus is constant.
pub fn bounded_closure_multiplicity(sys: &PolySystem, k: &SimplicialComplex) -> Result<bool> {
    check_shapes(sys, k)?;
    for sigma in k.min_non_faces() {
        let g = common_locus(sys, &sigma)?;
        if g.degree().is_some_and(|d| d > 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---- closed-form dimensions ----

/// Parameter bundle for the stability formulas.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StabilityParams {
    pub degrees: Vec<usize>,
    pub n: usize,
    pub r_min: usize,
    pub field: Field,
}

impl StabilityParams {
    pub fn new(degrees: Vec<usize>, n: usize, r_min: usize, field: Field) -> Result<Self> {
        if n == 0 {
            return Err(Error::RangeError("n must be >= 1".into()));
        }
        if r_min < 2 {
            return Err(Error::RangeError(
                "the minimal non-face size is always >= 2".into(),
            ));
        }
        if degrees.is_empty() {
            return Err(Error::RangeError("empty degree vector".into()));
        }
        Ok(StabilityParams {
            degrees,
            n,
            r_min,
            field,
        })
    }

    pub fn d_min(&self) -> usize {
        *self.degrees.iter().min().expect("nonempty degrees")
    }

    /// `floor(d_min / n)`, the truncation depth.
    pub fn depth(&self) -> i64 {
        (self.d_min() / self.n) as i64
    }

    /// `d(K) * n * r_min`, the slope constant of every vanishing line.
    pub fn slope(&self) -> i64 {
        self.field.real_dim() * self.n as i64 * self.r_min as i64
    }
}

/// An integer dimension plus a degeneracy flag for negative values.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Dimension {
    pub value: i64,
    pub degenerate: bool,
}

impl Dimension {
    fn new(value: i64) -> Self {
        Dimension {
            value,
            degenerate: value < 0,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if self.degenerate {
            write!(f, " (degenerate)")?;
        }
        Ok(())
    }
}

/// Stability dimension `(d(K) n r_min - 2) floor(d_min/n) - 2`.
pub fn stability_dimension(p: &StabilityParams) -> Dimension {
    Dimension::new((p.slope() - 2) * p.depth() - 2)
}

/// Stability dimension of the stricter closure-bounded space,
/// `(2 n r_min - 3) floor(d_min/n) - 2` (complex coefficients only).
pub fn closure_stability_dimension(p: &StabilityParams) -> Dimension {
    let slope = 2 * p.n as i64 * p.r_min as i64;
    Dimension::new((slope - 3) * p.depth() - 2)
}

/// The two parameter conditions guarding the main comparison maps. The
/// first makes the complex-coefficient space simply connected, the second
/// the real-coefficient space.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ConditionFlags {
    /// `d_min >= n >= 1`.
    pub complex_simply_connected: bool,
    /// `d_min >= n >= 1` and `(n, r_min) != (1, 2)`.
    pub real_simply_connected: bool,
}

pub fn condition_flags(p: &StabilityParams) -> ConditionFlags {
    let star = p.d_min() >= p.n && p.n >= 1;
    ConditionFlags {
        complex_simply_connected: star,
        real_simply_connected: star && (p.n, p.r_min) != (1, 2),
    }
}

/// Connectivity of the system space per the case analysis over
/// `(n, floor(d_min/n), r_min, field)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConnectivityBound {
    /// The space is `N`-connected.
    Connected(i64),
    /// Simply connected, with no higher bound asserted.
    SimplyConnected,
    /// Not even path-connected (real coefficients with `(n, r_min) = (1, 2)`).
    NotPathConnected,
    /// `d_min < n`: outside the case analysis.
    Degenerate,
}

impl fmt::Display for ConnectivityBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConnectivityBound::Connected(n) => write!(f, "{n}-connected"),
            ConnectivityBound::SimplyConnected => write!(f, "simply connected"),
            ConnectivityBound::NotPathConnected => write!(f, "not path-connected"),
            ConnectivityBound::Degenerate => write!(f, "degenerate (d_min < n)"),
        }
    }
}

pub fn connectivity_bound(p: &StabilityParams) -> ConnectivityBound {
    let depth = p.depth();
    if depth == 0 {
        return ConnectivityBound::Degenerate;
    }
    let r = p.r_min as i64;
    let n = p.n as i64;
    match p.field {
        Field::Complex => {
            let a = 2 * n * r;
            if n >= 2 {
                if depth >= 2 {
                    ConnectivityBound::Connected(a - 3)
                } else {
                    ConnectivityBound::Connected(a - 4)
                }
            } else if p.d_min() >= 2 {
                ConnectivityBound::Connected(a - 3)
            } else if r >= 3 {
                ConnectivityBound::Connected(a - 4)
            } else {
                ConnectivityBound::SimplyConnected
            }
        }
        Field::Real => {
            let a = n * r;
            if n >= 2 {
                if depth >= 2 {
                    ConnectivityBound::Connected(a - 3)
                } else if a >= 5 {
                    ConnectivityBound::Connected(a - 4)
                } else {
                    // n = r_min = 2
                    ConnectivityBound::SimplyConnected
                }
            } else if r == 2 {
                ConnectivityBound::NotPathConnected
            } else if p.d_min() >= 2 {
                if r >= 4 {
                    ConnectivityBound::Connected(a - 3)
                } else {
                    // r_min = 3
                    ConnectivityBound::SimplyConnected
                }
            } else if r >= 5 {
                ConnectivityBound::Connected(a - 4)
            } else {
                // r_min = 3 or 4
                ConnectivityBound::SimplyConnected
            }
        }
    }
}

// ---- sampling ----

/// Aggregate counts from `sample_systems`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SampleStats {
    pub count: usize,
    pub real_bounded_members: usize,
    pub closure_bounded_members: usize,
    pub discriminant_hits: usize,
}

/// Draw `count` random systems with rational coefficients of bounded
/// numerator and denominator and test membership against `k`. Deterministic
/// for a fixed seed; with `workers > 1` the draw splits into per-worker
/// streams whose seeds derive from the master seed by fixed arithmetic, so
/// the aggregate is schedule independent.
#[allow(clippy::too_many_arguments)]
pub fn sample_systems(
    k: &SimplicialComplex,
    degrees: &[usize],
    n: usize,
    field: Field,
    box_bound: u32,
    count: usize,
    seed: u64,
    workers: usize,
) -> Result<SampleStats> {
    if count == 0 || workers == 0 {
        return Err(Error::RangeError("count and workers must be >= 1".into()));
    }
    if degrees.len() != k.num_vertices() {
        return Err(Error::ShapeError(format!(
            "{} degrees for {} vertices",
            degrees.len(),
            k.num_vertices()
        )));
    }
    let bound = box_bound.max(1);
    let chunk = count.div_ceil(workers);
    let mut totals = SampleStats::default();
    let results: Vec<Result<SampleStats>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let lo = w * chunk;
            if lo >= count {
                break;
            }
            let take = chunk.min(count - lo);
            let worker_seed =
                seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(w as u64 + 1));
            handles.push(
                scope.spawn(move || sample_chunk(k, degrees, n, field, bound, take, worker_seed)),
            );
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("sampler thread"))
            .collect()
    });
    for r in results {
        let s = r?;
        totals.count += s.count;
        totals.real_bounded_members += s.real_bounded_members;
        totals.closure_bounded_members += s.closure_bounded_members;
        totals.discriminant_hits += s.discriminant_hits;
    }
    Ok(totals)
}

fn sample_chunk(
    k: &SimplicialComplex,
    degrees: &[usize],
    n: usize,
    field: Field,
    bound: u32,
    count: usize,
    seed: u64,
) -> Result<SampleStats> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut stats = SampleStats {
        count,
        ..Default::default()
    };
    for _ in 0..count {
        let polys: Vec<MonicPolynomial> = degrees
            .iter()
            .map(|&d| random_monic(&mut rng, d, field, bound))
            .collect();
        let sys = PolySystem::new(field, n, polys)?;
        if bounded_real_multiplicity(&sys, k)? {
            stats.real_bounded_members += 1;
        } else {
            stats.discriminant_hits += 1;
        }
        if bounded_closure_multiplicity(&sys, k)? {
            stats.closure_bounded_members += 1;
        }
    }
    Ok(stats)
}

fn random_rational(rng: &mut ChaCha8Rng, bound: u32) -> BigRational {
    let num = rng.gen_range(-(bound as i64)..=bound as i64);
    let den = rng.gen_range(1..=bound as i64);
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn random_monic(rng: &mut ChaCha8Rng, degree: usize, field: Field, bound: u32) -> MonicPolynomial {
    let low = (0..degree)
        .map(|_| match field {
            Field::Real => GaussianRational::real(random_rational(rng, bound)),
            Field::Complex => {
                GaussianRational::new(random_rational(rng, bound), random_rational(rng, bound))
            }
        })
        .collect();
    MonicPolynomial::new(low)
}
