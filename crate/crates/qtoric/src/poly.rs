//! Dense univariate polynomials over Q(i).
//!
//! `Polynomial` stores coefficients in ascending degree order; the vector is
//! empty for the zero polynomial and otherwise ends with a nonzero
//! coefficient. `MonicPolynomial` is the constrained form used by polynomial
//! systems: the leading 1 is implicit and only the lower coefficients are
//! stored.
//!
//! Gcds run on denominator-cleared Gaussian-integer coefficients through a
//! subresultant remainder sequence, which keeps intermediate coefficients
//! from exploding, and are normalized monic at the end.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gaussint::GaussInt;
use crate::num::GaussianRational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// Coefficients in ascending degree order; trailing zeros are stripped.
    pub fn from_coeffs(coeffs: Vec<GaussianRational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(
            coeffs
                .iter()
                .map(|&c| GaussianRational::from_int(c))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    pub fn conj_coeffs(&self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c.conj()).collect())
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * GaussianRational::real(BigRational::from_integer(BigInt::from(k))))
            .collect();
        Polynomial::from_coeffs(coeffs)
    }

    pub fn nth_derivative(&self, n: usize) -> Polynomial {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derivative();
        }
        p
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    /// Divide by a nonzero polynomial over the field Q(i).
    pub fn div_rem(&self, rhs: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        let db = rhs.degree().unwrap();
        let lb = rhs.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![GaussianRational::zero(); self.coeffs.len().saturating_sub(db)];
        while rem.len() > db {
            let lr = rem.last().unwrap().clone();
            if lr.is_zero() {
                rem.pop();
                continue;
            }
            let shift = rem.len() - 1 - db;
            let q = &lr / &lb;
            for (k, b) in rhs.coeffs.iter().enumerate() {
                let s = &q * b;
                rem[shift + k] -= &s;
            }
            quot[shift] = q;
            rem.pop();
        }
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Scale so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                Polynomial::from_coeffs(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// `self * (x - root)`.
    pub fn mul_linear(&self, root: &GaussianRational) -> Polynomial {
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k + 1] += c;
            let s = c * root;
            out[k] -= &s;
        }
        Polynomial::from_coeffs(out)
    }

    /// Real and imaginary coefficient parts as rational vectors (ascending).
    pub fn real_imag_parts(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let re = self.coeffs.iter().map(|c| c.re.clone()).collect();
        let im = self.coeffs.iter().map(|c| c.im.clone()).collect();
        (strip_zeros(re), strip_zeros(im))
    }
}

fn strip_zeros(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let mut c = self
                .coeffs
                .get(k)
                .cloned()
                .unwrap_or_else(GaussianRational::zero);
            if let Some(b) = rhs.coeffs.get(k) {
                c += b;
            }
            out.push(c);
        }
        Polynomial::from_coeffs(out)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let s = a * b;
                out[i + j] += &s;
            }
        }
        Polynomial::from_coeffs(out)
    }
}

// ---- gcd via subresultant remainder sequences ----

/// Monic gcd over Q(i). `gcd(0, 0) = 0`; otherwise the result is monic.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return Polynomial::one();
    }
    let (mut f, mut g) = (clear_denominators(a), clear_denominators(b));
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    let d = subresultant_gcd(f, g);
    Polynomial::from_coeffs(d.iter().map(GaussInt::to_rational).collect()).monic()
}

/// Monic gcd of several polynomials; zero entries are skipped.
pub fn gcd_many(polys: &[Polynomial]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for p in polys {
        acc = gcd(&acc, p);
        if acc.degree() == Some(0) {
            return acc;
        }
    }
    acc
}

fn clear_denominators(p: &Polynomial) -> Vec<GaussInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.re.denom());
        lcm = lcm.lcm(c.im.denom());
    }
    let ints: Vec<GaussInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let re = c.re.numer() * (&lcm / c.re.denom());
            let im = c.im.numer() * (&lcm / c.im.denom());
            GaussInt::new(re, im)
        })
        .collect();
    primitive_part(ints)
}

fn content(p: &[GaussInt]) -> GaussInt {
    let mut g = GaussInt::zero();
    for c in p {
        if !c.is_zero() {
            g = if g.is_zero() {
                c.normalize_assoc()
            } else {
                g.gcd(c)
            };
        }
    }
    g
}

fn primitive_part(p: Vec<GaussInt>) -> Vec<GaussInt> {
    let c = content(&p);
    if c.is_zero() {
        return p;
    }
    p.iter().map(|x| x.exact_div(&c)).collect()
}

fn deg(p: &[GaussInt]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

/// Pseudo-remainder scaled exactly by `lc(b)^(deg a - deg b + 1)`.
fn pseudo_rem(a: &[GaussInt], b: &[GaussInt]) -> Vec<GaussInt> {
    let da = deg(a).expect("nonzero dividend");
    let db = deg(b).expect("nonzero divisor");
    let lb = b[db].clone();
    let mut r: Vec<GaussInt> = a.to_vec();
    let mut e = (da - db + 1) as i64;
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        r.truncate(dr + 1);
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (k, bc) in b.iter().enumerate().take(db + 1) {
            let s = &lr * bc;
            r[shift + k] = &r[shift + k] - &s;
        }
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r.truncate(deg(&r).map_or(0, |d| d + 1));
    r
}

/// Subresultant remainder sequence over Z[i]; inputs are primitive and
/// `deg f >= deg g >= 1`. Returns the last nonzero remainder (not primitive).
fn subresultant_gcd(f: Vec<GaussInt>, g: Vec<GaussInt>) -> Vec<GaussInt> {
    let mut prev = f;
    let mut cur = g;
    let mut n_prev = deg(&prev).unwrap();
    let mut n_cur = deg(&cur).unwrap();
    let mut a_prev = GaussInt::one();
    let mut c_prev = GaussInt::one();

    loop {
        let rem = pseudo_rem(&prev, &cur);
        let delta = n_prev - n_cur;
        let neg_c = (-&c_prev).pow(delta as u32);
        let divisor = &(-&a_prev) * &neg_c;
        let next: Vec<GaussInt> = rem.iter().map(|c| c.exact_div(&divisor)).collect();

        let Some(n_next) = deg(&next) else {
            return cur;
        };
        let a_cur = cur[n_cur].clone();
        // c_cur = a_cur^delta * c_prev^(1 - delta), with the negative power
        // as an exact division
        let c_cur = if delta == 0 {
            c_prev.clone()
        } else {
            let num = a_cur.pow(delta as u32);
            let den = c_prev.pow((delta - 1) as u32);
            num.exact_div(&den)
        };

        prev = cur;
        cur = next;
        n_prev = n_cur;
        n_cur = n_next;
        a_prev = a_cur;
        c_prev = c_cur;
    }
}

// ---- monic form ----

/// A monic polynomial of fixed degree; the leading 1 is implicit and `low`
/// holds the coefficients of `z^0 .. z^(degree-1)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonicPolynomial {
    low: Vec<GaussianRational>,
}

impl MonicPolynomial {
    pub fn new(low: Vec<GaussianRational>) -> Self {
        MonicPolynomial { low }
    }

    /// Constant polynomial 1 (degree zero, the empty product).
    pub fn one() -> Self {
        MonicPolynomial { low: Vec::new() }
    }

    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        match p.leading() {
            Some(l) if *l == GaussianRational::one() => {
                let d = p.degree().unwrap();
                Ok(MonicPolynomial::new(p.coeffs()[..d].to_vec()))
            }
            _ => Err(Error::InvalidInput(format!("polynomial is not monic: {p}"))),
        }
    }

    /// Lower coefficients from machine integers, ascending.
    pub fn from_ints(low: &[i64]) -> Self {
        MonicPolynomial::new(low.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.low.len()
    }

    pub fn lower_coeffs(&self) -> &[GaussianRational] {
        &self.low
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut coeffs = self.low.clone();
        coeffs.push(GaussianRational::one());
        Polynomial::from_coeffs(coeffs)
    }

    pub fn is_real(&self) -> bool {
        self.low.iter().all(|c| c.is_real())
    }

    pub fn conj(&self) -> MonicPolynomial {
        MonicPolynomial::new(self.low.iter().map(|c| c.conj()).collect())
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        self.to_polynomial().eval(x)
    }
}

impl fmt::Display for MonicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}
