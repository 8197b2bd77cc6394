//! Gaussian integers Z[i].
//!
//! Support for the subresultant remainder sequence (content extraction and
//! exact division) and for exhaustive root candidate enumeration when
//! splitting polynomials over Q(i).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::num::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    pub fn zero() -> Self {
        GaussInt::new(BigInt::zero(), BigInt::zero())
    }

    pub fn one() -> Self {
        GaussInt::new(BigInt::from(1), BigInt::zero())
    }

    pub fn from_int(n: i64) -> Self {
        GaussInt::new(BigInt::from(n), BigInt::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2 >= 0`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_rational(&self) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }

    /// Nearest-lattice-point division: `self = q * rhs + r` with
    /// `norm(r) <= norm(rhs) / 2`. This makes Z[i] Euclidean.
    pub fn div_rem(&self, rhs: &GaussInt) -> (GaussInt, GaussInt) {
        assert!(!rhs.is_zero(), "division by zero in Z[i]");
        let n = rhs.norm();
        let prod = self * &rhs.conj();
        let q = GaussInt::new(round_div(&prod.re, &n), round_div(&prod.im, &n));
        let r = self - &(&q * rhs);
        (q, r)
    }

    /// Exact division; panics if `rhs` does not divide `self`.
    pub fn exact_div(&self, rhs: &GaussInt) -> GaussInt {
        let (q, r) = self.div_rem(rhs);
        assert!(r.is_zero(), "non-exact division in Z[i]");
        q
    }

    pub fn divides(&self, other: &GaussInt) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Euclidean gcd, normalized so that re > 0 and im >= 0 (or 1 for units).
    pub fn gcd(&self, other: &GaussInt) -> GaussInt {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.normalize_assoc()
    }

    /// Canonical associate: multiply by a unit so the result has
    /// `re > 0, im >= 0`, except zero which stays zero.
    pub fn normalize_assoc(&self) -> GaussInt {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.clone();
        // at most three rotations by i
        for _ in 0..3 {
            if g.re.is_positive() && !g.im.is_negative() {
                break;
            }
            g = GaussInt::new(-g.im.clone(), g.re.clone());
        }
        if !(g.re.is_positive() && !g.im.is_negative()) {
            g = GaussInt::new(-g.im.clone(), g.re.clone());
        }
        g
    }

    pub fn pow(&self, mut e: u32) -> GaussInt {
        let mut acc = GaussInt::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

/// Rounded division to the nearest integer (ties toward +infinity are fine
/// for the Euclidean bound).
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (mut q, r) = a.div_rem(b);
    // adjust so that |a - q b| <= |b| / 2
    let r2 = &r * &two;
    if r2.abs() > b.abs() {
        if (r.is_positive()) == (b.is_positive()) {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

impl fmt::Debug for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}+{}i)", self.re, self.im)
    }
}

impl Add<&GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&GaussInt> for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        -&self
    }
}

/// All Gaussian integers dividing `n`, up to association, each in canonical
/// associate form: products over the Gaussian prime factorization.
pub fn divisors_up_to_units(n: &GaussInt) -> Vec<GaussInt> {
    divisors_up_to_units_bounded(n, None)
}

/// As `divisors_up_to_units`, but dropping every divisor whose norm exceeds
/// `norm_cap`. Norms are multiplicative, so capped branches are pruned
/// during the product construction rather than filtered afterwards.
pub fn divisors_up_to_units_bounded(n: &GaussInt, norm_cap: Option<&BigInt>) -> Vec<GaussInt> {
    assert!(!n.is_zero());
    let fits = |d: &GaussInt| norm_cap.is_none_or(|cap| &d.norm() <= cap);
    let factors = gaussian_prime_factorization(n);
    let mut out = vec![GaussInt::one()];
    for (pi, e) in &factors {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*e {
                acc = &acc * pi;
                if !fits(&acc) {
                    break;
                }
                next.push(acc.clone());
            }
        }
        out = next;
    }
    out.into_iter().map(|d| d.normalize_assoc()).collect()
}

/// Gaussian prime factorization of a nonzero `n`, up to a unit: pairs
/// `(prime, exponent)`. Rational primes of the norm are split over Z[i]
/// (2 ramifies as 1+i, primes 1 mod 4 split via a square root of -1, primes
/// 3 mod 4 stay inert) and each candidate is divided out exactly.
pub fn gaussian_prime_factorization(n: &GaussInt) -> Vec<(GaussInt, u32)> {
    assert!(!n.is_zero());
    let mut rest = n.clone();
    let mut out: Vec<(GaussInt, u32)> = Vec::new();
    for (p, _) in factor_integer(&n.norm()) {
        for pi in gaussian_primes_above(&p) {
            let mut e = 0u32;
            loop {
                let (q, r) = rest.div_rem(&pi);
                if r.is_zero() {
                    rest = q;
                    e += 1;
                } else {
                    break;
                }
            }
            if e > 0 {
                out.push((pi, e));
            }
        }
    }
    debug_assert!(rest.norm().is_one(), "only a unit remains");
    out
}

/// The Gaussian primes over a rational prime `p`.
fn gaussian_primes_above(p: &BigInt) -> Vec<GaussInt> {
    if *p == BigInt::from(2) {
        return vec![GaussInt::new(BigInt::one(), BigInt::one())];
    }
    if (p % BigInt::from(4u32)) == BigInt::from(3) {
        return vec![GaussInt::new(p.clone(), BigInt::zero())];
    }
    // p = 1 mod 4: find x with x^2 = -1 mod p, then gcd(p, x + i) splits p
    let x = sqrt_of_minus_one_mod(p);
    let pi = GaussInt::new(p.clone(), BigInt::zero()).gcd(&GaussInt::new(x, BigInt::one()));
    let conj = pi.conj().normalize_assoc();
    if conj == pi {
        vec![pi]
    } else {
        vec![pi, conj]
    }
}

fn mod_pow(base: &BigInt, exp: &BigInt, modulus: &BigInt) -> BigInt {
    base.modpow(exp, modulus)
}

/// A square root of -1 modulo a prime `p = 1 mod 4`: `a^((p-1)/4)` for the
/// first non-residue acting as `a`.
fn sqrt_of_minus_one_mod(p: &BigInt) -> BigInt {
    let one = BigInt::one();
    let exp = (p - &one) / BigInt::from(4u32);
    let minus_one = p - &one;
    let mut a = BigInt::from(2);
    loop {
        let x = mod_pow(&a, &exp, p);
        if (&x * &x) % p == minus_one {
            return x;
        }
        a += 1;
    }
}

/// Prime factorization of a nonzero integer's absolute value: small trial
/// division, then Miller-Rabin plus Pollard rho on what remains.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    assert!(!n.is_zero());
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, e: u32, out: &mut Vec<(BigInt, u32)>| {
        if let Some(entry) = out.iter_mut().find(|(q, _)| *q == p) {
            entry.1 += e;
        } else {
            out.push((p, e));
        }
    };
    for small in 2u64..=9973 {
        if small > 3 && small % 2 == 0 {
            continue;
        }
        let p = BigInt::from(small);
        if &p * &p > n {
            break;
        }
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            push(p, e, &mut out);
        }
    }
    if n > BigInt::one() {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if is_probable_prime(&m) {
                push(m, 1, &mut out);
            } else {
                let d = pollard_rho(&m);
                stack.push(m / &d);
                stack.push(d);
            }
        }
    }
    out.sort();
    out
}

fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    if n == &two {
        return true;
    }
    if (n % &two).is_zero() {
        return false;
    }
    let one = BigInt::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(a);
        if &a >= n {
            continue;
        }
        let mut x = mod_pow(&a, &d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-style Pollard rho; `n` is odd, composite, and has no factor below
/// the trial-division bound.
fn pollard_rho(n: &BigInt) -> BigInt {
    use num_integer::Integer;
    let one = BigInt::one();
    let mut c = BigInt::from(1);
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        while d == one {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
        }
        if d != one && &d != n && !d.is_zero() {
            return d;
        }
        c += 1;
    }
}
