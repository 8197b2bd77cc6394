//! Exact scalars: rationals and Gaussian rationals.
//!
//! `GaussianRational` is the field Q(i) represented by a pair of
//! `BigRational` components. All arithmetic is exact; there is no floating
//! point anywhere in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::Error;

/// Parse a rational from `"p/q"`, `"p"`, or a bare integer literal.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// Render a rational as `"p"` or `"p/q"` (canonical lowest terms).
pub fn rational_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// An element of Q(i): `re + im * i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn real(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }

    /// `a/b + (c/d)i` from machine integers.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        GaussianRational::new(
            BigRational::new(BigInt::from(a), BigInt::from(b)),
            BigRational::new(BigInt::from(c), BigInt::from(d)),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, the norm down to Q. Zero iff the element is zero.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::InvalidInput("division by zero in Q(i)".into()));
        }
        let n = self.norm();
        Ok(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn pow(&self, e: i64) -> Result<Self, Error> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = GaussianRational::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", rational_string(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", rational_string(&self.im))
        } else if self.im.is_negative() {
            write!(
                f,
                "{}{}i",
                rational_string(&self.re),
                rational_string(&self.im)
            )
        } else {
            write!(
                f,
                "{}+{}i",
                rational_string(&self.re),
                rational_string(&self.im)
            )
        }
    }
}

// Lexicographic (re, im) order. Not compatible with the field structure; used
// for canonical containers and deterministic output only.
impl Ord for GaussianRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for GaussianRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$method(rhs)
            }
        }
        impl $trait<GaussianRational> for &GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}
forward_binop!(Add, add);

impl Sub<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}
forward_binop!(Sub, sub);

impl Mul<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}
forward_binop!(Mul, mul);

impl Div<&GaussianRational> for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        #[allow(clippy::suspicious_arithmetic_impl)]
        {
            self * rhs.inv().expect("division by zero in Q(i)")
        }
    }
}
forward_binop!(Div, div);

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

// JSON form: "p/q" for real values, {"re":"p/q","im":"p/q"} otherwise.
impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_real() {
            serializer.serialize_str(&rational_string(&self.re))
        } else {
            let mut map = serializer.serialize_map(Some(2))?;
            map.serialize_entry("re", &rational_string(&self.re))?;
            map.serialize_entry("im", &rational_string(&self.im))?;
            map.end()
        }
    }
}

struct GaussianRationalVisitor;

impl<'de> Visitor<'de> for GaussianRationalVisitor {
    type Value = GaussianRational;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational string \"p/q\", an integer, or {\"re\",\"im\"}")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
        parse_rational(v)
            .map(GaussianRational::real)
            .map_err(|e| E::custom(e.to_string()))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Self::Value, E> {
        Ok(GaussianRational::from_int(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Self::Value, E> {
        Ok(GaussianRational::real(BigRational::from_integer(v.into())))
    }

    fn visit_map<A: de::MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
        let mut re = None;
        let mut im = None;
        while let Some(key) = map.next_key::<String>()? {
            let value: String = map.next_value()?;
            let parsed = parse_rational(&value).map_err(|e| de::Error::custom(e.to_string()))?;
            match key.as_str() {
                "re" => re = Some(parsed),
                "im" => im = Some(parsed),
                other => return Err(de::Error::custom(format!("unexpected key {other:?}"))),
            }
        }
        Ok(GaussianRational::new(
            re.unwrap_or_else(BigRational::zero),
            im.unwrap_or_else(BigRational::zero),
        ))
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(GaussianRationalVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn field_arithmetic() {
        let x = GaussianRational::from_parts(1, 2, 3, 1); // 1/2 + 3i
        let y = GaussianRational::from_parts(2, 1, -1, 1); // 2 - i
        let p = &x * &y;
        assert_eq!(p, GaussianRational::from_parts(4, 1, 11, 2));
        let back = &p / &y;
        assert_eq!(back, x);
    }

    #[test]
    fn conjugation_is_involution() {
        let x = GaussianRational::from_parts(5, 7, -2, 3);
        assert_eq!(x.conj().conj(), x);
        assert!(x.conj().im == -x.im.clone());
    }

    #[test]
    fn powers_with_negative_exponent() {
        let two = GaussianRational::from_int(2);
        assert_eq!(two.pow(3).unwrap(), GaussianRational::from_int(8));
        assert_eq!(two.pow(-2).unwrap(), GaussianRational::real(q(1, 4)));
        let i = GaussianRational::i();
        assert_eq!(i.pow(2).unwrap(), GaussianRational::from_int(-1));
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(parse_rational("3/4").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-5").unwrap(), q(-5, 1));
        assert_eq!(rational_string(&q(6, 4)), "3/2");
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = GaussianRational::from_parts(1, 3, -2, 5);
        let s = serde_json::to_string(&x).unwrap();
        let y: GaussianRational = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        let r: GaussianRational = serde_json::from_str("\"7/2\"").unwrap();
        assert_eq!(r, GaussianRational::real(q(7, 2)));
        let n: GaussianRational = serde_json::from_str("-4").unwrap();
        assert_eq!(n, GaussianRational::from_int(-4));
    }
}
