//! Exact rational arithmetic and p-adic valuations.
//!
//! [`Rational`] is always kept in lowest terms with a positive denominator, so
//! equality is structural and the valuation of a nonzero value only needs to
//! look at the numerator and denominator once. The valuation of zero is
//! [`Valuation::Infinite`], which absorbs under addition and sits above every
//! finite value in the ordering.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, reducing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return invalid("zero denominator");
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `2^k` for any integer `k`.
    pub fn pow2(k: i64) -> Self {
        let p = BigInt::one() << k.unsigned_abs();
        if k >= 0 {
            Rational::from_integer(p)
        } else {
            Rational(BigRational::new(BigInt::one(), p))
        }
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    /// The value as a nonnegative integer, or `NonIntegral` if it is not one.
    pub fn to_count(&self) -> Result<BigUint> {
        self.to_integer()
            .and_then(|n| n.to_biguint())
            .ok_or_else(|| Error::NonIntegral(self.to_string()))
    }

    /// 2-adic valuation. Faster than `vp(.., 2)` since it only counts trailing zeros.
    pub fn v2(&self) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        let num = self.numer().trailing_zeros().unwrap_or(0) as i64;
        let den = self.denom().trailing_zeros().unwrap_or(0) as i64;
        Valuation::Finite(num - den)
    }

    /// p-adic valuation for a prime `p`.
    pub fn vp(&self, p: u64) -> Result<Valuation> {
        if !is_prime(p) {
            return invalid(format!("{p} is not prime"));
        }
        if self.is_zero() {
            return Ok(Valuation::Infinite);
        }
        if p == 2 {
            return Ok(self.v2());
        }
        let num = multiplicity(self.numer().magnitude(), p) as i64;
        let den = multiplicity(self.denom().magnitude(), p) as i64;
        Ok(Valuation::Finite(num - den))
    }
}

/// Number of times `p` divides `n`; `n` must be nonzero.
fn multiplicity(n: &BigUint, p: u64) -> u64 {
    let p = BigUint::from(p);
    let mut n = n.clone();
    let mut count = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return count;
        }
        n = q;
        count += 1;
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidArgument(format!("bad rational {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse(n)?, parse(d)?),
            None => Ok(Rational::from_integer(parse(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<BigUint> for Rational {
    fn from(n: BigUint) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// A valuation: an integer, or infinity for zero.
///
/// Variant order makes `Infinite` the maximum under the derived `Ord`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// Shifts a finite valuation by `k`; infinity stays infinite.
    pub fn shift(self, k: i64) -> Valuation {
        match self {
            Valuation::Finite(v) => Valuation::Finite(v + k),
            Valuation::Infinite => Valuation::Infinite,
        }
    }

    pub fn at_least(self, bound: i64) -> bool {
        self >= Valuation::Finite(bound)
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => serializer.serialize_i64(*v),
            Valuation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// p-adic valuation of `q`.
pub fn vp(q: &Rational, p: u64) -> Result<Valuation> {
    q.vp(p)
}

/// Number of ones in the binary expansion of `n`.
pub fn bin_ones(n: u64) -> u64 {
    n.count_ones() as u64
}

/// Largest `m` with `m(m+1)/2 <= n`, i.e. the number of triangular numbers in `1..=n`.
pub fn tri_count(n: u64) -> Result<u64> {
    if n < 1 {
        return invalid("tri_count needs n >= 1");
    }
    // isqrt(8n+1) gives the exact answer; fix up any rounding from the float seed.
    let mut m = (((8.0 * n as f64 + 1.0).sqrt() - 1.0) / 2.0) as u64;
    while (m + 1) * (m + 2) / 2 <= n {
        m += 1;
    }
    while m * (m + 1) / 2 > n {
        m -= 1;
    }
    Ok(m)
}

/// `v_2(m!)` by Legendre's formula, `m - b(m)`.
pub fn v2_factorial(m: u64) -> u64 {
    m - bin_ones(m)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `n (n-1) ... (n-k+1)`.
pub fn falling_factorial(n: u64, k: u64) -> BigUint {
    debug_assert!(k <= n);
    (n - k + 1..=n).fold(BigUint::one(), |acc, j| acc * j)
}
