//! Coefficient rings and exact fields.
//!
//! Everything in the crate is generic over [`Ring`] (matrix products, Mackey
//! functor data) or [`Field`] (elimination, representations). Concrete
//! instances are prime fields [`Fp`], the rationals [`Rational`] and the
//! integers (`i64`, used for Burnside-ring data).

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

/// A commutative ring with exact equality.
pub trait Ring:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Image of an integer under the unique ring map from Z.
    fn from_i64(v: i64) -> Self;

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self = self.clone() + a.clone() * b.clone();
    }

    /// `self -= a * b`
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self = self.clone() - a.clone() * b.clone();
    }
}

/// A field with exact arithmetic.
pub trait Field: Ring + Div<Output = Self> {
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic() -> u64;

    fn tag() -> FieldTag;
}

/// A prime field `F_p` with a compile-time modulus.
pub trait PrimeField: Field + Copy + Eq + Hash + Ord {
    const MODULUS: u32;

    /// Canonical representative in `0..p`.
    fn value(self) -> u32;

    fn from_u64(v: u64) -> Self;
}

/// Runtime description of a coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Prime(u32),
    Rationals,
}

impl FieldTag {
    pub fn characteristic(self) -> u64 {
        match self {
            FieldTag::Prime(p) => p as u64,
            FieldTag::Rationals => 0,
        }
    }
}

impl Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Prime(p) => write!(f, "F{p}"),
            FieldTag::Rationals => write!(f, "Q"),
        }
    }
}

impl std::str::FromStr for FieldTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        match t {
            "Q" | "q" | "QQ" | "rationals" => return Ok(FieldTag::Rationals),
            _ => {}
        }
        let digits = t
            .strip_prefix("F_")
            .or_else(|| t.strip_prefix('F'))
            .or_else(|| t.strip_prefix("GF"))
            .unwrap_or(t);
        let p: u32 = digits.parse().map_err(|_| format!("unrecognised field tag `{s}`"))?;
        if !is_prime(p as u64) {
            return Err(format!("{p} is not prime"));
        }
        Ok(FieldTag::Prime(p))
    }
}

impl Serialize for FieldTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
}

impl Ring for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a * b;
    }

    fn sub_mul(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self -= a * b;
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn characteristic() -> u64 {
        0
    }

    fn tag() -> FieldTag {
        FieldTag::Rationals
    }
}

/// Element of the prime field `Z/PZ`, stored as its canonical representative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub const fn new(v: u32) -> Self {
        Fp(v % P)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero in F_p")
    }
}

impl<const P: u32> AddAssign for Fp<P> {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl<const P: u32> SubAssign for Fp<P> {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    fn mul_assign(&mut self, o: Self) {
        *self = *self * o;
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Ring for Fp<P> {
    fn from_i64(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    #[inline]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += *a * *b;
    }

    #[inline]
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self -= *a * *b;
    }
}

impl<const P: u32> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P as u64 - 2))
        }
    }

    fn characteristic() -> u64 {
        P as u64
    }

    fn tag() -> FieldTag {
        FieldTag::Prime(P)
    }
}

impl<const P: u32> PrimeField for Fp<P> {
    const MODULUS: u32 = P;

    fn value(self) -> u32 {
        self.0
    }

    fn from_u64(v: u64) -> Self {
        Fp((v % P as u64) as u32)
    }
}

/// Expands `$body` with `$F` bound to the concrete field type named by a
/// runtime [`FieldTag`]. Supported primes are those below 100.
#[macro_export]
macro_rules! with_field {
    ($tag:expr, $F:ident => $body:expr, else $err:expr) => {{
        use $crate::scalar::{FieldTag, Rational};
        match $tag {
            FieldTag::Rationals => {
                type $F = Rational;
                $body
            }
            FieldTag::Prime(p) => $crate::with_prime!(p, $F => $body, else $err),
        }
    }};
}

/// Like [`with_field!`] but only for prime fields.
#[macro_export]
macro_rules! with_prime {
    ($p:expr, $F:ident => $body:expr, else $err:expr) => {{
        $crate::with_prime!(@arms $p, $F, $body, $err;
            2 3 5 7 11 13 17 19 23 29 31 37 41 43 47 53 59 61 67 71 73 79 83 89 97)
    }};
    (@arms $p:expr, $F:ident, $body:expr, $err:expr; $($q:literal)*) => {{
        match $p {
            $( $q => { type $F = $crate::scalar::Fp<$q>; $body } )*
            _ => $err,
        }
    }};
}
