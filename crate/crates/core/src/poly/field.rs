//! Coefficient rings: arbitrary-precision rationals and word-size prime fields.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Fixed list of primes just below 2^62 used by every multi-prime computation.
pub const PRIMES: [u64; 20] = [
    4611686018427387847,
    4611686018427387817,
    4611686018427387787,
    4611686018427387761,
    4611686018427387751,
    4611686018427387737,
    4611686018427387733,
    4611686018427387709,
    4611686018427387701,
    4611686018427387631,
    4611686018427387617,
    4611686018427387587,
    4611686018427387461,
    4611686018427387421,
    4611686018427387409,
    4611686018427387329,
    4611686018427387323,
    4611686018427387301,
    4611686018427387271,
    4611686018427387241,
];

/// A commutative ring with a runtime context (the modulus, for prime fields and extensions).
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;
    fn from_rational(ctx: &Self::Ctx, q: &BigRational) -> Result<Self>;
    fn ctx(&self) -> Self::Ctx;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    /// 0 for the rationals.
    fn characteristic(ctx: &Self::Ctx) -> u64;

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn scale_i64(&self, n: i64) -> Self {
        self.mul(&Self::from_i64(&self.ctx(), n))
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }
}

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl Ring for BigRational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(_: &(), n: i64) -> Self {
        rat(n)
    }
    fn from_rational(_: &(), q: &BigRational) -> Result<Self> {
        Ok(q.clone())
    }
    fn ctx(&self) {}
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn characteristic(_: &()) -> u64 {
        0
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Modulus of a prime field. Primality is trusted, not checked.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Modulus(pub u64);

/// Element of Z/pZ with p < 2^63.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl Fp {
    pub fn new(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }
    pub fn value(&self) -> u64 {
        self.v
    }
    pub fn modulus(&self) -> u64 {
        self.p
    }
    /// Symmetric representative in (-p/2, p/2].
    pub fn signed(&self) -> i128 {
        if self.v > self.p / 2 {
            self.v as i128 - self.p as i128
        } else {
            self.v as i128
        }
    }
    fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
        let r = n.mod_floor(&BigInt::from(p));
        r.to_u64().expect("reduced residue fits in u64")
    }
}

impl Ring for Fp {
    type Ctx = Modulus;

    fn zero(m: &Modulus) -> Self {
        Fp { v: 0, p: m.0 }
    }
    fn one(m: &Modulus) -> Self {
        Fp { v: 1 % m.0, p: m.0 }
    }
    fn from_i64(m: &Modulus, n: i64) -> Self {
        let p = m.0 as i128;
        Fp { v: (n as i128).rem_euclid(p) as u64, p: m.0 }
    }
    fn from_rational(m: &Modulus, q: &BigRational) -> Result<Self> {
        let den = Self::reduce_bigint(q.denom(), m.0);
        if den == 0 {
            return Err(Error::BadPrime(m.0));
        }
        let num = Fp { v: Self::reduce_bigint(q.numer(), m.0), p: m.0 };
        let den = Fp { v: den, p: m.0 };
        Ok(num.mul(&den.inv().expect("nonzero residue")))
    }
    fn ctx(&self) -> Modulus {
        Modulus(self.p)
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        let s = self.v as u128 + o.v as u128;
        let p = self.p as u128;
        Fp { v: (if s >= p { s - p } else { s }) as u64, p: self.p }
    }
    fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        if self.v >= o.v {
            Fp { v: self.v - o.v, p: self.p }
        } else {
            Fp { v: self.p - (o.v - self.v), p: self.p }
        }
    }
    fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Fp { v: ((self.v as u128 * o.v as u128) % self.p as u128) as u64, p: self.p }
    }
    fn neg(&self) -> Self {
        if self.v == 0 {
            *self
        } else {
            Fp { v: self.p - self.v, p: self.p }
        }
    }
    fn characteristic(m: &Modulus) -> u64 {
        m.0
    }
    fn is_one(&self) -> bool {
        self.v == 1
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        // extended Euclid on i128
        let (mut r0, mut r1) = (self.p as i128, self.v as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(Fp { v: t0.rem_euclid(self.p as i128) as u64, p: self.p })
    }
}

/// Reconstruct a rational from its residue when both parts are below sqrt(p/2).
pub fn rational_reconstruct(a: &Fp) -> Option<Rat> {
    let p = a.p as i128;
    let bound = ((a.p / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (p, a.v as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let n = BigInt::from(r1) * BigInt::from(t1.signum());
    let d = BigInt::from(t1.abs());
    Some(BigRational::new(n, d))
}

pub fn is_integer(q: &Rat) -> bool {
    q.denom().is_one()
}

pub fn abs_rat(q: &Rat) -> Rat {
    q.abs()
}
