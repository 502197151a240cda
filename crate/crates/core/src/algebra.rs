//! Finite étale algebras `K[e]/(m)` with `m` monic and squarefree, stackable into towers.
//!
//! An element stands for the whole family of its images under the roots of `m`, so a
//! single computation covers every conjugate branch at once.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;

use crate::error::Result;
use crate::poly::linalg::charpoly;
use crate::poly::{Field, Rat, Ring, UPoly};

#[derive(Debug)]
pub struct ExtData<K: Ring> {
    pub base: K::Ctx,
    /// Monic modulus.
    pub modulus: Vec<K>,
    pub name: char,
}

#[derive(Clone, Debug)]
pub struct ExtCtx<K: Ring>(pub Arc<ExtData<K>>);

impl<K: Ring> PartialEq for ExtCtx<K> {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || (self.0.modulus == o.0.modulus && self.0.base == o.0.base)
    }
}

impl<K: Field> ExtCtx<K> {
    /// `K[name]/(m)`; `m` is made monic.
    pub fn new(m: &UPoly<K>, name: char) -> Self {
        let m = m.monic();
        ExtCtx(Arc::new(ExtData { base: m.ctx().clone(), modulus: m.into_coeffs(), name }))
    }
    pub fn degree(&self) -> usize {
        self.0.modulus.len() - 1
    }
    pub fn modulus(&self) -> UPoly<K> {
        UPoly::new(&self.0.base, self.0.modulus.clone())
    }
    /// The class of the generator.
    pub fn gen(&self) -> Ext<K> {
        Ext::from_poly(self, &UPoly::x(&self.0.base))
    }
}

#[derive(Clone)]
pub struct Ext<K: Ring> {
    /// Coefficients of the reduced representative, low degree first, no trailing zeros.
    c: Vec<K>,
    ctx: ExtCtx<K>,
}

impl<K: Ring> PartialEq for Ext<K> {
    fn eq(&self, o: &Self) -> bool {
        self.c == o.c
    }
}

impl<K: Ring> fmt::Debug for Ext<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ext{:?}", self.c)
    }
}

impl<K: Field> Ext<K> {
    pub fn from_poly(ctx: &ExtCtx<K>, p: &UPoly<K>) -> Self {
        let r = p.rem(&ctx.modulus());
        Ext { c: r.into_coeffs(), ctx: ctx.clone() }
    }
    pub fn from_base(ctx: &ExtCtx<K>, a: K) -> Self {
        Self::from_poly(ctx, &UPoly::constant(&ctx.0.base, a))
    }
    pub fn as_poly(&self) -> UPoly<K> {
        UPoly::new(&self.ctx.0.base, self.c.clone())
    }
    pub fn ext_ctx(&self) -> &ExtCtx<K> {
        &self.ctx
    }

    /// Matrix of multiplication by `self` on the power basis.
    pub fn mult_matrix(&self) -> Vec<Vec<K>> {
        let n = self.ctx.degree();
        let mut cols = Vec::with_capacity(n);
        let mut b = self.clone();
        let e = self.ctx.gen();
        for _ in 0..n {
            cols.push((0..n).map(|i| b.coeff(i)).collect::<Vec<K>>());
            b = b.mul(&e);
        }
        (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
    }

    pub fn coeff(&self, i: usize) -> K {
        self.c.get(i).cloned().unwrap_or_else(|| K::zero(&self.ctx.0.base))
    }

    /// Characteristic polynomial of multiplication, highest degree first.
    pub fn charpoly(&self) -> Vec<K> {
        charpoly(&self.mult_matrix(), &self.ctx.0.base)
    }

    /// Relative norm down to `K`.
    pub fn norm(&self) -> K {
        let p = self.charpoly();
        let n = self.ctx.degree();
        if n % 2 == 1 {
            p[n].neg()
        } else {
            p[n].clone()
        }
    }

    /// Substitute the generator of `self` by an element of another algebra over the same base.
    pub fn eval_at<L: Ring>(&self, at: &L, embed: impl Fn(&K) -> L) -> L {
        let mut acc = L::zero(&at.ctx());
        for a in self.c.iter().rev() {
            acc = acc.mul(at).add(&embed(a));
        }
        acc
    }
}

impl<K: Field> Ring for Ext<K> {
    type Ctx = ExtCtx<K>;

    fn zero(ctx: &ExtCtx<K>) -> Self {
        Ext { c: Vec::new(), ctx: ctx.clone() }
    }
    fn one(ctx: &ExtCtx<K>) -> Self {
        Self::from_base(ctx, K::one(&ctx.0.base))
    }
    fn from_i64(ctx: &ExtCtx<K>, n: i64) -> Self {
        Self::from_base(ctx, K::from_i64(&ctx.0.base, n))
    }
    fn from_rational(ctx: &ExtCtx<K>, q: &BigRational) -> Result<Self> {
        Ok(Self::from_base(ctx, K::from_rational(&ctx.0.base, q)?))
    }
    fn ctx(&self) -> ExtCtx<K> {
        self.ctx.clone()
    }
    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        Ext { c: self.as_poly().add(&o.as_poly()).into_coeffs(), ctx: self.ctx.clone() }
    }
    fn sub(&self, o: &Self) -> Self {
        Ext { c: self.as_poly().sub(&o.as_poly()).into_coeffs(), ctx: self.ctx.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.c.is_empty() || o.c.is_empty() {
            return Self::zero(&self.ctx);
        }
        Self::from_poly(&self.ctx, &self.as_poly().mul(&o.as_poly()))
    }
    fn neg(&self) -> Self {
        Ext { c: self.c.iter().map(|a| a.neg()).collect(), ctx: self.ctx.clone() }
    }
    fn characteristic(ctx: &ExtCtx<K>) -> u64 {
        K::characteristic(&ctx.0.base)
    }
    fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }
}

impl<K: Field> Field for Ext<K> {
    /// Inverse through Cayley–Hamilton; `None` exactly when the norm is not a unit of `K`.
    fn inv(&self) -> Option<Self> {
        if self.is_one() {
            return Some(self.clone());
        }
        let p = self.charpoly();
        let n = self.ctx.degree();
        let cn_inv = p[n].inv()?;
        // a^{-1} = -(a^{n-1} + c_1 a^{n-2} + ... + c_{n-1}) / c_n
        let mut acc = Self::zero(&self.ctx);
        for ci in &p[..n] {
            acc = acc.mul(self).add(&Self::from_base(&self.ctx, ci.clone()));
        }
        Some(acc.scale_base(&cn_inv.neg()))
    }
}

impl<K: Field> Ext<K> {
    pub fn scale_base(&self, k: &K) -> Self {
        Ext { c: self.as_poly().scale(k).into_coeffs(), ctx: self.ctx.clone() }
    }
}

/// Norm all the way down to the rationals.
pub trait AbsNorm: Field {
    fn abs_norm(&self) -> Rat;

    /// In an étale algebra over Q, units are exactly the elements of nonzero norm.
    fn is_unit(&self) -> bool {
        !Ring::is_zero(&self.abs_norm())
    }
}

impl AbsNorm for Rat {
    fn abs_norm(&self) -> Rat {
        self.clone()
    }
}

impl<K: AbsNorm> AbsNorm for Ext<K> {
    fn abs_norm(&self) -> Rat {
        self.norm().abs_norm()
    }
}

impl<K: Field + fmt::Display> fmt::Display for Ext<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({a})")?,
                1 => write!(f, "({a})*{}", self.ctx.0.name)?,
                _ => write!(f, "({a})*{}^{}", self.ctx.0.name, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn qx(c: &[i64]) -> UPoly<Rat> {
        UPoly::new(&(), c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn gaussian_integers() {
        let ctx = ExtCtx::new(&qx(&[1, 0, 1]), 'i');
        let i = ctx.gen();
        assert_eq!(i.mul(&i), Ext::from_i64(&ctx, -1));
        let a = Ext::from_i64(&ctx, 1).add(&i);
        assert_eq!(a.norm(), rat(2));
        assert!(a.mul(&a.inv().unwrap()).is_one());
    }

    #[test]
    fn zero_divisors_are_not_units() {
        // Q[e]/(e^2 - 1) splits as Q x Q; e - 1 vanishes in one factor.
        let ctx = ExtCtx::new(&qx(&[-1, 0, 1]), 'e');
        let z = ctx.gen().sub(&Ext::one(&ctx));
        assert!(!z.is_zero());
        assert!(!z.is_unit());
        assert!(z.inv().is_none());
    }

    #[test]
    fn tower_norms() {
        // Q(sqrt2)(sqrt3): the norm of sqrt2 + sqrt3 down to Q is 1.
        let a = ExtCtx::new(&qx(&[-2, 0, 1]), 'a');
        let s2 = a.gen();
        let m = UPoly::new(&a, vec![Ext::from_i64(&a, -3), Ext::zero(&a), Ext::one(&a)]);
        let b = ExtCtx::new(&m, 'b');
        let s3 = b.gen();
        let sum = s3.add(&Ext::from_base(&b, s2));
        assert_eq!(sum.abs_norm(), rat(1));
        assert!(sum.mul(&sum.inv().unwrap()).is_one());
    }
}
