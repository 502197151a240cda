//! Dense univariate polynomials over a field.

use super::field::{Field, Ring};

#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<K: Ring> {
    /// Coefficients from degree 0 upward; no trailing zeros.
    c: Vec<K>,
    ctx: K::Ctx,
}

impl<K: Ring> UPoly<K> {
    pub fn new(ctx: &K::Ctx, mut c: Vec<K>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c, ctx: ctx.clone() }
    }
    pub fn zero(ctx: &K::Ctx) -> Self {
        UPoly { c: Vec::new(), ctx: ctx.clone() }
    }
    pub fn constant(ctx: &K::Ctx, a: K) -> Self {
        Self::new(ctx, vec![a])
    }
    pub fn x(ctx: &K::Ctx) -> Self {
        Self::new(ctx, vec![K::zero(ctx), K::one(ctx)])
    }
    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }
    pub fn coeffs(&self) -> &[K] {
        &self.c
    }
    pub fn into_coeffs(self) -> Vec<K> {
        self.c
    }
    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }
    pub fn coeff(&self, i: usize) -> K {
        self.c.get(i).cloned().unwrap_or_else(|| K::zero(&self.ctx))
    }
    pub fn lc(&self) -> K {
        self.c.last().cloned().unwrap_or_else(|| K::zero(&self.ctx))
    }
    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(&self.ctx, (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }
    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(&self.ctx, (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }
    pub fn neg(&self) -> Self {
        Self::new(&self.ctx, self.c.iter().map(|a| a.neg()).collect())
    }
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = vec![K::zero(&self.ctx); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(&self.ctx, out)
    }
    pub fn scale(&self, k: &K) -> Self {
        Self::new(&self.ctx, self.c.iter().map(|a| a.mul(k)).collect())
    }
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![K::zero(&self.ctx); k];
        c.extend(self.c.iter().cloned());
        Self::new(&self.ctx, c)
    }
    pub fn derivative(&self) -> Self {
        Self::new(&self.ctx, self.c.iter().enumerate().skip(1).map(|(i, a)| a.scale_i64(i as i64)).collect())
    }
    pub fn eval(&self, x: &K) -> K {
        self.c.iter().rev().fold(K::zero(&self.ctx), |acc, a| acc.mul(x).add(a))
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.ctx, K::one(&self.ctx));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    /// p(q(x))
    pub fn compose(&self, q: &Self) -> Self {
        self.c.iter().rev().fold(Self::zero(&self.ctx), |acc, a| acc.mul(q).add(&Self::constant(&self.ctx, a.clone())))
    }
    pub fn truncate(&self, n: usize) -> Self {
        Self::new(&self.ctx, self.c.iter().take(n).cloned().collect())
    }
}

impl<K: Field> UPoly<K> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().inv().unwrap())
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.deg();
        let inv = d.lc().inv().unwrap();
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (Self::zero(&self.ctx), self.clone());
        }
        let mut q = vec![K::zero(&self.ctx); r.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = r[i + dd].mul(&inv);
            if coef.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                r[i + j] = r[i + j].sub(&coef.mul(b));
            }
            q[i] = coef;
        }
        r.truncate(dd);
        (Self::new(&self.ctx, q), Self::new(&self.ctx, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: (g, s, t) with s*self + t*o = g, g monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let ctx = &self.ctx;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::constant(ctx, K::one(ctx)), Self::zero(ctx));
        let (mut t0, mut t1) = (Self::zero(ctx), Self::constant(ctx, K::one(ctx)));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv().unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Inverse modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &Self) -> Option<Self> {
        let (g, s, _) = self.rem(m).xgcd(m);
        (g.deg() == 0 && !g.is_zero()).then(|| s.rem(m))
    }

    /// p / gcd(p, p'), made monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Resultant by the Euclidean remainder sequence.
    pub fn resultant(&self, o: &Self) -> K {
        let ctx = self.ctx.clone();
        if self.is_zero() || o.is_zero() {
            return K::zero(&ctx);
        }
        let (mut a, mut b) = (self.clone(), o.clone());
        let mut acc = K::one(&ctx);
        loop {
            let da = a.deg();
            let db = b.deg();
            if db == 0 {
                return acc.mul(&b.lc().pow(da as u64));
            }
            let r = a.rem(&b);
            if r.is_zero() {
                return K::zero(&ctx);
            }
            let dr = r.deg();
            // Res(a,b) = (-1)^{da db} lc(b)^{da - dr} Res(b, r)
            if (da * db) % 2 == 1 {
                acc = acc.neg();
            }
            acc = acc.mul(&b.lc().pow((da - dr) as u64));
            a = b;
            b = r;
        }
    }

    /// Newton interpolation through (xs[i], ys[i]) with distinct nodes.
    pub fn interpolate(ctx: &K::Ctx, xs: &[K], ys: &[K]) -> Self {
        let n = xs.len();
        let mut coef: Vec<K> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                let num = coef[i].sub(&coef[i - 1]);
                let den = xs[i].sub(&xs[i - j]);
                coef[i] = num.div(&den);
            }
        }
        let mut p = Self::zero(ctx);
        for i in (0..n).rev() {
            p = p.mul(&Self::new(ctx, vec![xs[i].neg(), K::one(ctx)])).add(&Self::constant(ctx, coef[i].clone()));
        }
        p
    }

    pub fn mul_mod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::{rat, Rat};

    fn up(c: &[i64]) -> UPoly<Rat> {
        UPoly::new(&(), c.iter().map(|&a| rat(a)).collect())
    }

    #[test]
    fn resultant_root_product() {
        // p = (x-1)(x-2), q = x^2 + 1: Res = q(1) q(2) = 2 * 5
        let p = up(&[2, -3, 1]);
        let q = up(&[1, 0, 1]);
        assert_eq!(p.resultant(&q), rat(10));
        assert_eq!(q.resultant(&p), rat(10));
    }

    #[test]
    fn interpolation_recovers() {
        let p = up(&[3, 0, -2, 5]);
        let xs: Vec<Rat> = (0..4).map(rat).collect();
        let ys: Vec<Rat> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(UPoly::interpolate(&(), &xs, &ys), p);
    }

    #[test]
    fn xgcd_inverse() {
        let m = up(&[-2, 0, 1]);
        let a = up(&[1, 1]);
        let inv = a.inv_mod(&m).unwrap();
        assert_eq!(a.mul_mod(&inv, &m), up(&[1]));
    }
}
