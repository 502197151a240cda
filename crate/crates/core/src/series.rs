//! Truncated power series and Puiseux data.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::poly::{Field, Ring, Var};

/// `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<K: Ring> {
    pub var: Var,
    c: Vec<K>,
    ctx: K::Ctx,
}

impl<K: Ring> TruncSeries<K> {
    /// Series of order `n` with the given leading coefficients (padded with zeros, cut at `n`).
    pub fn new(ctx: &K::Ctx, mut c: Vec<K>, n: usize) -> Self {
        c.resize(n + 1, K::zero(ctx));
        TruncSeries { var: Var::T, c, ctx: ctx.clone() }
    }
    pub fn constant(ctx: &K::Ctx, a: K, n: usize) -> Self {
        Self::new(ctx, vec![a], n)
    }
    /// The series `t`.
    pub fn t(ctx: &K::Ctx, n: usize) -> Self {
        Self::new(ctx, vec![K::zero(ctx), K::one(ctx)], n)
    }
    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }
    pub fn order(&self) -> usize {
        self.c.len() - 1
    }
    pub fn coeffs(&self) -> &[K] {
        &self.c
    }
    pub fn coeff(&self, i: usize) -> K {
        self.c.get(i).cloned().unwrap_or_else(|| K::zero(&self.ctx))
    }
    /// Index of the first nonzero coefficient, if any is visible.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_zero())
    }
    pub fn truncate(&self, n: usize) -> Self {
        let n = n.min(self.order());
        Self::new(&self.ctx, self.c[..=n].to_vec(), n)
    }
    pub fn map<L: Ring>(&self, ctx: &L::Ctx, f: impl Fn(&K) -> L) -> TruncSeries<L> {
        TruncSeries { var: self.var, c: self.c.iter().map(f).collect(), ctx: ctx.clone() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self::new(&self.ctx, (0..=n).map(|i| self.c[i].add(&o.c[i])).collect(), n)
    }
    pub fn sub(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self::new(&self.ctx, (0..=n).map(|i| self.c[i].sub(&o.c[i])).collect(), n)
    }
    pub fn neg(&self) -> Self {
        Self::new(&self.ctx, self.c.iter().map(|a| a.neg()).collect(), self.order())
    }
    pub fn scale(&self, k: &K) -> Self {
        Self::new(&self.ctx, self.c.iter().map(|a| a.mul(k)).collect(), self.order())
    }
    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut c = vec![K::zero(&self.ctx); n + 1];
        for (i, a) in self.c.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate().take(n + 1 - i) {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::new(&self.ctx, c, n)
    }
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(&self.ctx, K::one(&self.ctx), self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
    /// Multiply by `t^k`; the known precision grows by `k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut c = vec![K::zero(&self.ctx); k];
        c.extend(self.c.iter().cloned());
        let n = c.len() - 1;
        Self::new(&self.ctx, c, n)
    }
    /// `self(inner(t))` for `inner` with zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::NotReversible);
        }
        let n = self.order().min(inner.order());
        let inner = inner.truncate(n);
        let mut acc = Self::constant(&self.ctx, self.c[n].clone(), n);
        for a in self.c[..n].iter().rev() {
            acc = acc.mul(&inner);
            acc.c[0] = acc.c[0].add(a);
        }
        Ok(acc)
    }
}

impl<K: Field> TruncSeries<K> {
    /// Multiplicative inverse of a series with invertible constant term.
    pub fn invert_unit(&self) -> Result<Self> {
        let inv0 = self.c[0].inv().ok_or(Error::NotAUnit)?;
        let n = self.order();
        let mut r: Vec<K> = vec![inv0.clone()];
        for k in 1..=n {
            let mut s = K::zero(&self.ctx);
            for j in 1..=k {
                s = s.add(&self.c[j].mul(&r[k - j]));
            }
            r.push(s.neg().mul(&inv0));
        }
        Ok(Self::new(&self.ctx, r, n))
    }

    /// The `n`-th root with constant term 1 of a series with constant term 1.
    pub fn nth_root_unit(&self, n: u32) -> Result<Self> {
        if !self.c[0].is_one() || n == 0 {
            return Err(Error::NotNormalized);
        }
        let ctx = &self.ctx;
        let alpha = K::from_rational(ctx, &crate::poly::ratio(1, n as i64))?;
        let mut a: Vec<K> = vec![K::one(ctx)];
        for k in 1..=self.order() {
            let mut s = K::zero(ctx);
            for j in 1..=k {
                // (alpha*j - (k-j)) s_j a_{k-j}
                let w = alpha.scale_i64(j as i64).sub(&K::from_i64(ctx, (k - j) as i64));
                s = s.add(&w.mul(&self.c[j]).mul(&a[k - j]));
            }
            let kinv = K::from_i64(ctx, k as i64).inv().ok_or(Error::NotAUnit)?;
            a.push(s.mul(&kinv));
        }
        Ok(Self::new(ctx, a, self.order()))
    }

    /// Compositional inverse of a series `c_1 t + c_2 t^2 + ...` with `c_1` invertible.
    pub fn reverse_series(&self) -> Result<Self> {
        if !self.c[0].is_zero() || self.order() < 1 {
            return Err(Error::NotReversible);
        }
        let c1inv = self.c[1].inv().ok_or(Error::NotReversible)?;
        let n = self.order();
        let ctx = &self.ctx;
        let mut b = Self::new(ctx, vec![K::zero(ctx), c1inv.clone()], n);
        for k in 2..=n {
            let comp = self.truncate(k).compose(&b.truncate(k))?;
            b.c[k] = comp.c[k].neg().mul(&c1inv);
        }
        Ok(b)
    }
}

/// Context of the ring of series truncated at a fixed order.
#[derive(Clone, PartialEq, Debug)]
pub struct SeriesCtx<K: Ring> {
    pub base: K::Ctx,
    pub order: usize,
}

impl<K: Ring> Ring for TruncSeries<K> {
    type Ctx = SeriesCtx<K>;

    fn zero(ctx: &SeriesCtx<K>) -> Self {
        Self::new(&ctx.base, vec![], ctx.order)
    }
    fn one(ctx: &SeriesCtx<K>) -> Self {
        Self::constant(&ctx.base, K::one(&ctx.base), ctx.order)
    }
    fn from_i64(ctx: &SeriesCtx<K>, n: i64) -> Self {
        Self::constant(&ctx.base, K::from_i64(&ctx.base, n), ctx.order)
    }
    fn from_rational(ctx: &SeriesCtx<K>, q: &num_rational::BigRational) -> Result<Self> {
        Ok(Self::constant(&ctx.base, K::from_rational(&ctx.base, q)?, ctx.order))
    }
    fn ctx(&self) -> SeriesCtx<K> {
        SeriesCtx { base: self.ctx.clone(), order: self.order() }
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|a| a.is_zero())
    }
    fn add(&self, o: &Self) -> Self {
        TruncSeries::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        TruncSeries::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        TruncSeries::mul(self, o)
    }
    fn neg(&self) -> Self {
        TruncSeries::neg(self)
    }
    fn characteristic(ctx: &SeriesCtx<K>) -> u64 {
        K::characteristic(&ctx.base)
    }
}

/// Exponent data of one Puiseux branch `x = t^{a_0}`, `y = sum lambda_j t^{a_j}`.
#[derive(Clone, PartialEq, Eq, Debug, serde::Serialize)]
pub struct PuiseuxData {
    pub a0: u32,
    /// `(a_j, lambda_j)` with strictly increasing exponents; coefficients in printed form.
    pub terms: Vec<(u32, String)>,
}

impl PuiseuxData {
    pub fn exponents(&self) -> Vec<u32> {
        self.terms.iter().map(|t| t.0).collect()
    }

    /// `D_1 = a_0, D_{j+1} = gcd(D_j, a_j)`, one entry per term plus the final value.
    pub fn gcd_sequence(&self) -> Vec<u32> {
        let mut d = vec![self.a0];
        for (a, _) in &self.terms {
            let last = *d.last().unwrap();
            d.push(last.gcd(a));
        }
        d
    }

    pub fn is_complete(&self) -> bool {
        self.gcd_sequence().last() == Some(&1)
    }

    /// Milnor's sum `1/2 sum (a_j - 1)(D_j - D_{j+1})`; `None` until the gcd sequence reaches 1.
    pub fn delta(&self) -> Option<u64> {
        if !self.is_complete() {
            return None;
        }
        let d = self.gcd_sequence();
        let twice: u64 = self
            .terms
            .iter()
            .enumerate()
            .map(|(j, (a, _))| (*a as u64 - 1) * (d[j] - d[j + 1]) as u64)
            .sum();
        Some(twice / 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, ratio, Rat};

    fn s(c: &[Rat], n: usize) -> TruncSeries<Rat> {
        TruncSeries::new(&(), c.to_vec(), n)
    }

    #[test]
    fn geometric_inverse() {
        let inv = s(&[rat(1), rat(1)], 3).invert_unit().unwrap();
        assert_eq!(inv.coeffs(), &[rat(1), rat(-1), rat(1), rat(-1)]);
        assert_eq!(s(&[rat(2)], 0).invert_unit().unwrap().coeffs(), &[ratio(1, 2)]);
        assert_eq!(s(&[rat(0), rat(1)], 2).invert_unit(), Err(Error::NotAUnit));
    }

    #[test]
    fn square_root_binomial() {
        let r = s(&[rat(1), rat(2)], 3).nth_root_unit(2).unwrap();
        assert_eq!(r.coeffs(), &[rat(1), rat(1), ratio(-1, 2), ratio(1, 2)]);
        assert_eq!(r.mul(&r), s(&[rat(1), rat(2)], 3));
        let cube = s(&[rat(1), rat(1)], 5).pow(3);
        assert_eq!(cube.nth_root_unit(3).unwrap(), s(&[rat(1), rat(1)], 5));
        assert_eq!(s(&[rat(2)], 2).nth_root_unit(2), Err(Error::NotNormalized));
    }

    #[test]
    fn reversion() {
        let r = s(&[rat(0), rat(1), rat(1)], 3).reverse_series().unwrap();
        assert_eq!(r.coeffs(), &[rat(0), rat(1), rat(-1), rat(2)]);
        let half = s(&[rat(0), rat(2)], 3).reverse_series().unwrap();
        assert_eq!(half.coeffs()[1], ratio(1, 2));
        assert_eq!(s(&[rat(0), rat(0), rat(1)], 3).reverse_series(), Err(Error::NotReversible));
    }

    #[test]
    fn milnor_sums() {
        let cusp = PuiseuxData { a0: 2, terms: vec![(3, "1".into())] };
        assert_eq!(cusp.delta(), Some(1));
        let e6 = PuiseuxData { a0: 3, terms: vec![(4, "1".into())] };
        assert_eq!(e6.delta(), Some(3));
        let smooth = PuiseuxData { a0: 1, terms: vec![(2, "1".into())] };
        assert_eq!(smooth.delta(), Some(0));
        let open = PuiseuxData { a0: 4, terms: vec![(6, "1".into())] };
        assert_eq!(open.delta(), None);
        let two_pairs = PuiseuxData { a0: 4, terms: vec![(6, "1".into()), (7, "1".into())] };
        assert_eq!(two_pairs.gcd_sequence(), vec![4, 2, 1]);
        assert_eq!(two_pairs.delta(), Some((5 * 2 + 6) / 2));
    }
}
