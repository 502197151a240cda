//! Sparse multivariate polynomials with a graded-lexicographic term table.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::field::{Field, Fp, Modulus, Rat, Ring};
use crate::error::{Error, Result};

pub const NVARS: usize = 7;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Var {
    X = 0,
    Y = 1,
    Z = 2,
    W = 3,
    U = 4,
    V = 5,
    T = 6,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::Z, Var::W, Var::U, Var::V, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }
    pub fn name(self) -> char {
        ['x', 'y', 'z', 'w', 'u', 'v', 't'][self as usize]
    }
    pub fn from_char(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Ordered subset of the variables, as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct VarSet(u8);

impl VarSet {
    pub fn of(vars: &[Var]) -> Self {
        VarSet(vars.iter().fold(0u8, |m, v| m | (1 << v.index())))
    }
    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }
    pub fn union(self, o: VarSet) -> VarSet {
        VarSet(self.0 | o.0)
    }
    pub fn with(self, v: Var) -> VarSet {
        VarSet(self.0 | (1 << v.index()))
    }
    pub fn without(self, v: Var) -> VarSet {
        VarSet(self.0 & !(1 << v.index()))
    }
    pub fn vars(self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|v| self.contains(*v)).collect()
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

/// Exponent vector over the fixed variable alphabet, ordered graded-lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }
    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Mono::one();
        m.0[v.index()] = e;
        m
    }
    pub fn deg(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }
    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = [0u16; NVARS];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = self.0[i] + o.0[i];
        }
        Mono(r)
    }
    pub fn divides(&self, o: &Mono) -> bool {
        self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }
    pub fn div(&self, o: &Mono) -> Mono {
        let mut r = [0u16; NVARS];
        for (i, slot) in r.iter_mut().enumerate() {
            *slot = self.0[i] - o.0[i];
        }
        Mono(r)
    }
    pub fn with_exp(&self, v: Var, e: u16) -> Mono {
        let mut m = *self;
        m.0[v.index()] = e;
        m
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg().cmp(&other.deg()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Exact multivariate polynomial over a coefficient ring `K`.
///
/// The term table never stores zero coefficients; equality compares term tables only.
#[derive(Clone)]
pub struct MPoly<K: Ring> {
    ctx: K::Ctx,
    vars: VarSet,
    terms: BTreeMap<Mono, K>,
}

pub type QPoly = MPoly<Rat>;
pub type PPoly = MPoly<Fp>;

impl<K: Ring> PartialEq for MPoly<K> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<K: Ring> fmt::Debug for MPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly[")?;
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c:?})")?;
            for v in Var::ALL {
                let e = m.exp(v);
                if e > 0 {
                    write!(f, "*{}^{}", v.name(), e)?;
                }
            }
        }
        write!(f, "]")
    }
}

impl<K: Ring> MPoly<K> {
    pub fn zero(ctx: &K::Ctx, vars: VarSet) -> Self {
        MPoly { ctx: ctx.clone(), vars, terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &K::Ctx, vars: VarSet, c: K) -> Self {
        let mut p = Self::zero(ctx, vars);
        if !c.is_zero() {
            p.terms.insert(Mono::one(), c);
        }
        p
    }

    pub fn from_i64(ctx: &K::Ctx, vars: VarSet, c: i64) -> Self {
        Self::constant(ctx, vars, K::from_i64(ctx, c))
    }

    pub fn one(ctx: &K::Ctx, vars: VarSet) -> Self {
        Self::from_i64(ctx, vars, 1)
    }

    pub fn var(ctx: &K::Ctx, vars: VarSet, v: Var) -> Self {
        Self::monomial(ctx, vars.with(v), Mono::var(v, 1), K::one(ctx))
    }

    pub fn monomial(ctx: &K::Ctx, vars: VarSet, m: Mono, c: K) -> Self {
        let mut p = Self::zero(ctx, vars);
        for v in Var::ALL {
            if m.exp(v) > 0 {
                p.vars = p.vars.with(v);
            }
        }
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Build from (monomial, coefficient) pairs, merging duplicates.
    pub fn from_terms(ctx: &K::Ctx, vars: VarSet, terms: impl IntoIterator<Item = (Mono, K)>) -> Self {
        let mut p = Self::zero(ctx, vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }
    pub fn vars(&self) -> VarSet {
        self.vars
    }
    pub fn with_vars(mut self, vars: VarSet) -> Self {
        self.vars = self.vars.union(vars);
        self
    }
    pub fn terms(&self) -> &BTreeMap<Mono, K> {
        &self.terms
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.deg() == 0)
    }
    pub fn constant_term(&self) -> K {
        self.terms.get(&Mono::one()).cloned().unwrap_or_else(|| K::zero(&self.ctx))
    }
    pub fn coeff(&self, m: &Mono) -> K {
        self.terms.get(m).cloned().unwrap_or_else(|| K::zero(&self.ctx))
    }

    pub fn add_term(&mut self, m: Mono, c: K) {
        if c.is_zero() {
            return;
        }
        for v in Var::ALL {
            if m.exp(v) > 0 {
                self.vars = self.vars.with(v);
            }
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = old.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map(|m| m.deg()).unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v) as u32).max().unwrap_or(0)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Mono, &K)> {
        self.terms.iter().next_back()
    }

    /// Homogeneous component of top total degree.
    pub fn leading_form(&self) -> Self {
        let d = self.degree();
        self.filter_terms(|m| m.deg() == d)
    }

    /// Homogeneous component of lowest total degree (the tangent cone at the origin).
    pub fn lowest_form(&self) -> Self {
        let d = self.terms.keys().map(|m| m.deg()).min().unwrap_or(0);
        self.filter_terms(|m| m.deg() == d)
    }

    pub fn order(&self) -> u32 {
        self.terms.keys().map(|m| m.deg()).min().unwrap_or(0)
    }

    pub fn filter_terms(&self, keep: impl Fn(&Mono) -> bool) -> Self {
        MPoly {
            ctx: self.ctx.clone(),
            vars: self.vars,
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect(),
        }
    }

    pub fn map_coeffs<L: Ring>(&self, ctx: &L::Ctx, f: impl Fn(&K) -> L) -> MPoly<L> {
        MPoly::from_terms(ctx, self.vars, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    pub fn try_map_coeffs<L: Ring>(&self, ctx: &L::Ctx, f: impl Fn(&K) -> Result<L>) -> Result<MPoly<L>> {
        let mut out = MPoly::zero(ctx, self.vars);
        for (m, c) in &self.terms {
            out.add_term(*m, f(c)?);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx, self.vars);
        }
        let mut out = Self::zero(&self.ctx, self.vars);
        for (m, a) in &self.terms {
            out.add_term(*m, a.mul(c));
        }
        out
    }

    pub fn mul_mono(&self, m: &Mono) -> Self {
        let mut out = Self::zero(&self.ctx, self.vars);
        for (a, c) in &self.terms {
            out.add_term(a.mul(m), c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ctx, self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, v: Var) -> Result<Self> {
        if !self.vars.contains(v) {
            return Err(Error::UnknownVariable(v));
        }
        Ok(self.diff(v))
    }

    /// Partial derivative without the variable-list check.
    pub fn diff(&self, v: Var) -> Self {
        let mut out = Self::zero(&self.ctx, self.vars);
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e > 0 {
                out.add_term(m.with_exp(v, e - 1), c.scale_i64(e as i64));
            }
        }
        out
    }

    /// Substitute a constant for one variable.
    pub fn eval_var(&self, v: Var, value: &K) -> Self {
        let mut powers: Vec<K> = vec![K::one(&self.ctx)];
        let mut out = Self::zero(&self.ctx, self.vars.without(v));
        for (m, c) in &self.terms {
            let e = m.exp(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(value);
                powers.push(next);
            }
            out.add_term(m.with_exp(v, 0), c.mul(&powers[e]));
        }
        out
    }

    /// Evaluate at a full point given per variable (missing variables treated as zero).
    pub fn eval(&self, point: &[(Var, K)]) -> K {
        let mut acc = K::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let val = point
                    .iter()
                    .find(|(w, _)| *w == v)
                    .map(|(_, x)| x.clone())
                    .unwrap_or_else(|| K::zero(&self.ctx));
                t = t.mul(&val.pow(e as u64));
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn compose(&self, subs: &[(Var, MPoly<K>)]) -> Self {
        let mut vars = self.vars;
        for (v, q) in subs {
            vars = vars.without(*v).union(q.vars);
        }
        // restore variables that are not replaced
        for v in self.vars.vars() {
            if !subs.iter().any(|(w, _)| *w == v) {
                vars = vars.with(v);
            }
        }
        let mut cache: Vec<Vec<MPoly<K>>> = subs.iter().map(|(_, q)| vec![MPoly::one(&self.ctx, q.vars), q.clone()]).collect();
        let mut out = Self::zero(&self.ctx, vars);
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut t = MPoly::constant(&self.ctx, vars, c.clone());
            for (i, (v, _)) in subs.iter().enumerate() {
                let e = m.exp(*v) as usize;
                rest = rest.with_exp(*v, 0);
                if e == 0 {
                    continue;
                }
                while cache[i].len() <= e {
                    let next = &cache[i][cache[i].len() - 1] * &cache[i][1];
                    cache[i].push(next);
                }
                t = &t * &cache[i][e];
            }
            out = &out + &t.mul_mono(&rest);
        }
        out.vars = vars;
        out
    }

    /// Coefficients with respect to `v`, index i holding the coefficient of v^i.
    pub fn coeffs_in(&self, v: Var) -> Vec<MPoly<K>> {
        let n = self.degree_in(v) as usize;
        let rest = self.vars.without(v);
        let mut out = vec![Self::zero(&self.ctx, rest); n + 1];
        if self.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out[m.exp(v) as usize].add_term(m.with_exp(v, 0), c.clone());
        }
        out
    }

    pub fn from_coeffs_in(v: Var, coeffs: &[MPoly<K>], ctx: &K::Ctx, vars: VarSet) -> Self {
        let mut out = Self::zero(ctx, vars.with(v));
        for (i, c) in coeffs.iter().enumerate() {
            for (m, a) in &c.terms {
                out.add_term(m.with_exp(v, m.exp(v) + i as u16), a.clone());
            }
        }
        out
    }

    /// Multiply each term by `newvar^(target - deg)`.
    pub fn homogenize(&self, target: u32, newvar: Var) -> Result<Self> {
        let d = self.degree();
        if target < d {
            return Err(Error::DegreeTooSmall { target, degree: d });
        }
        let mut out = Self::zero(&self.ctx, self.vars.with(newvar));
        for (m, c) in &self.terms {
            out.add_term(m.with_exp(newvar, m.exp(newvar) + (target - m.deg()) as u16), c.clone());
        }
        Ok(out)
    }

    /// Set `var = 1`.
    pub fn dehomogenize(&self, var: Var) -> Self {
        let mut out = self.eval_var(var, &K::one(&self.ctx));
        out.vars = self.vars.without(var);
        out
    }

    /// Univariate coefficient vector (low to high) for a polynomial in `v` only.
    pub fn univariate_coeffs(&self, v: Var) -> Vec<K> {
        let n = self.degree_in(v) as usize;
        let mut out = vec![K::zero(&self.ctx); n + 1];
        for (m, c) in &self.terms {
            debug_assert!(m.deg() == m.exp(v) as u32, "not univariate in {v}");
            out[m.exp(v) as usize] = c.clone();
        }
        out
    }

    pub fn from_univariate(ctx: &K::Ctx, v: Var, coeffs: &[K]) -> Self {
        Self::from_terms(ctx, VarSet::of(&[v]), coeffs.iter().enumerate().map(|(i, c)| (Mono::var(v, i as u16), c.clone())))
    }

    /// Variables actually occurring in some term.
    pub fn support_vars(&self) -> VarSet {
        let mut s = VarSet::default();
        for m in self.terms.keys() {
            for v in Var::ALL {
                if m.exp(v) > 0 {
                    s = s.with(v);
                }
            }
        }
        s
    }

    /// Translate so that `point` becomes the origin: p(v + a_v).
    pub fn translate(&self, point: &[(Var, K)]) -> Self {
        let subs: Vec<(Var, MPoly<K>)> = point
            .iter()
            .map(|(v, a)| (*v, &Self::var(&self.ctx, self.vars, *v) + &Self::constant(&self.ctx, self.vars, a.clone())))
            .collect();
        self.compose(&subs)
    }
}

impl<K: Field> MPoly<K> {
    /// Make the leading coefficient (graded-lex) equal to one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let (lm, lc) = other.leading_term()?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quo = Self::zero(&self.ctx, self.vars.union(other.vars));
        while let Some((m, c)) = rem.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let qm = m.div(lm);
            let qc = c.mul(&lc_inv);
            let sub = other.mul_mono(&qm).scale(&qc);
            rem = &rem - &sub;
            quo.add_term(qm, qc);
        }
        Some(quo)
    }

    /// Substitute `vars[i] -> sum_j m[i][j] vars[j]`.
    ///
    /// Composition: changing by `M` and then by `N` equals changing by `M * N`.
    pub fn linear_change(&self, vars: &[Var], m: &[Vec<Rat>]) -> Result<Self> {
        let n = vars.len();
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return Err(Error::SingularMatrix);
        }
        if super::linalg::det_rat(m) == Rat::from_integer(0.into()) {
            return Err(Error::SingularMatrix);
        }
        let mut all = self.vars;
        for v in vars {
            all = all.with(*v);
        }
        let mut subs = Vec::with_capacity(n);
        for (i, v) in vars.iter().enumerate() {
            let mut image = Self::zero(&self.ctx, all);
            for (j, w) in vars.iter().enumerate() {
                let c = K::from_rational(&self.ctx, &m[i][j])?;
                image.add_term(Mono::var(*w, 1), c);
            }
            subs.push((*v, image));
        }
        let mut out = self.compose(&subs);
        out.vars = all;
        Ok(out)
    }
}

impl MPoly<Rat> {
    /// Image under the reduction homomorphism Q -> F_p.
    pub fn reduce_mod(&self, p: u64) -> Result<MPoly<Fp>> {
        let m = Modulus(p);
        self.try_map_coeffs(&m, |c| Fp::from_rational(&m, c))
    }

    pub fn from_int_terms(vars: VarSet, terms: &[(Mono, i64)]) -> Self {
        Self::from_terms(&(), vars, terms.iter().map(|(m, c)| (*m, BigRational::from_integer((*c).into()))))
    }
}

impl<'a, K: Ring> Add for &'a MPoly<K> {
    type Output = MPoly<K>;
    fn add(self, rhs: &MPoly<K>) -> MPoly<K> {
        let mut out = self.clone();
        out.vars = out.vars.union(rhs.vars);
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<'a, K: Ring> Sub for &'a MPoly<K> {
    type Output = MPoly<K>;
    fn sub(self, rhs: &MPoly<K>) -> MPoly<K> {
        let mut out = self.clone();
        out.vars = out.vars.union(rhs.vars);
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.neg());
        }
        out
    }
}

impl<'a, K: Ring> Neg for &'a MPoly<K> {
    type Output = MPoly<K>;
    fn neg(self) -> MPoly<K> {
        MPoly {
            ctx: self.ctx.clone(),
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }
}

impl<'a, K: Ring> Mul for &'a MPoly<K> {
    type Output = MPoly<K>;
    fn mul(self, rhs: &MPoly<K>) -> MPoly<K> {
        let vars = self.vars.union(rhs.vars);
        let mut acc: BTreeMap<Mono, K> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let t = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(old) => *old = old.add(&t),
                    None => {
                        acc.insert(m, t);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MPoly { ctx: self.ctx.clone(), vars, terms: acc }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl<K: Ring> $tr for MPoly<K> {
            type Output = MPoly<K>;
            fn $f(self, rhs: MPoly<K>) -> MPoly<K> {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl<K: Ring> Neg for MPoly<K> {
    type Output = MPoly<K>;
    fn neg(self) -> MPoly<K> {
        -&self
    }
}
