//! Newton–Puiseux expansion of plane curve germs, delta invariants and branch intersections.
//!
//! Branches are parametrized as `x = g t^a`, `y = Y(t)` with coefficients in an étale
//! algebra `Q[w]/(r)`; one such record stands for a whole class of conjugate branches.

use num_integer::Integer;
use serde::Serialize;

use crate::algebra::{AbsNorm, Ext, ExtCtx};
use crate::error::{Error, Result};
use crate::poly::linalg::det_ring;
use crate::poly::{rat, Field, MPoly, Mono, QPoly, Rat, Ring, UPoly, Var, VarSet};
use crate::roots::rational_roots;
use crate::series::{PuiseuxData, SeriesCtx, TruncSeries};
use crate::solve::{count_common_zeros, local_mult};

pub type Alg = Ext<Rat>;
type APoly = MPoly<Alg>;

fn xy() -> VarSet {
    VarSet::of(&[Var::X, Var::Y])
}

/// The rationals seen as the degree-one algebra `Q[w]/(w)`.
pub fn rational_alg() -> ExtCtx<Rat> {
    ExtCtx::new(&UPoly::x(&()), 'w')
}

/// One class of conjugate parametrized branches `x = g t^a, y = y(t)`.
#[derive(Clone, Debug)]
pub struct ParamBranch {
    pub alg: ExtCtx<Rat>,
    pub g: Alg,
    pub a: u32,
    pub y: TruncSeries<Alg>,
}

impl ParamBranch {
    pub fn class_size(&self) -> usize {
        self.alg.degree()
    }

    /// Exponents of `y` with nonzero coefficients until the gcd sequence reaches 1.
    pub fn puiseux_data(&self) -> Result<PuiseuxData> {
        let mut data = PuiseuxData { a0: self.a, terms: Vec::new() };
        if self.a == 1 {
            return Ok(data);
        }
        for (k, c) in self.y.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !c.is_unit() {
                return Err(Error::Unsupported("branch class with non-uniform exponents".into()));
            }
            data.terms.push((k as u32, self.coeff_text(c)));
            if data.is_complete() {
                return Ok(data);
            }
        }
        Err(Error::TruncationTooShort)
    }

    fn coeff_text(&self, c: &Alg) -> String {
        if self.alg.degree() == 1 {
            c.coeff(0).to_string()
        } else {
            c.to_string()
        }
    }
}

/// One branch record of a germ.
#[derive(Clone, Debug)]
pub struct Branch {
    pub center: [Rat; 2],
    pub data: PuiseuxData,
    pub class_size: usize,
    pub param: ParamBranch,
}

pub fn branch_delta(b: &Branch) -> u64 {
    b.data.delta().expect("gcd sequence reaches 1")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GermClass {
    Smooth,
    Node,
    OrdinaryCusp,
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchReport {
    pub data: PuiseuxData,
    pub class_size: usize,
    pub delta: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct GermAnalysis {
    pub branches: Vec<BranchReport>,
    /// Number of branches counting conjugates.
    pub branch_count: usize,
    /// `intersections[i][j]` between members of classes `i` and `j` (for `i == j`, two distinct conjugates).
    pub intersections: Vec<Vec<Option<u64>>>,
    pub delta: u64,
    pub class: GermClass,
}

/// `p` has no repeated factor: after a shear making it monic in `y`, `Res_y(p, p_y) != 0`.
pub fn is_squarefree(p: &QPoly) -> Result<bool> {
    let p = p.clone().with_vars(xy());
    if p.degree() == 0 {
        return Ok(true);
    }
    let py = p.diff(Var::Y);
    let px = p.diff(Var::X);
    // p is squarefree iff p and a generic combination of its partials share no component
    for c in 1..=8i64 {
        let d = &py + &px.scale(&rat(c));
        if d.is_zero() {
            continue;
        }
        match count_common_zeros(&p, &d) {
            Ok(_) => return Ok(true),
            Err(Error::CommonComponent) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(false)
}

/// Lift a rational polynomial into the algebra.
fn lift(p: &QPoly, alg: &ExtCtx<Rat>) -> APoly {
    p.map_coeffs(alg, |c| Ext::from_base(alg, c.clone()))
}

fn alg_pow(a: &Alg, e: i64) -> Result<Alg> {
    if e >= 0 {
        Ok(a.pow(e as u64))
    } else {
        Ok(a.inv().ok_or(Error::NotAUnit)?.pow((-e) as u64))
    }
}

/// Lower-left Newton polygon edges `(i0, j0) -> (i1, j1)` with `j0 > j1`, `i0 < i1`.
fn newton_edges(p: &APoly) -> Vec<((u32, u32), (u32, u32))> {
    let pts: Vec<(u32, u32)> = p.terms().keys().map(|m| (m.exp(Var::X) as u32, m.exp(Var::Y) as u32)).collect();
    let start_j = pts.iter().filter(|(i, _)| *i == 0).map(|(_, j)| *j).min().expect("x does not divide p");
    let Some(end_i) = pts.iter().filter(|(_, j)| *j == 0).map(|(i, _)| *i).min() else {
        return Vec::new();
    };
    let mut edges = Vec::new();
    let mut cur = (0u32, start_j);
    while cur.1 > 0 {
        // next vertex: minimize slope (j drop per i) from cur, take the farthest on ties
        let mut best: Option<(u32, u32)> = None;
        for &(i, j) in &pts {
            if j >= cur.1 || i <= cur.0 || i > end_i {
                continue;
            }
            best = match best {
                None => Some((i, j)),
                Some((bi, bj)) => {
                    // compare (cur.1 - j)/(i - cur.0) against (cur.1 - bj)/(bi - cur.0); steeper drop wins
                    let lhs = (cur.1 - j) as i64 * (bi - cur.0) as i64;
                    let rhs = (cur.1 - bj) as i64 * (i - cur.0) as i64;
                    if lhs > rhs || (lhs == rhs && i > bi) {
                        Some((i, j))
                    } else {
                        Some((bi, bj))
                    }
                }
            };
        }
        let next = best.expect("polygon reaches the x axis");
        edges.push((cur, next));
        cur = next;
    }
    edges
}

struct Expansion {
    alg: ExtCtx<Rat>,
    g: Alg,
    a: u32,
    /// Known part of `y` as coefficients in `t`.
    prefix: Vec<Alg>,
    /// `y = prefix(t) + t^m * y_current`.
    m: u32,
}

/// Substitute `s = gamma t^p`, `y = t^q (c + y1)` and divide by `t^n`.
fn substitute(p: &APoly, gamma: &Alg, c: &Alg, pp: u32, q: u32) -> APoly {
    let alg = p.ctx().clone();
    let cy = &APoly::constant(&alg, xy(), c.clone()) + &APoly::var(&alg, xy(), Var::Y);
    let maxj = p.degree_in(Var::Y) as usize;
    let mut pows = vec![APoly::one(&alg, xy())];
    for k in 1..=maxj {
        let next = &pows[k - 1] * &cy;
        pows.push(next);
    }
    let n = p.terms().keys().map(|m| pp * m.exp(Var::X) as u32 + q * m.exp(Var::Y) as u32).min().unwrap();
    let mut out = APoly::zero(&alg, xy());
    for (m, a) in p.terms() {
        let (i, j) = (m.exp(Var::X) as u32, m.exp(Var::Y) as usize);
        let coef = a.mul(&gamma.pow(i as u64));
        let e = pp * i + q * j as u32 - n;
        let t = pows[j].mul_mono(&Mono::var(Var::X, e as u16)).scale(&coef);
        out = &out + &t;
    }
    out
}

/// Solve `p(t, y1) = 0` with `y1(0) = 0` for a simple root, to order `n`.
fn hensel(p: &APoly, n: usize) -> Result<TruncSeries<Alg>> {
    let alg = p.ctx().clone();
    let coeffs: Vec<TruncSeries<Alg>> = p
        .coeffs_in(Var::Y)
        .iter()
        .map(|c| {
            let mut v = vec![Alg::zero(&alg); n + 1];
            for (m, a) in c.terms() {
                let e = m.exp(Var::X) as usize;
                if e <= n {
                    v[e] = a.clone();
                }
            }
            TruncSeries::new(&alg, v, n)
        })
        .collect();
    let u = coeffs.get(1).map(|c| c.coeff(0)).unwrap_or_else(|| Alg::zero(&alg));
    let uinv = u.inv().ok_or(Error::NotAUnit)?;
    let mut y = TruncSeries::new(&alg, vec![], n);
    for k in 1..=n {
        let mut acc = TruncSeries::new(&alg, vec![], n);
        for c in coeffs.iter().rev() {
            acc = acc.mul(&y).add(c);
        }
        let r = acc.coeff(k);
        let mut c = y.coeffs().to_vec();
        c[k] = r.neg().mul(&uinv);
        y = TruncSeries::new(&alg, c, n);
    }
    Ok(y)
}

fn finish(ex: &Expansion, tail: &TruncSeries<Alg>, order: usize) -> ParamBranch {
    let mut c = ex.prefix.clone();
    c.resize(order + 1, Alg::zero(&ex.alg));
    for (k, a) in tail.coeffs().iter().enumerate() {
        let e = k + ex.m as usize;
        if e <= order {
            c[e] = c[e].add(a);
        }
    }
    ParamBranch { alg: ex.alg.clone(), g: ex.g.clone(), a: ex.a, y: TruncSeries::new(&ex.alg, c, order) }
}

fn expand(p: &APoly, ex: Expansion, order: usize, out: &mut Vec<ParamBranch>) -> Result<()> {
    let alg = ex.alg.clone();
    let mut p = p.clone();
    // y = prefix exactly is a component
    if p.terms().keys().all(|m| m.exp(Var::Y) > 0) {
        out.push(finish(&ex, &TruncSeries::new(&alg, vec![], order), order));
        p = p.div_exact(&APoly::var(&alg, xy(), Var::Y)).expect("y divides");
        if !Ring::is_zero(&p.constant_term()) {
            return Ok(());
        }
    }
    for ((i0, j0), (i1, j1)) in newton_edges(&p) {
        let (di, dj) = (i1 - i0, j0 - j1);
        let k = di.gcd(&dj);
        let (q, pp) = (di / k, dj / k);
        let phi: Vec<Alg> = (0..=k)
            .map(|t| p.coeff(&Mono([(i0 + t * q) as u16, (j0 - t * pp) as u16, 0, 0, 0, 0, 0])))
            .collect();
        // (alpha, beta) with q alpha - p beta = 1
        let eg = (q as i64).extended_gcd(&(pp as i64));
        let (alpha, beta) = (eg.x, -eg.y);
        for (w0, mult, root_alg) in edge_roots(&phi, &alg)? {
            let gamma = alg_pow(&w0, alpha)?;
            let c = alg_pow(&w0, beta)?;
            let lifted = |a: &Alg| -> Alg { embed_const(a, &root_alg) };
            let p_here = if root_alg == alg { p.clone() } else { p.map_coeffs(&root_alg, &lifted) };
            let p1 = substitute(&p_here, &gamma, &c, pp, q);
            let g_new = lifted(&ex.g).mul(&gamma.pow(ex.a as u64));
            // prefix(gamma t^p) + gamma^m t^{pm} t^q c
            let new_len = (ex.prefix.len() as u32 * pp).max(pp * ex.m + q + 1) as usize;
            let mut prefix = vec![Alg::zero(&root_alg); new_len];
            for (e, a) in ex.prefix.iter().enumerate() {
                if !a.is_zero() {
                    prefix[e * pp as usize] = lifted(a).mul(&gamma.pow(e as u64));
                }
            }
            let lead_e = (pp * ex.m + q) as usize;
            prefix[lead_e] = prefix[lead_e].add(&gamma.pow(ex.m as u64).mul(&c));
            let next = Expansion { alg: root_alg.clone(), g: g_new, a: ex.a * pp, prefix, m: pp * ex.m + q };
            if mult == 1 {
                let scale = gamma.pow(ex.m as u64);
                let need = order.saturating_sub(next.m as usize);
                let tail = hensel(&p1, need.max(1))?.scale(&scale).shift(next.m as usize);
                let mut b = finish(&Expansion { m: 0, ..next }, &tail, order);
                b.y = b.y.truncate(order);
                out.push(b);
            } else {
                let scaled = Expansion { ..next };
                // the new unknown enters as gamma^m t^{pm+q} y1
                let factor = gamma.pow(ex.m as u64);
                let p1 = p1.compose(&[(
                    Var::Y,
                    APoly::var(&root_alg, xy(), Var::Y).scale(&factor.inv().ok_or(Error::NotAUnit)?),
                )]);
                let mut sub = Vec::new();
                expand(&p1, scaled, order, &mut sub)?;
                out.extend(sub);
            }
        }
    }
    Ok(())
}

fn embed_const(a: &Alg, target: &ExtCtx<Rat>) -> Alg {
    debug_assert!(a.as_poly().deg() == 0 || a.ext_ctx() == target);
    if a.ext_ctx() == target {
        a.clone()
    } else {
        Ext::from_base(target, a.coeff(0))
    }
}

/// Nonzero roots of the edge polynomial `sum phi_t w^t`: rational roots with their
/// multiplicities in the current algebra, and the remaining simple roots as one class.
fn edge_roots(phi: &[Alg], alg: &ExtCtx<Rat>) -> Result<Vec<(Alg, usize, ExtCtx<Rat>)>> {
    if alg.degree() > 1 {
        return Err(Error::Unsupported("repeated edge root over an algebraic extension".into()));
    }
    let poly = UPoly::new(&(), phi.iter().map(|a| a.coeff(0)).collect());
    let mut rest = poly.clone();
    let mut out = Vec::new();
    for r in rational_roots(&poly) {
        let lin = UPoly::new(&(), vec![-r.clone(), rat(1)]);
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&lin) {
            rest = q;
            mult += 1;
        }
        out.push((Ext::from_base(alg, r), mult, alg.clone()));
    }
    if rest.deg() > 0 {
        if !rest.is_squarefree() {
            return Err(Error::Unsupported("repeated irrational edge root".into()));
        }
        let cls = ExtCtx::new(&rest, 'w');
        out.push((cls.gen(), 1, cls));
    }
    Ok(out)
}

/// Coordinates in which no branch at the origin is tangent to `x = 0`.
fn normalize_germ(p: &QPoly, center: &[Rat; 2]) -> Result<QPoly> {
    let pt = [(Var::X, center[0].clone()), (Var::Y, center[1].clone())];
    if !Ring::is_zero(&p.clone().with_vars(xy()).eval(&pt)) {
        return Err(Error::NotAZero);
    }
    let p0 = p.clone().with_vars(xy()).translate(&pt);
    for c in 0..=16i64 {
        let m = vec![vec![rat(1), rat(c)], vec![rat(0), rat(1)]];
        let q = p0.linear_change(&[Var::X, Var::Y], &m)?;
        let low = q.lowest_form();
        if !Ring::is_zero(&low.coeff(&Mono::var(Var::Y, low.degree() as u16))) {
            return Ok(q);
        }
    }
    Err(Error::GenericityExhausted("tangent cone".into()))
}

/// All branches of `p = 0` at `center`, expanded to `order` terms.
pub fn newton_puiseux_order(p: &QPoly, center: &[Rat; 2], order: usize) -> Result<Vec<Branch>> {
    if !is_squarefree(p)? {
        return Err(Error::NonReduced);
    }
    let q = normalize_germ(p, center)?;
    let alg = rational_alg();
    let ex = Expansion { alg: alg.clone(), g: Alg::one(&alg), a: 1, prefix: vec![], m: 0 };
    let mut params = Vec::new();
    expand(&lift(&q, &alg), ex, order, &mut params)?;
    params
        .into_iter()
        .map(|pb| {
            Ok(Branch { center: center.clone(), data: pb.puiseux_data()?, class_size: pb.class_size(), param: pb })
        })
        .collect()
}

pub fn newton_puiseux(p: &QPoly, center: &[Rat; 2]) -> Result<Vec<Branch>> {
    let mut order = 8 + 2 * p.degree() as usize;
    loop {
        match newton_puiseux_order(p, center, order) {
            Err(Error::TruncationTooShort) if order < 512 => order *= 2,
            r => return r,
        }
    }
}

/// Intersection number of two parametrized branches over a common algebra `B`.
///
/// Returns `ord_t N(y1(t) - y2(s))` where `s` ranges over the solutions of
/// `g2 s^{a2} = g1 t^{a1}`; the norm is a division-free determinant.
pub fn norm_order<B: AbsNorm>(
    y1: &TruncSeries<B>,
    a1: u32,
    g1: &B,
    y2: &TruncSeries<B>,
    a2: u32,
    g2: &B,
) -> Result<u64> {
    let base = y1.ctx().clone();
    let n = a2 as usize;
    let g = g1.mul(&g2.inv().ok_or(Error::NotAUnit)?);
    let prec = (y1.order() + 1).min(a1 as usize * ((y2.order() + 1) / n));
    if prec == 0 {
        return Err(Error::TruncationTooShort);
    }
    let ord = prec - 1;
    let zero = TruncSeries::new(&base, vec![], ord);
    // element y1(t) - y2(s) as sum_r e_r(t) s^r
    let mut elem = vec![zero.clone(); n];
    elem[0] = y1.truncate(ord);
    for (k, c) in y2.coeffs().iter().enumerate() {
        let (r, qd) = (k % n, k / n);
        let shift = a1 as usize * qd;
        if shift > ord || c.is_zero() {
            continue;
        }
        let term = TruncSeries::constant(&base, c.mul(&g.pow(qd as u64)), ord - shift).shift(shift);
        elem[r] = elem[r].sub(&term);
    }
    let times_s = |v: &[TruncSeries<B>]| -> Vec<TruncSeries<B>> {
        let mut w = vec![zero.clone(); n];
        let top = v[n - 1].scale(&g);
        w[0] = if (a1 as usize) <= ord {
            TruncSeries::new(&base, top.coeffs()[..=ord - a1 as usize].to_vec(), ord - a1 as usize).shift(a1 as usize)
        } else {
            zero.clone()
        };
        w[1..n].clone_from_slice(&v[..(n - 1)]);
        w
    };
    let mut cols = vec![elem];
    for _ in 1..n {
        let next = times_s(cols.last().unwrap());
        cols.push(next);
    }
    let m: Vec<Vec<TruncSeries<B>>> = (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect();
    let ctx = SeriesCtx { base: base.clone(), order: ord };
    let det = det_ring(&m, &ctx);
    match det.valuation() {
        None => Err(Error::TruncationTooShort),
        Some(v) if det.coeff(v).is_unit() => Ok(v as u64),
        Some(_) => Err(Error::Unsupported("intersection number differs across conjugates".into())),
    }
}

type Alg2 = Ext<Alg>;

/// `A[w']/((r(w') - r(w)) / (w' - w))`: pairs of distinct conjugates of one class.
pub fn pair_algebra_same(alg: &ExtCtx<Rat>) -> ExtCtx<Alg> {
    let r = alg.modulus();
    let w = alg.gen();
    let d = r.deg();
    // coefficient of w'^i in (r(w') - r(w)) / (w' - w): sum_{k > i} r_k w^{k-1-i}
    let coeffs: Vec<Alg> = (0..d)
        .map(|i| {
            (i + 1..=d).fold(Alg::zero(alg), |acc, k| acc.add(&w.pow((k - 1 - i) as u64).scale_base(&r.coeff(k))))
        })
        .collect();
    ExtCtx::new(&UPoly::new(alg, coeffs), 'v')
}

/// `A1 (x) A2` presented as `A1[w']/(r2(w'))`.
pub fn pair_algebra_cross(a1: &ExtCtx<Rat>, a2: &ExtCtx<Rat>) -> ExtCtx<Alg> {
    let r2 = a2.modulus();
    ExtCtx::new(&UPoly::new(a1, r2.coeffs().iter().map(|c| Ext::from_base(a1, c.clone())).collect()), 'v')
}

pub fn embed_first(a: &Alg, b: &ExtCtx<Alg>) -> Alg2 {
    Ext::from_base(b, a.clone())
}

pub fn embed_second(a: &Alg, b: &ExtCtx<Alg>) -> Alg2 {
    let base = b.0.base.clone();
    a.eval_at(&b.gen(), |q: &Rat| Ext::from_base(b, Ext::from_base(&base, q.clone())))
}

fn series_in(y: &TruncSeries<Alg>, b: &ExtCtx<Alg>, second: bool) -> TruncSeries<Alg2> {
    y.map(b, |c| if second { embed_second(c, b) } else { embed_first(c, b) })
}

/// Intersection number between two distinct members of the classes of `b1` and `b2`.
pub fn param_intersection(b1: &ParamBranch, b2: &ParamBranch, same_class: bool) -> Result<u64> {
    let b = if same_class { pair_algebra_same(&b1.alg) } else { pair_algebra_cross(&b1.alg, &b2.alg) };
    let (y1, y2) = (series_in(&b1.y, &b, false), series_in(&b2.y, &b, true));
    let (g1, g2) = (embed_first(&b1.g, &b), embed_second(&b2.g, &b));
    norm_order(&y1, b1.a, &g1, &y2, b2.a, &g2)
}

pub fn branch_intersection(b1: &Branch, b2: &Branch) -> Result<u64> {
    param_intersection(&b1.param, &b2.param, false)
}

fn analyze_at_order(p: &QPoly, center: &[Rat; 2], order: usize) -> Result<GermAnalysis> {
    let branches = newton_puiseux_order(p, center, order)?;
    let k = branches.len();
    let mut inter = vec![vec![None; k]; k];
    let mut delta: u64 = 0;
    for i in 0..k {
        let bi = &branches[i];
        let s = bi.class_size as u64;
        delta += s * branch_delta(bi);
        if s > 1 {
            let v = param_intersection(&bi.param, &bi.param, true)?;
            inter[i][i] = Some(v);
            delta += s * (s - 1) / 2 * v;
        }
        for j in i + 1..k {
            let v = param_intersection(&bi.param, &branches[j].param, false)?;
            inter[i][j] = Some(v);
            inter[j][i] = Some(v);
            delta += s * branches[j].class_size as u64 * v;
        }
    }
    let count: usize = branches.iter().map(|b| b.class_size).sum();
    let reports: Vec<BranchReport> = branches
        .iter()
        .map(|b| BranchReport { data: b.data.clone(), class_size: b.class_size, delta: branch_delta(b) })
        .collect();
    let smooth = |b: &BranchReport| b.data.a0 == 1;
    let class = if count == 1 && smooth(&reports[0]) {
        GermClass::Smooth
    } else if count == 2 && reports.iter().all(smooth) && delta == 1 {
        GermClass::Node
    } else if count == 1 && reports[0].data.a0 == 2 && reports[0].data.exponents().first() == Some(&3) && delta == 1 {
        GermClass::OrdinaryCusp
    } else {
        GermClass::Other
    };
    Ok(GermAnalysis { branches: reports, branch_count: count, intersections: inter, delta, class })
}

/// Branches, delta invariant and classification of the germ of `p = 0` at `center`.
pub fn analyze_germ(p: &QPoly, center: &[Rat; 2]) -> Result<GermAnalysis> {
    let mut order = 8 + 2 * p.degree() as usize;
    loop {
        match analyze_at_order(p, center, order) {
            Err(Error::TruncationTooShort) if order < 512 => order *= 2,
            r => return r,
        }
    }
}

/// Milnor number `i(p_x, p_y; center)`.
pub fn milnor_number(p: &QPoly, center: &[Rat; 2]) -> Result<usize> {
    let p = p.clone().with_vars(xy());
    local_mult(&p.diff(Var::X), &p.diff(Var::Y), center)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> QPoly {
        parse_poly(s).unwrap()
    }
    fn o() -> [Rat; 2] {
        [rat(0), rat(0)]
    }

    #[test]
    fn cusp_branch() {
        let b = newton_puiseux(&p("y^2-x^3"), &o()).unwrap();
        assert_eq!(b.len(), 1);
        assert_eq!((b[0].data.a0, b[0].data.exponents()), (2, vec![3]));
        assert_eq!(branch_delta(&b[0]), 1);
    }

    #[test]
    fn node_branches() {
        let b = newton_puiseux(&p("y^2-x^2-x^3"), &o()).unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(|b| b.data.a0 == 1));
        let ys: Vec<Rat> = b.iter().map(|b| b.param.y.coeff(1).coeff(0) / b.param.g.coeff(0)).collect();
        assert!(ys.contains(&rat(1)) && ys.contains(&rat(-1)));
        assert_eq!(branch_intersection(&b[0], &b[1]).unwrap(), 1);
    }

    #[test]
    fn germ_table() {
        let g = analyze_germ(&p("y^2-x^3"), &o()).unwrap();
        assert_eq!((g.branch_count, g.delta, g.class), (1, 1, GermClass::OrdinaryCusp));
        let g = analyze_germ(&p("y^2-x^2-x^3"), &o()).unwrap();
        assert_eq!((g.branch_count, g.delta, g.class), (2, 1, GermClass::Node));
        let g = analyze_germ(&p("y^2-x^4"), &o()).unwrap();
        assert_eq!((g.branch_count, g.delta, g.class), (2, 2, GermClass::Other));
        let g = analyze_germ(&p("y^3-x^4"), &o()).unwrap();
        assert_eq!((g.branch_count, g.delta), (1, 3));
        let g = analyze_germ(&p("y^3-x^2*y"), &o()).unwrap();
        assert_eq!((g.branch_count, g.delta), (3, 3));
    }

    #[test]
    fn conjugate_classes() {
        // two branches y = ±sqrt(2) x, one class over Q(sqrt 2)
        let g = analyze_germ(&p("y^2-2*x^2"), &o()).unwrap();
        assert_eq!((g.branch_count, g.delta, g.branches.len()), (2, 1, 1));
        // tangent to the y axis
        let g = analyze_germ(&p("x^2-y^3"), &o()).unwrap();
        assert_eq!((g.branch_count, g.delta), (1, 1));
    }

    #[test]
    fn intersections_of_curves() {
        let g = analyze_germ(&p("y^2-x^4"), &o()).unwrap();
        assert_eq!(g.intersections[0][1], Some(2));
        let g = analyze_germ(&p("x^2*y-y^3+x^3*y"), &o()).unwrap_or_else(|e| panic!("{e}"));
        assert!(g.branch_count >= 3);
    }

    #[test]
    fn non_reduced_rejected() {
        assert_eq!(analyze_germ(&p("y^2"), &o()).unwrap_err(), Error::NonReduced);
    }

    #[test]
    fn milnor_formula() {
        for s in ["y^2-x^3", "y^2-x^2-x^3", "y^2-x^4", "y^3-x^4", "y^3-x^2*y", "y^2-2*x^2", "y^4-x^6-x^7"] {
            let q = p(s);
            let g = analyze_germ(&q, &o()).unwrap();
            let mu = milnor_number(&q, &o()).unwrap() as i64;
            assert_eq!(mu, 2 * g.delta as i64 - g.branch_count as i64 + 1, "{s}");
        }
    }
}
