use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AbsNorm, Ext, ExtCtx};
use crate::error::{Error, Result};
use crate::formulas::plane_invariants;
use crate::jets::{plane_equations, PlaneMap};
use crate::poly::ops::to_upoly;
use crate::poly::{rat, Field, QPoly, Rat, Ring, Var, VarSet};
use crate::puiseux::{param_intersection, ParamBranch};
use crate::series::TruncSeries;
use crate::solve::Shear;

type Alg = Ext<Rat>;
type Series = TruncSeries<Alg>;

/// One class of conjugate branches of the critical curve at infinity and its image.
#[derive(Clone, Debug, Serialize)]
pub struct InfinityBranch {
    /// Minimal equation of the `x`-coordinates of the points `(x : 1 : 0)` in the class.
    pub points: String,
    pub class_size: usize,
    /// `f̄(γ(t)) = f̄(P)(1 + c t + ...)`, `ḡ(γ(t)) = ḡ(P)(1 + d t + ...)`.
    pub f_at_p: String,
    pub g_at_p: String,
    pub c: String,
    pub d: String,
    pub cd_nonzero: bool,
    pub d2c_minus_d1d_nonzero: bool,
    pub a0: u32,
    pub exponents: Vec<u32>,
    pub delta: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct InfinityReport {
    pub d1: u32,
    pub d2: u32,
    /// Number of branches at infinity, counting conjugates.
    pub branch_count: usize,
    pub branches: Vec<InfinityBranch>,
    /// Intersection number of two distinct image branches.
    pub pairwise: Option<u64>,
    pub total: u64,
    pub formula_total: i64,
    /// `d1 = d2`: every image branch is smooth and they do not meet.
    pub smooth: bool,
}

fn xz() -> VarSet {
    VarSet::of(&[Var::X, Var::Z])
}

/// `p(x(t), t)` for `p` in `x, z`.
fn eval_series(p: &QPoly, x: &Series) -> Series {
    let alg = x.ctx().clone();
    let n = x.order();
    let mut xp = vec![Series::constant(&alg, Alg::one(&alg), n)];
    let mut acc = Series::new(&alg, vec![], n);
    for (m, c) in p.terms() {
        let i = m.exp(Var::X) as usize;
        while xp.len() <= i {
            let next = xp.last().unwrap().mul(x);
            xp.push(next);
        }
        let term = xp[i].scale(&Ext::from_base(&alg, c.clone())).shift(m.exp(Var::Z) as usize).truncate(n);
        acc = acc.add(&term);
    }
    acc
}

/// The branch `x = x(t)` of `p(x, t) = 0` through `(e, 0)`, by Newton iteration.
fn lift_branch(p: &QPoly, alg: &ExtCtx<Rat>, n: usize) -> Result<Series> {
    let px = p.diff(Var::X);
    let mut x = Series::constant(alg, alg.gen(), 0);
    if eval_series(&px, &x).coeff(0).inv().is_none() {
        return Err(Error::NondegeneracyFailed("infinity transversality".into()));
    }
    let mut prec = 1;
    while prec <= n {
        prec = (2 * prec).min(n + 1);
        let xs = Series::new(alg, x.coeffs().to_vec(), prec - 1);
        let step = eval_series(p, &xs).mul(&eval_series(&px, &xs).invert_unit()?);
        x = xs.sub(&step);
        if prec == n + 1 {
            break;
        }
    }
    Ok(x)
}

/// `psi(t(T))` where `T = t h(t)`, by Lagrange inversion:
/// `[T^k] psi(t(T)) = (1/k) [t^{k-1}] psi'(t) h(t)^{-k}` for `psi(0) = 0`.
fn lagrange(psi: &Series, h: &Series) -> Result<Series> {
    let alg = psi.ctx().clone();
    let n = psi.order().min(h.order() + 1);
    let hinv = h.truncate(n).invert_unit()?;
    let dpsi = Series::new(
        &alg,
        (1..=n).map(|k| psi.coeff(k).scale_base(&rat(k as i64))).collect(),
        n.saturating_sub(1),
    );
    let mut out = vec![psi.coeff(0)];
    let mut acc = dpsi;
    for k in 1..=n {
        acc = acc.mul(&hinv);
        out.push(acc.coeff(k - 1).scale_base(&crate::poly::ratio(1, k as i64)));
    }
    Ok(Series::new(&alg, out, n))
}

/// `h(x, 1, z)` for the homogenization `h` of `p` in degree `deg p`.
fn chart(p: &QPoly) -> QPoly {
    let all = VarSet::of(&[Var::X, Var::Y, Var::Z]);
    let h = p.clone().with_vars(all).homogenize(p.degree(), Var::Z).expect("degree");
    h.eval_var(Var::Y, &rat(1)).with_vars(xz())
}

struct Expansion {
    branch: ParamBranch,
    record: InfinityBranch,
}

fn expand(f: &QPoly, g: &QPoly, j: &QPoly, n: usize) -> Result<Expansion> {
    let (d1, d2) = (f.degree(), g.degree());
    let a0 = d1 - d2;
    let m = to_upoly(&chart(j).eval_var(Var::Z, &rat(0)), Var::X).expect("univariate");
    let alg = ExtCtx::new(&m, 'e');
    let gamma = lift_branch(&chart(j), &alg, n)?;
    let fs = eval_series(&chart(f), &gamma);
    let gs = eval_series(&chart(g), &gamma);
    let fail = |what: &str| Error::NondegeneracyFailed(what.into());
    let (fp, gp) = (fs.coeff(0), gs.coeff(0));
    let fpi = fp.inv().ok_or_else(|| fail("f vanishes at a point at infinity"))?;
    let gpi = gp.inv().ok_or_else(|| fail("g vanishes at a point at infinity"))?;
    let c = fs.coeff(1).mul(&fpi);
    let d = gs.coeff(1).mul(&gpi);
    let cd = c.mul(&d).is_unit();
    let skew = c.scale_base(&rat(d2 as i64)).sub(&d.scale_base(&rat(d1 as i64))).is_unit();
    if !(cd && skew) {
        return Err(fail("c d = 0 or d2 c = d1 d"));
    }
    let finv = fs.invert_unit()?;
    let ratio = gs.mul(&finv);
    let kappa = ratio.coeff(0);
    let h = ratio.scale(&kappa.inv().ok_or(Error::NotAUnit)?).nth_root_unit(a0)?;
    let y = lagrange(&finv.shift(d1 as usize).truncate(n), &h)?;
    let branch = ParamBranch { alg: alg.clone(), g: kappa, a: a0, y };
    let data = branch.puiseux_data()?;
    let delta = data.delta().ok_or(Error::TruncationTooShort)?;
    let record = InfinityBranch {
        points: m.monic().coeffs().iter().rev().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
        class_size: alg.degree(),
        f_at_p: fp.to_string(),
        g_at_p: gp.to_string(),
        c: c.to_string(),
        d: d.to_string(),
        cd_nonzero: cd,
        d2c_minus_d1d_nonzero: skew,
        a0,
        exponents: data.exponents(),
        delta,
    };
    Ok(Expansion { branch, record })
}

/// Delta invariants of the projective closure of the discriminant at its points at infinity.
pub fn infinity_analysis(map: &PlaneMap) -> Result<InfinityReport> {
    let (f, g) = if map.f.degree() >= map.g.degree() { (&map.f, &map.g) } else { (&map.g, &map.f) };
    let (d1, d2) = (f.degree(), g.degree());
    let formula_total = plane_invariants(d1, d2).delta_infinity_total;
    let j = plane_equations(&PlaneMap::new(f.clone(), g.clone())).j;
    if d1 == d2 {
        return Ok(InfinityReport {
            d1,
            d2,
            branch_count: j.degree() as usize,
            branches: vec![],
            pairwise: None,
            total: 0,
            formula_total,
            smooth: true,
        });
    }
    let big_d = j.degree();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1f_1f_1f ^ ((d1 as u64) << 8) ^ d2 as u64);
    let mut shear = Shear::IDENTITY;
    for _ in 0..8 {
        let (fs, gs, js) = (shear.apply(f), shear.apply(g), shear.apply(&j));
        // (1:0:0) must stay off the closure of the critical curve
        let top = js.coeff(&crate::poly::Mono::var(Var::X, big_d as u16));
        if !Ring::is_zero(&top) {
            let mut order = ((d1 + 1) * (d1 - d2)).max(d1 + 2) as usize + 1;
            loop {
                match expand(&fs, &gs, &js, order) {
                    Ok(ex) => {
                        let size = ex.record.class_size as u64;
                        let pairwise =
                            if size > 1 { Some(param_intersection(&ex.branch, &ex.branch, true)?) } else { None };
                        let total = size * ex.record.delta + size * (size - 1) / 2 * pairwise.unwrap_or(0);
                        return Ok(InfinityReport {
                            d1,
                            d2,
                            branch_count: size as usize,
                            branches: vec![ex.record],
                            pairwise,
                            total,
                            formula_total,
                            smooth: false,
                        });
                    }
                    Err(Error::TruncationTooShort) if order < 256 => order *= 2,
                    Err(e) => return Err(e),
                }
            }
        }
        shear = Shear::random(&mut rng);
    }
    Err(Error::GenericityExhausted("a point at infinity in the y direction".into()))
}
