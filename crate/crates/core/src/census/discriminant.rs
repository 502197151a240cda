use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Ext, ExtCtx};
use crate::error::{Error, Result};
use crate::jets::{plane_equations, PlaneMap};
use crate::poly::ops::to_upoly;
use crate::poly::{rat, resultant, Mono, QPoly, Rat, Ring, UPoly, Var, VarSet};
use crate::puiseux::is_squarefree;
use crate::solve::{count_solution_overlap, count_variety, Shear};

type Alg = Ext<Rat>;

fn xy() -> VarSet {
    VarSet::of(&[Var::X, Var::Y])
}

fn uv() -> VarSet {
    VarSet::of(&[Var::U, Var::V])
}

/// Implicit equation of the discriminant, in the target coordinates `u, v`.
#[derive(Clone, Debug)]
pub struct DiscriminantResult {
    pub poly: QPoly,
    /// Domain shear under which every fiber `f = u0` was separated by `x`.
    pub shear: Shear,
    pub nodes: Vec<i64>,
}

impl DiscriminantResult {
    pub fn degree(&self) -> u32 {
        self.poly.degree()
    }
}

pub(super) fn y_monic(p: &QPoly) -> bool {
    let top = p.coeffs_in(Var::Y).pop().unwrap();
    p.degree_in(Var::Y) == p.degree() && top.is_constant() && !top.is_zero()
}

fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

pub(super) fn inv(a: &Alg) -> Option<Alg> {
    let m = a.ext_ctx().modulus();
    a.as_poly().inv_mod(&m).map(|p| Ext::from_poly(a.ext_ctx(), &p))
}

fn trim(p: &mut Vec<Alg>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// `a mod b` in `A[y]`; `None` when the leading coefficient of `b` is a zero divisor.
fn rem(a: &[Alg], b: &[Alg]) -> Option<Vec<Alg>> {
    let lc = inv(b.last()?)?;
    let mut r = a.to_vec();
    while r.len() >= b.len() {
        let k = r.len() - b.len();
        let q = r.last().unwrap().mul(&lc);
        for (i, c) in b.iter().enumerate() {
            r[k + i] = r[k + i].sub(&q.mul(c));
        }
        r.pop();
        trim(&mut r);
    }
    Some(r)
}

/// The common root of two polynomials of `A[y]` whose gcd is linear over every factor of `A`.
pub(super) fn common_root(a: Vec<Alg>, b: Vec<Alg>) -> Option<Alg> {
    let (mut a, mut b) = (a, b);
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = rem(&a, &b)?;
        a = b;
        b = r;
    }
    if a.len() != 2 {
        return None;
    }
    Some(a[0].neg().mul(&inv(&a[1])?))
}

/// Coefficients in `y` of `p(e, y)` for the generator `e` of `alg`.
pub(super) fn specialize(p: &QPoly, alg: &ExtCtx<Rat>) -> Vec<Alg> {
    let e = alg.gen();
    p.coeffs_in(Var::Y)
        .iter()
        .map(|c| {
            let u = to_upoly(c, Var::X).expect("bivariate");
            u.coeffs().iter().rev().fold(Alg::zero(alg), |acc, a| acc.mul(&e).add(&Ext::from_base(alg, a.clone())))
        })
        .collect()
}

pub(super) fn eval_alg(p: &QPoly, x: &Alg, y: &Alg) -> Alg {
    let alg = x.ext_ctx();
    let mut acc = Alg::zero(alg);
    for (m, c) in p.terms() {
        let t = x.pow(m.exp(Var::X) as u64).mul(&y.pow(m.exp(Var::Y) as u64));
        acc = acc.add(&t.scale_base(c));
    }
    acc
}

/// `prod (v - g(p))` over the points `p` of `J = 0, f = u0`, highest power first.
fn fiber_charpoly(j: &QPoly, f: &QPoly, g: &QPoly, u0: i64, n: usize) -> Option<Vec<Rat>> {
    let fu = f - &QPoly::constant(&(), xy(), rat(u0));
    let r = resultant(j, &fu, Var::Y).ok()?.with_vars(VarSet::of(&[Var::X]));
    let r = to_upoly(&r, Var::X)?;
    if r.deg() != n || !r.is_squarefree() {
        return None;
    }
    let alg = ExtCtx::new(&r, 'x');
    let y0 = common_root(specialize(j, &alg), specialize(&fu, &alg))?;
    Some(eval_alg(g, &alg.gen(), &y0).charpoly())
}

/// Squarefree defining polynomial of `F(C(F))`, in `u, v`.
///
/// For `n + 1` values `u0`, the fiber `C ∩ {f = u0}` is a squarefree zero-dimensional set
/// separated by `x`; the norm of `v - g` over it is `Δ(u0, v)`, and the coefficients are
/// interpolated in `u`.
pub fn discriminant_implicitize(map: &PlaneMap) -> Result<DiscriminantResult> {
    let j = plane_equations(map).j;
    if j.is_constant() {
        return Err(Error::DegreeTooSmall { target: 1, degree: 0 });
    }
    let n = (j.degree() * map.f.degree()) as usize;
    let bound = (j.degree() * map.f.degree().max(map.g.degree())) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(fnv(&format!("{};{}", map.f, map.g)));
    for _ in 0..8 {
        let shear = Shear::random(&mut rng);
        let (js, fs, gs) = (shear.apply(&j), shear.apply(&map.f), shear.apply(&map.g));
        if !y_monic(&js) || !(y_monic(&fs) || fs.degree_in(Var::Y) == 0) {
            continue;
        }
        // interpolation nodes plus one check node, skipping fibers through critical values of f on C
        let want = bound + 2;
        let mut nodes = Vec::new();
        let mut values = Vec::new();
        let mut next = 0i64;
        while nodes.len() < want && next < 8 * want as i64 + 64 {
            let batch: Vec<i64> = (next..next + want as i64).map(|k| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }).collect();
            next += want as i64;
            let got: Vec<Option<Vec<Rat>>> = batch.par_iter().map(|&u0| fiber_charpoly(&js, &fs, &gs, u0, n)).collect();
            for (u0, c) in batch.into_iter().zip(got) {
                if let Some(c) = c {
                    if nodes.len() < want {
                        nodes.push(u0);
                        values.push(c);
                    }
                }
            }
        }
        if nodes.len() < want {
            continue;
        }
        let xs: Vec<Rat> = nodes[..want - 1].iter().map(|&u| rat(u)).collect();
        let mut poly = QPoly::zero(&(), uv());
        let last = rat(*nodes.last().unwrap());
        let mut ok = true;
        for k in 0..=n {
            let ys: Vec<Rat> = values[..want - 1].iter().map(|c| c[k].clone()).collect();
            let ck = UPoly::interpolate(&(), &xs, &ys);
            if ck.eval(&last) != values[want - 1][k] {
                ok = false;
                break;
            }
            let vpow = (n - k) as u16;
            for (i, a) in ck.coeffs().iter().enumerate() {
                if !Ring::is_zero(a) {
                    poly.add_term(Mono::var(Var::U, i as u16).mul(&Mono::var(Var::V, vpow)), a.clone());
                }
            }
        }
        if !ok {
            continue;
        }
        let poly = primitive(&poly);
        let as_xy = poly.compose(&[(Var::U, QPoly::var(&(), xy(), Var::X)), (Var::V, QPoly::var(&(), xy(), Var::Y))]);
        if !is_squarefree(&as_xy.with_vars(xy()))? {
            return Err(Error::DegreeMismatch { expected: n, got: 0 });
        }
        return Ok(DiscriminantResult { poly, shear, nodes });
    }
    Err(Error::GenericityExhausted("discriminant fibers".into()))
}

/// Integer coefficients with gcd 1 and positive leading coefficient.
fn primitive(p: &QPoly) -> QPoly {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    let den = p.terms().values().fold(num_bigint::BigInt::one(), |d, c| d.lcm(c.denom()));
    let p = p.scale(&Rat::from_integer(den));
    let g = p.terms().values().fold(num_bigint::BigInt::zero(), |g, c| g.gcd(c.numer()));
    if g.is_zero() {
        return p;
    }
    let neg = p.leading_term().is_some_and(|(_, c)| c.is_negative());
    p.scale(&Rat::from_integer(if neg { -g } else { g }).recip())
}

fn to_xy(p: &QPoly) -> QPoly {
    p.compose(&[(Var::U, QPoly::var(&(), xy(), Var::X)), (Var::V, QPoly::var(&(), xy(), Var::Y))]).with_vars(xy())
}

/// `(total singular points, nodes)` of a squarefree discriminant with `known_cusps` cusps.
pub fn discriminant_singularities(disc: &QPoly, known_cusps: i64) -> Result<(usize, i64)> {
    let d = to_xy(disc);
    let (du, dv) = (d.diff(Var::X), d.diff(Var::Y));
    let total = if du.is_zero() || dv.is_zero() {
        count_variety(&[d.clone(), du, dv])?
    } else {
        count_solution_overlap((&d, &du), (&d, &dv))?
    };
    Ok((total, total as i64 - known_cusps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn disc(f: &str, g: &str) -> String {
        discriminant_implicitize(&PlaneMap::parse(f, g).unwrap()).unwrap().poly.to_string()
    }

    #[test]
    fn hand_oracles() {
        assert_eq!(disc("x", "y^2"), "v");
        assert_eq!(disc("x", "y^3+x*y"), "4*u^3+27*v^2");
    }

    #[test]
    fn singular_points() {
        let cusp = parse_poly("4*u^3+27*v^2").unwrap();
        assert_eq!(discriminant_singularities(&cusp, 1).unwrap(), (1, 0));
        assert_eq!(discriminant_singularities(&parse_poly("v").unwrap(), 0).unwrap(), (0, 0));
    }
}
