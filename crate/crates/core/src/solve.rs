//! Counting zero-dimensional solution sets by elimination under random shears.
//!
//! Every count is taken over two primes from [`PRIMES`] and under two independent shears;
//! a shear can only merge points, so agreement at the largest value seen is the certificate.
//! Local orders are certified at the smallest value instead.

use std::cmp::Reverse;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jets::sphere_constraint;
use crate::poly::ops::to_upoly;
use crate::poly::{rat, Field, Fp, MPoly, Modulus, PPoly, QPoly, Rat, Ring, UPoly, Var, VarSet, PRIMES};

const MAX_SHEARS: usize = 8;
const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Integer matrix acting by `(x, y) -> (a x + b y, c x + d y)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Shear(pub [[i64; 2]; 2]);

impl Shear {
    pub const IDENTITY: Shear = Shear([[1, 0], [0, 1]]);

    pub fn random(rng: &mut impl Rng) -> Shear {
        loop {
            let m = [[rng.gen_range(-50..=50), rng.gen_range(-50..=50)], [rng.gen_range(-50..=50), rng.gen_range(-50..=50)]];
            if m[0][0] * m[1][1] - m[0][1] * m[1][0] != 0 {
                return Shear(m);
            }
        }
    }

    pub fn matrix(&self) -> Vec<Vec<Rat>> {
        self.0.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()
    }

    pub fn apply<K: Field>(&self, p: &MPoly<K>) -> MPoly<K> {
        p.linear_change(&[Var::X, Var::Y], &self.matrix()).expect("shear is invertible")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroCount {
    pub distinct: usize,
    /// Degree of the eliminant: the number of common zeros counted with multiplicity.
    pub resultant_degree: usize,
    pub shear: Shear,
    /// The independent shear that reproduced the count.
    pub check_shear: Shear,
    pub primes: Vec<u64>,
}

fn xy() -> VarSet {
    VarSet::of(&[Var::X, Var::Y])
}

/// `p` has a nonzero constant coefficient at `y^{deg p}`.
fn y_monic<K: Ring>(p: &MPoly<K>) -> bool {
    let n = p.degree();
    p.degree_in(Var::Y) == n && {
        let top = p.coeffs_in(Var::Y).pop().unwrap();
        top.is_constant() && !top.is_zero()
    }
}

/// Coefficients in `y` as dense polynomials in `x`.
fn y_coeffs(p: &PPoly) -> Vec<UPoly<Fp>> {
    p.coeffs_in(Var::Y).iter().map(|c| to_upoly(c, Var::X).expect("bivariate in x, y")).collect()
}

fn eval_y(cs: &[UPoly<Fp>], x0: &Fp, m: &Modulus) -> UPoly<Fp> {
    UPoly::new(m, cs.iter().map(|c| c.eval(x0)).collect())
}

/// `Res_y(p, q)` as a polynomial in `x`, by evaluation and interpolation.
///
/// Both inputs must be y-monic up to a constant, so that specialization commutes with
/// the resultant.
pub fn resultant_y_fp(p: &PPoly, q: &PPoly) -> UPoly<Fp> {
    let m = p.ctx().clone();
    let (pc, qc) = (y_coeffs(p), y_coeffs(q));
    let bound = (p.degree() * q.degree()) as usize;
    let xs: Vec<Fp> = (0..=bound).map(|i| Fp::from_i64(&m, i as i64 + 1)).collect();
    let ys: Vec<Fp> = xs.iter().map(|x0| eval_y(&pc, x0, &m).resultant(&eval_y(&qc, x0, &m))).collect();
    UPoly::interpolate(&m, &xs, &ys)
}

/// The x-eliminants of several systems under one shear over one prime.
fn eliminants(pairs: &[(&QPoly, &QPoly)], shear: &Shear, prime: u64) -> Result<Option<Vec<UPoly<Fp>>>> {
    let mut out = Vec::new();
    for (p, q) in pairs {
        let (p, q) = (shear.apply(&p.reduce_mod(prime)?), shear.apply(&q.reduce_mod(prime)?));
        if !(y_monic(&p) && y_monic(&q)) {
            return Ok(None);
        }
        out.push(resultant_y_fp(&p, &q));
    }
    Ok(Some(out))
}

/// A value measured under a shear and two primes.
struct Measured<T> {
    value: T,
    shear: Shear,
}

/// Run `measure` under random shears until two shears agree on the largest value seen.
fn certify<T: PartialEq + Ord + Clone>(
    seed: u64,
    pairs: &[(&QPoly, &QPoly)],
    measure: impl Fn(&[UPoly<Fp>]) -> Result<T>,
) -> Result<(T, Shear, Shear, Vec<u64>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: Vec<Measured<T>> = Vec::new();
    let mut attempts = 0;
    while attempts < MAX_SHEARS {
        let shear = Shear::random(&mut rng);
        let mut values = Vec::new();
        let mut primes = Vec::new();
        for &p in PRIMES.iter() {
            match eliminants(pairs, &shear, p) {
                Ok(Some(r)) => {
                    values.push(measure(&r)?);
                    primes.push(p);
                }
                Ok(None) => break,
                Err(Error::BadPrime(_)) => continue,
                Err(e) => return Err(e),
            }
            if values.len() == 2 {
                break;
            }
        }
        if values.len() < 2 {
            continue;
        }
        attempts += 1;
        if values[0] != values[1] {
            continue;
        }
        let v = values.swap_remove(0);
        let best = seen.iter().map(|m| m.value.clone()).max();
        if best.as_ref().is_none_or(|b| v >= *b) {
            if let Some(prev) = seen.iter().find(|m| m.value == v) {
                return Ok((v, prev.shear, shear, primes));
            }
        }
        seen.push(Measured { value: v, shear });
    }
    Err(Error::ShearExhausted(MAX_SHEARS))
}

fn seed_of(parts: &[&QPoly]) -> u64 {
    // a fixed function of the input so repeated calls are reproducible
    let mut h: u64 = DEFAULT_SEED;
    for p in parts {
        for b in p.to_string().bytes() {
            h = (h ^ b as u64).wrapping_mul(0x100_0000_01b3);
        }
    }
    h
}

fn sqfree_deg(r: &UPoly<Fp>) -> usize {
    r.squarefree_part().deg()
}

/// Distinct common affine zeros of two bivariate polynomials.
pub fn count_common_zeros(p: &QPoly, q: &QPoly) -> Result<ZeroCount> {
    count_common_zeros_seeded(p, q, seed_of(&[p, q]))
}

pub fn count_common_zeros_seeded(p: &QPoly, q: &QPoly, seed: u64) -> Result<ZeroCount> {
    let (p, q) = (p.clone().with_vars(xy()), q.clone().with_vars(xy()));
    if p.is_zero() || q.is_zero() {
        return Err(Error::CommonComponent);
    }
    if p.is_constant() || q.is_constant() {
        return Ok(ZeroCount {
            distinct: 0,
            resultant_degree: 0,
            shear: Shear::IDENTITY,
            check_shear: Shear::IDENTITY,
            primes: vec![],
        });
    }
    let (v, s1, s2, primes) = certify(seed, &[(&p, &q)], |r| {
        if r[0].is_zero() {
            return Err(Error::CommonComponent);
        }
        Ok((sqfree_deg(&r[0]), r[0].deg()))
    })?;
    Ok(ZeroCount { distinct: v.0, resultant_degree: v.1, shear: s1, check_shear: s2, primes })
}

/// Points common to all systems, each system a pair of bivariate polynomials.
pub fn count_solution_overlap(a: (&QPoly, &QPoly), b: (&QPoly, &QPoly)) -> Result<usize> {
    count_overlap_many(&[a, b])
}

pub fn count_overlap_many(systems: &[(&QPoly, &QPoly)]) -> Result<usize> {
    let owned: Vec<(QPoly, QPoly)> =
        systems.iter().map(|(p, q)| ((*p).clone().with_vars(xy()), (*q).clone().with_vars(xy()))).collect();
    if owned.iter().any(|(p, q)| p.is_zero() || q.is_zero()) {
        return Err(Error::CommonComponent);
    }
    if owned.iter().any(|(p, q)| p.is_constant() || q.is_constant()) {
        return Ok(0);
    }
    let refs: Vec<(&QPoly, &QPoly)> = owned.iter().map(|(p, q)| (p, q)).collect();
    let all: Vec<&QPoly> = owned.iter().flat_map(|(p, q)| [p, q]).collect();
    let (v, ..) = certify(seed_of(&all), &refs, |rs| {
        let mut g = rs[0].clone();
        for r in rs {
            if r.is_zero() {
                return Err(Error::CommonComponent);
            }
            g = g.gcd(r);
        }
        Ok(g.squarefree_part().deg())
    })?;
    Ok(v)
}

/// Distinct points of `V(polys)` in the plane, for any number `k >= 2` of equations.
///
/// Three or more equations are replaced by random invertible combinations `G_i`, and the
/// zero set is read off as the overlap of `(G_1, G_2)` and `(G_1, G_3)`.
pub fn count_variety(polys: &[QPoly]) -> Result<usize> {
    let polys: Vec<QPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    match polys.len() {
        0 => Err(Error::InfiniteIntersection),
        1 => {
            if polys[0].is_constant() {
                Ok(0)
            } else {
                Err(Error::InfiniteIntersection)
            }
        }
        2 => match count_common_zeros(&polys[0], &polys[1]) {
            Err(Error::CommonComponent) => Err(Error::InfiniteIntersection),
            r => r.map(|z| z.distinct),
        },
        k => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed_of(&polys.iter().collect::<Vec<_>>()));
            for _ in 0..MAX_SHEARS {
                let combos: Vec<QPoly> = (0..3)
                    .map(|_| {
                        polys.iter().fold(QPoly::zero(&(), xy()), |acc, p| &acc + &p.scale(&rat(rng.gen_range(-50..=50))))
                    })
                    .collect();
                let mut sys = vec![(&combos[0], &combos[1]), (&combos[0], &combos[2])];
                if k > 3 {
                    sys.extend(polys.iter().map(|p| (&combos[0], p)));
                }
                match count_overlap_many(&sys) {
                    Err(Error::CommonComponent) => continue,
                    r => return r,
                }
            }
            Err(Error::InfiniteIntersection)
        }
    }
}

/// Local intersection multiplicity of two plane curves at a rational point.
pub fn local_mult(p: &QPoly, q: &QPoly, a: &[Rat; 2]) -> Result<usize> {
    let (p, q) = (p.clone().with_vars(xy()), q.clone().with_vars(xy()));
    let pt = [(Var::X, a[0].clone()), (Var::Y, a[1].clone())];
    if !Ring::is_zero(&p.eval(&pt)) || !Ring::is_zero(&q.eval(&pt)) {
        return Err(Error::NotAZero);
    }
    let (p0, q0) = (p.translate(&pt), q.translate(&pt));
    // local orders certify at the smallest value
    let (v, ..) =
        certify(seed_of(&[&p0, &q0]), &[(&p0, &q0)], |r| r[0].order().map(Reverse).ok_or(Error::NotIsolated))?;
    Ok(v.0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfinityPoints {
    /// Squarefree part of the leading form.
    pub leading_form: String,
    pub count: usize,
    pub transversal: bool,
}

/// Gcd of binary forms, as (gcd of the `y = 1` dehomogenizations, whether all vanish at (1:0)).
fn binary_gcd(forms: &[QPoly]) -> (UPoly<Rat>, bool) {
    let mut g = UPoly::zero(&());
    let mut at_inf = true;
    for f in forms {
        let n = f.degree();
        let u = to_upoly(&f.eval_var(Var::Y, &rat(1)), Var::X).expect("binary form");
        g = g.gcd(&u);
        // the point (1:0) is a root iff the x^n coefficient vanishes
        if !f.is_zero() && u.degree() == Some(n as usize) {
            at_inf = false;
        }
    }
    (g, at_inf)
}

/// Points where the projective closure of `p = 0` meets the line at infinity.
pub fn points_at_infinity(p: &QPoly) -> InfinityPoints {
    let p = p.clone().with_vars(xy());
    let n = p.degree();
    let lead = p.leading_form();
    let (u, inf) = binary_gcd(std::slice::from_ref(&lead));
    let sq = u.squarefree_part();
    let count = sq.deg() + inf as usize;
    let inf_mult = n as usize - u.deg();
    let squarefree = count == n as usize && inf_mult <= 1;
    // gradient of the homogenization restricted to z = 0
    let ph = p.homogenize(n, Var::Z).expect("degree");
    let grads: Vec<QPoly> =
        [Var::X, Var::Y, Var::Z].iter().map(|v| ph.diff(*v).eval_var(Var::Z, &rat(0)).with_vars(xy())).collect();
    let mut forms = vec![lead.clone()];
    forms.extend(grads);
    let (g, ginf) = binary_gcd(&forms);
    let smooth = g.deg() == 0 && !ginf;
    let sq_form = QPoly::from_univariate(&(), Var::X, sq.coeffs())
        .with_vars(xy())
        .homogenize(sq.deg() as u32, Var::Y)
        .unwrap();
    let sq_form = if inf { &sq_form * &QPoly::var(&(), xy(), Var::Y) } else { sq_form };
    InfinityPoints { leading_form: sq_form.to_string(), count, transversal: squarefree && smooth }
}

/// Distinct points of the quadric `y^2 + 2xz = 1` where all of `polys` vanish.
pub fn count_on_sphere(p: &QPoly, q: &QPoly) -> Result<usize> {
    count_on_sphere_many(&[p.clone(), q.clone()])
}

/// Chart `x != 0` eliminates `z = (1 - y^2) / (2x)`; the lines `x = 0, y = ±1` are
/// handled by direct substitution.
pub fn count_on_sphere_many(polys: &[QPoly]) -> Result<usize> {
    let xyz = VarSet::of(&[Var::X, Var::Y, Var::Z]);
    let polys: Vec<QPoly> = polys.iter().map(|p| p.clone().with_vars(xyz)).filter(|p| !p.is_zero()).collect();
    if polys.len() < 2 {
        return Err(Error::InfiniteIntersection);
    }
    let x = QPoly::var(&(), xy(), Var::X);
    let num = &QPoly::one(&(), xy()) - &QPoly::var(&(), xy(), Var::Y).pow(2);
    let mut chart = Vec::new();
    for p in &polys {
        let cs = p.coeffs_in(Var::Z);
        let k = cs.len() - 1;
        // sum_i c_i (1 - y^2)^i (2x)^{k - i}
        let mut acc = QPoly::zero(&(), xy());
        for (i, c) in cs.iter().enumerate() {
            let t = &(&c.clone().with_vars(xy()) * &num.pow(i as u32)) * &x.scale(&rat(2)).pow((k - i) as u32);
            acc = &acc + &t;
        }
        // remove factors of x, which carry no points of the chart
        while !acc.is_zero() && acc.terms().keys().all(|m| m.exp(Var::X) > 0) {
            acc = acc.div_exact(&x).unwrap();
        }
        chart.push(acc);
    }
    let total = count_variety(&chart)?;
    // chart points with x = 0 are spurious
    let on_axis = common_roots(chart.iter().map(|c| c.eval_var(Var::X, &rat(0))), Var::Y)?;
    let mut n = total - on_axis;
    let phi = sphere_constraint();
    debug_assert!(Ring::is_zero(&phi.eval(&[(Var::X, rat(0)), (Var::Y, rat(1)), (Var::Z, rat(0))])));
    for s in [1, -1] {
        let restricted = polys.iter().map(|p| p.eval_var(Var::X, &rat(0)).eval_var(Var::Y, &rat(s)));
        n += common_roots(restricted, Var::Z)?;
    }
    Ok(n)
}

/// Distinct common roots of univariate polynomials; all identically zero is infinite.
fn common_roots(ps: impl Iterator<Item = QPoly>, v: Var) -> Result<usize> {
    let mut g = UPoly::<Rat>::zero(&());
    for p in ps {
        let u = to_upoly(&p, v).expect("univariate");
        g = g.gcd(&u);
    }
    if g.is_zero() {
        return Err(Error::InfiniteIntersection);
    }
    Ok(g.squarefree_part().deg())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn p(s: &str) -> QPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn common_zero_examples() {
        assert_eq!(count_common_zeros(&p("x^2+y^2-1"), &p("x-y")).unwrap().distinct, 2);
        assert_eq!(count_common_zeros(&p("3*y^2+x"), &p("-6*y")).unwrap().distinct, 1);
        let z = count_common_zeros(&p("x^2"), &p("y")).unwrap();
        assert_eq!((z.distinct, z.resultant_degree), (1, 2));
        assert_eq!(count_common_zeros(&p("x*y"), &p("x*y+x")), Err(Error::CommonComponent));
    }

    #[test]
    fn overlaps() {
        assert_eq!(count_solution_overlap((&p("x"), &p("y")), (&p("x-1"), &p("y-1"))).unwrap(), 0);
        let a = (&p("x^2+y^2-1"), &p("x-y"));
        assert_eq!(count_solution_overlap(a, a).unwrap(), 2);
        assert_eq!(count_variety(&[p("x^2-1"), p("y^2-1"), p("x-y")]).unwrap(), 2);
    }

    #[test]
    fn multiplicities() {
        let o = [rat(0), rat(0)];
        assert_eq!(local_mult(&p("x"), &p("y"), &o).unwrap(), 1);
        assert_eq!(local_mult(&p("y"), &p("y^2-x^3"), &o).unwrap(), 3);
        assert_eq!(local_mult(&p("y^2-x^3"), &p("y^2+x^3"), &o).unwrap(), 6);
        assert_eq!(local_mult(&p("x-1"), &p("y"), &o), Err(Error::NotAZero));
    }

    #[test]
    fn infinity() {
        let i = points_at_infinity(&p("y^2-x"));
        assert_eq!((i.count, i.transversal), (1, false));
        let i = points_at_infinity(&p("x*y-1"));
        assert_eq!((i.count, i.transversal), (2, true));
    }

    #[test]
    fn sphere_counts() {
        assert_eq!(count_on_sphere(&p("x"), &p("y")).unwrap(), 0);
        assert_eq!(count_on_sphere(&p("y"), &p("x-z")).unwrap(), 2);
        assert_eq!(count_on_sphere(&p("x"), &p("z")).unwrap(), 2);
    }
}
