use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Ext, ExtCtx};
use crate::error::{Error, Result};
use crate::jets::{plane_equations, PlaneMap};
use crate::poly::ops::to_upoly;
use crate::poly::{rat, resultant, QPoly, Rat, Ring, UPoly, Var, VarSet};
use crate::puiseux::is_squarefree;
use crate::roots::{certified_roots, sqrt_upper, QComplex};
use crate::solve::{count_common_zeros, Shear};

use super::discriminant::{common_root, eval_alg, specialize, y_monic};

type Alg = Ext<Rat>;

/// Taylor coefficients of `p` at `c`, constant term first.
fn taylor(p: &UPoly<Rat>, c: &QComplex) -> Vec<QComplex> {
    let mut coeffs: Vec<QComplex> = p.coeffs().iter().map(|a| QComplex::new(a.clone(), rat(0))).collect();
    let mut out = Vec::new();
    while !coeffs.is_empty() {
        // synthetic division by (z - c)
        let mut acc = QComplex::new(rat(0), rat(0));
        let mut q = vec![QComplex::new(rat(0), rat(0)); coeffs.len().saturating_sub(1)];
        for i in (0..coeffs.len()).rev() {
            acc = acc.mul(c).add(&coeffs[i]);
            if i > 0 {
                q[i - 1] = acc.clone();
            }
        }
        out.push(acc);
        coeffs = q;
    }
    out
}

/// Value at the center and a bound on `|p(z) - p(c)|` over the disk.
fn enclose(p: &UPoly<Rat>, c: &QComplex, rho: &Rat) -> (QComplex, Rat) {
    let t = taylor(p, c);
    let mut err = rat(0);
    let mut rk = rat(1);
    for a in t.iter().skip(1) {
        rk = &rk * rho;
        err += sqrt_upper(&a.norm_sq()) * &rk;
    }
    (t.first().cloned().unwrap_or(QComplex::new(rat(0), rat(0))), err)
}

enum Side {
    In,
    Out,
    Boundary,
}

fn side(val: &QComplex, err: &Rat, center: &Rat, r: &Rat) -> Side {
    let d = val.sub(&QComplex::new(center.clone(), rat(0))).norm_sq();
    // tolerance doubled on both sides
    let (lo, hi) = (r - err * rat(2), r + err * rat(2));
    if lo > rat(0) && d < &lo * &lo {
        Side::In
    } else if d > &hi * &hi {
        Side::Out
    } else {
        Side::Boundary
    }
}

fn as_poly(a: &Alg) -> UPoly<Rat> {
    a.as_poly()
}

/// Simple cusps of `F` (points of `J = J11 = 0` off `∇f = 0`) in the polydisc of radius
/// `radius` around `a`.
pub fn deformation_probe(map: &PlaneMap, a: &[Rat; 2], radius: &Rat) -> Result<usize> {
    let eq = plane_equations(map);
    if eq.j.is_constant() || eq.j11.is_zero() {
        return Ok(0);
    }
    if !is_squarefree(&eq.j)? {
        return Err(Error::NonReducedJacobian);
    }
    let distinct = count_common_zeros(&eq.j, &eq.j11)?.distinct;
    if distinct == 0 {
        return Ok(0);
    }
    let (fx, fy) = (map.f.diff(Var::X), map.f.diff(Var::Y));
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
    let mut shear = Shear::IDENTITY;
    for _ in 0..16 {
        let (js, ks) = (shear.apply(&eq.j), shear.apply(&eq.j11));
        if let Some(n) = try_shear(&shear, &js, &ks, &fx, &fy, distinct, a, radius)? {
            return Ok(n);
        }
        shear = Shear::random(&mut rng);
    }
    Err(Error::GenericityExhausted("separating projection".into()))
}

#[allow(clippy::too_many_arguments)]
fn try_shear(
    shear: &Shear,
    js: &QPoly,
    ks: &QPoly,
    fx: &QPoly,
    fy: &QPoly,
    distinct: usize,
    a: &[Rat; 2],
    radius: &Rat,
) -> Result<Option<usize>> {
    if !y_monic(js) || !(y_monic(ks) || ks.degree_in(Var::Y) == 0) {
        return Ok(None);
    }
    let r = resultant(js, ks, Var::Y)?.with_vars(VarSet::of(&[Var::X]));
    let r = to_upoly(&r, Var::X).expect("univariate").squarefree_part();
    if r.deg() != distinct {
        return Ok(None);
    }
    let alg = ExtCtx::new(&r, 'x');
    let Some(y0) = common_root(specialize(js, &alg), specialize(ks, &alg)) else {
        return Ok(None);
    };
    let e = alg.gen();
    let m = shear.0;
    let orig_x = e.scale_base(&rat(m[0][0])).add(&y0.scale_base(&rat(m[0][1])));
    let orig_y = e.scale_base(&rat(m[1][0])).add(&y0.scale_base(&rat(m[1][1])));
    // drop the factor of r carrying the critical points of f
    let g = r.gcd(&as_poly(&eval_alg(fx, &orig_x, &orig_y))).gcd(&as_poly(&eval_alg(fy, &orig_x, &orig_y)));
    let cusp_part = r.div_exact(&g).expect("divisor");
    if cusp_part.deg() == 0 {
        return Ok(Some(0));
    }
    let (px, py) = (as_poly(&orig_x).rem(&cusp_part), as_poly(&orig_y).rem(&cusp_part));
    let Some(disks) = certified_roots(&cusp_part) else {
        return Ok(None);
    };
    let mut count = 0;
    for d in &disks {
        let rho = sqrt_upper(&d.radius_sq);
        let (vx, ex) = enclose(&px, &d.center, &rho);
        let (vy, ey) = enclose(&py, &d.center, &rho);
        match (side(&vx, &ex, &a[0], radius), side(&vy, &ey, &a[1], radius)) {
            (Side::Out, _) | (_, Side::Out) => {}
            (Side::In, Side::In) => count += 1,
            _ => return Err(Error::BoundaryContact),
        }
    }
    Ok(Some(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    fn probe(f: &str, g: &str) -> Result<usize> {
        deformation_probe(&PlaneMap::parse(f, g).unwrap(), &[rat(0), rat(0)], &rat(1))
    }

    #[test]
    fn probe_examples() {
        assert_eq!(probe("x", "y^3+y"), Ok(0));
        assert_eq!(probe("x", "y^3+x*y"), Ok(1));
        assert_eq!(probe("x", "y^2"), Ok(0));
        let far = PlaneMap::parse("x", "y^3+x*y").unwrap();
        assert_eq!(deformation_probe(&far, &[rat(5), rat(5)], &ratio(1, 2)), Ok(0));
    }
}
