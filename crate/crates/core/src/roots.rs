//! Root isolation for univariate rational polynomials.
//!
//! Real roots are isolated exactly with Sturm sequences; complex roots are approximated
//! in floating point and then certified with exact inclusion disks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

use crate::poly::{rat, ratio, Rat, Ring, UPoly};

fn sign(q: &Rat) -> i32 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn sturm_chain(p: &UPoly<Rat>) -> Vec<UPoly<Rat>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

fn variations(chain: &[UPoly<Rat>], x: &Rat) -> usize {
    let signs: Vec<i32> = chain.iter().map(|q| sign(&q.eval(x))).filter(|s| *s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Cauchy bound: every root has absolute value below the result.
pub fn root_bound(p: &UPoly<Rat>) -> Rat {
    let lc = p.lc().abs();
    let m = p.coeffs()[..p.deg()].iter().map(|c| c.abs() / &lc).max().unwrap_or_else(|| rat(0));
    m + rat(1)
}

/// Disjoint half-open intervals `(lo, hi]`, each containing exactly one real root of `p`.
pub fn isolate_real_roots(p: &UPoly<Rat>) -> Vec<(Rat, Rat)> {
    if p.deg() == 0 {
        return Vec::new();
    }
    let p = p.squarefree_part();
    let chain = sturm_chain(&p);
    let b = root_bound(&p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = variations(&chain, &lo) - variations(&chain, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / rat(2);
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Bisect an isolating interval until its width is below `eps`.
pub fn refine(p: &UPoly<Rat>, mut lo: Rat, mut hi: Rat, eps: &Rat) -> (Rat, Rat) {
    let s_hi = sign(&p.eval(&hi));
    if s_hi == 0 {
        return (hi.clone(), hi);
    }
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / rat(2);
        let s = sign(&p.eval(&mid));
        if s == 0 {
            return (mid.clone(), mid);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// The rational with the smallest denominator in `[lo, hi]`.
pub fn simplest_between(lo: &Rat, hi: &Rat) -> Rat {
    let fl = lo.floor();
    if fl == *lo {
        return fl;
    }
    if &fl + rat(1) <= *hi {
        return fl + rat(1);
    }
    // lo and hi share the integer part: recurse on reciprocals of the fractional parts
    let (a, b) = (hi - &fl, lo - &fl);
    let inner = simplest_between(&(rat(1) / a), &(rat(1) / b));
    fl + rat(1) / inner
}

/// All distinct rational roots, in increasing order.
pub fn rational_roots(p: &UPoly<Rat>) -> Vec<Rat> {
    if p.deg() == 0 {
        return Vec::new();
    }
    let sq = p.squarefree_part();
    // clear denominators to bound the denominators of rational roots
    let den = sq.coeffs().iter().fold(BigInt::from(1), |acc, c| num_integer::lcm(acc, c.denom().clone()));
    let lc = (sq.lc() * BigRational::from_integer(den)).abs().to_integer();
    let eps = BigRational::new(BigInt::from(1), 2 * &lc * &lc);
    let mut out = Vec::new();
    for (lo, hi) in isolate_real_roots(&sq) {
        let (lo, hi) = refine(&sq, lo, hi, &eps);
        let cand = simplest_between(&lo, &hi);
        if sq.eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    out
}

/// Complex number with exact rational parts.
#[derive(Clone, Debug, PartialEq)]
pub struct QComplex {
    pub re: Rat,
    pub im: Rat,
}

impl QComplex {
    pub fn new(re: Rat, im: Rat) -> Self {
        QComplex { re, im }
    }
    pub fn from_f64(re: f64, im: f64) -> Self {
        QComplex { re: Rat::from_f64(re).unwrap_or_else(|| rat(0)), im: Rat::from_f64(im).unwrap_or_else(|| rat(0)) }
    }
    pub fn add(&self, o: &Self) -> Self {
        QComplex::new(&self.re + &o.re, &self.im + &o.im)
    }
    pub fn sub(&self, o: &Self) -> Self {
        QComplex::new(&self.re - &o.re, &self.im - &o.im)
    }
    pub fn mul(&self, o: &Self) -> Self {
        QComplex::new(&self.re * &o.re - &self.im * &o.im, &self.re * &o.im + &self.im * &o.re)
    }
    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }
}

/// Certified disk `|z - center| <= sqrt(radius_sq)` holding exactly one root.
#[derive(Clone, Debug)]
pub struct RootDisk {
    pub center: QComplex,
    pub radius_sq: Rat,
}

type C64 = (f64, f64);

fn cmul(a: C64, b: C64) -> C64 {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}
fn cdiv(a: C64, b: C64) -> C64 {
    let d = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
}

/// Floating-point approximations of all complex roots (Aberth–Ehrlich iteration).
pub fn approximate_roots(p: &UPoly<Rat>) -> Vec<C64> {
    let n = p.deg();
    let c: Vec<f64> = p.coeffs().iter().map(|q| q.to_f64().unwrap()).collect();
    let lc = c[n];
    let c: Vec<f64> = c.iter().map(|v| v / lc).collect();
    let eval = |z: C64| -> (C64, C64) {
        let (mut v, mut d) = ((0.0, 0.0), (0.0, 0.0));
        for a in c.iter().rev() {
            d = (cmul(d, z).0 + v.0, cmul(d, z).1 + v.1);
            v = (cmul(v, z).0 + a, cmul(v, z).1);
        }
        (v, d)
    };
    let r = root_bound(p).to_f64().unwrap();
    let mut z: Vec<C64> =
        (0..n).map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64;
            (0.5 * r * th.cos(), 0.5 * r * th.sin())
        }).collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v == (0.0, 0.0) {
                continue;
            }
            let ratio = cdiv(v, d);
            let mut s = (0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let inv = cdiv((1.0, 0.0), (z[i].0 - z[j].0, z[i].1 - z[j].1));
                    s = (s.0 + inv.0, s.1 + inv.1);
                }
            }
            let denom = (1.0 - cmul(ratio, s).0, -cmul(ratio, s).1);
            let w = cdiv(ratio, denom);
            z[i] = (z[i].0 - w.0, z[i].1 - w.1);
            moved = moved.max(w.0.abs() + w.1.abs());
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

/// Certified inclusion disks for the roots of a squarefree polynomial.
///
/// With `W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j))`, the disks of radius `n |W_i|`
/// around `z_i`, when pairwise disjoint, each contain exactly one root.
pub fn certified_roots(p: &UPoly<Rat>) -> Option<Vec<RootDisk>> {
    let n = p.deg();
    if n == 0 {
        return Some(Vec::new());
    }
    let approx = approximate_roots(p);
    let z: Vec<QComplex> = approx.iter().map(|&(a, b)| QComplex::from_f64(a, b)).collect();
    let lc = p.lc();
    let mut disks = Vec::with_capacity(n);
    for i in 0..n {
        let mut val = QComplex::new(rat(0), rat(0));
        for c in p.coeffs().iter().rev() {
            val = val.mul(&z[i]).add(&QComplex::new(c.clone(), rat(0)));
        }
        let mut den = QComplex::new(lc.clone(), rat(0));
        for j in 0..n {
            if j != i {
                den = den.mul(&z[i].sub(&z[j]));
            }
        }
        let dn = den.norm_sq();
        if dn.is_zero() {
            return None;
        }
        // |W|^2 = |val|^2 / |den|^2
        let w_sq = val.norm_sq() / dn;
        let r_sq = w_sq * rat((n * n) as i64);
        disks.push(RootDisk { center: z[i].clone(), radius_sq: r_sq });
    }
    for i in 0..n {
        for j in i + 1..n {
            let d_sq = disks[i].center.sub(&disks[j].center).norm_sq();
            // disjoint iff ri + rj < d, compared in squares: (ri + rj)^2 < d^2
            let (ri, rj) = (&disks[i].radius_sq, &disks[j].radius_sq);
            if !sum_sqrt_lt(ri, rj, &d_sq) {
                return None;
            }
        }
    }
    Some(disks)
}

/// `sqrt(a) + sqrt(b) < sqrt(c)` for nonnegative rationals.
pub fn sum_sqrt_lt(a: &Rat, b: &Rat, c: &Rat) -> bool {
    // a + b + 2 sqrt(ab) < c  <=>  c - a - b > 0 and (c - a - b)^2 > 4ab
    let s = c - a - b;
    s.is_positive() && &s * &s > rat(4) * a * b
}

/// Rational upper bound for `sqrt(q)`.
pub fn sqrt_upper(q: &Rat) -> Rat {
    if q.is_zero() {
        return rat(0);
    }
    let f = q.to_f64().unwrap_or(f64::MAX).sqrt();
    let mut r = Rat::from_f64(f * (1.0 + 1e-12) + 1e-300).unwrap_or_else(|| ratio(1, 1));
    while &r * &r < *q {
        r = &r * ratio(11, 10);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qx(c: &[i64]) -> UPoly<Rat> {
        UPoly::new(&(), c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn sturm_isolation() {
        // (x^2 - 2)(x - 1)(x + 3)
        let p = qx(&[-2, 0, 1]).mul(&qx(&[-1, 1])).mul(&qx(&[3, 1]));
        assert_eq!(isolate_real_roots(&p).len(), 4);
        assert!(isolate_real_roots(&qx(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn rational_root_recovery() {
        // (3x - 2)(x^2 - 2)(5x + 7)^2
        let p = qx(&[-2, 3]).mul(&qx(&[-2, 0, 1])).mul(&qx(&[7, 5]).pow(2));
        assert_eq!(rational_roots(&p), vec![ratio(-7, 5), ratio(2, 3)]);
        assert_eq!(simplest_between(&ratio(31, 100), &ratio(34, 100)), ratio(1, 3));
    }

    #[test]
    fn inclusion_disks() {
        let p = qx(&[1, 0, 0, 1]);
        let d = certified_roots(&p).unwrap();
        assert_eq!(d.len(), 3);
        let real = d.iter().filter(|k| k.center.im.abs() < ratio(1, 1000)).count();
        assert_eq!(real, 1);
        assert!(sum_sqrt_lt(&rat(1), &rat(1), &rat(5)));
        assert!(!sum_sqrt_lt(&rat(1), &rat(1), &rat(4)));
    }
}
