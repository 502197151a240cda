//! Resultants by the subresultant pseudo-remainder sequence.

use super::field::Field;
use super::mpoly::{MPoly, Var};
use crate::error::{Error, Result};

type Coeffs<K> = Vec<MPoly<K>>;

fn trim<K: Field>(a: &mut Coeffs<K>) {
    while a.len() > 1 && a.last().unwrap().is_zero() {
        a.pop();
    }
}

fn deg<K: Field>(a: &Coeffs<K>) -> usize {
    a.len() - 1
}

fn is_zero<K: Field>(a: &Coeffs<K>) -> bool {
    a.iter().all(|c| c.is_zero())
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
fn prem<K: Field>(a: &Coeffs<K>, b: &Coeffs<K>) -> Coeffs<K> {
    let db = deg(b);
    let lb = b[db].clone();
    let mut r = a.clone();
    let mut e = deg(a) as i64 - db as i64 + 1;
    while r.len() > db && !is_zero(&r) {
        let dr = deg(&r);
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = &lr * bj;
            r[j + shift] = &r[j + shift] - &t;
        }
        r.pop();
        trim(&mut r);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    trim(&mut r);
    r
}

fn div_all<K: Field>(a: &Coeffs<K>, d: &MPoly<K>) -> Coeffs<K> {
    a.iter().map(|c| c.div_exact(d).expect("subresultant division is exact")).collect()
}

/// Res_var(p, q), the Sylvester determinant in `var`, as a polynomial in the other variables.
pub fn resultant<K: Field>(p: &MPoly<K>, q: &MPoly<K>, var: Var) -> Result<MPoly<K>> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = p.ctx().clone();
    let rest = p.vars().union(q.vars()).without(var);
    let mut a = p.coeffs_in(var);
    let mut b = q.coeffs_in(var);
    let one = MPoly::one(&ctx, rest);
    let (m, n) = (deg(&a), deg(&b));
    if n == 0 {
        return Ok(b[0].pow(m as u32).with_vars(rest));
    }
    if m == 0 {
        return Ok(a[0].pow(n as u32).with_vars(rest));
    }
    let mut s = false;
    if m < n {
        std::mem::swap(&mut a, &mut b);
        if m % 2 == 1 && n % 2 == 1 {
            s = !s;
        }
    }
    let mut g = one.clone();
    let mut h = one.clone();
    loop {
        let (da, db) = (deg(&a), deg(&b));
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            s = !s;
        }
        let r = prem(&a, &b);
        a = b;
        if is_zero(&r) {
            return Ok(MPoly::zero(&ctx, rest));
        }
        let den = &g * &h.pow(delta);
        b = div_all(&r, &den);
        g = a[deg(&a)].clone();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta).div_exact(&h.pow(delta - 1)).expect("exact")
        };
        if deg(&b) == 0 {
            let da = deg(&a) as u32;
            let lb = b[0].clone();
            let res = if da == 0 {
                one.clone()
            } else {
                lb.pow(da).div_exact(&h.pow(da - 1)).expect("exact")
            };
            let res = if s { -res } else { res };
            return Ok(res.with_vars(rest));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse::parse_poly;

    fn q(s: &str) -> MPoly<crate::poly::Rat> {
        parse_poly(s).unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(resultant(&q("x^2+y^2"), &q("y-1"), Var::Y).unwrap(), q("x^2+1"));
        assert_eq!(resultant(&q("y^2-x^3"), &q("y"), Var::Y).unwrap(), q("-x^3"));
    }
}
