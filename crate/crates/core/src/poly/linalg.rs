//! Small dense linear algebra over rings and fields.

use super::field::{Field, Rat, Ring};

/// Characteristic polynomial det(λI - A), coefficients from the highest degree down.
///
/// Division-free (Samuelson–Berkowitz), so it works over any commutative ring.
pub fn charpoly<K: Ring>(a: &[Vec<K>], ctx: &K::Ctx) -> Vec<K> {
    let n = a.len();
    let one = K::one(ctx);
    let mut p = vec![one.clone()];
    for k in (0..n).rev() {
        let m = n - k - 1;
        let row: Vec<K> = a[k][k + 1..].to_vec();
        let mut col: Vec<K> = (k + 1..n).map(|i| a[i][k].clone()).collect();
        let mut t = vec![one.clone(), a[k][k].neg()];
        for _ in 0..m {
            let dot = row.iter().zip(&col).fold(K::zero(ctx), |s, (r, c)| s.add(&r.mul(c)));
            t.push(dot.neg());
            col = (k + 1..n)
                .map(|i| {
                    (k + 1..n).zip(&col).fold(K::zero(ctx), |s, (j, c)| s.add(&a[i][j].mul(c)))
                })
                .collect();
        }
        let mut next = vec![K::zero(ctx); m + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate() {
                if j <= i {
                    *slot = slot.add(&t[i - j].mul(pj));
                }
            }
        }
        p = next;
    }
    p
}

/// Determinant over a commutative ring without divisions.
pub fn det_ring<K: Ring>(a: &[Vec<K>], ctx: &K::Ctx) -> K {
    let n = a.len();
    let p = charpoly(a, ctx);
    let c = p[n].clone();
    if n % 2 == 1 {
        c.neg()
    } else {
        c
    }
}

/// Determinant over a field by Gaussian elimination.
pub fn det_field<K: Field>(a: &[Vec<K>], ctx: &K::Ctx) -> K {
    let n = a.len();
    let mut m: Vec<Vec<K>> = a.to_vec();
    let mut det = K::one(ctx);
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return K::zero(ctx);
        };
        if piv != col {
            m.swap(piv, col);
            det = det.neg();
        }
        let inv = m[col][col].inv().unwrap();
        det = det.mul(&m[col][col]);
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].mul(&inv);
            for c in col..n {
                let v = m[r][c].sub(&f.mul(&m[col][c]));
                m[r][c] = v;
            }
        }
    }
    det
}

pub fn det_rat(a: &[Vec<Rat>]) -> Rat {
    det_field(a, &())
}

pub fn mat_mul_rat(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(Rat::from_integer(0.into()), |s, l| s + &a[i][l] * &b[l][j]))
                .collect()
        })
        .collect()
}

pub fn identity_rat(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| (0..n).map(|j| Rat::from_integer(if i == j { 1 } else { 0 }.into())).collect())
        .collect()
}

/// Inverse of a square matrix over a field, `None` when singular.
pub fn inverse_field<K: Field>(a: &[Vec<K>], ctx: &K::Ctx) -> Option<Vec<Vec<K>>> {
    let n = a.len();
    let mut m: Vec<Vec<K>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { K::one(ctx) } else { K::zero(ctx) }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(piv, col);
        let inv = m[col][col].inv()?;
        for c in 0..2 * n {
            m[col][c] = m[col][c].mul(&inv);
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..2 * n {
                    let v = m[r][c].sub(&f.mul(&m[col][c]));
                    m[r][c] = v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::rat;

    #[test]
    fn berkowitz_matches_gauss() {
        let a = vec![
            vec![rat(2), rat(-1), rat(3)],
            vec![rat(0), rat(4), rat(5)],
            vec![rat(7), rat(1), rat(-2)],
        ];
        assert_eq!(det_ring(&a, &()), det_rat(&a));
        // trace appears as -coefficient of λ^{n-1}
        let p = charpoly(&a, &());
        assert_eq!(p[1], rat(-4));
    }

    #[test]
    fn inverse_round_trip() {
        let a = vec![vec![rat(1), rat(2)], vec![rat(3), rat(4)]];
        let inv = inverse_field(&a, &()).unwrap();
        assert_eq!(mat_mul_rat(&a, &inv), identity_rat(2));
    }
}
