use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jets::{plane_equations, PlaneMap};
use crate::poly::{rat, Rat, Ring, Var};
use crate::puiseux::is_squarefree;
use crate::solve::{count_variety, local_mult};

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CuspIndexResult {
    pub point: [String; 2],
    pub mu: usize,
    /// `i(J(F'), J11(F'); a)`.
    pub term1: usize,
    /// `i(f'_x, f'_y; a)`.
    pub term2: usize,
    pub t: [[i64; 2]; 2],
    pub check_t: [[i64; 2]; 2],
    pub check_mu: usize,
}

fn random_target(rng: &mut impl Rng) -> [[i64; 2]; 2] {
    loop {
        let t = [[rng.gen_range(-9..=9), rng.gen_range(-9..=9)], [rng.gen_range(-9..=9), rng.gen_range(-9..=9)]];
        if t[0][0] * t[1][1] - t[0][1] * t[1][0] != 0 {
            return t;
        }
    }
}

/// `(term1, term2)` for `T ∘ F`, or `None` when `∇f'` vanishes along a branch of `J = 0`.
fn index_terms(map: &PlaneMap, t: &[[i64; 2]; 2], a: &[Rat; 2]) -> Result<Option<(usize, usize)>> {
    let tm: Vec<Vec<Rat>> = t.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect();
    let fp = map.compose_target(&tm);
    let eq = plane_equations(&fp);
    let (fx, fy) = (fp.f.diff(Var::X), fp.f.diff(Var::Y));
    match count_variety(&[eq.j.clone(), fx.clone(), fy.clone()]) {
        Err(Error::InfiniteIntersection) => return Ok(None),
        Err(e) => return Err(e),
        Ok(_) => {}
    }
    let term1 = match local_mult(&eq.j, &eq.j11, a) {
        Err(Error::NotAZero) => 0,
        r => r?,
    };
    let pt = [(Var::X, a[0].clone()), (Var::Y, a[1].clone())];
    let term2 = if Ring::is_zero(&fx.eval(&pt)) && Ring::is_zero(&fy.eval(&pt)) { local_mult(&fx, &fy, a)? } else { 0 };
    Ok(Some((term1, term2)))
}

/// Number of simple cusps a generalized cusp at `a` splits into under a generic deformation.
pub fn generalized_cusp_index(map: &PlaneMap, a: &[Rat; 2]) -> Result<CuspIndexResult> {
    let j = plane_equations(map).j;
    if j.is_constant() || !is_squarefree(&j)? {
        return Err(Error::NonReducedJacobian);
    }
    let pt = [(Var::X, a[0].clone()), (Var::Y, a[1].clone())];
    if !Ring::is_zero(&j.eval(&pt)) {
        return Err(Error::NotAZero);
    }
    let seed = format!("{};{};{};{}", map.f, map.g, a[0], a[1])
        .bytes()
        .fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draws = Vec::new();
    for _ in 0..16 {
        let t = random_target(&mut rng);
        if let Some(terms) = index_terms(map, &t, a)? {
            draws.push((t, terms));
            if draws.len() == 2 {
                break;
            }
        }
    }
    if draws.len() < 2 {
        return Err(Error::GenericityExhausted("target change with nonvanishing gradient".into()));
    }
    let mu_of = |(t1, t2): (usize, usize)| {
        t1.checked_sub(t2).ok_or_else(|| Error::AgreementFailed("negative cusp index".into()))
    };
    let (mu, check_mu) = (mu_of(draws[0].1)?, mu_of(draws[1].1)?);
    if mu != check_mu {
        return Err(Error::AgreementFailed(format!("index {mu} vs {check_mu}")));
    }
    if mu == 0 {
        return Err(Error::NotACusp);
    }
    Ok(CuspIndexResult {
        point: [a[0].to_string(), a[1].to_string()],
        mu,
        term1: draws[0].1 .0,
        term2: draws[0].1 .1,
        t: draws[0].0,
        check_t: draws[1].0,
        check_mu,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(f: &str, g: &str) -> Result<usize> {
        generalized_cusp_index(&PlaneMap::parse(f, g).unwrap(), &[rat(0), rat(0)]).map(|r| r.mu)
    }

    #[test]
    fn index_examples() {
        assert_eq!(idx("x", "y^3+x*y"), Ok(1));
        assert_eq!(idx("x", "y^4+x*y"), Ok(2));
        assert_eq!(idx("x", "y^3"), Err(Error::NonReducedJacobian));
        assert_eq!(idx("x", "y^2"), Err(Error::NotACusp));
    }
}
