use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jets::{plane_equations, sphere_equations, PlaneMap, SphereMap};
use crate::poly::{Mono, QPoly, Var, VarSet};
use crate::puiseux::is_squarefree;
use crate::solve::{count_common_zeros, count_on_sphere};

use super::Check;

pub const MAX_RESAMPLES: usize = 32;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MapKind {
    Plane,
    Sphere,
}

impl MapKind {
    fn vars(self) -> VarSet {
        match self {
            MapKind::Plane => VarSet::of(&[Var::X, Var::Y]),
            MapKind::Sphere => VarSet::of(&[Var::X, Var::Y, Var::Z]),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SampledMap {
    pub kind: MapKind,
    pub f: QPoly,
    pub g: QPoly,
    pub d1: u32,
    pub d2: u32,
    pub seed: u64,
    pub height: i64,
    /// Index of the accepted draw.
    pub attempt: usize,
    pub checklist: Vec<Check>,
    /// The critical locus is empty, so there is nothing to count.
    pub degenerate: bool,
}

impl SampledMap {
    pub fn plane(&self) -> PlaneMap {
        PlaneMap { f: self.f.clone(), g: self.g.clone(), d1: self.d1, d2: self.d2 }
    }
    pub fn sphere(&self) -> SphereMap {
        SphereMap { f: self.f.clone(), g: self.g.clone(), d1: self.d1, d2: self.d2 }
    }
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of task `index` under run seed `seed`.
pub fn sub_seed(seed: u64, index: u64) -> u64 {
    splitmix(seed ^ splitmix(index))
}

/// Dense polynomial of degree exactly `d` with integer coefficients in `[-h, h]`.
pub fn random_poly(rng: &mut impl Rng, vars: VarSet, d: u32, h: i64) -> QPoly {
    let vs = vars.vars();
    let mut monos = vec![Mono::one()];
    for v in &vs {
        let mut next = Vec::new();
        for m in &monos {
            for e in 0..=(d - m.deg()) {
                next.push(m.with_exp(*v, e as u16));
            }
        }
        monos = next;
    }
    monos.sort();
    let terms: Vec<(Mono, i64)> = monos.into_iter().map(|m| (m, rng.gen_range(-h..=h))).collect();
    let mut p = QPoly::from_int_terms(vars, &terms);
    // the last variable's pure power keeps the leading form nonzero
    let top = Mono::var(*vs.last().unwrap(), d as u16);
    while p.degree() < d {
        let c = rng.gen_range(1..=h) * if rng.gen_bool(0.5) { 1 } else { -1 };
        p = &p + &QPoly::from_int_terms(vars, &[(top, c)]);
    }
    p
}

fn checklist(kind: MapKind, f: &QPoly, g: &QPoly, d1: u32, d2: u32) -> Result<(Vec<Check>, bool)> {
    let mut checks =
        vec![Check::new("degree_f", d1, f.degree()), Check::new("degree_g", d2, g.degree())];
    let eq = match kind {
        MapKind::Plane => plane_equations(&PlaneMap::new(f.clone(), g.clone())),
        MapKind::Sphere => sphere_equations(&SphereMap::new(f.clone(), g.clone())),
    };
    if eq.j.is_constant() {
        return Ok((checks, true));
    }
    let coprime = |r: Result<usize>| match r {
        Ok(_) => Ok(true),
        Err(Error::CommonComponent) | Err(Error::InfiniteIntersection) => Ok(false),
        Err(e) => Err(e),
    };
    match kind {
        MapKind::Plane => {
            checks.push(Check::new("jacobian_squarefree", true, is_squarefree(&eq.j)?));
            let ok = coprime(count_common_zeros(&eq.j, &eq.j11).map(|z| z.distinct))?;
            checks.push(Check::new("jacobian_j11_coprime", true, ok));
        }
        MapKind::Sphere => {
            let ok = coprime(count_on_sphere(&eq.j, &eq.j11))?;
            checks.push(Check::new("jacobian_j11_coprime", true, ok));
        }
    }
    Ok((checks, false))
}

/// First draw at index `>= first` passing the cheap genericity checks.
pub fn sample_map_from(kind: MapKind, d1: u32, d2: u32, seed: u64, height: i64, first: usize) -> Result<SampledMap> {
    if d1 == 0 || d2 == 0 || height <= 0 {
        return Err(Error::Parse("degrees and height must be positive".into()));
    }
    let mut last = String::new();
    for attempt in first..MAX_RESAMPLES {
        let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(seed, attempt as u64));
        let f = random_poly(&mut rng, kind.vars(), d1, height);
        let g = random_poly(&mut rng, kind.vars(), d2, height);
        let (checks, degenerate) = checklist(kind, &f, &g, d1, d2)?;
        if let Some(bad) = checks.iter().find(|c| !c.pass) {
            last = bad.name.clone();
            continue;
        }
        return Ok(SampledMap { kind, f, g, d1, d2, seed, height, attempt, checklist: checks, degenerate });
    }
    Err(Error::GenericityExhausted(last))
}

pub fn sample_map(kind: MapKind, d1: u32, d2: u32, seed: u64, height: i64) -> Result<SampledMap> {
    sample_map_from(kind, d1, d2, seed, height, 0)
}
