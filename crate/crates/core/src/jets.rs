//! Equations of the fold and cusp loci for maps of the plane and of the sphere.

use serde::Serialize;

use crate::poly::{parse_poly, QPoly, Var, VarSet};

fn xy() -> VarSet {
    VarSet::of(&[Var::X, Var::Y])
}

fn xyz() -> VarSet {
    VarSet::of(&[Var::X, Var::Y, Var::Z])
}

/// A polynomial map `(f, g)` of the plane with degree bounds.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneMap {
    pub f: QPoly,
    pub g: QPoly,
    pub d1: u32,
    pub d2: u32,
}

impl PlaneMap {
    /// Degree bounds default to the actual degrees.
    pub fn new(f: QPoly, g: QPoly) -> Self {
        let (d1, d2) = (f.degree(), g.degree());
        PlaneMap { f: f.with_vars(xy()), g: g.with_vars(xy()), d1, d2 }
    }

    pub fn parse(f: &str, g: &str) -> crate::Result<Self> {
        Ok(Self::new(parse_poly(f)?, parse_poly(g)?))
    }

    /// `(f, g)` followed by a linear change of the target, `T ∘ F`.
    pub fn compose_target(&self, t: &[Vec<crate::poly::Rat>]) -> Self {
        let f = self.f.scale(&t[0][0]) + self.g.scale(&t[0][1]);
        let g = self.f.scale(&t[1][0]) + self.g.scale(&t[1][1]);
        PlaneMap { f, g, d1: self.d1, d2: self.d2 }
    }
}

/// A polynomial map `(f, g)` restricted to the quadric `y^2 + 2xz = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct SphereMap {
    pub f: QPoly,
    pub g: QPoly,
    pub d1: u32,
    pub d2: u32,
}

impl SphereMap {
    pub fn new(f: QPoly, g: QPoly) -> Self {
        let (d1, d2) = (f.degree(), g.degree());
        SphereMap { f: f.with_vars(xyz()), g: g.with_vars(xyz()), d1, d2 }
    }

    pub fn parse(f: &str, g: &str) -> crate::Result<Self> {
        Ok(Self::new(parse_poly(f)?, parse_poly(g)?))
    }
}

/// `phi = y^2 + 2xz - 1`.
pub fn sphere_constraint() -> QPoly {
    parse_poly("y^2+2*x*z-1").unwrap().with_vars(xyz())
}

/// The kernel vector field `v(h)` along the quadric, three 2x2 minors.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelField {
    pub v1: QPoly,
    pub v2: QPoly,
    pub v3: QPoly,
}

impl KernelField {
    pub fn of(h: &QPoly) -> Self {
        let h = h.clone().with_vars(xyz());
        let (hx, hy, hz) = (h.diff(Var::X), h.diff(Var::Y), h.diff(Var::Z));
        let (x, y, z) = (
            QPoly::var(&(), xyz(), Var::X),
            QPoly::var(&(), xyz(), Var::Y),
            QPoly::var(&(), xyz(), Var::Z),
        );
        KernelField {
            v1: &y * &hz - &x * &hy,
            v2: -(&z * &hz - &x * &hx),
            v3: &z * &hy - &y * &hx,
        }
    }

    /// `grad(p) . v`.
    pub fn apply(&self, p: &QPoly) -> QPoly {
        p.diff(Var::X) * self.v1.clone() + p.diff(Var::Y) * self.v2.clone() + p.diff(Var::Z) * self.v3.clone()
    }

    pub fn components(&self) -> [&QPoly; 3] {
        [&self.v1, &self.v2, &self.v3]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularityEquations {
    pub j: QPoly,
    pub j11: QPoly,
    pub j12: QPoly,
    pub bracket_a: QPoly,
    pub bracket_b: QPoly,
    pub v_f: Option<KernelField>,
    pub v_g: Option<KernelField>,
}

/// Printed form for reports.
#[derive(Clone, Debug, Serialize)]
pub struct EquationsText {
    pub j: String,
    pub j11: String,
    pub j12: String,
}

impl SingularityEquations {
    pub fn text(&self) -> EquationsText {
        EquationsText { j: self.j.to_string(), j11: self.j11.to_string(), j12: self.j12.to_string() }
    }
}

pub fn plane_equations(m: &PlaneMap) -> SingularityEquations {
    let (f, g) = (&m.f, &m.g);
    let (fx, fy, gx, gy) = (f.diff(Var::X), f.diff(Var::Y), g.diff(Var::X), g.diff(Var::Y));
    let (fxx, fxy, fyy) = (fx.diff(Var::X), fx.diff(Var::Y), fy.diff(Var::Y));
    let (gxx, gxy, gyy) = (gx.diff(Var::X), gx.diff(Var::Y), gy.diff(Var::Y));
    let j = &fx * &gy - &fy * &gx;
    let a = &fxx * &gy + &fx * &gxy - &fxy * &gx - &fy * &gxx;
    let b = &fxy * &gy + &fx * &gyy - &fyy * &gx - &fy * &gxy;
    let j11 = &a * &fy - &b * &fx;
    let j12 = &a * &gy - &b * &gx;
    SingularityEquations { j, j11, j12, bracket_a: a, bracket_b: b, v_f: None, v_g: None }
}

pub fn sphere_equations(m: &SphereMap) -> SingularityEquations {
    let (f, g) = (&m.f, &m.g);
    let (fx, fy, fz) = (f.diff(Var::X), f.diff(Var::Y), f.diff(Var::Z));
    let (gx, gy, gz) = (g.diff(Var::X), g.diff(Var::Y), g.diff(Var::Z));
    let (x, y, z) = (
        QPoly::var(&(), xyz(), Var::X),
        QPoly::var(&(), xyz(), Var::Y),
        QPoly::var(&(), xyz(), Var::Z),
    );
    let j = &z * &(&fy * &gz - &fz * &gy) - &y * &(&fx * &gz - &fz * &gx) + &x * &(&fx * &gy - &fy * &gx);
    let (vf, vg) = (KernelField::of(f), KernelField::of(g));
    let j11 = vf.apply(&j);
    let j12 = vg.apply(&j);
    let zero = QPoly::zero(&(), xyz());
    SingularityEquations { j, j11, j12, bracket_a: zero.clone(), bracket_b: zero, v_f: Some(vf), v_g: Some(vg) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn standard_cusp() {
        let e = plane_equations(&PlaneMap::parse("x", "y^3+x*y").unwrap());
        assert_eq!(e.j, p("3*y^2+x"));
        assert_eq!(e.j11, p("-6*y"));
        assert_eq!(e.j12, p("x-3*y^2"));
        assert_eq!(e.bracket_a, p("1"));
    }

    #[test]
    fn fold_and_immersion() {
        let e = plane_equations(&PlaneMap::parse("x", "y^2").unwrap());
        assert_eq!((e.j, e.j11, e.j12.is_zero()), (p("2*y"), p("-2"), true));
        let e = plane_equations(&PlaneMap::parse("x", "y").unwrap());
        assert_eq!((e.j, e.j11.is_zero(), e.j12.is_zero()), (p("1"), true, true));
    }

    #[test]
    fn sphere_examples() {
        let e = sphere_equations(&SphereMap::parse("x", "y").unwrap());
        assert_eq!(e.j, p("x"));
        let vf = e.v_f.unwrap();
        assert_eq!((vf.v1.is_zero(), vf.v2, vf.v3), (true, p("x"), p("-y")));
        assert_eq!(sphere_equations(&SphereMap::parse("z", "x").unwrap()).j, p("y"));
        let e = sphere_equations(&SphereMap::parse("3", "x").unwrap());
        assert!(e.j11.is_zero());
        assert!(e.v_f.unwrap().components().iter().all(|c| c.is_zero()));
    }
}
