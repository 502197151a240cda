//! Closed-form enumerative invariants for generic maps of the plane and of the sphere.

use num_integer::Integer;
use serde::Serialize;

use crate::poly::{parse_poly, rat, ratio, QPoly};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Surface {
    Plane,
    Sphere,
}

/// Predicted invariants; `d1 >= d2` after normalization.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Invariants {
    pub surface: Surface,
    pub d1: i64,
    pub d2: i64,
    pub d: i64,
    #[serde(rename = "D")]
    pub big_d: i64,
    pub cusp_count: i64,
    pub node_count: i64,
    pub crit_degree: i64,
    pub crit_genus: i64,
    pub crit_infinity_points: i64,
    pub disc_degree: i64,
    pub delta_infinity_total: i64,
    pub branch_delta: i64,
    pub branch_pair_intersection: i64,
    pub bezout_total: i64,
    pub gradf_count: i64,
    /// Sphere only: points of the quadric where `v(f)` vanishes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_locus_count: Option<i64>,
    /// The critical locus is empty or the formulas fall outside their stated range.
    pub degenerate: bool,
}

pub type PlaneInvariants = Invariants;
pub type SphereInvariants = Invariants;

fn half(twice: i64) -> i64 {
    debug_assert!(twice % 2 == 0, "half-integer formula value {twice}");
    twice / 2
}

fn normalize(d1: u32, d2: u32) -> (i64, i64) {
    let (a, b) = (d1.max(d2) as i64, d1.min(d2) as i64);
    (a, b)
}

pub fn plane_invariants(d1: u32, d2: u32) -> PlaneInvariants {
    let (d1, d2) = normalize(d1, d2);
    let d = d1.gcd(&d2);
    let big_d = d1 + d2 - 2;
    let cusp_count = d1 * d1 + d2 * d2 + 3 * d1 * d2 - 6 * d1 - 6 * d2 + 7;
    let node_count = half((d1 * d2 - 4) * (big_d * big_d - 2) - (d - 5) * big_d - 6);
    let delta_infinity_total = half(d1 * (d1 - d2) * big_d * big_d + (-2 * d1 + d2 + d) * big_d);
    Invariants {
        surface: Surface::Plane,
        d1,
        d2,
        d,
        big_d,
        cusp_count,
        node_count,
        crit_degree: big_d,
        crit_genus: half((big_d - 1) * (big_d - 2)),
        crit_infinity_points: big_d,
        disc_degree: d1 * big_d,
        delta_infinity_total,
        branch_delta: half((d1 - 1) * (d1 - d2 - 1) + (d - 1)),
        branch_pair_intersection: d1 * (d1 - d2),
        bezout_total: big_d * (2 * d1 + d2 - 4),
        gradf_count: (d1 - 1) * (d1 - 1),
        kernel_locus_count: None,
        degenerate: d1 + d2 <= 2,
    }
}

pub fn sphere_invariants(d1: u32, d2: u32) -> SphereInvariants {
    let (d1, d2) = normalize(d1, d2);
    let d = d1.gcd(&d2);
    let big_d = d1 + d2 - 1;
    let kernel = 2 * (d1 * d1 - d1 + 1);
    Invariants {
        surface: Surface::Sphere,
        d1,
        d2,
        d,
        big_d,
        cusp_count: 2 * (d1 * d1 + d2 * d2 + 3 * d1 * d2 - 3 * d1 - 3 * d2 + 1),
        node_count: (2 * d1 * d2 - 3) * big_d * big_d - big_d * (d1 + d2 + d - 2) - 2 * (d1 * d2 - d1 - d2),
        crit_degree: 2 * big_d,
        crit_genus: (d1 + d2 - 2) * (d1 + d2 - 2),
        crit_infinity_points: 2 * big_d,
        disc_degree: 2 * d1 * big_d,
        delta_infinity_total: 2 * d1 * (d1 - d2) * big_d * big_d + (-2 * d1 + d2 + d) * big_d,
        branch_delta: half((d1 - 1) * (d1 - d2 - 1) + (d - 1)),
        branch_pair_intersection: d1 * (d1 - d2),
        bezout_total: 2 * big_d * (2 * d1 + d2 - 2),
        gradf_count: kernel,
        kernel_locus_count: Some(kernel),
        degenerate: d1 + d2 <= 2,
    }
}

/// Serre's genus formula for the projective closure of the discriminant.
pub fn serre_closure(inv: &Invariants) -> bool {
    let k = inv.disc_degree;
    (k - 1) * (k - 2) == 2 * (inv.crit_genus + inv.cusp_count + inv.node_count + inv.delta_infinity_total)
}

/// `r * branch_delta + C(r, 2) * pair` against the closed-form total at infinity.
pub fn delta_infinity_decomposition(inv: &Invariants) -> bool {
    let r = inv.crit_infinity_points;
    r * inv.branch_delta + r * (r - 1) / 2 * inv.branch_pair_intersection == inv.delta_infinity_total
}

/// `c = bezout_total - gradf_count`.
pub fn bezout_split(inv: &Invariants) -> bool {
    inv.cusp_count == inv.bezout_total - inv.gradf_count
}

/// One named identity checked as an exact polynomial identity in `d1 = x`, `d2 = y`, `d = z`.
#[derive(Clone, Debug, Serialize)]
pub struct SymbolicIdentity {
    pub name: &'static str,
    pub holds: bool,
}

fn sym(s: &str) -> QPoly {
    parse_poly(s).expect("formula text")
}

/// Polynomial identities between the closed forms, with `d` treated as an independent symbol.
pub fn symbolic_identities() -> Vec<SymbolicIdentity> {
    let h = |p: QPoly| p.scale(&ratio(1, 2));
    let mut out = Vec::new();

    let c_plane = sym("x^2+y^2+3*x*y-6*x-6*y+7");
    let dd = sym("x+y-2");
    let bezout = &(&dd * &sym("2*x+y-4")) - &sym("x-1").pow(2);
    out.push(SymbolicIdentity { name: "plane_bezout", holds: bezout == c_plane });

    let ds = sym("x+y-1");
    let c_sphere = sym("2*x^2+2*y^2+6*x*y-6*x-6*y+2");
    let bezs = (&(&ds * &sym("2*x+y-2")) - &sym("x^2-x+1")).scale(&rat(2));
    out.push(SymbolicIdentity { name: "sphere_bezout", holds: bezs == c_sphere });

    // plane delta at infinity
    let bd = h(&(&sym("x-1") * &sym("x-y-1")) + &sym("z-1"));
    let pair = sym("x^2-x*y");
    let total = h(&(&(&pair * &dd) * &dd) + &(&sym("-2*x+y+z") * &dd));
    let r = dd.clone();
    let rr = h(&r * &(&r - &sym("1")));
    let decomp = &(&r * &bd) + &(&rr * &pair);
    out.push(SymbolicIdentity { name: "plane_delta_infinity_decomposition", holds: decomp == total });

    let disc = &sym("x") * &dd;
    let lhs = h(&(&disc - &sym("1")) * &(&disc - &sym("2")));
    let genus = h(&(&dd - &sym("1")) * &(&dd - &sym("2")));
    let nodes = h(&(&(&sym("x*y-4") * &(&dd.pow(2) - &sym("2"))) - &(&sym("z-5") * &dd)) - &sym("6"));
    let rhs = &(&(&genus + &c_plane) + &nodes) + &total;
    out.push(SymbolicIdentity { name: "plane_serre", holds: lhs == rhs });

    // sphere
    let r_s = ds.scale(&rat(2));
    let total_s = &(&(&pair * &ds) * &ds).scale(&rat(2)) + &(&sym("-2*x+y+z") * &ds);
    let decomp_s = &(&r_s * &bd) + &(&h(&r_s * &(&r_s - &sym("1"))) * &pair);
    out.push(SymbolicIdentity { name: "sphere_delta_infinity_decomposition", holds: decomp_s == total_s });

    let disc_s = &sym("2*x") * &ds;
    let lhs_s = h(&(&disc_s - &sym("1")) * &(&disc_s - &sym("2")));
    let genus_s = sym("x+y-2").pow(2);
    let nodes_s = &(&(&sym("2*x*y-3") * &ds.pow(2)) - &(&ds * &sym("x+y+z-2"))) - &sym("2*x*y-2*x-2*y");
    let rhs_s = &(&(&genus_s + &c_sphere) + &nodes_s) + &total_s;
    out.push(SymbolicIdentity { name: "sphere_serre", holds: lhs_s == rhs_s });
    out
}

/// Table of numeric identities for `1 <= d2 <= d1 <= n`.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub d1: u32,
    pub d2: u32,
    pub plane: Invariants,
    pub sphere: Invariants,
    pub plane_serre: bool,
    pub sphere_serre: bool,
    pub plane_bezout: bool,
    pub sphere_bezout: bool,
    pub plane_delta_decomposition: bool,
    pub sphere_delta_decomposition: bool,
}

impl SweepRow {
    pub fn all_hold(&self) -> bool {
        self.plane_serre
            && self.sphere_serre
            && self.plane_bezout
            && self.sphere_bezout
            && self.plane_delta_decomposition
            && self.sphere_delta_decomposition
    }
}

pub fn sweep(n: u32) -> Vec<SweepRow> {
    let mut rows = Vec::new();
    for d1 in 1..=n {
        for d2 in 1..=d1 {
            let (p, s) = (plane_invariants(d1, d2), sphere_invariants(d1, d2));
            rows.push(SweepRow {
                d1,
                d2,
                plane_serre: serre_closure(&p),
                sphere_serre: serre_closure(&s),
                plane_bezout: bezout_split(&p),
                sphere_bezout: bezout_split(&s),
                plane_delta_decomposition: delta_infinity_decomposition(&p),
                sphere_delta_decomposition: delta_infinity_decomposition(&s),
                plane: p,
                sphere: s,
            });
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_values() {
        let i = plane_invariants(2, 2);
        assert_eq!((i.cusp_count, i.node_count, i.crit_degree, i.crit_genus, i.disc_degree), (3, 0, 2, 0, 4));
        assert_eq!(i.delta_infinity_total, 0);
        let i = plane_invariants(3, 2);
        assert_eq!((i.cusp_count, i.node_count, i.crit_degree, i.crit_genus, i.disc_degree), (8, 10, 3, 1, 9));
        assert_eq!((i.delta_infinity_total, i.bezout_total, i.gradf_count), (9, 12, 4));
        let i = plane_invariants(1, 1);
        assert_eq!((i.cusp_count, i.node_count, i.degenerate), (0, 0, true));
        assert_eq!(plane_invariants(2, 3), plane_invariants(3, 2));
    }

    #[test]
    fn sphere_values() {
        assert_eq!(sphere_invariants(1, 1).cusp_count, 0);
        let i = sphere_invariants(2, 1);
        assert_eq!((i.cusp_count, i.node_count, i.crit_degree, i.crit_genus, i.disc_degree), (6, 2, 4, 1, 8));
        assert_eq!((i.delta_infinity_total, i.kernel_locus_count), (12, Some(6)));
        let i = sphere_invariants(2, 2);
        assert_eq!((i.cusp_count, i.node_count, i.crit_degree, i.crit_genus), (18, 33, 6, 4));
        assert_eq!((i.disc_degree, i.delta_infinity_total), (12, 0));
    }

    #[test]
    fn serre_examples() {
        assert!(serre_closure(&plane_invariants(3, 2)));
        assert!(serre_closure(&plane_invariants(2, 2)));
        assert!(serre_closure(&sphere_invariants(2, 1)));
    }

    #[test]
    fn identities_hold_symbolically() {
        for id in symbolic_identities() {
            assert!(id.holds, "{}", id.name);
        }
    }
}
