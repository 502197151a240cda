use cuspidal::formulas::{plane_invariants, sphere_invariants};
use cuspidal::jets::{plane_equations, PlaneMap};
use cuspidal::poly::{parse_poly, rat, Mono, QPoly, Rat, Var, VarSet};
use cuspidal::puiseux::{analyze_germ, milnor_number};
use cuspidal::solve::{count_common_zeros, local_mult};
use proptest::prelude::*;

fn xy() -> VarSet {
    VarSet::of(&[Var::X, Var::Y])
}

fn poly_from(terms: &[(u16, u16, i64)]) -> QPoly {
    let t: Vec<(Mono, i64)> =
        terms.iter().map(|&(i, j, c)| (Mono::var(Var::X, i).mul(&Mono::var(Var::Y, j)), c)).collect();
    QPoly::from_int_terms(xy(), &t)
}

fn small_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec((0u16..4, 0u16..4, -5i64..=5), 1..6).prop_map(|t| poly_from(&t))
}

fn mat(a: [i64; 4]) -> Vec<Vec<Rat>> {
    vec![vec![rat(a[0]), rat(a[1])], vec![rat(a[2]), rat(a[3])]]
}

fn invertible() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-3i64..=3).prop_filter("invertible", |a| a[0] * a[3] != a[1] * a[2])
}

fn power(p: &QPoly, e: u32) -> QPoly {
    (0..e).fold(poly_from(&[(0, 0, 1)]), |acc, _| &acc * p)
}

const GERMS: [&str; 6] = ["y^2 - x^3", "y^3 - x^4", "y^2 - x^4", "y^2 - x^2 - x^3", "y^3 - x^2*y", "y^2 - x^5"];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn jacobian_equivariance(f in small_poly(), g in small_poly(), t in invertible()) {
        let m = PlaneMap::new(f, g);
        let j = plane_equations(&m).j;
        let jt = plane_equations(&m.compose_target(&mat(t))).j;
        prop_assert_eq!(jt, j.scale(&rat(t[0] * t[3] - t[1] * t[2])));
    }

    #[test]
    fn cusp_equations_divisibility(f in small_poly(), g in small_poly()) {
        let m = PlaneMap::new(f, g);
        let e = plane_equations(&m);
        let (fx, fy) = (m.f.diff(Var::X), m.f.diff(Var::Y));
        let (gx, gy) = (m.g.diff(Var::X), m.g.diff(Var::Y));
        prop_assert_eq!(&(&gx * &e.j11) - &(&fx * &e.j12), -(&e.bracket_a * &e.j));
        prop_assert_eq!(&(&gy * &e.j11) - &(&fy * &e.j12), -(&e.bracket_b * &e.j));
    }

    #[test]
    fn invariants_ignore_order(d1 in 1u32..=12, d2 in 1u32..=12) {
        prop_assert_eq!(plane_invariants(d1, d2), plane_invariants(d2, d1));
        prop_assert_eq!(sphere_invariants(d1, d2), sphere_invariants(d2, d1));
    }

    #[test]
    fn branch_delta_vanishing(a in 1u32..=12, b in 1u32..=12) {
        let (d1, d2) = (a.max(b), a.min(b));
        let inv = plane_invariants(d1, d2);
        prop_assert!(inv.branch_delta >= 0);
        prop_assert_eq!(inv.branch_delta == 0, d1 == d2 || d1 == d2 + 1);
    }

    #[test]
    fn local_mult_symmetric(
        xs in prop::collection::vec((-4i64..=4, 1u32..=2), 1..3),
        ls in prop::collection::vec((-4i64..=4, -2i64..=2, 1u32..=2), 1..3),
    ) {
        // p = prod (x - a)^e and q = prod (y - b + c x)^k meet at (a, b - c a) with multiplicity e k
        let mut pts = std::collections::BTreeSet::new();
        for &(a, _) in &xs {
            for &(b, c, _) in &ls {
                pts.insert((a, b - c * a));
            }
        }
        prop_assume!(pts.len() == xs.len() * ls.len());
        let p = xs.iter().fold(poly_from(&[(0, 0, 1)]), |acc, &(a, e)| &acc * &power(&poly_from(&[(1, 0, 1), (0, 0, -a)]), e));
        let q = ls.iter().fold(poly_from(&[(0, 0, 1)]), |acc, &(b, c, k)| {
            &acc * &power(&poly_from(&[(0, 1, 1), (0, 0, -b), (1, 0, c)]), k)
        });
        let mut total = 0;
        for &(a, e) in &xs {
            for &(b, c, k) in &ls {
                let pt = [rat(a), rat(b - c * a)];
                let m = local_mult(&p, &q, &pt).unwrap();
                prop_assert_eq!(m, local_mult(&q, &p, &pt).unwrap());
                prop_assert_eq!(m, (e * k) as usize);
                total += m;
            }
        }
        let z = count_common_zeros(&p, &q).unwrap();
        prop_assert_eq!(z.resultant_degree, total);
        prop_assert_eq!(z.distinct, pts.len());
        if xs.iter().all(|x| x.1 == 1) && ls.iter().all(|l| l.2 == 1) {
            prop_assert_eq!(z.distinct, z.resultant_degree);
        }
    }

    #[test]
    fn germ_invariants_under_linear_change(i in 0usize..GERMS.len(), t in invertible()) {
        let p = parse_poly(GERMS[i]).unwrap().with_vars(xy());
        let o = [rat(0), rat(0)];
        let base = analyze_germ(&p, &o).unwrap();
        let q = p.linear_change(&[Var::X, Var::Y], &mat(t)).unwrap();
        let moved = analyze_germ(&q, &o).unwrap();
        prop_assert_eq!(moved.delta, base.delta);
        prop_assert_eq!(moved.branch_count, base.branch_count);
        let mu = milnor_number(&q, &o).unwrap() as i64;
        prop_assert_eq!(mu, 2 * moved.delta as i64 - moved.branch_count as i64 + 1);
    }
}

#[test]
fn conics_sharing_an_asymptote() {
    let j = parse_poly("-630*x^2-1260*x*y-630*y^2-420*x-630*y").unwrap();
    let k = parse_poly("-22680*x^2-45360*x*y-22680*y^2-22680*x-15120*y").unwrap();
    assert_eq!(local_mult(&j, &k, &[rat(0), rat(0)]), Ok(1));
    let z = count_common_zeros(&j, &k).unwrap();
    assert_eq!((z.distinct, z.resultant_degree), (2, 2));
}
