use cuspidal::poly::linalg::mat_mul_rat;
use cuspidal::poly::{rat, resultant, Mono, QPoly, Rat, Ring, Var, VarSet};
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
    prop::collection::vec((0u16..4, 0u16..4, -6i64..=6), 1..7).prop_map(|t| poly_from(&t))
}

fn univariate(roots: &[i64]) -> QPoly {
    roots.iter().fold(QPoly::one(&(), xy()), |acc, &r| &acc * &poly_from(&[(1, 0, 1), (0, 0, -r)]))
}

fn y_linear(roots: &[i64]) -> QPoly {
    // prod (y - r x - 1)
    roots.iter().fold(QPoly::one(&(), xy()), |acc, &r| &acc * &poly_from(&[(0, 1, 1), (1, 0, -r), (0, 0, -1)]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_rule(p in small_poly(), q in small_poly()) {
        for v in [Var::X, Var::Y] {
            let lhs = (&p * &q).diff(v);
            let rhs = &(&p.diff(v) * &q) + &(&p * &q.diff(v));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn resultant_detects_common_factors(
        a in prop::collection::btree_set(-8i64..8, 1..4),
        b in prop::collection::btree_set(-8i64..8, 1..4),
    ) {
        let (a, b): (Vec<i64>, Vec<i64>) = (a.into_iter().collect(), b.into_iter().collect());
        let shared = a.iter().any(|r| b.contains(r));
        let r = resultant(&y_linear(&a), &y_linear(&b), Var::Y).unwrap();
        prop_assert_eq!(r.is_zero(), shared);
    }

    #[test]
    fn resultant_is_product_over_roots(
        roots in prop::collection::btree_set(-6i64..6, 1..4),
        q in prop::collection::vec(-5i64..=5, 1..5),
    ) {
        let roots: Vec<i64> = roots.into_iter().collect();
        let p = univariate(&roots);
        let qt: Vec<(u16, u16, i64)> = q.iter().enumerate().map(|(i, &c)| (i as u16, 0, c)).collect();
        let q = poly_from(&qt);
        prop_assume!(!q.is_zero());
        let r = resultant(&p, &q, Var::X).unwrap().constant_term();
        let expected = roots.iter().fold(rat(1), |acc, &a| acc * q.eval(&[(Var::X, rat(a)), (Var::Y, rat(0))]));
        prop_assert_eq!(r, expected);
    }

    #[test]
    fn homogenize_round_trip(p in small_poly()) {
        let h = p.homogenize(p.degree(), Var::Z).unwrap();
        prop_assert!(h.terms().keys().all(|m| m.deg() == p.degree()));
        prop_assert_eq!(h.dehomogenize(Var::Z).with_vars(xy()), p);
    }

    #[test]
    fn reduction_is_a_ring_map(p in small_poly(), q in small_poly(), k in 0usize..5) {
        let prime = cuspidal::poly::PRIMES[k];
        let (rp, rq) = (p.reduce_mod(prime).unwrap(), q.reduce_mod(prime).unwrap());
        prop_assert_eq!((&p + &q).reduce_mod(prime).unwrap(), &rp + &rq);
        prop_assert_eq!((&p * &q).reduce_mod(prime).unwrap(), &rp * &rq);
    }

    #[test]
    fn linear_change_composes(
        p in small_poly(),
        m in prop::array::uniform4(-4i64..=4),
        n in prop::array::uniform4(-4i64..=4),
    ) {
        let to_mat = |a: [i64; 4]| vec![vec![rat(a[0]), rat(a[1])], vec![rat(a[2]), rat(a[3])]];
        prop_assume!(a_det(m) != 0 && a_det(n) != 0);
        let (mm, nn) = (to_mat(m), to_mat(n));
        let vars = [Var::X, Var::Y];
        let twice = p.linear_change(&vars, &mm).unwrap().linear_change(&vars, &nn).unwrap();
        let once = p.linear_change(&vars, &mat_mul_rat(&mm, &nn)).unwrap();
        prop_assert_eq!(twice, once);
    }
}

fn a_det(a: [i64; 4]) -> i64 {
    a[0] * a[3] - a[1] * a[2]
}

#[test]
fn singular_change_rejected() {
    let p = poly_from(&[(1, 1, 1)]);
    let m: Vec<Vec<Rat>> = vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
    assert!(p.linear_change(&[Var::X, Var::Y], &m).is_err());
    assert!(Ring::is_zero(&rat(0)));
}
