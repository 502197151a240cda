//! Conversions between the sparse and dense representations.

use super::field::{Field, Ring};
use super::mpoly::{MPoly, Var, VarSet};
use super::upoly::UPoly;

/// Dense univariate view of `p` in `v`; `None` if another variable occurs.
pub fn to_upoly<K: Ring>(p: &MPoly<K>, v: Var) -> Option<UPoly<K>> {
    if !p.support_vars().without(v).is_empty() {
        return None;
    }
    Some(UPoly::new(p.ctx(), p.univariate_coeffs(v)))
}

pub fn from_upoly<K: Ring>(u: &UPoly<K>, v: Var) -> MPoly<K> {
    MPoly::from_univariate(u.ctx(), v, u.coeffs()).with_vars(VarSet::of(&[v]))
}

/// Number of distinct roots in the algebraic closure of a nonzero univariate polynomial.
pub fn distinct_root_count<K: Field>(u: &UPoly<K>) -> usize {
    u.squarefree_part().deg()
}
