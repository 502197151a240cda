//! Text grammar for polynomials: `c`, `c*x^a*y^b` terms joined by `+`/`-`.
//!
//! Coefficients are decimal integers or `p/q`. Canonical printing lists terms in
//! descending graded-lex order with signs folded into the coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::field::{rat, Fp, Rat, Ring};
use super::mpoly::{MPoly, Mono, Var, VarSet};
use crate::error::{Error, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parse a polynomial over the rationals.
pub fn parse_poly(src: &str) -> Result<MPoly<Rat>> {
    let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(parse_err("empty polynomial"));
    }
    let mut out = MPoly::zero(&(), VarSet::default());
    let bytes: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut first = true;
    while i < bytes.len() {
        let mut sign = rat(1);
        if bytes[i] == '+' || bytes[i] == '-' {
            if bytes[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if !first {
            return Err(parse_err(format!("expected '+' or '-' at position {i}")));
        }
        first = false;
        let start = i;
        while i < bytes.len() && bytes[i] != '+' && bytes[i] != '-' {
            i += 1;
        }
        let term: String = bytes[start..i].iter().collect();
        if term.is_empty() {
            return Err(parse_err("empty term"));
        }
        let (m, c) = parse_term(&term)?;
        out.add_term(m, c * sign);
    }
    Ok(out)
}

fn parse_term(term: &str) -> Result<(Mono, Rat)> {
    let mut coeff = rat(1);
    let mut mono = Mono::one();
    for factor in term.split('*') {
        if factor.is_empty() {
            return Err(parse_err(format!("empty factor in '{term}'")));
        }
        let first = factor.chars().next().unwrap();
        if first.is_ascii_digit() {
            coeff *= parse_number(factor)?;
        } else {
            let var = Var::from_char(first).ok_or_else(|| parse_err(format!("unknown variable '{first}'")))?;
            let rest = &factor[1..];
            let e: u16 = if rest.is_empty() {
                1
            } else if let Some(ex) = rest.strip_prefix('^') {
                ex.parse().map_err(|_| parse_err(format!("bad exponent in '{factor}'")))?
            } else {
                return Err(parse_err(format!("bad factor '{factor}'")));
            };
            mono = mono.mul(&Mono::var(var, e));
        }
    }
    Ok((mono, coeff))
}

fn parse_number(s: &str) -> Result<Rat> {
    let bad = || parse_err(format!("bad coefficient '{s}'"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if Zero::is_zero(&d) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Coefficient formatting used by the canonical printer.
pub trait CoeffFmt: Ring {
    /// (is_negative, absolute value as text, absolute value is one)
    fn parts(&self) -> (bool, String, bool);
}

impl CoeffFmt for Rat {
    fn parts(&self) -> (bool, String, bool) {
        let a = self.abs();
        (self.is_negative(), a.to_string(), a == rat(1))
    }
}

impl CoeffFmt for Fp {
    fn parts(&self) -> (bool, String, bool) {
        let s = self.signed();
        (s < 0, s.abs().to_string(), s.abs() == 1)
    }
}

pub fn format_rat(q: &Rat) -> String {
    q.to_string()
}

impl<K: CoeffFmt> fmt::Display for MPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().iter().rev().enumerate() {
            let (neg, abs, unit) = c.parts();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !unit || m.deg() == 0 {
                factors.push(abs);
            }
            for v in Var::ALL {
                match m.exp(v) {
                    0 => {}
                    1 => factors.push(v.name().to_string()),
                    e => factors.push(format!("{}^{}", v.name(), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_round_trip() {
        let p = parse_poly(" y^2 + 2*x*z - 1 ").unwrap();
        assert_eq!(p.to_string(), "2*x*z+y^2-1");
        let q = parse_poly("-1/2*x + 3 - x^2*y").unwrap();
        assert_eq!(q.to_string(), "-x^2*y-1/2*x+3");
        assert_eq!(parse_poly(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_poly("x^").is_err());
        assert!(parse_poly("q*x").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("").is_err());
    }
}
