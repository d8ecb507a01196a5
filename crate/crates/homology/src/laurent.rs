//! Integer Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

use serde::Serialize;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LaurentPoly(BTreeMap<i32, i64>);

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(coeff, exp);
        p
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn add_term(&mut self, coeff: i64, exp: i32) {
        if coeff == 0 {
            return;
        }
        let e = self.0.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.0.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// p(q) ↦ p(q⁻¹).
    pub fn invert(&self) -> Self {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (-e, c)).collect())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(c, e);
        }
        r
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                r.add_term(c1 * c2, e1 + e2);
            }
        }
        r
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly(self.0.iter().map(|(&e, &c)| (e, -c)).collect())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.0.iter().rev().enumerate() {
            let (sign, a) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            match (*e, a) {
                (0, a) => write!(f, "{a}")?,
                (e, 1) => write!(f, "q^{e}")?,
                (e, a) => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}
