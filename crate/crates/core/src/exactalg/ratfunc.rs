use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::{LaurentPoly, PolyJson};
use super::rational::Rational;
use super::vars::VarTable;
use crate::error::{Error, Result};

/// Quotient `num / den` of Laurent polynomials.
///
/// Canonical form: `den` is a polynomial with no monomial content and its
/// lexicographically leading coefficient is 1; a monomial denominator is
/// always absorbed into `num` (so it becomes exactly `1`). Equality is
/// cross-multiplied equality.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        num.check_vars(&den)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut rf = RationalFunction { num, den };
        rf.normalize();
        Ok(rf)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let den = LaurentPoly::one(p.vars());
        RationalFunction { num: p, den }
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::from_poly(LaurentPoly::one(vars))
    }

    pub fn zero(vars: &Arc<VarTable>) -> Self {
        Self::from_poly(LaurentPoly::zero(vars))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is a monomial (hence `1` in canonical form).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial this reduces to, if the denominator divides exactly.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let r = self.reduced();
        r.is_laurent().then_some(r.num)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one(self.num.vars());
            return;
        }
        if let Some((e, c)) = self.den.as_monomial() {
            let inv_e: Vec<i32> = e.iter().map(|x| -x).collect();
            self.num = self.num.mul_monomial(&inv_e, &c.recip());
            self.den = LaurentPoly::one(self.num.vars());
            return;
        }
        let content: Vec<i32> = self.den.min_exponents().iter().map(|x| -x).collect();
        let lead = self.den.leading_term().map(|(_, c)| c.clone()).unwrap();
        let (den, num) = (self.den.shift(&content), self.num.shift(&content));
        let inv = lead.recip();
        self.den = if inv.is_one() { den } else { den.scale(&inv) };
        self.num = if inv.is_one() { num } else { num.scale(&inv) };
    }

    /// Cancels the denominator entirely when it divides the numerator.
    pub fn reduced(&self) -> RationalFunction {
        if self.is_laurent() {
            return self.clone();
        }
        match self.num.exact_div(&self.den) {
            Ok(q) => RationalFunction::from_poly(q),
            Err(_) => self.clone(),
        }
    }

    pub fn checked_add(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.num.check_vars(&other.num)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.den == other.den {
            return RationalFunction::new(self.num.checked_add(&other.num)?, self.den.clone());
        }
        if self.den.len() >= other.den.len() && !other.is_laurent() {
            if let Ok(k) = self.den.exact_div(&other.den) {
                return RationalFunction::new(&self.num + &(&other.num * &k), self.den.clone());
            }
        }
        if other.den.len() >= self.den.len() && !self.is_laurent() {
            if let Ok(k) = other.den.exact_div(&self.den) {
                return RationalFunction::new(&(&self.num * &k) + &other.num, other.den.clone());
            }
        }
        if self.is_laurent() {
            return RationalFunction::new(&(&self.num * &other.den) + &other.num, other.den.clone());
        }
        if other.is_laurent() {
            return RationalFunction::new(&self.num + &(&other.num * &self.den), self.den.clone());
        }
        RationalFunction::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn checked_sub(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.num.check_vars(&other.num)?;
        let (mut n1, mut d1) = (self.num.clone(), self.den.clone());
        let (mut n2, mut d2) = (other.num.clone(), other.den.clone());
        if !d2.is_one() {
            if let Ok(q) = n1.exact_div(&d2) {
                n1 = q;
                d2 = LaurentPoly::one(self.vars());
            }
        }
        if !d1.is_one() {
            if let Ok(q) = n2.exact_div(&d1) {
                n2 = q;
                d1 = LaurentPoly::one(self.vars());
            }
        }
        RationalFunction::new(&n1 * &n2, &d1 * &d2)
    }

    pub fn inv(&self) -> Result<RationalFunction> {
        if self.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        self.checked_mul(&other.inv()?)
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn scale(&self, c: &Rational) -> RationalFunction {
        if c.is_zero() {
            return RationalFunction::zero(self.vars());
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<RationalFunction> {
        self.checked_mul(&RationalFunction::from_poly(p.clone()))
    }

    /// Applies the same map to numerator and denominator.
    pub fn map_polys<F>(&self, f: F) -> Result<RationalFunction>
    where
        F: Fn(&LaurentPoly) -> LaurentPoly,
    {
        RationalFunction::new(f(&self.num), f(&self.den))
    }

    pub fn substitute(&self, assignment: &BTreeMap<usize, LaurentPoly>) -> Result<RationalFunction> {
        RationalFunction::new(self.num.substitute(assignment)?, self.den.substitute(assignment)?)
    }

    pub fn uses_var(&self, idx: usize) -> bool {
        self.num.uses_var(idx) || self.den.uses_var(idx)
    }

    /// Cross-multiplied difference `num1*den2 - num2*den1`.
    pub fn cross_difference(&self, other: &RationalFunction) -> Result<LaurentPoly> {
        self.num.check_vars(&other.num)?;
        Ok(&(&self.num * &other.den) - &(&other.num * &self.den))
    }

    pub fn to_json(&self) -> RationalFunctionJson {
        RationalFunctionJson { num: self.num.to_json(), den: self.den.to_json() }
    }

    pub fn from_json(json: &RationalFunctionJson) -> Result<RationalFunction> {
        RationalFunction::new(LaurentPoly::from_json(&json.num)?, LaurentPoly::from_json(&json.den)?)
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        match self.cross_difference(other) {
            Ok(d) => d.is_zero(),
            Err(_) => false,
        }
    }
}

impl From<LaurentPoly> for RationalFunction {
    fn from(p: LaurentPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalFunctionJson {
    pub num: PolyJson,
    pub den: PolyJson,
}
