use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, parse_rational, rat, Rational};
use super::vars::VarTable;
use crate::error::{Error, Result};

/// One integer exponent per [`VarTable`] entry. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ExponentVector(Vec<i32>);

impl ExponentVector {
    pub fn zeros(len: usize) -> Self {
        ExponentVector(vec![0; len])
    }

    pub fn from_vec(v: Vec<i32>) -> Self {
        ExponentVector(v)
    }

    pub fn into_vec(self) -> Vec<i32> {
        self.0
    }

    pub fn with(mut self, idx: usize, e: i32) -> Self {
        self.0[idx] = e;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn plus(&self, other: &[i32]) -> ExponentVector {
        ExponentVector(self.0.iter().zip(other).map(|(a, b)| a + b).collect())
    }

    fn minus(&self, other: &[i32]) -> ExponentVector {
        ExponentVector(self.0.iter().zip(other).map(|(a, b)| a - b).collect())
    }

    fn negated(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|e| -e).collect())
    }
}

impl Deref for ExponentVector {
    type Target = [i32];
    fn deref(&self) -> &[i32] {
        &self.0
    }
}

impl From<Vec<i32>> for ExponentVector {
    fn from(v: Vec<i32>) -> Self {
        ExponentVector(v)
    }
}

fn add_into(map: &mut BTreeMap<ExponentVector, Rational>, exp: ExponentVector, coef: Rational) {
    if coef.is_zero() {
        return;
    }
    match map.entry(exp) {
        Entry::Vacant(slot) => {
            slot.insert(coef);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += coef;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

fn collect_hashed(acc: HashMap<ExponentVector, Rational>) -> BTreeMap<ExponentVector, Rational> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Exact multivariate Laurent polynomial with rational coefficients.
///
/// No stored coefficient is zero. Two polynomials interact only when they
/// share the same [`VarTable`].
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    vars: Arc<VarTable>,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars) && self.terms == other.terms
    }
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<VarTable>) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Arc<VarTable>) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn constant(vars: &Arc<VarTable>, c: Rational) -> Self {
        Self::monomial(vars, ExponentVector::zeros(vars.len()), c)
    }

    pub fn int(vars: &Arc<VarTable>, c: i64) -> Self {
        Self::constant(vars, rat(c))
    }

    pub fn monomial(vars: &Arc<VarTable>, exp: ExponentVector, coef: Rational) -> Self {
        assert_eq!(exp.len(), vars.len(), "exponent vector length must match the variable table");
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// `coef * prod var^e` over the listed `(index, exponent)` pairs.
    pub fn term(vars: &Arc<VarTable>, coef: i64, powers: &[(usize, i32)]) -> Self {
        let mut exp = ExponentVector::zeros(vars.len());
        for &(idx, e) in powers {
            exp.0[idx] += e;
        }
        Self::monomial(vars, exp, rat(coef))
    }

    pub fn var(vars: &Arc<VarTable>, idx: usize) -> Self {
        Self::term(vars, 1, &[(idx, 1)])
    }

    pub fn from_terms<I>(vars: &Arc<VarTable>, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExponentVector, Rational)>,
    {
        let mut map = BTreeMap::new();
        for (exp, coef) in terms {
            assert_eq!(exp.len(), vars.len());
            add_into(&mut map, exp, coef);
        }
        LaurentPoly { vars: vars.clone(), terms: map }
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_monomial().is_some_and(|(e, c)| e.is_zero() && c.is_one())
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&ExponentVector, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn as_monomial(&self) -> Option<(&ExponentVector, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        self.as_monomial().filter(|(e, _)| e.is_zero()).map(|(_, c)| c.clone())
    }

    pub fn uses_var(&self, idx: usize) -> bool {
        self.terms.keys().any(|e| e[idx] != 0)
    }

    /// Indices of variables that occur with nonzero exponent somewhere.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.uses_var(i)).collect()
    }

    /// `(min, max)` exponent of one variable; `None` for the zero polynomial.
    pub fn degree_range(&self, idx: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[idx]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> ExponentVector {
        let mut out = match self.terms.keys().next() {
            Some(e) => e.clone(),
            None => return ExponentVector::zeros(self.vars.len()),
        };
        for e in self.terms.keys() {
            for (o, x) in out.0.iter_mut().zip(e.iter()) {
                *o = (*o).min(*x);
            }
        }
        out
    }

    pub fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VarTableMismatch(self.vars.names().join(","), other.vars.names().join(",")))
        }
    }

    pub fn checked_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let (big, small) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut terms = big.terms.clone();
        for (e, c) in &small.terms {
            add_into(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn checked_sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            add_into(&mut terms, e.clone(), -c.clone());
        }
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn checked_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(&self.vars));
        }
        if let Some((e, c)) = other.as_monomial() {
            return Ok(self.mul_monomial(e, c));
        }
        if let Some((e, c)) = self.as_monomial() {
            return Ok(other.mul_monomial(e, c));
        }
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::with_capacity(self.len() * other.len());
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.plus(e2);
                let c = c1 * c2;
                acc.entry(e).and_modify(|x| *x += &c).or_insert(c);
            }
        }
        Ok(LaurentPoly { vars: self.vars.clone(), terms: collect_hashed(acc) })
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Multiplies by `coef * x^exp`.
    pub fn mul_monomial(&self, exp: &[i32], coef: &Rational) -> LaurentPoly {
        if coef.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.plus(exp), c * coef)).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Multiplies by `x^exp` (coefficient 1).
    pub fn shift(&self, exp: &[i32]) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.plus(exp), c.clone())).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Integer power; negative exponents require a monomial.
    pub fn powi(&self, k: i32) -> Result<LaurentPoly> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.inv_monomial()?.pow(k.unsigned_abs()))
        }
    }

    pub fn inv_monomial(&self) -> Result<LaurentPoly> {
        match self.as_monomial() {
            Some((e, c)) => Ok(LaurentPoly::monomial(&self.vars, e.negated(), c.recip())),
            None => Err(Error::NotInvertible(format!("{self} is not a monomial"))),
        }
    }

    /// Applies an exponent-vector map to every term and re-collects.
    ///
    /// `f(src, dst)` receives a zeroed `dst` buffer.
    pub fn map_exponents<F>(&self, f: F) -> LaurentPoly
    where
        F: Fn(&[i32], &mut [i32]),
    {
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::with_capacity(self.len());
        for (e, c) in &self.terms {
            let mut out = vec![0; e.len()];
            f(e, &mut out);
            acc.entry(ExponentVector(out)).and_modify(|x| *x += c).or_insert_with(|| c.clone());
        }
        LaurentPoly { vars: self.vars.clone(), terms: collect_hashed(acc) }
    }

    /// Sum of `sign * f_k(self)` over a family of exponent maps, collected once.
    pub fn signed_orbit_sum<'a, I, F>(&self, maps: I) -> LaurentPoly
    where
        I: IntoIterator<Item = (i32, &'a F)>,
        F: Fn(&[i32], &mut [i32]) + 'a,
    {
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
        for (sign, f) in maps {
            for (e, c) in &self.terms {
                let mut out = vec![0; e.len()];
                f(e, &mut out);
                let c = if sign < 0 { -c.clone() } else { c.clone() };
                acc.entry(ExponentVector(out)).and_modify(|x| *x += &c).or_insert(c);
            }
        }
        LaurentPoly { vars: self.vars.clone(), terms: collect_hashed(acc) }
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Fails with [`Error::InexactDivision`] when the divisor does not divide.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero(&self.vars));
        }
        if let Some((e, c)) = divisor.as_monomial() {
            return Ok(self.mul_monomial(&e.negated(), &c.recip()));
        }
        // Clear monomial content so both sides are ordinary polynomials and
        // the divisor is not divisible by any single variable.
        let dmin = divisor.min_exponents();
        let amin = self.min_exponents();
        let d = divisor.shift(&dmin.negated());
        let mut rem = self.shift(&amin.negated()).terms;
        let (lead_e, lead_c) = d.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let lead_inv = lead_c.recip();
        let mut quot = BTreeMap::new();
        while let Some((re, rc)) = rem.iter().next_back() {
            let diff = re.minus(&lead_e);
            if diff.iter().any(|&x| x < 0) {
                return Err(Error::InexactDivision);
            }
            let t = rc * &lead_inv;
            for (de, dc) in &d.terms {
                add_into(&mut rem, de.plus(&diff), -(&t * dc));
            }
            quot.insert(diff, t);
        }
        let shift = amin.minus(&dmin);
        let terms = quot.into_iter().map(|(e, c)| (e.plus(&shift), c)).collect();
        Ok(LaurentPoly { vars: self.vars.clone(), terms })
    }

    /// Replaces variables by polynomials. A variable occurring with a negative
    /// exponent must be mapped to a monomial.
    pub fn substitute(&self, assignment: &BTreeMap<usize, LaurentPoly>) -> Result<LaurentPoly> {
        for value in assignment.values() {
            self.check_vars(value)?;
        }
        let mut powers: HashMap<(usize, i32), LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero(&self.vars);
        let mut acc: HashMap<ExponentVector, Rational> = HashMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let mut factor: Option<LaurentPoly> = None;
            for (&idx, value) in assignment {
                let k = e[idx];
                if k == 0 {
                    continue;
                }
                rest.0[idx] = 0;
                let p = match powers.get(&(idx, k)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = value
                            .powi(k)
                            .map_err(|_| Error::NonInvertibleSubstitution(self.vars.name(idx).to_string()))?;
                        powers.insert((idx, k), p.clone());
                        p
                    }
                };
                factor = Some(match factor {
                    None => p,
                    Some(f) => &f * &p,
                });
            }
            match factor {
                None => {
                    acc.entry(rest).and_modify(|x| *x += c).or_insert_with(|| c.clone());
                }
                Some(f) => {
                    out = &out + &f.mul_monomial(&rest, c);
                }
            }
        }
        let direct = LaurentPoly { vars: self.vars.clone(), terms: collect_hashed(acc) };
        Ok(&out + &direct)
    }

    /// Splits by the exponent of one variable; that exponent is zeroed in each part.
    pub fn split_by_var(&self, idx: usize) -> BTreeMap<i32, LaurentPoly> {
        let mut parts: BTreeMap<i32, BTreeMap<ExponentVector, Rational>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[idx];
            parts.entry(k).or_default().insert(e.clone().with(idx, 0), c.clone());
        }
        parts
            .into_iter()
            .map(|(k, terms)| (k, LaurentPoly { vars: self.vars.clone(), terms }))
            .collect()
    }

    /// Flat text form, e.g. `1 - 2·s0^2·a1^-1`, terms in descending order.
    pub fn to_flat_string(&self) -> String {
        self.render("·")
    }

    fn render(&self, sep: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k != 0)
                .map(|(j, &k)| if k == 1 { self.vars.name(j).to_string() } else { format!("{}^{}", self.vars.name(j), k) })
                .collect();
            if mono.is_empty() {
                out.push_str(&format_rational(&mag));
            } else {
                if !mag.is_one() {
                    out.push_str(&format_rational(&mag));
                    out.push_str(sep);
                }
                out.push_str(&mono.join(sep));
            }
        }
        out
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.names().to_vec(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { exp: e.0.clone(), coef: format_rational(c) })
                .collect(),
        }
    }

    pub fn from_json(json: &PolyJson) -> Result<LaurentPoly> {
        let vars = VarTable::from_names(&json.vars)?;
        let mut terms = Vec::with_capacity(json.terms.len());
        for t in &json.terms {
            if t.exp.len() != vars.len() {
                return Err(Error::Parse(format!("exponent vector {:?} has wrong length", t.exp)));
            }
            terms.push((ExponentVector(t.exp.clone()), parse_rational(&t.coef)?));
        }
        Ok(LaurentPoly::from_terms(&vars, terms))
    }
}

/// JSON form: `{"vars":[..],"terms":[{"exp":[..],"coef":"p/q"},..]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coef: String,
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("*"))
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_add(rhs).expect("LaurentPoly addition across variable tables")
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_sub(rhs).expect("LaurentPoly subtraction across variable tables")
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("LaurentPoly multiplication across variable tables")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        LaurentPoly { vars: self.vars.clone(), terms }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}
