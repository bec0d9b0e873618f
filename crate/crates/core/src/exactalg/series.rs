use std::sync::Arc;

use super::laurent::LaurentPoly;
use super::vars::VarTable;
use crate::error::{Error, Result};

/// Power series in `X` truncated after degree `order`.
///
/// `coeffs[k]` is the coefficient of `X^k` and never mentions `X` itself.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    vars: Arc<VarTable>,
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(vars: &Arc<VarTable>, order: usize) -> Self {
        TruncatedSeries { vars: vars.clone(), order, coeffs: vec![LaurentPoly::zero(vars); order + 1] }
    }

    pub fn one(vars: &Arc<VarTable>, order: usize) -> Self {
        let mut s = Self::zero(vars, order);
        s.coeffs[0] = LaurentPoly::one(vars);
        s
    }

    /// Coefficients must not contain `X`; missing degrees are zero, extra ones dropped.
    pub fn from_coeffs(vars: &Arc<VarTable>, order: usize, coeffs: Vec<LaurentPoly>) -> Result<Self> {
        let mut s = Self::zero(vars, order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[0].check_vars(&c)?;
            if c.uses_var(vars.x()) {
                return Err(Error::InvalidArgument("series coefficient contains X".into()));
            }
            s.coeffs[k] = c;
        }
        Ok(s)
    }

    /// Splits a polynomial by `X`-degree. Negative `X` powers are rejected.
    pub fn from_poly(p: &LaurentPoly, order: usize) -> Result<Self> {
        let vars = p.vars().clone();
        let mut s = Self::zero(&vars, order);
        for (k, part) in p.split_by_var(vars.x()) {
            if k < 0 {
                return Err(Error::InvalidArgument(format!("negative X-degree {k}")));
            }
            if (k as usize) <= order {
                s.coeffs[k as usize] = part;
            }
        }
        Ok(s)
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &LaurentPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        let order = order.min(self.order);
        TruncatedSeries { vars: self.vars.clone(), order, coeffs: self.coeffs[..=order].to_vec() }
    }

    /// Reassembles `sum coeffs[k] X^k`.
    pub fn to_poly(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.vars);
        let x = self.vars.x();
        for (k, c) in self.coeffs.iter().enumerate() {
            out = &out + &c.shift(&exp_of(&self.vars, x, k as i32));
        }
        out
    }

    fn check(&self, other: &TruncatedSeries) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarTableMismatch(self.vars.names().join(","), other.vars.names().join(",")));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect();
        Ok(TruncatedSeries { vars: self.vars.clone(), order, coeffs })
    }

    pub fn checked_sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect();
        Ok(TruncatedSeries { vars: self.vars.clone(), order, coeffs })
    }

    /// Product truncated at the smaller of the two orders.
    pub fn checked_mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check(other)?;
        let order = self.order.min(other.order);
        let mut coeffs = vec![LaurentPoly::zero(&self.vars); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &other.coeffs[j]);
            }
        }
        Ok(TruncatedSeries { vars: self.vars.clone(), order, coeffs })
    }

    /// Multiplies by a polynomial that may contain non-negative powers of `X`.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<TruncatedSeries> {
        self.checked_mul(&TruncatedSeries::from_poly(p, self.order)?)
    }

    /// Inverse; the constant term must be a single (invertible) term.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0_inv = self.coeffs[0]
            .inv_monomial()
            .map_err(|_| Error::NotInvertible("constant term is not a unit monomial".into()))?;
        let mut out = vec![LaurentPoly::zero(&self.vars); self.order + 1];
        out[0] = c0_inv.clone();
        for k in 1..=self.order {
            let mut acc = LaurentPoly::zero(&self.vars);
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &out[k - j]);
                }
            }
            out[k] = -(&acc * &c0_inv);
        }
        Ok(TruncatedSeries { vars: self.vars.clone(), order: self.order, coeffs: out })
    }

    /// `1/(1 - m) = sum_j m^j` truncated at `order`, for a monomial `m` of
    /// positive `X`-degree.
    pub fn inv_one_minus(m: &LaurentPoly, order: usize) -> Result<TruncatedSeries> {
        let vars = m.vars().clone();
        let (exp, _) = m
            .as_monomial()
            .ok_or_else(|| Error::InvalidArgument(format!("{m} is not a monomial")))?;
        let k = exp[vars.x()];
        if k < 1 {
            return Err(Error::NotInvertible(format!(
                "{m} has X-degree {k}; the geometric series needs X-degree >= 1"
            )));
        }
        let mut s = TruncatedSeries::zero(&vars, order);
        let mut power = LaurentPoly::one(&vars);
        let mut deg = 0usize;
        while deg <= order {
            s.coeffs[deg] = power.split_by_var(vars.x()).into_values().next().unwrap();
            power = &power * m;
            deg += k as usize;
        }
        Ok(s)
    }
}

fn exp_of(vars: &VarTable, idx: usize, e: i32) -> Vec<i32> {
    let mut v = vec![0; vars.len()];
    v[idx] = e;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series_examples() {
        let vars = VarTable::standard(2);
        let (g1, g2, v, x) = (vars.g(1), vars.g(2), vars.v(), vars.x());
        let m = LaurentPoly::term(&vars, 1, &[(g1, 1), (v, 1), (x, 1)]);
        let s = TruncatedSeries::inv_one_minus(&m, 2).unwrap();
        let expected = &(&LaurentPoly::one(&vars) + &m) + &(&m * &m);
        assert_eq!(s.to_poly(), expected);

        let m2 = LaurentPoly::term(&vars, 1, &[(0, 2), (g1, 1), (g2, 1), (x, 2)]);
        let s2 = TruncatedSeries::inv_one_minus(&m2, 3).unwrap();
        assert_eq!(s2.to_poly(), &LaurentPoly::one(&vars) + &m2);
    }

    #[test]
    fn geometric_series_rejects_degree_zero() {
        let vars = VarTable::standard(1);
        let m = LaurentPoly::var(&vars, vars.g(1));
        assert!(matches!(TruncatedSeries::inv_one_minus(&m, 3), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn inverse_of_product_series() {
        let vars = VarTable::standard(1);
        let x = vars.x();
        let p = &(&LaurentPoly::one(&vars) - &LaurentPoly::term(&vars, 1, &[(1, 1), (x, 1)]))
            + &LaurentPoly::term(&vars, 3, &[(0, 2), (x, 2)]);
        let s = TruncatedSeries::from_poly(&p, 5).unwrap();
        let prod = s.checked_mul(&s.inverse().unwrap()).unwrap();
        assert_eq!(prod, TruncatedSeries::one(&vars, 5));
    }
}
