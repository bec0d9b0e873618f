//! Generating series of the unramified Rankin-Selberg computation, local
//! `L`-factors, and truncated verification of the identities relating them.
//!
//! All series are in `X` and truncated at total `X`-degree `order`. A dominant
//! weight `delta` always contributes `X^{sum l}`.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::bessel::{pair_factor, s_delta_with, ExponentConvention};
use crate::characters::{
    alternator_gl, alternator_quotient_w, alternator_w, delta_gl, delta_gsp_product, dominant_weights,
    gl_alternant_quotient, schur_in, sp_char_bar, DominantWeight,
};
use crate::error::{Error, Result};
use crate::evalcheck::{prob_equal, EvalConfig, Verdict};
use crate::exactalg::{LaurentPoly, RationalFunction, TruncatedSeries, VarTable};
use crate::rootdata::SatakeSpec;

/// How the two sides of an identity are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    /// Exact symbolic equality; every `Delta` division is carried out.
    Exact,
    /// Randomized evaluation; `Delta` quotients are left unreduced.
    Fast(EvalConfig),
}

impl Comparison {
    fn exact(&self) -> bool {
        matches!(self, Comparison::Exact)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientCheck {
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    pub pass: bool,
    /// Number of terms of the reduced difference; `null` in fast mode.
    pub lhs_minus_rhs_terms: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub n: usize,
    pub torus: String,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    pub coefficients: Vec<CoefficientCheck>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.coefficients.iter().all(|c| c.pass)
    }

    /// Lowest degree that failed, if any.
    pub fn first_failure(&self) -> Option<usize> {
        self.coefficients.iter().filter(|c| !c.pass).map(|c| c.degree).min()
    }
}

type Coeffs = Vec<RationalFunction>;

/// Shared state for one computation: the spec, the comparison mode and `Delta`.
struct Ctx {
    spec: SatakeSpec,
    exact: bool,
    delta: LaurentPoly,
}

impl Ctx {
    fn new(spec: &SatakeSpec, cmp: &Comparison) -> Self {
        Ctx { spec: spec.clone(), exact: cmp.exact(), delta: delta_gsp_product(spec.vars()) }
    }

    fn vars(&self) -> &Arc<VarTable> {
        self.spec.vars()
    }

    /// `Delta^{-1} A(p)`, reduced in exact mode.
    fn alt_quot(&self, p: &LaurentPoly) -> Result<RationalFunction> {
        if self.exact {
            Ok(RationalFunction::from_poly(alternator_quotient_w(p)?))
        } else {
            RationalFunction::new(alternator_w(p), self.delta.clone())
        }
    }

    /// `prod_{i} a_i^{l_i + n + 1 - i}`; missing parts count as zero.
    fn a_power(&self, ell: &[i32]) -> LaurentPoly {
        let vars = self.vars();
        let n = vars.rank();
        let powers: Vec<(usize, i32)> =
            (1..=n).map(|i| (vars.a(i), ell.get(i - 1).copied().unwrap_or(0) + (n + 1 - i) as i32)).collect();
        LaurentPoly::term(vars, 1, &powers)
    }

    /// `Delta_GL^{-1} B(prod g_i^{l_i + m - i})` in `m = ell.len()` variables.
    fn gl_part(&self, ell: &[i32]) -> Result<LaurentPoly> {
        let m = ell.len();
        let exps: Vec<i32> = ell.iter().enumerate().map(|(k, &l)| l + (m - 1 - k) as i32).collect();
        gl_alternant_quotient(self.vars(), &exps)
    }

    fn pairs(&self, upto: usize) -> LaurentPoly {
        (1..=upto).fold(LaurentPoly::one(self.vars()), |acc, i| &acc * &pair_factor(&self.spec, i))
    }
}

fn sum_rf(vars: &Arc<VarTable>, items: Vec<RationalFunction>) -> Result<RationalFunction> {
    items.into_iter().try_fold(RationalFunction::zero(vars), |acc, x| acc.checked_add(&x))
}

fn from_series(s: &TruncatedSeries) -> Coeffs {
    s.coeffs().iter().cloned().map(RationalFunction::from_poly).collect()
}

/// `coeffs * p` for a polynomial `p` with non-negative `X`-degrees.
fn times_poly(coeffs: &[RationalFunction], p: &LaurentPoly, order: usize) -> Result<Coeffs> {
    let vars = p.vars().clone();
    let parts = p.split_by_var(vars.x());
    if parts.keys().any(|&k| k < 0) {
        return Err(Error::InvalidArgument("negative X-degree".into()));
    }
    (0..=order)
        .into_par_iter()
        .map(|k| {
            let mut terms = Vec::new();
            for (&j, part) in &parts {
                let j = j as usize;
                if j <= k && k - j < coeffs.len() && !coeffs[k - j].is_zero() {
                    terms.push(coeffs[k - j].mul_poly(part)?);
                }
            }
            sum_rf(&vars, terms)
        })
        .collect()
}

/// Sum over dominant weights of length `len` of `X^{sum l} f(delta)`.
fn weight_sum<F>(vars: &Arc<VarTable>, len: usize, order: usize, f: F) -> Result<Coeffs>
where
    F: Fn(&DominantWeight) -> Result<RationalFunction> + Sync,
{
    (0..=order)
        .into_par_iter()
        .map(|k| {
            let terms = dominant_weights(len, k as i32).par_iter().map(&f).collect::<Result<Vec<_>>>()?;
            sum_rf(vars, terms)
        })
        .collect()
}

fn to_series(vars: &Arc<VarTable>, order: usize, coeffs: Coeffs) -> Result<TruncatedSeries> {
    let polys = coeffs
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            c.to_laurent()
                .ok_or_else(|| Error::Degenerate(format!("coefficient of X^{k} is not a Laurent polynomial")))
        })
        .collect::<Result<Vec<_>>>()?;
    TruncatedSeries::from_coeffs(vars, order, polys)
}

fn x_term(vars: &Arc<VarTable>, coef: &LaurentPoly, powers: &[(usize, i32)]) -> LaurentPoly {
    coef * &LaurentPoly::term(vars, 1, powers)
}

/// `D(alpha, gamma; X)` via the joint alternator
/// `Delta_GL^{-1} Delta^{-1} A B(a^rho g^rho' prod (a_i g_i)^{l_i})`.
pub fn d_series(n: usize, order: usize) -> Result<TruncatedSeries> {
    let vars = VarTable::standard(n);
    let den = &delta_gl(&vars, n)? * &delta_gsp_product(&vars);
    let coeffs = weight_sum(&vars, n, order, |delta| {
        let mut powers = Vec::new();
        for i in 1..=n {
            let l = delta.parts()[i - 1];
            powers.push((vars.a(i), l + (n + 1 - i) as i32));
            powers.push((vars.g(i), l + (n - i) as i32));
        }
        let alt = alternator_gl(&alternator_w(&LaurentPoly::term(&vars, 1, &powers)), n)?;
        Ok(RationalFunction::from_poly(alt.exact_div(&den)?))
    })?;
    to_series(&vars, order, coeffs)
}

/// `D` as `sum s0^{sum l} s_delta(g) chi^{Sp}_delta(bar t) X^{sum l}`.
pub fn d_series_character_form(n: usize, order: usize) -> Result<TruncatedSeries> {
    let vars = VarTable::standard(n);
    let coeffs = weight_sum(&vars, n, order, |delta| {
        let s0 = LaurentPoly::term(&vars, 1, &[(vars.s0(), delta.total())]);
        let gl = schur_in(&vars, &delta.as_gl(), n)?;
        sp_char_bar(delta, &vars)?.mul_poly(&(&s0 * &gl))
    })?;
    to_series(&vars, order, coeffs)
}

fn d_coeffs(ctx: &Ctx, order: usize) -> Result<Coeffs> {
    let n = ctx.spec.n;
    weight_sum(ctx.vars(), n, order, |delta| {
        ctx.alt_quot(&ctx.a_power(delta.parts()))?.mul_poly(&ctx.gl_part(delta.parts())?)
    })
}

/// `prod_{i<=m} (1 - z1 g_i v X)(1 - z2 g_i v X)`.
pub fn sigma_lambda_inverse(m: usize, spec: &SatakeSpec) -> Result<LaurentPoly> {
    let vars = spec.vars();
    if m > spec.n {
        return Err(Error::InvalidArgument(format!("only {} gamma variables available", spec.n)));
    }
    let one = LaurentPoly::one(vars);
    let mut acc = one.clone();
    for i in 1..=m {
        let t = [(vars.g(i), 1), (vars.v(), 1), (vars.x(), 1)];
        acc = &acc * &(&one - &x_term(vars, &spec.z1(), &t));
        acc = &acc * &(&one - &x_term(vars, &spec.z2(), &t));
    }
    Ok(acc)
}

/// `L(s+1, sigma x lambda) = prod_{i<=m} (1 - z1 g_i v X)^{-1} (1 - z2 g_i v X)^{-1}`.
pub fn lfactor_sigma_lambda(m: usize, spec: &SatakeSpec, order: usize) -> Result<TruncatedSeries> {
    let vars = spec.vars();
    if m > spec.n {
        return Err(Error::InvalidArgument(format!("only {} gamma variables available", spec.n)));
    }
    let mut acc = TruncatedSeries::one(vars, order);
    for i in 1..=m {
        let t = [(vars.g(i), 1), (vars.v(), 1), (vars.x(), 1)];
        acc = acc.checked_mul(&TruncatedSeries::inv_one_minus(&x_term(vars, &spec.z1(), &t), order)?)?;
        acc = acc.checked_mul(&TruncatedSeries::inv_one_minus(&x_term(vars, &spec.z2(), &t), order)?)?;
    }
    Ok(acc)
}

/// `prod_{i<j<=l} (1 - s0^2 g_i g_j X^2)`.
pub fn ext_square_inverse(vars: &Arc<VarTable>, l: usize) -> LaurentPoly {
    let one = LaurentPoly::one(vars);
    let mut acc = one.clone();
    for i in 1..=l {
        for j in (i + 1)..=l {
            acc = &acc * &(&one - &LaurentPoly::term(vars, 1, &[(vars.s0(), 2), (vars.g(i), 1), (vars.g(j), 1), (vars.x(), 2)]));
        }
    }
    acc
}

/// `prod_{i<j<=l} (1 - s0^2 g_i g_j X^2)^{-1}` in the rank-`l` table.
pub fn lfactor_ext_square(l: usize, order: usize) -> Result<TruncatedSeries> {
    lfactor_ext_square_in(&VarTable::standard(l.max(1)), l, order)
}

pub fn lfactor_ext_square_in(vars: &Arc<VarTable>, l: usize, order: usize) -> Result<TruncatedSeries> {
    if l == 0 || l > vars.rank() {
        return Err(Error::InvalidArgument(format!("exterior square needs 1 <= l <= {}", vars.rank())));
    }
    let mut acc = TruncatedSeries::one(vars, order);
    for i in 1..=l {
        for j in (i + 1)..=l {
            let m = LaurentPoly::term(vars, 1, &[(vars.s0(), 2), (vars.g(i), 1), (vars.g(j), 1), (vars.x(), 2)]);
            acc = acc.checked_mul(&TruncatedSeries::inv_one_minus(&m, order)?)?;
        }
    }
    Ok(acc)
}

/// `mu = (a_1, ..., a_n, s0^2 a_n^{-1}, ..., s0^2 a_1^{-1})`.
fn mu(vars: &Arc<VarTable>) -> Vec<Vec<(usize, i32)>> {
    let n = vars.rank();
    let mut out: Vec<Vec<(usize, i32)>> = (1..=n).map(|i| vec![(vars.a(i), 1)]).collect();
    out.extend((1..=n).rev().map(|i| vec![(vars.s0(), 2), (vars.a(i), -1)]));
    out
}

/// `prod_{i<=m} prod_k (1 - g_i mu_k X)^{-1}`.
pub fn lfactor_pi_sigma_euler(vars: &Arc<VarTable>, m: usize, order: usize) -> Result<TruncatedSeries> {
    if m > vars.rank() {
        return Err(Error::InvalidArgument(format!("only {} gamma variables available", vars.rank())));
    }
    let mut acc = TruncatedSeries::one(vars, order);
    for i in 1..=m {
        for mk in mu(vars) {
            let mut powers = mk.clone();
            powers.push((vars.g(i), 1));
            powers.push((vars.x(), 1));
            acc = acc.checked_mul(&TruncatedSeries::inv_one_minus(&LaurentPoly::term(vars, 1, &powers), order)?)?;
        }
    }
    Ok(acc)
}

/// `L(s+1/2, pi x sigma)` as exterior-square factor times `D`.
pub fn lfactor_pi_sigma(n: usize, order: usize) -> Result<TruncatedSeries> {
    let d = d_series_character_form(n, order)?;
    lfactor_ext_square_in(d.vars(), n, order)?.checked_mul(&d)
}

/// Local zeta series: `sum_{l_n = 0} X^{|delta|} s_delta(g) S_delta + Q sum_{l_n > 0} ...`.
pub fn zeta_local_series(spec: &SatakeSpec, order: usize) -> Result<TruncatedSeries> {
    let coeffs = zeta_coefficients_with(spec, order, ExponentConvention::Descending)?;
    to_series(spec.vars(), order, coeffs)
}

/// Zeta coefficients with `S_delta` taken from a given exponent convention.
pub fn zeta_coefficients_with(spec: &SatakeSpec, order: usize, conv: ExponentConvention) -> Result<Vec<RationalFunction>> {
    zeta_coefficients_from(spec, order, |delta| s_delta_with(delta.parts(), spec, conv))
}

/// Zeta coefficients with `S_delta` supplied by the caller.
pub fn zeta_coefficients_from<F>(spec: &SatakeSpec, order: usize, s: F) -> Result<Vec<RationalFunction>>
where
    F: Fn(&DominantWeight) -> Result<RationalFunction> + Sync,
{
    let vars = spec.vars();
    let q = spec.q_factor();
    weight_sum(vars, spec.n, order, |delta| {
        let gl = schur_in(vars, &delta.as_gl(), spec.n)?;
        let mut term = s(delta)?.mul_poly(&gl)?;
        if delta.last() > 0 {
            term = term.mul_poly(&q)?;
        }
        Ok(term)
    })
}

fn compare(
    identity: &str,
    spec: &SatakeSpec,
    order: usize,
    l: Option<usize>,
    lhs: &[RationalFunction],
    rhs: &[RationalFunction],
    cmp: &Comparison,
) -> Result<VerificationReport> {
    let coefficients = (0..=order)
        .into_par_iter()
        .map(|k| check_one(k, None, &lhs[k], &rhs[k], cmp))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        identity: identity.to_string(),
        n: spec.n,
        torus: spec.torus.to_string(),
        order,
        l,
        coefficients,
    })
}

fn check_one(
    degree: usize,
    subset: Option<Vec<usize>>,
    lhs: &RationalFunction,
    rhs: &RationalFunction,
    cmp: &Comparison,
) -> Result<CoefficientCheck> {
    match cmp {
        Comparison::Exact => {
            let diff = lhs.checked_sub(rhs)?.reduced();
            Ok(CoefficientCheck { degree, subset, pass: diff.is_zero(), lhs_minus_rhs_terms: Some(diff.num().len()) })
        }
        Comparison::Fast(cfg) => {
            let verdict = prob_equal(lhs, rhs, cfg)?;
            Ok(CoefficientCheck { degree, subset, pass: matches!(verdict, Verdict::ProbablyEqual { .. }), lhs_minus_rhs_terms: None })
        }
    }
}

fn bfg1_lhs(ctx: &Ctx, order: usize, sign: i64) -> Result<Coeffs> {
    let vars = ctx.vars();
    let one = LaurentPoly::one(vars);
    let mut factor = one.clone();
    for i in 1..=ctx.spec.n {
        let t = x_term(vars, &ctx.spec.z1(), &[(vars.g(i), 1), (vars.v(), 1), (vars.x(), 1)]);
        factor = &factor * &(&one - &t.scale(&crate::exactalg::rat(sign)));
    }
    times_poly(&d_coeffs(ctx, order)?, &factor, order)
}

/// `prod_i (1 - z1 a_i^{-1} v)`.
fn z1_factors(ctx: &Ctx) -> LaurentPoly {
    let vars = ctx.vars();
    let one = LaurentPoly::one(vars);
    (1..=ctx.spec.n).fold(one.clone(), |acc, i| {
        &acc * &(&one - &x_term(vars, &ctx.spec.z1(), &[(vars.a(i), -1), (vars.v(), 1)]))
    })
}

fn bfg1_rhs(ctx: &Ctx, order: usize) -> Result<Coeffs> {
    let z = z1_factors(ctx);
    weight_sum(ctx.vars(), ctx.spec.n, order, |delta| {
        ctx.alt_quot(&(&ctx.a_power(delta.parts()) * &z))?.mul_poly(&ctx.gl_part(delta.parts())?)
    })
}

/// `D prod (1 - z1 g_i v X) = sum_delta X^{|delta|} Delta_GL^{-1} Delta^{-1} A B(... prod (1 - z1 a_i^{-1} v))`.
pub fn verify_bfg1(spec: &SatakeSpec, order: usize, cmp: &Comparison) -> Result<VerificationReport> {
    let ctx = Ctx::new(spec, cmp);
    compare("bfg1", spec, order, None, &bfg1_lhs(&ctx, order, 1)?, &bfg1_rhs(&ctx, order)?, cmp)
}

/// Negative control: the left side built with `(1 + z1 g_i v X)`.
pub fn verify_bfg1_perturbed(spec: &SatakeSpec, order: usize, cmp: &Comparison) -> Result<VerificationReport> {
    let ctx = Ctx::new(spec, cmp);
    compare("bfg1-perturbed", spec, order, None, &bfg1_lhs(&ctx, order, -1)?, &bfg1_rhs(&ctx, order)?, cmp)
}

/// One summand of the subset expansion:
/// `Delta_GL^{-1} Delta^{-1} A B(a^rho g^rho' prod (a_i g_i)^{l_i} prod_{i in S} (-z1 a_i^{-1} v))`.
pub fn claim_summand(spec: &SatakeSpec, ell: &[i32], subset: &[usize]) -> Result<LaurentPoly> {
    let ctx = Ctx::new(spec, &Comparison::Exact);
    claim_summand_rf(&ctx, ell, subset)?
        .to_laurent()
        .ok_or_else(|| Error::Degenerate("alternator quotient did not reduce".into()))
}

fn claim_summand_rf(ctx: &Ctx, ell: &[i32], subset: &[usize]) -> Result<RationalFunction> {
    if ell.len() != ctx.spec.n {
        return Err(Error::InvalidArgument(format!("vector of length {} for rank {}", ell.len(), ctx.spec.n)));
    }
    let vars = ctx.vars();
    let mut p = ctx.a_power(ell);
    for &i in subset {
        p = &p * &x_term(vars, &ctx.spec.z1(), &[(vars.a(i), -1), (vars.v(), 1)]).scale(&crate::exactalg::rat(-1));
    }
    ctx.alt_quot(&p)?.mul_poly(&ctx.gl_part(ell)?)
}

/// For every subset `S`, the sum over `l - chi_S` dominant equals the sum over `l` dominant.
pub fn verify_claim(spec: &SatakeSpec, order: usize, cmp: &Comparison) -> Result<VerificationReport> {
    let ctx = Ctx::new(spec, cmp);
    let n = spec.n;
    let vars = ctx.vars();
    let mut coefficients = Vec::new();
    for mask in 0u32..(1 << n) {
        let subset: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        let chi: Vec<i32> = (1..=n).map(|i| (mask >> (i - 1) & 1) as i32).collect();
        let size = subset.len();
        let checks = (0..=order)
            .into_par_iter()
            .map(|k| {
                let shifted = if k >= size {
                    dominant_weights(n, (k - size) as i32)
                        .iter()
                        .map(|m| {
                            let ell: Vec<i32> = m.parts().iter().zip(&chi).map(|(a, b)| a + b).collect();
                            claim_summand_rf(&ctx, &ell, &subset)
                        })
                        .collect::<Result<Vec<_>>>()?
                } else {
                    Vec::new()
                };
                let dominant = dominant_weights(n, k as i32)
                    .iter()
                    .map(|d| claim_summand_rf(&ctx, d.parts(), &subset))
                    .collect::<Result<Vec<_>>>()?;
                check_one(k, Some(subset.clone()), &sum_rf(vars, shifted)?, &sum_rf(vars, dominant)?, cmp)
            })
            .collect::<Result<Vec<_>>>()?;
        coefficients.extend(checks);
    }
    Ok(VerificationReport {
        identity: "claim".into(),
        n,
        torus: spec.torus.to_string(),
        order,
        l: None,
        coefficients,
    })
}

fn a8_lhs(ctx: &Ctx, order: usize) -> Result<Coeffs> {
    times_poly(&d_coeffs(ctx, order)?, &sigma_lambda_inverse(ctx.spec.n, &ctx.spec)?, order)
}

/// `D prod (1 - z1 g_i v X)(1 - z2 g_i v X)` against the two alternator sums split by `l_n`.
pub fn verify_a8(spec: &SatakeSpec, order: usize, cmp: &Comparison) -> Result<VerificationReport> {
    let ctx = Ctx::new(spec, cmp);
    let n = spec.n;
    let head = ctx.pairs(n - 1);
    let full = ctx.pairs(n);
    let rhs = weight_sum(ctx.vars(), n, order, |delta| {
        let f = if delta.last() == 0 { &head } else { &full };
        ctx.alt_quot(&(&ctx.a_power(delta.parts()) * f))?.mul_poly(&ctx.gl_part(delta.parts())?)
    })?;
    compare("a8", spec, order, None, &a8_lhs(&ctx, order)?, &rhs, cmp)
}

/// The same identity with the right side given by the local zeta series
/// built from `S_delta` in the given exponent convention.
pub fn verify_a8_with(spec: &SatakeSpec, order: usize, cmp: &Comparison, conv: ExponentConvention) -> Result<VerificationReport> {
    verify_a8_from(spec, order, cmp, "a8-zeta", |delta| s_delta_with(delta.parts(), spec, conv))
}

/// `verify_a8` against a zeta series whose `S_delta` is supplied by the caller.
pub fn verify_a8_from<F>(spec: &SatakeSpec, order: usize, cmp: &Comparison, identity: &str, s: F) -> Result<VerificationReport>
where
    F: Fn(&DominantWeight) -> Result<RationalFunction> + Sync,
{
    let ctx = Ctx::new(spec, cmp);
    let rhs = zeta_coefficients_from(spec, order, s)?;
    compare(identity, spec, order, None, &a8_lhs(&ctx, order)?, &rhs, cmp)
}

/// For `1 <= l < n`: `sum_{len-l delta} s_delta(g_1..g_l) S_{(delta, 0..0)} X^{|delta|}` equals
/// the Euler product over `g_1..g_l` divided by the `sigma x lambda` and exterior-square factors.
pub fn verify_corollary(spec: &SatakeSpec, l: usize, order: usize, cmp: &Comparison) -> Result<VerificationReport> {
    let n = spec.n;
    if l == 0 || l >= n {
        return Err(Error::InvalidArgument(format!("the restriction needs 1 <= l < n, got l = {l}, n = {n}")));
    }
    let ctx = Ctx::new(spec, cmp);
    let vars = ctx.vars();
    let full = ctx.pairs(n);
    let q = RationalFunction::from_poly(spec.q_factor());
    let sums = weight_sum(vars, l, order, |delta| {
        let padded = delta.padded(n)?;
        let gl = schur_in(vars, &delta.as_gl(), l)?;
        ctx.alt_quot(&(&ctx.a_power(padded.parts()) * &full))?.mul_poly(&gl)
    })?;
    let lhs = sums.iter().map(|c| c.checked_div(&q)).collect::<Result<Vec<_>>>()?;
    let euler = lfactor_pi_sigma_euler(vars, l, order)?;
    let rhs_series = euler.mul_poly(&(&sigma_lambda_inverse(l, spec)? * &ext_square_inverse(vars, l)))?;
    compare("corollary", spec, order, Some(l), &lhs, &from_series(&rhs_series), cmp)
}
