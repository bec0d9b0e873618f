//! Randomized identity testing by evaluation at random points.
//!
//! Values are drawn modulo a prime; when the prime divides a coefficient
//! denominator the trial is redone over the rationals at the same point.
//! An `Unequal` verdict is always sound. `ProbablyEqual` is advisory.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactalg::{format_rational, LaurentPoly, Rational, RationalFunction, TruncatedSeries, VarTable};

pub const DEFAULT_PRIME: u64 = 2_147_483_647;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalConfig {
    pub trials: usize,
    pub seed: u64,
    pub prime: u64,
    /// Resamples allowed per trial when a denominator vanishes.
    pub retries: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig { trials: 5, seed: 0, prime: DEFAULT_PRIME, retries: 8 }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("at least one trial is required".into()));
        }
        if self.prime <= 1 << 30 || self.prime >= 1 << 63 || !is_prime(self.prime) {
            return Err(Error::InvalidArgument(format!("{} is not a prime in (2^30, 2^63)", self.prime)));
        }
        Ok(())
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    let mut d = p - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'outer: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if a % p == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, p);
        if x == 1 || x == p - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, p);
            if x == p - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let mut r = x % &m;
    if r.is_negative() {
        r += &m;
    }
    r.to_u64().unwrap()
}

/// Why a single evaluation failed.
enum Miss {
    /// The prime divides a coefficient denominator.
    BadPrime,
    /// A denominator evaluated to zero.
    Vanished,
}

/// Point of evaluation: one nonzero residue per variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalPoint {
    vars: Arc<VarTable>,
    values: Vec<u64>,
}

impl EvalPoint {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    fn random(vars: &Arc<VarTable>, prime: u64, rng: &mut ChaCha8Rng) -> Self {
        EvalPoint { vars: vars.clone(), values: (0..vars.len()).map(|_| rng.gen_range(1..prime)).collect() }
    }

    fn named(&self) -> Vec<(String, u64)> {
        self.vars.names().iter().cloned().zip(self.values.iter().copied()).collect()
    }
}

/// Evaluation of a value (or a vector of values, for series) at a point.
pub trait Evaluate {
    fn vars(&self) -> &Arc<VarTable>;
    fn components(&self) -> Vec<&dyn Component>;
}

/// One scalar quantity that can be evaluated.
pub trait Component: Sync {
    fn eval_mod(&self, pt: &EvalPoint, p: u64, cache: &mut PowCache) -> std::result::Result<u64, ModMiss>;
    fn eval_q(&self, pt: &EvalPoint) -> Option<Rational>;
}

/// Opaque failure of a modular evaluation.
pub struct ModMiss(Miss);

/// Memo of `value^exp mod p` per variable.
#[derive(Default)]
pub struct PowCache {
    map: HashMap<(usize, i32), u64>,
}

impl PowCache {
    fn get(&mut self, pt: &EvalPoint, idx: usize, e: i32, p: u64) -> u64 {
        *self.map.entry((idx, e)).or_insert_with(|| {
            let x = pt.values[idx] % p;
            let base = if e < 0 { inv_mod(x, p) } else { x };
            pow_mod(base, e.unsigned_abs() as u64, p)
        })
    }
}

fn poly_mod(poly: &LaurentPoly, pt: &EvalPoint, p: u64, cache: &mut PowCache) -> std::result::Result<u64, ModMiss> {
    let mut acc = 0u64;
    for (e, c) in poly.terms() {
        let den = bigint_mod(c.denom(), p);
        if den == 0 {
            return Err(ModMiss(Miss::BadPrime));
        }
        let mut t = mul_mod(bigint_mod(c.numer(), p), inv_mod(den, p), p);
        for (idx, &k) in e.iter().enumerate() {
            if k != 0 {
                t = mul_mod(t, cache.get(pt, idx, k, p), p);
            }
        }
        acc = (acc + t) % p;
    }
    Ok(acc)
}

fn poly_q(poly: &LaurentPoly, pt: &EvalPoint) -> Rational {
    let mut acc = Rational::zero();
    for (e, c) in poly.terms() {
        let mut t = c.clone();
        for (idx, &k) in e.iter().enumerate() {
            if k != 0 {
                let x = Rational::from_integer(BigInt::from(pt.values[idx]));
                let x = if k < 0 { x.recip() } else { x };
                t *= num_traits::pow(x, k.unsigned_abs() as usize);
            }
        }
        acc += t;
    }
    acc
}

impl Component for LaurentPoly {
    fn eval_mod(&self, pt: &EvalPoint, p: u64, cache: &mut PowCache) -> std::result::Result<u64, ModMiss> {
        poly_mod(self, pt, p, cache)
    }

    fn eval_q(&self, pt: &EvalPoint) -> Option<Rational> {
        Some(poly_q(self, pt))
    }
}

impl Component for RationalFunction {
    fn eval_mod(&self, pt: &EvalPoint, p: u64, cache: &mut PowCache) -> std::result::Result<u64, ModMiss> {
        let d = poly_mod(self.den(), pt, p, cache)?;
        if d == 0 {
            return Err(ModMiss(Miss::Vanished));
        }
        Ok(mul_mod(poly_mod(self.num(), pt, p, cache)?, inv_mod(d, p), p))
    }

    fn eval_q(&self, pt: &EvalPoint) -> Option<Rational> {
        let d = poly_q(self.den(), pt);
        if d.is_zero() {
            return None;
        }
        Some(poly_q(self.num(), pt) / d)
    }
}

impl Evaluate for LaurentPoly {
    fn vars(&self) -> &Arc<VarTable> {
        LaurentPoly::vars(self)
    }
    fn components(&self) -> Vec<&dyn Component> {
        vec![self]
    }
}

impl Evaluate for RationalFunction {
    fn vars(&self) -> &Arc<VarTable> {
        RationalFunction::vars(self)
    }
    fn components(&self) -> Vec<&dyn Component> {
        vec![self]
    }
}

impl Evaluate for TruncatedSeries {
    fn vars(&self) -> &Arc<VarTable> {
        TruncatedSeries::vars(self)
    }
    fn components(&self) -> Vec<&dyn Component> {
        self.coeffs().iter().map(|c| c as &dyn Component).collect()
    }
}

/// A point at which the two sides differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub trial: usize,
    /// Index of the differing component (the `X`-degree for series).
    pub component: usize,
    pub point: Vec<(String, u64)>,
    /// Field of evaluation: the prime, or 0 for the rationals.
    pub modulus: u64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    ProbablyEqual { trials: usize },
    Unequal(Witness),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::ProbablyEqual { .. })
    }
}

enum TrialOutcome {
    Agree,
    Differ(Witness),
    Exhausted,
}

fn run_trial(lhs: &[&dyn Component], rhs: &[&dyn Component], vars: &Arc<VarTable>, cfg: &EvalConfig, trial: usize) -> TrialOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(trial as u64);
    'attempt: for _ in 0..=cfg.retries {
        let pt = EvalPoint::random(vars, cfg.prime, &mut rng);
        let mut cache = PowCache::default();
        for (k, (l, r)) in lhs.iter().zip(rhs).enumerate() {
            let modular = (|| -> std::result::Result<(u64, u64), ModMiss> {
                Ok((l.eval_mod(&pt, cfg.prime, &mut cache)?, r.eval_mod(&pt, cfg.prime, &mut cache)?))
            })();
            match modular {
                Ok((a, b)) if a == b => continue,
                Ok((a, b)) => {
                    return TrialOutcome::Differ(Witness {
                        trial,
                        component: k,
                        point: pt.named(),
                        modulus: cfg.prime,
                        lhs: a.to_string(),
                        rhs: b.to_string(),
                    })
                }
                Err(ModMiss(Miss::Vanished)) => continue 'attempt,
                Err(ModMiss(Miss::BadPrime)) => match (l.eval_q(&pt), r.eval_q(&pt)) {
                    (Some(a), Some(b)) if a == b => continue,
                    (Some(a), Some(b)) => {
                        return TrialOutcome::Differ(Witness {
                            trial,
                            component: k,
                            point: pt.named(),
                            modulus: 0,
                            lhs: format_rational(&a),
                            rhs: format_rational(&b),
                        })
                    }
                    _ => continue 'attempt,
                },
            }
        }
        return TrialOutcome::Agree;
    }
    TrialOutcome::Exhausted
}

/// Compares two values at `cfg.trials` random points. Trials run in parallel;
/// the witness of the lowest-numbered failing trial is reported.
pub fn prob_equal<T: Evaluate + ?Sized>(lhs: &T, rhs: &T, cfg: &EvalConfig) -> Result<Verdict> {
    cfg.validate()?;
    if lhs.vars() != rhs.vars() {
        return Err(Error::VarTableMismatch(lhs.vars().names().join(","), rhs.vars().names().join(",")));
    }
    let (lc, rc) = (lhs.components(), rhs.components());
    if lc.len() != rc.len() {
        return Err(Error::InvalidArgument(format!("{} components against {}", lc.len(), rc.len())));
    }
    prob_equal_components(&lc, &rc, lhs.vars(), cfg)
}

/// `prob_equal` on parallel lists of components sharing one table.
pub fn prob_equal_components(
    lhs: &[&dyn Component],
    rhs: &[&dyn Component],
    vars: &Arc<VarTable>,
    cfg: &EvalConfig,
) -> Result<Verdict> {
    cfg.validate()?;
    let outcomes: Vec<TrialOutcome> =
        (0..cfg.trials).into_par_iter().map(|t| run_trial(lhs, rhs, vars, cfg, t)).collect();
    let mut exhausted = 0;
    for o in outcomes {
        match o {
            TrialOutcome::Differ(w) => return Ok(Verdict::Unequal(w)),
            TrialOutcome::Exhausted => exhausted += 1,
            TrialOutcome::Agree => {}
        }
    }
    if exhausted > 0 {
        return Err(Error::Inconclusive(format!(
            "{exhausted} of {} trials hit vanishing denominators {} times",
            cfg.trials,
            cfg.retries + 1
        )));
    }
    Ok(Verdict::ProbablyEqual { trials: cfg.trials })
}
