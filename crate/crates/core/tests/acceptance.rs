//! Acceptance suite. Prints one `[PASS]` or `[FAIL]` line per criterion and
//! exits non-zero if any criterion fails. Every comparison is exact; the only
//! tolerances are the wall-clock budgets below.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gspin_bessel::bessel::{bessel_inner, bessel_value, c_w, is_holomorphic_in_parameters, nonsplit_via_symmetrization};
use gspin_bessel::characters::{delta_gsp, delta_gsp_product, dominant_weights, schur, schur_oracle, DominantWeight, GLWeight};
use gspin_bessel::conventions::{conventions_report, ReportScope};
use gspin_bessel::rankinselberg::{verify_a8, verify_bfg1, verify_claim, verify_corollary, Comparison, VerificationReport};
use gspin_bessel::rootdata::special_elements;
use gspin_bessel::{LaurentPoly, RationalFunction, Result, SatakeSpec, Torus, VarTable, WeylElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TORI: [Torus; 2] = [Torus::Split, Torus::NonSplit];

const BUDGET_1: Duration = Duration::from_secs(30);
const BUDGET_2: Duration = Duration::from_secs(30);
const BUDGET_3: Duration = Duration::from_secs(120);
const BUDGET_4: Duration = Duration::from_secs(120);
const BUDGET_5: Duration = Duration::from_secs(300);
const BUDGET_6: Duration = Duration::from_secs(600);
const BUDGET_7: Duration = Duration::from_secs(600);
const BUDGET_8: Duration = Duration::from_secs(10);
const BUDGET_9: Duration = Duration::from_secs(120);
const BUDGET_10: Duration = Duration::from_secs(300);
const BUDGET_11: Duration = Duration::from_secs(60);

const WEYL_SEED: u64 = 20240611;

/// Outcome of one criterion: `Ok(detail)` on success, `Err(detail)` otherwise.
type Outcome = std::result::Result<String, String>;

fn weights_upto(n: usize, max_total: i32) -> Vec<DominantWeight> {
    (0..=max_total).flat_map(|k| dominant_weights(n, k)).collect()
}

fn fail_on<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("error: {e}"))
}

fn reports_pass(reports: &[VerificationReport]) -> Outcome {
    let checked: usize = reports.iter().map(|r| r.coefficients.len()).sum();
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(format!("{} reports, {checked} coefficients", reports.len())),
        Some(r) => Err(format!(
            "{} n={} {} l={:?} fails at degree {:?}",
            r.identity,
            r.n,
            r.torus,
            r.l,
            r.first_failure()
        )),
    }
}

fn criterion_1() -> Outcome {
    for n in 1..=4 {
        for torus in TORI {
            let spec = fail_on(SatakeSpec::new(n, torus))?;
            let b = fail_on(bessel_value(&DominantWeight::zero(n), &spec))?;
            if b != RationalFunction::one(spec.vars()) {
                return Err(format!("{torus} n={n}: B_0 = {b}"));
            }
        }
    }
    Ok("n=1..4, both tori".into())
}

fn criterion_2() -> Outcome {
    for n in 1..=4 {
        let vars = VarTable::standard(n);
        let alt = delta_gsp(&vars);
        if alt != delta_gsp_product(&vars) {
            return Err(format!("n={n}: alternator and product differ"));
        }
        if n == 4 && alt.len() != 384 {
            return Err(format!("n=4 alternator has {} terms", alt.len()));
        }
    }
    Ok("n=1..4".into())
}

fn random_dominant(rng: &mut ChaCha8Rng, n: usize) -> DominantWeight {
    let mut parts: Vec<i32> = (0..n).map(|_| rng.gen_range(0..=4)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    DominantWeight::new(parts).expect("sorted parts are dominant")
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(WEYL_SEED);
    let mut count = 0;
    for n in 1..=3 {
        for _ in 0..10 {
            let delta = random_dominant(&mut rng, n);
            for torus in TORI {
                let spec = fail_on(SatakeSpec::new(n, torus))?;
                let inner = fail_on(bessel_inner(&delta, &spec))?;
                for s in WeylElement::simple_reflections(n) {
                    if s.act(&inner) != inner {
                        return Err(format!("{torus} n={n} delta={delta} moved by {s:?}"));
                    }
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} weights, every simple reflection"))
}

/// Denominator depends on no variable except `v`, and `Q B` is a Laurent polynomial.
fn parameter_monomial_denominator(b: &RationalFunction, spec: &SatakeSpec) -> Result<bool> {
    let vars = spec.vars();
    let q_only = (0..vars.len()).filter(|&i| i != vars.v()).all(|i| !b.den().uses_var(i));
    Ok(q_only && is_holomorphic_in_parameters(b, spec)?)
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        let spec = SatakeSpec::split(n);
        for delta in weights_upto(n, 5) {
            let b = fail_on(bessel_value(&delta, &spec))?;
            if !fail_on(parameter_monomial_denominator(&b, &spec))? {
                return Err(format!("n={n} delta={delta}: denominator {}", b.den()));
            }
            count += 1;
        }
    }
    Ok(format!("{count} split values"))
}

fn criterion_5() -> Outcome {
    let mut reports = Vec::new();
    for (n, order) in [(1, 5), (2, 5), (3, 3)] {
        for torus in TORI {
            let spec = fail_on(SatakeSpec::new(n, torus))?;
            reports.push(fail_on(verify_bfg1(&spec, order, &Comparison::Exact))?);
            reports.push(fail_on(verify_claim(&spec, order, &Comparison::Exact))?);
        }
    }
    reports_pass(&reports)
}

fn criterion_6() -> Outcome {
    let mut reports = Vec::new();
    for (n, order) in [(1, 5), (2, 5), (3, 3)] {
        for torus in TORI {
            let spec = fail_on(SatakeSpec::new(n, torus))?;
            reports.push(fail_on(verify_a8(&spec, order, &Comparison::Exact))?);
        }
    }
    reports_pass(&reports)
}

fn criterion_7() -> Outcome {
    let mut reports = Vec::new();
    for (n, l) in [(2, 1), (3, 1), (3, 2)] {
        for torus in TORI {
            let spec = fail_on(SatakeSpec::new(n, torus))?;
            reports.push(fail_on(verify_corollary(&spec, l, 4, &Comparison::Exact))?);
        }
    }
    reports_pass(&reports)
}

/// Weakly decreasing integer vectors of length `m` with `sum |t_i| <= bound`.
fn gl_weights(m: usize, bound: i32) -> Vec<Vec<i32>> {
    fn go(m: usize, bound: i32, upper: i32, prefix: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        let used: i32 = prefix.iter().map(|t| t.abs()).sum();
        let rest = bound - used;
        for t in (-rest..=rest.min(upper)).rev() {
            prefix.push(t);
            go(m, bound, t, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(m, bound, bound, &mut Vec::new(), &mut out);
    out
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for m in 1..=3 {
        for parts in gl_weights(m, 4) {
            let kappa = fail_on(GLWeight::new(parts.clone()))?;
            let bialternant = fail_on(schur(&kappa, m))?;
            let tableaux = fail_on(schur_oracle(&kappa, m))?;
            if bialternant != RationalFunction::from_poly(tableaux) {
                return Err(format!("m={m} kappa={parts:?}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} weights"))
}

/// `prod_{i<j} (1 - s0^-2 a_i a_j v^2)(1 - a_i a_j^-1 v^2) / ((1 - s0^-2 a_i a_j)(1 - a_i a_j^-1))
///  * prod_{i<n} (1 - s0^-2 a_i^2 v^2) / (1 - s0^-2 a_i^2)`.
fn displayed_c_w1(vars: &std::sync::Arc<VarTable>) -> Result<RationalFunction> {
    let n = vars.rank();
    let one = LaurentPoly::one(vars);
    let (s0, v) = (vars.s0(), vars.v());
    let mut num = one.clone();
    let mut den = one.clone();
    let mut factor = |powers: &[(usize, i32)]| {
        let m = LaurentPoly::term(vars, 1, powers);
        let mv = &m * &LaurentPoly::term(vars, 1, &[(v, 2)]);
        num = &num * &(&one - &mv);
        den = &den * &(&one - &m);
    };
    for i in 1..=n {
        for j in (i + 1)..=n {
            factor(&[(s0, -2), (vars.a(i), 1), (vars.a(j), 1)]);
            factor(&[(vars.a(i), 1), (vars.a(j), -1)]);
        }
    }
    for i in 1..n {
        factor(&[(s0, -2), (vars.a(i), 2)]);
    }
    RationalFunction::new(num, den)
}

fn criterion_9() -> Outcome {
    let mut count = 0;
    for n in 1..=2 {
        let spec = SatakeSpec::nonsplit(n);
        for delta in weights_upto(n, 4) {
            let via = fail_on(nonsplit_via_symmetrization(&delta, n))?;
            if via != fail_on(bessel_value(&delta, &spec))? {
                return Err(format!("symmetrization differs at n={n} delta={delta}"));
            }
            count += 1;
        }
    }
    for n in 2..=3 {
        for torus in TORI {
            let spec = fail_on(SatakeSpec::new(n, torus))?;
            if fail_on(c_w(&WeylElement::identity(n), &spec))? != RationalFunction::one(spec.vars()) {
                return Err(format!("c_identity != 1 for {torus} n={n}"));
            }
            let (_, w1) = special_elements(n);
            if fail_on(c_w(&w1, &spec))? != fail_on(displayed_c_w1(spec.vars()))? {
                return Err(format!("c_w1 differs from the product for {torus} n={n}"));
            }
        }
    }
    Ok(format!("{count} symmetrizations, c_w at n=2,3"))
}

fn criterion_10() -> Outcome {
    let scope = ReportScope::default();
    let first = fail_on(conventions_report(&scope))?;
    let second = fail_on(conventions_report(&scope))?;
    let a = serde_json::to_string(&first).map_err(|e| e.to_string())?;
    let b = serde_json::to_string(&second).map_err(|e| e.to_string())?;
    if a != b {
        return Err("report differs between runs".into());
    }
    let summary: Vec<String> = first.questions.iter().map(|q| format!("{}={}", q.question, q.resolution)).collect();
    if !first.resolved() {
        return Err(format!("unresolved: {}", summary.join("; ")));
    }
    Ok(summary.join("; "))
}

fn criterion_11() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for torus in TORI {
            let spec = fail_on(SatakeSpec::new(n, torus))?;
            let vars = spec.vars();
            let assignment = BTreeMap::from([(vars.s0(), LaurentPoly::one(vars))]);
            for delta in weights_upto(n, 3) {
                let b = fail_on(bessel_value(&delta, &spec))?;
                let special = fail_on(b.substitute(&assignment))?;
                if special.uses_var(vars.s0()) {
                    return Err(format!("{torus} n={n} delta={delta} still has s0"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} values"))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Duration, fn() -> Outcome); 11] = [
        (1, "identity normalization", BUDGET_1, criterion_1),
        (2, "Weyl denominator", BUDGET_2, criterion_2),
        (3, "W-invariance", BUDGET_3, criterion_3),
        (4, "holomorphy", BUDGET_4, criterion_4),
        (5, "bfg1 and subset claim", BUDGET_5, criterion_5),
        (6, "local zeta identity", BUDGET_6, criterion_6),
        (7, "restricted identity", BUDGET_7, criterion_7),
        (8, "Schur oracle", BUDGET_8, criterion_8),
        (9, "symmetrization and c_w", BUDGET_9, criterion_9),
        (10, "convention report", BUDGET_10, criterion_10),
        (11, "s0 specialization", BUDGET_11, criterion_11),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {budget:?}")),
            Err(d) => (false, d),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "[{}] criterion {id}: {name} ({:.2}s) {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
