//! Alternators, Weyl denominators and the `GL_m`, `Sp_2n` characters.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, RationalFunction, VarTable};
use crate::rootdata::{enumerate_symmetric, enumerate_weyl};

/// Weakly decreasing integer vector, a highest weight of `GL_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GLWeight(Vec<i32>);

impl GLWeight {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(parts));
        }
        Ok(GLWeight(parts))
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `l_1 >= ... >= l_n >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight(Vec<i32>);

impl DominantWeight {
    pub fn new(parts: Vec<i32>) -> Result<Self> {
        if parts.is_empty() || parts.windows(2).any(|w| w[0] < w[1]) || parts.last().is_some_and(|&x| x < 0) {
            return Err(Error::NotDominant(parts));
        }
        Ok(DominantWeight(parts))
    }

    pub fn zero(n: usize) -> Self {
        DominantWeight(vec![0; n])
    }

    pub fn parts(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn last(&self) -> i32 {
        *self.0.last().unwrap()
    }

    /// Pads with zeros up to length `n`.
    pub fn padded(&self, n: usize) -> Result<Self> {
        if n < self.len() {
            return Err(Error::InvalidArgument(format!("cannot pad a length-{} weight to length {n}", self.len())));
        }
        let mut p = self.0.clone();
        p.resize(n, 0);
        Ok(DominantWeight(p))
    }

    pub fn as_gl(&self) -> GLWeight {
        GLWeight(self.0.clone())
    }
}

impl std::fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for DominantWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<i32>().map_err(|_| Error::Parse(format!("bad weight entry {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        DominantWeight::new(parts)
    }
}

/// Dominant weights of length `n` with `sum = total`, in lexicographic order.
pub fn dominant_weights(n: usize, total: i32) -> Vec<DominantWeight> {
    fn rec(n: usize, remaining: i32, max: i32, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == n {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let slots = (n - cur.len()) as i32;
        let lo = (remaining + slots - 1) / slots;
        for x in lo..=max.min(remaining) {
            cur.push(x);
            rec(n, remaining - x, x, cur, out);
            cur.pop();
        }
    }
    if n == 0 || total < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(n, total, total, &mut Vec::new(), &mut out);
    out.sort();
    out.into_iter().map(DominantWeight).collect()
}

/// Dominant weights with `sum <= order`, grouped by total.
pub fn dominant_weights_upto(n: usize, order: usize) -> Vec<Vec<DominantWeight>> {
    (0..=order as i32).map(|k| dominant_weights(n, k)).collect()
}

/// `sum_w sign(w) w(p)` over the Weyl group of the table's rank.
pub fn alternator_w(p: &LaurentPoly) -> LaurentPoly {
    weyl_sum(p, true)
}

/// `sum_w w(p)`.
pub fn symmetrizer_w(p: &LaurentPoly) -> LaurentPoly {
    weyl_sum(p, false)
}

fn weyl_sum(p: &LaurentPoly, signed: bool) -> LaurentPoly {
    let n = p.vars().rank();
    let elems = enumerate_weyl(n);
    let chunk = elems.len().div_ceil(rayon::current_num_threads().max(1)).max(8);
    let partials: Vec<LaurentPoly> = elems
        .par_chunks(chunk)
        .map(|ws| {
            let maps: Vec<(i32, Box<dyn Fn(&[i32], &mut [i32]) + Sync>)> = ws
                .iter()
                .map(|w| {
                    let w = w.clone();
                    let sign = if signed { w.sign() } else { 1 };
                    let f: Box<dyn Fn(&[i32], &mut [i32]) + Sync> =
                        Box::new(move |src: &[i32], out: &mut [i32]| w.act_on_exponents(src, out));
                    (sign, f)
                })
                .collect();
            p.signed_orbit_sum(maps.iter().map(|(s, f)| (*s, f)))
        })
        .collect();
    partials.into_iter().fold(LaurentPoly::zero(p.vars()), |acc, x| &acc + &x)
}

/// Antisymmetrization over permutations of `g_1..g_m`.
pub fn alternator_gl(p: &LaurentPoly, m: usize) -> Result<LaurentPoly> {
    let vars = p.vars().clone();
    if m > vars.rank() {
        return Err(Error::InvalidArgument(format!("only {} gamma variables available, asked for {m}", vars.rank())));
    }
    let g0 = vars.g(1);
    let maps: Vec<(i32, Box<dyn Fn(&[i32], &mut [i32])>)> = enumerate_symmetric(m)
        .into_iter()
        .map(|(perm, sign)| {
            let f: Box<dyn Fn(&[i32], &mut [i32])> = Box::new(move |src: &[i32], out: &mut [i32]| {
                out.copy_from_slice(src);
                for (i, &k) in perm.iter().enumerate() {
                    out[g0 + k] = src[g0 + i];
                }
            });
            (sign, f)
        })
        .collect();
    Ok(p.signed_orbit_sum(maps.iter().map(|(s, f)| (*s, f))))
}

/// `A(a_1^n a_2^{n-1} ... a_n)`.
pub fn delta_gsp(vars: &Arc<VarTable>) -> LaurentPoly {
    alternator_w(&rho_monomial(vars))
}

/// `a_1^n a_2^{n-1} ... a_n`.
pub fn rho_monomial(vars: &Arc<VarTable>) -> LaurentPoly {
    let n = vars.rank();
    let powers: Vec<(usize, i32)> = (1..=n).map(|i| (vars.a(i), (n + 1 - i) as i32)).collect();
    LaurentPoly::term(vars, 1, &powers)
}

/// The Weyl denominator as an explicit product:
/// `(-1)^n s0^{n(n+1)} prod a_i^{-(n+1-i)} (1 - s0^{-2} a_i^2) prod_{i<j} (1 - s0^{-2} a_i a_j)(1 - a_i a_j^{-1})`.
pub fn delta_gsp_product(vars: &Arc<VarTable>) -> LaurentPoly {
    let n = vars.rank();
    let s0 = vars.s0();
    let one = LaurentPoly::one(vars);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let mut acc = LaurentPoly::term(vars, sign, &[(s0, (n * (n + 1)) as i32)]);
    for i in 1..=n {
        acc = &acc * &LaurentPoly::term(vars, 1, &[(vars.a(i), -((n + 1 - i) as i32))]);
        acc = &acc * &(&one - &LaurentPoly::term(vars, 1, &[(s0, -2), (vars.a(i), 2)]));
        for j in (i + 1)..=n {
            acc = &acc * &(&one - &LaurentPoly::term(vars, 1, &[(s0, -2), (vars.a(i), 1), (vars.a(j), 1)]));
            acc = &acc * &(&one - &LaurentPoly::term(vars, 1, &[(vars.a(i), 1), (vars.a(j), -1)]));
        }
    }
    acc
}

/// `prod (a_i - a_i^{-1}) prod_{i<j} (a_i + a_i^{-1} - a_j - a_j^{-1})`, the `Sp_2n` denominator.
pub fn delta_sp_product(vars: &Arc<VarTable>) -> LaurentPoly {
    let n = vars.rank();
    let sym = |i: usize| &LaurentPoly::var(vars, vars.a(i)) + &LaurentPoly::term(vars, 1, &[(vars.a(i), -1)]);
    let mut acc = LaurentPoly::one(vars);
    for i in 1..=n {
        acc = &acc * &(&LaurentPoly::var(vars, vars.a(i)) - &LaurentPoly::term(vars, 1, &[(vars.a(i), -1)]));
        for j in (i + 1)..=n {
            acc = &acc * &(&sym(i) - &sym(j));
        }
    }
    acc
}

/// `B(g_1^{m-1} ... g_{m-1})`, the Vandermonde determinant in `g_1..g_m`.
pub fn delta_gl(vars: &Arc<VarTable>, m: usize) -> Result<LaurentPoly> {
    let powers: Vec<(usize, i32)> = (1..=m).map(|i| (vars.g(i), (m - i) as i32)).collect();
    alternator_gl(&LaurentPoly::term(vars, 1, &powers), m)
}

/// `Delta^{-1} A(p)` as a Laurent polynomial; `A(p)` is always divisible by `Delta`.
pub fn alternator_quotient_w(p: &LaurentPoly) -> Result<LaurentPoly> {
    let alt = alternator_w(p);
    if alt.is_zero() {
        return Ok(alt);
    }
    alt.exact_div(&delta_gsp_product(p.vars()))
}

/// `Delta_GL^{-1} B(prod g_i^{e_i})` for arbitrary integer exponents: zero when two
/// exponents coincide, otherwise `sign * s_kappa`.
pub fn gl_alternant_quotient(vars: &Arc<VarTable>, exps: &[i32]) -> Result<LaurentPoly> {
    let m = exps.len();
    let mut sorted: Vec<(i32, usize)> = exps.iter().copied().zip(0..).collect();
    sorted.sort_by(|x, y| y.0.cmp(&x.0));
    if sorted.windows(2).any(|w| w[0].0 == w[1].0) {
        return Ok(LaurentPoly::zero(vars));
    }
    let perm: Vec<usize> = sorted.iter().map(|&(_, i)| i).collect();
    let sign = crate::rootdata::WeylElement::new(perm, vec![false; m])?.sign();
    let kappa: Vec<i32> = sorted.iter().enumerate().map(|(i, &(e, _))| e - (m - 1 - i) as i32).collect();
    let s = schur_in(vars, &GLWeight::new(kappa)?, m)?;
    Ok(if sign < 0 { -s } else { s })
}

/// Bialternant `Delta_GL^{-1} B(g_1^{t_1+m-1} ... g_m^{t_m})` in the rank-`m` table.
pub fn schur(kappa: &GLWeight, m: usize) -> Result<RationalFunction> {
    let vars = VarTable::standard(m.max(1));
    Ok(RationalFunction::from_poly(schur_in(&vars, kappa, m)?))
}

/// Bialternant Schur polynomial in `g_1..g_m` of a given table.
pub fn schur_in(vars: &Arc<VarTable>, kappa: &GLWeight, m: usize) -> Result<LaurentPoly> {
    if kappa.len() != m {
        return Err(Error::InvalidArgument(format!("weight of length {} for GL_{m}", kappa.len())));
    }
    if m == 0 {
        return Ok(LaurentPoly::one(vars));
    }
    let powers: Vec<(usize, i32)> =
        (1..=m).map(|i| (vars.g(i), kappa.parts()[i - 1] + (m - i) as i32)).collect();
    let num = alternator_gl(&LaurentPoly::term(vars, 1, &powers), m)?;
    let den = delta_gl(vars, m)?;
    RationalFunction::new(num, den)?
        .to_laurent()
        .ok_or_else(|| Error::Degenerate("Vandermonde does not divide the alternant".into()))
}

/// Schur polynomial as a sum over semistandard Young tableaux.
pub fn schur_oracle(kappa: &GLWeight, m: usize) -> Result<LaurentPoly> {
    let vars = VarTable::standard(m.max(1));
    schur_oracle_in(&vars, kappa, m)
}

pub fn schur_oracle_in(vars: &Arc<VarTable>, kappa: &GLWeight, m: usize) -> Result<LaurentPoly> {
    if kappa.len() != m {
        return Err(Error::InvalidArgument(format!("weight of length {} for GL_{m}", kappa.len())));
    }
    if m == 0 {
        return Ok(LaurentPoly::one(vars));
    }
    let shift = -kappa.parts()[m - 1].min(0);
    let shape: Vec<usize> = kappa.parts().iter().map(|&t| (t + shift) as usize).collect();
    let mut acc = LaurentPoly::zero(vars);
    let mut tableau: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    fill_ssyt(&shape, m, 0, 0, &mut tableau, &mut |t| {
        let mut exp = vec![0i32; vars.len()];
        for row in t {
            for &e in row {
                exp[vars.g(e)] += 1;
            }
        }
        for i in 1..=m {
            exp[vars.g(i)] -= shift;
        }
        acc = &acc + &LaurentPoly::monomial(vars, exp.into(), crate::exactalg::rat(1));
    });
    Ok(acc)
}

fn fill_ssyt<F: FnMut(&[Vec<usize>])>(
    shape: &[usize],
    m: usize,
    row: usize,
    col: usize,
    t: &mut Vec<Vec<usize>>,
    visit: &mut F,
) {
    if row == shape.len() || shape[row] == 0 {
        visit(t);
        return;
    }
    if col == shape[row] {
        fill_ssyt(shape, m, row + 1, 0, t, visit);
        return;
    }
    let left = if col > 0 { t[row][col - 1] } else { 1 };
    let above = if row > 0 { t[row - 1][col] + 1 } else { 1 };
    for e in left.max(above)..=m {
        t[row][col] = e;
        fill_ssyt(shape, m, row, col + 1, t, visit);
    }
}

/// `s0^{-sum l} Delta^{-1} A(prod a_i^{l_i+n+1-i})`: the `Sp_2n` character at the
/// similitude-normalized parameter, with half powers of `alpha_0` written as `s0`.
pub fn sp_char_bar(delta: &DominantWeight, vars: &Arc<VarTable>) -> Result<RationalFunction> {
    let n = vars.rank();
    if delta.len() != n {
        return Err(Error::InvalidArgument(format!("weight of length {} for rank {n}", delta.len())));
    }
    let mut powers: Vec<(usize, i32)> =
        (1..=n).map(|i| (vars.a(i), delta.parts()[i - 1] + (n + 1 - i) as i32)).collect();
    powers.push((vars.s0(), -delta.total()));
    let q = alternator_quotient_w(&LaurentPoly::term(vars, 1, &powers))?;
    Ok(RationalFunction::from_poly(q))
}
