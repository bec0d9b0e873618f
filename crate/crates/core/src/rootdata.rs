//! Root datum of `GSpin(2n+1)` and its Weyl group.
//!
//! The Weyl group is the hyperoctahedral group of signed permutations
//! `(p, eps)`. It acts on parameter monomials by
//! `a_i -> a_{p(i)}` when `eps_{p(i)} = +1` and `a_i -> s0^2 a_{p(i)}^{-1}`
//! when `eps_{p(i)} = -1`; `s0, b, v, g_i, X` are fixed. On exponent vectors
//! this is a linear map, so the action composes as `(w1 w2) f = w1 (w2 f)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::{LaurentPoly, VarTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Torus {
    Split,
    NonSplit,
}

impl fmt::Display for Torus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Torus::Split => "split",
            Torus::NonSplit => "nonsplit",
        })
    }
}

impl std::str::FromStr for Torus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split" => Ok(Torus::Split),
            "nonsplit" | "non-split" => Ok(Torus::NonSplit),
            _ => Err(Error::InvalidArgument(format!("unknown torus type {s:?}"))),
        }
    }
}

/// Rank, torus type and the variable table they live in.
///
/// Split: `(z1, z2) = (b, s0^2 b^{-1})`, `Q(q) = 1 - v^2`.
/// Non-split: `(z1, z2) = (s0, -s0)`, `Q(q) = 1 + v^2`.
#[derive(Debug, Clone)]
pub struct SatakeSpec {
    pub n: usize,
    pub torus: Torus,
    vars: Arc<VarTable>,
}

impl SatakeSpec {
    pub fn new(n: usize, torus: Torus) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("rank must be at least 1".into()));
        }
        Ok(SatakeSpec { n, torus, vars: VarTable::standard(n) })
    }

    pub fn split(n: usize) -> Self {
        Self::new(n, Torus::Split).expect("rank >= 1")
    }

    pub fn nonsplit(n: usize) -> Self {
        Self::new(n, Torus::NonSplit).expect("rank >= 1")
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn z1(&self) -> LaurentPoly {
        let v = &self.vars;
        match self.torus {
            Torus::Split => LaurentPoly::var(v, v.b()),
            Torus::NonSplit => LaurentPoly::var(v, v.s0()),
        }
    }

    pub fn z2(&self) -> LaurentPoly {
        let v = &self.vars;
        match self.torus {
            Torus::Split => LaurentPoly::term(v, 1, &[(v.s0(), 2), (v.b(), -1)]),
            Torus::NonSplit => LaurentPoly::term(v, -1, &[(v.s0(), 1)]),
        }
    }

    pub fn q_factor(&self) -> LaurentPoly {
        let v = &self.vars;
        let v2 = LaurentPoly::term(v, 1, &[(v.v(), 2)]);
        match self.torus {
            Torus::Split => &LaurentPoly::one(v) - &v2,
            Torus::NonSplit => &LaurentPoly::one(v) + &v2,
        }
    }
}

/// Positive roots of type `B_n`, indices 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PositiveRoot {
    /// `e_i - e_j`, `i < j`
    Diff(usize, usize),
    /// `e_i + e_j`, `i < j`
    Sum(usize, usize),
    /// `e_i`
    Short(usize),
}

impl PositiveRoot {
    /// Coordinates in the basis `e_1..e_n`.
    pub fn coords(&self, n: usize) -> Vec<i32> {
        let mut c = vec![0; n];
        match *self {
            PositiveRoot::Diff(i, j) => {
                c[i - 1] = 1;
                c[j - 1] = -1;
            }
            PositiveRoot::Sum(i, j) => {
                c[i - 1] = 1;
                c[j - 1] = 1;
            }
            PositiveRoot::Short(i) => c[i - 1] = 1,
        }
        c
    }

    fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            PositiveRoot::Diff(i, j) | PositiveRoot::Sum(i, j) => 1 <= i && i < j && j <= n,
            PositiveRoot::Short(i) => 1 <= i && i <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("{self} is not a positive root of B_{n}")))
        }
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PositiveRoot::Diff(i, j) => write!(f, "e{i}-e{j}"),
            PositiveRoot::Sum(i, j) => write!(f, "e{i}+e{j}"),
            PositiveRoot::Short(i) => write!(f, "e{i}"),
        }
    }
}

impl std::str::FromStr for PositiveRoot {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown root symbol {s:?}"));
        let idx = |t: &str| -> Result<usize> { t.strip_prefix('e').and_then(|x| x.parse().ok()).ok_or_else(bad) };
        if let Some((l, r)) = s.split_once('-') {
            Ok(PositiveRoot::Diff(idx(l)?, idx(r)?))
        } else if let Some((l, r)) = s.split_once('+') {
            Ok(PositiveRoot::Sum(idx(l)?, idx(r)?))
        } else {
            Ok(PositiveRoot::Short(idx(s)?))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootSystemB {
    pub n: usize,
}

impl RootSystemB {
    pub fn new(n: usize) -> Self {
        RootSystemB { n }
    }

    /// All `n^2` positive roots.
    pub fn positive_roots(&self) -> Vec<PositiveRoot> {
        let n = self.n;
        let mut out = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in (i + 1)..=n {
                out.push(PositiveRoot::Diff(i, j));
                out.push(PositiveRoot::Sum(i, j));
            }
        }
        out.extend((1..=n).map(PositiveRoot::Short));
        out
    }
}

/// Value of the character at the coroot of the uniformizer:
/// `(e_i-e_j)^v -> a_i a_j^{-1}`, `(e_i+e_j)^v -> a_i a_j s0^{-2}`,
/// `(e_i)^v -> a_i^2 s0^{-2}`.
pub fn coroot_monomial(root: PositiveRoot, spec: &SatakeSpec) -> Result<LaurentPoly> {
    root.validate(spec.n)?;
    let v = spec.vars();
    Ok(match root {
        PositiveRoot::Diff(i, j) => LaurentPoly::term(v, 1, &[(v.a(i), 1), (v.a(j), -1)]),
        PositiveRoot::Sum(i, j) => LaurentPoly::term(v, 1, &[(v.a(i), 1), (v.a(j), 1), (v.s0(), -2)]),
        PositiveRoot::Short(i) => LaurentPoly::term(v, 1, &[(v.a(i), 2), (v.s0(), -2)]),
    })
}

/// Signed permutation `(p, eps)`; `perm[i]` is `p(i)` (0-based) and
/// `flip[k]` is true when `eps_k = -1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    flip: Vec<bool>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { perm: (0..n).collect(), flip: vec![false; n] }
    }

    /// `perm` in one-line form (0-based images), `flip[k]` = sign at position `k` is `-1`.
    pub fn new(perm: Vec<usize>, flip: Vec<bool>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if flip.len() != n {
            return Err(Error::InvalidArgument("sign vector length differs from permutation length".into()));
        }
        Ok(WeylElement { perm, flip })
    }

    /// Sign change at position `i` (1-based).
    pub fn sign_flip(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.flip[i - 1] = true;
        w
    }

    /// Transposition of positions `i` and `j` (1-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i - 1, j - 1);
        w
    }

    /// Simple reflections: `s_i = (i, i+1)` for `i < n`, then the sign change at `n`.
    pub fn simple_reflections(n: usize) -> Vec<WeylElement> {
        let mut out: Vec<_> = (1..n).map(|i| Self::transposition(n, i, i + 1)).collect();
        out.push(Self::sign_flip(n, n));
        out
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn flips(&self) -> &[bool] {
        &self.flip
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && self.flip.iter().all(|f| !f)
    }

    /// `self ∘ other` as linear maps.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        let perm: Vec<usize> = (0..n).map(|i| self.perm[other.perm[i]]).collect();
        let mut flip = vec![false; n];
        for i in 0..n {
            let mid = other.perm[i];
            flip[self.perm[mid]] = other.flip[mid] ^ self.flip[self.perm[mid]];
        }
        WeylElement { perm, flip }
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.rank();
        let mut perm = vec![0; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
        }
        // w(e_i) = s e_{p(i)}  =>  w^{-1}(e_{p(i)}) = s e_i
        let mut flip = vec![false; n];
        for i in 0..n {
            flip[i] = self.flip[self.perm[i]];
        }
        WeylElement { perm, flip }
    }

    /// `sgn(p) * prod eps_i`, which equals `(-1)^length`.
    pub fn sign(&self) -> i32 {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut parity = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.perm[k];
                len += 1;
            }
            parity += len - 1;
        }
        parity += self.flip.iter().filter(|&&f| f).count();
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Image of a root given by coordinates in `e_1..e_n`.
    pub fn act_on_root(&self, coords: &[i32]) -> Vec<i32> {
        let mut out = vec![0; coords.len()];
        for (i, &c) in coords.iter().enumerate() {
            let k = self.perm[i];
            out[k] += if self.flip[k] { -c } else { c };
        }
        out
    }

    /// Positive roots sent to negative roots.
    pub fn inversions(&self) -> Vec<PositiveRoot> {
        let n = self.rank();
        RootSystemB::new(n)
            .positive_roots()
            .into_iter()
            .filter(|r| {
                let img = self.act_on_root(&r.coords(n));
                img.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0)
            })
            .collect()
    }

    /// Action on one exponent vector of the standard table of rank `self.rank()`.
    /// `out` must be zeroed.
    pub fn act_on_exponents(&self, src: &[i32], out: &mut [i32]) {
        let n = self.rank();
        out.copy_from_slice(src);
        for i in 0..n {
            out[1 + i] = 0;
        }
        for i in 0..n {
            let e = src[1 + i];
            if e == 0 {
                continue;
            }
            let k = self.perm[i];
            if self.flip[k] {
                out[1 + k] -= e;
                out[0] += 2 * e;
            } else {
                out[1 + k] += e;
            }
        }
    }

    /// `w · p`. The polynomial's table must have rank equal to `self.rank()`.
    pub fn act(&self, p: &LaurentPoly) -> LaurentPoly {
        assert_eq!(p.vars().rank(), self.rank(), "Weyl element rank differs from variable table rank");
        p.map_exponents(|src, out| self.act_on_exponents(src, out))
    }

    /// Length of a shortest word in the simple reflections (breadth-first search).
    /// Exponential in `n`; intended for cross-checks with small `n`.
    pub fn reduced_length(&self) -> usize {
        let n = self.rank();
        let gens = Self::simple_reflections(n);
        let mut dist: HashMap<WeylElement, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(Self::identity(n), 0);
        queue.push_back(Self::identity(n));
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            if &w == self {
                return d;
            }
            for s in &gens {
                let next = w.compose(s);
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        unreachable!("the simple reflections generate the group")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.rank())
            .map(|i| {
                let k = self.perm[i];
                format!("{}{}", if self.flip[k] { "-" } else { "" }, k + 1)
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // lexicographic order of one-line forms
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// All `2^n n!` elements, ordered lexicographically by
/// (permutation one-line form, sign vector with `+1 < -1`).
pub fn enumerate_weyl(n: usize) -> Vec<WeylElement> {
    let mut out = Vec::with_capacity((1usize << n) * (1..=n).product::<usize>());
    for perm in permutations(n) {
        for mask in 0..(1u32 << n) {
            // most significant bit is position 0 so masks enumerate sign vectors lexicographically
            let flip = (0..n).map(|k| mask >> (n - 1 - k) & 1 == 1).collect();
            out.push(WeylElement { perm: perm.clone(), flip });
        }
    }
    out
}

/// All `n!` permutations in lexicographic order, with their signs.
pub fn enumerate_symmetric(n: usize) -> Vec<(Vec<usize>, i32)> {
    permutations(n)
        .into_iter()
        .map(|p| {
            let sign = WeylElement { perm: p.clone(), flip: vec![false; n] }.sign();
            (p, sign)
        })
        .collect()
}

/// `(w0, w1)`: `w0` flips every sign (the longest element), `w1` flips
/// positions `1..n-1` and fixes `a_n`.
pub fn special_elements(n: usize) -> (WeylElement, WeylElement) {
    let w0 = WeylElement { perm: (0..n).collect(), flip: vec![true; n] };
    let mut flip = vec![true; n];
    flip[n - 1] = false;
    let w1 = WeylElement { perm: (0..n).collect(), flip };
    (w0, w1)
}
