use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered variable names for rank `n`:
/// `s0, a1..an, b, v, g1..gn, X`.
///
/// `s0^2 = alpha_0`, `a_i = alpha_i`, `b = beta`, `v^2 = q^{-1}`,
/// `g_i = gamma_i`, `X = q^{-(s+1/2)}`.
#[derive(Debug, Clone)]
pub struct VarTable {
    rank: usize,
    names: Vec<String>,
}

impl PartialEq for VarTable {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.names == other.names
    }
}

impl Eq for VarTable {}

impl VarTable {
    pub fn standard(n: usize) -> Arc<VarTable> {
        let mut names = Vec::with_capacity(2 * n + 4);
        names.push("s0".to_string());
        names.extend((1..=n).map(|i| format!("a{i}")));
        names.push("b".to_string());
        names.push("v".to_string());
        names.extend((1..=n).map(|i| format!("g{i}")));
        names.push("X".to_string());
        Arc::new(VarTable { rank: n, names })
    }

    /// Recovers a standard table from its name list.
    pub fn from_names(names: &[String]) -> Result<Arc<VarTable>> {
        if names.len() < 4 || names.len() % 2 != 0 {
            return Err(Error::Parse(format!("not a standard variable list: {names:?}")));
        }
        let table = Self::standard((names.len() - 4) / 2);
        if table.names != names {
            return Err(Error::Parse(format!("not a standard variable list: {names:?}")));
        }
        Ok(table)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn s0(&self) -> usize {
        0
    }

    /// Index of `a_i`, 1-based.
    pub fn a(&self, i: usize) -> usize {
        debug_assert!((1..=self.rank).contains(&i));
        i
    }

    pub fn b(&self) -> usize {
        self.rank + 1
    }

    pub fn v(&self) -> usize {
        self.rank + 2
    }

    /// Index of `g_i`, 1-based.
    pub fn g(&self, i: usize) -> usize {
        debug_assert!((1..=self.rank).contains(&i));
        self.rank + 2 + i
    }

    pub fn x(&self) -> usize {
        2 * self.rank + 3
    }
}
