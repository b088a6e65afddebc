use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

/// Exponent vector `x_0^{e_0} ... x_n^{e_n}`.
///
/// Ordered graded-lexicographically with `x_0 > x_1 > ... > x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `prod e_j!`, the weight of this monomial under the apolarity pairing.
    pub fn factorial_weight(&self) -> u128 {
        self.0
            .iter()
            .map(|&e| (1..=e as u128).product::<u128>())
            .product()
    }

    pub fn apply_permutation(&self, perm: &[usize]) -> Monomial {
        let mut e = vec![0; self.0.len()];
        for (i, &p) in perm.iter().enumerate() {
            e[p] = self.0[i];
        }
        Monomial(e)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, n)| {
                if e == 1 {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as its printed form, e.g. `"x^2*y"`.
impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_var_names(self.nvars())))
    }
}

/// `x, y, z` (and `t`) for up to four variables, else `x0, x1, ...`.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    const SHORT: [&str; 4] = ["x", "y", "z", "t"];
    if nvars <= SHORT.len() {
        SHORT[..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (0..nvars).map(|i| format!("x{i}")).collect()
    }
}

/// `binom(n, k)`, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `r_t = dim R_t = binom(n + t, n)` for `nvars = n + 1`; zero for `t < 0`.
pub fn dim_forms(nvars: usize, t: i64) -> usize {
    if t < 0 || nvars == 0 {
        return 0;
    }
    binomial(nvars - 1 + t as usize, nvars - 1)
}

/// Degree-`t` monomials in decreasing graded-lex order (`x_0^t` first).
/// Negative `t` gives the empty list.
pub fn monomial_basis(nvars: usize, t: i64) -> Vec<Monomial> {
    let mut out = Vec::new();
    if t < 0 || nvars == 0 {
        return out;
    }
    let mut cur = vec![0u32; nvars];
    fill(&mut cur, 0, t as u32, &mut out);
    out
}

fn fill(cur: &mut [u32], pos: usize, left: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == cur.len() {
        cur[pos] = left;
        out.push(Monomial(cur.to_vec()));
        return;
    }
    for e in (0..=left).rev() {
        cur[pos] = e;
        fill(cur, pos + 1, left - e, out);
    }
    cur[pos] = 0;
}

/// A degree-`t` monomial basis with index lookup; fixes matrix column order.
#[derive(Debug, Clone)]
pub struct MonomialIndex {
    degree: i64,
    basis: Vec<Monomial>,
    position: HashMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new(nvars: usize, t: i64) -> Self {
        let basis = monomial_basis(nvars, t);
        let position = basis
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        MonomialIndex {
            degree: t,
            basis,
            position,
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.position.get(m).copied()
    }
}
