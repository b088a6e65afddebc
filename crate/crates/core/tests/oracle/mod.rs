//! Brute-force reference computations, written without the library's
//! matrix, polynomial or ideal code. Everything runs modulo `P`.

#![allow(dead_code)]

use std::collections::HashMap;

use lefkit::exactlin::Rationals;
use lefkit::polyring::HPoly;
use num_traits::{Signed, ToPrimitive};

pub const P: u64 = 998_244_353;

pub type Poly = HashMap<Vec<u32>, u64>;

pub fn inv(a: u64) -> u64 {
    powmod(a, P - 2)
}

pub fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    a %= P;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % P;
        }
        a = a * a % P;
        e >>= 1;
    }
    r
}

fn reduce_int(v: &num_bigint::BigInt) -> u64 {
    let m = (v.abs() % P).to_u64().unwrap();
    if v.is_negative() {
        (P - m) % P
    } else {
        m
    }
}

pub fn from_hpoly(h: &HPoly<Rationals>) -> Poly {
    h.rational_coeffs()
        .map(|(m, c)| {
            let v = reduce_int(c.numer()) * inv(reduce_int(c.denom())) % P;
            (m.exponents().to_vec(), v)
        })
        .filter(|(_, v)| *v != 0)
        .collect()
}

pub fn linear(coeffs: &[u64]) -> Poly {
    let n = coeffs.len();
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c % P != 0)
        .map(|(j, c)| {
            let mut e = vec![0; n];
            e[j] = 1;
            (e, c % P)
        })
        .collect()
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out: Poly = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert(0);
            *slot = (*slot + ca * cb) % P;
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

pub fn pow(a: &Poly, k: u32, n: usize) -> Poly {
    let mut r: Poly = HashMap::from([(vec![0; n], 1)]);
    for _ in 0..k {
        r = mul(&r, a);
    }
    r
}

pub fn degree(a: &Poly) -> usize {
    a.keys()
        .next()
        .map_or(0, |e| e.iter().sum::<u32>() as usize)
}

/// All exponent vectors of total degree `t` in `n` variables.
pub fn monomials(n: usize, t: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return if t == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=t).rev() {
        for mut rest in monomials(n - 1, t - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

pub fn count_forms(n: usize, t: i64) -> usize {
    if t < 0 {
        0
    } else {
        monomials(n, t as usize).len()
    }
}

fn to_row(p: &Poly, cols: &HashMap<Vec<u32>, usize>) -> Vec<u64> {
    let mut row = vec![0; cols.len()];
    for (e, c) in p {
        row[cols[e]] = *c;
    }
    row
}

pub fn rank(mut rows: Vec<Vec<u64>>) -> usize {
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let iv = inv(rows[r][c]);
        let pivot_row: Vec<u64> = rows[r].iter().map(|v| v * iv % P).collect();
        for row in rows.iter_mut().skip(r + 1) {
            let f = row[c];
            if f != 0 {
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + P - f * y % P) % P;
                }
            }
        }
        rows[r] = pivot_row;
        r += 1;
    }
    r
}

fn column_map(n: usize, t: usize) -> HashMap<Vec<u32>, usize> {
    monomials(n, t)
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect()
}

fn ideal_rows(gens: &[Poly], n: usize, t: usize, cols: &HashMap<Vec<u32>, usize>) -> Vec<Vec<u64>> {
    let mut rows = Vec::new();
    for g in gens {
        let dg = degree(g);
        if dg > t {
            continue;
        }
        for m in monomials(n, t - dg) {
            let mono: Poly = HashMap::from([(m, 1)]);
            rows.push(to_row(&mul(g, &mono), cols));
        }
    }
    rows
}

pub fn ideal_dim(gens: &[Poly], n: usize, t: usize) -> usize {
    let cols = column_map(n, t);
    rank(ideal_rows(gens, n, t, &cols))
}

pub fn hilbert(gens: &[Poly], n: usize, t: usize) -> usize {
    count_forms(n, t as i64) - ideal_dim(gens, n, t)
}

/// Rank of multiplication by `l^k` from `A_i` to `A_{i+k}`.
pub fn mult_rank(gens: &[Poly], n: usize, l: &Poly, i: usize, k: usize) -> usize {
    let cols = column_map(n, i + k);
    let mut rows = ideal_rows(gens, n, i + k, &cols);
    let base = rank(rows.clone());
    let lk = pow(l, k as u32, n);
    for m in monomials(n, i) {
        let mono: Poly = HashMap::from([(m, 1)]);
        rows.push(to_row(&mul(&lk, &mono), &cols));
    }
    rank(rows) - base
}

/// splitmix64.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn nonzero(&mut self) -> u64 {
        1 + self.next() % (P - 1)
    }

    pub fn point(&mut self, n: usize) -> Vec<u64> {
        (0..n).map(|_| self.nonzero()).collect()
    }
}

pub fn generic_mult_rank(
    gens: &[Poly],
    n: usize,
    i: usize,
    k: usize,
    trials: usize,
    seed: u64,
) -> usize {
    let mut rng = Rng::new(seed);
    (0..trials)
        .map(|_| mult_rank(gens, n, &linear(&rng.point(n)), i, k))
        .max()
        .unwrap()
}

/// Dimension of the syzygies of degree `j` among equal-degree generators.
pub fn syzygy_dim(gens: &[Poly], n: usize, j: usize) -> usize {
    let d = degree(&gens[0]);
    gens.len() * count_forms(n, j as i64) - ideal_dim(gens, n, d + j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub rank: usize,
    pub expected_rank: usize,
    pub cokernel: usize,
    pub delta: Option<usize>,
}

/// Rank data of `x L^k : A_i -> A_{i+k}` and the Laplace count, which is
/// the cokernel in excess of `max(0, -N)` when no syzygy of the relevant
/// degree exists.
pub fn cell(gens: &[Poly], n: usize, i: usize, k: usize, trials: usize, seed: u64) -> Cell {
    let rank = generic_mult_rank(gens, n, i, k, trials, seed);
    let (hi, hk) = (hilbert(gens, n, i), hilbert(gens, n, i + k));
    let cokernel = hk - rank;
    let d = degree(&gens[0]);
    let delta = if i + k >= d && syzygy_dim(gens, n, i + k - d) == 0 {
        let j = (i + k - d) as i64;
        let r = |t: i64| count_forms(n, t) as i64;
        let big_n = gens.len() as i64 * (r(j) - r(j - k as i64))
            - (r(d as i64 + j) - r(d as i64 + j - k as i64));
        Some(cokernel - (-big_n).max(0) as usize)
    } else {
        None
    };
    Cell {
        rank,
        expected_rank: hi.min(hk),
        cokernel,
        delta,
    }
}

fn factorial(e: &[u32]) -> u64 {
    e.iter()
        .flat_map(|&a| 1..=a as u64)
        .fold(1, |acc, v| acc * v % P)
}

/// `dim { f in R_t : f apolar to I_t, mult_point f >= m }`.
pub fn perp_fat_dim(gens: &[Poly], n: usize, t: usize, point: &[u64], m: usize) -> usize {
    let mons = monomials(n, t);
    let cols: HashMap<Vec<u32>, usize> = mons
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mut rows: Vec<Vec<u64>> = ideal_rows(gens, n, t, &cols)
        .into_iter()
        .map(|row| {
            row.iter()
                .zip(&mons)
                .map(|(v, e)| v * factorial(e) % P)
                .collect()
        })
        .collect();
    for order in 0..m.min(t + 1) {
        for beta in monomials(n, order) {
            let row: Vec<u64> = mons
                .iter()
                .map(|alpha| {
                    if alpha.iter().zip(&beta).any(|(a, b)| b > a) {
                        return 0;
                    }
                    let mut v = 1u64;
                    for ((&a, &b), &p) in alpha.iter().zip(&beta).zip(point) {
                        for s in 0..b {
                            v = v * (a - s) as u64 % P;
                        }
                        v = v * powmod(p, (a - b) as u64) % P;
                    }
                    v
                })
                .collect();
            rows.push(row);
        }
    }
    mons.len() - rank(rows)
}
