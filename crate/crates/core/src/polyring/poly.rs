use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Rationals};

use super::monomial::{default_var_names, Monomial, MonomialIndex};

/// Sparse homogeneous polynomial. Only nonzero coefficients are stored and
/// every stored monomial has degree exactly `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HPoly<F: Field> {
    field: F,
    nvars: usize,
    degree: usize,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> HPoly<F> {
    pub fn zero(field: &F, nvars: usize, degree: usize) -> Self {
        HPoly {
            field: field.clone(),
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: &F, nvars: usize) -> Self {
        Self::monomial(field, Monomial::one(nvars), field.one())
    }

    pub fn monomial(field: &F, m: Monomial, coeff: F::Elem) -> Self {
        let mut p = Self::zero(field, m.nvars(), m.degree());
        if !field.is_zero(&coeff) {
            p.terms.insert(m, coeff);
        }
        p
    }

    /// Collects terms, merging repeats; fails on mixed degrees or variable counts.
    pub fn from_terms<I>(field: &F, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, F::Elem)>,
    {
        let mut degree = None;
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::VariableCount(nvars, m.nvars()));
            }
            match degree {
                None => degree = Some(m.degree()),
                Some(d) if d != m.degree() => return Err(Error::NonHomogeneous(d, m.degree())),
                _ => {}
            }
            let entry = map.entry(m).or_insert_with(|| field.zero());
            *entry = field.add(entry, &c);
        }
        map.retain(|_, c| !field.is_zero(c));
        Ok(HPoly {
            field: field.clone(),
            nvars,
            degree: degree.unwrap_or(0),
            terms: map,
        })
    }

    /// `sum c_j x_j`.
    pub fn linear(field: &F, coeffs: &[F::Elem]) -> Self {
        let n = coeffs.len();
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| (Monomial::var(n, j), c.clone()));
        Self::from_terms(field, n, terms).expect("linear terms are homogeneous")
    }

    pub fn linear_i64(field: &F, coeffs: &[i64]) -> Self {
        let c: Vec<F::Elem> = coeffs.iter().map(|&v| field.from_i64(v)).collect();
        Self::linear(field, &c)
    }

    /// Coefficient vector against a basis of the matching degree.
    pub fn from_dense(field: &F, index: &MonomialIndex, coeffs: &[F::Elem]) -> Self {
        let nvars = index.basis().first().map_or(0, Monomial::nvars);
        let degree = index.degree().max(0) as usize;
        let mut p = Self::zero(field, nvars, degree);
        for (m, c) in index.basis().iter().zip(coeffs) {
            if !field.is_zero(c) {
                p.terms.insert(m.clone(), c.clone());
            }
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Dense coefficient vector in the index's column order.
    pub fn to_dense(&self, index: &MonomialIndex) -> Vec<F::Elem> {
        let mut v = vec![self.field.zero(); index.len()];
        for (m, c) in &self.terms {
            let i = index.index_of(m).expect("monomial of matching degree");
            v[i] = c.clone();
        }
        v
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableCount(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        self.check_compatible(other)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::NonHomogeneous(self.degree, other.degree));
        }
        let f = &self.field;
        let degree = if self.is_zero() {
            other.degree
        } else {
            self.degree
        };
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(|| f.zero());
            *entry = if negate {
                f.sub(entry, c)
            } else {
                f.add(entry, c)
            };
        }
        terms.retain(|_, c| !f.is_zero(c));
        Ok(HPoly {
            field: f.clone(),
            nvars: self.nvars,
            degree,
            terms,
        })
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f, self.nvars, self.degree);
        if f.is_zero(c) {
            return out;
        }
        out.terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), f.mul(a, c)))
            .collect();
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        HPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            degree: self.degree + m.degree(),
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = &self.field;
        let mut terms: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let entry = terms.entry(ma.mul(mb)).or_insert_with(|| f.zero());
                *entry = f.add(entry, &f.mul(ca, cb));
            }
        }
        terms.retain(|_, c| !f.is_zero(c));
        Ok(HPoly {
            field: f.clone(),
            nvars: self.nvars,
            degree: self.degree + other.degree,
            terms,
        })
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.field, self.nvars);
        for _ in 0..k {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// `d^order f / d x_var^order`.
    pub fn partial_derivative(&self, var: usize, order: u32) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f, self.nvars, self.degree.saturating_sub(order as usize));
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e < order {
                continue;
            }
            let falling: u64 = ((e - order + 1)..=e).map(u64::from).product();
            let coeff = f.mul(c, &f.from_u64(falling));
            if f.is_zero(&coeff) {
                continue;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= order;
            out.terms.insert(Monomial::new(exps), coeff);
        }
        out
    }

    pub fn evaluate(&self, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let f = &self.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    term = f.mul(&term, &f.pow(x, e as u64));
                }
            }
            acc = f.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Coefficients of a linear form, `None` for other degrees.
    pub fn linear_coefficients(&self) -> Option<Vec<F::Elem>> {
        if self.degree != 1 {
            return None;
        }
        Some(
            (0..self.nvars)
                .map(|j| self.coeff(&Monomial::var(self.nvars, j)))
                .collect(),
        )
    }

    /// Whether `self = c * other` for some nonzero `c` (both nonzero).
    pub fn is_proportional(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() || self.degree != other.degree {
            return false;
        }
        if self.terms.len() != other.terms.len() {
            return false;
        }
        let f = &self.field;
        let (m0, a0) = self.terms.iter().next().expect("nonzero");
        let Some(b0) = other.terms.get(m0) else {
            return false;
        };
        let ratio = f.div(a0, b0).expect("stored coefficients are nonzero");
        other.scale(&ratio) == *self
    }

    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        HPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.apply_permutation(perm), c.clone()))
                .collect(),
        }
    }

    /// Canonical text: graded-lex descending, `c*x^a*y^b`, unit coefficients elided.
    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let cs = f.format(c);
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            let body = if m.degree() == 0 {
                mag
            } else if mag == "1" {
                m.format_with(names)
            } else {
                format!("{mag}*{}", m.format_with(names))
            };
            match (i, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for HPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_var_names(self.nvars)))
    }
}

impl HPoly<Rationals> {
    /// Maps rational coefficients into another field.
    pub fn reduce_into<G: Field>(&self, target: &G) -> Result<HPoly<G>> {
        let mut out = HPoly::zero(target, self.nvars, self.degree);
        for (m, c) in &self.terms {
            let v = target.from_rational(c)?;
            if !target.is_zero(&v) {
                out.terms.insert(m.clone(), v);
            }
        }
        Ok(out)
    }

    pub fn from_i64_terms(nvars: usize, terms: &[(Vec<u32>, i64)]) -> Result<Self> {
        let q = Rationals;
        Self::from_terms(
            &q,
            nvars,
            terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.clone()), q.from_i64(*c))),
        )
    }

    pub fn rational_coeffs(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }
}

/// A linear form with every coefficient drawn uniformly from the nonzero elements.
pub fn random_linear_form<F: Field, R: Rng + ?Sized>(
    field: &F,
    nvars: usize,
    rng: &mut R,
) -> HPoly<F> {
    let coeffs: Vec<F::Elem> = (0..nvars).map(|_| field.random_nonzero(rng)).collect();
    HPoly::linear(field, &coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q() -> Rationals {
        Rationals
    }

    fn var(j: usize) -> HPoly<Rationals> {
        HPoly::monomial(&q(), Monomial::var(3, j), q().one())
    }

    #[test]
    fn multiply_basic() {
        let (x, y) = (var(0), var(1));
        assert_eq!(x.multiply(&y).unwrap().to_string(), "x*y");
        let s = x.add(&y).unwrap();
        assert_eq!(s.power(2).to_string(), "x^2 + 2*x*y + y^2");
        let d = x.sub(&y).unwrap();
        assert_eq!(d.power(2).to_string(), "x^2 - 2*x*y + y^2");
        assert_eq!(s.power(0).to_string(), "1");
        assert_eq!(x.power(3).to_string(), "x^3");
    }

    #[test]
    fn trinomial_cube_has_ten_terms() {
        let s = var(0).add(&var(1)).unwrap().add(&var(2)).unwrap();
        let c = s.power(3);
        assert_eq!(c.num_terms(), 10);
        assert_eq!(c.coeff(&Monomial::new(vec![1, 1, 1])), q().from_i64(6));
        assert_eq!(c.coeff(&Monomial::new(vec![2, 1, 0])), q().from_i64(3));
    }

    #[test]
    fn nvars_mismatch() {
        let a = HPoly::monomial(&q(), Monomial::var(2, 0), q().one());
        assert_eq!(a.multiply(&var(0)), Err(Error::VariableCount(2, 3)));
    }

    #[test]
    fn derivatives() {
        let x2y = HPoly::monomial(&q(), Monomial::new(vec![2, 1, 0]), q().one());
        assert_eq!(x2y.partial_derivative(0, 1).to_string(), "2*x*y");
        assert!(x2y.partial_derivative(2, 1).is_zero());
        let xyz = HPoly::monomial(&q(), Monomial::new(vec![1, 1, 1]), q().one());
        assert_eq!(
            xyz.partial_derivative(0, 1)
                .partial_derivative(1, 1)
                .to_string(),
            "z"
        );
        assert_eq!(x2y.partial_derivative(0, 2).to_string(), "2*y");
    }

    #[test]
    fn evaluation() {
        let f = q();
        let s = var(0).add(&var(1)).unwrap();
        let pt = [f.from_i64(1), f.from_i64(2), f.from_i64(0)];
        assert_eq!(s.evaluate(&pt).unwrap(), f.from_i64(3));
        let xyz = HPoly::monomial(&f, Monomial::new(vec![1, 1, 1]), f.one());
        assert_eq!(xyz.evaluate(&[f.one(), f.one(), f.one()]).unwrap(), f.one());
        assert_eq!(HPoly::zero(&f, 3, 4).evaluate(&pt).unwrap(), f.zero());
        assert!(s.evaluate(&pt[..2]).is_err());
    }

    #[test]
    fn random_linear_forms() {
        let f = PrimeField::default();
        let a = random_linear_form(&f, 3, &mut ChaCha8Rng::seed_from_u64(7));
        let b = random_linear_form(&f, 3, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
        assert_eq!(a.num_terms(), 3);
        assert_eq!(a.degree(), 1);
    }

    #[test]
    fn random_linear_forms_differ_across_seeds() {
        let f = PrimeField::default();
        let mut forms: Vec<Vec<u64>> = (0..1000)
            .map(|s| {
                random_linear_form(&f, 3, &mut ChaCha8Rng::seed_from_u64(s))
                    .linear_coefficients()
                    .unwrap()
            })
            .collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 1000);
    }

    #[test]
    fn proportionality() {
        let f = q();
        let a = var(0).add(&var(1)).unwrap();
        assert!(a.is_proportional(&a.scale(&f.from_i64(-3))));
        assert!(!a.is_proportional(&var(0)));
    }
}
