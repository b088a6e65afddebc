//! Linear systems of forms with prescribed multiplicity at points.
//!
//! A form has multiplicity at least `m` at `P` when all its partial
//! derivatives of order at most `m - 1` vanish at `P`. For `x^a` and a
//! multi-index `b <= a`, `d^b x^a (P) = a!/(a-b)! P^(a-b)`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Rationals};
use crate::gradedideal::GradedIdeal;
use crate::polyring::{monomial_basis, HPoly, MonomialIndex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FatPointCondition<F: Field> {
    pub point: Vec<F::Elem>,
    pub multiplicity: usize,
}

impl<F: Field> FatPointCondition<F> {
    pub fn new(field: &F, point: Vec<F::Elem>, multiplicity: usize) -> Result<Self> {
        if point.iter().all(|c| field.is_zero(c)) {
            return Err(Error::InvalidArgument(
                "the zero vector is not a projective point".into(),
            ));
        }
        if multiplicity == 0 {
            return Err(Error::InvalidArgument(
                "multiplicity must be at least 1".into(),
            ));
        }
        Ok(FatPointCondition {
            point,
            multiplicity,
        })
    }

    /// Rows over `index`, one per derivative of order `< m`, evaluated at the point.
    /// Orders above the degree give zero rows and are skipped.
    pub fn rows(&self, field: &F, index: &MonomialIndex) -> Vec<Vec<F::Elem>> {
        let t = index.degree().max(0) as usize;
        let n = self.point.len();
        let mut out = Vec::new();
        for order in 0..self.multiplicity.min(t + 1) {
            for beta in monomial_basis(n, order as i64) {
                let row = index
                    .basis()
                    .iter()
                    .map(|alpha| match alpha.div(&beta) {
                        None => field.zero(),
                        Some(rest) => {
                            let mut v = field.one();
                            for (j, (&a, &e)) in
                                alpha.exponents().iter().zip(rest.exponents()).enumerate()
                            {
                                for s in (e + 1)..=a {
                                    v = field.mul(&v, &field.from_u64(s as u64));
                                }
                                if e > 0 {
                                    v = field.mul(&v, &field.pow(&self.point[j], e as u64));
                                }
                            }
                            v
                        }
                    })
                    .collect();
                out.push(row);
            }
        }
        out
    }
}

/// Basis (in reduced form) of the forms in `span(space)` satisfying every condition.
/// All forms in `space` share the degree `t`; an empty space is allowed.
pub fn fat_point_subspace<F: Field>(
    field: &F,
    nvars: usize,
    t: usize,
    space: &[HPoly<F>],
    conditions: &[FatPointCondition<F>],
) -> Result<Vec<HPoly<F>>> {
    if !conditions.is_empty() {
        field.check_characteristic(t)?;
    }
    for c in conditions {
        if c.point.len() != nvars {
            return Err(Error::DimensionMismatch {
                expected: nvars,
                got: c.point.len(),
            });
        }
    }
    let index = MonomialIndex::new(nvars, t as i64);
    let vectors: Vec<Vec<F::Elem>> = space
        .iter()
        .map(|g| {
            if g.nvars() != nvars {
                return Err(Error::VariableCount(nvars, g.nvars()));
            }
            if !g.is_zero() && g.degree() != t {
                return Err(Error::MixedDegrees);
            }
            Ok(g.to_dense(&index))
        })
        .collect::<Result<_>>()?;
    if vectors.is_empty() {
        return Ok(Vec::new());
    }
    let rows: Vec<Vec<F::Elem>> = conditions
        .iter()
        .flat_map(|c| c.rows(field, &index))
        .collect();
    let basis = Matrix::from_rows(field, index.len(), vectors)?;
    let combos = if rows.is_empty() {
        basis.row_space_basis().row_vecs()
    } else {
        // Condition j applied to basis form s: the (j, s) entry of C * V^T.
        let c = Matrix::from_rows(field, index.len(), rows)?;
        let cv = c.mul(&basis.transpose())?;
        let null = cv.nullspace_basis();
        if null.is_empty() {
            return Ok(Vec::new());
        }
        let coeffs = Matrix::from_rows(field, basis.rows(), null)?;
        coeffs.mul(&basis)?.row_space_basis().row_vecs()
    };
    Ok(combos
        .iter()
        .map(|v| HPoly::from_dense(field, &index, v))
        .collect())
}

/// `dim (I_t^perp intersected with forms of multiplicity >= m at P)`.
pub fn perp_fat_dim<F: Field>(
    ideal: &GradedIdeal<F>,
    t: usize,
    point: &[F::Elem],
    m: usize,
) -> Result<usize> {
    let field = ideal.field();
    let perp = ideal.perp_basis(t)?;
    let cond = FatPointCondition::new(field, point.to_vec(), m)?;
    Ok(fat_point_subspace(field, ideal.nvars(), t, &perp, &[cond])?.len())
}

/// Degree `d + i` forms with multiplicity `i + 1` at the coefficient point of
/// every form, plus an optional extra condition. Never builds the ideal.
pub fn power_perp_dim<F: Field>(
    field: &F,
    forms: &[HPoly<Rationals>],
    d: usize,
    i: usize,
    extra: Option<&FatPointCondition<F>>,
) -> Result<usize> {
    let nvars = forms.first().map_or(0, HPoly::nvars);
    for (a, l) in forms.iter().enumerate() {
        if l.degree() != 1 {
            return Err(Error::NotLinear(l.degree()));
        }
        if let Some(b) = forms[..a].iter().position(|m| m.is_proportional(l)) {
            return Err(Error::ProportionalForms(b, a));
        }
    }
    let t = d + i;
    let mut conds = Vec::with_capacity(forms.len() + 1);
    for l in forms {
        let point = l.reduce_into(field)?.linear_coefficients().expect("linear");
        conds.push(FatPointCondition::new(field, point, i + 1)?);
    }
    if let Some(c) = extra {
        conds.push(c.clone());
    }
    let index = MonomialIndex::new(nvars, t as i64);
    let all: Vec<HPoly<F>> = index
        .basis()
        .iter()
        .map(|m| HPoly::monomial(field, m.clone(), field.one()))
        .collect();
    Ok(fat_point_subspace(field, nvars, t, &all, &conds)?.len())
}

/// A point with every coordinate drawn uniformly from the nonzero elements.
pub fn random_point<F: Field, R: rand::Rng + ?Sized>(
    field: &F,
    nvars: usize,
    rng: &mut R,
) -> Vec<F::Elem> {
    (0..nvars).map(|_| field.random_nonzero(rng)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericFatDim {
    pub fat_dim: usize,
    pub trials: usize,
    pub seed: u64,
}

/// Smallest dimension over `trials` random points of the forms in `space`
/// with multiplicity at least `m` at the point.
pub fn generic_fat_dim<F: Field>(
    field: &F,
    nvars: usize,
    t: usize,
    space: &[HPoly<F>],
    m: usize,
    trials: usize,
    seed: u64,
) -> Result<GenericFatDim> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if space.is_empty() {
        return Ok(GenericFatDim {
            fat_dim: 0,
            trials: 0,
            seed,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = usize::MAX;
    for _ in 0..trials {
        let cond = FatPointCondition::new(field, random_point(field, nvars, &mut rng), m)?;
        best = best.min(fat_point_subspace(field, nvars, t, space, &[cond])?.len());
        if best == 0 {
            break;
        }
    }
    Ok(GenericFatDim {
        fat_dim: best,
        trials,
        seed,
    })
}
