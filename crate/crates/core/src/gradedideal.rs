//! Homogeneous ideals, their graded pieces, Hilbert functions, inverse
//! systems and low-degree syzygies.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::{Field, FieldSpec, Matrix, Rationals};
use crate::polyring::{
    default_var_names, dim_forms, monomial_basis, parse_poly, HPoly, MonomialIndex,
};

/// Ideal generated by nonzero homogeneous forms (degrees may differ).
///
/// Ideals built from rational generators remember them, so the same ideal
/// can be re-instantiated over another field for confirmation runs.
#[derive(Debug, Clone)]
pub struct GradedIdeal<F: Field> {
    field: F,
    nvars: usize,
    generators: Vec<HPoly<F>>,
    source: Option<Vec<HPoly<Rationals>>>,
}

/// Reduced basis of `I_t` in monomial coordinates.
#[derive(Debug, Clone)]
pub struct GradedPiece<F: Field> {
    pub degree: usize,
    pub basis: Matrix<F>,
}

impl<F: Field> GradedPiece<F> {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// `h_A(t)` for `t = 0..=t_max`.
    pub values: Vec<usize>,
    /// Largest `t` with `h_A(t) > 0`, when some later value vanished.
    pub socle_degree: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Artinian {
    Artinian {
        socle_degree: usize,
    },
    /// `h_A(bound) > 0`.
    NotArtinianUpToBound {
        bound: usize,
    },
}

impl Artinian {
    pub fn is_artinian(&self) -> bool {
        matches!(self, Artinian::Artinian { .. })
    }
}

impl<F: Field> GradedIdeal<F> {
    pub fn new(field: &F, nvars: usize, generators: Vec<HPoly<F>>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != nvars {
                return Err(Error::VariableCount(nvars, g.nvars()));
            }
            if g.is_zero() {
                return Err(Error::InvalidArgument("zero generator".into()));
            }
        }
        Ok(GradedIdeal {
            field: field.clone(),
            nvars,
            generators,
            source: None,
        })
    }

    pub fn from_rational(
        field: &F,
        nvars: usize,
        generators: Vec<HPoly<Rationals>>,
    ) -> Result<Self> {
        let reduced = generators
            .iter()
            .map(|g| g.reduce_into(field))
            .collect::<Result<Vec<_>>>()?;
        let mut ideal = Self::new(field, nvars, reduced)?;
        ideal.source = Some(generators);
        Ok(ideal)
    }

    /// `(L_1^d, ..., L_r^d)` for pairwise non-proportional rational linear forms.
    pub fn power_ideal(field: &F, forms: &[HPoly<Rationals>], d: u32) -> Result<Self> {
        let nvars = forms.first().map_or(0, HPoly::nvars);
        for (i, l) in forms.iter().enumerate() {
            if l.degree() != 1 {
                return Err(Error::NotLinear(l.degree()));
            }
            if l.is_zero() {
                return Err(Error::ZeroForm);
            }
            if let Some(j) = forms[..i].iter().position(|m| m.is_proportional(l)) {
                return Err(Error::ProportionalForms(j, i));
            }
        }
        Self::from_rational(field, nvars, forms.iter().map(|l| l.power(d)).collect())
    }

    /// The same ideal over another field; needs the rational generators.
    pub fn with_field<G: Field>(&self, target: &G) -> Result<GradedIdeal<G>> {
        let src = self
            .source
            .as_ref()
            .ok_or_else(|| Error::InvalidArgument("ideal has no rational generators".into()))?;
        GradedIdeal::from_rational(target, self.nvars, src.clone())
    }

    pub fn has_rational_source(&self) -> bool {
        self.source.is_some()
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[HPoly<F>] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Common generator degree, if all generators share one.
    pub fn equal_degree(&self) -> Option<usize> {
        let d = self.generators.first()?.degree();
        self.generators.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn max_degree(&self) -> usize {
        self.generators.iter().map(HPoly::degree).max().unwrap_or(0)
    }

    /// Pairs `(i, j)`, `i < j`, of proportional generators.
    pub fn duplicate_generators(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.generators.len() {
            for i in 0..j {
                if self.generators[i].is_proportional(&self.generators[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(HPoly::is_monomial)
    }

    /// Spanning set `{m * g_j : deg m = t - deg g_j}` as rows over `index`.
    pub fn spanning_rows(&self, index: &MonomialIndex) -> Matrix<F> {
        let t = index.degree();
        let mut rows = Vec::new();
        for g in &self.generators {
            for m in monomial_basis(self.nvars, t - g.degree() as i64) {
                rows.push(g.mul_monomial(&m).to_dense(index));
            }
        }
        Matrix::from_rows(&self.field, index.len(), rows).expect("rows match the index width")
    }

    pub fn graded_piece(&self, t: usize) -> GradedPiece<F> {
        let index = MonomialIndex::new(self.nvars, t as i64);
        GradedPiece {
            degree: t,
            basis: self.spanning_rows(&index).row_space_basis(),
        }
    }

    pub fn piece_dim(&self, t: usize) -> usize {
        let index = MonomialIndex::new(self.nvars, t as i64);
        self.spanning_rows(&index).rank()
    }

    /// `h_A(t) = r_t - dim I_t`.
    pub fn hilbert_value(&self, t: usize) -> usize {
        dim_forms(self.nvars, t as i64) - self.piece_dim(t)
    }

    pub fn hilbert_function(&self, t_max: usize) -> HilbertData {
        let values: Vec<usize> = (0..=t_max).map(|t| self.hilbert_value(t)).collect();
        let socle_degree = values
            .iter()
            .position(|&h| h == 0)
            .map(|z| z.saturating_sub(1));
        HilbertData {
            values,
            socle_degree,
        }
    }

    /// `B = (n+1)(d_max - 1) + 1`.
    pub fn artinian_bound(&self) -> usize {
        self.nvars * self.max_degree().saturating_sub(1) + 1
    }

    /// Artinian iff `h_A` vanishes somewhere up to the bound.
    pub fn is_artinian(&self) -> Artinian {
        let bound = self.artinian_bound();
        for t in 0..=bound {
            if self.hilbert_value(t) == 0 {
                return Artinian::Artinian {
                    socle_degree: t.saturating_sub(1),
                };
            }
        }
        Artinian::NotArtinianUpToBound { bound }
    }

    /// Basis of `I_t^perp` under the apolarity pairing `<x^a, x^b> = a! [a = b]`,
    /// returned as forms of degree `t`. For monomial ideals this is exactly the
    /// set of monomials outside `I_t`.
    pub fn perp_basis(&self, t: usize) -> Result<Vec<HPoly<F>>> {
        self.field.check_characteristic(t)?;
        let f = &self.field;
        let index = MonomialIndex::new(self.nvars, t as i64);
        let piece = self.graded_piece(t).basis;
        // f is perpendicular to g iff sum_a a! g_a f_a = 0: weight the columns.
        let weights: Vec<F::Elem> = index
            .basis()
            .iter()
            .map(|m| factorial_weight_in(f, m.exponents()))
            .collect();
        let mut weighted = piece.clone();
        for r in 0..weighted.rows() {
            for (c, w) in weights.iter().enumerate() {
                let v = f.mul(weighted.get(r, c), w);
                weighted.set(r, c, v);
            }
        }
        let null = weighted.nullspace_basis();
        // Present the complement in reduced form for stable output.
        let m = Matrix::from_rows(f, index.len(), null)?.row_space_basis();
        Ok(m.row_vecs()
            .iter()
            .map(|v| HPoly::from_dense(f, &index, v))
            .collect())
    }

    /// Whether the form lies in `I_t`, `t = deg f`.
    pub fn membership_in_degree(&self, form: &HPoly<F>) -> Result<bool> {
        if form.nvars() != self.nvars {
            return Err(Error::VariableCount(self.nvars, form.nvars()));
        }
        let index = MonomialIndex::new(self.nvars, form.degree() as i64);
        let span = self.spanning_rows(&index);
        span.transpose().in_column_space(&form.to_dense(&index))
    }

    /// Dimension of degree-`i` syzygies: kernel of `(R_i)^r -> R_{d+i}`.
    pub fn syzygy_dim(&self, i: usize) -> Result<usize> {
        let d = self.equal_degree().ok_or(Error::MixedDegrees)?;
        let r = self.generators.len();
        Ok(r * dim_forms(self.nvars, i as i64) - self.piece_dim(d + i))
    }

    pub fn format_generators(&self, names: &[String]) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| g.format_with(names))
            .collect()
    }
}

fn factorial_weight_in<F: Field>(f: &F, exps: &[u32]) -> F::Elem {
    exps.iter()
        .flat_map(|&e| 1..=e as u64)
        .fold(f.one(), |acc, k| f.mul(&acc, &f.from_u64(k)))
}

/// Ideal description independent of the working field.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealSpec {
    pub vars: Vec<String>,
    pub field: Option<FieldSpec>,
    pub generators: Vec<HPoly<Rationals>>,
    /// Present for `power_ideal` inputs.
    pub power: Option<PowerIdealSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerIdealSpec {
    pub linear_forms: Vec<Vec<i64>>,
    pub exponent: u32,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealFile {
    vars: Option<Vec<String>>,
    field: Option<FieldSpec>,
    generators: Option<Vec<String>>,
    power_ideal: Option<PowerIdealSpec>,
}

impl IdealSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: IdealFile =
            serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        let field = file.field.map(FieldSpec::validate).transpose()?;
        match (file.generators, file.power_ideal) {
            (Some(gens), None) => {
                let vars = file.vars.unwrap_or_else(|| default_var_names(3));
                let generators = gens
                    .iter()
                    .map(|g| parse_poly(g, &vars))
                    .collect::<Result<Vec<_>>>()?;
                if generators.is_empty() {
                    return Err(Error::Input("no generators".into()));
                }
                if let Some(z) = generators.iter().position(HPoly::is_zero) {
                    return Err(Error::Input(format!("generator {z} is zero")));
                }
                Ok(IdealSpec {
                    vars,
                    field,
                    generators,
                    power: None,
                })
            }
            (None, Some(p)) => {
                let nvars = p.linear_forms.first().map_or(0, Vec::len);
                if nvars == 0 || p.linear_forms.iter().any(|l| l.len() != nvars) {
                    return Err(Error::Input(
                        "linear forms must share a nonzero length".into(),
                    ));
                }
                let vars = file.vars.unwrap_or_else(|| default_var_names(nvars));
                if vars.len() != nvars {
                    return Err(Error::VariableCount(vars.len(), nvars));
                }
                let forms = p.forms();
                GradedIdeal::power_ideal(&Rationals, &forms, p.exponent)?;
                let generators = forms.iter().map(|l| l.power(p.exponent)).collect();
                Ok(IdealSpec {
                    vars,
                    field,
                    generators,
                    power: Some(p),
                })
            }
            _ => Err(Error::Input(
                "exactly one of `generators` or `power_ideal` is required".into(),
            )),
        }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn instantiate<F: Field>(&self, field: &F) -> Result<GradedIdeal<F>> {
        GradedIdeal::from_rational(field, self.nvars(), self.generators.clone())
    }
}

impl PowerIdealSpec {
    pub fn forms(&self) -> Vec<HPoly<Rationals>> {
        self.linear_forms
            .iter()
            .map(|c| HPoly::linear_i64(&Rationals, c))
            .collect()
    }
}
