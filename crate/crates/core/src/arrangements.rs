//! Line arrangements in the projective plane and the rank-two bundle `D0`
//! of derivations `(g0, g1, g2)` with `g0 f_x + g1 f_y + g2 f_z = 0`,
//! where `f` is the product of the lines.
//!
//! Each line `a x + b y + c z` is also read as the dual point `(a : b : c)`;
//! `Z` is the set of these points. The splitting `(a, b)` of `D0` on a
//! general line is found from the least `a` for which some curve of degree
//! `a + 1` through `Z` has multiplicity `a` at a general point.
//!
//! Freeness is certified with Saito's determinant: the Euler derivation
//! `(x, y, z)` is not a section of `D0` (it sends `f` to `deg f * f`), so the
//! determinant of the rows `(x, y, z)`, `theta1`, `theta2` is compared with `f`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::caveat::Caveat;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Rationals};
use crate::fatpoints::{fat_point_subspace, random_point, FatPointCondition};
use crate::gradedideal::GradedIdeal;
use crate::lefschetz::{Engine, MultMapReport, TrialPolicy};
use crate::polyring::{default_var_names, dim_forms, monomial_basis, HPoly, MonomialIndex};

/// Distinct lines, stored by integer coefficient triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineArrangement {
    lines: Vec<[i64; 3]>,
}

impl LineArrangement {
    pub fn new(lines: Vec<[i64; 3]>) -> Result<Self> {
        if lines.is_empty() {
            return Err(Error::InvalidArgument(
                "an arrangement needs at least one line".into(),
            ));
        }
        for (j, l) in lines.iter().enumerate() {
            if *l == [0, 0, 0] {
                return Err(Error::ZeroForm);
            }
            if let Some(i) = lines[..j].iter().position(|m| proportional(m, l)) {
                return Err(Error::ProportionalForms(i, j));
            }
        }
        Ok(LineArrangement { lines })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            lines: Vec<[i64; 3]>,
        }
        let raw: Raw = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        Self::new(raw.lines)
    }

    /// `x, y, z, x +- y, x +- z, y +- z`.
    pub fn b3() -> Self {
        Self::new(vec![
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [1, -1, 0],
            [1, 0, 1],
            [1, 0, -1],
            [0, 1, 1],
            [0, 1, -1],
        ])
        .expect("distinct lines")
    }

    pub fn triangle() -> Self {
        Self::new(vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]]).expect("distinct lines")
    }

    /// `x, y, z, x - y, x - z, y - z`.
    pub fn braid() -> Self {
        Self::new(vec![
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, -1, 0],
            [1, 0, -1],
            [0, 1, -1],
        ])
        .expect("distinct lines")
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn coefficients(&self) -> &[[i64; 3]] {
        &self.lines
    }

    pub fn lines(&self) -> Vec<HPoly<Rationals>> {
        self.lines
            .iter()
            .map(|c| HPoly::linear_i64(&Rationals, c))
            .collect()
    }

    pub fn lines_in<F: Field>(&self, field: &F) -> Vec<HPoly<F>> {
        self.lines
            .iter()
            .map(|c| HPoly::linear_i64(field, c))
            .collect()
    }

    /// `f`, the product of the lines.
    pub fn product<F: Field>(&self, field: &F) -> HPoly<F> {
        self.lines_in(field)
            .into_iter()
            .reduce(|acc, l| acc.multiply(&l).expect("same ring"))
            .expect("nonempty")
    }

    pub fn dual_points<F: Field>(&self, field: &F) -> Vec<Vec<F::Elem>> {
        self.lines
            .iter()
            .map(|c| c.iter().map(|&v| field.from_i64(v)).collect())
            .collect()
    }

    /// Whether all lines pass through one point.
    pub fn is_pencil(&self) -> bool {
        let rows: Vec<Vec<i64>> = self.lines.iter().map(|l| l.to_vec()).collect();
        Matrix::from_i64(&Rationals, &rows)
            .expect("three columns")
            .rank()
            <= 2
    }

    /// No three lines through a point.
    pub fn is_simple(&self) -> bool {
        let n = self.lines.len();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if det3(&self.lines[a], &self.lines[b], &self.lines[c]) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The power ideal `(l_1^d, ..., l_n^d)`.
    pub fn power_ideal<F: Field>(&self, field: &F, d: u32) -> Result<GradedIdeal<F>> {
        GradedIdeal::power_ideal(field, &self.lines(), d)
    }

    pub fn with_lines(&self, extra: &[[i64; 3]]) -> Result<Self> {
        let mut lines = self.lines.clone();
        lines.extend_from_slice(extra);
        Self::new(lines)
    }
}

fn proportional(a: &[i64; 3], b: &[i64; 3]) -> bool {
    let cross = [
        a[1] as i128 * b[2] as i128 - a[2] as i128 * b[1] as i128,
        a[2] as i128 * b[0] as i128 - a[0] as i128 * b[2] as i128,
        a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128,
    ];
    cross == [0, 0, 0]
}

fn det3(a: &[i64; 3], b: &[i64; 3], c: &[i64; 3]) -> i128 {
    let (a, b, c) = (
        a.map(|v| v as i128),
        b.map(|v| v as i128),
        c.map(|v| v as i128),
    );
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// A random simple arrangement: pairwise distinct lines, no three concurrent,
/// coefficients in `[-bound, bound]`.
pub fn random_simple_arrangement<R: Rng + ?Sized>(
    count: usize,
    bound: i64,
    rng: &mut R,
) -> LineArrangement {
    let mut lines: Vec<[i64; 3]> = Vec::with_capacity(count);
    while lines.len() < count {
        let l = [
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
        ];
        if l == [0, 0, 0] || lines.iter().any(|m| proportional(m, &l)) {
            continue;
        }
        let concurrent = (0..lines.len())
            .any(|a| (a + 1..lines.len()).any(|b| det3(&lines[a], &lines[b], &l) == 0));
        if !concurrent {
            lines.push(l);
        }
    }
    LineArrangement::new(lines).expect("distinct by construction")
}

/// A section of `D0(e)`.
pub type Derivation<F> = [HPoly<F>; 3];

/// Basis of the degree-`e` sections of `D0`, in reduced form.
pub fn derivation_sections<F: Field>(
    field: &F,
    arr: &LineArrangement,
    e: usize,
) -> Vec<Derivation<F>> {
    let f = arr.product(field);
    let partials: Vec<HPoly<F>> = (0..3).map(|j| f.partial_derivative(j, 1)).collect();
    let source = monomial_basis(3, e as i64);
    let target = MonomialIndex::new(3, (e + arr.len() - 1) as i64);
    let rows: Vec<Vec<F::Elem>> = partials
        .iter()
        .flat_map(|p| {
            source
                .iter()
                .map(|m| p.mul_monomial(m).to_dense(&target))
                .collect::<Vec<_>>()
        })
        .collect();
    let m = Matrix::from_rows(field, target.len(), rows).expect("row width matches");
    let null = m.transpose().nullspace_basis();
    if null.is_empty() {
        return Vec::new();
    }
    let reduced = Matrix::from_rows(field, 3 * source.len(), null)
        .expect("width")
        .row_space_basis();
    let index = MonomialIndex::new(3, e as i64);
    let r = source.len();
    reduced
        .row_vecs()
        .iter()
        .map(|v| std::array::from_fn(|j| HPoly::from_dense(field, &index, &v[j * r..(j + 1) * r])))
        .collect()
}

/// `h0(D0(e))` for `e = 0..=e_max`.
pub fn section_dims<F: Field>(field: &F, arr: &LineArrangement, e_max: usize) -> Vec<usize> {
    (0..=e_max)
        .map(|e| derivation_sections(field, arr, e).len())
        .collect()
}

/// Whether `theta` is a section of `D0`.
pub fn is_section<F: Field>(field: &F, arr: &LineArrangement, theta: &Derivation<F>) -> bool {
    let f = arr.product(field);
    let image = (0..3)
        .map(|j| {
            theta[j]
                .multiply(&f.partial_derivative(j, 1))
                .expect("same ring")
        })
        .reduce(|a, b| a.add(&b).expect("same degree"))
        .expect("three terms");
    image.is_zero()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SplittingType {
    pub a: usize,
    pub b: usize,
}

impl SplittingType {
    /// `b - a >= 2`.
    pub fn is_unstable(&self) -> bool {
        self.b >= self.a + 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplittingReport {
    pub points: usize,
    pub splitting: SplittingType,
    /// The least `a` seen at each random point.
    pub per_trial: Vec<usize>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub caveats: Vec<Caveat>,
}

/// Least `a` such that a curve of degree `a + 1` passes through `Z` with
/// multiplicity `a` at `point`.
pub fn least_pencil_degree<F: Field>(
    field: &F,
    arr: &LineArrangement,
    point: &[F::Elem],
) -> Result<usize> {
    let z = arr.dual_points(field);
    let mut base: Vec<FatPointCondition<F>> = z
        .into_iter()
        .map(|p| FatPointCondition::new(field, p, 1))
        .collect::<Result<_>>()?;
    for a in 0.. {
        let t = a + 1;
        let all: Vec<HPoly<F>> = monomial_basis(3, t as i64)
            .into_iter()
            .map(|m| HPoly::monomial(field, m, field.one()))
            .collect();
        if a > 0 {
            base.push(FatPointCondition::new(field, point.to_vec(), a)?);
        }
        let found = !fat_point_subspace(field, 3, t, &all, &base)?.is_empty();
        if a > 0 {
            base.pop();
        }
        if found {
            return Ok(a);
        }
    }
    unreachable!("a curve of degree |Z| - 1 with the required point always exists")
}

/// Generic splitting type of `D0` from the largest `a*` over random points.
pub fn generic_splitting(arr: &LineArrangement, policy: &TrialPolicy) -> Result<SplittingReport> {
    policy.validate()?;
    let field = policy.primary_field()?;
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    let mut per_trial = Vec::with_capacity(policy.trials);
    for _ in 0..policy.trials {
        let p = random_point(&field, 3, &mut rng);
        per_trial.push(least_pencil_degree(&field, arr, &p)?);
    }
    let a = *per_trial.iter().max().expect("at least one trial");
    let b = arr.len() - 1 - a;
    let mut caveats = Vec::new();
    if a == 0 {
        caveats.push(Caveat::CollinearDualPoints);
    }
    Ok(SplittingReport {
        points: arr.len(),
        splitting: SplittingType { a, b },
        per_trial,
        seed: policy.seed,
        caveats,
    })
}

pub fn is_unstable(arr: &LineArrangement, policy: &TrialPolicy) -> Result<bool> {
    Ok(generic_splitting(arr, policy)?.splitting.is_unstable())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FreenessStatus {
    Free { a: usize, b: usize },
    NotFree { evidence: String },
    Undetermined { evidence: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SaitoWitness {
    pub theta1: [String; 3],
    pub theta2: [String; 3],
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessCertificate {
    #[serde(flatten)]
    pub status: FreenessStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<SaitoWitness>,
    /// `(e, h0(D0(e)))`.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub h0_table: Vec<(usize, usize)>,
}

impl FreenessCertificate {
    pub fn is_free(&self) -> bool {
        matches!(self.status, FreenessStatus::Free { .. })
    }

    pub fn exponents(&self) -> Option<(usize, usize)> {
        match self.status {
            FreenessStatus::Free { a, b } => Some((a, b)),
            _ => None,
        }
    }
}

/// `det [[x, y, z], theta1, theta2]`.
pub fn saito_determinant<F: Field>(field: &F, t1: &Derivation<F>, t2: &Derivation<F>) -> HPoly<F> {
    let minor = |i: usize, j: usize| {
        t1[i]
            .multiply(&t2[j])
            .expect("same ring")
            .sub(&t1[j].multiply(&t2[i]).expect("same ring"))
            .expect("same degree")
    };
    let var = |j: usize| {
        let mut c = [0i64; 3];
        c[j] = 1;
        HPoly::linear_i64(field, &c)
    };
    let terms = [
        var(0).multiply(&minor(1, 2)).expect("same ring"),
        var(1).multiply(&minor(0, 2)).expect("same ring"),
        var(2).multiply(&minor(0, 1)).expect("same ring"),
    ];
    terms[0]
        .sub(&terms[1])
        .and_then(|s| s.add(&terms[2]))
        .expect("same degree")
}

/// Saito's criterion for two sections of degrees summing to `|Z| - 1`.
pub fn saito_check<F: Field>(
    field: &F,
    arr: &LineArrangement,
    t1: &Derivation<F>,
    t2: &Derivation<F>,
) -> Result<FreenessCertificate> {
    let (a, b) = (t1[0].degree(), t2[0].degree());
    if t1.iter().chain(t2.iter()).any(|g| g.nvars() != 3) {
        return Err(Error::VariableCount(3, 0));
    }
    if t1.iter().any(|g| g.degree() != a)
        || t2.iter().any(|g| g.degree() != b)
        || a + b + 1 != arr.len()
    {
        return Err(Error::InvalidArgument(format!(
            "section degrees must be equal within each triple and sum to {}",
            arr.len() - 1
        )));
    }
    if !is_section(field, arr, t1) || !is_section(field, arr, t2) {
        return Err(Error::InvalidArgument("not a section of D0".into()));
    }
    let det = saito_determinant(field, t1, t2);
    let f = arr.product(field);
    let (lead, fc) = f.terms().next_back().expect("f is nonzero");
    let c = field
        .div(&det.coeff(lead), fc)
        .expect("nonzero coefficient");
    let ok = !field.is_zero(&c) && det == f.scale(&c);
    let names = default_var_names(3);
    let show = |t: &Derivation<F>| std::array::from_fn(|j| t[j].format_with(&names));
    let witness = SaitoWitness {
        theta1: show(t1),
        theta2: show(t2),
        c: field.format(&c),
    };
    let status = if ok {
        FreenessStatus::Free {
            a: a.min(b),
            b: a.max(b),
        }
    } else {
        FreenessStatus::Undetermined {
            evidence: "the determinant is not a nonzero multiple of f".into(),
        }
    };
    Ok(FreenessCertificate {
        status,
        witness: ok.then_some(witness),
        h0_table: Vec::new(),
    })
}

fn random_combination<F: Field, R: Rng + ?Sized>(
    field: &F,
    basis: &[Derivation<F>],
    rng: &mut R,
) -> Derivation<F> {
    let mut acc = basis[0].clone().map(|g| g.scale(&field.zero()));
    for th in basis {
        let c = field.random_nonzero(rng);
        for j in 0..3 {
            acc[j] = acc[j].add(&th[j].scale(&c)).expect("same degree");
        }
    }
    acc
}

/// Looks for a Saito pair in the degrees of the generic splitting: first basis
/// pairs, then `policy.trials` random combinations. Without a witness the
/// `h0(D0(e))` table decides: a mismatch with `r_{e-a} + r_{e-b}` proves the
/// arrangement is not free. The table is counted over the policy prime.
pub fn free_search<F: Field>(
    field: &F,
    arr: &LineArrangement,
    policy: &TrialPolicy,
) -> Result<FreenessCertificate> {
    let SplittingType { a, b } = generic_splitting(arr, policy)?.splitting;
    let sa = derivation_sections(field, arr, a);
    let sb = if a == b {
        sa.clone()
    } else {
        derivation_sections(field, arr, b)
    };
    if !sa.is_empty() && !sb.is_empty() {
        for (i, t1) in sa.iter().enumerate() {
            for (j, t2) in sb.iter().enumerate() {
                if a == b && j <= i {
                    continue;
                }
                let cert = saito_check(field, arr, t1, t2)?;
                if cert.is_free() {
                    return Ok(cert);
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
        for _ in 0..policy.trials {
            let t1 = random_combination(field, &sa, &mut rng);
            let t2 = random_combination(field, &sb, &mut rng);
            let cert = saito_check(field, arr, &t1, &t2)?;
            if cert.is_free() {
                return Ok(cert);
            }
        }
    }
    let dims = section_dims(&policy.primary_field()?, arr, a + b + 2);
    let h0_table: Vec<(usize, usize)> = dims.iter().copied().enumerate().collect();
    let split = |e: usize| dim_forms(3, e as i64 - a as i64) + dim_forms(3, e as i64 - b as i64);
    let status = match dims.iter().enumerate().find(|&(e, &h)| h != split(e)) {
        Some((e, &h)) => FreenessStatus::NotFree {
            evidence: format!(
                "h0(D0({e})) = {h}, a free bundle of type ({a},{b}) has {}",
                split(e)
            ),
        },
        None => FreenessStatus::Undetermined {
            evidence: format!("no Saito pair found although h0(D0(e)) matches type ({a},{b})"),
        },
    };
    Ok(FreenessCertificate {
        status,
        witness: None,
        h0_table,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BridgeReport {
    pub d: usize,
    pub fails_slp2: bool,
    pub unstable: bool,
    pub agree: bool,
    pub splitting: SplittingType,
    pub report: MultMapReport,
}

/// For `2d + 1` lines: SLP failure of `(l_j^d)` at range 2 in degree `d - 2`
/// against unstability of `D0`, each computed on its own.
pub fn slp2_bridge(arr: &LineArrangement, policy: &TrialPolicy) -> Result<BridgeReport> {
    let n = arr.len();
    if n.is_multiple_of(2) || n < 5 {
        return Err(Error::InvalidArgument(format!(
            "need 2d+1 lines with d >= 2, got {n}"
        )));
    }
    let d = (n - 1) / 2;
    let ideal = arr.power_ideal(&policy.primary_field()?, d as u32)?;
    let report = Engine::new(&ideal, *policy)?.report(d - 2, 2)?;
    let splitting = generic_splitting(arr, policy)?.splitting;
    let fails_slp2 = report.fails();
    let unstable = splitting.is_unstable();
    Ok(BridgeReport {
        d,
        fails_slp2,
        unstable,
        agree: fails_slp2 == unstable,
        splitting,
        report,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TeraoReport {
    pub exponents: (usize, usize),
    pub padding: Vec<[i64; 3]>,
    pub free_side: MultMapReport,
    pub other_side: MultMapReport,
    pub agree: bool,
}

/// Pads both arrangements with the same `b - a` general lines and compares
/// the SLP verdicts of the exponent-`b` power ideals at range 2 in degree
/// `b - 2`. The two arrangements are assumed to share their combinatorics;
/// that is not checked.
pub fn terao_experiment(
    free: &LineArrangement,
    other: &LineArrangement,
    policy: &TrialPolicy,
) -> Result<TeraoReport> {
    let field = policy.primary_field()?;
    let cert = free_search(&field, free, policy)?;
    let (a, b) = cert.exponents().ok_or_else(|| {
        Error::InvalidArgument("the first arrangement could not be certified free".into())
    })?;
    if other.len() != free.len() {
        return Err(Error::InvalidArgument(format!(
            "arrangements differ in size: {} and {}",
            free.len(),
            other.len()
        )));
    }
    if b < 2 {
        return Err(Error::InvalidArgument(format!(
            "exponent b = {b} is below 2"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    let mut padding: Vec<[i64; 3]> = Vec::new();
    while padding.len() < b - a {
        let l = [
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
            rng.gen_range(-50..=50),
        ];
        let general = |arr: &LineArrangement| {
            let all: Vec<[i64; 3]> = arr.coefficients().iter().chain(&padding).copied().collect();
            l != [0, 0, 0]
                && all.iter().all(|m| !proportional(m, &l))
                && (0..all.len())
                    .all(|i| (i + 1..all.len()).all(|j| det3(&all[i], &all[j], &l) != 0))
        };
        if general(free) && general(other) {
            padding.push(l);
        }
    }
    let verdict = |arr: &LineArrangement| -> Result<MultMapReport> {
        let ideal = arr.with_lines(&padding)?.power_ideal(&field, b as u32)?;
        Engine::new(&ideal, *policy)?.report(b - 2, 2)
    };
    let free_side = verdict(free)?;
    let other_side = verdict(other)?;
    let agree = free_side.verdict == other_side.verdict;
    Ok(TeraoReport {
        exponents: (a, b),
        padding,
        free_side,
        other_side,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> TrialPolicy {
        TrialPolicy::default()
    }

    #[test]
    fn parses_b3_json() {
        let text = r#"{"lines": [[1,0,0],[0,1,0],[0,0,1],[1,1,0],[1,-1,0],[1,0,1],[1,0,-1],[0,1,1],[0,1,-1]]}"#;
        assert_eq!(
            LineArrangement::from_json(text).unwrap(),
            LineArrangement::b3()
        );
        assert!(LineArrangement::from_json(r#"{"lines": [[1,0,0],[2,0,0]]}"#).is_err());
        assert!(LineArrangement::from_json(r#"{"lines": [[0,0,0]]}"#).is_err());
        assert!(LineArrangement::from_json(r#"{"lines": [[1,0,0]], "x": 1}"#).is_err());
        assert!(LineArrangement::from_json(r#"{"lines": []}"#).is_err());
    }

    #[test]
    fn product_degree() {
        let f = LineArrangement::b3().product(&Rationals);
        assert_eq!(f.degree(), 9);
    }

    #[test]
    fn triangle_sections_and_splitting() {
        let t = LineArrangement::triangle();
        assert_eq!(section_dims(&Rationals, &t, 3), vec![0, 2, 6, 12]);
        let s = generic_splitting(&t, &p()).unwrap();
        assert_eq!(s.splitting, SplittingType { a: 1, b: 1 });
        assert!(!s.splitting.is_unstable());
    }

    #[test]
    fn b3_sections_match_free_type() {
        let b3 = LineArrangement::b3();
        let f = crate::exactlin::PrimeField::default();
        let dims = section_dims(&f, &b3, 10);
        for (e, h) in dims.iter().enumerate() {
            assert_eq!(
                *h,
                dim_forms(3, e as i64 - 3) + dim_forms(3, e as i64 - 5),
                "e = {e}"
            );
        }
        let s = generic_splitting(&b3, &p()).unwrap();
        assert_eq!(s.splitting, SplittingType { a: 3, b: 5 });
        assert!(s.splitting.is_unstable());
    }

    #[test]
    fn b3_saito_certificate() {
        let cert = free_search(&Rationals, &LineArrangement::b3(), &p()).unwrap();
        assert_eq!(cert.exponents(), Some((3, 5)));
        assert!(cert.witness.is_some());
    }

    #[test]
    fn triangle_and_braid_are_free() {
        let t = free_search(&Rationals, &LineArrangement::triangle(), &p()).unwrap();
        assert_eq!(t.exponents(), Some((1, 1)));
        let br = free_search(&Rationals, &LineArrangement::braid(), &p()).unwrap();
        assert_eq!(br.exponents(), Some((2, 3)));
    }

    #[test]
    fn generic_lines_are_not_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [4, 5] {
            let arr = random_simple_arrangement(n, 20, &mut rng);
            let cert = free_search(&Rationals, &arr, &p()).unwrap();
            assert!(
                matches!(cert.status, FreenessStatus::NotFree { .. }),
                "{n}: {cert:?}"
            );
        }
    }

    #[test]
    fn saito_rejects_bad_input() {
        let t = LineArrangement::triangle();
        let q = Rationals;
        let s1 = derivation_sections(&q, &t, 1);
        assert!(saito_check(&q, &t, &s1[0], &s1[1]).unwrap().is_free());
        let s2 = derivation_sections(&q, &t, 2);
        assert!(saito_check(&q, &t, &s1[0], &s2[0]).is_err());
        let euler = [0, 1, 2].map(|j| {
            let mut c = [0i64; 3];
            c[j] = 1;
            HPoly::linear_i64(&q, &c)
        });
        assert!(saito_check(&q, &t, &s1[0], &euler).is_err());
        // Dependent sections give a zero determinant.
        assert!(!saito_check(&q, &t, &s1[0], &s1[0]).unwrap().is_free());
    }

    #[test]
    fn pencil_has_zero_splitting() {
        let pencil =
            LineArrangement::new(vec![[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, -1, 0]]).unwrap();
        assert!(pencil.is_pencil());
        let s = generic_splitting(&pencil, &p()).unwrap();
        assert_eq!(s.splitting, SplittingType { a: 0, b: 3 });
        assert_eq!(s.caveats, vec![Caveat::CollinearDualPoints]);
    }

    #[test]
    fn b3_bridge() {
        let r = slp2_bridge(&LineArrangement::b3(), &p()).unwrap();
        assert!(r.fails_slp2 && r.unstable && r.agree);
        assert!(slp2_bridge(&LineArrangement::braid(), &p()).is_err());
    }

    #[test]
    fn simple_sampler() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let arr = random_simple_arrangement(9, 10, &mut rng);
        assert_eq!(arr.len(), 9);
        assert!(arr.is_simple());
        assert!(!LineArrangement::b3().is_simple());
    }

    #[test]
    fn terao_reflexive() {
        let b3 = LineArrangement::b3();
        let r = terao_experiment(&b3, &b3, &p()).unwrap();
        assert_eq!(r.exponents, (3, 5));
        assert_eq!(r.padding.len(), 2);
        assert!(r.agree);
    }
}
