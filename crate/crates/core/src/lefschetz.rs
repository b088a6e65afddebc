//! Multiplication maps `x L^k : A_i -> A_{i+k}` on `A = R/I`, generic ranks
//! by seeded random trials, WLP/SLP scans and the Laplace-equation count.
//!
//! The rank of `x L^k` on `A` is `rank [L^k R_i ; I_{i+k}] - dim I_{i+k}`.
//! For an ideal generated in one degree `d` the same stacked matrix also
//! gives the restricted section map `(R_j / L^k R_{j-k})^r -> R_{d+j} / L^k R_{d+j-k}`
//! with `j = i + k - d`, whose kernel and cokernel feed the `N` bookkeeping.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::caveat::{push_unique, Caveat};
use crate::error::{Error, Result};
use crate::exactlin::{
    Field, FieldSpec, Matrix, PrimeField, Rationals, DEFAULT_PRIME, DEFAULT_SECOND_PRIME,
};
use crate::gradedideal::{Artinian, GradedIdeal};
use crate::polyring::{
    dim_forms, monomial_basis, random_linear_form, HPoly, Monomial, MonomialIndex,
};

pub const DEFAULT_TRIALS: usize = 5;
pub const DEFAULT_SEED: u64 = 0xA11CE;
/// Failing maps whose ambient degree `i + k` has at most this many
/// monomials are re-run over `Q`.
pub const RATIONAL_LIMIT: usize = 60;

/// How generic linear forms are drawn and failures confirmed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrialPolicy {
    pub trials: usize,
    pub seed: u64,
    pub prime: u64,
    pub second_prime: u64,
    /// Always confirm failures over `Q`, not only small ones.
    pub rational_verify: bool,
}

impl Default for TrialPolicy {
    fn default() -> Self {
        TrialPolicy {
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            prime: DEFAULT_PRIME,
            second_prime: DEFAULT_SECOND_PRIME,
            rational_verify: false,
        }
    }
}

impl TrialPolicy {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        PrimeField::new(self.prime)?;
        PrimeField::new(self.second_prime)?;
        Ok(())
    }

    pub fn primary_field(&self) -> Result<PrimeField> {
        PrimeField::new(self.prime)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Maximal,
    Fails,
}

/// `N(r,i,k,d) = r (r_i - r_{i-k}) - (r_{d+i} - r_{d+i-k})` and its parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NBook {
    pub r: usize,
    pub i: usize,
    pub k: usize,
    pub d: usize,
    pub n: i64,
    pub nplus: usize,
    pub nminus: usize,
}

pub fn n_book(r: usize, i: usize, k: usize, d: usize, nvars: usize) -> NBook {
    let rt = |t: i64| dim_forms(nvars, t) as i64;
    let (i_, k_, d_) = (i as i64, k as i64, d as i64);
    let n = r as i64 * (rt(i_) - rt(i_ - k_)) - (rt(d_ + i_) - rt(d_ + i_ - k_));
    NBook {
        r,
        i,
        k,
        d,
        n,
        nplus: n.max(0) as usize,
        nminus: (-n).max(0) as usize,
    }
}

/// The restricted section map behind a multiplication map, for ideals
/// generated in a single degree `d`; `i` here is the syzygy degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionData {
    pub i: usize,
    pub nbook: NBook,
    pub syzygy_dim: usize,
    pub kernel_dim: usize,
    pub cokernel_dim: usize,
    /// Laplace equations; absent when a degree-`i` syzygy exists.
    pub delta: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultMapReport {
    pub i: usize,
    pub k: usize,
    pub dim_source: usize,
    pub dim_target: usize,
    pub expected_rank: usize,
    pub observed_rank: usize,
    pub kernel_dim: usize,
    pub cokernel_dim: usize,
    /// Linear forms tried, over all fields.
    pub trials: usize,
    pub seed: Option<u64>,
    pub fields: Vec<FieldSpec>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub section: Option<SectionData>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub caveats: Vec<Caveat>,
}

impl MultMapReport {
    pub fn fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }

    pub fn delta(&self) -> Option<usize> {
        self.section.as_ref().and_then(|s| s.delta)
    }
}

/// Multiplication maps on one ideal, caching echelon bases of its graded pieces.
#[derive(Debug, Clone)]
pub struct MultMap<F: Field> {
    ideal: GradedIdeal<F>,
    pieces: BTreeMap<usize, Matrix<F>>,
}

impl<F: Field> MultMap<F> {
    pub fn new(ideal: &GradedIdeal<F>) -> Self {
        MultMap {
            ideal: ideal.clone(),
            pieces: BTreeMap::new(),
        }
    }

    pub fn ideal(&self) -> &GradedIdeal<F> {
        &self.ideal
    }

    fn piece(&mut self, t: usize) -> &Matrix<F> {
        let ideal = &self.ideal;
        self.pieces.entry(t).or_insert_with(|| {
            let index = MonomialIndex::new(ideal.nvars(), t as i64);
            ideal.spanning_rows(&index).echelon_basis()
        })
    }

    pub fn ideal_dim(&mut self, t: usize) -> usize {
        self.piece(t).rows()
    }

    pub fn hilbert(&mut self, t: usize) -> usize {
        dim_forms(self.ideal.nvars(), t as i64) - self.ideal_dim(t)
    }

    /// `rank [L^k R_i ; I_{i+k}]`.
    pub fn stacked_rank(&mut self, l: &HPoly<F>, i: usize, k: usize) -> usize {
        let n = self.ideal.nvars();
        let index = MonomialIndex::new(n, (i + k) as i64);
        let lk = l.power(k as u32);
        let mut m = self.piece(i + k).clone();
        for mono in monomial_basis(n, i as i64) {
            m.push_row(lk.mul_monomial(&mono).to_dense(&index))
                .expect("row width matches");
        }
        m.rank()
    }

    /// Rank of `x L^k : A_i -> A_{i+k}`.
    pub fn rank(&mut self, l: &HPoly<F>, i: usize, k: usize) -> usize {
        self.stacked_rank(l, i, k) - self.ideal_dim(i + k)
    }

    /// Dimension of the cokernel of `x L^k : A_i -> A_{i+k}`, which is also
    /// the cokernel of the restricted section map.
    pub fn cokernel(&mut self, l: &HPoly<F>, i: usize, k: usize) -> usize {
        dim_forms(self.ideal.nvars(), (i + k) as i64) - self.stacked_rank(l, i, k)
    }

    /// Largest rank over `trials` forms from `rng`, stopping once `target` is reached.
    fn best_rank(
        &mut self,
        i: usize,
        k: usize,
        trials: usize,
        target: usize,
        rng: &mut ChaCha8Rng,
    ) -> (usize, usize) {
        let field = self.ideal.field().clone();
        let n = self.ideal.nvars();
        let mut best = 0;
        let mut used = 0;
        for _ in 0..trials {
            let l = random_linear_form(&field, n, rng);
            used += 1;
            best = best.max(self.rank(&l, i, k));
            if best >= target {
                break;
            }
        }
        (best, used)
    }

    /// Kernel, cokernel and `delta` of the section map, given the rank on `A`.
    fn section_data(&mut self, i: usize, k: usize, rank: usize) -> Option<SectionData> {
        let d = self.ideal.equal_degree()?;
        let j = (i + k).checked_sub(d)?;
        let n = self.ideal.nvars();
        let r = self.ideal.num_generators();
        let rt = |t: i64| dim_forms(n, t);
        let dim_i = self.ideal_dim(d + j);
        let syzygy_dim = r * rt(j as i64) - dim_i;
        let nbook = n_book(r, j, k, d, n);
        let stacked = rank + dim_i;
        let source = r * (rt(j as i64) - rt(j as i64 - k as i64));
        let image = stacked - rt((d + j) as i64 - k as i64);
        let kernel_dim = source - image;
        let cokernel_dim = rt((d + j) as i64) - stacked;
        let delta = (syzygy_dim == 0).then(|| kernel_dim - nbook.nplus);
        Some(SectionData {
            i: j,
            nbook,
            syzygy_dim,
            kernel_dim,
            cokernel_dim,
            delta,
        })
    }

    fn assemble(&mut self, i: usize, k: usize, rank: usize) -> MultMapReport {
        let dim_source = self.hilbert(i);
        let dim_target = self.hilbert(i + k);
        let expected_rank = dim_source.min(dim_target);
        let section = self.section_data(i, k, rank);
        let mut caveats = Vec::new();
        if section.as_ref().is_some_and(|s| s.delta.is_none()) {
            caveats.push(Caveat::TheoremHypothesisUnmet);
        }
        if !self.ideal.duplicate_generators().is_empty() {
            caveats.push(Caveat::DuplicateGenerators);
        }
        MultMapReport {
            i,
            k,
            dim_source,
            dim_target,
            expected_rank,
            observed_rank: rank,
            kernel_dim: dim_source - rank,
            cokernel_dim: dim_target - rank,
            trials: 0,
            seed: None,
            fields: vec![self.ideal.field().spec()],
            verdict: if rank == expected_rank {
                Verdict::Maximal
            } else {
                Verdict::Fails
            },
            section,
            caveats,
        }
    }

    /// The report for one given linear form.
    pub fn report_for(&mut self, l: &HPoly<F>, i: usize, k: usize) -> Result<MultMapReport> {
        check_linear(l, self.ideal.nvars())?;
        let rank = self.rank(l, i, k);
        let mut report = self.assemble(i, k, rank);
        report.trials = 1;
        Ok(report)
    }
}

fn check_linear<F: Field>(l: &HPoly<F>, nvars: usize) -> Result<()> {
    if l.nvars() != nvars {
        return Err(Error::VariableCount(nvars, l.nvars()));
    }
    if l.degree() != 1 {
        return Err(Error::NotLinear(l.degree()));
    }
    if l.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(())
}

/// Single-trial report for the given linear form.
pub fn mult_map_rank<F: Field>(
    ideal: &GradedIdeal<F>,
    l: &HPoly<F>,
    i: usize,
    k: usize,
) -> Result<MultMapReport> {
    MultMap::new(ideal).report_for(l, i, k)
}

/// Generic-rank engine: random trials over the primary prime, with failures
/// re-run over the second prime and, when small enough, over `Q`.
#[derive(Debug, Clone)]
pub struct Engine {
    policy: TrialPolicy,
    primary: MultMap<PrimeField>,
    second: Option<MultMap<PrimeField>>,
    rational: Option<MultMap<Rationals>>,
}

impl Engine {
    /// Works over `policy.prime`; an ideal over another field is re-instantiated.
    pub fn new(ideal: &GradedIdeal<PrimeField>, policy: TrialPolicy) -> Result<Self> {
        policy.validate()?;
        let primary_field = policy.primary_field()?;
        let ideal = if ideal.field() == &primary_field {
            ideal.clone()
        } else {
            ideal.with_field(&primary_field)?
        };
        Ok(Engine {
            policy,
            primary: MultMap::new(&ideal),
            second: None,
            rational: None,
        })
    }

    pub fn policy(&self) -> &TrialPolicy {
        &self.policy
    }

    pub fn ideal(&self) -> &GradedIdeal<PrimeField> {
        self.primary.ideal()
    }

    pub fn hilbert(&mut self, t: usize) -> usize {
        self.primary.hilbert(t)
    }

    pub fn mult_map(&mut self) -> &mut MultMap<PrimeField> {
        &mut self.primary
    }

    pub fn is_artinian(&mut self) -> Artinian {
        let bound = self.ideal().artinian_bound();
        for t in 0..=bound {
            if self.primary.hilbert(t) == 0 {
                return Artinian::Artinian {
                    socle_degree: t.saturating_sub(1),
                };
            }
        }
        Artinian::NotArtinianUpToBound { bound }
    }

    /// Generic rank of `x L^k : A_i -> A_{i+k}`.
    pub fn report(&mut self, i: usize, k: usize) -> Result<MultMapReport> {
        let p = self.policy;
        let dim_source = self.primary.hilbert(i);
        let dim_target = self.primary.hilbert(i + k);
        let expected = dim_source.min(dim_target);
        let mut fields = vec![FieldSpec::Prime(p.prime)];
        let mut caveats = Vec::new();

        let (mut best, mut used) = self
            .primary
            .best_rank(i, k, p.trials, expected, &mut p.rng());
        if best < expected {
            if self.ideal().has_rational_source() {
                if self.second.is_none() {
                    let f2 = PrimeField::new(p.second_prime)?;
                    self.second = Some(MultMap::new(&self.ideal().with_field(&f2)?));
                }
                let second = self.second.as_mut().expect("just built");
                let (b, u) = second.best_rank(i, k, p.trials, expected, &mut p.rng());
                best = best.max(b);
                used += u;
                fields.push(FieldSpec::Prime(p.second_prime));
                let width = dim_forms(self.ideal().nvars(), (i + k) as i64);
                let small = width <= RATIONAL_LIMIT;
                if best < expected && (p.rational_verify || small) {
                    if self.rational.is_none() {
                        self.rational = Some(MultMap::new(&self.ideal().with_field(&Rationals)?));
                    }
                    let rational = self.rational.as_mut().expect("just built");
                    let (b, u) = rational.best_rank(i, k, 1, expected, &mut p.rng());
                    best = best.max(b);
                    used += u;
                    fields.push(FieldSpec::Rational);
                }
            } else {
                caveats.push(Caveat::NoConfirmation);
            }
        }

        let mut report = self.primary.assemble(i, k, best);
        report.trials = used;
        report.seed = Some(p.seed);
        report.fields = fields;
        for c in caveats {
            push_unique(&mut report.caveats, c);
        }
        Ok(report)
    }
}

/// Generic-rank report for one `(i, k)` cell.
pub fn generic_mult_rank(
    ideal: &GradedIdeal<PrimeField>,
    i: usize,
    k: usize,
    policy: TrialPolicy,
) -> Result<MultMapReport> {
    Engine::new(ideal, policy)?.report(i, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaplaceReport {
    /// Syzygy degree.
    pub i: usize,
    pub k: usize,
    /// Order of the Laplace equations, `d + i - k`.
    pub order: usize,
    pub nbook: NBook,
    pub syzygy_dim: usize,
    pub delta: Option<usize>,
    pub report: MultMapReport,
}

/// Laplace count for syzygy degree `i` and range `k`: the kernel of the
/// generic map `A_{d+i-k} -> A_{d+i}` minus `N+`. `delta` is absent (with a
/// caveat on the report) when a degree-`i` syzygy exists.
pub fn laplace_report(
    ideal: &GradedIdeal<PrimeField>,
    i: usize,
    k: usize,
    policy: TrialPolicy,
) -> Result<LaplaceReport> {
    let d = ideal.equal_degree().ok_or(Error::MixedDegrees)?;
    if k == 0 {
        return Err(Error::InvalidArgument("range k must be at least 1".into()));
    }
    let order = (d + i)
        .checked_sub(k)
        .ok_or_else(|| Error::InvalidArgument(format!("k = {k} exceeds d + i = {}", d + i)))?;
    let report = generic_mult_rank(ideal, order, k, policy)?;
    let section = report
        .section
        .clone()
        .expect("equal-degree ideal with d + i >= k");
    Ok(LaplaceReport {
        i,
        k,
        order,
        nbook: section.nbook,
        syzygy_dim: section.syzygy_dim,
        delta: section.delta,
        report,
    })
}

/// `delta`, or an error when the syzygy hypothesis fails.
pub fn laplace_count(
    ideal: &GradedIdeal<PrimeField>,
    i: usize,
    k: usize,
    policy: TrialPolicy,
) -> Result<usize> {
    let rep = laplace_report(ideal, i, k, policy)?;
    rep.delta.ok_or(Error::SyzygyHypothesis(i))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub i: usize,
    pub k: usize,
    pub delta: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlpVerdict {
    pub k_max: usize,
    pub degrees: (usize, usize),
    pub artinian: Artinian,
    pub hilbert: Vec<usize>,
    pub has_wlp: bool,
    pub has_slp_up_to_k_max: bool,
    pub failures: Vec<Failure>,
    pub reports: Vec<MultMapReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub caveats: Vec<Caveat>,
}

/// All cells `(i, k)` with `1 <= k <= k_max`, `i` in the window and
/// `i + k` at most the socle degree (beyond it the target is zero).
/// The window defaults to `0..=socle degree`.
pub fn slp_scan(
    ideal: &GradedIdeal<PrimeField>,
    k_max: usize,
    window: Option<(usize, usize)>,
    policy: TrialPolicy,
) -> Result<SlpVerdict> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("range k must be at least 1".into()));
    }
    let mut engine = Engine::new(ideal, policy)?;
    let artinian = engine.is_artinian();
    let mut caveats = Vec::new();
    let top = match artinian {
        Artinian::Artinian { socle_degree } => socle_degree,
        Artinian::NotArtinianUpToBound { bound } => {
            caveats.push(Caveat::NotArtinianUpToBound);
            bound
        }
    };
    if !ideal.duplicate_generators().is_empty() {
        caveats.push(Caveat::DuplicateGenerators);
    }
    let (lo, hi) = window.unwrap_or((0, top));
    if lo > hi {
        return Err(Error::InvalidArgument(format!(
            "empty degree window {lo}..{hi}"
        )));
    }
    let hilbert: Vec<usize> = (0..=hi.max(top) + 1).map(|t| engine.hilbert(t)).collect();
    let mut reports = Vec::new();
    for i in lo..=hi {
        for k in 1..=k_max {
            if i + k > top {
                break;
            }
            reports.push(engine.report(i, k)?);
        }
    }
    let failures: Vec<Failure> = reports
        .iter()
        .filter(|r| r.fails())
        .map(|r| Failure {
            i: r.i,
            k: r.k,
            delta: r.delta(),
        })
        .collect();
    Ok(SlpVerdict {
        k_max,
        degrees: (lo, hi),
        artinian,
        hilbert,
        has_wlp: !failures.iter().any(|f| f.k == 1),
        has_slp_up_to_k_max: failures.is_empty(),
        failures,
        reports,
        caveats,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub fails_wlp: bool,
    pub membership: bool,
    pub agree: bool,
    pub report: MultMapReport,
}

/// Compares, for non-concurrent lines `l_1..l_{2n+1}` in three variables and
/// a form `f` of degree `2n+1`, whether `(l_j^{2n+1}, f)` fails the WLP in
/// degree `2n` with whether `f` lies in `(l_j^{2n+1}, prod l_j)`.
pub fn conjecture_check(
    lines: &[HPoly<Rationals>],
    f: &HPoly<Rationals>,
    policy: TrialPolicy,
) -> Result<ConjectureReport> {
    let m = lines.len();
    if m < 3 || m.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "need 2n+1 >= 3 lines, got {m}"
        )));
    }
    let n = (m - 1) / 2;
    for l in lines {
        if l.nvars() != 3 {
            return Err(Error::VariableCount(3, l.nvars()));
        }
        if l.degree() != 1 {
            return Err(Error::NotLinear(l.degree()));
        }
        if l.is_zero() {
            return Err(Error::ZeroForm);
        }
    }
    if f.nvars() != 3 {
        return Err(Error::VariableCount(3, f.nvars()));
    }
    if f.degree() != m || f.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "f must be a nonzero form of degree {m}"
        )));
    }
    let coeffs: Vec<Vec<_>> = lines
        .iter()
        .map(|l| l.linear_coefficients().expect("linear"))
        .collect();
    let coeff_matrix = Matrix::from_rows(&Rationals, 3, coeffs)?;
    if coeff_matrix.rank() < 3 {
        return Err(Error::ConcurrentForms(m));
    }

    let mut gens: Vec<HPoly<Rationals>> = lines.iter().map(|l| l.power(m as u32)).collect();
    let product = lines.iter().skip(1).fold(lines[0].clone(), |acc, l| {
        acc.multiply(l).expect("same ring")
    });
    let span = GradedIdeal::from_rational(&Rationals, 3, {
        let mut g = gens.clone();
        g.push(product);
        g
    })?;
    let membership = span.membership_in_degree(f)?;

    gens.push(f.clone());
    let ideal = GradedIdeal::from_rational(&policy.primary_field()?, 3, gens)?;
    let report = generic_mult_rank(&ideal, 2 * n, 1, policy)?;
    let fails_wlp = report.fails();
    Ok(ConjectureReport {
        n,
        fails_wlp,
        membership,
        agree: fails_wlp == membership,
        report,
    })
}

/// Quartic monomials in `x, y, z` other than the pure powers.
pub fn th3_candidates() -> Vec<Monomial> {
    monomial_basis(3, 4)
        .into_iter()
        .filter(|m| m.exponents().iter().all(|&e| e < 4))
        .collect()
}

/// `(x^4, y^4, z^4, f, g)` over the given field.
pub fn th3_ideal<F: Field>(field: &F, f: &Monomial, g: &Monomial) -> Result<GradedIdeal<F>> {
    let mut gens: Vec<HPoly<Rationals>> = (0..3)
        .map(|j| {
            let mut e = vec![0; 3];
            e[j] = 4;
            HPoly::monomial(&Rationals, Monomial::new(e), Rationals.one())
        })
        .collect();
    gens.push(HPoly::monomial(&Rationals, f.clone(), Rationals.one()));
    gens.push(HPoly::monomial(&Rationals, g.clone(), Rationals.one()));
    GradedIdeal::from_rational(field, 3, gens)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Th3Scan {
    pub pairs_checked: usize,
    /// Failing pairs `{f, g}`, each with `f > g`.
    pub failing: Vec<(Monomial, Monomial)>,
    /// One canonical pair per permutation orbit among the failures.
    pub orbit_representatives: Vec<(Monomial, Monomial)>,
}

const S3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn ordered(a: Monomial, b: Monomial) -> (Monomial, Monomial) {
    if a > b {
        (a, b)
    } else {
        (b, a)
    }
}

/// The pairs obtained from `{f, g}` by permuting `x, y, z`.
pub fn pair_orbit(pair: &(Monomial, Monomial)) -> Vec<(Monomial, Monomial)> {
    let mut out: Vec<_> = S3
        .iter()
        .map(|p| ordered(pair.0.apply_permutation(p), pair.1.apply_permutation(p)))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every ideal `(x^4, y^4, z^4, f, g)` with monomials `f != g`, checked for
/// WLP failure in degree 3.
pub fn th3_exhaustive_scan(policy: TrialPolicy) -> Result<Th3Scan> {
    let field = policy.primary_field()?;
    let cands = th3_candidates();
    let mut failing = Vec::new();
    let mut pairs_checked = 0;
    for a in 0..cands.len() {
        for b in a + 1..cands.len() {
            pairs_checked += 1;
            let ideal = th3_ideal(&field, &cands[a], &cands[b])?;
            if generic_mult_rank(&ideal, 3, 1, policy)?.fails() {
                failing.push(ordered(cands[a].clone(), cands[b].clone()));
            }
        }
    }
    let mut orbit_representatives: Vec<_> = failing
        .iter()
        .map(|p| {
            pair_orbit(p)
                .into_iter()
                .next()
                .expect("orbit contains the pair")
        })
        .collect();
    orbit_representatives.sort();
    orbit_representatives.dedup();
    Ok(Th3Scan {
        pairs_checked,
        failing,
        orbit_representatives,
    })
}
