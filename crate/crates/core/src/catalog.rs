//! Named examples with their known verdicts, run as a regression suite.
//!
//! Where only "fails" is known, the exact rank, cokernel and `delta` were
//! computed once with an independent brute-force check and are frozen here.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::arrangements::{
    free_search, generic_splitting, slp2_bridge, LineArrangement, SplittingType,
};
use crate::error::{Error, Result};
use crate::exactlin::Rationals;
use crate::gradedideal::{GradedIdeal, IdealSpec};
use crate::lefschetz::{pair_orbit, slp_scan, th3_exhaustive_scan, Engine, TrialPolicy};
use crate::polyring::{default_var_names, parse_poly, HPoly, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Frozen {
    pub rank: usize,
    pub expected_rank: usize,
    pub cokernel: usize,
    pub delta: Option<usize>,
}

#[derive(Debug, Clone)]
pub enum Check {
    /// `x L^k : A_i -> A_{i+k}` is not of maximal rank.
    FailsAt {
        ideal: IdealSpec,
        i: usize,
        k: usize,
        frozen: Frozen,
        min_cokernel: Option<usize>,
    },
    HasWlp {
        ideal: IdealSpec,
    },
    HasSlp {
        ideal: IdealSpec,
    },
    /// The five-quartic classification: failing orbits and their total size.
    Th3Scan {
        orbits: Vec<(Monomial, Monomial)>,
        failing: usize,
    },
    Arrangement {
        lines: LineArrangement,
        splitting: SplittingType,
        free: Option<(usize, usize)>,
        fails_slp2: bool,
    },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub about: String,
    pub check: Check,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryOutcome {
    pub name: String,
    pub about: String,
    pub passed: bool,
    pub expected: String,
    pub observed: String,
    pub detail: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CatalogRun {
    pub policy: TrialPolicy,
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<EntryOutcome>,
}

fn spec(nvars: usize, gens: &[&str]) -> IdealSpec {
    let vars = default_var_names(nvars);
    let generators = gens
        .iter()
        .map(|g| parse_poly(g, &vars).expect("catalog generator parses"))
        .collect();
    IdealSpec {
        vars,
        field: None,
        generators,
        power: None,
    }
}

fn power_spec(forms: Vec<Vec<i64>>, exponent: u32) -> IdealSpec {
    let nvars = forms[0].len();
    let generators = forms
        .iter()
        .map(|c| HPoly::linear_i64(&Rationals, c).power(exponent))
        .collect();
    IdealSpec {
        vars: default_var_names(nvars),
        field: None,
        generators,
        power: Some(crate::gradedideal::PowerIdealSpec {
            linear_forms: forms,
            exponent,
        }),
    }
}

/// Integer linear forms with coefficients in `[-9, 9]`, pairwise non-proportional.
pub fn seeded_forms(nvars: usize, count: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Vec<i64>> = Vec::with_capacity(count);
    while out.len() < count {
        let c: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-9i64..=9)).collect();
        let l = HPoly::linear_i64(&Rationals, &c);
        if l.is_zero()
            || out
                .iter()
                .any(|m| HPoly::linear_i64(&Rationals, m).is_proportional(&l))
        {
            continue;
        }
        out.push(c);
    }
    out
}

fn fails(
    ideal: IdealSpec,
    i: usize,
    k: usize,
    frozen: (usize, usize, usize, Option<usize>),
) -> Check {
    let (rank, expected_rank, cokernel, delta) = frozen;
    Check::FailsAt {
        ideal,
        i,
        k,
        frozen: Frozen {
            rank,
            expected_rank,
            cokernel,
            delta,
        },
        min_cokernel: None,
    }
}

fn entry(name: impl Into<String>, about: impl Into<String>, check: Check) -> CatalogEntry {
    CatalogEntry {
        name: name.into(),
        about: about.into(),
        check,
    }
}

fn monomial(s: &str) -> Monomial {
    let p = parse_poly(s, &default_var_names(3)).expect("monomial parses");
    let m = p.terms().next().expect("nonzero").0.clone();
    m
}

pub const TH3_1_SETS: [(&str, &[&str]); 5] = [
    (
        "A1",
        &[
            "x^2*y", "x*y^2", "x^2*z", "x^2*t", "y^2*z", "y^2*t", "z^2*t", "z*t^2", "x*y*z",
            "x*y*t",
        ],
    ),
    (
        "A2",
        &[
            "x^2*y", "x*y^2", "x*z^2", "y^2*z", "y*z^2", "y^2*t", "z*t^2", "z^2*t",
        ],
    ),
    (
        "A3",
        &[
            "x^2*y", "x*y^2", "z^2*t", "z*t^2", "x*y*z", "x*y*t", "x*z*t", "y*z*t",
        ],
    ),
    (
        "A4",
        &[
            "x*z^2", "y*z^2", "x*y*z", "x*y*t", "x^2*y", "x*y^2", "z^2*t", "z*t^2",
        ],
    ),
    (
        "B1",
        &[
            "x^2*y", "x*y^2", "x^2*z", "x*z^2", "x^2*t", "x*t^2", "x*y*z", "x*z*t", "x*y*t",
            "y*z*t",
        ],
    ),
];

pub const D4M_POOL: [&str; 16] = [
    "x^3*y", "x^3*z", "x^3*t", "x*y^3", "x*z^3", "x*t^3", "y^3*z", "y^3*t", "y*z^3", "y*t^3",
    "z^3*t", "z*t^3", "x^2*y^2", "z^2*t^2", "y^2*z^2", "x^2*t^2",
];

/// Six concurrent lines through `(0:0:1)` and three general ones.
pub const NMSLP_K2_D4: [[i64; 3]; 9] = [
    [1, 0, 0],
    [0, 1, 0],
    [1, 1, 0],
    [1, -1, 0],
    [1, 2, 0],
    [2, 1, 0],
    [0, 0, 1],
    [1, 1, 1],
    [1, -2, 3],
];

pub fn entries() -> Vec<CatalogEntry> {
    let mut out = vec![
        entry(
            "togliatti",
            "Togliatti: (x^3,y^3,z^3,xyz) fails the WLP in degree 2",
            fails(spec(3, &["x^3", "y^3", "z^3", "x*y*z"]), 2, 1, FROZEN_TOGLIATTI),
        ),
        entry(
            "th3-I1",
            "(x^4,y^4,z^4,x^3z,x^3y) fails the WLP in degree 3",
            fails(spec(3, &["x^4", "y^4", "z^4", "x^3*z", "x^3*y"]), 3, 1, FROZEN_TH3_I1),
        ),
        entry(
            "th3-I2",
            "(x^4,y^4,z^4,x^2y^2,xyz^2) fails the WLP in degree 3",
            fails(spec(3, &["x^4", "y^4", "z^4", "x^2*y^2", "x*y*z^2"]), 3, 1, FROZEN_TH3_I2),
        ),
        entry(
            "th3-scan",
            "five quartic monomials: failures in degree 3 are exactly the orbits of th3-I1 and th3-I2",
            Check::Th3Scan {
                orbits: vec![
                    pair_orbit(&(monomial("x^3*z"), monomial("x^3*y")))[0].clone(),
                    pair_orbit(&(monomial("x^2*y^2"), monomial("x*y*z^2")))[0].clone(),
                ],
                failing: FROZEN_TH3_FAILING,
            },
        ),
        entry(
            "th4-1",
            "(x^5,y^5,z^5,x^3y^2,x^3z^2,x^3yz) fails the WLP in degree 4",
            fails(spec(3, &["x^5", "y^5", "z^5", "x^3*y^2", "x^3*z^2", "x^3*y*z"]), 4, 1, FROZEN_TH4[0]),
        ),
        entry(
            "th4-2",
            "(x^5,y^5,z^5,x^4z,x^4y,m) with m = x^2y^2z fails the WLP in degree 4",
            fails(spec(3, &["x^5", "y^5", "z^5", "x^4*z", "x^4*y", "x^2*y^2*z"]), 4, 1, FROZEN_TH4[1]),
        ),
        entry(
            "th4-3",
            "(x^5,y^5,z^5,x^3y^2,x^2y^3,x^2y^2z) fails the WLP in degree 4",
            fails(spec(3, &["x^5", "y^5", "z^5", "x^3*y^2", "x^2*y^3", "x^2*y^2*z"]), 4, 1, FROZEN_TH4[2]),
        ),
    ];
    for (j, (set, mons)) in TH3_1_SETS.iter().enumerate() {
        let mut gens = vec!["x^3", "y^3", "z^3", "t^3"];
        gens.extend(mons.iter().take(6));
        out.push(entry(
            format!("th3_1-{set}"),
            format!("cubes plus the first six monomials of set {set} fail the WLP in degree 2"),
            fails(spec(4, &gens), 2, 1, FROZEN_TH3_1[j]),
        ));
    }
    out.push(entry(
        "cubic8-I",
        "(x^3,y^3,z^3,t^3,x^2y,xy^2,zt^2,z^2t) fails the WLP in degree 2",
        fails(
            spec(
                4,
                &[
                    "x^3", "y^3", "z^3", "t^3", "x^2*y", "x*y^2", "z*t^2", "z^2*t",
                ],
            ),
            2,
            1,
            FROZEN_CUBIC8[0],
        ),
    ));
    out.push(entry(
        "cubic8-J",
        "(x^3,y^3,z^3,t^3,xyz,xyt,xzt,yzt) fails the WLP in degree 2",
        fails(
            spec(
                4,
                &[
                    "x^3", "y^3", "z^3", "t^3", "x*y*z", "x*y*t", "x*z*t", "y*z*t",
                ],
            ),
            2,
            1,
            FROZEN_CUBIC8[1],
        ),
    ));
    for (j, n) in (3..=6u32).enumerate() {
        let mut forms: Vec<Vec<i64>> = (0..4)
            .map(|v| (0..4).map(|w| i64::from(v == w)).collect())
            .collect();
        forms.push(vec![1; 4]);
        let deg = 2 * n as usize - 3;
        out.push(entry(
            format!("pr54_1-N{n}"),
            format!("(x^{n},y^{n},z^{n},t^{n},(x+y+z+t)^{n}) fails the WLP in degree {deg}"),
            fails(power_spec(forms, n), deg, 1, FROZEN_PR54_1[j]),
        ));
    }
    for (j, &(n, m)) in PR54_2_CASES.iter().enumerate() {
        let count = m * (m + 3) / 2;
        let deg = 2 * n as usize - 3;
        out.push(entry(
            format!("pr54_2-N{n}-n{m}"),
            format!(
                "{count} general {n}-th powers in {} variables fail the WLP in degree {deg}",
                m + 2
            ),
            fails(
                power_spec(seeded_forms(m + 2, count, PR54_2_SEED), n),
                deg,
                1,
                FROZEN_PR54_2[j],
            ),
        ));
    }
    out.push(entry(
        "pr54_3",
        "8 general cubes in 7 variables: cokernel of x L from degree 3 to 4 claimed larger than 78",
        Check::FailsAt {
            ideal: power_spec(seeded_forms(7, 8, PR54_3_SEED), 3),
            i: 3,
            k: 1,
            frozen: FROZEN_PR54_3,
            min_cokernel: Some(91),
        },
    ));
    let mut d4m = vec!["x^4", "y^4", "z^4", "t^4"];
    d4m.extend(D4M_POOL.iter().take(11));
    out.push(entry(
        "d4m-sample",
        "fourth powers plus the first 11 monomials of the pool fail the WLP in degree 3",
        fails(spec(4, &d4m), 3, 1, FROZEN_D4M),
    ));
    out.push(entry(
        "d4mslp",
        "(x^4,y^4,z^4,xy^3,xz^3,x^2yz,y^2z^2,y^3z,yz^3) fails the SLP at range 2 in degree 2",
        fails(
            spec(
                3,
                &[
                    "x^4", "y^4", "z^4", "x*y^3", "x*z^3", "x^2*y*z", "y^2*z^2", "y^3*z", "y*z^3",
                ],
            ),
            2,
            2,
            FROZEN_D4MSLP,
        ),
    ));
    out.push(entry(
        "b3",
        "B3 arrangement: free with exponents (3,5); fourth powers fail the SLP at range 2 in degree 2",
        Check::Arrangement {
            lines: LineArrangement::b3(),
            splitting: SplittingType { a: 3, b: 5 },
            free: Some((3, 5)),
            fails_slp2: true,
        },
    ));
    out.push(entry(
        "nmslp-k2-d4",
        "9 lines, 6 of them concurrent: fourth powers fail the SLP at range 2 in degree 2",
        fails(
            power_spec(NMSLP_K2_D4.iter().map(|l| l.to_vec()).collect(), 4),
            2,
            2,
            FROZEN_NMSLP,
        ),
    ));
    out.push(entry(
        "ci222",
        "(x^2,y^2,z^2) has the WLP",
        Check::HasWlp {
            ideal: spec(3, &["x^2", "y^2", "z^2"]),
        },
    ));
    out.push(entry(
        "ci333",
        "(x^3,y^3,z^3) has the WLP",
        Check::HasWlp {
            ideal: spec(3, &["x^3", "y^3", "z^3"]),
        },
    ));
    out.push(entry(
        "stanley-2233",
        "(x^2,y^2,z^3,t^3) has the SLP",
        Check::HasSlp {
            ideal: spec(4, &["x^2", "y^2", "z^3", "t^3"]),
        },
    ));
    out
}

pub const PR54_2_CASES: [(u32, usize); 8] = [
    (3, 2),
    (3, 3),
    (3, 4),
    (4, 2),
    (4, 3),
    (4, 4),
    (5, 2),
    (5, 3),
];
pub const PR54_2_SEED: u64 = 2;
pub const PR54_3_SEED: u64 = 1;

type F4 = (usize, usize, usize, Option<usize>);

const FROZEN_TOGLIATTI: F4 = (5, 6, 1, Some(1));
const FROZEN_TH3_I1: F4 = (9, 10, 1, Some(1));
const FROZEN_TH3_I2: F4 = (9, 10, 1, Some(1));
const FROZEN_TH3_FAILING: usize = 6;
const FROZEN_TH4: [F4; 3] = [(14, 15, 1, Some(1)); 3];
const FROZEN_TH3_1: [F4; 5] = [
    (8, 10, 2, Some(2)),
    (9, 10, 1, Some(1)),
    (8, 10, 2, Some(2)),
    (9, 10, 1, Some(1)),
    (9, 10, 1, Some(1)),
];
const FROZEN_CUBIC8: [F4; 2] = [(9, 10, 3, Some(1)); 2];
const FROZEN_PR54_1: [F4; 4] = [
    (14, 15, 1, Some(1)),
    (33, 34, 1, Some(1)),
    (64, 65, 1, Some(1)),
    (110, 111, 1, Some(1)),
];
const FROZEN_PR54_2: [F4; 8] = [
    (14, 15, 1, Some(1)),
    (24, 25, 1, Some(1)),
    (41, 42, 1, Some(1)),
    (33, 34, 1, Some(1)),
    (74, 75, 1, Some(1)),
    (167, 168, 1, Some(1)),
    (64, 65, 1, Some(1)),
    (179, 180, 1, Some(1)),
];
const FROZEN_PR54_3: Frozen = Frozen {
    rank: 76,
    expected_rank: 76,
    cokernel: 78,
    delta: Some(0),
};
const FROZEN_D4M: F4 = (17, 20, 3, Some(3));
const FROZEN_D4MSLP: F4 = (5, 6, 1, Some(1));
const FROZEN_NMSLP: F4 = (6, 6, 1, None);

/// Entries matching `name`: `all`, an exact name, or a prefix ending in `*`.
pub fn select(name: &str) -> Result<Vec<CatalogEntry>> {
    let all = entries();
    let picked: Vec<CatalogEntry> = match name {
        "all" => all,
        _ => match name.strip_suffix('*') {
            Some(prefix) => all
                .into_iter()
                .filter(|e| e.name.starts_with(prefix))
                .collect(),
            None => all.into_iter().filter(|e| e.name == name).collect(),
        },
    };
    if picked.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "unknown catalog entry `{name}`"
        )));
    }
    Ok(picked)
}

pub fn names() -> Vec<String> {
    entries().into_iter().map(|e| e.name).collect()
}

fn ideal_for(
    spec: &IdealSpec,
    policy: &TrialPolicy,
) -> Result<GradedIdeal<crate::exactlin::PrimeField>> {
    spec.instantiate(&policy.primary_field()?)
}

fn show_frozen(f: &Frozen) -> String {
    let delta = f.delta.map_or("-".to_string(), |d| d.to_string());
    format!(
        "rank {}/{}, cokernel {}, delta {}",
        f.rank, f.expected_rank, f.cokernel, delta
    )
}

impl CatalogEntry {
    pub fn run(&self, policy: &TrialPolicy) -> Result<EntryOutcome> {
        let (passed, expected, observed, detail) = match &self.check {
            Check::FailsAt {
                ideal,
                i,
                k,
                frozen,
                min_cokernel,
            } => {
                let mut engine = Engine::new(&ideal_for(ideal, policy)?, *policy)?;
                let report = engine.report(*i, *k)?;
                let seen = Frozen {
                    rank: report.observed_rank,
                    expected_rank: report.expected_rank,
                    cokernel: report.cokernel_dim,
                    delta: report.delta(),
                };
                let big_enough = min_cokernel.is_none_or(|m| seen.cokernel >= m);
                let passed = report.fails() && seen == *frozen && big_enough;
                let mut expected = format!("fails at (i={i}, k={k})");
                if let Some(m) = min_cokernel {
                    expected.push_str(&format!(" with cokernel >= {m}"));
                } else if frozen.rank < frozen.expected_rank {
                    expected.push_str(&format!(": {}", show_frozen(frozen)));
                }
                let verdict = if report.fails() {
                    "fails"
                } else {
                    "maximal rank"
                };
                let mut observed = format!("{verdict} at (i={i}, k={k}): {}", show_frozen(&seen));
                if !report.caveats.is_empty() {
                    let names: Vec<String> = report.caveats.iter().map(|c| c.to_string()).collect();
                    observed.push_str(&format!(" [{}]", names.join(", ")));
                }
                (passed, expected, observed, json!({ "report": report }))
            }
            Check::HasWlp { ideal } => {
                let v = slp_scan(&ideal_for(ideal, policy)?, 1, None, *policy)?;
                let observed = if v.has_wlp {
                    "has the WLP".to_string()
                } else {
                    format!("fails at {:?}", v.failures)
                };
                (
                    v.has_wlp,
                    "has the WLP".to_string(),
                    observed,
                    json!({ "scan": v }),
                )
            }
            Check::HasSlp { ideal } => {
                let g = ideal_for(ideal, policy)?;
                let top = match g.is_artinian() {
                    crate::gradedideal::Artinian::Artinian { socle_degree } => socle_degree,
                    crate::gradedideal::Artinian::NotArtinianUpToBound { bound } => bound,
                };
                let v = slp_scan(&g, top.max(1), None, *policy)?;
                let ok = v.has_slp_up_to_k_max;
                let observed = if ok {
                    "has the SLP".to_string()
                } else {
                    format!("fails at {:?}", v.failures)
                };
                (
                    ok,
                    "has the SLP".to_string(),
                    observed,
                    json!({ "scan": v }),
                )
            }
            Check::Th3Scan { orbits, failing } => {
                let scan = th3_exhaustive_scan(*policy)?;
                let passed =
                    scan.orbit_representatives == *orbits && scan.failing.len() == *failing;
                let show = |v: &[(Monomial, Monomial)]| {
                    v.iter()
                        .map(|(a, b)| format!("{{{a}, {b}}}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                (
                    passed,
                    format!("orbits {} ({failing} failing pairs)", show(orbits)),
                    format!(
                        "orbits {} ({} failing pairs)",
                        show(&scan.orbit_representatives),
                        scan.failing.len()
                    ),
                    json!({ "scan": scan }),
                )
            }
            Check::Arrangement {
                lines,
                splitting,
                free,
                fails_slp2,
            } => {
                let split = generic_splitting(lines, policy)?;
                let cert = match free {
                    Some(_) => Some(free_search(&Rationals, lines, policy)?),
                    None => None,
                };
                let bridge = slp2_bridge(lines, policy)?;
                let passed = split.splitting == *splitting
                    && cert.as_ref().map(|c| c.exponents()) == free.map(Some)
                    && bridge.fails_slp2 == *fails_slp2
                    && bridge.agree;
                let free_text = |f: Option<(usize, usize)>| {
                    f.map_or(String::new(), |(a, b)| format!(", free ({a},{b})"))
                };
                let expected = format!(
                    "splitting ({},{}){}, slp2 {}, agree",
                    splitting.a,
                    splitting.b,
                    free_text(*free),
                    if *fails_slp2 { "fails" } else { "holds" }
                );
                let observed = format!(
                    "splitting ({},{}){}, slp2 {}, {}",
                    split.splitting.a,
                    split.splitting.b,
                    free_text(cert.as_ref().and_then(|c| c.exponents())),
                    if bridge.fails_slp2 { "fails" } else { "holds" },
                    if bridge.agree { "agree" } else { "disagree" }
                );
                (
                    passed,
                    expected,
                    observed,
                    json!({ "splitting": split, "freeness": cert, "bridge": bridge }),
                )
            }
        };
        Ok(EntryOutcome {
            name: self.name.clone(),
            about: self.about.clone(),
            passed,
            expected,
            observed,
            detail,
        })
    }
}

pub fn run(name: &str, policy: &TrialPolicy) -> Result<CatalogRun> {
    policy.validate()?;
    let entries = select(name)?
        .iter()
        .map(|e| e.run(policy))
        .collect::<Result<Vec<_>>>()?;
    let passed = entries.iter().filter(|e| e.passed).count();
    Ok(CatalogRun {
        policy: *policy,
        passed,
        failed: entries.len() - passed,
        entries,
    })
}
