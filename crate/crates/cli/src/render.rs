use std::fmt::Write;
use std::time::Duration;

use lefkit::arrangements::{
    BridgeReport, FreenessCertificate, FreenessStatus, SplittingReport, TeraoReport,
};
use lefkit::catalog::{CatalogEntry, CatalogRun};
use lefkit::exactlin::FieldSpec;
use lefkit::gradedideal::Artinian;
use lefkit::lefschetz::{LaplaceReport, MultMapReport, SlpVerdict};
use lefkit::Caveat;

fn opt(v: Option<usize>) -> String {
    v.map_or("-".into(), |d| d.to_string())
}

fn field_list(fields: &[FieldSpec]) -> String {
    fields
        .iter()
        .map(|f| match f {
            FieldSpec::Prime(p) => format!("F_{p}"),
            FieldSpec::Rational => "Q".into(),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn caveats(out: &mut String, list: &[Caveat]) {
    if !list.is_empty() {
        let names: Vec<&str> = list.iter().map(Caveat::as_str).collect();
        writeln!(out, "caveats: {}", names.join(", ")).unwrap();
    }
}

fn table(out: &mut String, reports: &[MultMapReport]) {
    writeln!(
        out,
        "{:>3} {:>3} {:>7} {:>9} {:>6} {:>8}  {:<8} {:>5}",
        "i", "k", "h_A(i)", "h_A(i+k)", "rank", "expected", "verdict", "delta"
    )
    .unwrap();
    for r in reports {
        let verdict = if r.fails() { "FAILS" } else { "ok" };
        writeln!(
            out,
            "{:>3} {:>3} {:>7} {:>9} {:>6} {:>8}  {:<8} {:>5}",
            r.i,
            r.k,
            r.dim_source,
            r.dim_target,
            r.observed_rank,
            r.expected_rank,
            verdict,
            opt(r.delta())
        )
        .unwrap();
    }
}

pub fn scan(v: &SlpVerdict, wlp_only: bool) -> String {
    let mut out = String::new();
    let hs: Vec<String> = v.hilbert.iter().map(usize::to_string).collect();
    writeln!(out, "hilbert function: {}", hs.join(" ")).unwrap();
    match v.artinian {
        Artinian::Artinian { socle_degree } => {
            writeln!(out, "artinian, socle degree {socle_degree}").unwrap()
        }
        Artinian::NotArtinianUpToBound { bound } => {
            writeln!(out, "not artinian up to degree {bound}").unwrap()
        }
    }
    table(&mut out, &v.reports);
    let cells: Vec<String> = v
        .failures
        .iter()
        .map(|f| format!("(i={}, k={})", f.i, f.k))
        .collect();
    if wlp_only {
        if v.has_wlp {
            writeln!(out, "has the WLP").unwrap();
        } else {
            let degrees: Vec<String> = v.failures.iter().map(|f| f.i.to_string()).collect();
            writeln!(out, "fails the WLP in degree {}", degrees.join(", ")).unwrap();
        }
    } else if v.has_slp_up_to_k_max {
        writeln!(
            out,
            "no failure up to range {} in degrees {}..{}",
            v.k_max, v.degrees.0, v.degrees.1
        )
        .unwrap();
    } else {
        writeln!(out, "fails at {}", cells.join(" ")).unwrap();
    }
    caveats(&mut out, &v.caveats);
    out
}

pub fn laplace(r: &LaplaceReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "syzygy degree i = {}, range k = {}, order d+i-k = {}",
        r.i, r.k, r.order
    )
    .unwrap();
    let n = &r.nbook;
    writeln!(
        out,
        "N = {} (N+ = {}, N- = {}), syzygies in degree {}: {}",
        n.n, n.nplus, n.nminus, r.i, r.syzygy_dim
    )
    .unwrap();
    table(&mut out, std::slice::from_ref(&r.report));
    match r.delta {
        Some(d) => writeln!(out, "delta = {d}").unwrap(),
        None => writeln!(out, "delta undefined: a syzygy of degree {} exists", r.i).unwrap(),
    }
    writeln!(out, "fields: {}", field_list(&r.report.fields)).unwrap();
    caveats(&mut out, &r.report.caveats);
    out
}

pub fn perp(degree: usize, field: &FieldSpec, basis: &[String]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "dim of the perp in degree {degree}: {} (over {})",
        basis.len(),
        field_list(std::slice::from_ref(field))
    )
    .unwrap();
    for b in basis {
        writeln!(out, "  {b}").unwrap();
    }
    out
}

pub fn splitting(r: &SplittingReport) -> String {
    let mut out = String::new();
    let s = r.splitting;
    writeln!(out, "{} lines, splitting ({}, {})", r.points, s.a, s.b).unwrap();
    writeln!(
        out,
        "{}",
        if s.is_unstable() {
            "unstable"
        } else {
            "semistable"
        }
    )
    .unwrap();
    caveats(&mut out, &r.caveats);
    out
}

pub fn freeness(c: &FreenessCertificate) -> String {
    let mut out = String::new();
    match &c.status {
        FreenessStatus::Free { a, b } => writeln!(out, "free with exponents ({a}, {b})").unwrap(),
        FreenessStatus::NotFree { evidence } => writeln!(out, "not free: {evidence}").unwrap(),
        FreenessStatus::Undetermined { evidence } => {
            writeln!(out, "undetermined: {evidence}").unwrap()
        }
    }
    if let Some(w) = &c.witness {
        writeln!(out, "theta1 = ({})", w.theta1.join(", ")).unwrap();
        writeln!(out, "theta2 = ({})", w.theta2.join(", ")).unwrap();
        writeln!(out, "det = {} * f", w.c).unwrap();
    }
    if !c.h0_table.is_empty() {
        let cells: Vec<String> = c.h0_table.iter().map(|(e, h)| format!("{e}:{h}")).collect();
        writeln!(out, "h0(D0(e)): {}", cells.join(" ")).unwrap();
    }
    out
}

pub fn bridge(r: &BridgeReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "d = {}, splitting ({}, {})",
        r.d, r.splitting.a, r.splitting.b
    )
    .unwrap();
    table(&mut out, std::slice::from_ref(&r.report));
    writeln!(
        out,
        "SLP at range 2 in degree {}: {}; bundle {}; {}",
        r.d - 2,
        if r.fails_slp2 { "fails" } else { "holds" },
        if r.unstable { "unstable" } else { "semistable" },
        if r.agree { "agree" } else { "DISAGREE" }
    )
    .unwrap();
    caveats(&mut out, &r.report.caveats);
    out
}

pub fn terao(r: &TeraoReport) -> String {
    let mut out = String::new();
    let (a, b) = r.exponents;
    writeln!(
        out,
        "free side exponents ({a}, {b}); padded with {} lines",
        r.padding.len()
    )
    .unwrap();
    for (name, rep) in [("free", &r.free_side), ("other", &r.other_side)] {
        writeln!(
            out,
            "{name}: {}",
            if rep.fails() { "fails" } else { "holds" }
        )
        .unwrap();
    }
    writeln!(
        out,
        "{}",
        if r.agree {
            "same verdict"
        } else {
            "verdicts differ"
        }
    )
    .unwrap();
    out
}

pub fn catalog_list(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    for e in entries {
        writeln!(out, "{:<width$}  {}", e.name, e.about).unwrap();
    }
    out
}

pub fn catalog_run(run: &CatalogRun, elapsed: Duration) -> String {
    let mut out = String::new();
    let width = run.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    for e in &run.entries {
        let tag = if e.passed { "PASS" } else { "MISMATCH" };
        writeln!(out, "{:<width$}  {:<8}  {}", e.name, tag, e.observed).unwrap();
        if !e.passed {
            writeln!(out, "{:<width$}  {:<8}  expected {}", "", "", e.expected).unwrap();
        }
    }
    writeln!(
        out,
        "{} passed, {} mismatched in {:.2}s",
        run.passed,
        run.failed,
        elapsed.as_secs_f64()
    )
    .unwrap();
    out
}
