use std::fmt;

use serde::Serialize;

/// Conditions under which a result is reported but should not be read at face value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Caveat {
    /// Two generators are proportional.
    DuplicateGenerators,
    /// The Hilbert function did not vanish up to the artinian bound.
    NotArtinianUpToBound,
    /// A degree-`i` syzygy exists, so the section-map dictionary does not apply
    /// and no Laplace count is given.
    TheoremHypothesisUnmet,
    /// The ideal was not built from rational generators; no confirmation runs.
    NoConfirmation,
    /// The dual points are collinear and the splitting has `a = 0`.
    CollinearDualPoints,
}

impl Caveat {
    pub fn as_str(&self) -> &'static str {
        match self {
            Caveat::DuplicateGenerators => "duplicate-generators",
            Caveat::NotArtinianUpToBound => "not-artinian-up-to-bound",
            Caveat::TheoremHypothesisUnmet => "theorem-hypothesis-unmet",
            Caveat::NoConfirmation => "no-confirmation",
            Caveat::CollinearDualPoints => "collinear-dual-points",
        }
    }
}

impl fmt::Display for Caveat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn push_unique(list: &mut Vec<Caveat>, c: Caveat) {
    if !list.contains(&c) {
        list.push(c);
    }
}
