//! Verdicts on the abelian-level conditions that certify a singular
//! equivalence, bound checks for perpendicular quotients, and the two-vertex
//! Nakayama report.
//!
//! No triangulated category is ever built: a passing bundle states that the
//! hypotheses of the equivalence theorem were verified on the instance.

mod bounds;
mod example;
mod finiteness;

use serde::Serialize;

use crate::algebra::homological::HomDim;
use crate::lincat::resolution::DimRecord;

pub use bounds::{ar_duality_check, injectives_as_ext_check, perp_quotient_bounds, stable_gd_check};
pub use example::{displayed_i3_terms, family_report, quotient_summary, FamilyCheck, FamilyReport, I3Report, QuotientSummary};
pub use finiteness::{ab_conditions_certificate, quotient_functor_pd_check, restriction_pd_check, singular_equivalence_certificate, SingEqBundle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    /// Only produced when a cutoff truncated a computation.
    Inconclusive,
}

impl Verdict {
    /// Process exit status: 0 pass, 1 fail, 3 inconclusive.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 3,
        }
    }

    /// `Fail` dominates `Inconclusive`, which dominates `Pass`.
    pub fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    /// Pass when finite, fail when infinite, inconclusive when unknown.
    pub fn from_dim(d: HomDim) -> Verdict {
        match d {
            HomDim::Finite(_) => Verdict::Pass,
            HomDim::Infinite => Verdict::Fail,
            HomDim::Unknown => Verdict::Inconclusive,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A resolution deciding a homological dimension.
    Resolution(DimRecord),
    /// Named measured numbers for one subject.
    Numbers { subject: String, values: Vec<(String, usize)> },
    /// A search result: the object found for `subject`, if any.
    Match { subject: String, matched: Option<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub condition: String,
    pub verdict: Verdict,
    pub params: Vec<(String, usize)>,
    pub witnesses: Vec<Witness>,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl Certificate {
    pub fn new(condition: impl Into<String>) -> Self {
        Certificate {
            condition: condition.into(),
            verdict: Verdict::Pass,
            params: Vec::new(),
            witnesses: Vec::new(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: usize) -> Self {
        self.params.push((key.to_string(), value));
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    /// Records a violation and marks the certificate failed.
    pub fn violate(&mut self, text: impl Into<String>) {
        self.violations.push(text.into());
        self.verdict = self.verdict.and(Verdict::Fail);
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Resolution records among the witnesses.
    pub fn records(&self) -> impl Iterator<Item = &DimRecord> {
        self.witnesses.iter().filter_map(|w| match w {
            Witness::Resolution(r) => Some(r),
            _ => None,
        })
    }

    /// One line per certificate, then indented violations and notes.
    pub fn render(&self) -> String {
        let mut s = format!("{:<28} {}", self.condition, self.verdict);
        if !self.params.is_empty() {
            let p: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            s.push_str(&format!("  ({})", p.join(", ")));
        }
        s.push('\n');
        for v in &self.violations {
            s.push_str(&format!("    violation: {v}\n"));
        }
        for n in &self.notes {
            s.push_str(&format!("    note: {n}\n"));
        }
        s
    }
}
