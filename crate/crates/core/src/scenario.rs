//! The shipped paradox corpus: fragments with their expected verdicts.

use serde::Serialize;

use crate::audit::{self, AuditReport};
use crate::engine::{Budget, FragmentSpec, Status};
use crate::enumeration::cached_prefix;
use crate::error::{Error, Result};
use crate::substitution::diagonal;
use crate::syntax::{read, ParseMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Extra {
    None,
    Enumeration,
    Diagonal,
}

/// A named fragment together with what running it must show.
#[derive(Debug, Clone, Copy)]
pub struct Scenario {
    pub name: &'static str,
    pub summary: &'static str,
    fragment: &'static str,
    expected: &'static [(&'static str, Status)],
    kinds: &'static [(&'static str, bool)],
    mp_failure: Option<bool>,
    extra: Extra,
}

const R: &str = "{v0 | not (v0 in v0)}";
const CURRY_FALSE: &str =
    "{v0 | v0 in v0 -> not (all v0. (v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)}))}";
const CURRY_TRUE: &str =
    "{v0 | v0 in v0 -> all v0. (v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)})}";
const TAUT: &str = "{v0 | v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)}}";

static SCENARIOS: &[Scenario] = &[
    Scenario {
        name: "russell",
        summary: "Russell's set: r ∈ r and r ∉ r are both minor theses",
        fragment: include_str!("../scenarios/russell.json"),
        expected: &[
            ("{v0 | not (v0 in v0)} in {v0 | not (v0 in v0)}", Status::MinorThesis),
            ("not ({v0 | not (v0 in v0)} in {v0 | not (v0 in v0)})", Status::MinorThesis),
        ],
        kinds: &[(R, false)],
        mp_failure: None,
        extra: Extra::None,
    },
    Scenario {
        name: "curry-false",
        summary: "Curry's set over a stably false sentence behaves as Russell's set",
        fragment: include_str!("../scenarios/curry-false.json"),
        expected: &[
            (
                "{v0 | v0 in v0 -> not (all v0. (v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)}))} in {v0 | v0 in v0 -> not (all v0. (v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)}))}",
                Status::MinorThesis,
            ),
            ("not (all v0. (v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)}))", Status::NonThesis),
        ],
        kinds: &[(CURRY_FALSE, false)],
        mp_failure: Some(true),
        extra: Extra::None,
    },
    Scenario {
        name: "curry-true",
        summary: "Curry's set over a stably true sentence: self-membership is a maxim",
        fragment: include_str!("../scenarios/curry-true.json"),
        expected: &[
            (
                "{v0 | v0 in v0 -> all v0. (v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)})} in {v0 | v0 in v0 -> all v0. (v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)})}",
                Status::MaximThesis,
            ),
            ("all v0. (v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)})", Status::MaximThesis),
        ],
        kinds: &[(CURRY_TRUE, true)],
        mp_failure: Some(false),
        extra: Extra::None,
    },
    Scenario {
        name: "tautology-kind",
        summary: "A set with a tautologous body is a kind whose memberships are maxims",
        fragment: include_str!("../scenarios/tautology-kind.json"),
        expected: &[
            ("T in {v0 | v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)}}", Status::MaximThesis),
            (
                "{v0 | not (v0 in v0)} in {v0 | v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)}}",
                Status::MaximThesis,
            ),
            ("not (T in {v0 | v0 in {v0 | not (v0 in v0)} -> v0 in {v0 | not (v0 in v0)}})", Status::NonThesis),
        ],
        kinds: &[(TAUT, true), (R, false)],
        mp_failure: Some(false),
        extra: Extra::None,
    },
    Scenario {
        name: "enumeration-smoke",
        summary: "Noemata resolve to the first five enumerated cognomina",
        fragment: include_str!("../scenarios/enumeration-smoke.json"),
        expected: &[
            ("v0 in v2", Status::MaximThesis),
            ("v1 in v4", Status::MaximThesis),
            ("v3 in v3", Status::MaximThesis),
            ("v0 = T", Status::MaximThesis),
        ],
        kinds: &[],
        mp_failure: Some(false),
        extra: Extra::Enumeration,
    },
    Scenario {
        name: "diagonal-smoke",
        summary: "A registered liar sentence is minor; the diagonal certificate verifies",
        fragment: include_str!("../scenarios/diagonal-smoke.json"),
        expected: &[("not (nor(T, E) in T)", Status::MinorThesis), ("nor(T, E) in T", Status::MinorThesis)],
        kinds: &[],
        mp_failure: None,
        extra: Extra::Diagonal,
    },
];

pub fn all() -> &'static [Scenario] {
    SCENARIOS
}

pub fn find(name: &str) -> Result<&'static Scenario> {
    SCENARIOS
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownScenario(name.into()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub formula: String,
    pub expected: Status,
    pub found: Status,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KindVerdict {
    pub term: String,
    pub expected: bool,
    pub found: bool,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Note {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScenarioReport {
    pub name: String,
    pub summary: String,
    pub banner: String,
    pub closure: String,
    pub classifications: Vec<Verdict>,
    pub kinds: Vec<KindVerdict>,
    pub notes: Vec<Note>,
    pub audit: AuditReport,
    pub passed: bool,
}

impl ScenarioReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "scenario {}: {}\n{}\nclosure at {}\n",
            self.name, self.summary, self.banner, self.closure
        );
        for v in &self.classifications {
            out.push_str(&format!(
                "  {}: {} (expected {}){}\n",
                v.formula,
                v.found,
                v.expected,
                if v.ok { "" } else { "  MISMATCH" }
            ));
        }
        for k in &self.kinds {
            out.push_str(&format!(
                "  kind {}: {}{}\n",
                k.term,
                k.found,
                if k.ok { "" } else { "  MISMATCH" }
            ));
        }
        for n in &self.notes {
            out.push_str(&format!(
                "  {}: {}{}\n",
                n.label,
                n.detail,
                if n.ok { "" } else { "  FAILED" }
            ));
        }
        out.push_str(&self.audit.to_text());
        out.push_str(if self.passed {
            "result: pass\n"
        } else {
            "result: FAIL\n"
        });
        out
    }
}

impl Scenario {
    pub fn spec(&self) -> Result<FragmentSpec> {
        FragmentSpec::from_json(self.fragment)
    }

    pub fn fragment_json(&self) -> &'static str {
        self.fragment
    }

    pub fn run(&self) -> Result<ScenarioReport> {
        self.run_with(self.spec()?.budget)
    }

    /// Runs under a budget other than the fragment file's own.
    pub fn run_with(&self, budget: Budget) -> Result<ScenarioReport> {
        let mut spec = self.spec()?;
        spec.budget = budget;
        let (trace, report) = audit::audit(&spec)?;
        let closure = trace.converged()?;
        let mut classifications = Vec::new();
        for (text, expected) in self.expected {
            let a = read(text, ParseMode::Formula)?.expr;
            let found = trace.classify(&a)?.status;
            classifications.push(Verdict {
                formula: a.to_string(),
                expected: *expected,
                found,
                ok: found == *expected,
            });
        }
        let mut kinds = Vec::new();
        for (text, expected) in self.kinds {
            let a = read(text, ParseMode::Term)?.expr;
            let found = trace.kind(&a)?;
            kinds.push(KindVerdict {
                term: a.to_string(),
                expected: *expected,
                found,
                ok: found == *expected,
            });
        }
        let mp_witness = &report.mp_witness;
        let mut notes = Vec::new();
        if let Some(want) = self.mp_failure {
            notes.push(Note {
                label: "modus ponens failure".into(),
                ok: mp_witness.is_some() == want,
                detail: format!(
                    "expected {}, found {}",
                    if want { "a witness" } else { "none" },
                    if mp_witness.is_some() {
                        "a witness"
                    } else {
                        "none"
                    }
                ),
            });
        }
        match self.extra {
            Extra::None => {}
            Extra::Enumeration => {
                let prefix = cached_prefix(5)?;
                let values: Vec<String> =
                    prefix.entries.iter().map(|e| e.value.to_string()).collect();
                notes.push(Note {
                    label: "enumeration prefix values".into(),
                    ok: values == ["8", "16", "1160", "2312", "4624"],
                    detail: values.join(", "),
                });
            }
            Extra::Diagonal => {
                let a = read("not (v0 in T)", ParseMode::Formula)?.expr;
                let d = diagonal(&a)?;
                notes.push(Note {
                    label: "diagonal certificate".into(),
                    ok: d.certificate.verified,
                    detail: format!("{} replay steps", d.certificate.steps.len()),
                });
            }
        }
        let passed = classifications.iter().all(|v| v.ok)
            && kinds.iter().all(|k| k.ok)
            && notes.iter().all(|n| n.ok)
            && report.passed();
        Ok(ScenarioReport {
            name: self.name.into(),
            summary: self.summary.into(),
            banner: trace.banner().into(),
            closure: closure.index().to_string(),
            classifications,
            kinds,
            notes,
            audit: report,
            passed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_scenarios_pass() {
        for s in all() {
            let r = s.run().unwrap();
            assert!(r.passed, "{}", r.to_text());
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(find("nope"), Err(Error::UnknownScenario(_))));
    }
}
