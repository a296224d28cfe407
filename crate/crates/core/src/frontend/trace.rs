//! Serializable record of one solver run.
//!
//! Atoms are strings, with `⊤` and `⊥` spelled `top` and `bot`. Sets are
//! arrays listed as `top`, the symbols by name, then `bot`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::horn::HornFormula;
use crate::solver::{extract_model, LiteralSet, Member, SolveOutcome, StepKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "SAT")]
    Sat,
    #[serde(rename = "UNSAT")]
    Unsat,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Sat => "SAT",
            Verdict::Unsat => "UNSAT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    /// Original implication index; `null` for the terminal step.
    pub fired: Option<usize>,
    pub consequent: Option<String>,
    pub set_before: Vec<String>,
    pub set_after: Vec<String>,
    pub remaining: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub input_formula: String,
    pub horn_form: Vec<String>,
    pub steps: Vec<StepRecord>,
    pub final_set: Vec<String>,
    pub verdict: Verdict,
    pub model: Option<BTreeMap<String, u8>>,
    pub step_count: usize,
    pub stopped_early: bool,
    pub shortcut: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("step {step} fires implication {index}, which does not exist")]
    NoSuchImplication { step: usize, index: usize },
    #[error("step {step} fires implication {index} twice")]
    FiredTwice { step: usize, index: usize },
    #[error("step {step} fires implication {index} before its antecedent holds")]
    NotFireable { step: usize, index: usize },
}

fn set_names(set: &LiteralSet) -> Vec<String> {
    set.iter().map(Member::to_string).collect()
}

impl TraceDocument {
    pub fn new(input_formula: String, horn: &HornFormula, outcome: &SolveOutcome) -> Self {
        let model = extract_model(horn, &outcome.final_set).ok().map(|v| {
            v.iter()
                .map(|(p, b)| (p.to_string(), b))
                .collect::<BTreeMap<_, _>>()
        });
        TraceDocument {
            input_formula,
            horn_form: horn.implications().iter().map(|i| i.to_string()).collect(),
            steps: outcome
                .trace
                .iter()
                .map(|s| StepRecord {
                    fired: match s.kind {
                        StepKind::Fired(i) => Some(i),
                        StepKind::Terminal => None,
                    },
                    consequent: s.consequent.as_ref().map(|a| a.to_string()),
                    set_before: set_names(&s.set_before),
                    set_after: set_names(&s.set_after),
                    remaining: s.remaining_after,
                })
                .collect(),
            final_set: set_names(&outcome.final_set),
            verdict: if outcome.satisfiable {
                Verdict::Sat
            } else {
                Verdict::Unsat
            },
            model,
            step_count: outcome.steps,
            stopped_early: outcome.stopped_early,
            shortcut: outcome.shortcut.map(|s| s.to_string()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace documents always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace documents always serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Re-applies the recorded firings to `{⊤}` over `horn` and returns the
    /// resulting set in document order.
    pub fn replay(&self, horn: &HornFormula) -> Result<Vec<String>, ReplayError> {
        let implications = horn.implications();
        let mut fired = vec![false; implications.len()];
        let mut set = LiteralSet::top();
        for (step, record) in self.steps.iter().enumerate() {
            let Some(index) = record.fired else { continue };
            let imp = implications
                .get(index)
                .ok_or(ReplayError::NoSuchImplication { step, index })?;
            if std::mem::replace(&mut fired[index], true) {
                return Err(ReplayError::FiredTwice { step, index });
            }
            if !imp.antecedent.atoms().iter().all(|a| set.contains_atom(a)) {
                return Err(ReplayError::NotFireable { step, index });
            }
            set.insert(Member::from(&imp.consequent));
        }
        Ok(set_names(&set))
    }

    /// Plain-text rendering for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}", self.input_formula);
        let _ = writeln!(out, "horn form:");
        if self.horn_form.is_empty() {
            let _ = writeln!(out, "  (trivially true)");
        }
        for (i, imp) in self.horn_form.iter().enumerate() {
            let _ = writeln!(out, "  [{i}] {imp}");
        }
        if let Some(reason) = &self.shortcut {
            let _ = writeln!(out, "shortcut: {reason}");
        }
        let _ = writeln!(out, "steps:");
        for (n, s) in self.steps.iter().enumerate() {
            let after = format!("{{{}}}", s.set_after.join(", "));
            match s.fired {
                Some(i) => {
                    let _ = writeln!(
                        out,
                        "  {:>3}. fire [{i}] {}  =>  {after}  ({} left)",
                        n + 1,
                        self.horn_form.get(i).map(String::as_str).unwrap_or("?"),
                        s.remaining
                    );
                }
                None => {
                    let how = if self.stopped_early {
                        "stop (bot reached)"
                    } else {
                        "fixpoint"
                    };
                    let _ = writeln!(
                        out,
                        "  {:>3}. {how}  =>  {after}  ({} left)",
                        n + 1,
                        s.remaining
                    );
                }
            }
        }
        let _ = writeln!(out, "final set: {{{}}}", self.final_set.join(", "));
        let _ = writeln!(out, "step count: {}", self.step_count);
        let _ = writeln!(out, "verdict: {}", self.verdict);
        if let Some(model) = &self.model {
            let line: Vec<String> = model.iter().map(|(p, b)| format!("{p}={b}")).collect();
            let _ = writeln!(out, "model: {}", line.join(" "));
        }
        out
    }
}
