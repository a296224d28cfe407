//! Recursive Horn satisfiability.
//!
//! Starting from `{⊤}`, an implication whose antecedent atoms are all in the
//! current set fires: its consequent joins the set and the implication is
//! removed. When nothing fires the accumulated set is returned. The formula
//! is satisfiable iff `⊥` never enters the set, and the symbols in the final
//! set form its least model.
//!
//! Selection is deterministic: the leftmost fireable implication wins.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::formula::{PropSymbol, Valuation};
use crate::horn::{Antecedent, HornFormula, HornImplication};
use crate::normalform::Atom;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("bot is in the final set; the formula has no model")]
    BottomInFinalSet,
}

/// Element of a literal set: `⊤`, a symbol, or `⊥`.
///
/// Ordered as `⊤ < symbols < ⊥`, which is how sets are listed in traces.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Member {
    Top,
    Sym(PropSymbol),
    Bottom,
}

impl From<Atom> for Member {
    fn from(a: Atom) -> Self {
        match a {
            Atom::Bottom => Member::Bottom,
            Atom::Sym(p) => Member::Sym(p),
        }
    }
}

impl From<&Atom> for Member {
    fn from(a: &Atom) -> Self {
        a.clone().into()
    }
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Member::Top => f.write_str("top"),
            Member::Sym(p) => write!(f, "{p}"),
            Member::Bottom => f.write_str("bot"),
        }
    }
}

/// A set of atoms that always contains `⊤`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiteralSet {
    members: BTreeSet<Member>,
}

impl Default for LiteralSet {
    fn default() -> Self {
        LiteralSet::top()
    }
}

impl LiteralSet {
    /// `{⊤}`.
    pub fn top() -> Self {
        LiteralSet {
            members: BTreeSet::from([Member::Top]),
        }
    }

    /// `{⊤} ∪ members`.
    pub fn with_members(members: impl IntoIterator<Item = Member>) -> Self {
        let mut set = LiteralSet::top();
        set.members.extend(members);
        set
    }

    pub fn insert(&mut self, m: Member) -> bool {
        self.members.insert(m)
    }

    pub fn contains(&self, m: &Member) -> bool {
        self.members.contains(m)
    }

    pub fn contains_atom(&self, a: &Atom) -> bool {
        self.members.contains(&Member::from(a))
    }

    pub fn contains_bottom(&self) -> bool {
        self.members.contains(&Member::Bottom)
    }

    pub fn is_subset(&self, other: &LiteralSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = &Member> {
        self.members.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &PropSymbol> {
        self.members.iter().filter_map(|m| match m {
            Member::Sym(p) => Some(p),
            _ => None,
        })
    }

    pub fn as_set(&self) -> &BTreeSet<Member> {
        &self.members
    }

    fn admits(&self, antecedent: &Antecedent) -> bool {
        match antecedent {
            Antecedent::Top => true,
            Antecedent::Conj(atoms) => atoms.iter().all(|a| self.contains(&Member::from(a))),
        }
    }
}

impl FromIterator<Member> for LiteralSet {
    fn from_iter<I: IntoIterator<Item = Member>>(iter: I) -> Self {
        LiteralSet::with_members(iter)
    }
}

impl fmt::Display for LiteralSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, m) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// The atoms an antecedent requires: `{⊤}` for `⊤`, else its conjuncts.
pub fn antecedent_atoms(a: &Antecedent) -> BTreeSet<Member> {
    match a {
        Antecedent::Top => BTreeSet::from([Member::Top]),
        Antecedent::Conj(atoms) => atoms.iter().map(Member::from).collect(),
    }
}

/// Result of a single firing attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// `index` is the position in the formula that was passed in.
    Fired {
        index: usize,
        remaining: HornFormula,
        set: LiteralSet,
    },
    Fixpoint,
}

/// Fires the leftmost implication whose antecedent is contained in `set`.
pub fn step(remaining: &HornFormula, set: &LiteralSet) -> Step {
    match first_fireable(remaining.implications().iter().enumerate(), set) {
        Some(index) => {
            let mut next = set.clone();
            next.insert(Member::from(&remaining.implications()[index].consequent));
            Step::Fired {
                index,
                remaining: remaining.without(index),
                set: next,
            }
        }
        None => Step::Fixpoint,
    }
}

fn first_fireable<'a>(
    candidates: impl Iterator<Item = (usize, &'a HornImplication)>,
    set: &LiteralSet,
) -> Option<usize> {
    candidates
        .filter(|(_, imp)| set.admits(&imp.antecedent))
        .map(|(i, _)| i)
        .next()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// Index into the original implication sequence.
    Fired(usize),
    Terminal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub kind: StepKind,
    /// Consequent of the fired implication; `None` for the terminal step.
    pub consequent: Option<Atom>,
    pub set_before: LiteralSet,
    pub set_after: LiteralSet,
    pub remaining_after: usize,
}

/// The accumulated set of one run together with how it was reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Saturation {
    pub set: LiteralSet,
    /// Empty when the run was asked not to record a trace.
    pub trace: Vec<TraceStep>,
    /// Firings plus the terminal step.
    pub steps: usize,
    /// The run halted as soon as `⊥` entered the set.
    pub stopped_early: bool,
}

impl Saturation {
    /// Original indices of the fired implications, in firing order.
    pub fn firing_order(&self) -> Vec<usize> {
        self.trace
            .iter()
            .filter_map(|s| match s.kind {
                StepKind::Fired(i) => Some(i),
                StepKind::Terminal => None,
            })
            .collect()
    }
}

/// Runs the firing loop from `start` until nothing fires, recording a trace.
pub fn saturate(phi: &HornFormula, start: LiteralSet, early_stop: bool) -> Saturation {
    run(phi, start, early_stop, true)
}

fn run(phi: &HornFormula, start: LiteralSet, early_stop: bool, record: bool) -> Saturation {
    let implications = phi.implications();
    // Original positions of the implications not yet fired.
    let mut remaining: Vec<usize> = (0..implications.len()).collect();
    let mut set = start;
    let mut trace = Vec::new();
    let mut steps = 0;
    let mut stopped_early = false;

    while let Some(pos) = first_fireable(
        remaining.iter().map(|&i| &implications[i]).enumerate(),
        &set,
    ) {
        let index = remaining.remove(pos);
        let consequent = implications[index].consequent.clone();
        let before = record.then(|| set.clone());
        set.insert(Member::from(&consequent));
        steps += 1;
        if let Some(set_before) = before {
            trace.push(TraceStep {
                kind: StepKind::Fired(index),
                consequent: Some(consequent),
                set_before,
                set_after: set.clone(),
                remaining_after: remaining.len(),
            });
        }
        if early_stop && set.contains_bottom() {
            stopped_early = true;
            break;
        }
    }

    steps += 1;
    if record {
        trace.push(TraceStep {
            kind: StepKind::Terminal,
            consequent: None,
            set_before: set.clone(),
            set_after: set.clone(),
            remaining_after: remaining.len(),
        });
    }
    Saturation {
        set,
        trace,
        steps,
        stopped_early,
    }
}

/// Why a formula is known satisfiable without running the loop. At least
/// one flag is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shortcut {
    /// No implication concludes `⊥`, so `⊥` can never enter the set.
    pub no_bottom_consequent: bool,
    /// No implication has antecedent `⊤`, so nothing fires from `{⊤}`.
    pub no_top_antecedent: bool,
}

impl fmt::Display for Shortcut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut reasons = Vec::new();
        if self.no_bottom_consequent {
            reasons.push("no implication has consequent bot");
        }
        if self.no_top_antecedent {
            reasons.push("no implication has antecedent top");
        }
        f.write_str(&reasons.join("; "))
    }
}

/// Syntactic satisfiability shortcuts; `None` when neither applies.
pub fn precheck(phi: &HornFormula) -> Option<Shortcut> {
    let implications = phi.implications();
    let shortcut = Shortcut {
        no_bottom_consequent: implications.iter().all(|i| i.consequent != Atom::Bottom),
        no_top_antecedent: implications.iter().all(|i| !i.antecedent.is_top()),
    };
    (shortcut.no_bottom_consequent || shortcut.no_top_antecedent).then_some(shortcut)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Stop as soon as `⊥` enters the set.
    pub early_stop: bool,
    /// Consult [`precheck`] before running.
    pub precheck: bool,
    /// Keep a [`TraceStep`] per step.
    pub record_trace: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            early_stop: false,
            precheck: false,
            record_trace: true,
        }
    }
}

impl SolverConfig {
    /// Settings used by the command line: early stop and precheck on.
    pub fn fast() -> Self {
        SolverConfig {
            early_stop: true,
            precheck: true,
            record_trace: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutcome {
    /// `⊥` is absent from the final set.
    pub satisfiable: bool,
    pub final_set: LiteralSet,
    pub trace: Vec<TraceStep>,
    pub steps: usize,
    pub stopped_early: bool,
    pub shortcut: Option<Shortcut>,
}

impl SolveOutcome {
    /// The decision as a bit: 1 for satisfiable, 0 for contradictory.
    pub fn h(&self) -> u8 {
        u8::from(self.satisfiable)
    }
}

/// Decides satisfiability of `phi` by running from `{⊤}`.
///
/// With `precheck` on and no `⊤` antecedent present the run is skipped
/// entirely: the final set is `{⊤}` after the single terminal step. When
/// only the no-`⊥`-consequent shortcut applies the loop still runs so that
/// the least model is available.
pub fn decide(phi: &HornFormula, config: &SolverConfig) -> SolveOutcome {
    let shortcut = if config.precheck { precheck(phi) } else { None };
    if let Some(sc) = shortcut.filter(|sc| sc.no_top_antecedent) {
        let set = LiteralSet::top();
        let trace = if config.record_trace {
            vec![TraceStep {
                kind: StepKind::Terminal,
                consequent: None,
                set_before: set.clone(),
                set_after: set.clone(),
                remaining_after: phi.len(),
            }]
        } else {
            Vec::new()
        };
        return SolveOutcome {
            satisfiable: true,
            final_set: set,
            trace,
            steps: 1,
            stopped_early: false,
            shortcut: Some(sc),
        };
    }

    let sat = run(
        phi,
        LiteralSet::top(),
        config.early_stop,
        config.record_trace,
    );
    SolveOutcome {
        satisfiable: !sat.set.contains_bottom(),
        final_set: sat.set,
        trace: sat.trace,
        steps: sat.steps,
        stopped_early: sat.stopped_early,
        shortcut,
    }
}

/// The least model read off a final set: symbols in the set are 1, the
/// remaining symbols of `phi` are 0.
pub fn extract_model(phi: &HornFormula, final_set: &LiteralSet) -> Result<Valuation, SolverError> {
    if final_set.contains_bottom() {
        return Err(SolverError::BottomInFinalSet);
    }
    let mut v: Valuation = phi.symbols().into_iter().map(|p| (p, false)).collect();
    for p in final_set.symbols() {
        v.set(p.clone(), true);
    }
    Ok(v)
}
