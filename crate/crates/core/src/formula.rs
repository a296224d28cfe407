//! Propositional syntax and its Boolean-algebra semantics.
//!
//! [`Formula`] is the rich AST used everywhere in the crate. Evaluation is
//! defined structurally on it; [`Formula::desugar`] rewrites a formula into
//! the minimal core `{⊥, atom, →}` and exists so that the abbreviations can
//! be checked against the direct semantics.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("propositional symbol must not be empty")]
    Empty,
    #[error(
        "invalid propositional symbol {0:?}: expected a letter followed by letters, digits or '_'"
    )]
    Invalid(String),
}

/// A propositional symbol. Two symbols are equal iff their names are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PropSymbol(String);

impl PropSymbol {
    pub fn new(name: impl Into<String>) -> Result<Self, SymbolError> {
        let name = name.into();
        let mut chars = name.chars();
        match chars.next() {
            None => Err(SymbolError::Empty),
            Some(c) if c.is_alphabetic() && chars.all(|c| c.is_alphanumeric() || c == '_') => {
                Ok(PropSymbol(name))
            }
            Some(_) => Err(SymbolError::Invalid(name)),
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for PropSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Shorthand for building symbols in code and tests.
///
/// Panics on an invalid name.
pub fn sym(name: &str) -> PropSymbol {
    PropSymbol::new(name).expect("invalid propositional symbol")
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Falsum,
    Verum,
    Atom(PropSymbol),
    Not(Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(sym(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(phi: Formula) -> Formula {
        Formula::Not(Box::new(phi))
    }

    pub fn or(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Or(Box::new(lhs), Box::new(rhs))
    }

    pub fn and(lhs: Formula, rhs: Formula) -> Formula {
        Formula::And(Box::new(lhs), Box::new(rhs))
    }

    pub fn implies(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Implies(Box::new(lhs), Box::new(rhs))
    }

    pub fn iff(lhs: Formula, rhs: Formula) -> Formula {
        Formula::Iff(Box::new(lhs), Box::new(rhs))
    }

    /// Left-nested conjunction of `parts`; `⊤` when empty.
    pub fn conjunction(parts: impl IntoIterator<Item = Formula>) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::and)
            .unwrap_or(Formula::Verum)
    }

    /// Left-nested disjunction of `parts`; `⊥` when empty.
    pub fn disjunction(parts: impl IntoIterator<Item = Formula>) -> Formula {
        parts
            .into_iter()
            .reduce(Formula::or)
            .unwrap_or(Formula::Falsum)
    }

    /// The propositional symbols occurring in the formula.
    pub fn symbols(&self) -> BTreeSet<PropSymbol> {
        let mut out = BTreeSet::new();
        self.collect_symbols(&mut out);
        out
    }

    fn collect_symbols(&self, out: &mut BTreeSet<PropSymbol>) {
        match self {
            Formula::Falsum | Formula::Verum => {}
            Formula::Atom(p) => {
                out.insert(p.clone());
            }
            Formula::Not(phi) => phi.collect_symbols(out),
            Formula::Or(a, b)
            | Formula::And(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => {
                a.collect_symbols(out);
                b.collect_symbols(out);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Falsum | Formula::Verum | Formula::Atom(_) => 0,
            Formula::Not(phi) => 1 + phi.depth(),
            Formula::Or(a, b)
            | Formula::And(a, b)
            | Formula::Implies(a, b)
            | Formula::Iff(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Rewrites the formula using only `⊥`, atoms and `→`.
    ///
    /// `¬φ ↦ φ→⊥`, `⊤ ↦ ¬⊥`, `φ∨ψ ↦ ¬φ→ψ`, `φ∧ψ ↦ ¬(¬φ∨¬ψ)` and
    /// `φ↔ψ ↦ (φ→ψ)∧(ψ→φ)`, each expanded recursively.
    pub fn desugar(&self) -> Formula {
        match self {
            Formula::Falsum => Formula::Falsum,
            Formula::Atom(p) => Formula::Atom(p.clone()),
            Formula::Verum => core_not(Formula::Falsum),
            Formula::Not(phi) => core_not(phi.desugar()),
            Formula::Implies(a, b) => Formula::implies(a.desugar(), b.desugar()),
            Formula::Or(a, b) => core_or(a.desugar(), b.desugar()),
            Formula::And(a, b) => core_and(a.desugar(), b.desugar()),
            Formula::Iff(a, b) => {
                let (a, b) = (a.desugar(), b.desugar());
                core_and(
                    Formula::implies(a.clone(), b.clone()),
                    Formula::implies(b, a),
                )
            }
        }
    }

    /// True iff the formula uses only `⊥`, atoms and `→`.
    pub fn is_core(&self) -> bool {
        match self {
            Formula::Falsum | Formula::Atom(_) => true,
            Formula::Implies(a, b) => a.is_core() && b.is_core(),
            _ => false,
        }
    }

    /// The interpretation `⟦φ⟧ ∈ {0,1}` under `v`, using saturating
    /// addition (`1 + 1 = 1`).
    pub fn eval(&self, v: &Valuation) -> u8 {
        match self {
            Formula::Falsum => 0,
            Formula::Verum => 1,
            Formula::Atom(p) => v.get(p),
            Formula::Not(phi) => 1 - phi.eval(v),
            Formula::Implies(a, b) => saturate((1 - a.eval(v)) + b.eval(v)),
            Formula::Or(a, b) => saturate(a.eval(v) + b.eval(v)),
            Formula::And(a, b) => a.eval(v) * b.eval(v),
            Formula::Iff(a, b) => u8::from(a.eval(v) == b.eval(v)),
        }
    }
}

fn saturate(x: u8) -> u8 {
    x.min(1)
}

fn core_not(phi: Formula) -> Formula {
    Formula::implies(phi, Formula::Falsum)
}

fn core_or(a: Formula, b: Formula) -> Formula {
    Formula::implies(core_not(a), b)
}

fn core_and(a: Formula, b: Formula) -> Formula {
    core_not(core_or(core_not(a), core_not(b)))
}

/// `V ⊩ φ`.
pub fn satisfies(v: &Valuation, phi: &Formula) -> bool {
    phi.eval(v) == 1
}

/// Assignment of truth values to symbols. Symbols without an entry read as 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Valuation {
    assignments: BTreeMap<PropSymbol, u8>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, p: &PropSymbol) -> u8 {
        self.assignments.get(p).copied().unwrap_or(0)
    }

    pub fn set(&mut self, p: PropSymbol, value: bool) {
        self.assignments.insert(p, u8::from(value));
    }

    pub fn with(mut self, p: PropSymbol, value: bool) -> Self {
        self.set(p, value);
        self
    }

    /// Symbols with an explicit entry, together with their bit.
    pub fn iter(&self) -> impl Iterator<Item = (&PropSymbol, u8)> {
        self.assignments.iter().map(|(p, b)| (p, *b))
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    /// Symbols mapped to 1.
    pub fn true_symbols(&self) -> BTreeSet<PropSymbol> {
        self.iter()
            .filter(|(_, b)| *b == 1)
            .map(|(p, _)| p.clone())
            .collect()
    }
}

impl FromIterator<(PropSymbol, bool)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (PropSymbol, bool)>>(iter: I) -> Self {
        let mut v = Valuation::new();
        for (p, b) in iter {
            v.set(p, b);
        }
        v
    }
}

/// Renders `p=1 q=0 ...` in symbol order.
impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, b) in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{p}={b}")?;
        }
        Ok(())
    }
}
