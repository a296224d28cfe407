//! Basic Horn clauses and their implication form.
//!
//! A clause with at most one positive literal is rewritten as
//! `C → L`, where `C` is `⊤` or a conjunction of atoms and `L` is an atom
//! (possibly `⊥`):
//!
//! | clause               | implication         |
//! |----------------------|---------------------|
//! | `L`                  | `⊤ → L`             |
//! | `¬L₁ ∨ … ∨ ¬Lₙ`      | `L₁ ∧ … ∧ Lₙ → ⊥`   |
//! | `¬L₁ ∨ … ∨ ¬Lₙ ∨ L`  | `L₁ ∧ … ∧ Lₙ → L`   |

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::formula::{Formula, PropSymbol, Valuation};
use crate::normalform::{
    to_cnf_bounded, Atom, Clause, CnfError, CnfFormula, DEFAULT_CLAUSE_BUDGET,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HornError {
    #[error("clause {clause} has more than one positive literal; the formula is not Horn")]
    NotHorn { clause: usize },
    #[error("clause contains the literal top and must be dropped before rewriting")]
    ContainsTop,
    #[error("clause has {positives} positive literals; at most one is allowed")]
    NotBasicHorn { positives: usize },
    #[error(transparent)]
    Cnf(#[from] CnfError),
}

/// Left-hand side of a Horn implication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Antecedent {
    Top,
    /// Nonempty, duplicate free, in first-occurrence order.
    Conj(Vec<Atom>),
}

impl Antecedent {
    /// Conjunction of `atoms` with duplicates removed. An empty conjunction
    /// is `⊤` and yields [`Antecedent::Top`].
    pub fn conj(atoms: impl IntoIterator<Item = Atom>) -> Antecedent {
        let mut kept: Vec<Atom> = Vec::new();
        for a in atoms {
            if !kept.contains(&a) {
                kept.push(a);
            }
        }
        if kept.is_empty() {
            Antecedent::Top
        } else {
            Antecedent::Conj(kept)
        }
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Antecedent::Top)
    }

    pub fn atoms(&self) -> &[Atom] {
        match self {
            Antecedent::Top => &[],
            Antecedent::Conj(atoms) => atoms,
        }
    }

    pub fn to_formula(&self) -> Formula {
        match self {
            Antecedent::Top => Formula::Verum,
            Antecedent::Conj(atoms) => Formula::conjunction(atoms.iter().map(Atom::to_formula)),
        }
    }
}

impl fmt::Display for Antecedent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Antecedent::Top => f.write_str("top"),
            Antecedent::Conj(atoms) if atoms.len() == 1 => write!(f, "{}", atoms[0]),
            Antecedent::Conj(atoms) => {
                f.write_str("(")?;
                for (i, a) in atoms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" & ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HornImplication {
    pub antecedent: Antecedent,
    pub consequent: Atom,
}

impl HornImplication {
    pub fn new(antecedent: Antecedent, consequent: Atom) -> Self {
        HornImplication {
            antecedent,
            consequent,
        }
    }

    pub fn to_formula(&self) -> Formula {
        Formula::implies(self.antecedent.to_formula(), self.consequent.to_formula())
    }
}

impl fmt::Display for HornImplication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.antecedent, self.consequent)
    }
}

/// An ordered conjunction of Horn implications.
///
/// The empty formula stands for an input whose clauses were all valid; it is
/// trivially true.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct HornFormula {
    implications: Vec<HornImplication>,
}

impl HornFormula {
    pub fn new(implications: Vec<HornImplication>) -> Self {
        HornFormula { implications }
    }

    pub fn trivially_true() -> Self {
        HornFormula::default()
    }

    pub fn implications(&self) -> &[HornImplication] {
        &self.implications
    }

    pub fn len(&self) -> usize {
        self.implications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implications.is_empty()
    }

    pub fn is_trivially_true(&self) -> bool {
        self.implications.is_empty()
    }

    pub fn symbols(&self) -> BTreeSet<PropSymbol> {
        self.implications
            .iter()
            .flat_map(|imp| imp.antecedent.atoms().iter().chain([&imp.consequent]))
            .filter_map(|a| a.symbol().cloned())
            .collect()
    }

    pub fn to_formula(&self) -> Formula {
        Formula::conjunction(self.implications.iter().map(HornImplication::to_formula))
    }

    pub fn eval(&self, v: &Valuation) -> u8 {
        self.to_formula().eval(v)
    }

    /// Copy with the implication at `index` removed.
    pub fn without(&self, index: usize) -> HornFormula {
        let mut implications = self.implications.clone();
        implications.remove(index);
        HornFormula { implications }
    }
}

impl FromIterator<HornImplication> for HornFormula {
    fn from_iter<I: IntoIterator<Item = HornImplication>>(iter: I) -> Self {
        HornFormula::new(iter.into_iter().collect())
    }
}

impl fmt::Display for HornFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.implications.is_empty() {
            return f.write_str("top");
        }
        for (i, imp) in self.implications.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "({imp})")?;
        }
        Ok(())
    }
}

/// At most one positive literal (`⊥` counts as positive).
pub fn is_basic_horn(c: &Clause) -> bool {
    c.positive_count() <= 1
}

/// Rewrites a basic Horn clause as an implication.
///
/// Clauses holding the `⊤` literal are rejected; drop valid clauses first.
/// The empty clause reads as `⊥` and becomes `⊤ → ⊥`.
pub fn basic_to_implication(c: &Clause) -> Result<HornImplication, HornError> {
    if c.contains_top() {
        return Err(HornError::ContainsTop);
    }
    let positives = c.positive_count();
    if positives > 1 {
        return Err(HornError::NotBasicHorn { positives });
    }
    let consequent = c
        .literals()
        .iter()
        .find(|l| l.is_positive())
        .map(|l| l.atom.clone())
        .unwrap_or(Atom::Bottom);
    let antecedent = Antecedent::conj(
        c.literals()
            .iter()
            .filter(|l| !l.is_positive())
            .map(|l| l.atom.clone()),
    );
    Ok(HornImplication::new(antecedent, consequent))
}

/// Horn form of an already converted CNF. `NotHorn` carries the index of
/// the first offending clause in `cnf`.
pub fn horn_from_cnf(cnf: &CnfFormula) -> Result<HornFormula, HornError> {
    let mut implications = Vec::with_capacity(cnf.len());
    for (index, clause) in cnf.clauses().iter().enumerate() {
        if clause.contains_top() {
            continue;
        }
        if !is_basic_horn(clause) {
            return Err(HornError::NotHorn { clause: index });
        }
        implications.push(basic_to_implication(clause)?);
    }
    Ok(HornFormula::new(implications))
}

/// CNF conversion followed by the Horn rewrite, with the default clause
/// budget.
pub fn horn_from_formula(phi: &Formula) -> Result<HornFormula, HornError> {
    horn_from_formula_bounded(phi, DEFAULT_CLAUSE_BUDGET)
}

pub fn horn_from_formula_bounded(phi: &Formula, budget: usize) -> Result<HornFormula, HornError> {
    horn_from_cnf(&to_cnf_bounded(phi, budget)?)
}
