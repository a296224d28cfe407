//! Literals, clauses and conversion to conjunctive normal form.
//!
//! Conversion is equivalence preserving: no auxiliary symbols are
//! introduced, so the result can blow up exponentially. Clause and literal
//! order follow the source formula left to right.

use std::fmt;

use thiserror::Error;

use crate::formula::{Formula, PropSymbol, Valuation};

/// Conversion stops once this many clauses would be produced.
pub const DEFAULT_CLAUSE_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("CNF conversion exceeds the clause budget of {budget}")]
    ClauseBudgetExceeded { budget: usize },
}

/// An atomic formula: a propositional symbol or `⊥`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Bottom,
    Sym(PropSymbol),
}

impl Atom {
    pub fn symbol(&self) -> Option<&PropSymbol> {
        match self {
            Atom::Bottom => None,
            Atom::Sym(p) => Some(p),
        }
    }

    pub fn to_formula(&self) -> Formula {
        match self {
            Atom::Bottom => Formula::Falsum,
            Atom::Sym(p) => Formula::Atom(p.clone()),
        }
    }

    pub fn eval(&self, v: &Valuation) -> u8 {
        match self {
            Atom::Bottom => 0,
            Atom::Sym(p) => v.get(p),
        }
    }
}

impl From<PropSymbol> for Atom {
    fn from(p: PropSymbol) -> Self {
        Atom::Sym(p)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Bottom => f.write_str("bot"),
            Atom::Sym(p) => write!(f, "{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Polarity {
    Positive,
    Negative,
}

/// An atom or its negation. `⊤` is the negative literal over `⊥`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub atom: Atom,
    pub polarity: Polarity,
}

impl Literal {
    pub fn positive(atom: Atom) -> Self {
        Literal {
            atom,
            polarity: Polarity::Positive,
        }
    }

    pub fn negative(atom: Atom) -> Self {
        Literal {
            atom,
            polarity: Polarity::Negative,
        }
    }

    pub fn bottom() -> Self {
        Literal::positive(Atom::Bottom)
    }

    pub fn top() -> Self {
        Literal::negative(Atom::Bottom)
    }

    pub fn is_positive(&self) -> bool {
        self.polarity == Polarity::Positive
    }

    pub fn is_top(&self) -> bool {
        self.atom == Atom::Bottom && self.polarity == Polarity::Negative
    }

    pub fn is_bottom(&self) -> bool {
        self.atom == Atom::Bottom && self.polarity == Polarity::Positive
    }

    pub fn negated(&self) -> Self {
        Literal {
            atom: self.atom.clone(),
            polarity: match self.polarity {
                Polarity::Positive => Polarity::Negative,
                Polarity::Negative => Polarity::Positive,
            },
        }
    }

    pub fn is_complement_of(&self, other: &Literal) -> bool {
        self.atom == other.atom && self.polarity != other.polarity
    }

    pub fn to_formula(&self) -> Formula {
        match (self.polarity, &self.atom) {
            (Polarity::Positive, atom) => atom.to_formula(),
            (Polarity::Negative, Atom::Bottom) => Formula::Verum,
            (Polarity::Negative, atom) => Formula::not(atom.to_formula()),
        }
    }

    pub fn eval(&self, v: &Valuation) -> u8 {
        match self.polarity {
            Polarity::Positive => self.atom.eval(v),
            Polarity::Negative => 1 - self.atom.eval(v),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_top() {
            f.write_str("top")
        } else if self.is_positive() {
            write!(f, "{}", self.atom)
        } else {
            write!(f, "~{}", self.atom)
        }
    }
}

/// A disjunction of literals, in source order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Clause {
    literals: Vec<Literal>,
}

impl Clause {
    pub fn new(literals: Vec<Literal>) -> Self {
        Clause { literals }
    }

    pub fn literals(&self) -> &[Literal] {
        &self.literals
    }

    pub fn len(&self) -> usize {
        self.literals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.literals.is_empty()
    }

    pub fn positive_count(&self) -> usize {
        self.literals.iter().filter(|l| l.is_positive()).count()
    }

    pub fn contains_top(&self) -> bool {
        self.literals.iter().any(Literal::is_top)
    }

    /// A disjunction of literals is valid iff it contains `⊤` or a
    /// complementary pair.
    pub fn is_valid(&self) -> bool {
        self.contains_top()
            || self
                .literals
                .iter()
                .enumerate()
                .any(|(i, a)| self.literals[i + 1..].iter().any(|b| a.is_complement_of(b)))
    }

    /// Every literal is `⊥` (vacuously true for the empty clause).
    pub fn is_contradictory(&self) -> bool {
        self.literals.iter().all(Literal::is_bottom)
    }

    /// Saturated sum over the literals.
    pub fn eval(&self, v: &Valuation) -> u8 {
        u8::from(self.literals.iter().any(|l| l.eval(v) == 1))
    }

    pub fn to_formula(&self) -> Formula {
        Formula::disjunction(self.literals.iter().map(Literal::to_formula))
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.literals.is_empty() {
            return f.write_str("()");
        }
        f.write_str("(")?;
        for (i, l) in self.literals.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// Outcome of the syntactic validity check on a CNF.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuickClass {
    Valid,
    Contradictory,
    Unknown,
}

/// A conjunction of clauses, in source order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CnfFormula {
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(clauses: Vec<Clause>) -> Self {
        CnfFormula { clauses }
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Product over the clauses.
    pub fn eval(&self, v: &Valuation) -> u8 {
        self.clauses.iter().map(|c| c.eval(v)).product()
    }

    pub fn to_formula(&self) -> Formula {
        Formula::conjunction(self.clauses.iter().map(Clause::to_formula))
    }

    /// Valid when every clause is valid, contradictory when some clause is
    /// made of `⊥` alone; anything else needs a real decision procedure.
    pub fn quick_classify(&self) -> QuickClass {
        if self.clauses.iter().all(Clause::is_valid) {
            QuickClass::Valid
        } else if self.clauses.iter().any(Clause::is_contradictory) {
            QuickClass::Contradictory
        } else {
            QuickClass::Unknown
        }
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.clauses.iter().enumerate() {
            if i > 0 {
                f.write_str(" & ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Converts `phi` to an equivalent CNF with no clause budget.
pub fn to_cnf(phi: &Formula) -> CnfFormula {
    to_cnf_bounded(phi, usize::MAX).expect("unbounded conversion cannot exceed its budget")
}

/// Converts `phi` to an equivalent CNF, failing once more than `budget`
/// clauses would be produced at any stage.
pub fn to_cnf_bounded(phi: &Formula, budget: usize) -> Result<CnfFormula, CnfError> {
    let raw = cnf_of(phi, true, budget)?;
    let clauses: Vec<Clause> = raw.into_iter().filter_map(simplify_clause).collect();
    if clauses.is_empty() {
        return Ok(CnfFormula::new(vec![Clause::new(vec![Literal::top()])]));
    }
    Ok(CnfFormula::new(clauses))
}

type RawCnf = Vec<Vec<Literal>>;

// Clauses of `phi` (positive) or of `¬phi` (negative), with negation pushed
// to the atoms on the way down.
fn cnf_of(phi: &Formula, positive: bool, budget: usize) -> Result<RawCnf, CnfError> {
    match (phi, positive) {
        (Formula::Falsum, true) | (Formula::Verum, false) => Ok(vec![vec![Literal::bottom()]]),
        (Formula::Verum, true) | (Formula::Falsum, false) => Ok(vec![vec![Literal::top()]]),
        (Formula::Atom(p), true) => Ok(vec![vec![Literal::positive(Atom::Sym(p.clone()))]]),
        (Formula::Atom(p), false) => Ok(vec![vec![Literal::negative(Atom::Sym(p.clone()))]]),
        (Formula::Not(inner), _) => cnf_of(inner, !positive, budget),
        (Formula::And(a, b), true) => {
            conjoin(cnf_of(a, true, budget)?, cnf_of(b, true, budget)?, budget)
        }
        (Formula::Or(a, b), false) => {
            conjoin(cnf_of(a, false, budget)?, cnf_of(b, false, budget)?, budget)
        }
        (Formula::Or(a, b), true) => {
            distribute(cnf_of(a, true, budget)?, cnf_of(b, true, budget)?, budget)
        }
        (Formula::And(a, b), false) => {
            distribute(cnf_of(a, false, budget)?, cnf_of(b, false, budget)?, budget)
        }
        // a → b  ≡  ¬a ∨ b;  ¬(a → b)  ≡  a ∧ ¬b
        (Formula::Implies(a, b), true) => {
            distribute(cnf_of(a, false, budget)?, cnf_of(b, true, budget)?, budget)
        }
        (Formula::Implies(a, b), false) => {
            conjoin(cnf_of(a, true, budget)?, cnf_of(b, false, budget)?, budget)
        }
        // a ↔ b  ≡  (¬a ∨ b) ∧ (¬b ∨ a)
        (Formula::Iff(a, b), true) => {
            let forward = distribute(cnf_of(a, false, budget)?, cnf_of(b, true, budget)?, budget)?;
            let backward = distribute(cnf_of(b, false, budget)?, cnf_of(a, true, budget)?, budget)?;
            conjoin(forward, backward, budget)
        }
        // ¬(a ↔ b)  ≡  (a ∨ b) ∧ (¬a ∨ ¬b)
        (Formula::Iff(a, b), false) => {
            let either = distribute(cnf_of(a, true, budget)?, cnf_of(b, true, budget)?, budget)?;
            let not_both =
                distribute(cnf_of(a, false, budget)?, cnf_of(b, false, budget)?, budget)?;
            conjoin(either, not_both, budget)
        }
    }
}

fn conjoin(mut lhs: RawCnf, rhs: RawCnf, budget: usize) -> Result<RawCnf, CnfError> {
    if lhs.len().saturating_add(rhs.len()) > budget {
        return Err(CnfError::ClauseBudgetExceeded { budget });
    }
    lhs.extend(rhs);
    Ok(lhs)
}

fn distribute(lhs: RawCnf, rhs: RawCnf, budget: usize) -> Result<RawCnf, CnfError> {
    if lhs.len().saturating_mul(rhs.len()) > budget {
        return Err(CnfError::ClauseBudgetExceeded { budget });
    }
    let mut out = Vec::with_capacity(lhs.len() * rhs.len());
    for a in &lhs {
        for b in &rhs {
            let mut clause = a.clone();
            clause.extend(b.iter().cloned());
            out.push(clause);
        }
    }
    Ok(out)
}

// Drops clauses holding `⊤`, duplicate literals, and `⊥` next to other
// literals. Complementary pairs are left alone.
fn simplify_clause(literals: Vec<Literal>) -> Option<Clause> {
    if literals.iter().any(Literal::is_top) {
        return None;
    }
    let mut kept: Vec<Literal> = Vec::with_capacity(literals.len());
    for l in literals {
        if !kept.contains(&l) {
            kept.push(l);
        }
    }
    if kept.len() > 1 {
        kept.retain(|l| !l.is_bottom());
    }
    Some(Clause::new(kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::sym;

    fn pos(name: &str) -> Literal {
        Literal::positive(Atom::Sym(sym(name)))
    }
    fn neg(name: &str) -> Literal {
        Literal::negative(Atom::Sym(sym(name)))
    }
    fn a(name: &str) -> Formula {
        Formula::atom(name)
    }

    #[test]
    fn atom_is_already_cnf() {
        assert_eq!(to_cnf(&a("p")).clauses(), &[Clause::new(vec![pos("p")])]);
    }

    #[test]
    fn negated_disjunction() {
        let cnf = to_cnf(&Formula::not(Formula::or(a("p"), a("q"))));
        assert_eq!(
            cnf.clauses(),
            &[Clause::new(vec![neg("p")]), Clause::new(vec![neg("q")])]
        );
    }

    #[test]
    fn example1_keeps_clause_order() {
        let phi = Formula::conjunction([
            a("p"),
            Formula::or(Formula::not(a("r")), a("s")),
            Formula::disjunction([a("r"), Formula::not(a("p")), Formula::not(a("q"))]),
            Formula::or(Formula::not(a("r")), Formula::not(a("s"))),
            a("q"),
        ]);
        let cnf = to_cnf(&phi);
        let expected = vec![
            Clause::new(vec![pos("p")]),
            Clause::new(vec![neg("r"), pos("s")]),
            Clause::new(vec![pos("r"), neg("p"), neg("q")]),
            Clause::new(vec![neg("r"), neg("s")]),
            Clause::new(vec![pos("q")]),
        ];
        assert_eq!(cnf.clauses(), expected.as_slice());
        assert_eq!(cnf.quick_classify(), QuickClass::Unknown);
    }

    #[test]
    fn distribution_order() {
        // (p ∧ q) ∨ r  ->  (p ∨ r) ∧ (q ∨ r)
        let cnf = to_cnf(&Formula::or(Formula::and(a("p"), a("q")), a("r")));
        assert_eq!(
            cnf.clauses(),
            &[
                Clause::new(vec![pos("p"), pos("r")]),
                Clause::new(vec![pos("q"), pos("r")]),
            ]
        );
    }

    #[test]
    fn constants_simplify() {
        let top_only = CnfFormula::new(vec![Clause::new(vec![Literal::top()])]);
        assert_eq!(to_cnf(&Formula::Verum), top_only);
        assert_eq!(to_cnf(&Formula::or(a("p"), Formula::Verum)), top_only);
        assert_eq!(
            to_cnf(&Formula::Falsum).clauses(),
            &[Clause::new(vec![Literal::bottom()])]
        );
        assert_eq!(
            to_cnf(&Formula::or(Formula::Falsum, a("p"))).clauses(),
            &[Clause::new(vec![pos("p")])]
        );
        assert_eq!(
            to_cnf(&Formula::or(Formula::Falsum, Formula::Falsum)).clauses(),
            &[Clause::new(vec![Literal::bottom()])]
        );
        assert_eq!(
            to_cnf(&Formula::not(Formula::Verum)).clauses(),
            &[Clause::new(vec![Literal::bottom()])]
        );
    }

    #[test]
    fn duplicates_dropped_complements_kept() {
        let cnf = to_cnf(&Formula::disjunction([
            a("p"),
            a("p"),
            Formula::not(a("p")),
        ]));
        assert_eq!(cnf.clauses(), &[Clause::new(vec![pos("p"), neg("p")])]);
    }

    #[test]
    fn double_negation_and_iff() {
        assert_eq!(
            to_cnf(&Formula::not(Formula::not(a("p")))).clauses(),
            &[Clause::new(vec![pos("p")])]
        );
        let cnf = to_cnf(&Formula::iff(a("p"), a("q")));
        assert_eq!(
            cnf.clauses(),
            &[
                Clause::new(vec![neg("p"), pos("q")]),
                Clause::new(vec![neg("q"), pos("p")]),
            ]
        );
    }

    #[test]
    fn budget_is_enforced() {
        // (p1 ∧ q1) ∨ (p2 ∧ q2) ∨ ... doubles the clause count per disjunct.
        let phi = Formula::disjunction(
            (0..12).map(|i| Formula::and(a(&format!("p{i}")), a(&format!("q{i}")))),
        );
        assert_eq!(
            to_cnf_bounded(&phi, 1000),
            Err(CnfError::ClauseBudgetExceeded { budget: 1000 })
        );
        assert_eq!(to_cnf_bounded(&phi, 4096).unwrap().len(), 4096);
    }

    #[test]
    fn clause_validity() {
        assert!(Clause::new(vec![pos("p"), neg("p")]).is_valid());
        assert!(Clause::new(vec![Literal::top()]).is_valid());
        assert!(!Clause::new(vec![pos("p"), pos("q")]).is_valid());
        assert!(Clause::new(vec![Literal::bottom(), Literal::top()]).is_valid());
        assert!(!Clause::new(vec![Literal::bottom()]).is_valid());
    }

    #[test]
    fn quick_classification() {
        let valid = CnfFormula::new(vec![
            Clause::new(vec![pos("p"), neg("p")]),
            Clause::new(vec![Literal::top()]),
        ]);
        assert_eq!(valid.quick_classify(), QuickClass::Valid);
        let bottom = CnfFormula::new(vec![Clause::new(vec![Literal::bottom()])]);
        assert_eq!(bottom.quick_classify(), QuickClass::Contradictory);
        let mixed = CnfFormula::new(vec![
            Clause::new(vec![pos("p")]),
            Clause::new(vec![Literal::bottom(), Literal::bottom()]),
        ]);
        assert_eq!(mixed.quick_classify(), QuickClass::Contradictory);
    }

    #[test]
    fn literal_rendering() {
        assert_eq!(Literal::top().to_string(), "top");
        assert_eq!(Literal::bottom().to_string(), "bot");
        assert_eq!(neg("p").to_string(), "~p");
        assert_eq!(Literal::top().to_formula(), Formula::Verum);
        assert_eq!(
            Clause::new(vec![neg("r"), pos("s")]).to_string(),
            "(~r | s)"
        );
    }
}
