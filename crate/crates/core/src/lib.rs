//! Horn satisfiability as a recursive least-fixpoint computation.
//!
//! The pipeline is: parse a propositional formula, convert it to an
//! equivalent CNF, rewrite each basic Horn clause as an implication, and run
//! the firing loop from `{⊤}`. The formula is satisfiable iff `⊥` is not
//! derived, and the derived symbols give its least model.
//!
//! ```
//! use hornsat::{decide, horn_from_formula, parse_formula, SolverConfig};
//!
//! let phi = parse_formula("p & (~p | q) & (~q | ~r)").unwrap();
//! let horn = horn_from_formula(&phi).unwrap();
//! let outcome = decide(&horn, &SolverConfig::default());
//! assert!(outcome.satisfiable);
//! assert_eq!(outcome.final_set.to_string(), "{top, p, q}");
//! ```
//!
//! [`oracle`] is a truth-table evaluator kept deliberately naive; the test
//! suites compare every other module against it.

pub mod formula;
pub mod frontend;
pub mod horn;
pub mod normalform;
pub mod oracle;
pub mod solver;

pub use formula::{satisfies, sym, Formula, PropSymbol, SymbolError, Valuation};
pub use frontend::{parse_dimacs, parse_formula, TraceDocument};
pub use horn::{
    basic_to_implication, horn_from_cnf, horn_from_formula, horn_from_formula_bounded,
    is_basic_horn, Antecedent, HornError, HornFormula, HornImplication,
};
pub use normalform::{
    to_cnf, to_cnf_bounded, Atom, Clause, CnfError, CnfFormula, Literal, Polarity, QuickClass,
};
pub use oracle::{Classification, Oracle, OracleError};
pub use solver::{
    antecedent_atoms, decide, extract_model, precheck, saturate, step, LiteralSet, Member,
    Saturation, Shortcut, SolveOutcome, SolverConfig, SolverError, Step, StepKind, TraceStep,
};
