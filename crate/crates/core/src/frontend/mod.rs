//! Text and DIMACS input, trace documents and the command line.

pub mod cli;
pub mod dimacs;
pub mod syntax;
pub mod trace;

pub use dimacs::{parse_dimacs, DimacsError};
pub use syntax::{parse_formula, ParseError};
pub use trace::{ReplayError, StepRecord, TraceDocument, Verdict};
