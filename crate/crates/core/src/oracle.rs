//! Truth-table ground truth.
//!
//! Everything here enumerates all valuations over the symbols involved.
//! It is exponential and meant only for checking the rest of the crate on
//! small inputs.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::formula::{satisfies, Formula, PropSymbol, Valuation};

pub const DEFAULT_MAX_SYMBOLS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{count} symbols exceed the truth-table limit of {cap}")]
    TooManySymbols { count: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Valid,
    Satisfiable,
    Contradictory,
}

impl Classification {
    pub fn is_satisfiable(self) -> bool {
        self != Classification::Contradictory
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Classification::Valid => "Valid",
            Classification::Satisfiable => "Satisfiable",
            Classification::Contradictory => "Contradictory",
        })
    }
}

/// All valuations over a symbol set, in binary counting order with the
/// first symbol (by name) as the most significant bit.
#[derive(Debug, Clone)]
pub struct Valuations {
    symbols: Vec<PropSymbol>,
    next: u64,
    end: u64,
}

impl Iterator for Valuations {
    type Item = Valuation;

    fn next(&mut self) -> Option<Valuation> {
        if self.next >= self.end {
            return None;
        }
        let bits = self.next;
        self.next += 1;
        let k = self.symbols.len();
        Some(
            self.symbols
                .iter()
                .enumerate()
                .map(|(j, p)| (p.clone(), bits >> (k - 1 - j) & 1 == 1))
                .collect(),
        )
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Valuations {}

#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub max_symbols: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            max_symbols: DEFAULT_MAX_SYMBOLS,
        }
    }
}

impl Oracle {
    pub fn with_max_symbols(max_symbols: usize) -> Self {
        Oracle { max_symbols }
    }

    pub fn enumerate_valuations(
        &self,
        syms: &BTreeSet<PropSymbol>,
    ) -> Result<Valuations, OracleError> {
        // 63 keeps the shift below in range regardless of the configured cap.
        if syms.len() > self.max_symbols || syms.len() > 63 {
            return Err(OracleError::TooManySymbols {
                count: syms.len(),
                cap: self.max_symbols,
            });
        }
        Ok(Valuations {
            symbols: syms.iter().cloned().collect(),
            next: 0,
            end: 1u64 << syms.len(),
        })
    }

    pub fn classify(&self, phi: &Formula) -> Result<Classification, OracleError> {
        let (mut seen_true, mut seen_false) = (false, false);
        for v in self.enumerate_valuations(&phi.symbols())? {
            if satisfies(&v, phi) {
                seen_true = true;
            } else {
                seen_false = true;
            }
            if seen_true && seen_false {
                return Ok(Classification::Satisfiable);
            }
        }
        Ok(if seen_true {
            Classification::Valid
        } else {
            Classification::Contradictory
        })
    }

    /// `premises ⊨ phi`.
    pub fn semantic_consequence(
        &self,
        premises: &[Formula],
        phi: &Formula,
    ) -> Result<bool, OracleError> {
        let mut syms = phi.symbols();
        for premise in premises {
            syms.extend(premise.symbols());
        }
        Ok(self
            .enumerate_valuations(&syms)?
            .filter(|v| premises.iter().all(|premise| satisfies(v, premise)))
            .all(|v| satisfies(&v, phi)))
    }

    pub fn equiv(&self, phi: &Formula, psi: &Formula) -> Result<bool, OracleError> {
        let mut syms = phi.symbols();
        syms.extend(psi.symbols());
        Ok(self
            .enumerate_valuations(&syms)?
            .all(|v| phi.eval(&v) == psi.eval(&v)))
    }

    /// Satisfying valuations over `symbols(phi)`, in enumeration order.
    pub fn models(&self, phi: &Formula) -> Result<Vec<Valuation>, OracleError> {
        Ok(self
            .enumerate_valuations(&phi.symbols())?
            .filter(|v| satisfies(v, phi))
            .collect())
    }
}

pub fn enumerate_valuations(syms: &BTreeSet<PropSymbol>) -> Result<Valuations, OracleError> {
    Oracle::default().enumerate_valuations(syms)
}

pub fn classify(phi: &Formula) -> Result<Classification, OracleError> {
    Oracle::default().classify(phi)
}

pub fn semantic_consequence(premises: &[Formula], phi: &Formula) -> Result<bool, OracleError> {
    Oracle::default().semantic_consequence(premises, phi)
}

pub fn equiv(phi: &Formula, psi: &Formula) -> Result<bool, OracleError> {
    Oracle::default().equiv(phi, psi)
}

pub fn models(phi: &Formula) -> Result<Vec<Valuation>, OracleError> {
    Oracle::default().models(phi)
}
