//! DIMACS CNF input. Variable `k` becomes the symbol `x<k>`.

use thiserror::Error;

use crate::formula::PropSymbol;
use crate::normalform::{Atom, Clause, CnfFormula, Literal};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("line {line}: clause data before the `p cnf` header")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed header {text:?}; expected `p cnf <vars> <clauses>`")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: literal {literal} is outside the declared {vars} variables")]
    LiteralOutOfRange {
        line: usize,
        literal: i64,
        vars: u64,
    },
    #[error("line {line}: invalid token {token:?}")]
    InvalidToken { line: usize, token: String },
    #[error("last clause is not terminated by 0")]
    MissingTerminator,
}

fn variable(k: u64) -> Atom {
    Atom::Sym(PropSymbol::new(format!("x{k}")).expect("x<k> is a valid symbol"))
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut vars: Option<u64> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut open = false;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        // SATLIB files end with a `%` line followed by junk.
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", v, c] => v.parse::<u64>().ok().zip(c.parse::<u64>().ok()),
                _ => None,
            };
            match parsed {
                Some((v, _)) if vars.is_none() => vars = Some(v),
                _ => {
                    return Err(DimacsError::MalformedHeader {
                        line,
                        text: trimmed.to_string(),
                    })
                }
            }
            continue;
        }
        let Some(declared) = vars else {
            return Err(DimacsError::MissingHeader { line });
        };
        for token in trimmed.split_whitespace() {
            let literal: i64 = token.parse().map_err(|_| DimacsError::InvalidToken {
                line,
                token: token.to_string(),
            })?;
            if literal == 0 {
                let literals = std::mem::take(&mut current);
                if literals.is_empty() {
                    clauses.push(Clause::new(vec![Literal::bottom()]));
                } else {
                    clauses.push(Clause::new(literals));
                }
                open = false;
                continue;
            }
            let k = literal.unsigned_abs();
            if k > declared {
                return Err(DimacsError::LiteralOutOfRange {
                    line,
                    literal,
                    vars: declared,
                });
            }
            current.push(if literal > 0 {
                Literal::positive(variable(k))
            } else {
                Literal::negative(variable(k))
            });
            open = true;
        }
    }
    if open {
        return Err(DimacsError::MissingTerminator);
    }
    if vars.is_none() {
        return Err(DimacsError::MissingHeader {
            line: text.lines().count().max(1),
        });
    }
    Ok(CnfFormula::new(clauses))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(k: u64) -> Literal {
        Literal::positive(variable(k))
    }
    fn nx(k: u64) -> Literal {
        Literal::negative(variable(k))
    }

    #[test]
    fn basic_files() {
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 -2 0").unwrap().clauses(),
            &[Clause::new(vec![x(1), nx(2)])]
        );
        assert_eq!(
            parse_dimacs("p cnf 1 2\n1 0\n-1 0").unwrap().clauses(),
            &[Clause::new(vec![x(1)]), Clause::new(vec![nx(1)])]
        );
        assert_eq!(
            parse_dimacs("p cnf 1 1\n0").unwrap().clauses(),
            &[Clause::new(vec![Literal::bottom()])]
        );
    }

    #[test]
    fn comments_and_multiline_clauses() {
        let text = "c a comment\np cnf 3 2\n1 2\n -3 0 c\n3 0\n%\n0\n";
        // the trailing `c` after the terminator is a token on a clause line
        assert!(matches!(
            parse_dimacs(text),
            Err(DimacsError::InvalidToken { line: 4, .. })
        ));
        let text = "c a comment\np cnf 3 2\n1 2\n -3 0\n3 0\n%\n0\n";
        assert_eq!(
            parse_dimacs(text).unwrap().clauses(),
            &[
                Clause::new(vec![x(1), x(2), nx(3)]),
                Clause::new(vec![x(3)])
            ]
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_dimacs("p cnf x 1\n1 0"),
            Err(DimacsError::MalformedHeader { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p dnf 1 1\n1 0"),
            Err(DimacsError::MalformedHeader { .. })
        ));
        assert!(matches!(
            parse_dimacs("p cnf 1 1\np cnf 1 1\n1 0"),
            Err(DimacsError::MalformedHeader { line: 2, .. })
        ));
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 -3 0"),
            Err(DimacsError::LiteralOutOfRange {
                line: 2,
                literal: -3,
                vars: 2
            })
        );
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 2"),
            Err(DimacsError::MissingTerminator)
        );
        assert_eq!(
            parse_dimacs("1 0\n"),
            Err(DimacsError::MissingHeader { line: 1 })
        );
        assert!(matches!(
            parse_dimacs(""),
            Err(DimacsError::MissingHeader { .. })
        ));
    }
}
