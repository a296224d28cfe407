//! Textual formula syntax: a recursive-descent parser and a printer that
//! produces text the parser reads back to the same tree.
//!
//! Precedence, tightest first: `~`, `&`, `|`, `->`, `<->`. `&` and `|` are
//! left associative, `->` and `<->` right associative. ASCII and Unicode
//! spellings are both accepted; `#` starts a comment running to the end of
//! the line.

use std::fmt;

use thiserror::Error;

use crate::formula::{Formula, PropSymbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(name) => write!(f, "`{name}`"),
            Tok::True => f.write_str("`true`"),
            Tok::False => f.write_str("`false`"),
            Tok::Not => f.write_str("`~`"),
            Tok::And => f.write_str("`&`"),
            Tok::Or => f.write_str("`|`"),
            Tok::Implies => f.write_str("`->`"),
            Tok::Iff => f.write_str("`<->`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

const OPERAND: &[&str] = &["atom", "`true`", "`false`", "`~`", "`(`"];

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);

    while let Some(&c) = chars.peek() {
        let (start_line, start_col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        let unexpected = |found: String, expected: &'static str| ParseError {
            line: start_line,
            column: start_col,
            expected: vec![expected],
            found,
        };

        let tok = match c {
            c if c.is_whitespace() => {
                bump(&mut chars);
                continue;
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    bump(&mut chars);
                }
                continue;
            }
            c if c.is_alphabetic() => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        name.push(c);
                        bump(&mut chars);
                    } else {
                        break;
                    }
                }
                match name.as_str() {
                    "true" | "top" => Tok::True,
                    "false" | "bot" => Tok::False,
                    _ => Tok::Ident(name),
                }
            }
            '~' | '!' | '¬' => {
                bump(&mut chars);
                Tok::Not
            }
            '&' | '∧' => {
                bump(&mut chars);
                Tok::And
            }
            '|' | '∨' => {
                bump(&mut chars);
                Tok::Or
            }
            '→' => {
                bump(&mut chars);
                Tok::Implies
            }
            '↔' => {
                bump(&mut chars);
                Tok::Iff
            }
            '⊤' => {
                bump(&mut chars);
                Tok::True
            }
            '⊥' => {
                bump(&mut chars);
                Tok::False
            }
            '(' => {
                bump(&mut chars);
                Tok::LParen
            }
            ')' => {
                bump(&mut chars);
                Tok::RParen
            }
            '/' => {
                bump(&mut chars);
                match bump(&mut chars) {
                    Some('\\') => Tok::And,
                    other => return Err(unexpected(describe(other), "`/\\`")),
                }
            }
            '\\' => {
                bump(&mut chars);
                match bump(&mut chars) {
                    Some('/') => Tok::Or,
                    other => return Err(unexpected(describe(other), "`\\/`")),
                }
            }
            '-' => {
                bump(&mut chars);
                match bump(&mut chars) {
                    Some('>') => Tok::Implies,
                    other => return Err(unexpected(describe(other), "`->`")),
                }
            }
            '<' => {
                bump(&mut chars);
                match (bump(&mut chars), bump(&mut chars)) {
                    (Some('-'), Some('>')) => Tok::Iff,
                    (_, other) => return Err(unexpected(describe(other), "`<->`")),
                }
            }
            other => return Err(unexpected(format!("`{other}`"), "a formula token")),
        };
        out.push(Spanned {
            tok,
            line: start_line,
            column: start_col,
        });
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

fn describe(c: Option<char>) -> String {
    match c {
        Some(c) => format!("`{c}`"),
        None => "end of input".to_string(),
    }
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn advance(&mut self) -> Tok {
        let tok = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        tok
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let here = &self.toks[self.pos];
        ParseError {
            line: here.line,
            column: here.column,
            expected: expected.to_vec(),
            found: here.tok.to_string(),
        }
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.implication()?;
        if *self.peek() == Tok::Iff {
            self.advance();
            return Ok(Formula::iff(lhs, self.iff()?));
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Implies {
            self.advance();
            return Ok(Formula::implies(lhs, self.implication()?));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while *self.peek() == Tok::Or {
            self.advance();
            lhs = Formula::or(lhs, self.conjunction()?);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.advance();
            lhs = Formula::and(lhs, self.unary()?);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Tok::Not => {
                self.advance();
                Ok(Formula::not(self.unary()?))
            }
            Tok::True => {
                self.advance();
                Ok(Formula::Verum)
            }
            Tok::False => {
                self.advance();
                Ok(Formula::Falsum)
            }
            Tok::Ident(_) => {
                let Tok::Ident(name) = self.advance() else {
                    unreachable!()
                };
                // The lexer only produces well-formed identifiers.
                Ok(Formula::Atom(
                    PropSymbol::new(name).expect("lexer yields valid names"),
                ))
            }
            Tok::LParen => {
                self.advance();
                let inner = self.iff()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["`)`", "`&`", "`|`", "`->`", "`<->`"]));
                }
                self.advance();
                Ok(inner)
            }
            _ => Err(self.error(OPERAND)),
        }
    }
}

pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let phi = parser.iff()?;
    if *parser.peek() != Tok::Eof {
        return Err(parser.error(&["`&`", "`|`", "`->`", "`<->`", "end of input"]));
    }
    Ok(phi)
}

// Binding strength; higher binds tighter.
fn precedence(phi: &Formula) -> u8 {
    match phi {
        Formula::Iff(..) => 1,
        Formula::Implies(..) => 2,
        Formula::Or(..) => 3,
        Formula::And(..) => 4,
        Formula::Not(_) => 5,
        Formula::Falsum | Formula::Verum | Formula::Atom(_) => 6,
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, phi: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({phi})")
    } else {
        write!(f, "{phi}")
    }
}

/// ASCII rendering with the fewest parentheses that still parse back to
/// the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let own = precedence(self);
        let (lhs, rhs, op, right_assoc) = match self {
            Formula::Falsum => return f.write_str("bot"),
            Formula::Verum => return f.write_str("top"),
            Formula::Atom(p) => return write!(f, "{p}"),
            Formula::Not(inner) => {
                f.write_str("~")?;
                return write_operand(f, inner, precedence(inner) < own);
            }
            Formula::And(a, b) => (a, b, " & ", false),
            Formula::Or(a, b) => (a, b, " | ", false),
            Formula::Implies(a, b) => (a, b, " -> ", true),
            Formula::Iff(a, b) => (a, b, " <-> ", true),
        };
        let (lp, rp) = (precedence(lhs), precedence(rhs));
        if right_assoc {
            write_operand(f, lhs, lp <= own)?;
            f.write_str(op)?;
            write_operand(f, rhs, rp < own)
        } else {
            write_operand(f, lhs, lp < own)?;
            f.write_str(op)?;
            write_operand(f, rhs, rp <= own)
        }
    }
}
