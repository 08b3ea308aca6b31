//! Tokeniser and ground-fact reader shared by the three input dialects.
//!
//! Instances are sequences of ground facts in logic-programming surface
//! syntax: `pred(arg, ...).` with `%` line comments and insignificant
//! whitespace. Arguments are ground terms built from lowercase-initial
//! identifiers, unsigned integers and nested function terms (needed for
//! the formula dialect). There are no rules, variables or aggregates.

use std::fmt;

use crate::error::{Error, Location};

#[derive(Debug, Clone, PartialEq, Eq)]
enum TokenKind {
    Ident(String),
    Number(String),
    LParen,
    RParen,
    Comma,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Token {
    kind: TokenKind,
    location: Location,
}

struct Lexer<'a> {
    input: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(input: &'a str) -> Self {
        Lexer {
            input: input.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn location(&self) -> Location {
        Location::new(self.line, self.column)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.input.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn skip_trivia(&mut self) {
        while let Some(&c) = self.input.peek() {
            if c.is_whitespace() {
                self.bump();
            } else if c == '%' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn next_token(&mut self) -> Result<Option<Token>, Error> {
        self.skip_trivia();
        let location = self.location();
        let Some(&c) = self.input.peek() else {
            return Ok(None);
        };
        let kind = match c {
            '(' => {
                self.bump();
                TokenKind::LParen
            }
            ')' => {
                self.bump();
                TokenKind::RParen
            }
            ',' => {
                self.bump();
                TokenKind::Comma
            }
            '.' => {
                self.bump();
                TokenKind::Dot
            }
            c if c.is_ascii_lowercase() => {
                let mut text = String::new();
                while let Some(&c) = self.input.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        text.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                TokenKind::Ident(text)
            }
            c if c.is_ascii_digit() => {
                let mut text = String::new();
                while let Some(&c) = self.input.peek() {
                    if c.is_ascii_digit() {
                        text.push(c);
                        self.bump();
                    } else {
                        break;
                    }
                }
                TokenKind::Number(text)
            }
            c if c.is_ascii_uppercase() => {
                return Err(Error::Syntax(
                    location,
                    format!(
                        "unexpected character `{c}` (identifiers start with a lowercase letter)"
                    ),
                ));
            }
            c => {
                return Err(Error::Syntax(
                    location,
                    format!("unexpected character `{c}`"),
                ));
            }
        };
        Ok(Some(Token { kind, location }))
    }
}

/// A ground term: an identifier or integer functor with optional
/// arguments, e.g. `b`, `3`, `and(a, neg(b))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct GroundTerm {
    pub functor: String,
    pub numeric: bool,
    pub args: Vec<GroundTerm>,
    pub location: Location,
}

impl GroundTerm {
    pub fn is_atomic(&self) -> bool {
        self.args.is_empty()
    }
}

impl fmt::Display for GroundTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.functor)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            for (i, arg) in self.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{arg}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// One ground fact `predicate(args...).`
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Fact {
    pub predicate: String,
    pub args: Vec<GroundTerm>,
    pub location: Location,
}

struct FactParser {
    tokens: Vec<Token>,
    pos: usize,
    end: Location,
}

impl FactParser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn advance(&mut self) -> Option<Token> {
        let token = self.tokens.get(self.pos).cloned();
        if token.is_some() {
            self.pos += 1;
        }
        token
    }

    fn here(&self) -> Location {
        self.peek().map(|t| t.location).unwrap_or(self.end)
    }

    fn expect(&mut self, kind: &TokenKind, what: &str) -> Result<Token, Error> {
        match self.advance() {
            Some(token) if &token.kind == kind => Ok(token),
            Some(token) => Err(Error::Syntax(
                token.location,
                format!("expected {what}, found {}", describe(&token.kind)),
            )),
            None => Err(Error::Syntax(
                self.end,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn parse_fact(&mut self) -> Result<Fact, Error> {
        let (predicate, location) = match self.advance() {
            Some(Token {
                kind: TokenKind::Ident(name),
                location,
            }) => (name, location),
            Some(token) => {
                return Err(Error::Syntax(
                    token.location,
                    format!("expected a predicate name, found {}", describe(&token.kind)),
                ))
            }
            None => unreachable!("parse_fact called at end of input"),
        };
        self.expect(&TokenKind::LParen, "`(`")?;
        let mut args = vec![self.parse_term()?];
        loop {
            match self.peek().map(|t| &t.kind) {
                Some(TokenKind::Comma) => {
                    self.advance();
                    args.push(self.parse_term()?);
                }
                Some(TokenKind::RParen) => {
                    self.advance();
                    break;
                }
                _ => {
                    return Err(Error::Syntax(
                        self.here(),
                        "expected `,` or `)` in the argument list".into(),
                    ))
                }
            }
        }
        self.expect(&TokenKind::Dot, "`.` after the fact")?;
        Ok(Fact {
            predicate,
            args,
            location,
        })
    }

    fn parse_term(&mut self) -> Result<GroundTerm, Error> {
        match self.advance() {
            Some(Token {
                kind: TokenKind::Ident(functor),
                location,
            }) => {
                let mut args = Vec::new();
                if matches!(self.peek().map(|t| &t.kind), Some(TokenKind::LParen)) {
                    self.advance();
                    args.push(self.parse_term()?);
                    loop {
                        match self.peek().map(|t| &t.kind) {
                            Some(TokenKind::Comma) => {
                                self.advance();
                                args.push(self.parse_term()?);
                            }
                            Some(TokenKind::RParen) => {
                                self.advance();
                                break;
                            }
                            _ => {
                                return Err(Error::Syntax(
                                    self.here(),
                                    "expected `,` or `)` in the term".into(),
                                ))
                            }
                        }
                    }
                }
                Ok(GroundTerm {
                    functor,
                    numeric: false,
                    args,
                    location,
                })
            }
            Some(Token {
                kind: TokenKind::Number(text),
                location,
            }) => Ok(GroundTerm {
                functor: text,
                numeric: true,
                args: Vec::new(),
                location,
            }),
            Some(token) => Err(Error::Syntax(
                token.location,
                format!("expected a term, found {}", describe(&token.kind)),
            )),
            None => Err(Error::Syntax(
                self.end,
                "expected a term, found end of input".into(),
            )),
        }
    }
}

fn describe(kind: &TokenKind) -> String {
    match kind {
        TokenKind::Ident(name) => format!("`{name}`"),
        TokenKind::Number(text) => format!("`{text}`"),
        TokenKind::LParen => "`(`".into(),
        TokenKind::RParen => "`)`".into(),
        TokenKind::Comma => "`,`".into(),
        TokenKind::Dot => "`.`".into(),
    }
}

/// Reads an entire instance into a list of ground facts.
pub(crate) fn read_facts(input: &str) -> Result<Vec<Fact>, Error> {
    let mut lexer = Lexer::new(input);
    let mut tokens = Vec::new();
    while let Some(token) = lexer.next_token()? {
        tokens.push(token);
    }
    let end = lexer.location();
    let mut parser = FactParser {
        tokens,
        pos: 0,
        end,
    };
    let mut facts = Vec::new();
    while parser.peek().is_some() {
        facts.push(parser.parse_fact()?);
    }
    Ok(facts)
}

/// Helpers for the dialect interpreters.
pub(crate) fn expect_arity(fact: &Fact, arity: usize) -> Result<(), Error> {
    if fact.args.len() == arity {
        Ok(())
    } else {
        Err(Error::Syntax(
            fact.location,
            format!(
                "`{}` expects {} argument{}, found {}",
                fact.predicate,
                arity,
                if arity == 1 { "" } else { "s" },
                fact.args.len()
            ),
        ))
    }
}

/// Extracts a bare identifier argument (no nesting, not a number).
pub(crate) fn ident_arg<'a>(term: &'a GroundTerm, what: &str) -> Result<&'a str, Error> {
    if term.numeric || !term.is_atomic() {
        return Err(Error::Syntax(
            term.location,
            format!("{what} must be an identifier, found `{term}`"),
        ));
    }
    Ok(&term.functor)
}
