//! Recursive-descent parser for the concrete formula syntax.
//!
//! ```text
//! term    := term ('+'|'-') term | INT '*' term | 'f' '(' term ')' | IDENT | INT | '(' term ')'
//! atom    := term REL term | 'p' INT '(' term ')' | 'P' '[' INT ',' INT ',' INT ',' INT ']' '(' term ',' term ')'
//! formula := atom | '!' formula | formula '&' formula | formula '|' formula
//!          | formula '->' formula | ('exists'|'forall') IDENT '.' formula | '(' formula ')'
//! ```
//!
//! `<=`, `>`, `>=` and `!=` are desugared into `<`, `=` and negation.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Signed;

use super::ast::{Formula, Term};
use crate::Big;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub offset: usize,
    pub expected: BTreeSet<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let expected: Vec<_> = self.expected.iter().map(String::as_str).collect();
        write!(f, "syntax error at offset {}: expected {}, found {}", self.offset, expected.join(" or "), self.found)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(Big),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Dot,
    Plus,
    Minus,
    Star,
    Lt,
    Le,
    Eq,
    Ne,
    Gt,
    Ge,
    Bang,
    Amp,
    Pipe,
    Arrow,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Eof => "end of input".into(),
            other => format!("`{}`", other.text()),
        }
    }

    fn text(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBracket => "[",
            Tok::RBracket => "]",
            Tok::Comma => ",",
            Tok::Dot => ".",
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Lt => "<",
            Tok::Le => "<=",
            Tok::Eq => "=",
            Tok::Ne => "!=",
            Tok::Gt => ">",
            Tok::Ge => ">=",
            Tok::Bang => "!",
            Tok::Amp => "&",
            Tok::Pipe => "|",
            Tok::Arrow => "->",
            Tok::Ident(_) | Tok::Int(_) | Tok::Eof => "",
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out: Vec<(Tok, usize)> = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        if ch.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        // '-' starts a literal only where an operand is expected
        let operand_before = matches!(
            out.last(),
            Some((Tok::Ident(_) | Tok::Int(_) | Tok::RParen | Tok::RBracket, _))
        );
        let negative = ch == b'-' && !operand_before && bytes.get(i + 1).is_some_and(u8::is_ascii_digit);
        if ch.is_ascii_digit() || negative {
            i += 1;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: Big = src[start..i].parse().expect("digits parse");
            out.push((Tok::Int(n), start));
            continue;
        }
        if ch.is_ascii_alphabetic() || ch == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(src[start..i].to_string()), start));
            continue;
        }
        let two = |c: u8| bytes.get(i + 1) == Some(&c);
        let (tok, len) = match ch {
            b'(' => (Tok::LParen, 1),
            b')' => (Tok::RParen, 1),
            b'[' => (Tok::LBracket, 1),
            b']' => (Tok::RBracket, 1),
            b',' => (Tok::Comma, 1),
            b'.' => (Tok::Dot, 1),
            b'+' => (Tok::Plus, 1),
            b'-' if two(b'>') => (Tok::Arrow, 2),
            b'-' => (Tok::Minus, 1),
            b'*' => (Tok::Star, 1),
            b'<' if two(b'=') => (Tok::Le, 2),
            b'<' => (Tok::Lt, 1),
            b'>' if two(b'=') => (Tok::Ge, 2),
            b'>' => (Tok::Gt, 1),
            b'=' => (Tok::Eq, 1),
            b'!' if two(b'=') => (Tok::Ne, 2),
            b'!' => (Tok::Bang, 1),
            b'&' => (Tok::Amp, 1),
            b'|' => (Tok::Pipe, 1),
            _ => {
                let found = src[start..].chars().next().expect("non-empty");
                return Err(ParseError {
                    offset: start,
                    expected: ["a token".to_string()].into(),
                    found: format!("`{found}`"),
                });
            }
        };
        out.push((tok, start));
        i += len;
    }
    out.push((Tok::Eof, src.len()));
    Ok(out)
}

const KEYWORDS: [&str; 2] = ["exists", "forall"];

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    /// Furthest failure seen so far; backtracking keeps the most informative one.
    best: Option<ParseError>,
}

type PResult<T> = Result<T, ()>;

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&mut self, expected: &[&str]) -> PResult<T> {
        let (tok, offset) = &self.toks[self.pos];
        let err = ParseError {
            offset: *offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: tok.describe(),
        };
        match &mut self.best {
            Some(b) if b.offset > err.offset => {}
            Some(b) if b.offset == err.offset => b.expected.extend(err.expected),
            _ => self.best = Some(err),
        }
        Err(())
    }

    fn expect(&mut self, tok: Tok) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            let text = format!("`{}`", tok.text());
            self.fail(&[&text])
        }
    }

    fn int(&mut self) -> PResult<Big> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail(&["integer"]),
        }
    }

    fn positive(&mut self) -> PResult<Big> {
        match self.peek().clone() {
            Tok::Int(n) if n.is_positive() => {
                self.bump();
                Ok(n)
            }
            _ => self.fail(&["positive integer"]),
        }
    }

    fn formula(&mut self) -> PResult<Formula> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.formula()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> PResult<Formula> {
        let mut acc = self.conjunction()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            acc = Formula::or(acc, self.conjunction()?);
        }
        Ok(acc)
    }

    fn conjunction(&mut self) -> PResult<Formula> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Amp {
            self.bump();
            acc = Formula::and(acc, self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> PResult<Formula> {
        match self.peek().clone() {
            Tok::Bang => {
                self.bump();
                Ok(Formula::not(self.unary()?))
            }
            Tok::Ident(kw) if KEYWORDS.contains(&kw.as_str()) => {
                self.bump();
                let var = match self.peek().clone() {
                    Tok::Ident(v) if !KEYWORDS.contains(&v.as_str()) => {
                        self.bump();
                        v
                    }
                    _ => return self.fail(&["variable"]),
                };
                self.expect(Tok::Dot)?;
                let body = self.formula()?;
                Ok(if kw == "exists" { Formula::exists(&var, body) } else { Formula::forall(&var, body) })
            }
            Tok::LParen => {
                let save = self.pos;
                self.bump();
                if let Ok(inner) = self.formula() {
                    if self.expect(Tok::RParen).is_ok() {
                        return Ok(inner);
                    }
                }
                // not a bracketed formula: maybe a bracketed term opening a comparison
                self.pos = save;
                self.atom()
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> PResult<Formula> {
        if let Tok::Ident(name) = self.peek().clone() {
            if let Some(n) = name.strip_prefix('p').filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit())) {
                if *self.peek_at(1) == Tok::LParen {
                    let n: Big = n.parse().expect("digits parse");
                    if !n.is_positive() {
                        return self.fail(&["positive modulus"]);
                    }
                    self.bump();
                    return self.divisibility(n);
                }
            }
            if name == "p" && matches!(self.peek_at(1), Tok::Int(_)) && *self.peek_at(2) == Tok::LParen {
                self.bump();
                let n = self.positive()?;
                return self.divisibility(n);
            }
            if name == "P" && *self.peek_at(1) == Tok::LBracket {
                self.bump();
                return self.ppred();
            }
        }
        let lhs = self.term()?;
        let rel = match self.peek() {
            Tok::Lt | Tok::Le | Tok::Eq | Tok::Ne | Tok::Gt | Tok::Ge => self.bump(),
            _ => return self.fail(&["`<`", "`<=`", "`=`", "`!=`", "`>`", "`>=`", "`+`", "`-`"]),
        };
        let rhs = self.term()?;
        Ok(match rel {
            Tok::Lt => Formula::lt(lhs, rhs),
            Tok::Eq => Formula::eq(lhs, rhs),
            Tok::Gt => Formula::lt(rhs, lhs),
            Tok::Le => Formula::not(Formula::lt(rhs, lhs)),
            Tok::Ge => Formula::not(Formula::lt(lhs, rhs)),
            Tok::Ne => Formula::not(Formula::eq(lhs, rhs)),
            _ => unreachable!(),
        })
    }

    fn divisibility(&mut self, n: Big) -> PResult<Formula> {
        self.expect(Tok::LParen)?;
        let t = self.term()?;
        self.expect(Tok::RParen)?;
        Ok(Formula::div(n, t))
    }

    fn ppred(&mut self) -> PResult<Formula> {
        self.expect(Tok::LBracket)?;
        let n = self.positive()?;
        self.expect(Tok::Comma)?;
        let n2 = self.positive()?;
        self.expect(Tok::Comma)?;
        let m = self.int()?;
        self.expect(Tok::Comma)?;
        let m2 = self.int()?;
        self.expect(Tok::RBracket)?;
        self.expect(Tok::LParen)?;
        let lo = self.term()?;
        self.expect(Tok::Comma)?;
        let hi = self.term()?;
        self.expect(Tok::RParen)?;
        Ok(Formula::ppred(n, n2, m, m2, lo, hi))
    }

    fn term(&mut self) -> PResult<Term> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = Term::add(acc, self.factor()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = Term::sub(acc, self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> PResult<Term> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() == Tok::Star {
                    self.bump();
                    return Ok(Term::scale(n, self.factor()?));
                }
                Ok(Term::Const(n))
            }
            Tok::Ident(name) if name == "f" && *self.peek_at(1) == Tok::LParen => {
                self.bump();
                self.bump();
                let inner = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(Term::f(inner))
            }
            Tok::Ident(name) if !KEYWORDS.contains(&name.as_str()) => {
                self.bump();
                Ok(Term::Var(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.term()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => self.fail(&["term"]),
        }
    }
}

pub fn parse(src: &str) -> Result<Formula, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, best: None };
    let parsed = p.formula().and_then(|phi| {
        if *p.peek() == Tok::Eof {
            Ok(phi)
        } else {
            p.fail(&["end of input", "`&`", "`|`", "`->`"])
        }
    });
    parsed.map_err(|()| p.best.take().expect("failure recorded"))
}

pub fn parse_term(src: &str) -> Result<Term, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, best: None };
    let parsed = p.term().and_then(|t| if *p.peek() == Tok::Eof { Ok(t) } else { p.fail(&["end of input"]) });
    parsed.map_err(|()| p.best.take().expect("failure recorded"))
}
