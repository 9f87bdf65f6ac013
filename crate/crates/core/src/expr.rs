//! Element expressions: a small recursive-descent grammar over the named
//! symbols `E<ij>`, `e<k>`, `psi`, `I` and Gaussian-rational literals.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | number ['/' number] | 'i' | symbol | '(' expr ')'
//! symbol := 'E' digit digit | 'e' digit | 'psi' | 'I'
//! ```
//!
//! Binary operators associate to the left. Division exists only inside
//! rational literals; write `x/i` as `-i*x`.
//!
//! Every expression can be evaluated twice: symbolically through a
//! [`LetterTable`] into an [`Element`], and numerically through the matrix
//! oracle. Identity checks compare both routes.

use std::fmt;

use thiserror::Error;

use crate::element::Element;
use crate::error::AlgebraError;
use crate::oracle::{self, MatrixRep};
use crate::pauli::{LetterTable, PauliWord};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// Two-site word `E_{ij}`.
    Pair(u8, u8),
    /// Single-site generator `e_k`.
    Site(u8),
    Psi,
    Identity,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Literal {
    Int(i64),
    Frac(i64, i64),
    ImagUnit,
}

impl Literal {
    pub fn value(self) -> Scalar {
        match self {
            Literal::Int(n) => Scalar::integer(n),
            Literal::Frac(a, b) => Scalar::ratio(a, b),
            Literal::ImagUnit => Scalar::i(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ElementExpr {
    Literal(Literal),
    Symbol(Symbol),
    Neg(Box<ElementExpr>),
    Add(Box<ElementExpr>, Box<ElementExpr>),
    Sub(Box<ElementExpr>, Box<ElementExpr>),
    Mul(Box<ElementExpr>, Box<ElementExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    ArityConflict,
    Range(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{}", describe(.kind, *.offset))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input where the problem was detected.
    pub offset: usize,
}

fn describe(kind: &ParseErrorKind, offset: usize) -> String {
    match kind {
        ParseErrorKind::Syntax(msg) => format!("SyntaxError at byte {offset}: {msg}"),
        ParseErrorKind::ArityConflict => {
            format!("ArityConflict at byte {offset}: single-site e-symbols cannot be mixed with two-site symbols")
        }
        ParseErrorKind::Range(msg) => format!("RangeError at byte {offset}: {msg}"),
    }
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub fn parse_expr(input: &str) -> Result<ElementExpr, ParseError> {
    let mut p = Parser { src: input.as_bytes(), pos: 0, arity: None };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax(format!("unexpected '{}'", p.src[p.pos] as char)));
    }
    Ok(expr)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    /// Arity fixed by the first arity-carrying symbol, with its offset.
    arity: Option<(usize, usize)>,
}

impl Parser<'_> {
    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError { kind: ParseErrorKind::Syntax(msg.into()), offset: self.pos }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<ElementExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    lhs = ElementExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(b'-') => {
                    self.pos += 1;
                    lhs = ElementExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ElementExpr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = ElementExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<ElementExpr, ParseError> {
        match self.peek() {
            None => Err(self.syntax("unexpected end of input")),
            Some(b'-') => {
                self.pos += 1;
                Ok(ElementExpr::Neg(Box::new(self.factor()?)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0'..=b'9') => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.symbol(),
            Some(c) => Err(self.syntax(format!("unexpected '{}'", c as char))),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| ParseError {
            kind: ParseErrorKind::Syntax("integer literal too large".into()),
            offset: start,
        })
    }

    fn number(&mut self) -> Result<ElementExpr, ParseError> {
        let num = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let den_at = self.pos;
            let den = self.integer()?;
            if den == 0 {
                return Err(ParseError { kind: ParseErrorKind::Syntax("zero denominator".into()), offset: den_at });
            }
            return Ok(ElementExpr::Literal(Literal::Frac(num, den)));
        }
        Ok(ElementExpr::Literal(Literal::Int(num)))
    }

    fn symbol(&mut self) -> Result<ElementExpr, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        let at = |kind| ParseError { kind, offset: start };
        let digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        let (symbol, arity) = match word {
            "i" => return Ok(ElementExpr::Literal(Literal::ImagUnit)),
            "I" => return Ok(ElementExpr::Symbol(Symbol::Identity)),
            "psi" => (Symbol::Psi, 2),
            _ if word.starts_with('E') && word.len() == 3 && digits(&word[1..]) => {
                let b = word.as_bytes();
                let (i, j) = (b[1] - b'0', b[2] - b'0');
                if i > 3 || j > 3 {
                    return Err(at(ParseErrorKind::Range(format!("{word}: E-indices must be in 0..=3"))));
                }
                (Symbol::Pair(i, j), 2)
            }
            _ if word.starts_with('e') && word.len() == 2 && digits(&word[1..]) => {
                let k = word.as_bytes()[1] - b'0';
                if !(1..=3).contains(&k) {
                    return Err(at(ParseErrorKind::Range(format!("{word}: e-index must be in 1..=3"))));
                }
                (Symbol::Site(k), 1)
            }
            _ => return Err(at(ParseErrorKind::Syntax(format!("unknown symbol '{word}'")))),
        };
        match self.arity {
            None => self.arity = Some((arity, start)),
            Some((a, _)) if a != arity => return Err(at(ParseErrorKind::ArityConflict)),
            Some(_) => {}
        }
        Ok(ElementExpr::Symbol(symbol))
    }
}

impl ElementExpr {
    /// Site count implied by the symbols, if any symbol fixes it.
    pub fn arity(&self) -> Option<usize> {
        match self {
            ElementExpr::Literal(_) => None,
            ElementExpr::Symbol(Symbol::Pair(..) | Symbol::Psi) => Some(2),
            ElementExpr::Symbol(Symbol::Site(_)) => Some(1),
            ElementExpr::Symbol(Symbol::Identity) => None,
            ElementExpr::Neg(x) => x.arity(),
            ElementExpr::Add(a, b) | ElementExpr::Sub(a, b) | ElementExpr::Mul(a, b) => a.arity().or(b.arity()),
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            ElementExpr::Add(..) | ElementExpr::Sub(..) => 1,
            ElementExpr::Mul(..) => 2,
            _ => 3,
        }
    }
}

fn write_wrapped(f: &mut fmt::Formatter<'_>, e: &ElementExpr, wrap: bool) -> fmt::Result {
    if wrap {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Prints with the minimal parentheses that reparse to the same tree.
impl fmt::Display for ElementExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementExpr::Literal(Literal::Int(n)) => write!(f, "{n}"),
            ElementExpr::Literal(Literal::Frac(a, b)) => write!(f, "{a}/{b}"),
            ElementExpr::Literal(Literal::ImagUnit) => f.write_str("i"),
            ElementExpr::Symbol(Symbol::Pair(i, j)) => write!(f, "E{i}{j}"),
            ElementExpr::Symbol(Symbol::Site(k)) => write!(f, "e{k}"),
            ElementExpr::Symbol(Symbol::Psi) => f.write_str("psi"),
            ElementExpr::Symbol(Symbol::Identity) => f.write_str("I"),
            ElementExpr::Neg(x) => {
                f.write_str("-")?;
                write_wrapped(f, x, x.precedence() < 3)
            }
            ElementExpr::Add(a, b) | ElementExpr::Sub(a, b) => {
                let op = if matches!(self, ElementExpr::Add(..)) { "+" } else { "-" };
                write!(f, "{a} {op} ")?;
                write_wrapped(f, b, b.precedence() <= 1)
            }
            ElementExpr::Mul(a, b) => {
                write_wrapped(f, a, a.precedence() <= 1)?;
                f.write_str("*")?;
                write_wrapped(f, b, b.precedence() <= 2)
            }
        }
    }
}

/// Symbolic evaluation context.
#[derive(Clone, Debug)]
pub struct Evaluator {
    pub table: LetterTable,
    /// Value of the `psi` symbol.
    pub psi: Element,
}

impl Evaluator {
    pub fn new(table: LetterTable, psi: Element) -> Self {
        Evaluator { table, psi }
    }

    /// Evaluates with `default_arity` used when no symbol fixes the arity.
    pub fn eval(&self, expr: &ElementExpr, default_arity: usize) -> Result<Element, AlgebraError> {
        let arity = expr.arity().unwrap_or(default_arity);
        self.eval_at(expr, arity)
    }

    fn eval_at(&self, expr: &ElementExpr, n: usize) -> Result<Element, AlgebraError> {
        Ok(match expr {
            ElementExpr::Literal(l) => Element::scalar(n, l.value()),
            ElementExpr::Symbol(Symbol::Pair(i, j)) => Element::word(PauliWord::from_indices(&[*i, *j])?),
            ElementExpr::Symbol(Symbol::Site(k)) => Element::word(PauliWord::from_indices(&[*k])?),
            ElementExpr::Symbol(Symbol::Psi) => self.psi.clone(),
            ElementExpr::Symbol(Symbol::Identity) => Element::identity(n),
            ElementExpr::Neg(x) => self.eval_at(x, n)?.negate(),
            ElementExpr::Add(a, b) => self.eval_at(a, n)?.add(&self.eval_at(b, n)?)?,
            ElementExpr::Sub(a, b) => self.eval_at(a, n)?.sub(&self.eval_at(b, n)?)?,
            ElementExpr::Mul(a, b) => self.eval_at(a, n)?.mul_in(&self.table, &self.eval_at(b, n)?)?,
        })
    }
}

/// Numerical evaluation through the matrix oracle.
///
/// `psi` is whatever matrix the caller wants the `psi` symbol to denote;
/// normally [`oracle::singlet_matrix`].
pub fn eval_matrix(expr: &ElementExpr, default_arity: usize, psi: &MatrixRep) -> Result<MatrixRep, AlgebraError> {
    let dim = 1usize << expr.arity().unwrap_or(default_arity);
    eval_matrix_at(expr, dim, psi)
}

fn eval_matrix_at(expr: &ElementExpr, dim: usize, psi: &MatrixRep) -> Result<MatrixRep, AlgebraError> {
    Ok(match expr {
        ElementExpr::Literal(l) => {
            let (re, im) = l.value().to_f64_pair();
            MatrixRep::identity(dim).scale(re, im)
        }
        ElementExpr::Symbol(Symbol::Pair(i, j)) => oracle::word_matrix(&PauliWord::from_indices(&[*i, *j])?),
        ElementExpr::Symbol(Symbol::Site(k)) => oracle::word_matrix(&PauliWord::from_indices(&[*k])?),
        ElementExpr::Symbol(Symbol::Psi) => psi.clone(),
        ElementExpr::Symbol(Symbol::Identity) => MatrixRep::identity(dim),
        ElementExpr::Neg(x) => eval_matrix_at(x, dim, psi)?.scale(-1.0, 0.0),
        ElementExpr::Add(a, b) => eval_matrix_at(a, dim, psi)?.add(&eval_matrix_at(b, dim, psi)?)?,
        ElementExpr::Sub(a, b) => eval_matrix_at(a, dim, psi)?.sub(&eval_matrix_at(b, dim, psi)?)?,
        ElementExpr::Mul(a, b) => eval_matrix_at(a, dim, psi)?.mul(&eval_matrix_at(b, dim, psi)?)?,
    })
}
