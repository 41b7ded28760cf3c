//! Tokenizer and recursive-descent parser shared by the free algebra and the
//! polynomial ring.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' INT)?
//! atom    := INT ('/' INT)? | IDENT | '(' expr ')'
//! ```
//!
//! The identifier `w` always means ω; every other identifier is resolved by
//! the target algebra.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '−' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((pos, t));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].1.is_alphanumeric() || chars[i].1 == '_') {
                i += 1;
            }
            let name: String = chars[start..i].iter().map(|(_, c)| c).collect();
            out.push((pos, Tok::Ident(name)));
        } else {
            return Err(syntax(pos, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(BigRational),
    Omega,
    Symbol { name: String, position: usize },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Star) {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat(&Tok::Caret) {
            let pos = self.pos();
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.at += 1;
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| syntax(pos, "exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(syntax(pos, "expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                if self.eat(&Tok::Slash) {
                    let dpos = self.pos();
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.at += 1;
                            if d.is_zero() {
                                return Err(Error::DivisionByZero);
                            }
                            Ok(Expr::Const(BigRational::new(n, d)))
                        }
                        _ => Err(syntax(dpos, "expected an integer denominator")),
                    }
                } else {
                    Ok(Expr::Const(BigRational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "w" {
                    Ok(Expr::Omega)
                } else {
                    Ok(Expr::Symbol {
                        name,
                        position: pos,
                    })
                }
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(syntax(self.pos(), "expected `)`"));
                }
                Ok(inner)
            }
            Some(t) => Err(syntax(pos, format!("unexpected token {t:?}"))),
            None => Err(syntax(pos, "unexpected end of input")),
        }
    }
}

/// Parse `text` into an expression tree.
pub fn parse(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return Err(syntax(p.pos(), "trailing input"));
    }
    Ok(e)
}

/// A ring an expression tree can be evaluated into.
pub trait ExprRing {
    type Value: Clone;

    fn constant(&self, r: &BigRational) -> Result<Self::Value>;
    fn omega(&self) -> Result<Self::Value>;
    fn symbol(&self, name: &str, position: usize) -> Result<Self::Value>;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
    fn neg(&self, a: &Self::Value) -> Result<Self::Value>;
}

struct ScalarRing<'a, F: Field>(&'a F);

impl<F: Field> ExprRing for ScalarRing<'_, F> {
    type Value = F::Elem;

    fn constant(&self, r: &BigRational) -> Result<F::Elem> {
        self.0.from_rational(r)
    }
    fn omega(&self) -> Result<F::Elem> {
        self.0.omega()
    }
    fn symbol(&self, name: &str, position: usize) -> Result<F::Elem> {
        Err(Error::UnknownSymbol {
            position,
            symbol: name.to_string(),
        })
    }
    fn add(&self, a: &F::Elem, b: &F::Elem) -> Result<F::Elem> {
        Ok(self.0.add(a, b))
    }
    fn sub(&self, a: &F::Elem, b: &F::Elem) -> Result<F::Elem> {
        Ok(self.0.sub(a, b))
    }
    fn mul(&self, a: &F::Elem, b: &F::Elem) -> Result<F::Elem> {
        Ok(self.0.mul(a, b))
    }
    fn neg(&self, a: &F::Elem) -> Result<F::Elem> {
        Ok(self.0.neg(a))
    }
}

/// Parse a scalar written in the expression grammar, e.g. `3/2`, `(2 - 3*w)`.
pub fn parse_scalar<F: Field>(field: &F, text: &str) -> Result<F::Elem> {
    parse(text)?.eval(&ScalarRing(field))
}

impl Expr {
    pub fn eval<R: ExprRing>(&self, ring: &R) -> Result<R::Value> {
        match self {
            Expr::Const(r) => ring.constant(r),
            Expr::Omega => ring.omega(),
            Expr::Symbol { name, position } => ring.symbol(name, *position),
            Expr::Add(a, b) => ring.add(&a.eval(ring)?, &b.eval(ring)?),
            Expr::Sub(a, b) => ring.sub(&a.eval(ring)?, &b.eval(ring)?),
            Expr::Mul(a, b) => ring.mul(&a.eval(ring)?, &b.eval(ring)?),
            Expr::Neg(a) => ring.neg(&a.eval(ring)?),
            Expr::Pow(a, e) => {
                let base = a.eval(ring)?;
                let mut acc = ring.constant(&BigRational::from_integer(1.into()))?;
                for _ in 0..*e {
                    acc = ring.mul(&acc, &base)?;
                }
                Ok(acc)
            }
        }
    }
}


/// Render a linear combination `Σ cᵢ·mᵢ` as canonical text; an empty
/// monomial string denotes the constant term.
pub(crate) fn render_sum<'a, F, I>(k: &F, terms: I) -> String
where
    F: crate::scalars::Field,
    I: IntoIterator<Item = (&'a F::Elem, String)>,
{
    let mut out = String::new();
    for (c, mono) in terms {
        let coeff = k.format(c);
        let piece = if mono.is_empty() {
            coeff
        } else if coeff == "1" {
            mono
        } else if coeff == "-1" {
            format!("-{mono}")
        } else {
            format!("{coeff}*{mono}")
        };
        if out.is_empty() {
            out = piece;
        } else if let Some(rest) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&piece);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}
