//! Expression language for generating functions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' uint)?
//! atom   := uint | 'z' | builtin | '(' expr ')'
//! ```
//!
//! Subtraction parses to the same node as addition: in characteristic 2
//! they coincide, so `1-z` can be written the usual way.

use std::fmt;
use std::str::FromStr;

use super::{mul_trunc, reciprocal, solve_fixed_point, Gf2Series, SeriesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// `C = 1 + z C^2`
    Catalan,
    /// `M = 1 + z M + z^2 M^2`
    Motzkin,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::Catalan => "catalan",
            Builtin::Motzkin => "motzkin",
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        match s {
            "catalan" => Ok(Builtin::Catalan),
            "motzkin" => Ok(Builtin::Motzkin),
            _ => Err(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SeriesExpr {
    Int(u64),
    Var,
    Sum(Vec<SeriesExpr>),
    Product(Box<SeriesExpr>, Box<SeriesExpr>),
    Quotient(Box<SeriesExpr>, Box<SeriesExpr>),
    Pow(Box<SeriesExpr>, u32),
    Builtin(Builtin),
}

impl SeriesExpr {
    pub fn product(a: SeriesExpr, b: SeriesExpr) -> Self {
        SeriesExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn quotient(a: SeriesExpr, b: SeriesExpr) -> Self {
        SeriesExpr::Quotient(Box::new(a), Box::new(b))
    }

    pub fn pow(a: SeriesExpr, e: u32) -> Self {
        SeriesExpr::Pow(Box::new(a), e)
    }

    fn precedence(&self) -> u8 {
        match self {
            SeriesExpr::Sum(_) => 0,
            SeriesExpr::Product(..) | SeriesExpr::Quotient(..) => 1,
            SeriesExpr::Pow(..) => 2,
            _ => 3,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for SeriesExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesExpr::Int(v) => write!(f, "{v}"),
            SeriesExpr::Var => f.write_str("z"),
            SeriesExpr::Builtin(b) => write!(f, "{b}"),
            SeriesExpr::Sum(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    t.fmt_child(f, 1)?;
                }
                Ok(())
            }
            SeriesExpr::Product(a, b) => {
                a.fmt_child(f, 1)?;
                f.write_str("*")?;
                b.fmt_child(f, 2)
            }
            SeriesExpr::Quotient(a, b) => {
                a.fmt_child(f, 1)?;
                f.write_str("/")?;
                b.fmt_child(f, 2)
            }
            SeriesExpr::Pow(a, e) => {
                a.fmt_child(f, 3)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl FromStr for SeriesExpr {
    type Err = SeriesError;

    fn from_str(s: &str) -> Result<Self, SeriesError> {
        parse(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Plus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn syntax(offset: usize, message: impl Into<String>) -> SeriesError {
    SeriesError::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, SeriesError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' | b'-' => Tok::Plus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &text[start..i];
                let v = digits
                    .parse::<u64>()
                    .map_err(|_| syntax(start, format!("integer literal `{digits}` too large")))?;
                out.push((Tok::Num(v), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        i += 1;
        out.push((tok, start));
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<SeriesExpr, SeriesError> {
        let mut terms = vec![self.term()?];
        while *self.peek() == Tok::Plus {
            self.bump();
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            SeriesExpr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<SeriesExpr, SeriesError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = SeriesExpr::product(acc, self.factor()?);
                }
                Tok::Slash => {
                    self.bump();
                    acc = SeriesExpr::quotient(acc, self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<SeriesExpr, SeriesError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            (Tok::Num(e), at) => {
                let e = u32::try_from(e).map_err(|_| syntax(at, "exponent too large"))?;
                Ok(SeriesExpr::pow(base, e))
            }
            (_, at) => Err(syntax(at, "expected an unsigned integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<SeriesExpr, SeriesError> {
        match self.bump() {
            (Tok::Num(v), _) => Ok(SeriesExpr::Int(v)),
            (Tok::Ident(name), at) => {
                if name == "z" {
                    Ok(SeriesExpr::Var)
                } else {
                    name.parse::<Builtin>()
                        .map(SeriesExpr::Builtin)
                        .map_err(|_| SeriesError::UnknownBuiltin { name, offset: at })
                }
            }
            (Tok::LParen, _) => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (_, at) => Err(syntax(at, "expected `)`")),
                }
            }
            (Tok::End, at) => Err(syntax(at, "unexpected end of input")),
            (_, at) => Err(syntax(at, "expected a number, `z`, a builtin, or `(`")),
        }
    }
}

pub fn parse(text: &str) -> Result<SeriesExpr, SeriesError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Evaluates an expression to its first `order` coefficients mod 2.
pub fn evaluate(expr: &SeriesExpr, order: usize) -> Result<Gf2Series, SeriesError> {
    if order == 0 {
        return Err(SeriesError::ZeroOrder);
    }
    eval(expr, order)
}

fn eval(expr: &SeriesExpr, order: usize) -> Result<Gf2Series, SeriesError> {
    Ok(match expr {
        SeriesExpr::Int(v) => {
            if v % 2 == 1 {
                Gf2Series::one(order)
            } else {
                Gf2Series::zero(order)
            }
        }
        SeriesExpr::Var => Gf2Series::monomial(1, order),
        SeriesExpr::Builtin(b) => solve_fixed_point(*b, order)?,
        SeriesExpr::Sum(terms) => {
            let mut acc = Gf2Series::zero(order);
            for t in terms {
                acc = acc.add(&eval(t, order)?);
            }
            acc
        }
        SeriesExpr::Product(a, b) => mul_trunc(&eval(a, order)?, &eval(b, order)?, order)?,
        SeriesExpr::Quotient(a, b) => {
            let inv = reciprocal(&eval(b, order)?, order)?;
            mul_trunc(&eval(a, order)?, &inv, order)?
        }
        SeriesExpr::Pow(a, e) => {
            let mut base = eval(a, order)?;
            let mut acc = Gf2Series::one(order);
            let mut e = *e;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul_trunc(&acc, &base, order)?;
                }
                e >>= 1;
                if e > 0 {
                    base = mul_trunc(&base, &base, order)?;
                }
            }
            acc
        }
    })
}
