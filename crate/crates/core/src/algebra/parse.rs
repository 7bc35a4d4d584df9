//! The textual scalar syntax: sums and products of rationals, `t`, roots of
//! unity `z<d>`, parentheses and integer powers, e.g. `3/4`, `t^-2 + 1`,
//! `z3^2`, `(z5 + 1)*t - 2`.

use super::{Parseable, RingDescriptor};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
enum Expr {
    Number(BigInt),
    Symbol(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                tokens.push(Token::Number(digits.parse().expect("digits")));
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push(Token::Ident(chars[start..i].iter().collect()));
            }
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' | '\u{2212}' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                i += 1;
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}` in `{text}`"))),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} in `{}`", self.text)))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Number(_)) | Some(Token::Ident(_)) | Some(Token::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let exp = self.exponent()?;
        Ok(Expr::Pow(Box::new(base), exp))
    }

    fn exponent(&mut self) -> Result<i64> {
        match self.next() {
            Some(Token::Minus) => Ok(-self.exponent()?),
            Some(Token::Plus) => self.exponent(),
            Some(Token::Number(n)) => i64::try_from(n).or_else(|_| self.fail("exponent too large")),
            Some(Token::LParen) => {
                let e = self.exponent()?;
                match self.next() {
                    Some(Token::RParen) => Ok(e),
                    _ => self.fail("expected `)`"),
                }
            }
            _ => self.fail("expected integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Token::Number(n)) => Ok(Expr::Number(n)),
            Some(Token::Ident(name)) => Ok(Expr::Symbol(name)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    _ => self.fail("expected `)`"),
                }
            }
            _ => self.fail("expected a number, symbol or `(`"),
        }
    }
}

fn parse_expr(text: &str) -> Result<Expr> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let mut parser = Parser { tokens: &tokens, pos: 0, text };
    let expr = parser.expr()?;
    if parser.pos != tokens.len() {
        return parser.fail("trailing input");
    }
    Ok(expr)
}

fn eval<R: Parseable>(expr: &Expr, ctx: &R::Ctx) -> Result<R> {
    Ok(match expr {
        Expr::Number(n) => R::from_rational(ctx, &BigRational::from_integer(n.clone()))?,
        Expr::Symbol(name) => R::symbol(ctx, name)?,
        Expr::Neg(a) => eval::<R>(a, ctx)?.neg(),
        Expr::Add(a, b) => eval::<R>(a, ctx)?.add(&eval::<R>(b, ctx)?),
        Expr::Sub(a, b) => eval::<R>(a, ctx)?.sub(&eval::<R>(b, ctx)?),
        Expr::Mul(a, b) => eval::<R>(a, ctx)?.mul(&eval::<R>(b, ctx)?),
        Expr::Div(a, b) => {
            if let (Expr::Number(p), Expr::Number(q)) = (a.as_ref(), b.as_ref()) {
                if q == &BigInt::from(0) {
                    return Err(Error::Parse("division by zero".into()));
                }
                return R::from_rational(ctx, &BigRational::new(p.clone(), q.clone()));
            }
            let d = eval::<R>(b, ctx)?;
            let inv = d.inverse().ok_or_else(|| Error::Parse(format!("division by non-unit {d}")))?;
            eval::<R>(a, ctx)?.mul(&inv)
        }
        Expr::Pow(a, e) => {
            let base = eval::<R>(a, ctx)?;
            base.pow(*e).ok_or_else(|| Error::Parse(format!("negative power of non-unit {base}")))?
        }
    })
}

/// Parses a scalar in a known ring.
pub fn parse_scalar<R: Parseable>(text: &str, ctx: &R::Ctx) -> Result<R> {
    eval(&parse_expr(text)?, ctx)
}

fn collect_symbols(expr: &Expr, symbols: &mut BTreeSet<String>, has_division: &mut bool) {
    match expr {
        Expr::Number(_) => {}
        Expr::Symbol(s) => {
            symbols.insert(s.clone());
        }
        Expr::Neg(a) => collect_symbols(a, symbols, has_division),
        Expr::Pow(a, e) => {
            if *e < 0 {
                *has_division = true;
            }
            collect_symbols(a, symbols, has_division)
        }
        Expr::Div(a, b) => {
            *has_division = true;
            collect_symbols(a, symbols, has_division);
            collect_symbols(b, symbols, has_division);
        }
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            collect_symbols(a, symbols, has_division);
            collect_symbols(b, symbols, has_division);
        }
    }
}

/// Smallest ring in which all the given scalar strings make sense: `Z` for
/// integers, `Q` once a fraction appears, `Q(ζ_d)` for roots of unity
/// (with `d` the lcm of the orders seen) and a Laurent ring once `t` appears.
pub fn infer_ring<S: AsRef<str>>(texts: &[S]) -> Result<RingDescriptor> {
    let mut symbols = BTreeSet::new();
    let mut has_division = false;
    for text in texts {
        collect_symbols(&parse_expr(text.as_ref())?, &mut symbols, &mut has_division);
    }
    let mut order: Option<u32> = None;
    let mut laurent = false;
    for s in &symbols {
        if s == "t" {
            laurent = true;
            continue;
        }
        let digits = s
            .strip_prefix("zeta")
            .or_else(|| s.strip_prefix('z'))
            .map(|d| d.trim_start_matches('_'))
            .ok_or_else(|| Error::Parse(format!("unknown symbol `{s}`")))?;
        let d: u32 =
            digits.parse().map_err(|_| Error::Parse(format!("root of unity `{s}` needs an explicit order")))?;
        if d == 0 {
            return Err(Error::Parse("z0 is not a root of unity".into()));
        }
        order = Some(order.map_or(d, |o| o.lcm(&d)));
    }
    let base = match order {
        Some(d) => RingDescriptor::Cyclotomic(d),
        None if laurent || has_division => RingDescriptor::Rationals,
        None => RingDescriptor::Integers,
    };
    Ok(if laurent { RingDescriptor::laurent_over(base) } else { base })
}
