//! Text format for polynomials.
//!
//! A polynomial is a sum of terms `c*x1^a1*x2^a2`; `^1` and the `*` before a
//! bare variable are optional, coefficients are `p/q`, and whitespace is
//! free. The printer (`Polynomial::to_string_with_order`) emits terms in
//! descending order under the active monomial order.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rat::Rat;
use crate::ring::{Monomial, Ring};
use num::BigInt;
use num::traits::One;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        digits.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let n = digits
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(e.to_string()))?;
                out.push(Token::Number(n));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(name));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Ring,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        match self.next() {
            Some(Token::Number(n)) => u32::try_from(&n)
                .map_err(|_| Error::Parse(format!("exponent {n} out of range"))),
            other => Err(Error::Parse(format!("expected exponent, got {other:?}"))),
        }
    }

    /// One term: an optional coefficient followed by variable factors.
    fn parse_term(&mut self) -> Result<(Rat, Monomial)> {
        let n = self.ring.num_vars();
        let mut coeff: Option<Rat> = None;
        let mut mono = Monomial::one(n);
        let mut saw_factor = false;
        loop {
            match self.peek() {
                Some(Token::Number(_)) => {
                    let Some(Token::Number(num)) = self.next() else {
                        unreachable!()
                    };
                    let mut value = Rat::from_integer(num);
                    if let Some(Token::Slash) = self.peek() {
                        self.next();
                        match self.next() {
                            Some(Token::Number(den)) => {
                                if den == BigInt::from(0) {
                                    return Err(Error::Parse("zero denominator".into()));
                                }
                                value /= Rat::from_integer(den);
                            }
                            other => {
                                return Err(Error::Parse(format!(
                                    "expected denominator, got {other:?}"
                                )))
                            }
                        }
                    }
                    coeff = Some(match coeff {
                        None => value,
                        Some(c) => c * value,
                    });
                    saw_factor = true;
                }
                Some(Token::Ident(_)) => {
                    let Some(Token::Ident(name)) = self.next() else {
                        unreachable!()
                    };
                    let idx = self.ring.var_index(&name).ok_or_else(|| {
                        Error::Parse(format!("unknown variable {name:?}"))
                    })?;
                    let mut e = 1u32;
                    if let Some(Token::Caret) = self.peek() {
                        self.next();
                        e = self.parse_exponent()?;
                    }
                    mono = mono.mul(&Monomial::var(n, idx).pow(e));
                    saw_factor = true;
                }
                Some(Token::Star) => {
                    self.next();
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(Error::Parse("empty term".into()));
        }
        Ok((coeff.unwrap_or_else(Rat::one), mono))
    }
}

/// Parses the textual polynomial format against the given ring.
pub fn parse_polynomial(ring: &Ring, s: &str) -> Result<Polynomial> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut p = Parser {
        ring,
        tokens,
        pos: 0,
    };
    let mut terms: Vec<(Rat, Monomial)> = Vec::new();
    let mut sign = Rat::one();
    // optional leading sign
    match p.peek() {
        Some(Token::Minus) => {
            p.next();
            sign = -sign;
        }
        Some(Token::Plus) => {
            p.next();
        }
        _ => {}
    }
    loop {
        let (c, m) = p.parse_term()?;
        terms.push((&sign * c, m));
        match p.next() {
            None => break,
            Some(Token::Plus) => sign = Rat::one(),
            Some(Token::Minus) => sign = -Rat::one(),
            other => return Err(Error::Parse(format!("expected + or -, got {other:?}"))),
        }
    }
    Ok(Polynomial::from_terms(ring, terms))
}
