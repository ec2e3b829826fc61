//! Textual polynomial syntax, e.g. `3/2 z1^2 z3 - z2 + 1`.
//!
//! Variables are `z1..zn`, coefficients are exact `p/q` or integer literals, a
//! product may be written by juxtaposition or with `*`, and whitespace is
//! ignored. Printing orders terms by total degree, then by descending
//! exponent vector, so `z1` precedes `z2` and `z1^2` precedes `z1 z2`.

use std::cmp::Reverse;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{PolyMap, Polynomial, Rational};
use crate::weights::MultiIndex;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&MultiIndex, &Rational)> = self.terms().collect();
        terms.sort_by_key(|(a, _)| (a.degree(), Reverse(*a)));
        for (k, (alpha, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            let mono = format_monomial(alpha);
            if mono.is_empty() {
                write!(f, "{}", format_rational(&magnitude))?;
            } else if magnitude.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{} {mono}", format_rational(&magnitude))?;
            }
        }
        Ok(())
    }
}

fn format_monomial(alpha: &MultiIndex) -> String {
    let mut parts = Vec::new();
    for (j, &a) in alpha.exponents().iter().enumerate() {
        match a {
            0 => {}
            1 => parts.push(format!("z{}", j + 1)),
            _ => parts.push(format!("z{}^{a}", j + 1)),
        }
    }
    parts.join(" ")
}

/// `p/q` in lowest terms, or `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses an exact rational literal: `p`, `-p`, `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    let digits = |k: &mut usize| {
        let start = *k;
        while *k < chars.len() && chars[*k].is_ascii_digit() {
            *k += 1;
        }
        chars[start..*k].iter().collect::<String>()
    };
    while k < chars.len() {
        let c = chars[k];
        match c {
            c if c.is_whitespace() => k += 1,
            '+' => {
                out.push(Token::Plus);
                k += 1;
            }
            '-' => {
                out.push(Token::Minus);
                k += 1;
            }
            '*' => {
                out.push(Token::Star);
                k += 1;
            }
            '/' => {
                out.push(Token::Slash);
                k += 1;
            }
            '^' => {
                out.push(Token::Caret);
                k += 1;
            }
            'z' => {
                k += 1;
                // whitespace between `z` and its index is tolerated
                while k < chars.len() && chars[k].is_whitespace() {
                    k += 1;
                }
                let d = digits(&mut k);
                let idx: usize = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("expected variable index after `z` in `{s}`")))?;
                out.push(Token::Var(idx));
            }
            c if c.is_ascii_digit() => {
                let d = digits(&mut k);
                out.push(Token::Number(d.parse().unwrap()));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}` in `{s}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    n: usize,
    src: &'a str,
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

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} in `{}`", self.src))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.n);
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected `+` or `-` between terms")),
            };
            first = false;
            let (alpha, c) = self.term()?;
            out.add_term(alpha, if negative { -c } else { c });
        }
        if first {
            return Err(self.err("empty polynomial"));
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(MultiIndex, Rational)> {
        let mut coeff = Rational::one();
        let mut exps = vec![0u32; self.n];
        let mut factors = 0;
        loop {
            match self.peek() {
                Some(Token::Number(_)) => {
                    let Some(Token::Number(num)) = self.next() else {
                        unreachable!()
                    };
                    let mut value = Rational::from_integer(num);
                    if self.peek() == Some(&Token::Slash) {
                        self.pos += 1;
                        match self.next() {
                            Some(Token::Number(d)) if !d.is_zero() => {
                                value /= Rational::from_integer(d);
                            }
                            Some(Token::Number(_)) => return Err(self.err("zero denominator")),
                            _ => return Err(self.err("expected denominator after `/`")),
                        }
                    }
                    coeff *= value;
                }
                Some(Token::Var(_)) => {
                    let Some(Token::Var(idx)) = self.next() else {
                        unreachable!()
                    };
                    if idx == 0 || idx > self.n {
                        return Err(self.err(&format!("variable z{idx} outside z1..z{}", self.n)));
                    }
                    let mut e = 1u32;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        match self.next() {
                            Some(Token::Number(d)) => {
                                e = u32::try_from(&d).map_err(|_| self.err("exponent too large"))?;
                            }
                            _ => return Err(self.err("expected exponent after `^`")),
                        }
                    }
                    exps[idx - 1] = exps[idx - 1]
                        .checked_add(e)
                        .ok_or_else(|| self.err("exponent too large"))?;
                }
                _ => break,
            }
            factors += 1;
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
                if !matches!(self.peek(), Some(Token::Number(_)) | Some(Token::Var(_))) {
                    return Err(self.err("expected factor after `*`"));
                }
            }
        }
        if factors == 0 {
            return Err(self.err("expected a term"));
        }
        Ok((MultiIndex::new(exps), coeff))
    }
}

/// Parses a polynomial in the variables `z1..zn`.
pub fn parse_polynomial(s: &str, n: usize) -> Result<Polynomial> {
    let tokens = tokenize(s)?;
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
        n,
        src: s,
    };
    parser.polynomial()
}

/// Parses a polynomial map written one component per line. Blank lines and
/// lines starting with `#` are skipped; the number of components fixes `n`.
pub fn parse_poly_map(text: &str) -> Result<PolyMap> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.is_empty() {
        return Err(Error::Parse("polynomial map has no components".into()));
    }
    let n = lines.len();
    let components = lines
        .iter()
        .map(|l| parse_polynomial(l, n))
        .collect::<Result<Vec<_>>>()?;
    PolyMap::new(components)
}

/// One component per line, newline-terminated.
pub fn format_poly_map(f: &PolyMap) -> String {
    let mut out = String::new();
    for p in f.components() {
        out.push_str(&p.to_string());
        out.push('\n');
    }
    out
}
