//! Parser for element expressions: `3*g*h^2/4`, `c^2*delta[3]`, `u[1,2]`.

use crate::error::Error;
use crate::poly::{Var, A, C, E1, E2, G, L1, L2, M, S, T, X, Y, Z};
use num_bigint::BigInt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParsedFactor {
    /// Named generator with exponent; h is carried separately since it is
    /// not an ambient variable (h = 2w in the lattice).
    Var(Var, u32),
    H(u32),
    Delta(u32),
    U(u32, u32),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParsedTerm {
    pub coeff: BigInt,
    pub factors: Vec<ParsedFactor>,
    /// log2 of the divided-monomial denominator (`/4` stores 2).
    pub den_log2: u32,
}

pub type ParsedElement = Vec<ParsedTerm>;

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8, what: &str) -> Result<(), Error> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(what))
        }
    }

    fn err(&self, expected: &str) -> Error {
        Error::Parse {
            offset: self.pos.min(self.src.len()),
            message: format!("expected {expected}"),
        }
    }

    fn integer(&mut self) -> Result<u64, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("an integer"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse().map_err(|_| Error::Parse {
            offset: start,
            message: "integer too large".to_string(),
        })
    }

    /// A generator name: single letter or letter+digit (l1, e2).
    fn name(&mut self) -> Result<(usize, String), Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_lowercase() {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("a generator name"));
        }
        Ok((
            start,
            std::str::from_utf8(&self.src[start..self.pos]).unwrap().to_string(),
        ))
    }
}

fn var_of(name: &str) -> Option<Var> {
    Some(match name {
        "a" => A,
        "c" => C,
        "z" => Z,
        "m" => M,
        "x" => X,
        "y" => Y,
        "t" => T,
        "s" => S,
        "g" => G,
        "l1" => L1,
        "l2" => L2,
        "e1" => E1,
        "e2" => E2,
        _ => return None,
    })
}

fn parse_factor(lx: &mut Lexer) -> Result<ParsedFactor, Error> {
    let (start, name) = lx.name()?;
    let mut exponent = || -> Result<u32, Error> {
        if lx.eat(b'^') {
            Ok(lx.integer()? as u32)
        } else {
            Ok(1)
        }
    };
    match name.as_str() {
        // Unit factor: contributes an empty monomial.
        "1" => Ok(ParsedFactor::Var(A, 0)),
        "delta" => {
            lx.expect(b'[', "'[' after delta")?;
            let j = lx.integer()? as u32;
            lx.expect(b']', "']'")?;
            Ok(ParsedFactor::Delta(j))
        }
        "u" => {
            lx.expect(b'[', "'[' after u")?;
            let i = lx.integer()? as u32;
            lx.expect(b',', "','")?;
            let j = lx.integer()? as u32;
            lx.expect(b']', "']'")?;
            Ok(ParsedFactor::U(i, j))
        }
        "h" => Ok(ParsedFactor::H(exponent()?)),
        _ => match var_of(&name) {
            Some(v) => Ok(ParsedFactor::Var(v, exponent()?)),
            None => Err(Error::Parse {
                offset: start,
                message: format!(
                    "unknown generator {name:?}; known: 1 a c z m x y t s g h l1 l2 e1 e2 delta[j] u[i,j]"
                ),
            }),
        },
    }
}

fn parse_term(lx: &mut Lexer, sign: i64) -> Result<ParsedTerm, Error> {
    let mut coeff = BigInt::from(sign);
    let mut factors = Vec::new();
    let mut den_log2 = 0u32;

    if lx.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
        coeff *= BigInt::from(lx.integer()?);
        if !lx.eat(b'*') {
            // Pure integer term.
            return Ok(ParsedTerm { coeff, factors, den_log2 });
        }
    }
    loop {
        let f = parse_factor(lx)?;
        // x^0 and the unit factor contribute nothing to the monomial.
        if !matches!(f, ParsedFactor::Var(_, 0) | ParsedFactor::H(0)) {
            factors.push(f);
        }
        if !lx.eat(b'*') {
            break;
        }
        // `*` may be followed by another integer only at the front; keep the
        // grammar strict: factors only after the first.
    }
    if lx.eat(b'/') {
        let base = lx.integer()?;
        let den: u64 = if lx.eat(b'^') {
            let e = lx.integer()?;
            base.checked_pow(e as u32).ok_or_else(|| lx.err("a smaller denominator"))?
        } else {
            base
        };
        if den == 0 || den & (den - 1) != 0 {
            return Err(Error::Parse {
                offset: lx.pos,
                message: format!("denominator {den} is not a power of 2"),
            });
        }
        den_log2 = den.trailing_zeros();
    }
    Ok(ParsedTerm { coeff, factors, den_log2 })
}

/// Parse an integer combination of generator monomials.
pub fn parse_element(text: &str) -> Result<ParsedElement, Error> {
    let mut lx = Lexer { src: text.as_bytes(), pos: 0 };
    let mut terms = Vec::new();
    let first_sign = if lx.eat(b'-') { -1 } else { 1 };
    terms.push(parse_term(&mut lx, first_sign)?);
    loop {
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.bump();
                terms.push(parse_term(&mut lx, 1)?);
            }
            Some(b'-') => {
                lx.bump();
                terms.push(parse_term(&mut lx, -1)?);
            }
            Some(_) => return Err(lx.err("'+', '-' or end of input")),
        }
    }
    Ok(terms)
}

impl ParsedTerm {
    /// Degree of the term for the given d; constants sit in degree 0.
    pub fn degree(&self, d: usize) -> Option<usize> {
        if self.factors.is_empty() {
            return Some(0);
        }
        let mut deg = 0usize;
        for f in &self.factors {
            deg += match *f {
                ParsedFactor::Var(v, e) => crate::poly::var_degree(v, d as u32) as usize * e as usize,
                ParsedFactor::H(e) => 2 * d * e as usize,
                ParsedFactor::Delta(j) => j as usize * d + 1,
                ParsedFactor::U(i, j) => 2 * i as usize + j as usize * d + 1,
            };
        }
        Some(deg)
    }
}
