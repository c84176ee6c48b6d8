//! Concrete syntax for polynomial maps.
//!
//! ```text
//! map    := '(' [ poly (',' poly)* ] ')'
//! poly   := ['-' | '+'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' posint] | var ['^' nat]
//! var    := 'x' posint
//! ```
//!
//! Whitespace is ignored between tokens. The printed form of every
//! [`PolyMap`] is accepted and parses back to the same map.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{ArityProfile, PolyMap, Polynomial, Scalar};

type Term = (Scalar, BTreeMap<usize, u32>);

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(src: &str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            column: self.pos + 1,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn map(&mut self) -> Result<Vec<Vec<Term>>> {
        self.expect('(')?;
        let mut polys = Vec::new();
        if self.peek() == Some(')') {
            self.pos += 1;
        } else {
            loop {
                polys.push(self.poly()?);
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    Some(c) => return self.error(format!("expected ',' or ')', found '{c}'")),
                    None => return self.error("unclosed '(', expected ')'"),
                }
            }
        }
        if let Some(c) = self.peek() {
            return self.error(format!("unexpected '{c}' after the map"));
        }
        Ok(polys)
    }

    fn poly(&mut self) -> Result<Vec<Term>> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let (c, e) = self.term()?;
            terms.push((if negate { -c } else { c }, e));
            match self.peek() {
                Some('+') => negate = false,
                Some('-') => negate = true,
                _ => return Ok(terms),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Term> {
        let mut coeff = Scalar::one();
        let mut exps = BTreeMap::new();
        loop {
            match self.peek() {
                Some('x') => {
                    self.pos += 1;
                    let at = self.pos;
                    let index: usize = self.digits()?.parse().unwrap_or(0);
                    if index == 0 {
                        self.pos = at;
                        return self.error("variables are numbered from x1");
                    }
                    let mut exp = 1u32;
                    if self.peek() == Some('^') {
                        self.pos += 1;
                        let at = self.pos;
                        exp = match self.digits()?.parse() {
                            Ok(e) => e,
                            Err(_) => {
                                self.pos = at;
                                return self.error("exponent too large");
                            }
                        };
                    }
                    let slot = exps.entry(index - 1).or_insert(0u32);
                    *slot = match slot.checked_add(exp) {
                        Some(e) => e,
                        None => return self.error("exponent too large"),
                    };
                }
                Some(c) if c.is_ascii_digit() => {
                    let numer: BigInt = self.digits()?.parse().expect("ascii digits");
                    let mut denom = BigInt::from(1);
                    if self.peek() == Some('/') {
                        self.pos += 1;
                        let at = self.pos;
                        denom = self.digits()?.parse().expect("ascii digits");
                        if denom == BigInt::from(0) {
                            self.pos = at;
                            return self.error("zero denominator");
                        }
                    }
                    coeff *= &Scalar::from_big(numer, denom)?;
                }
                Some(c) => {
                    return self.error(format!("expected a number or variable, found '{c}'"))
                }
                None => return self.error("expected a number or variable, found end of input"),
            }
            if self.peek() != Some('*') {
                return Ok((coeff, exps));
            }
            self.pos += 1;
        }
    }
}

/// Largest variable index used in `src` (1-based), or 0 for none.
fn max_var(polys: &[Vec<Term>]) -> usize {
    polys
        .iter()
        .flatten()
        .filter_map(|(_, e)| e.keys().next_back())
        .map(|i| i + 1)
        .max()
        .unwrap_or(0)
}

/// Parses a map. With `blocks`, the domain is that profile; otherwise the
/// domain is a single block whose dimension is the largest variable index.
pub fn parse_map(src: &str, blocks: Option<&ArityProfile>) -> Result<PolyMap> {
    let polys = Parser::new(src).map()?;
    let used = max_var(&polys);
    let domain = match blocks {
        Some(profile) => {
            if used > profile.total() {
                return Err(Error::BlockMismatch(format!(
                    "x{used} is used but the blocks {profile} provide only {} variables",
                    profile.total()
                )));
            }
            profile.clone()
        }
        None => ArityProfile::single(used),
    };
    let dim = domain.total();
    let coords = polys
        .into_iter()
        .map(|terms| {
            Polynomial::from_terms(
                dim,
                terms.into_iter().map(|(c, e)| {
                    let mut v = vec![0; dim];
                    for (i, k) in e {
                        v[i] = k;
                    }
                    (c, v)
                }),
            )
        })
        .collect::<Result<_>>()?;
    PolyMap::new(domain, coords)
}

/// Parses a block profile such as `2,1,3` (parentheses optional).
pub fn parse_blocks(src: &str) -> Result<ArityProfile> {
    let trimmed = src.trim().trim_start_matches('(').trim_end_matches(')');
    let dims = trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Usage(format!("invalid block list {src:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    ArityProfile::new(dims)
}

/// The source line followed by a caret under `column` (1-based).
pub fn caret(src: &str, column: usize) -> String {
    let pad: String = src
        .chars()
        .take(column.saturating_sub(1))
        .map(|c| if c == '\t' { '\t' } else { ' ' })
        .collect();
    format!("  {src}\n  {pad}^")
}
