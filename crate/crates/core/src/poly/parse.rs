//! Expression parser.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | name | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. `^` binds tighter than unary minus, so
//! `-y1^2` is `-(y1^2)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ParseError, ParseErrorKind, Polynomial, Rational, VariableSet};

/// Parses `src` over `vars`, accepting the names `t1..tn`, `y1..yn` and `z`.
pub fn parse_poly(src: &str, vars: VariableSet) -> Result<Polynomial, ParseError> {
    parse_with(src, vars, |name| vars.lookup(name))
}

/// Parses `src` with a caller-supplied name resolver mapping identifiers to
/// variable indices.
pub fn parse_with<F>(src: &str, vars: VariableSet, resolve: F) -> Result<Polynomial, ParseError>
where
    F: Fn(&str) -> Option<usize>,
{
    let mut p = Parser { src: src.as_bytes(), pos: 0, vars, resolve };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error(ParseErrorKind::Syntax(format!("unexpected '{}'", p.src[p.pos] as char))));
    }
    Ok(out)
}

struct Parser<'a, F> {
    src: &'a [u8],
    pos: usize,
    vars: VariableSet,
    resolve: F,
}

impl<F: Fn(&str) -> Option<usize>> Parser<'_, F> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { position: self.pos, kind }
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

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.unary()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ParseError> {
        if let Some(b'-') = self.peek() {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            if let Some(b'-') = self.peek() {
                return Err(self.error(ParseErrorKind::NegativeExponent));
            }
            let start = self.pos;
            let e = self.integer()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| ParseError { position: start, kind: ParseErrorKind::Syntax("exponent too large".into()) })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(ParseErrorKind::Syntax("expected an integer".into())));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as integer"))
    }

    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error(ParseErrorKind::Syntax("expected ')'".into())));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(ParseError { position: at, kind: ParseErrorKind::Syntax("zero denominator".into()) });
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Polynomial::constant(self.vars, value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                match (self.resolve)(name) {
                    Some(idx) => Ok(Polynomial::var(self.vars, idx)),
                    None => Err(ParseError { position: start, kind: ParseErrorKind::UnknownVariable(name.to_string()) }),
                }
            }
            Some(c) => Err(self.error(ParseErrorKind::Syntax(format!("unexpected '{}'", c as char)))),
            None => Err(self.error(ParseErrorKind::Syntax("unexpected end of input".into()))),
        }
    }
}
