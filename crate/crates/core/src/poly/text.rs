//! Polynomial input: ascending coefficient lists (`"-1,-1,0,1"`) or
//! expressions in `z` (`"z^3 - z - 1"`, `"(z-1)*(z^2+1)"`).

use std::str::FromStr;

use num_bigint::BigInt;

use super::IntPolynomial;
use crate::error::{Error, Result};

impl FromStr for IntPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

/// Parses either input form. Any string containing a comma is read as a
/// coefficient list; anything else is an expression.
pub fn parse_polynomial(input: &str) -> Result<IntPolynomial> {
    let normalized: String = input
        .chars()
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if looks_like_list(&normalized) {
        parse_list(&normalized)
    } else {
        let mut p = Parser::new(&normalized);
        let out = p.expr()?;
        p.skip_ws();
        if let Some(c) = p.peek() {
            return Err(p.error(format!("unexpected character '{c}'")));
        }
        Ok(out)
    }
}

fn looks_like_list(s: &str) -> bool {
    s.contains(',')
}

fn parse_list(s: &str) -> Result<IntPolynomial> {
    let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
    let mut coeffs = Vec::new();
    let mut offset = s.find(trimmed).unwrap_or(0);
    for field in trimmed.split(',') {
        let token = field.trim();
        let (line, column) = line_col(s, offset + field.find(token).unwrap_or(0));
        let token = token.strip_prefix('+').unwrap_or(token);
        let c = BigInt::from_str(token).map_err(|_| Error::Parse {
            line,
            column,
            message: format!("expected an integer coefficient, found '{token}'"),
        })?;
        coeffs.push(c);
        offset += field.len() + 1;
    }
    Ok(IntPolynomial::new(coeffs))
}

fn line_col(s: &str, byte: usize) -> (usize, usize) {
    let mut line = 1;
    let mut column = 1;
    for (i, c) in s.char_indices() {
        if i >= byte {
            break;
        }
        if c == '\n' {
            line += 1;
            column = 1;
        } else {
            column += 1;
        }
    }
    (line, column)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self { src, pos: 0 }
    }

    fn error(&self, message: String) -> Error {
        let (line, column) = line_col(self.src, self.pos);
        Error::Parse {
            line,
            column,
            message,
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn expr(&mut self) -> Result<IntPolynomial> {
        self.skip_ws();
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPolynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                // Implicit product: "2z", "3(z+1)", "(z-1)(z+1)".
                Some(c) if c == 'z' || c == '(' || c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<IntPolynomial> {
        self.skip_ws();
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(-self.factor()?)
            }
            Some('+') => {
                self.bump();
                self.factor()
            }
            _ => {
                let base = self.primary()?;
                self.skip_ws();
                if self.peek() == Some('^') {
                    self.bump();
                    self.skip_ws();
                    let e = self.exponent()?;
                    Ok(base.pow(e))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn primary(&mut self) -> Result<IntPolynomial> {
        self.skip_ws();
        match self.peek() {
            Some('z') => {
                self.bump();
                Ok(IntPolynomial::z())
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                let value = BigInt::from_str(digits).expect("ascii digits parse");
                Ok(IntPolynomial::constant(value))
            }
            Some(c) => Err(self.error(format!("unexpected character '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("expected a non-negative integer exponent".into()));
        }
        let start = self.pos;
        let digits = self.digits();
        digits.parse::<u32>().ok().filter(|&e| e <= 100_000).ok_or_else(|| {
            let (line, column) = line_col(self.src, start);
            Error::Parse {
                line,
                column,
                message: format!("exponent '{digits}' out of range"),
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn coefficient_list() {
        assert_eq!(parse_polynomial("1,1,0,-1").unwrap(), p(&[1, 1, 0, -1]));
        assert_eq!(parse_polynomial(" -1, -1, 0, 1 ").unwrap(), p(&[-1, -1, 0, 1]));
        assert_eq!(parse_polynomial("[2,0,1]").unwrap(), p(&[2, 0, 1]));
        assert_eq!(parse_polynomial("\u{2212}1,\u{2212}1,0,1").unwrap(), p(&[-1, -1, 0, 1]));
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_polynomial("z^3 - z - 1").unwrap(), p(&[-1, -1, 0, 1]));
        assert_eq!(parse_polynomial("(z-1)*(z+1)").unwrap(), p(&[-1, 0, 1]));
        assert_eq!(parse_polynomial("(z-1)(z+1)").unwrap(), p(&[-1, 0, 1]));
        assert_eq!(parse_polynomial("2z^2 + 3*z").unwrap(), p(&[0, 3, 2]));
        assert_eq!(parse_polynomial("-(z^2+1)^2").unwrap(), p(&[-1, 0, -2, 0, -1]));
        assert_eq!(parse_polynomial("7").unwrap(), p(&[7]));
    }

    #[test]
    fn display_round_trips() {
        let f = p(&[1, 3, 4, 3, 1, -1, -3, -4, -4, -2, 0, 1]);
        assert_eq!(parse_polynomial(&f.to_string()).unwrap(), f);
        assert_eq!(parse_polynomial(&f.to_canonical()).unwrap(), f);
    }

    #[test]
    fn errors_report_position() {
        match parse_polynomial("z^2 + x") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 7)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial("1,2,\nq") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 1)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial("1, 2, ab") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 7)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("(z+1").is_err());
        assert!(parse_polynomial("z^").is_err());
    }
}
