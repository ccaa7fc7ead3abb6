//! Parser for the canonical ASCII expression grammar used by the CLI and
//! the certificate format.
//!
//! Grammar (whitespace insensitive):
//!   expr   := ['-'] term (('+' | '-') term)*
//!   term   := factor (('*' | '/') factor)*
//!   factor := atom ('^' ['-'] integer)?
//!   atom   := '(' expr ')' | 'f' | 't' | 'z' | integer
//!
//! `z` denotes the distinguished primitive root of unity of the order
//! passed to the parser. Every expression evaluates to a rational
//! function in Q(zeta)(f, t).

use crate::bipoly::BivariatePolynomial;
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::ratfun::RationalFunction2;

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    zeta_order: u64,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            got => Err(Error::Parse(format!(
                "expected '{}' at byte {} (found {:?})",
                c as char,
                self.pos,
                got.map(|b| b as char)
            ))),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected integer at byte {start}")));
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|e| Error::Parse(format!("integer out of range: {e}")))
    }

    fn expr(&mut self) -> Result<RationalFunction2> {
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.bump();
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        while let Some(op) = self.peek() {
            match op {
                b'+' => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                b'-' => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction2> {
        let mut acc = self.factor()?;
        while let Some(op) = self.peek() {
            match op {
                b'*' => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                b'/' => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc
                        .div(&rhs)
                        .map_err(|_| Error::Parse("division by zero in expression".into()))?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RationalFunction2> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.bump();
            let mut sign = 1i64;
            if self.peek() == Some(b'-') {
                self.bump();
                sign = -1;
            }
            let e = self.integer()?;
            return base
                .pow(sign * e)
                .map_err(|_| Error::Parse("zero raised to a negative power".into()));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunction2> {
        match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'f') => {
                self.bump();
                Ok(RationalFunction2::from_poly(BivariatePolynomial::var_f()))
            }
            Some(b't') => {
                self.bump();
                Ok(RationalFunction2::from_poly(BivariatePolynomial::var_t()))
            }
            Some(b'z') => {
                self.bump();
                Ok(RationalFunction2::constant(
                    CyclotomicNumber::root_of_unity(self.zeta_order),
                ))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(RationalFunction2::from_integer(n))
            }
            got => Err(Error::Parse(format!(
                "unexpected input at byte {} (found {:?})",
                self.pos,
                got.map(|b| b as char)
            ))),
        }
    }
}

/// Parse an expression into a rational function; `z` means the primitive
/// root of unity of the given order.
pub fn parse_ratfun(input: &str, zeta_order: u64) -> Result<RationalFunction2> {
    let mut p = Parser {
        input: input.as_bytes(),
        pos: 0,
        zeta_order,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.input.len() {
        return Err(Error::Parse(format!(
            "trailing input at byte {}: {:?}",
            p.pos,
            &input[p.pos..]
        )));
    }
    Ok(out)
}

/// Parse an expression that must denote a polynomial (the denominator of
/// the parsed fraction has to be a nonzero constant, which is folded in).
pub fn parse_polynomial(input: &str, zeta_order: u64) -> Result<BivariatePolynomial> {
    let r = parse_ratfun(input, zeta_order)?;
    match r.den().constant_value() {
        Some(c) if !c.is_zero() => {
            let cinv = c.inv().expect("nonzero constant");
            Ok(r.num().scale(&cinv))
        }
        _ => Err(Error::Parse(format!(
            "expected a polynomial, got a proper fraction: {input}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bipoly::poly_i64;

    #[test]
    fn parses_spec_elements() {
        let a = parse_ratfun("f/(f - t)", 1).unwrap();
        assert_eq!(
            a,
            RationalFunction2::new(poly_i64(&[(1, 0, 1)]), poly_i64(&[(1, 0, 1), (0, 1, -1)]))
                .unwrap()
        );
        let b = parse_ratfun("(f - t^2)/(f - t - t^2)", 1).unwrap();
        assert_eq!(
            b,
            RationalFunction2::new(
                poly_i64(&[(1, 0, 1), (0, 2, -1)]),
                poly_i64(&[(1, 0, 1), (0, 1, -1), (0, 2, -1)])
            )
            .unwrap()
        );
    }

    #[test]
    fn roundtrips_canonical_rendering() {
        for s in [
            "f/(f - t)",
            "(f - t^2)/(f - t - t^2)",
            "(f + t)/(f - t)",
            "3*f^2*t",
            "f - t - t^2",
            "1",
            "0",
        ] {
            let parsed = parse_ratfun(s, 1).unwrap();
            assert_eq!(parsed.to_string(), s, "canonical round trip for {s}");
        }
    }

    #[test]
    fn zeta_and_negative_powers() {
        let z = parse_ratfun("z^2", 4).unwrap();
        assert_eq!(z, RationalFunction2::from_integer(-1));
        let r = parse_ratfun("f^-2 * f^3", 1).unwrap();
        assert_eq!(
            r,
            RationalFunction2::from_poly(BivariatePolynomial::var_f())
        );
        let neg = parse_ratfun("-f + f", 1).unwrap();
        assert!(neg.is_zero());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfun("f +", 1).is_err());
        assert!(parse_ratfun("(f", 1).is_err());
        assert!(parse_ratfun("f)", 1).is_err());
        assert!(parse_ratfun("x", 1).is_err());
        assert!(parse_ratfun("1/0", 1).is_err());
        assert!(parse_polynomial("f/(f - t)", 1).is_err());
    }
}
