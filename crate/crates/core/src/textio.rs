//! Text form of polynomials.
//!
//! Grammar (whitespace-insensitive):
//!   poly   := [sign] term (sign term)*
//!   term   := factor ('*' factor)*
//!   factor := number | name ['^' exponent]
//!   number := digits ['/' digits]
//!
//! Terms print in monomial order, factors as coef*x^2*theta1*theta2 with
//! the coefficient first and odd factors in canonical order. Parsing
//! multiplies factors out, so repeated odd names normalize to zero.

use crate::field::Scalar;
use crate::poly::Polynomial;
use crate::presentation::Presentation;
use std::fmt;
use std::sync::Arc;

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let pres = self.presentation();
        let mut first = true;
        for (m, c) in self.terms() {
            let (neg, mag) = c.display_parts();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.even_exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(pres.even_vars()[i].name.clone()),
                    _ => factors.push(format!("{}^{}", pres.even_vars()[i].name, e)),
                }
            }
            for &i in m.odd_support() {
                factors.push(pres.odd_vars()[i as usize].name.clone());
            }
            for (b, &l) in m.labels().iter().enumerate() {
                factors.push(pres.blocks()[b].labels[l as usize].clone());
            }
            if factors.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("parse error at column {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    pres: &'a Arc<Presentation>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos, message: message.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn parse_digits(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        std::str::from_utf8(&self.input[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| ParseError { position: start, message: "number out of range".into() })
    }

    fn parse_number(&mut self) -> Result<Scalar, ParseError> {
        let num = self.parse_digits()?;
        if num > i64::MAX as u64 {
            return self.err("number out of range");
        }
        let field = self.pres.field;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let den_pos = self.pos;
            let den = self.parse_digits()?;
            if den == 0 || den > i64::MAX as u64 {
                return Err(ParseError { position: den_pos, message: "bad denominator".into() });
            }
            field.from_ratio(num as i64, den as i64).ok_or(ParseError {
                position: den_pos,
                message: "denominator vanishes in this field".into(),
            })
        } else {
            Ok(field.from_i64(num as i64))
        }
    }

    fn parse_name(&mut self) -> Result<&'a str, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a factor");
        }
        Ok(std::str::from_utf8(&self.input[start..self.pos]).unwrap())
    }

    fn parse_factor(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let c = self.parse_number()?;
                Ok(Polynomial::constant(self.pres, c))
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let pos = self.pos;
                let name = self.parse_name()?;
                let g = self.pres.find(name).ok_or(ParseError {
                    position: pos,
                    message: format!("unknown generator {}", name),
                })?;
                let base = Polynomial::generator(self.pres, g);
                self.skip_ws();
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.parse_digits()?;
                    if e > 64 {
                        return self.err("exponent out of range");
                    }
                    Ok(base.pow(e as u32))
                } else {
                    Ok(base)
                }
            }
            _ => self.err("expected a factor"),
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                acc = acc.mul(&self.parse_factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_poly(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = Polynomial::zero(self.pres);
        self.skip_ws();
        let mut negate = false;
        loop {
            match self.peek() {
                Some(b'-') => {
                    negate = !negate;
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                _ => break,
            }
        }
        let t = self.parse_term()?;
        acc = if negate { acc.sub(&t) } else { acc.add(&t) };
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') | Some(b'-') => {
                    let mut negate = false;
                    while let Some(b @ (b'+' | b'-')) = self.peek() {
                        if b == b'-' {
                            negate = !negate;
                        }
                        self.pos += 1;
                        self.skip_ws();
                    }
                    let t = self.parse_term()?;
                    acc = if negate { acc.sub(&t) } else { acc.add(&t) };
                }
                Some(_) => return self.err("expected + or - between terms"),
            }
        }
    }
}

pub fn parse_polynomial(pres: &Arc<Presentation>, s: &str) -> Result<Polynomial, ParseError> {
    let mut p = Parser { input: s.as_bytes(), pos: 0, pres };
    p.skip_ws();
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    p.parse_poly()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn pres() -> Arc<Presentation> {
        let mut p = Presentation::new(FieldSpec::Rationals);
        p.add_even("x", None).unwrap();
        p.add_odd("theta1").unwrap();
        p.add_odd("theta2").unwrap();
        Arc::new(p)
    }

    #[test]
    fn display_round_trip() {
        let p = pres();
        let cases = [
            "0",
            "1",
            "-1/2",
            "x",
            "x^2 + x*theta1",
            "1 - theta1*theta2 + 2*x^3",
            "x - theta1",
        ];
        for s in cases {
            let f = parse_polynomial(&p, s).unwrap();
            assert_eq!(f.to_string(), s, "canonical form of {}", s);
            let g = parse_polynomial(&p, &f.to_string()).unwrap();
            assert_eq!(f, g);
        }
    }

    #[test]
    fn normalizes_on_parse() {
        let p = pres();
        assert_eq!(parse_polynomial(&p, "theta1*theta1").unwrap().to_string(), "0");
        assert_eq!(parse_polynomial(&p, "theta2*theta1").unwrap().to_string(), "-theta1*theta2");
        assert_eq!(parse_polynomial(&p, "x*2*x").unwrap().to_string(), "2*x^2");
        assert_eq!(parse_polynomial(&p, "- -x").unwrap().to_string(), "x");
        assert_eq!(parse_polynomial(&p, "1/2 + 1/2").unwrap().to_string(), "1");
    }

    #[test]
    fn errors_carry_position() {
        let p = pres();
        let e = parse_polynomial(&p, "x + y").unwrap_err();
        assert_eq!(e.position, 4);
        assert!(e.message.contains("unknown generator y"));
        assert!(parse_polynomial(&p, "").is_err());
        assert!(parse_polynomial(&p, "x +").is_err());
        assert!(parse_polynomial(&p, "x x").is_err());
        assert!(parse_polynomial(&p, "1/0").is_err());
    }

    #[test]
    fn prime_field_coefficients() {
        let mut pr = Presentation::new(FieldSpec::prime(5).unwrap());
        pr.add_even("x", Some(5)).unwrap();
        let p = Arc::new(pr);
        assert_eq!(parse_polynomial(&p, "7*x").unwrap().to_string(), "2*x");
        assert_eq!(parse_polynomial(&p, "-x").unwrap().to_string(), "4*x");
        assert_eq!(parse_polynomial(&p, "1/5").unwrap_err().message, "denominator vanishes in this field");
        assert_eq!(parse_polynomial(&p, "1/2").unwrap().to_string(), "3");
    }

    #[test]
    fn labels_in_text() {
        let mut pr = Presentation::new(FieldSpec::Rationals);
        pr.add_even("x", None).unwrap();
        pr.add_block(vec!["e0".into(), "e1".into()]).unwrap();
        let p = Arc::new(pr);
        let f = parse_polynomial(&p, "x*e0 + e1").unwrap();
        assert_eq!(f.to_string(), "e1 + x*e0");
        assert_eq!(parse_polynomial(&p, "e0 + e1").unwrap(), Polynomial::one(&p));
        assert_eq!(parse_polynomial(&p, "e0*e1").unwrap().to_string(), "0");
    }
}
