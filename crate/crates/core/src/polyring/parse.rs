//! Text parser for homogeneous polynomials.
//!
//! ```text
//! expr   := sign? term (('+'|'-') term)*
//! term   := coeff? ('*'? factor)*
//! factor := var ('^' uint)?
//! coeff  := uint ('/' uint)?
//! ```
//!
//! Whitespace is ignored. There are no parentheses.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Rationals};

use super::monomial::Monomial;
use super::poly::HPoly;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
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

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an unsigned integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn ident(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        let mut coeff = BigRational::from_integer(1.into());
        let mut exps = vec![0u32; self.names.len()];
        let mut seen = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.uint()?;
            let den = if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.uint()?;
                if d.is_zero() {
                    return self.err("zero denominator");
                }
                d
            } else {
                BigInt::from(1)
            };
            coeff = BigRational::new(num, den);
            seen = true;
        }
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    match self.peek() {
                        Some(c) if c.is_ascii_alphabetic() || c == b'_' => {}
                        _ => return self.err("expected a variable after `*`"),
                    }
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {}
                _ => break,
            }
            let v = self.ident()?;
            let mut e = 1u32;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                let pos = self.pos;
                e = self.uint()?.try_into().map_err(|_| Error::Syntax {
                    pos,
                    msg: "exponent too large".into(),
                })?;
            }
            exps[v] += e;
            seen = true;
        }
        if !seen {
            return self.err("expected a term");
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn expr(&mut self) -> Result<Vec<(Monomial, BigRational)>> {
        let mut terms = Vec::new();
        let mut negate = false;
        if let Some(c @ (b'+' | b'-')) = self.peek() {
            negate = c == b'-';
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { -c } else { c }));
            match self.peek() {
                None => break,
                Some(c @ (b'+' | b'-')) => {
                    negate = c == b'-';
                    self.pos += 1;
                }
                Some(c) => return self.err(format!("unexpected character `{}`", c as char)),
            }
        }
        Ok(terms)
    }
}

/// Parses `text` over the rationals with the given variable names.
pub fn parse_poly(text: &str, names: &[String]) -> Result<HPoly<Rationals>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        names,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let terms = p.expr()?;
    HPoly::from_terms(&Rationals, names.len(), terms)
}

/// Parses and reduces into `field`.
pub fn parse_poly_in<F: Field>(field: &F, text: &str, names: &[String]) -> Result<HPoly<F>> {
    parse_poly(text, names)?.reduce_into(field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::default_var_names;

    fn xyz() -> Vec<String> {
        default_var_names(3)
    }

    #[test]
    fn parses_fermat_cubic() {
        let f = parse_poly("x^3 + y^3 + z^3", &xyz()).unwrap();
        assert_eq!(f.degree(), 3);
        assert_eq!(f.num_terms(), 3);
        assert_eq!(f.to_string(), "x^3 + y^3 + z^3");
    }

    #[test]
    fn rejects_parentheses() {
        assert!(matches!(
            parse_poly("(not supported)", &xyz()),
            Err(Error::Syntax { pos: 0, .. })
        ));
    }

    #[test]
    fn rejects_non_homogeneous() {
        assert_eq!(
            parse_poly("x + y^2", &xyz()),
            Err(Error::NonHomogeneous(1, 2))
        );
    }

    #[test]
    fn rejects_unknown_variable() {
        assert_eq!(
            parse_poly("x*w", &xyz()),
            Err(Error::UnknownVariable("w".into()))
        );
    }

    #[test]
    fn accepts_coefficient_forms() {
        let f = parse_poly("-2x y + 3/6*z^2 - x*x", &xyz()).unwrap();
        assert_eq!(f.to_string(), "-x^2 - 2*x*y + 1/2*z^2");
        let g = parse_poly("x z y", &xyz()).unwrap();
        assert_eq!(g.to_string(), "x*y*z");
        assert_eq!(parse_poly("x - x", &xyz()).unwrap().to_string(), "0");
    }

    #[test]
    fn syntax_error_positions() {
        match parse_poly("x^2 + + y", &xyz()) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(parse_poly("x^", &xyz()).is_err());
        assert!(parse_poly("", &xyz()).is_err());
        assert!(parse_poly("1/0 x", &xyz()).is_err());
    }

    #[test]
    fn reduces_into_prime_field() {
        let f = crate::exactlin::PrimeField::new(7).unwrap();
        let p = parse_poly_in(&f, "1/2 x + 7 y", &xyz()).unwrap();
        assert_eq!(p.to_string(), "-3*x");
    }
}
