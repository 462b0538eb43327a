//! Text syntax for multivector literals.
//!
//! Terms look like `1/2*e23 - e123 + 2`. Generators are written `e1`..`e9`
//! as compressed digit runs; past nine generators the braced form
//! `e{1,10,12}` spells the indices out. Indices may appear out of order or
//! repeated; the parser normalizes to the canonical ascending blade,
//! collecting signs and metric contractions. The printer emits canonical
//! (grade, mask)-ordered terms and round-trips with the parser bit-exactly.

use std::fmt;
use std::iter::Peekable;
use std::str::Chars;

use num_traits::{One, Signed, Zero};

use crate::blade::{blade_product, Blade};
use crate::error::{GaError, Result};
use crate::multivector::MultiVector;
use crate::scalar::{abs, Rational};
use crate::signature::Signature;

/// Canonical blade (and sign) of an arbitrary generator-index sequence.
pub fn normalize_index_sequence(indices: &[u32], sig: &Signature) -> Result<(Blade, i8)> {
    let mut blade = Blade::SCALAR;
    let mut sign = 1i8;
    for &i in indices {
        if i < 1 || i > sig.n() {
            return Err(GaError::Parse(format!(
                "generator index {i} out of range 1..={}",
                sig.n()
            )));
        }
        let single = Blade::from_indices(&[i]).expect("index checked");
        let (next, s) = blade_product(blade, single, sig);
        blade = next;
        sign *= s;
    }
    Ok((blade, sign))
}

struct Scanner<'a> {
    chars: Peekable<Chars<'a>>,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Scanner {
            chars: input.chars().peekable(),
            pos: 0,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn err(&self, msg: impl Into<String>) -> GaError {
        GaError::Parse(format!("{} (at offset {})", msg.into(), self.pos))
    }

    fn digits(&mut self) -> Result<String> {
        let mut out = String::new();
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            out.push(self.bump().unwrap());
        }
        if out.is_empty() {
            Err(self.err("expected digits"))
        } else {
            Ok(out)
        }
    }

    fn rational(&mut self) -> Result<Rational> {
        let numer = self.digits()?;
        let numer: num_bigint::BigInt = numer.parse().map_err(|_| self.err("bad integer"))?;
        if self.peek() == Some('/') {
            self.bump();
            let denom = self.digits()?;
            let denom: num_bigint::BigInt = denom.parse().map_err(|_| self.err("bad integer"))?;
            if denom.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    /// Blade syntax after the leading 'e' has been consumed.
    fn blade_indices(&mut self) -> Result<Vec<u32>> {
        if self.peek() == Some('{') {
            self.bump();
            let mut indices = Vec::new();
            loop {
                self.skip_ws();
                let index: u32 = self.digits()?.parse().map_err(|_| self.err("bad index"))?;
                indices.push(index);
                self.skip_ws();
                match self.bump() {
                    Some(',') => continue,
                    Some('}') => break,
                    _ => return Err(self.err("expected ',' or '}' in blade")),
                }
            }
            Ok(indices)
        } else {
            let digits = self
                .digits()
                .map_err(|_| self.err("expected blade indices after 'e'"))?;
            Ok(digits.chars().map(|c| c.to_digit(10).unwrap()).collect())
        }
    }
}

/// Parse a multivector literal against a signature.
pub fn parse_multivector(input: &str, sig: Signature) -> Result<MultiVector<Rational>> {
    let mut scanner = Scanner::new(input);
    let mut out = MultiVector::zero(sig);

    scanner.skip_ws();
    let mut negative = match scanner.peek() {
        Some('-') => {
            scanner.bump();
            true
        }
        Some('+') => {
            scanner.bump();
            false
        }
        _ => false,
    };

    loop {
        scanner.skip_ws();
        let (coeff, blade_part) = match scanner.peek() {
            Some(c) if c.is_ascii_digit() => {
                let coeff = scanner.rational()?;
                scanner.skip_ws();
                if scanner.peek() == Some('*') {
                    scanner.bump();
                    scanner.skip_ws();
                    match scanner.bump() {
                        Some('e') => (coeff, Some(scanner.blade_indices()?)),
                        _ => return Err(scanner.err("expected blade after '*'")),
                    }
                } else {
                    (coeff, None)
                }
            }
            Some('e') => {
                scanner.bump();
                (Rational::one(), Some(scanner.blade_indices()?))
            }
            Some(c) => return Err(scanner.err(format!("unexpected character '{c}'"))),
            None => return Err(scanner.err("expected a term")),
        };

        let (blade, sign) = match blade_part {
            Some(indices) => normalize_index_sequence(&indices, &sig)?,
            None => (Blade::SCALAR, 1),
        };
        let mut coeff = if sign < 0 { -coeff } else { coeff };
        if negative {
            coeff = -coeff;
        }
        out = out.try_add(&MultiVector::from_terms(sig, [(blade, coeff)])?)?;

        scanner.skip_ws();
        match scanner.bump() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(c) => return Err(scanner.err(format!("unexpected character '{c}'"))),
        }
    }

    Ok(out)
}

impl fmt::Display for MultiVector<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (blade, coeff)) in self.terms().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let magnitude = abs(coeff);
            if blade.is_scalar() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{blade}")?;
            } else {
                write!(f, "{magnitude}*{blade}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn parses_table_style_literals() {
        let s = sig(4, 1);
        let f = parse_multivector("1/2*e23 + 1/2*e123 - 1/2*e2345 + 1/2*e12345", s).unwrap();
        assert_eq!(f.coeff(Blade::from_indices(&[2, 3]).unwrap()), ratio(1, 2));
        assert_eq!(
            f.coeff(Blade::from_indices(&[2, 3, 4, 5]).unwrap()),
            ratio(-1, 2)
        );
        assert_eq!(f.to_string(), "1/2*e23 + 1/2*e123 - 1/2*e2345 + 1/2*e12345");
    }

    #[test]
    fn normalizes_index_order_and_repeats() {
        let s = sig(3, 0);
        assert_eq!(
            parse_multivector("e21", s).unwrap(),
            parse_multivector("-e12", s).unwrap()
        );
        // e2 e2 contracts through the metric
        assert_eq!(
            parse_multivector("e22", s).unwrap(),
            parse_multivector("1", s).unwrap()
        );
        let lorentz = sig(1, 1);
        assert_eq!(
            parse_multivector("e22", lorentz).unwrap(),
            parse_multivector("-1", lorentz).unwrap()
        );
    }

    #[test]
    fn braced_generators_past_nine() {
        let s = Signature::new(6, 4).unwrap();
        let a = parse_multivector("e{1,10} - 2*e{2,3,10}", s).unwrap();
        assert_eq!(a.to_string(), "e{1,10} - 2*e{2,3,10}");
        assert_eq!(parse_multivector(&a.to_string(), s).unwrap(), a);
    }

    #[test]
    fn scalar_and_sign_forms() {
        let s = sig(2, 0);
        assert_eq!(parse_multivector("-3/2", s).unwrap().scal(), ratio(-3, 2));
        assert_eq!(
            parse_multivector("- e12 + 1", s).unwrap().to_string(),
            "1 - e12"
        );
        assert_eq!(parse_multivector("0", s).unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_malformed_input() {
        let s = sig(2, 0);
        for bad in ["", "e", "e0", "e3", "1/0", "1 +", "* e1", "x"] {
            assert!(parse_multivector(bad, s).is_err(), "{bad:?} should fail");
        }
    }
}
