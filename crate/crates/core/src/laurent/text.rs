//! Canonical text form of polynomials.
//!
//! `-(1/2)*x1*y1^-1 + 1 + 2*x1 + (1+i)*z0^2`: terms in canonical monomial
//! order joined by ` + ` / ` - `, coefficient first. Integer coefficients are
//! bare, other coefficients are parenthesised. The parser also accepts `−`
//! (U+2212), arbitrary whitespace, repeated factors and products of
//! parenthesised coefficients.

use std::fmt;
use std::str::FromStr;

use super::gaussian::GaussianRational;
use super::monomial::Monomial;
use super::poly::{LaurentPoly, PolyAccumulator};
use super::var::VarId;

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.leading_negative();
            let c = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.replace('\u{2212}', "-");
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let out = p.sum()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(format!("unexpected input at byte {}: {:?}", p.pos, &s[p.pos..]));
        }
        Ok(out)
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<LaurentPoly, String> {
        let mut acc = PolyAccumulator::new();
        let mut sign = 1i64;
        if let Some(b'-') = self.peek() {
            self.pos += 1;
            sign = -1;
        } else if let Some(b'+') = self.peek() {
            self.pos += 1;
        }
        loop {
            let (m, c) = self.term()?;
            let c = if sign < 0 { -c } else { c };
            acc.add_term(m, &c);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => break,
            }
        }
        Ok(acc.finish())
    }

    fn term(&mut self) -> Result<(Monomial, GaussianRational), String> {
        let mut coeff = GaussianRational::one();
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(b'(') => {
                    let start = self.pos + 1;
                    let end = self.s[start..]
                        .iter()
                        .position(|&b| b == b')')
                        .ok_or("unclosed parenthesis")?;
                    let inner = std::str::from_utf8(&self.s[start..start + end]).unwrap();
                    let c: GaussianRational = inner.parse()?;
                    coeff = &coeff * &c;
                    self.pos = start + end + 1;
                }
                Some(b) if b.is_ascii_digit() => {
                    let start = self.pos;
                    while self.pos < self.s.len() && (self.s[self.pos].is_ascii_digit() || self.s[self.pos] == b'/') {
                        self.pos += 1;
                    }
                    let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                    let c: GaussianRational = txt.parse()?;
                    coeff = &coeff * &c;
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    let start = self.pos;
                    while self.pos < self.s.len()
                        && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                    let e = self.exponent()?;
                    if name == "i" {
                        coeff = &coeff * &GaussianRational::i_pow(e as i64);
                    } else {
                        let v: VarId = name.parse()?;
                        mono = mono.mul(&Monomial::var_pow(v, e));
                    }
                }
                other => return Err(format!("expected a factor, found {:?}", other.map(|b| b as char))),
            }
            if let Some(b'*') = self.peek() {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((mono, coeff))
    }

    fn exponent(&mut self) -> Result<i32, String> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        txt.parse::<i32>().map_err(|e| format!("bad exponent {txt:?}: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prints_canonically() {
        let p: LaurentPoly = "x1 + 1 - 2*y1^-1*x1 + (1/2+i)*z0".parse().unwrap();
        assert_eq!(p.to_string(), "-2*x1*y1^-1 + 1 + x1 + (1/2+i)*z0");
        let q: LaurentPoly = p.to_string().parse().unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn unicode_minus_and_zero() {
        let p: LaurentPoly = "x1 − x1".parse().unwrap();
        assert!(p.is_zero());
        assert_eq!(p.to_string(), "0");
    }

    #[test]
    fn imaginary_unit_factor() {
        let p: LaurentPoly = "i*t*x1 + (-i)*t".parse().unwrap();
        assert_eq!(p.to_string(), "-(i)*t + (i)*x1*t");
        assert_eq!(p.to_string().parse::<LaurentPoly>().unwrap(), p);
    }

    #[test]
    fn rejects_garbage() {
        assert!("x1 +".parse::<LaurentPoly>().is_err());
        assert!("w3".parse::<LaurentPoly>().is_err());
        assert!("(1/0)".parse::<LaurentPoly>().is_err());
    }
}
