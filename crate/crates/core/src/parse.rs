//! Multivector text in the usual `a0 + a1 e1 + ... + a12 e12` notation,
//! and a JSON form.
//!
//! ```text
//! mv    := [sign] term { ('+' | '-') term }
//! term  := [coeff] ['*'] [blade]          (at least one of coeff, blade)
//! coeff := digits | digits '/' digits | digits '.' digits
//! blade := 'e' digit+
//! ```
//!
//! Whitespace between tokens is ignored. Blade digits may appear in any
//! order and are sorted with the matching sign; repeated blades add up.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{rational_from_str, rational_to_string, Blade, Multivector, Rational, Signature};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("basis index {index} at offset {offset} is not in 1..={dim}")]
    UnknownIndex { index: usize, dim: usize, offset: usize },
    #[error("basis index {index} repeated in blade at offset {offset}")]
    DuplicateIndexInBlade { index: usize, offset: usize },
    #[error("syntax error at offset {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("bad JSON multivector: {0}")]
    Json(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Json,
}

pub fn parse(sig: Signature, text: &str) -> Result<Multivector, ParseError> {
    Parser::new(sig, text).run()
}

struct Parser {
    sig: Signature,
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(sig: Signature, text: &str) -> Self {
        Self {
            sig,
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> ParseError {
        ParseError::SyntaxError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn run(mut self) -> Result<Multivector, ParseError> {
        let mut mv = Multivector::zero(self.sig);
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("empty input"));
        }
        let mut negative = self.sign().unwrap_or(false);
        loop {
            let (coeff, blade) = self.term()?;
            let coeff = if negative { -coeff } else { coeff };
            let acc = mv.coeff(blade) + coeff;
            mv.set_coeff(blade, acc);
            self.skip_ws();
            if self.peek().is_none() {
                return Ok(mv);
            }
            negative = self.sign().ok_or_else(|| self.error("expected '+' or '-'"))?;
        }
    }

    fn term(&mut self) -> Result<(Rational, Blade), ParseError> {
        self.skip_ws();
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
            Some(self.number()?)
        } else {
            None
        };
        self.skip_ws();
        let star = self.peek() == Some('*');
        if star {
            if coeff.is_none() {
                return Err(self.error("'*' without a coefficient"));
            }
            self.pos += 1;
            self.skip_ws();
        }
        let blade = if self.peek() == Some('e') {
            Some(self.blade()?)
        } else if star {
            return Err(self.error("expected blade after '*'"));
        } else {
            None
        };
        match (coeff, blade) {
            (None, None) => Err(self.error("expected coefficient or blade")),
            (c, Some((sign, b))) => {
                let c = c.unwrap_or_else(Rational::one);
                Ok((if sign < 0 { -c } else { c }, b))
            }
            (Some(c), None) => Ok((c, Blade::SCALAR)),
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        let start = self.pos;
        let whole = self.digits();
        match self.peek() {
            Some('/') => {
                self.pos += 1;
                let den = self.digits();
                if whole.is_empty() || den.is_empty() {
                    return Err(self.error("malformed fraction"));
                }
                let den: BigInt = den.parse().expect("digits");
                if den.is_zero() {
                    self.pos = start;
                    return Err(self.error("zero denominator"));
                }
                Ok(Rational::new(whole.parse().expect("digits"), den))
            }
            Some('.') => {
                self.pos += 1;
                let frac = self.digits();
                if whole.is_empty() && frac.is_empty() {
                    return Err(self.error("malformed decimal"));
                }
                let num: BigInt = format!("0{whole}{frac}").parse().expect("digits");
                let den = num_traits::pow(BigInt::from(10), frac.len());
                Ok(Rational::new(num, den))
            }
            _ => {
                if whole.is_empty() {
                    return Err(self.error("malformed number"));
                }
                Ok(Rational::from_integer(whole.parse().expect("digits")))
            }
        }
    }

    fn blade(&mut self) -> Result<(i8, Blade), ParseError> {
        self.pos += 1;
        let start = self.pos;
        let dim = self.sig.dim();
        let mut indices = Vec::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            let index = c.to_digit(10).expect("digit") as usize;
            if index == 0 || index > dim {
                return Err(ParseError::UnknownIndex {
                    index,
                    dim,
                    offset: self.pos,
                });
            }
            if indices.contains(&index) {
                return Err(ParseError::DuplicateIndexInBlade {
                    index,
                    offset: self.pos,
                });
            }
            indices.push(index);
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected basis indices after 'e'"));
        }
        Ok(Blade::from_indices(&indices).expect("indices checked"))
    }
}

/// Plain text: nonzero terms in canonical order, e.g. `3 + e2 - 1/2 e125`.
/// The zero multivector is `0`.
pub fn format_plain(a: &Multivector) -> String {
    let mut out = String::new();
    for (blade, c) in a.terms() {
        let negative = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if blade == Blade::SCALAR {
            out.push_str(&rational_to_string(&mag));
        } else if mag.is_one() {
            out.push_str(&blade.to_string());
        } else {
            out.push_str(&format!("{} {blade}", rational_to_string(&mag)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `a` written as `scale (terms)` with `a / scale` inside the parentheses,
/// the way an inverse is written as `1/det (adjugate)`.
pub fn format_scaled(a: &Multivector, scale: &Rational) -> String {
    let inner = a.scale(&(Rational::one() / scale));
    format!("{} ({})", rational_to_string(scale), format_plain(&inner))
}

#[derive(Serialize, Deserialize)]
struct MvJson {
    signature: [usize; 2],
    coeffs: Vec<String>,
}

pub fn format_json(a: &Multivector) -> String {
    serde_json::to_string(&json_value(a)).expect("serializable")
}

/// JSON object `{"signature": [p, q], "coeffs": [...]}`.
pub fn json_value(a: &Multivector) -> serde_json::Value {
    let sig = a.sig();
    serde_json::to_value(MvJson {
        signature: [sig.p(), sig.q()],
        coeffs: a.coeffs().iter().map(rational_to_string).collect(),
    })
    .expect("serializable")
}

pub fn parse_json(text: &str) -> Result<Multivector, ParseError> {
    let raw: MvJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    let sig = Signature::new(raw.signature[0], raw.signature[1]).map_err(|e| ParseError::Json(e.to_string()))?;
    let coeffs = raw
        .coeffs
        .iter()
        .map(|s| rational_from_str(s).ok_or_else(|| ParseError::Json(format!("bad coefficient '{s}'"))))
        .collect::<Result<Vec<_>, _>>()?;
    Multivector::from_coeffs(sig, coeffs).map_err(|e| ParseError::Json(e.to_string()))
}

pub fn format(a: &Multivector, style: Style) -> String {
    match style {
        Style::Plain => format_plain(a),
        Style::Json => format_json(a),
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_plain(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn printed_style_input() {
        let a = parse(sig(4, 1), "3+e2+e5-e12-e15+3 e125").unwrap();
        let order = sig(4, 1).tables().order.clone();
        let mut expected = Multivector::zero(sig(4, 1));
        for (ix, c) in [
            (&[][..], 3),
            (&[2][..], 1),
            (&[5][..], 1),
            (&[1, 2][..], -1),
            (&[1, 5][..], -1),
            (&[1, 2, 5][..], 3),
        ] {
            let b = Blade::from_indices(ix).unwrap().1;
            expected.set_coeff(b, Rational::from_integer(c.into()));
        }
        assert_eq!(a, expected);
        assert_eq!(order.len(), 32);
    }

    #[test]
    fn permuted_blade() {
        let a = parse(sig(2, 0), "e21").unwrap();
        assert_eq!(a.coeffs()[3], Rational::from_integer((-1).into()));
    }

    #[test]
    fn coefficients() {
        let a = parse(sig(2, 0), "1/2 + 0.25*e1 - .5e2 + 2 * e12 + e12").unwrap();
        let r = |n: i64, d: i64| Rational::new(n.into(), d.into());
        assert_eq!(a.coeffs(), [r(1, 2), r(1, 4), r(-1, 2), r(3, 1)]);
        let b = parse(sig(1, 0), "\u{2212}3 e1").unwrap();
        assert_eq!(b.coeffs()[1], r(-3, 1));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse(sig(5, 0), "2+e7"),
            Err(ParseError::UnknownIndex {
                index: 7,
                offset: 3,
                ..
            })
        ));
        assert!(matches!(
            parse(sig(3, 0), "e0"),
            Err(ParseError::UnknownIndex { index: 0, .. })
        ));
        assert!(matches!(
            parse(sig(3, 0), "e121"),
            Err(ParseError::DuplicateIndexInBlade { index: 1, offset: 3 })
        ));
        for bad in [
            "",
            "  ",
            "+",
            "1 +",
            "1 2",
            "e",
            "2*",
            "*e1",
            "1/0",
            "1/",
            "3 e1 -- e2",
            ".",
        ] {
            assert!(
                matches!(parse(sig(3, 0), bad), Err(ParseError::SyntaxError { .. })),
                "{bad:?}"
            );
        }
        match parse(sig(3, 0), "1 + x") {
            Err(ParseError::SyntaxError { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn plain_format() {
        let a = parse(sig(5, 0), "1+2 e1+3 e23+4 e2345").unwrap();
        assert_eq!(format_plain(&a), "1 + 2 e1 + 3 e23 + 4 e2345");
        let b = parse(sig(2, 0), "-e1 - 1/3 e12").unwrap();
        assert_eq!(format_plain(&b), "-e1 - 1/3 e12");
        assert_eq!(format_plain(&Multivector::zero(sig(3, 3))), "0");
        assert_eq!(parse(sig(2, 0), &format_plain(&b)).unwrap(), b);
    }

    #[test]
    fn scaled_format() {
        let a = parse(sig(1, 0), "1/2 + 3/4 e1").unwrap();
        let s = format_scaled(&a, &Rational::new(1.into(), 4.into()));
        assert_eq!(s, "1/4 (2 + 3 e1)");
    }

    #[test]
    fn json_round_trip() {
        let a = parse(sig(1, 1), "1/2 - e12").unwrap();
        let text = format_json(&a);
        assert_eq!(text, r#"{"signature":[1,1],"coeffs":["1/2","0","0","-1"]}"#);
        assert_eq!(parse_json(&text).unwrap(), a);
        assert!(parse_json(r#"{"signature":[1,1],"coeffs":["1"]}"#).is_err());
        assert!(parse_json(r#"{"signature":[1,1],"coeffs":["x","0","0","0"]}"#).is_err());
        assert!(parse_json("[]").is_err());
    }
}
