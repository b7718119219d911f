//! Parser for the textual rational-function form: integer-coefficient
//! polynomials in `t` with `^` exponents and `/` fractions, e.g.
//! `(t^2-1)/(2*t)`. The aliases `q` and `nu` also denote the parameter.

use super::ratfunc::RatFunc;
use std::fmt;

#[derive(Debug, PartialEq, Eq)]
pub struct ParseError {
    pub message: String,
    pub position: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}", self.message, self.position)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
pub enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

pub fn tokenize(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(input[start..i].to_string()), start));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(input[start..i].to_string()), start));
            }
            _ => {
                return Err(ParseError {
                    message: format!("unexpected character {:?}", c),
                    position: i,
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(_, p)| *p).unwrap_or(usize::MAX)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { message: message.into(), position: self.here() })
    }

    fn expr(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let d = self.unary()?;
                    if d.is_zero() {
                        return self.err("division by zero");
                    }
                    acc = &acc / &d;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RatFunc, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let k = self.exponent()?;
            return base.pow(k).map_err(|_| ParseError {
                message: "zero to a negative power".into(),
                position: self.here(),
            });
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let mut neg = false;
        let mut parens = false;
        if let Some(Tok::LParen) = self.peek() {
            self.bump();
            parens = true;
        }
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            neg = true;
        }
        let k = match self.bump() {
            Some(Tok::Int(s)) => s.parse::<i64>().map_err(|_| ParseError {
                message: "exponent overflow".into(),
                position: self.here(),
            })?,
            _ => return self.err("expected integer exponent"),
        };
        if parens {
            match self.bump() {
                Some(Tok::RParen) => {}
                _ => return self.err("expected ) after exponent"),
            }
        }
        Ok(if neg { -k } else { k })
    }

    fn atom(&mut self) -> Result<RatFunc, ParseError> {
        match self.bump() {
            Some(Tok::Int(s)) => {
                let n: num_bigint::BigInt = s.parse().map_err(|_| ParseError {
                    message: "bad integer".into(),
                    position: self.here(),
                })?;
                Ok(RatFunc::from_poly(super::poly::IntPoly::constant(n)))
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "t" | "q" | "nu" => Ok(RatFunc::var()),
                _ => self.err(format!("unknown symbol {:?} in coefficient", name)),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => self.err("expected )"),
                }
            }
            _ => self.err("expected a value"),
        }
    }
}

pub fn parse_ratfunc(input: &str) -> Result<RatFunc, ParseError> {
    let toks = tokenize(input)?;
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_form() {
        let v = parse_ratfunc("(t^2-1)/(2*t)").unwrap();
        assert_eq!(v.to_string(), "(t^2-1)/(2*t)");
        let w = parse_ratfunc(&v.to_string()).unwrap();
        assert_eq!(v, w);
    }

    #[test]
    fn aliases_and_negative_powers() {
        assert_eq!(parse_ratfunc("q^-2").unwrap(), parse_ratfunc("1/t^2").unwrap());
        assert_eq!(parse_ratfunc("nu-1").unwrap(), parse_ratfunc("t-1").unwrap());
    }

    #[test]
    fn print_parse_roundtrip() {
        for s in ["0", "1", "t", "(t-1)^3/2", "(t^2-1)/(t^3+t-2)", "-t^2+5"] {
            let v = parse_ratfunc(s).unwrap();
            assert_eq!(parse_ratfunc(&v.to_string()).unwrap(), v, "roundtrip {}", s);
        }
    }
}
