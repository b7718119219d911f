//! Expression grammar for elements: generator names (and integral-family
//! member names), rational scalars in the parameter, `* + - ^` and
//! parentheses. Whitespace-insensitive.

use super::{Element, EngineError, HopfPresentation, Slot};
use crate::coeff::{parse_ratfunc, tokenize, RatFunc, Tok};

pub fn parse_element(p: &HopfPresentation, input: &str) -> Result<Element, EngineError> {
    let toks = tokenize(input).map_err(|e| EngineError::Parse(e.to_string()))?;
    let mut parser = ElemParser { p, toks, pos: 0 };
    let v = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return Err(EngineError::Parse("trailing input".into()));
    }
    Ok(v)
}

struct ElemParser<'a> {
    p: &'a HopfPresentation,
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl<'a> ElemParser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, m: impl Into<String>) -> Result<T, EngineError> {
        Err(EngineError::Parse(m.into()))
    }

    fn expr(&mut self) -> Result<Element, EngineError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, EngineError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.unary()?;
                    acc = self.p.multiply(&acc, &rhs)?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let rhs = self.unary()?;
                    let s = rhs.as_scalar().ok_or(EngineError::DivisionByNonScalar)?;
                    if s.is_zero() {
                        return self.err("division by zero");
                    }
                    let inv = s.recip().expect("nonzero scalar");
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Element, EngineError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(self.unary()?.scale(&-&RatFunc::one()))
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Element, EngineError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let k = self.exponent()?;
            return self.p.power(&base, k);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64, EngineError> {
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
            Some(Tok::Int(s)) => s
                .parse::<i64>()
                .map_err(|_| EngineError::Parse("exponent overflow".into()))?,
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

    fn atom(&mut self) -> Result<Element, EngineError> {
        let n = self.p.n_gens();
        match self.bump() {
            Some(Tok::Int(s)) => {
                let c = parse_ratfunc(&s).map_err(|e| EngineError::Parse(e.to_string()))?;
                Ok(Element::scalar(n, c))
            }
            Some(Tok::Ident(name)) => {
                if let Some(g) = self.p.gen_id(&name) {
                    return Ok(Element::generator(n, g));
                }
                // integral-family member names resolve to their substitutions
                if let Some(basis) = &self.p.integral {
                    for slot in &basis.slots {
                        if let Slot::Block { base, members, .. } = slot {
                            for m in members {
                                if m.name == name {
                                    return Ok(m.as_element(n, *base));
                                }
                            }
                        }
                    }
                }
                match name.as_str() {
                    "t" | "q" | "nu" => Ok(Element::scalar(n, RatFunc::var())),
                    _ => self.err(format!("unknown symbol {:?}", name)),
                }
            }
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
