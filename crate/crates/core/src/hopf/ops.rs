//! Multiplication, counit, coproduct, antipode, iterated coproducts Δⁿ and
//! the maps δₙ.

use super::rewrite::word_of_monomial;
use super::{Element, EngineError, HopfPresentation, Monomial, TensorElement};
use crate::coeff::RatFunc;

impl HopfPresentation {
    /// Normal form of a scaled word of generator letters.
    pub fn normal_form_word(
        &self,
        coeff: RatFunc,
        word: Vec<(usize, i64)>,
    ) -> Result<Element, EngineError> {
        for &(g, e) in &word {
            if g >= self.n_gens() {
                return Err(EngineError::BadPresentation("letter out of range".into()));
            }
            if e < 0 && !self.generators[g].invertible {
                return Err(EngineError::NonInvertiblePower);
            }
        }
        self.reduce_words(vec![(coeff, word)])
    }

    /// Re-reduce an element termwise; idempotent on normal forms.
    pub fn normal_form(&self, x: &Element) -> Result<Element, EngineError> {
        let words = x
            .terms
            .iter()
            .map(|(m, c)| (c.clone(), word_of_monomial(m)))
            .collect();
        self.reduce_words(words)
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, EngineError> {
        let mut words = Vec::with_capacity(x.terms.len() * y.terms.len());
        for (mx, cx) in &x.terms {
            for (my, cy) in &y.terms {
                let mut w = word_of_monomial(mx);
                w.extend(word_of_monomial(my));
                words.push((cx * cy, w));
            }
        }
        self.reduce_words(words)
    }

    pub fn multiply_many(&self, factors: &[Element]) -> Result<Element, EngineError> {
        let mut acc = Element::one(self.n_gens());
        for f in factors {
            acc = self.multiply(&acc, f)?;
        }
        Ok(acc)
    }

    /// x^k for k ≥ 0, or for any k when x is a single invertible-monomial term.
    pub fn power(&self, x: &Element, k: i64) -> Result<Element, EngineError> {
        if k >= 0 {
            let mut acc = Element::one(self.n_gens());
            for _ in 0..k {
                acc = self.multiply(&acc, x)?;
            }
            return Ok(acc);
        }
        let (m, c) = x.as_single_term().ok_or(EngineError::NonInvertiblePower)?;
        for (g, _) in m.letters() {
            if !self.generators[g].invertible {
                return Err(EngineError::NonInvertiblePower);
            }
        }
        let ck = c.pow(k).map_err(|_| EngineError::ZeroToNegativePower)?;
        let mk = Monomial { exps: m.exps.iter().map(|e| e * k).collect() };
        self.normal_form_word(ck, word_of_monomial(&mk))
    }

    pub fn counit(&self, x: &Element) -> Result<RatFunc, EngineError> {
        let mut out = RatFunc::zero();
        'term: for (m, c) in &x.terms {
            let mut v = c.clone();
            for (g, e) in m.letters() {
                let eps = &self.generators[g].counit;
                if eps.is_zero() {
                    if e > 0 {
                        continue 'term;
                    }
                    return Err(EngineError::ZeroToNegativePower);
                }
                v = &v * &eps.pow(e).map_err(|_| EngineError::ZeroToNegativePower)?;
            }
            out = &out + &v;
        }
        Ok(out)
    }

    /// Componentwise product of equal-rank tensors, each leg renormalized.
    pub fn tensor_multiply(
        &self,
        a: &TensorElement,
        b: &TensorElement,
    ) -> Result<TensorElement, EngineError> {
        assert_eq!(a.rank, b.rank);
        let mut out = TensorElement::zero(a.rank);
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                // legwise products, then distribute
                let mut partial: Vec<(Vec<Monomial>, RatFunc)> =
                    vec![(Vec::with_capacity(a.rank), ca * cb)];
                for leg in 0..a.rank {
                    let mut w = word_of_monomial(&la[leg]);
                    w.extend(word_of_monomial(&lb[leg]));
                    let prod = self.reduce_words(vec![(RatFunc::one(), w)])?;
                    let mut next = Vec::with_capacity(partial.len() * prod.terms.len());
                    for (legs, c) in &partial {
                        for (m, k) in &prod.terms {
                            let mut nl = legs.clone();
                            nl.push(m.clone());
                            next.push((nl, c * k));
                        }
                    }
                    partial = next;
                }
                for (legs, c) in partial {
                    out.add_term(legs, c);
                }
            }
        }
        Ok(out)
    }

    /// Δ of a single generator power.
    fn coproduct_letter(&self, g: usize, e: i64) -> Result<TensorElement, EngineError> {
        let n = self.n_gens();
        if self.generators[g].invertible {
            // group-like: Δ(g^e) = g^e ⊗ g^e
            return Ok(TensorElement::from_term(
                vec![Monomial::single(n, g, e), Monomial::single(n, g, e)],
                RatFunc::one(),
            ));
        }
        if e < 0 {
            return Err(EngineError::NonInvertiblePower);
        }
        let table = &self.generators[g].coproduct;
        let mut acc = TensorElement::from_term(
            vec![Monomial::unit(n), Monomial::unit(n)],
            RatFunc::one(),
        );
        for _ in 0..e {
            acc = self.tensor_multiply(&acc, table)?;
        }
        Ok(acc)
    }

    /// Δ extended as an algebra morphism.
    pub fn coproduct(&self, x: &Element) -> Result<TensorElement, EngineError> {
        let n = self.n_gens();
        let mut out = TensorElement::zero(2);
        for (m, c) in &x.terms {
            let mut acc = TensorElement::from_term(
                vec![Monomial::unit(n), Monomial::unit(n)],
                c.clone(),
            );
            for (g, e) in m.letters() {
                acc = self.tensor_multiply(&acc, &self.coproduct_letter(g, e)?)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// S extended as an algebra anti-morphism.
    pub fn antipode(&self, x: &Element) -> Result<Element, EngineError> {
        if !self.is_hopf {
            return Err(EngineError::NotAHopfAlgebra(self.name.clone()));
        }
        let n = self.n_gens();
        let mut out = Element::zero();
        for (m, c) in &x.terms {
            let mut acc = Element::scalar(n, c.clone());
            for (g, e) in m.letters().into_iter().rev() {
                let s = self.generators[g]
                    .antipode
                    .as_ref()
                    .ok_or_else(|| EngineError::NotAHopfAlgebra(self.name.clone()))?
                    .clone();
                let spow = self.power(&s, e)?;
                acc = self.multiply(&acc, &spow)?;
            }
            out = out.add(&acc);
        }
        Ok(out)
    }

    /// Δⁿ with Δ⁰ = ε (rank 0), Δ¹ = id, Δⁿ = (Δ ⊗ id^{⊗(n−2)}) ∘ Δⁿ⁻¹.
    pub fn iterated_coproduct(&self, x: &Element, n: usize) -> Result<TensorElement, EngineError> {
        match n {
            0 => {
                let mut t = TensorElement::zero(0);
                t.add_term(vec![], self.counit(x)?);
                Ok(t)
            }
            1 => {
                let mut t = TensorElement::zero(1);
                for (m, c) in &x.terms {
                    t.add_term(vec![m.clone()], c.clone());
                }
                Ok(t)
            }
            _ => {
                let prev = self.iterated_coproduct(x, n - 1)?;
                self.tensor_apply_coproduct(&prev, 0)
            }
        }
    }

    /// Apply Δ to the given leg, splicing the result in place.
    pub fn tensor_apply_coproduct(
        &self,
        t: &TensorElement,
        leg: usize,
    ) -> Result<TensorElement, EngineError> {
        assert!(leg < t.rank);
        let mut out = TensorElement::zero(t.rank + 1);
        for (legs, c) in &t.terms {
            let dl = self.coproduct(&Element::from_term(legs[leg].clone(), RatFunc::one()))?;
            for (two, k) in &dl.terms {
                let mut nl = Vec::with_capacity(t.rank + 1);
                nl.extend_from_slice(&legs[..leg]);
                nl.push(two[0].clone());
                nl.push(two[1].clone());
                nl.extend_from_slice(&legs[leg + 1..]);
                out.add_term(nl, c * k);
            }
        }
        Ok(out)
    }

    /// Apply ε to the given leg, contracting it away.
    pub fn tensor_apply_counit(
        &self,
        t: &TensorElement,
        leg: usize,
    ) -> Result<TensorElement, EngineError> {
        assert!(leg < t.rank);
        let mut out = TensorElement::zero(t.rank - 1);
        for (legs, c) in &t.terms {
            let e = self.counit(&Element::from_term(legs[leg].clone(), RatFunc::one()))?;
            if e.is_zero() {
                continue;
            }
            let mut nl = Vec::with_capacity(t.rank - 1);
            nl.extend_from_slice(&legs[..leg]);
            nl.extend_from_slice(&legs[leg + 1..]);
            out.add_term(nl, c * &e);
        }
        Ok(out)
    }

    /// δₙ = (id − ε)^{⊗n} ∘ Δⁿ; δ₀ = ε as a rank-0 tensor.
    pub fn delta_n(&self, x: &Element, n: usize) -> Result<TensorElement, EngineError> {
        if n == 0 {
            return self.iterated_coproduct(x, 0);
        }
        let dn = self.iterated_coproduct(x, n)?;
        let ngens = self.n_gens();
        let mut out = TensorElement::zero(n);
        for (legs, c) in &dn.terms {
            // per-leg projection x ↦ x − ε(x)·1, then distribute
            let mut partial: Vec<(Vec<Monomial>, RatFunc)> = vec![(vec![], c.clone())];
            for m in legs {
                let e = self.counit(&Element::from_term(m.clone(), RatFunc::one()))?;
                let mut proj = Element::from_term(m.clone(), RatFunc::one());
                proj.add_term(Monomial::unit(ngens), -&e);
                let mut next = Vec::with_capacity(partial.len() * proj.terms.len().max(1));
                for (ls, k) in &partial {
                    for (pm, pc) in &proj.terms {
                        let mut nl = ls.clone();
                        nl.push(pm.clone());
                        next.push((nl, k * pc));
                    }
                }
                partial = next;
                if partial.is_empty() {
                    break;
                }
            }
            for (legs, k) in partial {
                if legs.len() == n {
                    out.add_term(legs, k);
                }
            }
        }
        Ok(out)
    }

    /// Convolution m ∘ (S ⊗ id) ∘ Δ (or (id ⊗ S) for `right`), for axiom checks.
    pub fn antipode_convolution(&self, x: &Element, right: bool) -> Result<Element, EngineError> {
        let d = self.coproduct(x)?;
        let mut out = Element::zero();
        for (legs, c) in &d.terms {
            let (a, b) = (
                Element::from_term(legs[0].clone(), RatFunc::one()),
                Element::from_term(legs[1].clone(), RatFunc::one()),
            );
            let prod = if right {
                self.multiply(&a, &self.antipode(&b)?)?
            } else {
                self.multiply(&self.antipode(&a)?, &b)?
            };
            out = out.add(&prod.scale(c));
        }
        Ok(out)
    }
}
