//! Leftmost-innermost straightening of words into PBW normal form.

use super::{Element, EngineError, GenId, HopfPresentation, Monomial};
use crate::coeff::RatFunc;

pub(crate) type Word = Vec<(GenId, i64)>;

pub(crate) fn word_of_monomial(m: &Monomial) -> Word {
    m.letters()
}

fn sign(e: i64) -> i8 {
    if e >= 0 {
        1
    } else {
        -1
    }
}

impl HopfPresentation {
    /// Reduce a linear combination of words to an Element in normal form.
    pub fn reduce_words(&self, init: Vec<(RatFunc, Word)>) -> Result<Element, EngineError> {
        let n = self.n_gens();
        let mut out = Element::zero();
        let mut agenda = init;
        let mut steps: u64 = 0;
        'outer: while let Some((coeff, mut w)) = agenda.pop() {
            if coeff.is_zero() {
                continue;
            }
            let mut i = 0usize;
            loop {
                steps += 1;
                if steps > self.step_budget {
                    return Err(EngineError::NonTerminating(self.step_budget));
                }
                if i >= w.len() {
                    break;
                }
                let (g, e) = w[i];
                if e == 0 {
                    w.remove(i);
                    i = i.saturating_sub(1);
                    continue;
                }
                // a letter with |e| >= 2 on a generator with a same-pair rule
                // (group-algebra style) splits into units
                if e.abs() >= 2 {
                    let s = sign(e);
                    if let Some(rhs) = self.rule_for(g, s, g, s) {
                        let rhs = rhs.clone();
                        self.branch(&mut agenda, &coeff, &w, i, i, (g, e - 2 * s as i64), None, &rhs);
                        continue 'outer;
                    }
                }
                if i + 1 >= w.len() {
                    break;
                }
                let (h, f) = w[i + 1];
                if f == 0 {
                    w.remove(i + 1);
                    continue;
                }
                if g == h && !self.has_samegen_rule(g) {
                    let merged = e + f;
                    w.remove(i + 1);
                    if merged == 0 {
                        w.remove(i);
                    } else {
                        w[i] = (g, merged);
                    }
                    i = i.saturating_sub(1);
                    continue;
                }
                let (sg, sh) = (sign(e), sign(f));
                if let Some(rhs) = self.rule_for(g, sg, h, sh) {
                    let rhs = rhs.clone();
                    let left_rest = (g, e - sg as i64);
                    let right_rest = (h, f - sh as i64);
                    self.branch(&mut agenda, &coeff, &w, i, i + 1, left_rest, Some(right_rest), &rhs);
                    continue 'outer;
                }
                if g > h {
                    return Err(EngineError::MissingRule(
                        self.generators[g].name.clone(),
                        self.generators[h].name.clone(),
                    ));
                }
                i += 1;
            }
            // normal: strictly increasing generators, no remaining rule site
            let mut m = Monomial::unit(n);
            for &(g, e) in &w {
                m.exps[g] += e;
            }
            debug_assert!(
                !self
                    .excluded_pairs
                    .iter()
                    .any(|&(a, b)| m.exps[a] != 0 && m.exps[b] != 0),
                "excluded pair survived reduction"
            );
            out.add_term(m, coeff);
        }
        Ok(out)
    }

    /// Substitute `rhs` for the peeled unit letters at positions `li..=ri`.
    #[allow(clippy::too_many_arguments)]
    fn branch(
        &self,
        agenda: &mut Vec<(RatFunc, Word)>,
        coeff: &RatFunc,
        w: &Word,
        li: usize,
        ri: usize,
        left_rest: (GenId, i64),
        right_rest: Option<(GenId, i64)>,
        rhs: &Element,
    ) {
        for (mono, k) in &rhs.terms {
            let mut nw: Word = Vec::with_capacity(w.len() + 4);
            nw.extend_from_slice(&w[..li]);
            if left_rest.1 != 0 {
                nw.push(left_rest);
            }
            nw.extend(word_of_monomial(mono));
            if let Some(rr) = right_rest {
                if rr.1 != 0 {
                    nw.push(rr);
                }
            }
            nw.extend_from_slice(&w[ri + 1..]);
            agenda.push((coeff * k, nw));
        }
    }
}
