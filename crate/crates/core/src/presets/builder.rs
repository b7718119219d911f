//! Assembles presentations from expression strings.

use crate::coeff::{rf, GroundRing};
use crate::drinfeld::SlotSpec;
use crate::hopf::{
    parse_element, DerivedGen, Element, GeneratorSpec, HopfPresentation, IntegralBasis,
    RewriteRule, Slot, TensorElement,
};
use crate::presets::PresetError;

pub struct PresetBuilder {
    name: String,
    ring: GroundRing,
    gens: Vec<(String, bool, String)>,
    coproducts: Vec<(String, Vec<(String, String)>)>,
    antipodes: Vec<(String, String)>,
    rules: Vec<(String, String, String)>,
    excluded: Vec<(String, String)>,
    slots: Vec<SlotSpec>,
    is_hopf: bool,
}

impl PresetBuilder {
    pub fn new(name: &str, ring: GroundRing) -> Self {
        PresetBuilder {
            name: name.into(),
            ring,
            gens: vec![],
            coproducts: vec![],
            antipodes: vec![],
            rules: vec![],
            excluded: vec![],
            slots: vec![],
            is_hopf: true,
        }
    }

    pub fn bialgebra_only(mut self) -> Self {
        self.is_hopf = false;
        self
    }

    pub fn gen(mut self, name: &str, counit: &str) -> Self {
        self.gens.push((name.into(), false, counit.into()));
        self
    }

    pub fn gen_invertible(mut self, name: &str) -> Self {
        self.gens.push((name.into(), true, "1".into()));
        self
    }

    /// Coproduct as a sum of two-leg products; scalars may sit in either leg.
    pub fn coproduct(mut self, gen: &str, entries: &[(&str, &str)]) -> Self {
        self.coproducts.push((
            gen.into(),
            entries.iter().map(|(l, r)| (l.to_string(), r.to_string())).collect(),
        ));
        self
    }

    pub fn antipode(mut self, gen: &str, expr: &str) -> Self {
        self.antipodes.push((gen.into(), expr.into()));
        self
    }

    pub fn rule(mut self, left: &str, right: &str, rhs: &str) -> Self {
        self.rules.push((left.into(), right.into(), rhs.into()));
        self
    }

    pub fn excluded_pair(mut self, a: &str, b: &str) -> Self {
        self.excluded.push((a.into(), b.into()));
        self
    }

    pub fn plain_slot(mut self, gen: &str) -> Self {
        self.slots.push(SlotSpec::Plain(gen.into()));
        self
    }

    pub fn block_slot(
        mut self,
        base: &str,
        members: &[(&str, &[(i64, &str)])],
        excluded: Option<(&str, &str)>,
    ) -> Self {
        self.slots.push(SlotSpec::Block {
            base: base.into(),
            members: members
                .iter()
                .map(|(n, l)| {
                    (n.to_string(), l.iter().map(|(z, c)| (*z, c.to_string())).collect())
                })
                .collect(),
            excluded: excluded.map(|(a, b)| (a.to_string(), b.to_string())),
        });
        self
    }

    pub fn build(self) -> Result<HopfPresentation, PresetError> {
        let gen_names: Vec<(String, bool)> =
            self.gens.iter().map(|(n, i, _)| (n.clone(), *i)).collect();
        let shell = HopfPresentation::parsing_shell(&self.name, self.ring, &gen_names);
        let n = gen_names.len();
        let mut specs = Vec::with_capacity(n);
        for (idx, (name, invertible, counit)) in self.gens.iter().enumerate() {
            let eps = rf(counit);
            let coproduct = if *invertible {
                // group-like by construction
                TensorElement::from_term(
                    vec![
                        crate::hopf::Monomial::single(n, idx, 1),
                        crate::hopf::Monomial::single(n, idx, 1),
                    ],
                    crate::coeff::RatFunc::one(),
                )
            } else {
                let entries = self
                    .coproducts
                    .iter()
                    .find(|(g, _)| g == name)
                    .ok_or_else(|| {
                        PresetError::InvalidParams(format!("missing coproduct for {}", name))
                    })?;
                let mut t = TensorElement::zero(2);
                for (l, r) in &entries.1 {
                    let le = parse_element(&shell, l)?;
                    let re = parse_element(&shell, r)?;
                    for (lm, lc) in &le.terms {
                        for (rm, rc) in &re.terms {
                            t.add_term(vec![lm.clone(), rm.clone()], lc * rc);
                        }
                    }
                }
                t
            };
            let antipode = if self.is_hopf {
                let expr: String = if *invertible {
                    format!("{}^-1", name)
                } else {
                    self.antipodes
                        .iter()
                        .find(|(g, _)| g == name)
                        .map(|(_, e)| e.clone())
                        .ok_or_else(|| {
                            PresetError::InvalidParams(format!("missing antipode for {}", name))
                        })?
                };
                Some(parse_element(&shell, &expr)?)
            } else {
                None
            };
            specs.push(GeneratorSpec {
                name: name.clone(),
                invertible: *invertible,
                counit: eps,
                coproduct,
                antipode,
            });
        }
        let mut rules = Vec::new();
        for (l, r, rhs) in &self.rules {
            let li = shell
                .gen_id(l)
                .ok_or_else(|| PresetError::InvalidParams(format!("unknown generator {}", l)))?;
            let ri = shell
                .gen_id(r)
                .ok_or_else(|| PresetError::InvalidParams(format!("unknown generator {}", r)))?;
            rules.push(RewriteRule { lhs: (li, ri), rhs: parse_element(&shell, rhs)? });
        }
        let excluded = self
            .excluded
            .iter()
            .map(|(a, b)| {
                let ia = shell.gen_id(a).unwrap_or(usize::MAX);
                let ib = shell.gen_id(b).unwrap_or(usize::MAX);
                (ia.min(ib), ia.max(ib))
            })
            .collect();
        let integral = if self.slots.is_empty() {
            None
        } else {
            let mut slots = Vec::new();
            for s in &self.slots {
                match s {
                    SlotSpec::Plain(g) => slots.push(Slot::Plain {
                        gen: shell.gen_id(g).ok_or_else(|| {
                            PresetError::InvalidParams(format!("unknown slot generator {}", g))
                        })?,
                    }),
                    SlotSpec::Block { base, members, excluded } => {
                        let b = shell.gen_id(base).ok_or_else(|| {
                            PresetError::InvalidParams(format!("unknown block base {}", base))
                        })?;
                        let mems: Vec<DerivedGen> = members
                            .iter()
                            .map(|(mn, laurent)| {
                                DerivedGen::new(
                                    mn.clone(),
                                    laurent.iter().map(|(z, c)| (*z, rf(c))).collect(),
                                )
                            })
                            .collect();
                        let exc = excluded.as_ref().map(|(a, b)| {
                            (
                                mems.iter().position(|m| &m.name == a).expect("member"),
                                mems.iter().position(|m| &m.name == b).expect("member"),
                            )
                        });
                        slots.push(Slot::Block { base: b, members: mems, excluded_members: exc });
                    }
                }
            }
            Some(IntegralBasis { slots })
        };
        Ok(HopfPresentation::new(
            self.name,
            self.ring,
            specs,
            rules,
            excluded,
            self.is_hopf,
            integral,
        )?)
    }
}

/// Parse an element against a finished presentation (test convenience).
pub fn el(p: &HopfPresentation, s: &str) -> Element {
    parse_element(p, s).unwrap_or_else(|e| panic!("bad element {:?}: {}", s, e))
}
