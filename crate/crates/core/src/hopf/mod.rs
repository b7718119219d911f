//! Finitely presented algebras with PBW-type normal forms over ℚ(t), their
//! Hopf (or bialgebra) structure maps, iterated coproducts and the maps δₙ.

mod axioms;
mod integral;
pub mod linalg;
mod ops;
mod parse;
mod rewrite;

pub use axioms::{check_hopf_axioms, random_element, AxiomCheck, AxiomReport};
pub use integral::{DerivedGen, IntCoords, IntMonomial, IntTensorCoords, IntegralBasis, IntegralExpander, Slot};
pub use parse::parse_element;

use crate::coeff::{GroundRing, RatFunc};
use std::collections::BTreeMap;
use std::fmt;

pub type GenId = usize;

#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    #[error("rewriting exceeded the step budget of {0}")]
    NonTerminating(u64),
    #[error("no rewrite rule for adjacent pair {0}·{1}")]
    MissingRule(String, String),
    #[error("presentation {0} is a bialgebra without antipode")]
    NotAHopfAlgebra(String),
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,
    #[error("negative power of a non-invertible element")]
    NonInvertiblePower,
    #[error("division by a non-scalar element")]
    DivisionByNonScalar,
    #[error("invalid presentation: {0}")]
    BadPresentation(String),
    #[error("integral expansion failed: {0}")]
    NotTriangular(String),
    #[error("presentation has no integral basis descriptor")]
    NoIntegralBasis,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Exponent vector over the ordered generators of a presentation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exps: Vec<i64>,
}

impl Monomial {
    pub fn unit(n_gens: usize) -> Self {
        Monomial { exps: vec![0; n_gens] }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn single(n_gens: usize, gen: GenId, exp: i64) -> Self {
        let mut m = Monomial::unit(n_gens);
        m.exps[gen] = exp;
        m
    }

    /// Letters in generator order.
    pub fn letters(&self) -> Vec<(GenId, i64)> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(g, &e)| (g, e))
            .collect()
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.iter().map(|e| e.abs()).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

/// Sparse linear combination of normal-form monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    pub terms: BTreeMap<Monomial, RatFunc>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn one(n_gens: usize) -> Self {
        Element::from_term(Monomial::unit(n_gens), RatFunc::one())
    }

    pub fn scalar(n_gens: usize, c: RatFunc) -> Self {
        Element::from_term(Monomial::unit(n_gens), c)
    }

    pub fn generator(n_gens: usize, g: GenId) -> Self {
        Element::from_term(Monomial::single(n_gens, g, 1), RatFunc::one())
    }

    pub fn from_term(m: Monomial, c: RatFunc) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.scale(&-&RatFunc::one()))
    }

    pub fn scale(&self, c: &RatFunc) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// The coefficient of the unit monomial.
    pub fn unit_coeff(&self) -> RatFunc {
        self.terms
            .iter()
            .find(|(m, _)| m.is_unit())
            .map(|(_, c)| c.clone())
            .unwrap_or_else(RatFunc::zero)
    }

    /// Some(c) when the element is c·1.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        if self.is_zero() {
            return Some(RatFunc::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Some((monomial, coeff)) when the element has exactly one term.
    pub fn as_single_term(&self) -> Option<(Monomial, RatFunc)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((m.clone(), c.clone()))
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(m, c)| format!("({})·{:?}", c, m)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sparse element of the n-fold tensor power.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    pub rank: usize,
    pub terms: BTreeMap<Vec<Monomial>, RatFunc>,
}

impl TensorElement {
    pub fn zero(rank: usize) -> Self {
        TensorElement { rank, terms: BTreeMap::new() }
    }

    pub fn from_term(legs: Vec<Monomial>, c: RatFunc) -> Self {
        let mut t = TensorElement::zero(legs.len());
        t.add_term(legs, c);
        t
    }

    pub fn add_term(&mut self, legs: Vec<Monomial>, c: RatFunc) {
        debug_assert_eq!(legs.len(), self.rank);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(legs);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = &*o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.rank, other.rank);
        let mut out = self.clone();
        for (legs, c) in &other.terms {
            out.add_term(legs.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.scale(&-&RatFunc::one()))
    }

    pub fn scale(&self, c: &RatFunc) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero(self.rank);
        }
        TensorElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Swap the two legs of a rank-2 tensor.
    pub fn flip(&self) -> TensorElement {
        assert_eq!(self.rank, 2);
        let mut out = TensorElement::zero(2);
        for (legs, c) in &self.terms {
            out.add_term(vec![legs[1].clone(), legs[0].clone()], c.clone());
        }
        out
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0⊗");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(legs, c)| {
                let ls: Vec<String> = legs.iter().map(|m| format!("{:?}", m)).collect();
                format!("({})·{}", c, ls.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// One generator with its structure-map entries.
#[derive(Clone)]
pub struct GeneratorSpec {
    pub name: String,
    pub invertible: bool,
    pub counit: RatFunc,
    pub coproduct: TensorElement,
    pub antipode: Option<Element>,
}

/// A straightening rule for the adjacent word g_i·g_j.
#[derive(Clone)]
pub struct RewriteRule {
    pub lhs: (GenId, GenId),
    pub rhs: Element,
}

pub(crate) type SignedPair = (GenId, i8, GenId, i8);

/// Finitely presented Hopf algebra (or bialgebra) over ℚ(t) with PBW normal
/// forms and an optional integral-form descriptor.
#[derive(Clone)]
pub struct HopfPresentation {
    pub name: String,
    pub ring: GroundRing,
    pub generators: Vec<GeneratorSpec>,
    pub rules: Vec<RewriteRule>,
    pub excluded_pairs: Vec<(GenId, GenId)>,
    pub is_hopf: bool,
    pub integral: Option<IntegralBasis>,
    pub step_budget: u64,
    pub(crate) compiled: BTreeMap<SignedPair, Element>,
}

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

impl HopfPresentation {
    pub fn new(
        name: impl Into<String>,
        ring: GroundRing,
        generators: Vec<GeneratorSpec>,
        rules: Vec<RewriteRule>,
        excluded_pairs: Vec<(GenId, GenId)>,
        is_hopf: bool,
        integral: Option<IntegralBasis>,
    ) -> Result<Self, EngineError> {
        let mut p = HopfPresentation {
            name: name.into(),
            ring,
            generators,
            rules,
            excluded_pairs,
            is_hopf,
            integral,
            step_budget: DEFAULT_STEP_BUDGET,
            compiled: BTreeMap::new(),
        };
        p.validate_and_compile()?;
        Ok(p)
    }

    /// Parse-context shell: generators only, placeholder group-like tables,
    /// no rules. Used while assembling a presentation from expressions.
    pub(crate) fn parsing_shell(
        name: &str,
        ring: GroundRing,
        gen_names: &[(String, bool)],
    ) -> Self {
        let n = gen_names.len();
        let generators = gen_names
            .iter()
            .enumerate()
            .map(|(i, (name, invertible))| GeneratorSpec {
                name: name.clone(),
                invertible: *invertible,
                counit: RatFunc::one(),
                coproduct: TensorElement::from_term(
                    vec![Monomial::single(n, i, 1), Monomial::single(n, i, 1)],
                    RatFunc::one(),
                ),
                antipode: None,
            })
            .collect();
        HopfPresentation {
            name: name.to_string(),
            ring,
            generators,
            rules: vec![],
            excluded_pairs: vec![],
            is_hopf: false,
            integral: None,
            step_budget: DEFAULT_STEP_BUDGET,
            compiled: BTreeMap::new(),
        }
    }

    pub fn n_gens(&self) -> usize {
        self.generators.len()
    }

    pub fn gen_id(&self, name: &str) -> Option<GenId> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn gen_name(&self, id: GenId) -> &str {
        &self.generators[id].name
    }

    fn validate_and_compile(&mut self) -> Result<(), EngineError> {
        self.ring.validate().map_err(EngineError::BadPresentation)?;
        let n = self.n_gens();
        let mut names = std::collections::BTreeSet::new();
        for g in &self.generators {
            if !names.insert(g.name.clone()) {
                return Err(EngineError::BadPresentation(format!(
                    "duplicate generator {}",
                    g.name
                )));
            }
            if g.coproduct.rank != 2 {
                return Err(EngineError::BadPresentation(format!(
                    "coproduct of {} must have rank 2",
                    g.name
                )));
            }
            if g.invertible {
                // negative powers of Δ, ε, S are taken through the group-like shape
                let expected = TensorElement::from_term(
                    vec![
                        Monomial::single(n, self.gen_id(&g.name).unwrap(), 1),
                        Monomial::single(n, self.gen_id(&g.name).unwrap(), 1),
                    ],
                    RatFunc::one(),
                );
                if g.coproduct != expected || !g.counit.is_one() {
                    return Err(EngineError::BadPresentation(format!(
                        "invertible generator {} must be group-like",
                        g.name
                    )));
                }
                if self.is_hopf {
                    match &g.antipode {
                        Some(s) if s.as_single_term().is_some() => {}
                        _ => {
                            return Err(EngineError::BadPresentation(format!(
                                "invertible generator {} needs a single-term antipode",
                                g.name
                            )))
                        }
                    }
                }
            }
            if self.is_hopf && g.antipode.is_none() {
                return Err(EngineError::BadPresentation(format!(
                    "Hopf presentation lacks antipode for {}",
                    g.name
                )));
            }
        }
        for &(i, j) in &self.excluded_pairs {
            if i >= n || j >= n || i + 1 != j {
                return Err(EngineError::BadPresentation(
                    "excluded pairs must be adjacent in the generator order".into(),
                ));
            }
            if self.generators[i].invertible || self.generators[j].invertible {
                return Err(EngineError::BadPresentation(
                    "excluded pairs must involve non-invertible generators".into(),
                ));
            }
        }
        // compile signed rule table
        let mut compiled = BTreeMap::new();
        for rule in &self.rules {
            let (i, j) = rule.lhs;
            if i >= n || j >= n {
                return Err(EngineError::BadPresentation("rule references unknown generator".into()));
            }
            compiled.insert((i, 1i8, j, 1i8), rule.rhs.clone());
            // derive signed variants for invertible participants of pure
            // q-commutation rules λ·(swap)
            let pure = rule.rhs.as_single_term().and_then(|(m, c)| {
                let mut want = Monomial::unit(n);
                want.exps[i] += 1;
                want.exps[j] += 1;
                if m == want && i != j {
                    Some(c)
                } else {
                    None
                }
            });
            if let Some(lambda) = pure {
                let gi_inv = self.generators[i].invertible;
                let gj_inv = self.generators[j].invertible;
                for (si, sj) in [(-1i8, 1i8), (1, -1), (-1, -1)] {
                    if (si < 0 && !gi_inv) || (sj < 0 && !gj_inv) {
                        continue;
                    }
                    let coeff = lambda
                        .pow((si as i64) * (sj as i64))
                        .map_err(|_| EngineError::BadPresentation("rule with zero coefficient".into()))?;
                    let mut m = Monomial::unit(n);
                    m.exps[i] += si as i64;
                    m.exps[j] += sj as i64;
                    compiled.insert((i, si, j, sj), Element::from_term(m, coeff));
                }
            }
        }
        // every out-of-order pair must be reducible
        for i in 0..n {
            for j in 0..i {
                if !compiled.contains_key(&(i, 1, j, 1)) {
                    return Err(EngineError::BadPresentation(format!(
                        "missing straightening rule for {}·{}",
                        self.generators[i].name, self.generators[j].name
                    )));
                }
            }
        }
        for &(i, j) in &self.excluded_pairs {
            if !compiled.contains_key(&(i, 1, j, 1)) {
                return Err(EngineError::BadPresentation(format!(
                    "excluded pair {}·{} lacks its reduction rule",
                    self.generators[i].name, self.generators[j].name
                )));
            }
        }
        self.compiled = compiled;
        if let Some(ib) = &self.integral {
            ib.validate(self).map_err(EngineError::BadPresentation)?;
        }
        Ok(())
    }

    pub(crate) fn rule_for(&self, g: GenId, sg: i8, h: GenId, sh: i8) -> Option<&Element> {
        self.compiled.get(&(g, sg, h, sh))
    }

    pub(crate) fn has_samegen_rule(&self, g: GenId) -> bool {
        self.compiled.contains_key(&(g, 1, g, 1))
    }

    /// Structural equality: same generator data, rules, exclusions and ring.
    pub fn structurally_equal(&self, other: &HopfPresentation) -> Vec<String> {
        let mut diffs = Vec::new();
        if self.ring != other.ring {
            diffs.push("ground rings differ".to_string());
        }
        if self.is_hopf != other.is_hopf {
            diffs.push("one side is a bialgebra only".to_string());
        }
        let names_a: Vec<_> = self.generators.iter().map(|g| &g.name).collect();
        let names_b: Vec<_> = other.generators.iter().map(|g| &g.name).collect();
        if names_a != names_b {
            diffs.push(format!("generator lists differ: {:?} vs {:?}", names_a, names_b));
            return diffs;
        }
        for (ga, gb) in self.generators.iter().zip(&other.generators) {
            if ga.invertible != gb.invertible {
                diffs.push(format!("invertibility of {} differs", ga.name));
            }
            if ga.counit != gb.counit {
                diffs.push(format!("counit of {} differs", ga.name));
            }
            if ga.coproduct != gb.coproduct {
                diffs.push(format!("coproduct of {} differs", ga.name));
            }
            if ga.antipode != gb.antipode {
                diffs.push(format!("antipode of {} differs", ga.name));
            }
        }
        if self.excluded_pairs != other.excluded_pairs {
            diffs.push("excluded pairs differ".to_string());
        }
        let keys: std::collections::BTreeSet<_> =
            self.compiled.keys().chain(other.compiled.keys()).collect();
        for k in keys {
            match (self.compiled.get(k), other.compiled.get(k)) {
                (Some(a), Some(b)) if a == b => {}
                _ => diffs.push(format!(
                    "rule {}^{}·{}^{} differs",
                    self.generators[k.0].name, k.1, self.generators[k.2].name, k.3
                )),
            }
        }
        diffs
    }
}
