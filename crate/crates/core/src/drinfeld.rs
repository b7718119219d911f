//! The two duality functors at the ring prime: ℏ-adic lattice tests on δₙ,
//! bounded membership certification, and construction of the rescaled
//! presentations (augmentation ideal scaled down, or distinguished
//! subalgebra of rapidly divisible elements).

use crate::coeff::{RatFunc, Valuation};
use crate::hopf::{
    DerivedGen, Element, EngineError, HopfPresentation, IntMonomial, IntTensorCoords,
    IntegralBasis, IntegralExpander, Monomial, RewriteRule, Slot, TensorElement,
};
use std::collections::HashMap;

#[derive(Debug, thiserror::Error)]
pub enum DrinfeldError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("element is not in the integral form: coefficient {0} of {1}")]
    NotInIntegralForm(String, String),
    #[error("generator {name} failed membership: witness n = {witness}")]
    NotCertified { name: String, witness: usize },
    #[error("not closed over the ground ring: {0} has coefficient {1}")]
    NotClosed(String, String),
    #[error("plan entry {0}: {1}")]
    BadPlan(String, String),
    #[error("rescale exponents of magnitude ≥ 2 are not supported")]
    UnsupportedExponent,
}

/// How far a coefficient family sits from the required prime power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Deficiency {
    /// min over coefficients of v(c) − n; ≥ 0 means inside ℏⁿ·lattice
    Finite(i64),
    /// δₙ vanished
    Infinite,
    /// some coefficient is not even in the localized lattice
    OutsideLattice,
}

#[derive(Debug, Clone)]
pub struct MembershipVerdict {
    pub status: MembershipStatus,
    /// (n, deficiency) for each tested n
    pub trace: Vec<(usize, Deficiency)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipStatus {
    MemberCertifiedUpTo(usize),
    NotMember { witness: usize },
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self.status, MembershipStatus::MemberCertifiedUpTo(_))
    }
}

/// Check δ-image coordinates against ℏⁿ, returning the expanded certificate.
pub fn tensor_lattice_test(
    p: &HopfPresentation,
    x: &TensorElement,
    n: i64,
) -> Result<(bool, IntTensorCoords), DrinfeldError> {
    let mut ex = IntegralExpander::new(p)?;
    let coords = ex.tensor_coords(x)?;
    let ok = coords.values().all(|c| c.in_prime_power(n, &p.ring));
    Ok((ok, coords))
}

fn tensor_deficiency(p: &HopfPresentation, coords: &IntTensorCoords, n: i64) -> Deficiency {
    if coords.is_empty() {
        return Deficiency::Infinite;
    }
    let mut min: Option<i64> = None;
    for c in coords.values() {
        if !p.ring.is_unit_denominator(c.den()) {
            return Deficiency::OutsideLattice;
        }
        match c.valuation(p.ring.prime) {
            Valuation::Infinite => {}
            Valuation::Finite(v) => {
                let d = v - n;
                min = Some(min.map_or(d, |m| m.min(d)));
            }
        }
    }
    match min {
        Some(d) => Deficiency::Finite(d),
        None => Deficiency::Infinite,
    }
}

pub fn default_n_max(a: &Element) -> usize {
    (2 * a.total_degree().max(0) as usize) + 4
}

/// Bounded certification that every δₙ(a) lies in ℏⁿ·(lattice)^⊗n.
pub fn hprime_membership(
    p: &HopfPresentation,
    a: &Element,
    n_max: usize,
) -> Result<MembershipVerdict, DrinfeldError> {
    let mut ex = IntegralExpander::new(p)?;
    let base = ex.coords(a)?;
    for (m, c) in &base {
        if !c.in_ring(&p.ring) {
            return Err(DrinfeldError::NotInIntegralForm(c.to_string(), format!("{:?}", m)));
        }
    }
    let mut trace = Vec::new();
    for n in 1..=n_max {
        let coords = ex.delta_coords(a, n)?;
        let d = tensor_deficiency(p, &coords, n as i64);
        trace.push((n, d));
        match d {
            Deficiency::Finite(v) if v < 0 => {
                return Ok(MembershipVerdict {
                    status: MembershipStatus::NotMember { witness: n },
                    trace,
                })
            }
            Deficiency::OutsideLattice => {
                return Ok(MembershipVerdict {
                    status: MembershipStatus::NotMember { witness: n },
                    trace,
                })
            }
            _ => {}
        }
    }
    Ok(MembershipVerdict { status: MembershipStatus::MemberCertifiedUpTo(n_max), trace })
}

/// One new generator of a rescaled presentation.
#[derive(Debug, Clone)]
pub struct PlanEntry {
    pub name: String,
    pub kind: EntryKind,
}

#[derive(Debug, Clone)]
pub enum EntryKind {
    /// keep an invertible group-like generator, possibly renamed
    Keep { source: String },
    /// new := ℏ^exponent · source + offset
    Rescale {
        /// element expression over the source presentation
        source: String,
        exponent: i64,
        /// constant term restored after scaling (the new counit value)
        offset: RatFunc,
        /// expression for the inverse when the new generator is invertible
        inverse: Option<String>,
    },
}

impl PlanEntry {
    pub fn keep(name: &str, source: &str) -> Self {
        PlanEntry { name: name.into(), kind: EntryKind::Keep { source: source.into() } }
    }

    pub fn rescale(name: &str, source: &str, exponent: i64) -> Self {
        PlanEntry {
            name: name.into(),
            kind: EntryKind::Rescale {
                source: source.into(),
                exponent,
                offset: RatFunc::zero(),
                inverse: None,
            },
        }
    }

    pub fn rescale_shifted(name: &str, source: &str, exponent: i64, offset: RatFunc) -> Self {
        PlanEntry {
            name: name.into(),
            kind: EntryKind::Rescale { source: source.into(), exponent, offset, inverse: None },
        }
    }

    pub fn with_inverse(mut self, expr: &str) -> Self {
        if let EntryKind::Rescale { inverse, .. } = &mut self.kind {
            *inverse = Some(expr.into());
        }
        self
    }

    pub fn exponent(&self) -> i64 {
        match &self.kind {
            EntryKind::Keep { .. } => 0,
            EntryKind::Rescale { exponent, .. } => *exponent,
        }
    }
}

/// Integral descriptor of the produced presentation, by generator names.
#[derive(Debug, Clone)]
pub enum SlotSpec {
    Plain(String),
    Block {
        base: String,
        /// (name, Laurent expansion in the base: exponent → coefficient string)
        members: Vec<(String, Vec<(i64, String)>)>,
        excluded: Option<(String, String)>,
    },
}

/// Generator-rescaling recipe producing a new presentation.
#[derive(Debug, Clone)]
pub struct RescalePlan {
    pub name: String,
    pub entries: Vec<PlanEntry>,
    pub excluded_pairs: Vec<(String, String)>,
    pub integral: Vec<SlotSpec>,
    pub is_hopf: bool,
}

struct ResolvedEntry {
    name: String,
    y: Element,
    invertible: bool,
    inverse: Option<Element>,
    exponent: i64,
    counit: RatFunc,
    lead_mono: Monomial,
    lead_coeff: RatFunc,
}

/// Change of PBW coordinates from the source algebra onto monomials in the
/// resolved new generators.
struct Reexpressor<'a> {
    p: &'a HopfPresentation,
    entries: &'a [ResolvedEntry],
    /// per entry: index of the pivot non-invertible source generator, if any
    pivots: Vec<Option<usize>>,
    /// per invertible source generator: (entry with lead g^{ +1}, entry with g^{-1})
    inv_map: HashMap<usize, (Option<usize>, Option<usize>)>,
    expansion_cache: HashMap<Vec<i64>, Element>,
    new_excluded: Vec<(usize, usize)>,
}

impl<'a> Reexpressor<'a> {
    fn new(
        p: &'a HopfPresentation,
        entries: &'a [ResolvedEntry],
        new_excluded: Vec<(usize, usize)>,
    ) -> Result<Self, DrinfeldError> {
        let mut pivots = Vec::new();
        let mut inv_map: HashMap<usize, (Option<usize>, Option<usize>)> = HashMap::new();
        let mut used_pivots = std::collections::BTreeSet::new();
        for (idx, e) in entries.iter().enumerate() {
            let lead = &e.lead_mono;
            let pivot = lead
                .letters()
                .into_iter()
                .find(|&(g, _)| !p.generators[g].invertible);
            match pivot {
                Some((g, ex)) => {
                    if ex != 1 {
                        return Err(DrinfeldError::BadPlan(
                            e.name.clone(),
                            "leading term must be linear in its pivot generator".into(),
                        ));
                    }
                    if !used_pivots.insert(g) {
                        return Err(DrinfeldError::BadPlan(
                            e.name.clone(),
                            "two entries share a pivot generator".into(),
                        ));
                    }
                    pivots.push(Some(g));
                }
                None => {
                    // purely invertible leading term: must be a single g^{±1}
                    let ls = lead.letters();
                    if ls.len() != 1 || ls[0].1.abs() != 1 {
                        return Err(DrinfeldError::BadPlan(
                            e.name.clone(),
                            "invertible leading term must be a single generator power ±1".into(),
                        ));
                    }
                    let (g, ex) = ls[0];
                    let slot = inv_map.entry(g).or_insert((None, None));
                    if ex == 1 {
                        slot.0 = Some(idx);
                    } else {
                        slot.1 = Some(idx);
                    }
                    pivots.push(None);
                }
            }
        }
        Ok(Reexpressor { p, entries, pivots, inv_map, expansion_cache: HashMap::new(), new_excluded })
    }

    fn solve_alpha(&self, m: &Monomial) -> Option<Vec<i64>> {
        let mut residual = m.exps.clone();
        let mut alpha = vec![0i64; self.entries.len()];
        for (idx, e) in self.entries.iter().enumerate() {
            if let Some(g) = self.pivots[idx] {
                let a = residual[g];
                if a < 0 {
                    return None;
                }
                if a == 0 {
                    continue;
                }
                alpha[idx] = a;
                for (h, ex) in e.lead_mono.letters() {
                    residual[h] -= a * ex;
                }
            }
        }
        for (g, r) in residual.iter_mut().enumerate() {
            if *r == 0 {
                continue;
            }
            let Some(&(pos, neg)) = self.inv_map.get(&g) else {
                return None;
            };
            let z = *r;
            if z > 0 {
                let idx = pos?;
                alpha[idx] = if self.entries[idx].invertible { z } else { z };
                *r = 0;
            } else {
                // prefer an inverse-leading entry; else an invertible new gen
                if let Some(idx) = neg {
                    alpha[idx] = -z;
                    *r = 0;
                } else {
                    let idx = pos?;
                    if !self.entries[idx].invertible {
                        return None;
                    }
                    alpha[idx] = z;
                    *r = 0;
                }
            }
        }
        if residual.iter().any(|&r| r != 0) {
            return None;
        }
        for &(i, j) in &self.new_excluded {
            if alpha[i] != 0 && alpha[j] != 0 {
                return None;
            }
        }
        Some(alpha)
    }

    fn old_expansion(&mut self, alpha: &[i64]) -> Result<Element, DrinfeldError> {
        if let Some(hit) = self.expansion_cache.get(alpha) {
            return Ok(hit.clone());
        }
        let mut acc = Element::one(self.p.n_gens());
        for (idx, &a) in alpha.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let e = &self.entries[idx];
            let f = if a > 0 {
                self.p.power(&e.y, a)?
            } else {
                match (&e.inverse, e.y.as_single_term()) {
                    (Some(inv), _) => self.p.power(inv, -a)?,
                    (None, Some(_)) => self.p.power(&e.y, a)?,
                    _ => {
                        return Err(DrinfeldError::BadPlan(
                            e.name.clone(),
                            "negative power without an inverse expression".into(),
                        ))
                    }
                }
            };
            acc = self.p.multiply(&acc, &f)?;
        }
        self.expansion_cache.insert(alpha.to_vec(), acc.clone());
        Ok(acc)
    }

    fn express(&mut self, x: &Element) -> Result<Element, DrinfeldError> {
        let mut result = Element::zero();
        let mut work = x.clone();
        let mut steps = 0usize;
        while !work.is_zero() {
            steps += 1;
            if steps > 100_000 {
                return Err(DrinfeldError::NotClosed(
                    "re-expression did not terminate".into(),
                    "-".into(),
                ));
            }
            // deterministic pick: maximal (degree, monomial) term
            let (m, c) = work
                .terms
                .iter()
                .max_by_key(|(m, _)| (m.total_degree(), (*m).clone()))
                .map(|(m, c)| (m.clone(), c.clone()))
                .unwrap();
            let alpha = self.solve_alpha(&m).ok_or_else(|| {
                DrinfeldError::NotClosed(
                    format!("monomial {:?} is outside the rescaled family", m),
                    c.to_string(),
                )
            })?;
            let mut lead = RatFunc::one();
            for (idx, &a) in alpha.iter().enumerate() {
                lead = &lead * &self.entries[idx].lead_coeff.pow(a).map_err(|_| {
                    DrinfeldError::BadPlan(self.entries[idx].name.clone(), "zero lead".into())
                })?;
            }
            let beta = &c / &lead;
            result.add_term(Monomial { exps: alpha.clone() }, beta.clone());
            let exp = self.old_expansion(&alpha)?;
            work = work.sub(&exp.scale(&beta));
        }
        Ok(result)
    }

    fn express_tensor(&mut self, t: &TensorElement) -> Result<TensorElement, DrinfeldError> {
        let mut out = TensorElement::zero(t.rank);
        for (legs, c) in &t.terms {
            let mut partial: Vec<(Vec<Monomial>, RatFunc)> = vec![(vec![], c.clone())];
            for leg in legs {
                let e = self.express(&Element::from_term(leg.clone(), RatFunc::one()))?;
                let mut next = Vec::with_capacity(partial.len() * e.terms.len());
                for (ls, k) in &partial {
                    for (nm, nc) in &e.terms {
                        let mut nl = ls.clone();
                        nl.push(nm.clone());
                        next.push((nl, k * nc));
                    }
                }
                partial = next;
            }
            for (legs, k) in partial {
                out.add_term(legs, k);
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Direction {
    Vee,
    Prime,
}

fn resolve_entries(
    p: &HopfPresentation,
    plan: &RescalePlan,
    dir: Direction,
    n_max: usize,
) -> Result<Vec<ResolvedEntry>, DrinfeldError> {
    let prime = p.ring.prime_elem();
    let mut out = Vec::new();
    for entry in &plan.entries {
        match &entry.kind {
            EntryKind::Keep { source } => {
                let g = p.gen_id(source).ok_or_else(|| {
                    DrinfeldError::BadPlan(entry.name.clone(), format!("unknown generator {}", source))
                })?;
                if !p.generators[g].invertible {
                    return Err(DrinfeldError::BadPlan(
                        entry.name.clone(),
                        "kept generators must be invertible group-likes".into(),
                    ));
                }
                out.push(ResolvedEntry {
                    name: entry.name.clone(),
                    y: Element::generator(p.n_gens(), g),
                    invertible: true,
                    inverse: None,
                    exponent: 0,
                    counit: RatFunc::one(),
                    lead_mono: Monomial::single(p.n_gens(), g, 1),
                    lead_coeff: RatFunc::one(),
                });
            }
            EntryKind::Rescale { source, exponent, offset, inverse } => {
                let e = *exponent;
                match dir {
                    Direction::Vee if e > 0 => {
                        return Err(DrinfeldError::BadPlan(
                            entry.name.clone(),
                            "vee plans need exponents ≤ 0".into(),
                        ))
                    }
                    Direction::Prime if e < 0 => {
                        return Err(DrinfeldError::BadPlan(
                            entry.name.clone(),
                            "prime plans need exponents ≥ 0".into(),
                        ))
                    }
                    _ => {}
                }
                if e.abs() > 1 {
                    return Err(DrinfeldError::UnsupportedExponent);
                }
                let src = crate::hopf::parse_element(p, source)?;
                let scaled = src.scale(&prime.pow(e).expect("prime nonzero"));
                let y = {
                    let mut y = scaled.clone();
                    y.add_term(Monomial::unit(p.n_gens()), offset.clone());
                    y
                };
                match dir {
                    Direction::Vee => {
                        // source must lie in I = J + ℏ·1 of the source lattice
                        let mut ex = IntegralExpander::new(p)?;
                        let coords = ex.coords(&src)?;
                        for (im, c) in &coords {
                            if !c.in_ring(&p.ring) {
                                return Err(DrinfeldError::NotClosed(
                                    format!("vee source {} at {:?}", entry.name, im),
                                    c.to_string(),
                                ));
                            }
                        }
                        let eps = p.counit(&src)?;
                        if !eps.in_prime_power(1, &p.ring) {
                            return Err(DrinfeldError::BadPlan(
                                entry.name.clone(),
                                "source is not in the augmentation-plus-prime ideal".into(),
                            ));
                        }
                    }
                    Direction::Prime => {
                        if e > 0 {
                            let v = hprime_membership(p, &scaled, n_max)?;
                            if let MembershipStatus::NotMember { witness } = v.status {
                                return Err(DrinfeldError::NotCertified {
                                    name: entry.name.clone(),
                                    witness,
                                });
                            }
                        }
                    }
                }
                let inv = match inverse {
                    Some(expr) => {
                        let iv = crate::hopf::parse_element(p, expr)?;
                        let prod = p.multiply(&y, &iv)?;
                        if prod != Element::one(p.n_gens()) {
                            return Err(DrinfeldError::BadPlan(
                                entry.name.clone(),
                                "inverse expression does not invert the generator".into(),
                            ));
                        }
                        Some(iv)
                    }
                    None => None,
                };
                // leading term of y under (total degree, lex)
                let (lm, lc) = y
                    .terms
                    .iter()
                    .max_by_key(|(m, _)| (m.total_degree(), (*m).clone()))
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .ok_or_else(|| {
                        DrinfeldError::BadPlan(entry.name.clone(), "zero source".into())
                    })?;
                let counit = &(&p.counit(&src)? * &prime.pow(e).unwrap()) + offset;
                out.push(ResolvedEntry {
                    name: entry.name.clone(),
                    y,
                    invertible: inv.is_some(),
                    inverse: inv,
                    exponent: e,
                    counit,
                    lead_mono: lm,
                    lead_coeff: lc,
                });
            }
        }
    }
    Ok(out)
}

fn build_rescaled(
    p: &HopfPresentation,
    plan: &RescalePlan,
    dir: Direction,
    n_max: usize,
) -> Result<HopfPresentation, DrinfeldError> {
    let entries = resolve_entries(p, plan, dir, n_max)?;
    let n_new = entries.len();
    let name_of = |i: usize| entries[i].name.clone();
    let index_of = |name: &str| -> Result<usize, DrinfeldError> {
        entries
            .iter()
            .position(|e| e.name == name)
            .ok_or_else(|| DrinfeldError::BadPlan(name.into(), "not a plan entry".into()))
    };
    let mut new_excluded = Vec::new();
    for (a, b) in &plan.excluded_pairs {
        let (i, j) = (index_of(a)?, index_of(b)?);
        new_excluded.push((i.min(j), i.max(j)));
    }
    new_excluded.sort();
    let mut rex = Reexpressor::new(p, &entries, new_excluded.clone())?;

    // derive straightening rules for every out-of-order and excluded pair
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..n_new {
        for j in 0..i {
            pairs.push((i, j));
        }
    }
    pairs.extend(new_excluded.iter().copied());
    let mut rules = Vec::new();
    let clearing = |i: usize, j: usize| entries[i].exponent.abs() + entries[j].exponent.abs();
    for (i, j) in pairs {
        let prod = p.multiply(&entries[i].y, &entries[j].y)?;
        let rhs = rex.express(&prod)?;
        rules.push((i, j, rhs));
    }

    // structure maps in new coordinates
    let mut gen_specs = Vec::new();
    for (idx, e) in entries.iter().enumerate() {
        let cop_old = p.coproduct(&e.y)?;
        let cop_new = rex.express_tensor(&cop_old)?;
        let antipode = if plan.is_hopf {
            let s_old = p.antipode(&e.y)?;
            Some(rex.express(&s_old)?)
        } else {
            None
        };
        gen_specs.push(crate::hopf::GeneratorSpec {
            name: name_of(idx),
            invertible: e.invertible,
            counit: e.counit.clone(),
            coproduct: cop_new,
            antipode,
        });
    }

    // resolve the integral descriptor for the new presentation
    let integral = if plan.integral.is_empty() {
        None
    } else {
        let mut slots = Vec::new();
        for s in &plan.integral {
            match s {
                SlotSpec::Plain(name) => slots.push(Slot::Plain { gen: index_of(name)? }),
                SlotSpec::Block { base, members, excluded } => {
                    let b = index_of(base)?;
                    let mems: Vec<DerivedGen> = members
                        .iter()
                        .map(|(n, laurent)| {
                            DerivedGen::new(
                                n.clone(),
                                laurent
                                    .iter()
                                    .map(|(z, c)| (*z, crate::coeff::rf(c)))
                                    .collect(),
                            )
                        })
                        .collect();
                    let ex = match excluded {
                        Some((a, b)) => {
                            let ia = mems.iter().position(|m| &m.name == a);
                            let ib = mems.iter().position(|m| &m.name == b);
                            match (ia, ib) {
                                (Some(x), Some(y)) => Some((x, y)),
                                _ => {
                                    return Err(DrinfeldError::BadPlan(
                                        base.clone(),
                                        "excluded member not found".into(),
                                    ))
                                }
                            }
                        }
                        None => None,
                    };
                    slots.push(Slot::Block { base: b, members: mems, excluded_members: ex });
                }
            }
        }
        Some(IntegralBasis { slots })
    };

    let new_p = HopfPresentation::new(
        plan.name.clone(),
        p.ring,
        gen_specs,
        rules
            .iter()
            .map(|(i, j, rhs)| RewriteRule { lhs: (*i, *j), rhs: rhs.clone() })
            .collect(),
        new_excluded.clone(),
        plan.is_hopf,
        integral,
    )?;

    // ground-ring closure checks in the produced lattice
    if new_p.integral.is_some() {
        let mut ex = IntegralExpander::new(&new_p)?;
        for (i, j, rhs) in &rules {
            let coords = ex.coords(rhs)?;
            let slack = match dir {
                Direction::Prime => 0,
                Direction::Vee => clearing(*i, *j),
            };
            for (im, c) in &coords {
                if !c.in_prime_power(-slack, &new_p.ring) {
                    return Err(DrinfeldError::NotClosed(
                        format!(
                            "rule {}·{} at {:?}",
                            entries[*i].name, entries[*j].name, im
                        ),
                        c.to_string(),
                    ));
                }
            }
        }
        for g in &new_p.generators {
            let coords = ex.tensor_coords(&g.coproduct)?;
            for (legs, c) in &coords {
                if !c.in_ring(&new_p.ring) {
                    return Err(DrinfeldError::NotClosed(
                        format!("coproduct of {} at {:?}", g.name, legs),
                        c.to_string(),
                    ));
                }
            }
            if !g.counit.in_ring(&new_p.ring) {
                return Err(DrinfeldError::NotClosed(
                    format!("counit of {}", g.name),
                    g.counit.to_string(),
                ));
            }
            if let Some(s) = &g.antipode {
                let coords = ex.coords(s)?;
                for (im, c) in &coords {
                    if !c.in_ring(&new_p.ring) {
                        return Err(DrinfeldError::NotClosed(
                            format!("antipode of {} at {:?}", g.name, im),
                            c.to_string(),
                        ));
                    }
                }
            }
        }
    }
    Ok(new_p)
}

/// Presentation on generators ℏ^e·(source) + offset with all exponents ≤ 0
/// (the augmentation ideal rescaled down).
pub fn vee_presentation(
    p: &HopfPresentation,
    plan: &RescalePlan,
) -> Result<HopfPresentation, DrinfeldError> {
    build_rescaled(p, plan, Direction::Vee, 0)
}

/// Presentation of the subalgebra generated by certified rescaled generators
/// (all exponents ≥ 0).
pub fn hprime_presentation(
    p: &HopfPresentation,
    plan: &RescalePlan,
    n_max: usize,
) -> Result<HopfPresentation, DrinfeldError> {
    build_rescaled(p, plan, Direction::Prime, n_max)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundtripDirection {
    PrimeThenVee,
    VeeThenPrime,
}

#[derive(Debug)]
pub struct RoundtripReport {
    pub equal: bool,
    pub mismatches: Vec<String>,
    /// set when one leg failed outright (e.g. membership not certified)
    pub failure: Option<String>,
}

/// Compose both functors with the preset-supplied plans and compare the
/// result with the original presentation structurally.
pub fn roundtrip_identity(
    p: &HopfPresentation,
    direction: RoundtripDirection,
    first: &RescalePlan,
    second: &RescalePlan,
    n_max: usize,
) -> RoundtripReport {
    let composed = match direction {
        RoundtripDirection::PrimeThenVee => hprime_presentation(p, first, n_max)
            .and_then(|mid| vee_presentation(&mid, second)),
        RoundtripDirection::VeeThenPrime => vee_presentation(p, first)
            .and_then(|mid| hprime_presentation(&mid, second, n_max)),
    };
    match composed {
        Err(e) => RoundtripReport { equal: false, mismatches: vec![], failure: Some(e.to_string()) },
        Ok(out) => {
            let mismatches = p.structurally_equal(&out);
            RoundtripReport { equal: mismatches.is_empty(), mismatches, failure: None }
        }
    }
}

/// δₙ of a group-like is the n-th tensor power of (g − 1): helper used by
/// preset regression tests.
pub fn group_like_delta(p: &HopfPresentation, g: usize, n: usize) -> Result<TensorElement, DrinfeldError> {
    let ngens = p.n_gens();
    let mut shifted = Element::generator(ngens, g);
    shifted.add_term(Monomial::unit(ngens), -&RatFunc::one());
    let mut legsets: Vec<(Vec<Monomial>, RatFunc)> = vec![(vec![], RatFunc::one())];
    for _ in 0..n {
        let mut next = Vec::new();
        for (legs, c) in &legsets {
            for (m, k) in &shifted.terms {
                let mut nl = legs.clone();
                nl.push(m.clone());
                next.push((nl, c * k));
            }
        }
        legsets = next;
    }
    let mut out = TensorElement::zero(n);
    for (legs, c) in legsets {
        out.add_term(legs, c);
    }
    Ok(out)
}

/// Convenience: integral coordinates of a δₙ image (used by the CLI).
pub fn delta_int_coords(
    p: &HopfPresentation,
    x: &Element,
    n: usize,
) -> Result<IntTensorCoords, DrinfeldError> {
    let mut ex = IntegralExpander::new(p)?;
    Ok(ex.delta_coords(x, n)?)
}

/// Integral coordinates of a single element.
pub fn int_coords(
    p: &HopfPresentation,
    x: &Element,
) -> Result<std::collections::BTreeMap<IntMonomial, RatFunc>, DrinfeldError> {
    let mut ex = IntegralExpander::new(p)?;
    Ok(ex.coords(x)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rf;
    use crate::hopf::check_hopf_axioms;
    use crate::presets::{build_preset, el, PresetParams};

    fn preset(name: &str) -> crate::presets::PresetRecord {
        build_preset(name, &PresetParams::default()).unwrap()
    }

    /// expected tensor in integral coordinates from (coeff, leg-name-lists)
    fn expect_coords(
        p: &crate::hopf::HopfPresentation,
        entries: &[(&str, &[&[(&str, i64)]])],
    ) -> IntTensorCoords {
        let ex = IntegralExpander::new(p).unwrap();
        let cols = ex.column_names();
        let col = |n: &str| cols.iter().position(|c| c == n).unwrap_or_else(|| panic!("column {}", n));
        let mut out = IntTensorCoords::new();
        for (c, legs) in entries {
            let legs: Vec<IntMonomial> = legs
                .iter()
                .map(|leg| {
                    let mut v = vec![0i64; cols.len()];
                    for (n, e) in leg.iter() {
                        v[col(n)] += e;
                    }
                    IntMonomial(v)
                })
                .collect();
            let e = out.entry(legs.clone()).or_insert_with(RatFunc::zero);
            *e = &*e + &rf(c);
            if e.is_zero() {
                out.remove(&legs);
            }
        }
        out
    }

    #[test]
    fn sl2_delta_closed_forms() {
        let rec = preset("uq_sl2_adjoint");
        let p = &rec.presentation;
        for n in 1..=4usize {
            // δₙ(K) = (q−1)ⁿ·H⊗…⊗H
            let dk = delta_int_coords(p, &el(p, "K"), n).unwrap();
            let h_legs: Vec<&[(&str, i64)]> = vec![&[("H", 1)]; n];
            let coeff = format!("(t-1)^{}", n);
            assert_eq!(dk, expect_coords(p, &[(&coeff, &h_legs)]), "delta_{}(K)", n);
            // δₙ(H) = (q−1)^{n−1}·H^{⊗n}
            let dh = delta_int_coords(p, &el(p, "H"), n).unwrap();
            let coeff = format!("(t-1)^{}", n - 1);
            assert_eq!(dh, expect_coords(p, &[(&coeff, &h_legs)]), "delta_{}(H)", n);
            // δₙ(E) = (q−1)^{n−1}·H^{⊗(n−1)}⊗E
            let de = delta_int_coords(p, &el(p, "E"), n).unwrap();
            let mut legs: Vec<&[(&str, i64)]> = vec![&[("H", 1)]; n - 1];
            legs.push(&[("E", 1)]);
            assert_eq!(de, expect_coords(p, &[(&coeff, &legs)]), "delta_{}(E)", n);
        }
    }

    #[test]
    fn sl2_membership_table() {
        let rec = preset("uq_sl2_adjoint");
        let p = &rec.presentation;
        for (expr, member) in [
            ("(q-1)*F", true),
            ("(q-1)*Gamma", true),
            ("(q-1)*E", true),
            ("K", true),
            ("K^-1", true),
            ("F", false),
            ("Gamma", false),
            ("E", false),
        ] {
            let v = hprime_membership(p, &el(p, expr), 10).unwrap();
            assert_eq!(v.is_member(), member, "{}", expr);
            if member {
                for (n, d) in &v.trace {
                    assert!(
                        matches!(d, Deficiency::Finite(0) | Deficiency::Infinite),
                        "{} at n={} has {:?}",
                        expr,
                        n,
                        d
                    );
                }
            } else {
                assert_eq!(v.status, MembershipStatus::NotMember { witness: 1 }, "{}", expr);
            }
        }
    }

    #[test]
    fn sl2_prime_presentation_matches_table() {
        let rec = preset("uq_sl2_adjoint");
        let p = &rec.presentation;
        let prime = hprime_presentation(p, rec.hprime_plan.as_ref().unwrap(), 10).unwrap();
        assert!(check_hopf_axioms(&prime, 3, 5, 7).unwrap().all_passed());
        // ĖḞ − ḞĖ = (q−1)Γ̇ where Γ̇ = q(K−K⁻¹)/(q+1)
        let comm = prime
            .multiply(&el(&prime, "Edot*Fdot - Fdot*Edot"), &el(&prime, "1"))
            .unwrap();
        assert_eq!(comm, el(&prime, "(q-1)*q*(K-K^-1)/(q+1)"));
        // K^{±1}Ė = q^{±2}ĖK^{±1}
        assert_eq!(el(&prime, "K*Edot"), el(&prime, "q^2*Edot*K"));
        // Γ̇Ė = q²ĖΓ̇ + (q−1)(q+q⁻¹)Ė with Γ̇ = Gammadot
        assert_eq!(
            el(&prime, "Gammadot*Edot"),
            el(&prime, "q^2*Edot*Gammadot + (q-1)*(q+q^-1)*Edot")
        );
        // Δ(Ė) = Ė⊗1 + K⊗Ė
        let edot = prime.gen_id("Edot").unwrap();
        let expected = {
            use crate::hopf::{Monomial, TensorElement};
            let n = prime.n_gens();
            let k = prime.gen_id("K").unwrap();
            let mut t = TensorElement::zero(2);
            t.add_term(vec![Monomial::single(n, edot, 1), Monomial::unit(n)], RatFunc::one());
            t.add_term(vec![Monomial::single(n, k, 1), Monomial::single(n, edot, 1)], RatFunc::one());
            t
        };
        assert_eq!(prime.generators[edot].coproduct, expected);
    }

    #[test]
    fn sl2_roundtrip_prime_then_vee() {
        let rec = preset("uq_sl2_adjoint");
        let report = roundtrip_identity(
            &rec.presentation,
            RoundtripDirection::PrimeThenVee,
            rec.hprime_plan.as_ref().unwrap(),
            rec.hprime_return_plan.as_ref().unwrap(),
            10,
        );
        assert!(report.failure.is_none(), "{:?}", report.failure);
        assert!(report.equal, "mismatches: {:?}", report.mismatches);
    }

    #[test]
    fn fq_sl2_vee_table_and_roundtrip() {
        let rec = preset("fq_sl2");
        let p = &rec.presentation;
        // b is rejected immediately
        let v = hprime_membership(p, &el(p, "b"), 10).unwrap();
        assert_eq!(v.status, MembershipStatus::NotMember { witness: 1 });
        let vee = vee_presentation(p, rec.vee_plan.as_ref().unwrap()).unwrap();
        assert!(check_hopf_axioms(&vee, 3, 5, 11).unwrap().all_passed());
        assert_eq!(el(&vee, "Hp*E"), el(&vee, "q*E*Hp + E"));
        assert_eq!(el(&vee, "Hp*F"), el(&vee, "q*F*Hp + F"));
        assert_eq!(el(&vee, "E*Hm"), el(&vee, "q*Hm*E + E"));
        assert_eq!(el(&vee, "E*F"), el(&vee, "F*E"));
        assert_eq!(el(&vee, "Hp*Hm - Hm*Hp"), el(&vee, "(q-q^-1)*E*F"));
        assert_eq!(el(&vee, "Hm + Hp"), el(&vee, "(q-1)*(q*E*F - Hp*Hm)"));
        // S(E) = −q⁻¹E, S(H₊) = H₋
        let e = vee.gen_id("E").unwrap();
        assert_eq!(vee.generators[e].antipode.clone().unwrap(), el(&vee, "-q^-1*E"));
        let hp = vee.gen_id("Hp").unwrap();
        assert_eq!(vee.generators[hp].antipode.clone().unwrap(), el(&vee, "Hm"));
        let report = roundtrip_identity(
            p,
            RoundtripDirection::VeeThenPrime,
            rec.vee_plan.as_ref().unwrap(),
            rec.vee_return_plan.as_ref().unwrap(),
            10,
        );
        assert!(report.failure.is_none(), "{:?}", report.failure);
        assert!(report.equal, "mismatches: {:?}", report.mismatches);
    }

    #[test]
    fn fq_sl2_prime_collapses() {
        let rec = preset("fq_sl2");
        let err = hprime_presentation(&rec.presentation, rec.hprime_plan.as_ref().unwrap(), 10);
        assert!(matches!(err, Err(DrinfeldError::NotCertified { .. })), "{:?}", err.map(|_| ()));
    }

    #[test]
    fn group_like_delta_matches_engine() {
        let rec = preset("uq_sl2_adjoint");
        let p = &rec.presentation;
        let k = p.gen_id("K").unwrap();
        for n in 1..=6 {
            let direct = group_like_delta(p, k, n).unwrap();
            let engine = p.delta_n(&el(p, "K"), n).unwrap();
            assert_eq!(direct, engine, "n={}", n);
        }
    }
}
