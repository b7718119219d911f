//! Integral-form descriptors: a triangular monomial family in original and
//! derived generators, with exact expansion of elements in that family.

use super::linalg::{solve_unique, SolveOutcome};
use super::{Element, EngineError, GenId, HopfPresentation, Monomial, TensorElement};
use crate::coeff::RatFunc;
use std::collections::{BTreeMap, HashMap};

/// A derived generator: a Laurent polynomial in the block's base generator,
/// e.g. H = (K−1)/(q−1) as {1: 1/(q−1), 0: −1/(q−1)}.
#[derive(Clone, Debug, PartialEq)]
pub struct DerivedGen {
    pub name: String,
    pub laurent: BTreeMap<i64, RatFunc>,
}

impl DerivedGen {
    pub fn new(name: impl Into<String>, laurent: Vec<(i64, RatFunc)>) -> Self {
        DerivedGen {
            name: name.into(),
            laurent: laurent.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn support(&self) -> (i64, i64) {
        let lo = *self.laurent.keys().next().expect("nonzero derived generator");
        let hi = *self.laurent.keys().last().unwrap();
        (lo, hi)
    }

    /// The defining substitution as an element of the presentation.
    pub fn as_element(&self, n_gens: usize, base: GenId) -> Element {
        let mut e = Element::zero();
        for (&z, c) in &self.laurent {
            e.add_term(Monomial::single(n_gens, base, z), c.clone());
        }
        e
    }
}

/// One slot of the triangular family, in generator order.
#[derive(Clone, Debug, PartialEq)]
pub enum Slot {
    /// An original generator, exponents as in the PBW basis.
    Plain { gen: GenId },
    /// An invertible generator replaced by a family of derived generators.
    Block {
        base: GenId,
        members: Vec<DerivedGen>,
        /// indices into `members` that may not co-occur (min exponent 0)
        excluded_members: Option<(usize, usize)>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralBasis {
    pub slots: Vec<Slot>,
}

impl IntegralBasis {
    pub(crate) fn validate(&self, p: &HopfPresentation) -> Result<(), String> {
        let mut covered = vec![false; p.n_gens()];
        let mut last: Option<GenId> = None;
        for s in &self.slots {
            let g = match s {
                Slot::Plain { gen } => *gen,
                Slot::Block { base, members, excluded_members } => {
                    if !p.generators[*base].invertible {
                        return Err(format!(
                            "block base {} must be invertible",
                            p.generators[*base].name
                        ));
                    }
                    if members.is_empty() {
                        return Err("empty block".into());
                    }
                    if let Some((i, j)) = excluded_members {
                        if *i >= members.len() || *j >= members.len() || i == j {
                            return Err("bad excluded member pair".into());
                        }
                    }
                    *base
                }
            };
            if g >= p.n_gens() || covered[g] {
                return Err("slots must cover distinct generators".into());
            }
            if let Some(l) = last {
                if g <= l {
                    return Err("slots must follow the generator order".into());
                }
            }
            covered[g] = true;
            last = Some(g);
        }
        if !covered.iter().all(|&c| c) {
            return Err("slots must cover every generator".into());
        }
        Ok(())
    }

    /// Flattened names of the family generators, slot by slot.
    pub fn column_names(&self, p: &HopfPresentation) -> Vec<String> {
        let mut out = Vec::new();
        for s in &self.slots {
            match s {
                Slot::Plain { gen } => out.push(p.generators[*gen].name.clone()),
                Slot::Block { members, .. } => {
                    out.extend(members.iter().map(|m| m.name.clone()))
                }
            }
        }
        out
    }
}

/// Monomial in the flattened integral family.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IntMonomial(pub Vec<i64>);

impl IntMonomial {
    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|e| e.abs()).sum()
    }
}

pub type IntCoords = BTreeMap<IntMonomial, RatFunc>;
pub type IntTensorCoords = BTreeMap<Vec<IntMonomial>, RatFunc>;

/// Exact expansion of elements in the declared integral family, with a
/// per-instance cache of base-power expansions.
pub struct IntegralExpander<'a> {
    p: &'a HopfPresentation,
    basis: &'a IntegralBasis,
    // per block slot: base exponent ↦ member-exponent expansion
    cache: HashMap<(usize, i64), Vec<(Vec<i64>, RatFunc)>>,
    // full coordinates per PBW monomial
    mono_cache: HashMap<Monomial, Vec<(IntMonomial, RatFunc)>>,
    // coproduct of a lifted family monomial, in family⊗family coordinates
    cop_cache: HashMap<IntMonomial, Vec<(IntMonomial, IntMonomial, RatFunc)>>,
    // counit of a lifted family monomial
    eps_cache: HashMap<IntMonomial, RatFunc>,
}

type Laurent = BTreeMap<i64, RatFunc>;

fn laurent_mul(a: &Laurent, b: &Laurent) -> Laurent {
    let mut out: Laurent = BTreeMap::new();
    for (&i, ci) in a {
        for (&j, cj) in b {
            let v = ci * cj;
            if v.is_zero() {
                continue;
            }
            let e = out.entry(i + j).or_insert_with(RatFunc::zero);
            *e = &*e + &v;
            if e.is_zero() {
                out.remove(&(i + j));
            }
        }
    }
    out
}

impl<'a> IntegralExpander<'a> {
    pub fn new(p: &'a HopfPresentation) -> Result<Self, EngineError> {
        let basis = p.integral.as_ref().ok_or(EngineError::NoIntegralBasis)?;
        Ok(IntegralExpander {
            p,
            basis,
            cache: HashMap::new(),
            mono_cache: HashMap::new(),
            cop_cache: HashMap::new(),
            eps_cache: HashMap::new(),
        })
    }

    pub fn basis(&self) -> &IntegralBasis {
        self.basis
    }

    pub fn column_names(&self) -> Vec<String> {
        self.basis.column_names(self.p)
    }

    /// Expansion of base^z in the block's member family (cached).
    fn base_power(
        &mut self,
        slot_idx: usize,
        z: i64,
    ) -> Result<Vec<(Vec<i64>, RatFunc)>, EngineError> {
        if let Some(hit) = self.cache.get(&(slot_idx, z)) {
            return Ok(hit.clone());
        }
        let Slot::Block { members, excluded_members, .. } = &self.basis.slots[slot_idx] else {
            unreachable!("base_power on a plain slot");
        };
        let target: Laurent = [(z, RatFunc::one())].into_iter().collect();
        let sol = expand_in_members(members, *excluded_members, &target)?;
        self.cache.insert((slot_idx, z), sol.clone());
        Ok(sol)
    }

    /// Coordinates of a single normal-form monomial (cached).
    fn mono_coords(&mut self, m: &Monomial) -> Result<Vec<(IntMonomial, RatFunc)>, EngineError> {
        if let Some(hit) = self.mono_cache.get(m) {
            return Ok(hit.clone());
        }
        let slots = self.basis.slots.clone();
        let mut partial: Vec<(Vec<i64>, RatFunc)> = vec![(Vec::new(), RatFunc::one())];
        for (si, slot) in slots.iter().enumerate() {
            match slot {
                Slot::Plain { gen } => {
                    for (cols, _) in partial.iter_mut() {
                        cols.push(m.exps[*gen]);
                    }
                }
                Slot::Block { base, members, .. } => {
                    let z = m.exps[*base];
                    let expansion = self.base_power(si, z)?;
                    let width = members.len();
                    let mut next = Vec::with_capacity(partial.len() * expansion.len());
                    for (cols, k) in &partial {
                        for (mexps, mc) in &expansion {
                            debug_assert_eq!(mexps.len(), width);
                            let mut nc = cols.clone();
                            nc.extend_from_slice(mexps);
                            next.push((nc, k * mc));
                        }
                    }
                    partial = next;
                }
            }
        }
        let out: Vec<(IntMonomial, RatFunc)> =
            partial.into_iter().map(|(cols, c)| (IntMonomial(cols), c)).collect();
        self.mono_cache.insert(m.clone(), out.clone());
        Ok(out)
    }

    /// Coordinates of an element in the integral family.
    pub fn coords(&mut self, x: &Element) -> Result<IntCoords, EngineError> {
        let mut out: IntCoords = BTreeMap::new();
        for (m, c) in &x.terms {
            for (im, k) in self.mono_coords(m)? {
                let v = c * &k;
                if v.is_zero() {
                    continue;
                }
                let e = out.entry(im.clone()).or_insert_with(RatFunc::zero);
                *e = &*e + &v;
                if e.is_zero() {
                    out.remove(&im);
                }
            }
        }
        Ok(out)
    }

    /// Counit of a lifted family monomial (cached).
    fn eps_int(&mut self, im: &IntMonomial) -> Result<RatFunc, EngineError> {
        if let Some(hit) = self.eps_cache.get(im) {
            return Ok(hit.clone());
        }
        let lift = self.substitute(im)?;
        let e = self.p.counit(&lift)?;
        self.eps_cache.insert(im.clone(), e.clone());
        Ok(e)
    }

    /// Coproduct of a lifted family monomial in family⊗family coordinates (cached).
    fn cop_int(
        &mut self,
        im: &IntMonomial,
    ) -> Result<Vec<(IntMonomial, IntMonomial, RatFunc)>, EngineError> {
        if let Some(hit) = self.cop_cache.get(im) {
            return Ok(hit.clone());
        }
        let lift = self.substitute(im)?;
        let cop = self.p.coproduct(&lift)?;
        let mut out = Vec::new();
        for (legs, c) in &cop.terms {
            for (l1, c1) in self.mono_coords(&legs[0])? {
                for (l2, c2) in self.mono_coords(&legs[1])? {
                    out.push((l1.clone(), l2, &(c * &c1) * &c2));
                }
            }
        }
        self.cop_cache.insert(im.clone(), out.clone());
        Ok(out)
    }

    /// δₙ of an element, computed incrementally in family coordinates with
    /// per-step collapsing (the engine-level δₙ distributes tensors and is
    /// exponential in intermediate size; this path is the workhorse of the
    /// membership tests).
    pub fn delta_coords(&mut self, x: &Element, n: usize) -> Result<IntTensorCoords, EngineError> {
        let mut out: IntTensorCoords = BTreeMap::new();
        if n == 0 {
            let e = self.p.counit(x)?;
            if !e.is_zero() {
                out.insert(vec![], e);
            }
            return Ok(out);
        }
        let unit_width = self.column_names().len();
        let is_unit = |im: &IntMonomial| im.0.iter().all(|&e| e == 0);
        // state: first (rank−1) legs projected by (id − ε·1), last leg raw
        let mut state: IntTensorCoords = BTreeMap::new();
        for (im, c) in self.coords(x)? {
            state.insert(vec![im], c);
        }
        let mut add = |map: &mut IntTensorCoords, legs: Vec<IntMonomial>, v: RatFunc| {
            if v.is_zero() {
                return;
            }
            let e = map.entry(legs.clone()).or_insert_with(RatFunc::zero);
            *e = &*e + &v;
            if e.is_zero() {
                map.remove(&legs);
            }
        };
        for _ in 1..n {
            let mut next: IntTensorCoords = BTreeMap::new();
            for (legs, c) in &state {
                let last = legs.last().unwrap().clone();
                for (l1, l2, k) in self.cop_int(&last)? {
                    let coeff = c * &k;
                    // π(l1) = l1 − ε(l1)·1, identically zero on the unit
                    if is_unit(&l1) {
                        continue;
                    }
                    let eps = self.eps_int(&l1)?;
                    let mut base = legs[..legs.len() - 1].to_vec();
                    base.push(l1.clone());
                    base.push(l2.clone());
                    add(&mut next, base, coeff.clone());
                    if !eps.is_zero() {
                        let mut unit_legs = legs[..legs.len() - 1].to_vec();
                        unit_legs.push(IntMonomial(vec![0; unit_width]));
                        unit_legs.push(l2.clone());
                        add(&mut next, unit_legs, -&(&coeff * &eps));
                    }
                }
            }
            state = next;
        }
        // project the final leg
        for (legs, c) in &state {
            let last = legs.last().unwrap().clone();
            if is_unit(&last) {
                continue;
            }
            let eps = self.eps_int(&last)?;
            add(&mut out, legs.clone(), c.clone());
            if !eps.is_zero() {
                let mut unit_legs = legs[..legs.len() - 1].to_vec();
                unit_legs.push(IntMonomial(vec![0; unit_width]));
                add(&mut out, unit_legs, -&(c * &eps));
            }
        }
        Ok(out)
    }

    /// Coordinates of a tensor, expanding every leg.
    pub fn tensor_coords(&mut self, t: &TensorElement) -> Result<IntTensorCoords, EngineError> {
        let mut out: IntTensorCoords = BTreeMap::new();
        for (legs, c) in &t.terms {
            let mut partial: Vec<(Vec<IntMonomial>, RatFunc)> = vec![(Vec::new(), c.clone())];
            for m in legs {
                let lc = self.coords(&Element::from_term(m.clone(), RatFunc::one()))?;
                let mut next = Vec::with_capacity(partial.len() * lc.len());
                for (ls, k) in &partial {
                    for (im, ic) in &lc {
                        let mut nl = ls.clone();
                        nl.push(im.clone());
                        next.push((nl, k * ic));
                    }
                }
                partial = next;
            }
            for (legs, k) in partial {
                let e = out.entry(legs.clone()).or_insert_with(RatFunc::zero);
                *e = &*e + &k;
                if e.is_zero() {
                    out.remove(&legs);
                }
            }
        }
        Ok(out)
    }

    /// Canonical lift of a family monomial back into the algebra:
    /// the slot-ordered product of the defining substitutions.
    pub fn substitute(&self, im: &IntMonomial) -> Result<Element, EngineError> {
        let n = self.p.n_gens();
        let mut factors: Vec<Element> = Vec::new();
        let mut col = 0usize;
        for slot in &self.basis.slots {
            match slot {
                Slot::Plain { gen } => {
                    let e = im.0[col];
                    if e != 0 {
                        factors.push(Element::from_term(Monomial::single(n, *gen, e), RatFunc::one()));
                    }
                    col += 1;
                }
                Slot::Block { base, members, .. } => {
                    for mem in members {
                        let e = im.0[col];
                        if e != 0 {
                            let el = mem.as_element(n, *base);
                            factors.push(self.p.power(&el, e)?);
                        }
                        col += 1;
                    }
                }
            }
        }
        self.p.multiply_many(&factors)
    }

    /// Re-substitution of full coordinates; used to verify exactness.
    pub fn substitute_coords(&self, coords: &IntCoords) -> Result<Element, EngineError> {
        let mut out = Element::zero();
        for (im, c) in coords {
            out = out.add(&self.substitute(im)?.scale(c));
        }
        Ok(out)
    }
}

/// Expand a Laurent polynomial of the base in the member family by a
/// growing-window exact linear solve.
fn expand_in_members(
    members: &[DerivedGen],
    excluded: Option<(usize, usize)>,
    target: &Laurent,
) -> Result<Vec<(Vec<i64>, RatFunc)>, EngineError> {
    if target.is_empty() {
        return Ok(vec![]);
    }
    let lo = *target.keys().next().unwrap();
    let hi = *target.keys().last().unwrap();
    let w0 = lo.abs().max(hi.abs()).max(1);
    for w in w0..=w0 + 12 {
        // enumerate member exponent vectors whose support bound fits [-w, w]
        let mut cands: Vec<Vec<i64>> = Vec::new();
        let mut cur = vec![0i64; members.len()];
        enumerate(members, excluded, w, 0, 0, 0, &mut cur, &mut cands);
        // columns over degrees [-w, w]
        let dim = (2 * w + 1) as usize;
        let idx = |d: i64| (d + w) as usize;
        let mut columns: Vec<Vec<RatFunc>> = Vec::with_capacity(cands.len());
        for cand in &cands {
            let mut poly: Laurent = [(0, RatFunc::one())].into_iter().collect();
            for (j, &e) in cand.iter().enumerate() {
                for _ in 0..e {
                    poly = laurent_mul(&poly, &members[j].laurent);
                }
            }
            let mut colv = vec![RatFunc::zero(); dim];
            for (&d, c) in &poly {
                colv[idx(d)] = c.clone();
            }
            columns.push(colv);
        }
        let mut rhs = vec![RatFunc::zero(); dim];
        for (&d, c) in target {
            rhs[idx(d)] = c.clone();
        }
        match solve_unique(&columns, &rhs) {
            SolveOutcome::Unique(sol) => {
                return Ok(cands
                    .into_iter()
                    .zip(sol)
                    .filter(|(_, c)| !c.is_zero())
                    .collect());
            }
            SolveOutcome::NoSolution => continue,
            SolveOutcome::Underdetermined => {
                return Err(EngineError::NotTriangular(format!(
                    "member family is linearly dependent inside window {}",
                    w
                )))
            }
        }
    }
    Err(EngineError::NotTriangular(
        "no expansion found within the window growth bound".into(),
    ))
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    members: &[DerivedGen],
    excluded: Option<(usize, usize)>,
    w: i64,
    j: usize,
    top: i64,
    bot: i64,
    cur: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if j == members.len() {
        if let Some((a, b)) = excluded {
            if cur[a] > 0 && cur[b] > 0 {
                return;
            }
        }
        out.push(cur.clone());
        return;
    }
    let (mlo, mhi) = members[j].support();
    let mut e = 0i64;
    loop {
        let ntop = top + e * mhi.max(0);
        let nbot = bot + e * mlo.min(0);
        if ntop > w || nbot < -w {
            break;
        }
        cur[j] = e;
        enumerate(members, excluded, w, j + 1, ntop, nbot, cur, out);
        cur[j] = 0;
        if mhi.max(0) == 0 && mlo.min(0) == 0 {
            // constant member would loop forever; members are nonconstant
            break;
        }
        e += 1;
    }
}
