//! Structural validation of presentations: coalgebra axioms, morphism
//! property of Δ and ε against every rewrite rule, antipode laws.

use super::{Element, EngineError, HopfPresentation, Monomial};
use crate::coeff::RatFunc;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Debug, Clone)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, witness: Option<String>) {
        self.checks.push(AxiomCheck { name: name.into(), passed, witness });
    }
}

/// A random element with a few monomials of bounded degree, respecting
/// invertibility ranges and excluded pairs.
pub fn random_element(p: &HopfPresentation, degree_bound: i64, rng: &mut StdRng) -> Element {
    let n = p.n_gens();
    let n_terms = rng.gen_range(1..=3);
    let mut out = Element::zero();
    for _ in 0..n_terms {
        let mut m = Monomial::unit(n);
        let mut budget = degree_bound;
        for g in 0..n {
            if budget == 0 {
                break;
            }
            if p.generators[g].invertible {
                let e = rng.gen_range(-2i64..=2);
                let cost = e.abs().min(budget);
                m.exps[g] = e.signum() * cost;
                budget -= cost;
            } else {
                let e = rng.gen_range(0i64..=2).min(budget);
                m.exps[g] = e;
                budget -= e;
            }
        }
        for &(a, b) in &p.excluded_pairs {
            if m.exps[a] != 0 && m.exps[b] != 0 {
                m.exps[b] = 0;
            }
        }
        let c = RatFunc::from_int(rng.gen_range(-3i64..=3));
        out.add_term(m, c);
    }
    // keys must be normal forms (e.g. squares collapse in group algebras)
    out = p.normal_form(&out).expect("random element reduces");
    if out.is_zero() {
        out = Element::one(n);
    }
    out
}

/// Verify the (bi/Hopf) algebra axioms on generators, on both sides of every
/// rewrite rule, and on `sample_count` random elements up to `degree_bound`.
pub fn check_hopf_axioms(
    p: &HopfPresentation,
    degree_bound: i64,
    sample_count: usize,
    seed: u64,
) -> Result<AxiomReport, EngineError> {
    let n = p.n_gens();
    let mut report = AxiomReport { checks: Vec::new() };
    let mut rng = StdRng::seed_from_u64(seed);

    let mut subjects: Vec<(String, Element)> = (0..n)
        .map(|g| (p.generators[g].name.clone(), Element::generator(n, g)))
        .collect();
    for k in 0..sample_count {
        subjects.push((format!("sample#{}", k), random_element(p, degree_bound, &mut rng)));
    }

    // Δ and ε respect every defining relation
    for rule in &p.rules {
        let (i, j) = rule.lhs;
        let label = format!("{}·{}", p.generators[i].name, p.generators[j].name);
        let lhs_eps = &p.generators[i].counit * &p.generators[j].counit;
        let rhs_eps = p.counit(&rule.rhs)?;
        report.push(
            format!("counit morphism on {}", label),
            lhs_eps == rhs_eps,
            (lhs_eps != rhs_eps).then(|| format!("ε mismatch: {} vs {}", lhs_eps, rhs_eps)),
        );
        let lhs_cop = p.tensor_multiply(
            &p.generators[i].coproduct.clone(),
            &p.generators[j].coproduct.clone(),
        )?;
        let rhs_cop = p.coproduct(&rule.rhs)?;
        let ok = lhs_cop == rhs_cop;
        report.push(
            format!("coproduct morphism on {}", label),
            ok,
            (!ok).then(|| format!("Δ mismatch on {}", label)),
        );
        if p.is_hopf {
            let si = p.generators[i].antipode.clone().unwrap();
            let sj = p.generators[j].antipode.clone().unwrap();
            let lhs_s = p.multiply(&sj, &si)?;
            let rhs_s = p.antipode(&rule.rhs)?;
            let ok = lhs_s == rhs_s;
            report.push(
                format!("antipode anti-morphism on {}", label),
                ok,
                (!ok).then(|| format!("S mismatch on {}", label)),
            );
        }
    }

    for (name, x) in &subjects {
        // coassociativity via both splice positions
        let d = p.coproduct(x)?;
        let left = p.tensor_apply_coproduct(&d, 0)?;
        let right = p.tensor_apply_coproduct(&d, 1)?;
        report.push(
            format!("coassociativity on {}", name),
            left == right,
            (left != right).then(|| format!("(Δ⊗id)Δ ≠ (id⊗Δ)Δ on {}", name)),
        );
        // counit laws
        let lhs = p.tensor_apply_counit(&d, 0)?;
        let rhs = p.tensor_apply_counit(&d, 1)?;
        let id1 = p.iterated_coproduct(x, 1)?;
        report.push(
            format!("counit law on {}", name),
            lhs == id1 && rhs == id1,
            (lhs != id1 || rhs != id1).then(|| format!("counit law fails on {}", name)),
        );
        if p.is_hopf {
            let eps_unit = Element::scalar(n, p.counit(x)?);
            let conv_l = p.antipode_convolution(x, false)?;
            let conv_r = p.antipode_convolution(x, true)?;
            let ok = conv_l == eps_unit && conv_r == eps_unit;
            report.push(
                format!("antipode convolution on {}", name),
                ok,
                (!ok).then(|| format!("m(S⊗id)Δ ≠ ε·1 on {}", name)),
            );
        }
        // normal_form idempotence on everything it touches
        let nf = p.normal_form(x)?;
        let nf2 = p.normal_form(&nf)?;
        report.push(
            format!("normal form idempotent on {}", name),
            nf == nf2,
            (nf != nf2).then(|| format!("normal_form not idempotent on {}", name)),
        );
    }
    Ok(report)
}
