//! Catalog of shipped presentations with their integral bases, rescale
//! plans and classical identification maps.

mod builder;
mod euclidean;
mod heisenberg;
mod matrix;
mod sl2;
mod trivial;

pub use builder::{el, PresetBuilder};

use crate::coeff::Prime;
use crate::drinfeld::RescalePlan;
use crate::hopf::HopfPresentation;
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum PresetError {
    #[error("unknown preset {0}")]
    UnknownPreset(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Engine(#[from] crate::hopf::EngineError),
}

/// Parameters accepted by parameterized presets.
#[derive(Debug, Clone, Default)]
pub struct PresetParams {
    /// rank parameter for the Heisenberg families
    pub n: Option<usize>,
    /// named Lie algebra for trivial deformations: "sl2" or "nonabelian2",
    /// or custom structure constants
    pub lie: Option<LieData>,
    /// prime for trivial deformations: t (the parameter itself) or t−1
    pub prime: Option<Prime>,
    /// multiplication table for group-algebra deformations
    pub group: Option<GroupTableData>,
}

/// A finite-dimensional Lie algebra by structure constants:
/// [x_i, x_j] = Σ_k c[(i,j,k)]·x_k for i < j.
#[derive(Debug, Clone)]
pub struct LieData {
    pub names: Vec<String>,
    pub brackets: BTreeMap<(usize, usize, usize), crate::coeff::RatFunc>,
}

impl LieData {
    pub fn sl2() -> Self {
        use crate::coeff::rf;
        // order f < h < e with [h,e] = 2e, [h,f] = −2f, [e,f] = h
        let mut brackets = BTreeMap::new();
        brackets.insert((0, 1, 0), rf("2")); // [f,h] = 2f
        brackets.insert((1, 2, 2), rf("2")); // [h,e] = 2e
        brackets.insert((0, 2, 1), rf("-1")); // [f,e] = −h
        LieData {
            names: vec!["f".into(), "h".into(), "e".into()],
            brackets,
        }
    }

    /// The two-dimensional nonabelian Lie algebra [x,y] = x.
    pub fn nonabelian2() -> Self {
        use crate::coeff::rf;
        let mut brackets = BTreeMap::new();
        brackets.insert((0, 1, 0), rf("1"));
        LieData { names: vec!["x".into(), "y".into()], brackets }
    }

    fn bracket(&self, i: usize, j: usize, k: usize) -> crate::coeff::RatFunc {
        use crate::coeff::RatFunc;
        if i == j {
            return RatFunc::zero();
        }
        if i < j {
            self.brackets.get(&(i, j, k)).cloned().unwrap_or_else(RatFunc::zero)
        } else {
            -&self.bracket(j, i, k)
        }
    }

    /// Antisymmetry is structural; verify the Jacobi identity.
    pub fn validate(&self) -> Result<(), String> {
        use crate::coeff::RatFunc;
        let n = self.names.len();
        for ((i, j, k), _) in &self.brackets {
            if *i >= n || *j >= n || *k >= n || i >= j {
                return Err("bracket index out of range or not upper-triangular".into());
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for m in 0..n {
                        // Σ_cyc Σ_k c([a,b],k)·c([k,c],m)
                        let mut total = RatFunc::zero();
                        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                            for k in 0..n {
                                let t = &self.bracket(x, y, k) * &self.bracket(k, z, m);
                                total = &total + &t;
                            }
                        }
                        if !total.is_zero() {
                            return Err(format!(
                                "Jacobi fails on ({},{},{})",
                                self.names[a], self.names[b], self.names[c]
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A finite group as a labeled multiplication table (identity first).
#[derive(Debug, Clone)]
pub struct GroupTableData {
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

/// A catalog record: the presentation plus everything the duality and
/// semiclassical operations need.
pub struct PresetRecord {
    pub presentation: HopfPresentation,
    /// plan producing the distinguished subalgebra presentation
    pub hprime_plan: Option<RescalePlan>,
    /// plan on the subalgebra presentation returning to the original
    pub hprime_return_plan: Option<RescalePlan>,
    /// plan producing the rescaled-augmentation-ideal presentation
    pub vee_plan: Option<RescalePlan>,
    /// plan on that presentation returning to the original
    pub vee_return_plan: Option<RescalePlan>,
    /// integral-family generator name → classical coordinate expression
    pub identification: Vec<(String, String)>,
    pub description: String,
}

pub fn list_presets() -> Vec<(&'static str, &'static str, &'static str)> {
    vec![
        ("uq_sl2_adjoint", "", "quantized enveloping algebra of sl2, adjoint integral form"),
        ("uq_sl2_simply_connected", "", "quantized enveloping algebra of sl2 with a square root of K"),
        ("fq_sl2", "", "quantized function algebra of SL2 (quantum 2x2 matrices, determinant 1)"),
        ("fq_m2", "", "bialgebra of quantum 2x2 matrices, no antipode"),
        ("uq_e2_s", "", "quantized enveloping algebra of the Euclidean Lie algebra, simply connected"),
        ("uq_e2_a", "", "quantized enveloping algebra of the Euclidean Lie algebra, adjoint"),
        ("fq_e2", "", "quantized function algebra of the Euclidean group"),
        ("fq_e2_adjoint", "", "even subalgebra of the quantum Euclidean function algebra"),
        ("uq_heisenberg_s", "n", "quantized enveloping algebra of the Heisenberg Lie algebra, simply connected"),
        ("uq_heisenberg_a", "n", "quantized enveloping algebra of the Heisenberg Lie algebra, adjoint"),
        ("fq_heisenberg", "n", "quantized function algebra of the Heisenberg group"),
        ("trivial_deformation", "lie, prime", "enveloping algebra with bracket scaled by the parameter"),
        ("group_algebra_deformation", "group", "group algebra of a finite group over the one-parameter ring"),
    ]
}

pub fn build_preset(name: &str, params: &PresetParams) -> Result<PresetRecord, PresetError> {
    match name {
        "uq_sl2_adjoint" => sl2::uq_sl2_adjoint(),
        "uq_sl2_simply_connected" => sl2::uq_sl2_simply_connected(),
        "fq_sl2" => matrix::fq_sl2(),
        "fq_m2" => matrix::fq_m2(),
        "uq_e2_s" => euclidean::uq_e2_s(),
        "uq_e2_a" => euclidean::uq_e2_a(),
        "fq_e2" => euclidean::fq_e2(),
        "fq_e2_adjoint" => euclidean::fq_e2_adjoint(),
        "uq_heisenberg_s" => heisenberg::uq_heisenberg_s(params.n.unwrap_or(1)),
        "uq_heisenberg_a" => heisenberg::uq_heisenberg_a(params.n.unwrap_or(1)),
        "fq_heisenberg" => heisenberg::fq_heisenberg(params.n.unwrap_or(1)),
        "trivial_deformation" => {
            let lie = params.lie.clone().unwrap_or_else(LieData::sl2);
            lie.validate().map_err(PresetError::InvalidParams)?;
            trivial::trivial_deformation(&lie, params.prime.unwrap_or(Prime::T))
        }
        "group_algebra_deformation" => {
            let g = params
                .group
                .clone()
                .ok_or_else(|| PresetError::InvalidParams("group table required".into()))?;
            trivial::group_algebra(&g)
        }
        _ => Err(PresetError::UnknownPreset(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf_axioms;

    fn z4_table() -> GroupTableData {
        GroupTableData {
            labels: vec!["e".into(), "g".into(), "g2".into(), "g3".into()],
            table: (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect(),
        }
    }

    #[test]
    fn all_presets_build_and_satisfy_axioms() {
        let mut params = PresetParams::default();
        params.n = Some(2);
        params.group = Some(z4_table());
        for (name, _, _) in list_presets() {
            let rec = build_preset(name, &params).unwrap_or_else(|e| panic!("{}: {}", name, e));
            let report = check_hopf_axioms(&rec.presentation, 3, 5, 42)
                .unwrap_or_else(|e| panic!("{}: {}", name, e));
            let fails: Vec<_> = report.failures().iter().map(|c| c.name.clone()).collect();
            assert!(report.all_passed(), "{} axiom failures: {:?}", name, fails);
        }
    }

    #[test]
    fn sl2_defining_relations() {
        let rec = build_preset("uq_sl2_adjoint", &PresetParams::default()).unwrap();
        let p = &rec.presentation;
        // EF = FE + (K−K⁻¹)/(q−q⁻¹)
        let ef = el(p, "E*F");
        let expected = el(p, "F*E + (K-K^-1)/(q-q^-1)");
        assert_eq!(ef, expected);
        // K·K⁻¹ = 1
        assert_eq!(el(p, "K*K^-1"), el(p, "1"));
    }

    #[test]
    fn fq_sl2_excluded_pair_reduces() {
        let rec = build_preset("fq_sl2", &PresetParams::default()).unwrap();
        let p = &rec.presentation;
        assert_eq!(el(p, "a*d"), el(p, "1 + q*b*c"));
        assert_eq!(el(p, "d*a"), el(p, "1 + q^-1*b*c"));
        // higher powers resolve too: a²d = a(1 + qbc)
        assert_eq!(el(p, "a*a*d"), el(p, "a + q*a*b*c"));
        assert_eq!(el(p, "a*a*d"), el(p, "a + q^2*c*a*b"));
    }

    #[test]
    fn heisenberg_relations() {
        let mut params = PresetParams::default();
        params.n = Some(1);
        let rec = build_preset("fq_heisenberg", &params).unwrap();
        let p = &rec.presentation;
        assert_eq!(el(p, "c*a1"), el(p, "a1*c + (q-1)*a1"));
        let rec = build_preset("uq_e2_a", &PresetParams::default()).unwrap();
        let p = &rec.presentation;
        // H₊E = q²EH₊ + (q+1)E with H₊ = (K−1)/(q−1)
        assert_eq!(el(p, "Hp*E"), el(p, "q^2*E*Hp + (q+1)*E"));
    }

    #[test]
    fn group_algebra_words_collapse() {
        let mut params = PresetParams::default();
        params.group = Some(z4_table());
        let rec = build_preset("group_algebra_deformation", &params).unwrap();
        let p = &rec.presentation;
        assert_eq!(el(p, "g*g"), el(p, "g2"));
        assert_eq!(el(p, "g*g3"), el(p, "1"));
        assert_eq!(el(p, "g2*g3"), el(p, "g"));
        assert_eq!(el(p, "g^3"), el(p, "g3"));
    }

    #[test]
    fn trivial_deformation_requires_jacobi() {
        use crate::coeff::rf;
        use std::collections::BTreeMap;
        let mut bad = BTreeMap::new();
        bad.insert((0usize, 1usize, 2usize), rf("1"));
        bad.insert((1, 2, 0), rf("1"));
        bad.insert((0, 2, 2), rf("1"));
        let lie = LieData {
            names: vec!["x".into(), "y".into(), "z".into()],
            brackets: bad,
        };
        assert!(lie.validate().is_err());
        assert!(LieData::sl2().validate().is_ok());
        assert!(LieData::nonabelian2().validate().is_ok());
    }
}
