//! Quantum 2×2 matrices: the function algebra of SL2 (determinant one) and
//! the bialgebra of all 2×2 quantum matrices.

use super::builder::PresetBuilder;
use super::{PresetError, PresetRecord};
use crate::coeff::GroundRing;
use crate::drinfeld::{PlanEntry, RescalePlan, SlotSpec};

fn common(name: &str) -> PresetBuilder {
    // generator order matches the PBW basis: c, then the diagonal a, d, then b
    PresetBuilder::new(name, GroundRing::laurent())
        .gen("c", "0")
        .gen("a", "1")
        .gen("d", "1")
        .gen("b", "0")
        .rule("a", "c", "q*c*a")
        .rule("d", "c", "q^-1*c*d")
        .rule("b", "c", "c*b")
        .rule("b", "a", "q^-1*a*b")
        .rule("b", "d", "q*d*b")
        .coproduct("a", &[("a", "a"), ("b", "c")])
        .coproduct("b", &[("a", "b"), ("b", "d")])
        .coproduct("c", &[("c", "a"), ("d", "c")])
        .coproduct("d", &[("c", "b"), ("d", "d")])
        .plain_slot("c")
        .plain_slot("a")
        .plain_slot("d")
        .plain_slot("b")
}

pub(super) fn fq_sl2() -> Result<PresetRecord, PresetError> {
    let p = common("fq_sl2")
        .rule("d", "a", "1 + q^-1*c*b")
        .rule("a", "d", "1 + q*c*b")
        .excluded_pair("a", "d")
        .antipode("a", "d")
        .antipode("b", "-q^-1*b")
        .antipode("c", "-q*c")
        .antipode("d", "a")
        .build()?;

    let vee_plan = RescalePlan {
        name: "fq_sl2_vee".into(),
        entries: vec![
            PlanEntry::rescale("F", "c", -1),
            PlanEntry::rescale("Hp", "a-1", -1),
            PlanEntry::rescale("Hm", "d-1", -1),
            PlanEntry::rescale("E", "b", -1),
        ],
        excluded_pairs: vec![("Hp".into(), "Hm".into())],
        integral: vec![
            SlotSpec::Plain("F".into()),
            SlotSpec::Plain("Hp".into()),
            SlotSpec::Plain("Hm".into()),
            SlotSpec::Plain("E".into()),
        ],
        is_hopf: true,
    };
    let vee_return_plan = RescalePlan {
        name: "fq_sl2".into(),
        entries: vec![
            PlanEntry::rescale("c", "F", 1),
            PlanEntry::rescale_shifted("a", "Hp", 1, crate::coeff::rf("1")),
            PlanEntry::rescale_shifted("d", "Hm", 1, crate::coeff::rf("1")),
            PlanEntry::rescale("b", "E", 1),
        ],
        excluded_pairs: vec![("a".into(), "d".into())],
        integral: vec![
            SlotSpec::Plain("c".into()),
            SlotSpec::Plain("a".into()),
            SlotSpec::Plain("d".into()),
            SlotSpec::Plain("b".into()),
        ],
        is_hopf: true,
    };
    // the direct subalgebra attempt: every generator rescaled up; its failure
    // (no generator is certified) is the designed counterexample
    let hprime_plan = RescalePlan {
        name: "fq_sl2_prime".into(),
        entries: vec![
            PlanEntry::rescale("cdot", "c", 1),
            PlanEntry::rescale("adot", "a-1", 1),
            PlanEntry::rescale("ddot", "d-1", 1),
            PlanEntry::rescale("bdot", "b", 1),
        ],
        excluded_pairs: vec![],
        integral: vec![],
        is_hopf: true,
    };

    Ok(PresetRecord {
        presentation: p,
        hprime_plan: Some(hprime_plan),
        hprime_return_plan: None,
        vee_plan: Some(vee_plan),
        vee_return_plan: Some(vee_return_plan),
        identification: vec![
            ("Hp".into(), "h".into()),
            ("Hm".into(), "-h".into()),
            ("E".into(), "e".into()),
            ("F".into(), "f".into()),
        ],
        description: "quantized function algebra of SL2".into(),
    })
}

pub(super) fn fq_m2() -> Result<PresetRecord, PresetError> {
    let p = common("fq_m2")
        .bialgebra_only()
        .rule("d", "a", "a*d - (q-q^-1)*c*b")
        .build()?;

    let vee_plan = RescalePlan {
        name: "fq_m2_vee".into(),
        entries: vec![
            PlanEntry::rescale("F", "c", -1),
            PlanEntry::rescale("Hp", "a-1", -1),
            PlanEntry::rescale("Hm", "d-1", -1),
            PlanEntry::rescale("E", "b", -1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            SlotSpec::Plain("F".into()),
            SlotSpec::Plain("Hp".into()),
            SlotSpec::Plain("Hm".into()),
            SlotSpec::Plain("E".into()),
        ],
        is_hopf: false,
    };

    Ok(PresetRecord {
        presentation: p,
        hprime_plan: None,
        hprime_return_plan: None,
        vee_plan: Some(vee_plan),
        vee_return_plan: None,
        identification: vec![],
        description: "bialgebra of quantum 2x2 matrices".into(),
    })
}
