//! Quantized enveloping algebras of sl2 over ℚ(q), Laurent ground ring with
//! prime q−1, adjoint and simply connected integral forms.

use super::builder::PresetBuilder;
use super::{PresetError, PresetRecord};
use crate::coeff::GroundRing;
use crate::drinfeld::{PlanEntry, RescalePlan, SlotSpec};

fn slot_plain(n: &str) -> SlotSpec {
    SlotSpec::Plain(n.into())
}

pub(super) fn uq_sl2_adjoint() -> Result<PresetRecord, PresetError> {
    let p = PresetBuilder::new("uq_sl2_adjoint", GroundRing::laurent())
        .gen("F", "0")
        .gen_invertible("K")
        .gen("E", "0")
        .rule("K", "F", "q^-2*F*K")
        .rule("E", "K", "q^-2*K*E")
        .rule("E", "F", "F*E + (K-K^-1)/(q-q^-1)")
        .coproduct("F", &[("F", "K^-1"), ("1", "F")])
        .coproduct("E", &[("E", "1"), ("K", "E")])
        .antipode("F", "-F*K")
        .antipode("E", "-K^-1*E")
        .plain_slot("F")
        .block_slot(
            "K",
            &[
                ("H", &[(1, "1/(t-1)"), (0, "-1/(t-1)")]),
                ("Gamma", &[(1, "t/(t^2-1)"), (-1, "-t/(t^2-1)")]),
            ],
            None,
        )
        .plain_slot("E")
        .build()?;

    let hprime_plan = RescalePlan {
        name: "uq_sl2_adjoint_prime".into(),
        entries: vec![
            PlanEntry::rescale("Fdot", "F", 1),
            PlanEntry::keep("K", "K"),
            PlanEntry::rescale("Edot", "E", 1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            slot_plain("Fdot"),
            SlotSpec::Block {
                base: "K".into(),
                members: vec![
                    ("Hdot".into(), vec![(1, "1".into()), (0, "-1".into())]),
                    ("Gammadot".into(), vec![(1, "t/(t+1)".into()), (-1, "-t/(t+1)".into())]),
                ],
                excluded: None,
            },
            slot_plain("Edot"),
        ],
        is_hopf: true,
    };
    let hprime_return_plan = RescalePlan {
        name: "uq_sl2_adjoint".into(),
        entries: vec![
            PlanEntry::rescale("F", "Fdot", -1),
            PlanEntry::keep("K", "K"),
            PlanEntry::rescale("E", "Edot", -1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            slot_plain("F"),
            SlotSpec::Block {
                base: "K".into(),
                members: vec![
                    ("H".into(), vec![(1, "1/(t-1)".into()), (0, "-1/(t-1)".into())]),
                    (
                        "Gamma".into(),
                        vec![(1, "t/(t^2-1)".into()), (-1, "-t/(t^2-1)".into())],
                    ),
                ],
                excluded: None,
            },
            slot_plain("E"),
        ],
        is_hopf: true,
    };

    Ok(PresetRecord {
        presentation: p,
        hprime_plan: Some(hprime_plan),
        hprime_return_plan: Some(hprime_return_plan),
        vee_plan: None,
        vee_return_plan: None,
        // classical coordinates of the specialized subalgebra: x, z^{±1}, y
        identification: vec![
            ("Edot".into(), "x*z".into()),
            ("K".into(), "z^2".into()),
            ("Hdot".into(), "z^2-1".into()),
            ("Gammadot".into(), "(z^2-z^-2)/2".into()),
            ("Fdot".into(), "z^-1*y".into()),
        ],
        description: "quantized enveloping algebra of sl2, adjoint integral form".into(),
    })
}

pub(super) fn uq_sl2_simply_connected() -> Result<PresetRecord, PresetError> {
    let p = PresetBuilder::new("uq_sl2_simply_connected", GroundRing::laurent())
        .gen("F", "0")
        .gen_invertible("L")
        .gen("E", "0")
        .rule("L", "F", "q^-1*F*L")
        .rule("E", "L", "q^-1*L*E")
        .rule("E", "F", "F*E + (L^2-L^-2)/(q-q^-1)")
        .coproduct("F", &[("F", "L^-2"), ("1", "F")])
        .coproduct("E", &[("E", "1"), ("L^2", "E")])
        .antipode("F", "-F*L^2")
        .antipode("E", "-L^-2*E")
        .plain_slot("F")
        .block_slot(
            "L",
            &[
                ("D", &[(1, "1/(t-1)"), (0, "-1/(t-1)")]),
                ("Gamma", &[(2, "t/(t^2-1)"), (-2, "-t/(t^2-1)")]),
            ],
            None,
        )
        .plain_slot("E")
        .build()?;

    let hprime_plan = RescalePlan {
        name: "uq_sl2_simply_connected_prime".into(),
        entries: vec![
            PlanEntry::rescale("Fdot", "F", 1),
            PlanEntry::keep("L", "L"),
            PlanEntry::rescale("Edot", "E", 1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            slot_plain("Fdot"),
            SlotSpec::Block {
                base: "L".into(),
                members: vec![
                    ("Ddot".into(), vec![(1, "1".into()), (0, "-1".into())]),
                    ("Gammadot".into(), vec![(2, "t/(t+1)".into()), (-2, "-t/(t+1)".into())]),
                ],
                excluded: None,
            },
            slot_plain("Edot"),
        ],
        is_hopf: true,
    };
    let hprime_return_plan = RescalePlan {
        name: "uq_sl2_simply_connected".into(),
        entries: vec![
            PlanEntry::rescale("F", "Fdot", -1),
            PlanEntry::keep("L", "L"),
            PlanEntry::rescale("E", "Edot", -1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            slot_plain("F"),
            SlotSpec::Block {
                base: "L".into(),
                members: vec![
                    ("D".into(), vec![(1, "1/(t-1)".into()), (0, "-1/(t-1)".into())]),
                    (
                        "Gamma".into(),
                        vec![(2, "t/(t^2-1)".into()), (-2, "-t/(t^2-1)".into())],
                    ),
                ],
                excluded: None,
            },
            slot_plain("E"),
        ],
        is_hopf: true,
    };

    Ok(PresetRecord {
        presentation: p,
        hprime_plan: Some(hprime_plan),
        hprime_return_plan: Some(hprime_return_plan),
        vee_plan: None,
        vee_return_plan: None,
        identification: vec![
            ("Edot".into(), "x*z".into()),
            ("L".into(), "z".into()),
            ("Ddot".into(), "z-1".into()),
            ("Gammadot".into(), "(z^2-z^-2)/2".into()),
            ("Fdot".into(), "z^-1*y".into()),
        ],
        description: "quantized enveloping algebra of sl2 with a square root of K".into(),
    })
}
