//! Quantum Euclidean group: the two enveloping-algebra versions and the two
//! function-algebra versions.

use super::builder::PresetBuilder;
use super::{PresetError, PresetRecord};
use crate::coeff::GroundRing;
use crate::drinfeld::{PlanEntry, RescalePlan, SlotSpec};

pub(super) fn uq_e2_s() -> Result<PresetRecord, PresetError> {
    let p = PresetBuilder::new("uq_e2_s", GroundRing::laurent())
        .gen("F", "0")
        .gen_invertible("L")
        .gen("E", "0")
        .rule("L", "F", "q^-1*F*L")
        .rule("E", "L", "q^-1*L*E")
        .rule("E", "F", "F*E")
        .coproduct("F", &[("F", "L^-2"), ("1", "F")])
        .coproduct("E", &[("E", "1"), ("L^2", "E")])
        .antipode("F", "-F*L^2")
        .antipode("E", "-L^-2*E")
        .plain_slot("F")
        .block_slot(
            "L",
            &[
                ("Dp", &[(1, "1/(t-1)"), (0, "-1/(t-1)")]),
                ("Dm", &[(-1, "1/(t-1)"), (0, "-1/(t-1)")]),
            ],
            Some(("Dp", "Dm")),
        )
        .plain_slot("E")
        .build()?;

    let hprime_plan = RescalePlan {
        name: "uq_e2_s_prime".into(),
        entries: vec![
            PlanEntry::rescale("Fcal", "L*F", 1),
            PlanEntry::keep("Lcal", "L"),
            PlanEntry::rescale("Ecal", "E*L^-1", 1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            SlotSpec::Plain("Fcal".into()),
            SlotSpec::Block {
                base: "Lcal".into(),
                members: vec![
                    ("Dpdot".into(), vec![(1, "1".into()), (0, "-1".into())]),
                    ("Dmdot".into(), vec![(-1, "1".into()), (0, "-1".into())]),
                ],
                excluded: Some(("Dpdot".into(), "Dmdot".into())),
            },
            SlotSpec::Plain("Ecal".into()),
        ],
        is_hopf: true,
    };
    let hprime_return_plan = RescalePlan {
        name: "uq_e2_s".into(),
        entries: vec![
            PlanEntry::rescale("F", "Lcal^-1*Fcal", -1),
            PlanEntry::keep("L", "Lcal"),
            PlanEntry::rescale("E", "Ecal*Lcal", -1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            SlotSpec::Plain("F".into()),
            SlotSpec::Block {
                base: "L".into(),
                members: vec![
                    ("Dp".into(), vec![(1, "1/(t-1)".into()), (0, "-1/(t-1)".into())]),
                    ("Dm".into(), vec![(-1, "1/(t-1)".into()), (0, "-1/(t-1)".into())]),
                ],
                excluded: Some(("Dp".into(), "Dm".into())),
            },
            SlotSpec::Plain("E".into()),
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
            ("Ecal".into(), "x".into()),
            ("Lcal".into(), "z".into()),
            ("Dpdot".into(), "z-1".into()),
            ("Dmdot".into(), "z^-1-1".into()),
            ("Fcal".into(), "y".into()),
        ],
        description: "quantized enveloping algebra of the Euclidean Lie algebra, simply connected"
            .into(),
    })
}

pub(super) fn uq_e2_a() -> Result<PresetRecord, PresetError> {
    let p = PresetBuilder::new("uq_e2_a", GroundRing::laurent())
        .gen("F", "0")
        .gen_invertible("K")
        .gen("E", "0")
        .rule("K", "F", "q^-2*F*K")
        .rule("E", "K", "q^-2*K*E")
        .rule("E", "F", "F*E")
        .coproduct("F", &[("F", "K^-1"), ("1", "F")])
        .coproduct("E", &[("E", "1"), ("K", "E")])
        .antipode("F", "-F*K")
        .antipode("E", "-K^-1*E")
        .plain_slot("F")
        .block_slot(
            "K",
            &[
                ("Hp", &[(1, "1/(t-1)"), (0, "-1/(t-1)")]),
                ("Hm", &[(-1, "1/(t-1)"), (0, "-1/(t-1)")]),
            ],
            Some(("Hp", "Hm")),
        )
        .plain_slot("E")
        .build()?;

    let hprime_plan = RescalePlan {
        name: "uq_e2_a_prime".into(),
        entries: vec![
            PlanEntry::rescale("Fdot", "F", 1),
            PlanEntry::keep("K", "K"),
            PlanEntry::rescale("Edot", "E", 1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            SlotSpec::Plain("Fdot".into()),
            SlotSpec::Block {
                base: "K".into(),
                members: vec![
                    ("Hpdot".into(), vec![(1, "1".into()), (0, "-1".into())]),
                    ("Hmdot".into(), vec![(-1, "1".into()), (0, "-1".into())]),
                ],
                excluded: Some(("Hpdot".into(), "Hmdot".into())),
            },
            SlotSpec::Plain("Edot".into()),
        ],
        is_hopf: true,
    };
    let hprime_return_plan = RescalePlan {
        name: "uq_e2_a".into(),
        entries: vec![
            PlanEntry::rescale("F", "Fdot", -1),
            PlanEntry::keep("K", "K"),
            PlanEntry::rescale("E", "Edot", -1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            SlotSpec::Plain("F".into()),
            SlotSpec::Block {
                base: "K".into(),
                members: vec![
                    ("Hp".into(), vec![(1, "1/(t-1)".into()), (0, "-1/(t-1)".into())]),
                    ("Hm".into(), vec![(-1, "1/(t-1)".into()), (0, "-1/(t-1)".into())]),
                ],
                excluded: Some(("Hp".into(), "Hm".into())),
            },
            SlotSpec::Plain("E".into()),
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
            ("K".into(), "z^2".into()),
            ("Hpdot".into(), "z^2-1".into()),
            ("Hmdot".into(), "z^-2-1".into()),
            ("Fdot".into(), "z^-1*y".into()),
        ],
        description: "quantized enveloping algebra of the Euclidean Lie algebra, adjoint".into(),
    })
}

pub(super) fn fq_e2() -> Result<PresetRecord, PresetError> {
    let p = PresetBuilder::new("fq_e2", GroundRing::laurent())
        .gen("b", "0")
        .gen_invertible("a")
        .gen("c", "0")
        .rule("a", "b", "q*b*a")
        .rule("c", "a", "q^-1*a*c")
        .rule("c", "b", "b*c")
        .coproduct("b", &[("b", "a^-1"), ("a", "b")])
        .coproduct("c", &[("c", "a"), ("a^-1", "c")])
        .antipode("b", "-q^-1*b")
        .antipode("c", "-q*c")
        .plain_slot("b")
        .plain_slot("a")
        .plain_slot("c")
        .build()?;

    let vee_plan = RescalePlan {
        name: "fq_e2_vee".into(),
        entries: vec![
            PlanEntry::rescale("E", "b", -1),
            PlanEntry::rescale("Dp", "a-1", -1),
            PlanEntry::rescale("Dm", "a^-1-1", -1),
            PlanEntry::rescale("F", "c", -1),
        ],
        excluded_pairs: vec![("Dp".into(), "Dm".into())],
        integral: vec![
            SlotSpec::Plain("E".into()),
            SlotSpec::Plain("Dp".into()),
            SlotSpec::Plain("Dm".into()),
            SlotSpec::Plain("F".into()),
        ],
        is_hopf: true,
    };
    let vee_return_plan = RescalePlan {
        name: "fq_e2".into(),
        entries: vec![
            PlanEntry::rescale("b", "E", 1),
            PlanEntry::rescale_shifted("a", "Dp", 1, crate::coeff::rf("1"))
                .with_inverse("(q-1)*Dm+1"),
            PlanEntry::rescale("c", "F", 1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            SlotSpec::Plain("b".into()),
            SlotSpec::Plain("a".into()),
            SlotSpec::Plain("c".into()),
        ],
        is_hopf: true,
    };

    Ok(PresetRecord {
        presentation: p,
        hprime_plan: None,
        hprime_return_plan: None,
        vee_plan: Some(vee_plan),
        vee_return_plan: Some(vee_return_plan),
        identification: vec![
            ("E".into(), "e".into()),
            ("Dp".into(), "h/2".into()),
            ("Dm".into(), "-h/2".into()),
            ("F".into(), "f".into()),
        ],
        description: "quantized function algebra of the Euclidean group".into(),
    })
}

pub(super) fn fq_e2_adjoint() -> Result<PresetRecord, PresetError> {
    let p = PresetBuilder::new("fq_e2_adjoint", GroundRing::laurent())
        .gen("beta", "0")
        .gen_invertible("alpha")
        .gen("gamma", "0")
        .rule("alpha", "beta", "q^2*beta*alpha")
        .rule("gamma", "alpha", "q^-2*alpha*gamma")
        .rule("gamma", "beta", "q^-2*beta*gamma")
        .coproduct("beta", &[("beta", "1"), ("alpha", "beta")])
        .coproduct("gamma", &[("gamma", "1"), ("alpha^-1", "gamma")])
        .antipode("beta", "-q^-2*beta*alpha^-1")
        .antipode("gamma", "-alpha*gamma")
        .plain_slot("beta")
        .plain_slot("alpha")
        .plain_slot("gamma")
        .build()?;

    let vee_plan = RescalePlan {
        name: "fq_e2_adjoint_vee".into(),
        entries: vec![
            PlanEntry::rescale("Ep", "beta", -1),
            PlanEntry::rescale("Hp", "alpha-1", -1),
            PlanEntry::rescale("Hm", "alpha^-1-1", -1),
            PlanEntry::rescale("Fp", "gamma", -1),
        ],
        excluded_pairs: vec![("Hp".into(), "Hm".into())],
        integral: vec![
            SlotSpec::Plain("Ep".into()),
            SlotSpec::Plain("Hp".into()),
            SlotSpec::Plain("Hm".into()),
            SlotSpec::Plain("Fp".into()),
        ],
        is_hopf: true,
    };
    let vee_return_plan = RescalePlan {
        name: "fq_e2_adjoint".into(),
        entries: vec![
            PlanEntry::rescale("beta", "Ep", 1),
            PlanEntry::rescale_shifted("alpha", "Hp", 1, crate::coeff::rf("1"))
                .with_inverse("(q-1)*Hm+1"),
            PlanEntry::rescale("gamma", "Fp", 1),
        ],
        excluded_pairs: vec![],
        integral: vec![
            SlotSpec::Plain("beta".into()),
            SlotSpec::Plain("alpha".into()),
            SlotSpec::Plain("gamma".into()),
        ],
        is_hopf: true,
    };

    Ok(PresetRecord {
        presentation: p,
        hprime_plan: None,
        hprime_return_plan: None,
        vee_plan: Some(vee_plan),
        vee_return_plan: Some(vee_return_plan),
        identification: vec![
            ("Ep".into(), "e".into()),
            ("Hp".into(), "h".into()),
            ("Hm".into(), "-h".into()),
            ("Fp".into(), "f".into()),
        ],
        description: "even subalgebra of the quantum Euclidean function algebra".into(),
    })
}
