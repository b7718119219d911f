//! Quantum Heisenberg group: the two enveloping-algebra versions (rank
//! parameter n) and the function-algebra version.

use super::builder::PresetBuilder;
use super::{PresetError, PresetRecord};
use crate::coeff::GroundRing;
use crate::drinfeld::{PlanEntry, RescalePlan, SlotSpec};

pub(super) fn uq_heisenberg_s(n: usize) -> Result<PresetRecord, PresetError> {
    if n < 1 {
        return Err(PresetError::InvalidParams("n must be at least 1".into()));
    }
    let fs: Vec<String> = (1..=n).map(|i| format!("F{}", i)).collect();
    let es: Vec<String> = (1..=n).map(|i| format!("E{}", i)).collect();
    let mut b = PresetBuilder::new("uq_heisenberg_s", GroundRing::laurent());
    for f in &fs {
        b = b.gen(f, "0");
    }
    b = b.gen_invertible("L");
    for e in &es {
        b = b.gen(e, "0");
    }
    // commuting F's and E's
    for i in 0..n {
        for j in 0..i {
            b = b.rule(&fs[i], &fs[j], &format!("{}*{}", fs[j], fs[i]));
            b = b.rule(&es[i], &es[j], &format!("{}*{}", es[j], es[i]));
        }
    }
    for f in &fs {
        b = b.rule("L", f, &format!("{}*L", f));
    }
    for (i, e) in es.iter().enumerate() {
        b = b.rule(e, "L", &format!("L*{}", e));
        for (j, f) in fs.iter().enumerate() {
            let rhs = if i == j {
                format!("{}*{} + (L^2-L^-2)/(q-q^-1)", f, e)
            } else {
                format!("{}*{}", f, e)
            };
            b = b.rule(e, f, &rhs);
        }
    }
    for f in &fs {
        b = b
            .coproduct(f, &[(f, "L^-2"), ("1", f)])
            .antipode(f, &format!("-{}*L^2", f));
    }
    for e in &es {
        b = b
            .coproduct(e, &[(e, "1"), ("L^2", e)])
            .antipode(e, &format!("-L^-2*{}", e));
    }
    for f in &fs {
        b = b.plain_slot(f);
    }
    b = b.block_slot(
        "L",
        &[
            ("D", &[(1, "1/(t-1)"), (0, "-1/(t-1)")]),
            ("Gamma", &[(2, "t/(t^2-1)"), (-2, "-t/(t^2-1)")]),
        ],
        None,
    );
    for e in &es {
        b = b.plain_slot(e);
    }
    let p = b.build()?;

    let mut entries = Vec::new();
    let mut back = Vec::new();
    let mut int_fwd = Vec::new();
    let mut int_back = Vec::new();
    for f in &fs {
        entries.push(PlanEntry::rescale(&format!("{}dot", f), f, 1));
        back.push(PlanEntry::rescale(f, &format!("{}dot", f), -1));
        int_fwd.push(SlotSpec::Plain(format!("{}dot", f)));
        int_back.push(SlotSpec::Plain(f.clone()));
    }
    entries.push(PlanEntry::keep("L", "L"));
    back.push(PlanEntry::keep("L", "L"));
    int_fwd.push(SlotSpec::Block {
        base: "L".into(),
        members: vec![
            ("Ddot".into(), vec![(1, "1".into()), (0, "-1".into())]),
            ("Gammadot".into(), vec![(2, "t/(t+1)".into()), (-2, "-t/(t+1)".into())]),
        ],
        excluded: None,
    });
    int_back.push(SlotSpec::Block {
        base: "L".into(),
        members: vec![
            ("D".into(), vec![(1, "1/(t-1)".into()), (0, "-1/(t-1)".into())]),
            ("Gamma".into(), vec![(2, "t/(t^2-1)".into()), (-2, "-t/(t^2-1)".into())]),
        ],
        excluded: None,
    });
    for e in &es {
        entries.push(PlanEntry::rescale(&format!("{}dot", e), e, 1));
        back.push(PlanEntry::rescale(e, &format!("{}dot", e), -1));
        int_fwd.push(SlotSpec::Plain(format!("{}dot", e)));
        int_back.push(SlotSpec::Plain(e.clone()));
    }

    let mut identification = vec![
        ("L".into(), "z".into()),
        ("Ddot".into(), "z-1".into()),
        ("Gammadot".into(), "(z^2-z^-2)/2".into()),
    ];
    for (i, e) in es.iter().enumerate() {
        identification.push((format!("{}dot", e), format!("x{}*z", i + 1)));
    }
    for (i, f) in fs.iter().enumerate() {
        identification.push((format!("{}dot", f), format!("z^-1*y{}", i + 1)));
    }

    Ok(PresetRecord {
        presentation: p,
        hprime_plan: Some(RescalePlan {
            name: "uq_heisenberg_s_prime".into(),
            entries,
            excluded_pairs: vec![],
            integral: int_fwd,
            is_hopf: true,
        }),
        hprime_return_plan: Some(RescalePlan {
            name: "uq_heisenberg_s".into(),
            entries: back,
            excluded_pairs: vec![],
            integral: int_back,
            is_hopf: true,
        }),
        vee_plan: None,
        vee_return_plan: None,
        identification,
        description: "quantized enveloping algebra of the Heisenberg Lie algebra, simply connected"
            .into(),
    })
}

pub(super) fn uq_heisenberg_a(n: usize) -> Result<PresetRecord, PresetError> {
    if n < 1 {
        return Err(PresetError::InvalidParams("n must be at least 1".into()));
    }
    let fs: Vec<String> = (1..=n).map(|i| format!("F{}", i)).collect();
    let es: Vec<String> = (1..=n).map(|i| format!("E{}", i)).collect();
    let mut b = PresetBuilder::new("uq_heisenberg_a", GroundRing::laurent());
    for f in &fs {
        b = b.gen(f, "0");
    }
    b = b.gen_invertible("K");
    for e in &es {
        b = b.gen(e, "0");
    }
    for i in 0..n {
        for j in 0..i {
            b = b.rule(&fs[i], &fs[j], &format!("{}*{}", fs[j], fs[i]));
            b = b.rule(&es[i], &es[j], &format!("{}*{}", es[j], es[i]));
        }
    }
    for f in &fs {
        b = b.rule("K", f, &format!("{}*K", f));
    }
    for (i, e) in es.iter().enumerate() {
        b = b.rule(e, "K", &format!("K*{}", e));
        for (j, f) in fs.iter().enumerate() {
            let rhs = if i == j {
                format!("{}*{} + (K-K^-1)/(q-q^-1)", f, e)
            } else {
                format!("{}*{}", f, e)
            };
            b = b.rule(e, f, &rhs);
        }
    }
    for f in &fs {
        b = b
            .coproduct(f, &[(f, "K^-1"), ("1", f)])
            .antipode(f, &format!("-{}*K", f));
    }
    for e in &es {
        b = b
            .coproduct(e, &[(e, "1"), ("K", e)])
            .antipode(e, &format!("-K^-1*{}", e));
    }
    for f in &fs {
        b = b.plain_slot(f);
    }
    b = b.block_slot(
        "K",
        &[
            ("H", &[(1, "1/(t-1)"), (0, "-1/(t-1)")]),
            ("Gamma", &[(1, "t/(t^2-1)"), (-1, "-t/(t^2-1)")]),
        ],
        None,
    );
    for e in &es {
        b = b.plain_slot(e);
    }
    let p = b.build()?;

    let mut entries = Vec::new();
    let mut back = Vec::new();
    let mut int_fwd = Vec::new();
    let mut int_back = Vec::new();
    for f in &fs {
        entries.push(PlanEntry::rescale(&format!("{}dot", f), f, 1));
        back.push(PlanEntry::rescale(f, &format!("{}dot", f), -1));
        int_fwd.push(SlotSpec::Plain(format!("{}dot", f)));
        int_back.push(SlotSpec::Plain(f.clone()));
    }
    entries.push(PlanEntry::keep("K", "K"));
    back.push(PlanEntry::keep("K", "K"));
    int_fwd.push(SlotSpec::Block {
        base: "K".into(),
        members: vec![
            ("Hdot".into(), vec![(1, "1".into()), (0, "-1".into())]),
            ("Gammadot".into(), vec![(1, "t/(t+1)".into()), (-1, "-t/(t+1)".into())]),
        ],
        excluded: None,
    });
    int_back.push(SlotSpec::Block {
        base: "K".into(),
        members: vec![
            ("H".into(), vec![(1, "1/(t-1)".into()), (0, "-1/(t-1)".into())]),
            ("Gamma".into(), vec![(1, "t/(t^2-1)".into()), (-1, "-t/(t^2-1)".into())]),
        ],
        excluded: None,
    });
    for e in &es {
        entries.push(PlanEntry::rescale(&format!("{}dot", e), e, 1));
        back.push(PlanEntry::rescale(e, &format!("{}dot", e), -1));
        int_fwd.push(SlotSpec::Plain(format!("{}dot", e)));
        int_back.push(SlotSpec::Plain(e.clone()));
    }

    let mut identification = vec![
        ("K".into(), "z^2".into()),
        ("Hdot".into(), "z^2-1".into()),
        ("Gammadot".into(), "(z^2-z^-2)/2".into()),
    ];
    for (i, e) in es.iter().enumerate() {
        identification.push((format!("{}dot", e), format!("x{}*z", i + 1)));
    }
    for (i, f) in fs.iter().enumerate() {
        identification.push((format!("{}dot", f), format!("z^-1*y{}", i + 1)));
    }

    Ok(PresetRecord {
        presentation: p,
        hprime_plan: Some(RescalePlan {
            name: "uq_heisenberg_a_prime".into(),
            entries,
            excluded_pairs: vec![],
            integral: int_fwd,
            is_hopf: true,
        }),
        hprime_return_plan: Some(RescalePlan {
            name: "uq_heisenberg_a".into(),
            entries: back,
            excluded_pairs: vec![],
            integral: int_back,
            is_hopf: true,
        }),
        vee_plan: None,
        vee_return_plan: None,
        identification,
        description: "quantized enveloping algebra of the Heisenberg Lie algebra, adjoint".into(),
    })
}

pub(super) fn fq_heisenberg(n: usize) -> Result<PresetRecord, PresetError> {
    if n < 1 {
        return Err(PresetError::InvalidParams("n must be at least 1".into()));
    }
    let avs: Vec<String> = (1..=n).map(|i| format!("a{}", i)).collect();
    let bvs: Vec<String> = (1..=n).map(|i| format!("b{}", i)).collect();
    let mut b = PresetBuilder::new("fq_heisenberg", GroundRing::laurent());
    for a in &avs {
        b = b.gen(a, "0");
    }
    b = b.gen("c", "0");
    for bb in &bvs {
        b = b.gen(bb, "0");
    }
    for i in 0..n {
        for j in 0..i {
            b = b.rule(&avs[i], &avs[j], &format!("{}*{}", avs[j], avs[i]));
            b = b.rule(&bvs[i], &bvs[j], &format!("{}*{}", bvs[j], bvs[i]));
        }
    }
    for a in &avs {
        b = b.rule("c", a, &format!("{}*c + (q-1)*{}", a, a));
    }
    for bb in &bvs {
        b = b.rule(bb, "c", &format!("c*{} - (q-1)*{}", bb, bb));
        for a in &avs {
            b = b.rule(bb, a, &format!("{}*{}", a, bb));
        }
    }
    let sum_ab = (0..n)
        .map(|i| format!("{}*{}", avs[i], bvs[i]))
        .collect::<Vec<_>>()
        .join(" + ");
    let mut c_cop: Vec<(String, String)> =
        vec![("c".into(), "1".into()), ("1".into(), "c".into())];
    for i in 0..n {
        c_cop.push((avs[i].clone(), bvs[i].clone()));
    }
    let c_cop_refs: Vec<(&str, &str)> =
        c_cop.iter().map(|(l, r)| (l.as_str(), r.as_str())).collect();
    for a in &avs {
        b = b.coproduct(a, &[(a, "1"), ("1", a)]).antipode(a, &format!("-{}", a));
    }
    b = b.coproduct("c", &c_cop_refs).antipode("c", &format!("-c + {}", sum_ab));
    for bb in &bvs {
        b = b.coproduct(bb, &[(bb, "1"), ("1", bb)]).antipode(bb, &format!("-{}", bb));
    }
    for a in &avs {
        b = b.plain_slot(a);
    }
    b = b.plain_slot("c");
    for bb in &bvs {
        b = b.plain_slot(bb);
    }
    let p = b.build()?;

    let mut entries = Vec::new();
    let mut back = Vec::new();
    let mut int_fwd = Vec::new();
    let mut int_back = Vec::new();
    for (i, a) in avs.iter().enumerate() {
        entries.push(PlanEntry::rescale(&format!("E{}", i + 1), a, -1));
        back.push(PlanEntry::rescale(a, &format!("E{}", i + 1), 1));
        int_fwd.push(SlotSpec::Plain(format!("E{}", i + 1)));
        int_back.push(SlotSpec::Plain(a.clone()));
    }
    entries.push(PlanEntry::rescale("H", "c", -1));
    back.push(PlanEntry::rescale("c", "H", 1));
    int_fwd.push(SlotSpec::Plain("H".into()));
    int_back.push(SlotSpec::Plain("c".into()));
    for (i, bb) in bvs.iter().enumerate() {
        entries.push(PlanEntry::rescale(&format!("F{}", i + 1), bb, -1));
        back.push(PlanEntry::rescale(bb, &format!("F{}", i + 1), 1));
        int_fwd.push(SlotSpec::Plain(format!("F{}", i + 1)));
        int_back.push(SlotSpec::Plain(bb.clone()));
    }

    let mut identification = vec![("H".into(), "h".into())];
    for i in 1..=n {
        identification.push((format!("E{}", i), format!("e{}", i)));
        identification.push((format!("F{}", i), format!("f{}", i)));
    }

    Ok(PresetRecord {
        presentation: p,
        hprime_plan: None,
        hprime_return_plan: None,
        vee_plan: Some(RescalePlan {
            name: "fq_heisenberg_vee".into(),
            entries,
            excluded_pairs: vec![],
            integral: int_fwd,
            is_hopf: true,
        }),
        vee_return_plan: Some(RescalePlan {
            name: "fq_heisenberg".into(),
            entries: back,
            excluded_pairs: vec![],
            integral: int_back,
            is_hopf: true,
        }),
        identification,
        description: "quantized function algebra of the Heisenberg group".into(),
    })
}
