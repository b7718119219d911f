//! Trivial one-parameter deformations: enveloping algebras with bracket
//! scaled by the parameter, and group algebras of finite groups.

use super::builder::PresetBuilder;
use super::{GroupTableData, LieData, PresetError, PresetRecord};
use crate::coeff::{GroundRing, Prime};
use crate::drinfeld::{PlanEntry, RescalePlan, SlotSpec};

/// U over ℚ[ν] with x·y − y·x = ν·[x,y]; a QrUEA at ν−1 and a QFA at ν.
pub(super) fn trivial_deformation(lie: &LieData, prime: Prime) -> Result<PresetRecord, PresetError> {
    let k = lie.names.len();
    if k == 0 {
        return Err(PresetError::InvalidParams("empty basis".into()));
    }
    let ring = GroundRing::polynomial(prime);
    let mut b = PresetBuilder::new("trivial_deformation", ring);
    for name in &lie.names {
        b = b.gen(name, "0");
    }
    for j in 0..k {
        for i in 0..j {
            // x_j·x_i = x_i·x_j + ν·[x_j, x_i]
            let mut rhs = format!("{}*{}", lie.names[i], lie.names[j]);
            for m in 0..k {
                let c = lie.bracket(j, i, m);
                if !c.is_zero() {
                    rhs.push_str(&format!(" + nu*({})*{}", c, lie.names[m]));
                }
            }
            b = b.rule(&lie.names[j], &lie.names[i], &rhs);
        }
    }
    for name in &lie.names {
        b = b
            .coproduct(name, &[(name, "1"), ("1", name)])
            .antipode(name, &format!("-{}", name))
            .plain_slot(name);
    }
    let p = b.build()?;

    // at the prime ν: divide the Lie generators down; at ν−1: scale them up
    let suffix = |s: &str| format!("{}{}", s, if prime == Prime::T { "v" } else { "p" });
    let fwd_entries: Vec<PlanEntry> = lie
        .names
        .iter()
        .map(|x| PlanEntry::rescale(&suffix(x), x, if prime == Prime::T { -1 } else { 1 }))
        .collect();
    let back_entries: Vec<PlanEntry> = lie
        .names
        .iter()
        .map(|x| PlanEntry::rescale(x, &suffix(x), if prime == Prime::T { 1 } else { -1 }))
        .collect();
    let fwd_slots: Vec<SlotSpec> =
        lie.names.iter().map(|x| SlotSpec::Plain(suffix(x))).collect();
    let back_slots: Vec<SlotSpec> =
        lie.names.iter().map(|x| SlotSpec::Plain(x.clone())).collect();

    let fwd = RescalePlan {
        name: if prime == Prime::T {
            "trivial_deformation_vee".into()
        } else {
            "trivial_deformation_prime".into()
        },
        entries: fwd_entries,
        excluded_pairs: vec![],
        integral: fwd_slots,
        is_hopf: true,
    };
    let back = RescalePlan {
        name: "trivial_deformation".into(),
        entries: back_entries,
        excluded_pairs: vec![],
        integral: back_slots,
        is_hopf: true,
    };

    let identification: Vec<(String, String)> =
        lie.names.iter().map(|x| (suffix(x), x.clone())).collect();
    let (vee_plan, vee_return_plan, hprime_plan, hprime_return_plan) = if prime == Prime::T {
        (Some(fwd), Some(back), None, None)
    } else {
        (None, None, Some(fwd), Some(back))
    };
    Ok(PresetRecord {
        presentation: p,
        hprime_plan,
        hprime_return_plan,
        vee_plan,
        vee_return_plan,
        identification,
        description: "enveloping algebra with bracket scaled by the parameter".into(),
    })
}

/// R[G] with group-like basis; every word of two generators reduces to a
/// single group element.
pub(super) fn group_algebra(g: &GroupTableData) -> Result<PresetRecord, PresetError> {
    let n = g.labels.len();
    if n == 0 || g.table.len() != n || g.table.iter().any(|r| r.len() != n) {
        return Err(PresetError::InvalidParams("bad multiplication table".into()));
    }
    // identity must be index 0 with the table a Latin square
    for i in 0..n {
        if g.table[0][i] != i || g.table[i][0] != i {
            return Err(PresetError::InvalidParams("index 0 must be the identity".into()));
        }
    }
    let ring = GroundRing::laurent();
    let mut b = PresetBuilder::new("group_algebra_deformation", ring);
    // generators are the non-identity elements, insertion order
    let gen_name = |i: usize| g.labels[i].clone();
    for i in 1..n {
        b = b.gen(&gen_name(i), "1");
    }
    let word_for = |k: usize| if k == 0 { "1".to_string() } else { gen_name(k) };
    for i in 1..n {
        for j in 1..n {
            b = b.rule(&gen_name(i), &gen_name(j), &word_for(g.table[i][j]));
        }
    }
    for i in 1..n {
        let inv = (0..n)
            .find(|&j| g.table[i][j] == 0)
            .ok_or_else(|| PresetError::InvalidParams("element without inverse".into()))?;
        b = b
            .coproduct(&gen_name(i), &[(&gen_name(i), &gen_name(i))])
            .antipode(&gen_name(i), &word_for(inv))
            .plain_slot(&gen_name(i));
    }
    let p = b.build()?;
    Ok(PresetRecord {
        presentation: p,
        hprime_plan: None,
        hprime_return_plan: None,
        vee_plan: None,
        vee_return_plan: None,
        identification: vec![],
        description: "group algebra of a finite group over the one-parameter ring".into(),
    })
}
