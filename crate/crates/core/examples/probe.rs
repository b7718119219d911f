use qduality::presets::{build_preset, el, PresetParams};
use qduality::drinfeld::{delta_int_coords, hprime_membership};
use std::time::Instant;

fn main() {
    let rec = build_preset("uq_sl2_adjoint", &PresetParams::default()).unwrap();
    let p = &rec.presentation;
    let f = el(p, "(q-1)*F");
    let t0 = Instant::now();
    let c = delta_int_coords(p, &f, 10).unwrap();
    println!("delta10 coords = {} in {:?}", c.len(), t0.elapsed());
    for expr in ["(q-1)*F", "(q-1)*Gamma", "(q-1)*E", "K", "K^-1", "F"] {
        let t0 = Instant::now();
        let v = hprime_membership(p, &el(p, expr), 10).unwrap();
        println!("{}: member={} in {:?}", expr, v.is_member(), t0.elapsed());
    }
    // consistency of fast and slow paths at small n
    for n in 1..=4usize {
        let slow = {
            use qduality::hopf::IntegralExpander;
            let dn = p.delta_n(&f, n).unwrap();
            let mut ex = IntegralExpander::new(p).unwrap();
            ex.tensor_coords(&dn).unwrap()
        };
        let fast = delta_int_coords(p, &f, n).unwrap();
        assert_eq!(slow, fast, "n={}", n);
    }
    println!("fast == slow for n<=4");
}
