//! Trace forms and anomaly-cancellation verdicts.
//!
//! ```bash
//! cargo run --example anomaly_check
//! ```

use coulomb_kit::anomaly::{anomaly_check, trace_form};
use coulomb_kit::lie::{cotangent, defining_rep, sl2_irrep, tensor, Preset, RootDatum, WeightRep};

fn report(label: &str, d: &RootDatum, r: &WeightRep) {
    let b = trace_form(d, r).expect("rank match");
    println!("{label}");
    println!("  dim:  {}", r.dim());
    println!("  gram: {:?}", b.gram());
    match anomaly_check(d, r) {
        Ok(v) => {
            println!("  pass: {}", v.pass());
            if !v.half_integral {
                println!("  witness of non-integrality of B/2: {:?}", v.witness);
            }
            if !v.coroot_failures.is_empty() {
                println!("  coroots with B(a,a) % 4 != 0: {:?}", v.coroot_failures);
            }
        }
        Err(e) => println!("  rejected: {e}"),
    }
    println!();
}

fn main() {
    let sl2 = RootDatum::sl2();
    let v1 = sl2_irrep(&sl2, 1).unwrap();
    report("SL(2), one half-hypermultiplet (V^1): anomalous", &sl2, &v1);
    report("SL(2), full hypermultiplet (T*V^1): passes", &sl2, &cotangent(&v1));

    let sp4 = RootDatum::preset(Preset::Sp(4)).unwrap();
    report(
        "Sp(4), defining representation: anomalous",
        &sp4,
        &defining_rep(Preset::Sp(4)).unwrap(),
    );

    // The bifundamental of Sp(4) x SO(4) is irreducible yet anomaly-free.
    let so4 = RootDatum::preset(Preset::So(4)).unwrap();
    let product = sp4.product(&so4);
    let bifund = tensor(
        &defining_rep(Preset::Sp(4)).unwrap().embed(0, 4),
        &defining_rep(Preset::So(4)).unwrap().embed(2, 4),
    )
    .unwrap();
    report("Sp(4) x SO(4), bifundamental: passes", &product, &bifund);
}
