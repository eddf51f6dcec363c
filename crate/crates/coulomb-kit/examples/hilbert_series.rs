//! Monopole-formula Hilbert series, Molien dressing factors included.
//!
//! ```bash
//! cargo run --example hilbert_series
//! ```

use coulomb_kit::lie::{Preset, RootDatum, WeightRep};
use coulomb_kit::monopole::{
    delta, molien_series, monopole_hilbert_series, stabilizer_weyl, MonopoleOptions,
};
use coulomb_kit::rat::format_rat;

fn main() {
    // Dressing factors: Molien series of Weyl groups.
    for p in [Preset::Sl(2), Preset::Sp(4)] {
        let d = RootDatum::preset(p).unwrap();
        let w = d.weyl_elements().unwrap();
        println!("Molien series of W({}): {}", d.name(), molien_series(&w, 12).unwrap());
    }
    println!();

    // A rank-1 torus with two hypermultiplets of charge 1.
    let torus = RootDatum::torus(1);
    let rep = WeightRep::from_pairs(1, [(vec![1], 2), (vec![-1], 2)]).unwrap();
    for m in 0..4i64 {
        println!("torus Δ([{m}]) = {}", format_rat(&delta(&torus, &rep, &[m])));
    }
    let out = monopole_hilbert_series(&torus, &rep, &MonopoleOptions::new(12)).unwrap();
    println!("torus series:  {}", out.series);
    println!("(this is (1+q)/(1-q)^2: the A_1 surface singularity)");
    println!();

    // Sp(4) needs enough matter for the sum to converge. One copy of
    // T*(defining) leaves Δ unbounded below along (m, m); the enumeration
    // detects this instead of truncating silently.
    let sp4 = RootDatum::preset(Preset::Sp(4)).unwrap();
    let one_copy = coulomb_kit::lie::cotangent(&coulomb_kit::lie::defining_rep(Preset::Sp(4)).unwrap());
    match monopole_hilbert_series(&sp4, &one_copy, &MonopoleOptions::new(8)) {
        Err(e) => println!("Sp(4), one copy of T*(defining): {e}"),
        Ok(_) => unreachable!("this theory is not good"),
    }
    println!();

    // Five copies are good: Δ(λ) = a + 3b on the dominant cone (a ≥ b ≥ 0).
    let mut matter = one_copy.clone();
    for _ in 1..5 {
        matter = coulomb_kit::lie::direct_sum(&matter, &one_copy).unwrap();
    }
    let w = sp4.weyl_elements().unwrap();
    for cw in sp4.dominant_coweights(1) {
        println!(
            "Sp(4) λ = {cw:?}: Δ = {:>4}, |W_λ| = {}",
            format_rat(&delta(&sp4, &matter, &cw)),
            stabilizer_weyl(&w, &cw).len()
        );
    }
    let out = monopole_hilbert_series(&sp4, &matter, &MonopoleOptions::new(8)).unwrap();
    println!(
        "Sp(4), 5 copies of T*(defining), series through q^8 ({} contributing coweights):",
        out.contributing
    );
    println!("  {}", out.series);
}
