//! The three equivalent anomaly criteria for rank-1 theories.
//!
//! A symplectic representation ⊕_k V^k ⊗ C^{m_k} of the rank-1 datum passes
//! the anomaly check iff the monopole number N = Σ |χ| m_χ / 4 is an
//! integer, iff Σ_ℓ dim M^{4ℓ+1} is even. This example sweeps a family of
//! decompositions and tabulates all three.
//!
//! ```bash
//! cargo run --example sl2_criteria
//! ```

use coulomb_kit::anomaly::{anomaly_check, sl2_monopole_number, sl2_parity_criterion};
use coulomb_kit::lie::{rebuild_from_isotypic, RootDatum};
use coulomb_kit::rat::{format_rat, is_integer};
use std::collections::BTreeMap;

fn main() {
    let d = RootDatum::sl2();
    println!("{:<22} {:>9} {:>8} {:>8} {:>8}", "decomposition", "N", "anomaly", "N in Z", "parity");
    let mut agree = true;
    for m1 in 0..=3u64 {
        for m2 in [0u64, 2] {
            for m3 in 0..=2u64 {
                for m5 in 0..=1u64 {
                    let decomp: BTreeMap<u64, u64> =
                        [(1, m1), (2, m2), (3, m3), (5, m5)].into_iter().collect();
                    let rep = rebuild_from_isotypic(&d, &decomp).unwrap();
                    let n = sl2_monopole_number(&rep).unwrap();
                    let a = anomaly_check(&d, &rep).unwrap().pass();
                    let i = is_integer(&n);
                    let p = sl2_parity_criterion(&decomp);
                    agree &= a == i && i == p;
                    let label = format!("{:?}", decomp.iter().filter(|(_, &m)| m > 0).collect::<Vec<_>>());
                    println!("{label:<22} {:>9} {a:>8} {i:>8} {p:>8}", format_rat(&n));
                }
            }
        }
    }
    println!();
    println!("all three criteria agree on every line: {agree}");
}
