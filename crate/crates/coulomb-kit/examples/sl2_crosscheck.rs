//! Two-sided verification for rank-1 theories: the monopole sum against the
//! graded count of the three-generator presentation, coefficient by
//! coefficient.
//!
//! ```bash
//! cargo run --example sl2_crosscheck
//! ```

use coulomb_kit::cli::sl2_theory;
use coulomb_kit::monopole::{
    compare_series, monopole_hilbert_series, presentation_hilbert_series, sl2_presentation,
    MonopoleOptions,
};

fn main() {
    let order = 40;
    for n in 3u64..=8 {
        let (d, r) = sl2_theory(2 * n);
        let monopole = monopole_hilbert_series(&d, &r, &MonopoleOptions::new(order))
            .expect("good theory")
            .series;
        let pres = sl2_presentation(&d, &r).expect("anomaly-free");
        let pres_series = presentation_hilbert_series(&pres, order).expect("N >= 3");
        let verdict = compare_series(&monopole, &pres_series);
        println!("N = {n}:  {}", pres);
        println!("  monopole sum   : {}", head(&monopole.to_string()));
        println!("  monomial count : {}", head(&pres_series.to_string()));
        println!("  comparison     : {verdict}");
        println!();
    }
}

fn head(s: &str) -> String {
    let mut out: String = s.chars().take(60).collect();
    if out.len() < s.len() {
        out.push('…');
    }
    out
}
