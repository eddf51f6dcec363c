//! Walkthrough of the orthosymplectic moment-map constructions: adjoints,
//! the varieties Y and X, the map ξ, and the symplectic Gram-Schmidt map η.
//!
//! ```bash
//! cargo run --example kostant_maps
//! ```

use coulomb_kit::kostant::sample::{random_so_element, random_sp_element, seed_y_point, split_pair};
use coulomb_kit::kostant::{
    adjoint, eta, in_x, in_y, is_so_member, is_sp_member, kostant_coords, moment_so, moment_sp,
    transport, xi,
};
use coulomb_kit::kostant::suite::run_suite;
use coulomb_kit::rat::format_rat;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=2usize {
        println!("== n = {n}: M is 2n = {} dimensional, M' is {} dimensional ==", 2 * n, 2 * n + 1);
        let (m, mp) = split_pair(n);
        let (v, a) = seed_y_point(n);
        println!("seed Y-point: v = e_0, A with columns of ±basis vectors");
        println!("  in_Y: {}", in_y(&v, &a, &m, &mp).unwrap());

        let at = adjoint(&a, &m, &mp).unwrap();
        println!("  A^t has shape {}x{}", at.rows(), at.cols());
        let in_sp = is_sp_member(&moment_sp(&a, &m, &mp).unwrap(), &m);
        let in_so = is_so_member(&moment_so(&a, &m, &mp).unwrap(), &mp);
        println!("  AA^t in sp({}): {in_sp}; A^tA in so({}): {in_so}", 2 * n, 2 * n + 1);

        let (u, x) = xi(&v, &a, &m, &mp).unwrap();
        assert!(in_x(&u, &x, &m).unwrap());
        println!("  ξ(v, A) lands in X");

        let (g, sigma) = eta(&u, &x, &m).unwrap();
        println!("  η: g is exactly symplectic: {}", m.preserves(&g));
        println!(
            "  slice coordinates (degrees {:?}): [{}]",
            sigma.degrees(),
            sigma
                .coeffs()
                .iter()
                .map(format_rat)
                .collect::<Vec<_>>()
                .join(", ")
        );

        // Transport the point around and watch the invariants hold.
        let g0 = random_sp_element(&m, &mut rng);
        let h0 = random_so_element(&mp, &mut rng);
        let (v2, a2) = transport(&v, &a, &g0, &h0).unwrap();
        println!("  transported point stays in Y: {}", in_y(&v2, &a2, &m, &mp).unwrap());
        let (_u2, x2) = xi(&v2, &a2, &m, &mp).unwrap();
        let sigma2 = kostant_coords(&x2, &m).unwrap();
        println!("  slice coordinates are transport-invariant: {}", sigma2 == sigma);
        println!();
    }

    println!("running the full property suite (n = 1, 25 samples, seed 7)…");
    let report = run_suite(1, 25, 7).unwrap();
    for p in &report.properties {
        println!("  {:<38} {}", p.name, if p.passed() { "ok" } else { "FAILED" });
    }
}
