//! The batch workflows as a library: run the same commands the
//! `coulomb-kit` binary exposes, against the JSON specs in
//! `examples/data/`, and inspect the deterministic reports.
//!
//! ```bash
//! cargo run --example batch_reports
//! ```

use coulomb_kit::cli::{cmd_anomaly, cmd_hilbert, cmd_rep_info, HilbertFlags};

fn main() {
    let data = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    for name in ["sl2_cotangent_v1.json", "sp4_so4_bifundamental.json"] {
        let text = std::fs::read_to_string(format!("{data}/{name}")).expect("spec file");
        let out = cmd_anomaly(&text);
        println!("anomaly {name}: status {}, exit {}", out.report.status, out.exit);
    }

    let n3 = std::fs::read_to_string(format!("{data}/sl2_n3.json")).expect("spec file");
    let out = cmd_hilbert(
        &n3,
        &HilbertFlags {
            order: 12,
            threads: 2,
            shell_cap: None,
        },
    );
    println!("\nhilbert sl2_n3.json (machine-readable):");
    println!("{}", out.report.to_json());

    let info = cmd_rep_info(&n3);
    println!("\nrep-info sl2_n3.json (human-readable results):");
    println!("{}", coulomb_kit::cli::render_text(&info));
}
