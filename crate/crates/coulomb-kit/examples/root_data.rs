//! Root data, Weyl groups and dominant coweights.
//!
//! ```bash
//! cargo run --example root_data
//! ```

use coulomb_kit::lie::{Preset, RootDatum};

fn show(d: &RootDatum) {
    println!("{}", d.name());
    println!("  rank:          {}", d.rank());
    println!("  cartan matrix: {:?}", d.cartan_matrix());
    println!("  roots:         {}", d.all_roots().len());
    let w = d.weyl_elements().expect("finite Weyl group");
    println!("  |W|:           {}", w.len());
    println!("  dominant coweights in the unit box: {:?}", d.dominant_coweights(1));
    println!();
}

fn main() {
    for p in [
        Preset::Sl(2),
        Preset::Pgl(2),
        Preset::Sp(4),
        Preset::So(5),
        Preset::So(4),
        Preset::Torus(1),
    ] {
        show(&RootDatum::preset(p).expect("preset"));
    }

    let product = RootDatum::preset(Preset::Sp(4))
        .unwrap()
        .product(&RootDatum::preset(Preset::So(4)).unwrap());
    show(&product);

    let sp4 = RootDatum::preset(Preset::Sp(4)).unwrap();
    println!(
        "Weyl orbit of the first fundamental coweight direction of Sp(4): {:?}",
        sp4.weight_orbit(&[1, 0])
    );
}
