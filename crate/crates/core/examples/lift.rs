//! Lift a planar design to higher dimensions with interval designs.
//!
//! cargo run --release --example lift

use tdesign::construct::{lift_to_dimension, tight_polygon_design};
use tdesign::design::{layer_decompose, verify_euclidean_design, GROUP_TOL, VERIFY_TOL};

fn main() -> tdesign::error::Result<()> {
    let t = 5;
    let seed = tight_polygon_design(t, &[1.0, 2.0])?;
    let base = layer_decompose(&seed, GROUP_TOL)?;
    println!("seed: {} points, layer radii {:?}, masses {:?}", seed.len(), base.radii, base.layer_mass);
    for n in 3..=5 {
        let x = lift_to_dimension(&seed, n, t)?;
        let ld = layer_decompose(&x, GROUP_TOL)?;
        let rep = verify_euclidean_design(&x, t, VERIFY_TOL);
        println!(
            "n = {n}: {} points, masses {:?}, {t}-design: {}",
            x.len(),
            ld.layer_mass,
            rep.pass
        );
    }
    Ok(())
}
