//! Tight planar designs on concentric regular polygons.
//!
//! cargo run --example polygon_design -- 7 1 1.5

use tdesign::construct::{polygon_design, tight_polygon_design, LayerOffset};
use tdesign::design::{fisher_bound, verify_and_certify, verify_euclidean_design, VERIFY_TOL};

fn main() -> tdesign::error::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (t, radii) = match args.split_first() {
        Some((t, r)) if !r.is_empty() => (*t as usize, r.to_vec()),
        _ => (4, vec![1.0, 2.0]),
    };
    let x = tight_polygon_design(t, &radii)?;
    let rep = verify_and_certify(&x, t, VERIFY_TOL);
    let bound = fisher_bound(2, radii.len(), t)?;
    println!("t = {t}, radii = {radii:?}: {} points (bound {})", x.len(), bound.total);
    println!("verified strength {}, tight {:?}, antipodal {}", rep.verified_strength, rep.tight, rep.antipodal);
    for (p, w) in x.points().iter().zip(x.weights()) {
        println!("  ({:+.6}, {:+.6})  w = {w:.6}", p[0], p[1]);
    }
    if radii.len() > 1 {
        let flat = polygon_design(t, &radii, LayerOffset::None)?;
        println!("without the layer rotation: passes at t = {}", verify_euclidean_design(&flat, t, VERIFY_TOL).pass);
    }
    Ok(())
}
