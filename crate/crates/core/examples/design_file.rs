//! Write a design to JSON, read it back, verify with both methods and render it.
//!
//! cargo run --example design_file -- /tmp/design.svg

use tdesign::construct::tight_polygon_design;
use tdesign::design::{verify_euclidean_design, VERIFY_TOL};
use tdesign::harmonic::verify_design_harmonic;
use tdesign::io::{render_svg, DesignFile, Metadata};

fn main() -> tdesign::error::Result<()> {
    let x = tight_polygon_design(6, &[1.0, 1.8])?;
    let meta = Metadata { constructor: "polygon".into(), claimed_strength: Some(6), ..Default::default() };
    let json = DesignFile::from_euclidean(&x, Some(meta)).to_json()?;
    println!("{json}");
    let back = DesignFile::from_json(&json)?.to_point_set()?;
    assert_eq!(back, x);
    let m = verify_euclidean_design(&back, 6, VERIFY_TOL);
    let h = verify_design_harmonic(&back, 6, VERIFY_TOL)?;
    println!("moments: {}, harmonic: {}", m.pass, h.pass);
    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, render_svg(&back)?).map_err(|e| tdesign::error::DesignError::Io(e.to_string()))?;
        println!("wrote {path}");
    }
    Ok(())
}
