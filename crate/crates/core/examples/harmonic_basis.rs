//! Harmonic polynomial bases and the harmonic design test.
//!
//! cargo run --release --example harmonic_basis -- 3 4

use tdesign::construct::tight_polygon_design;
use tdesign::design::VERIFY_TOL;
use tdesign::harmonic::{build_phi_basis, feven_filter, harmonic_dimension, verify_design_harmonic};

fn main() -> tdesign::error::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, s) = (args.first().copied().unwrap_or(3), args.get(1).copied().unwrap_or(4) as u32);
    let basis = build_phi_basis(n, s)?;
    println!("Harm_{s}(R^{n}): {} elements (dimension {})", basis.len(), harmonic_dimension(n, s)?);
    for e in &basis.elements {
        println!("  {:<16} {}", e.index.to_string(), e.poly);
    }
    let even = feven_filter(&basis);
    println!("fully even: {}", even.len());

    let hex = tight_polygon_design(5, &[1.0])?;
    let rep = verify_design_harmonic(&hex, 6, VERIFY_TOL)?;
    for r in &rep.residuals {
        println!("  degree {}: worst {} residual {:.3e} ({} failing)", r.degree, r.term, r.residual, r.failures);
    }
    Ok(())
}
