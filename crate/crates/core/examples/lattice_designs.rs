//! Tight designs on shells of the integer lattice in ℝ³ and ℝ⁴.
//!
//! cargo run --release --example lattice_designs -- 0.5

use num_rational::BigRational;
use tdesign::construct::{fg_design, fg_parameters_exact, lattice_shell, FgCase};
use tdesign::design::{verify_and_certify, VERIFY_TOL};
use tdesign::harmonic::{shell_harmonic_sum, SpecialHarmonic};

fn main() -> tdesign::error::Result<()> {
    let lambda: f64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2.0);
    for k in 1..=3 {
        println!(
            "shell I^3_{k}: {} points, f42 sum {}",
            lattice_shell(3, k)?.len(),
            shell_harmonic_sum(3, k, SpecialHarmonic::F42)?
        );
    }
    for case in [FgCase::D3T5, FgCase::D3T7, FgCase::D4T7] {
        let x = fg_design(case, lambda)?;
        let rep = verify_and_certify(&x, case.strength(), VERIFY_TOL);
        println!("{case:?} lambda={lambda}: {} points, pass {}, tight {:?}", x.len(), rep.pass, rep.tight);
    }
    let p = fg_parameters_exact(FgCase::D3T7, &BigRational::new(3.into(), 8.into()))?;
    let w: Vec<String> = p.weights.iter().map(|w| w.to_string()).collect();
    let r: Vec<String> = p.radius_squared.iter().map(|r| r.to_string()).collect();
    println!("D3T7 at lambda = 3/8: r^2 = {r:?}, w = {w:?}");
    Ok(())
}
