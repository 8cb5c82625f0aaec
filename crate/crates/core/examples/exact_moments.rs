//! Exact sphere and interval moments.
//!
//! cargo run --example exact_moments

use tdesign::exact::{interval_mass, interval_monomial_average, sphere_monomial_average, sphere_surface_f64};

fn main() -> tdesign::error::Result<()> {
    for (n, e) in [(2, vec![2, 0]), (3, vec![2, 2, 0]), (3, vec![4, 0, 0]), (4, vec![2, 2, 2, 0])] {
        let m = sphere_monomial_average(n, &e)?;
        println!("avg over S^{} of x^{:?} = {}  (scales as r^{})", n - 1, e, m.value, m.radius_exponent);
    }
    println!("|S^2(r=2)| = {:.12}", sphere_surface_f64(3, 2.0)?);
    for n in 2..=5 {
        println!("n={n}: interval mass {}, normalised x^4 moment {}", interval_mass(n)?, interval_monomial_average(n, 4)?);
    }
    Ok(())
}
