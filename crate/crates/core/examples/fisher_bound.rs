//! Lower bounds on the size of designs supported on p spheres.
//!
//! cargo run --example fisher_bound

use tdesign::design::fisher_bound;

fn main() -> tdesign::error::Result<()> {
    for (n, p, t) in [(3, 2, 5), (3, 3, 7), (4, 2, 7), (2, 1, 5), (5, 2, 4)] {
        let b = fisher_bound(n, p, t)?;
        println!("N({n},{p},{t}) = {:>4}  terms {:?}{}", b.total, b.per_k, if b.antipodality_required { "  (antipodal)" } else { "" });
    }
    println!("planar table, N(2,p,t) = p(t+3-2p):");
    for t in 1..=9 {
        let row: Vec<String> = (1..=(t + 5) / 4).map(|p| fisher_bound(2, p, t).map(|b| b.total.to_string())).collect::<Result<_, _>>()?;
        println!("  t = {t}: {}", row.join(" "));
    }
    Ok(())
}
