//! Gauss-type interval designs for the weight (1-x²)^((n-3)/2).
//!
//! cargo run --example interval_design -- 4 7

use tdesign::interval::{build_interval_design, verify_interval_design, INTERVAL_TOL};

fn main() -> tdesign::error::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, t) = (args.first().copied().unwrap_or(4), args.get(1).copied().unwrap_or(7));
    let d = build_interval_design(n, t)?;
    println!("n = {n}, t = {t}: {} nodes", d.nodes.len());
    for (c, g) in d.nodes.iter().zip(&d.weights) {
        println!("  c = {c:+.17}  gamma = {g:.17}");
    }
    let rep = verify_interval_design(&d, t, INTERVAL_TOL);
    println!("verified: {} (max relative residual {:.2e})", rep.pass, rep.max_relative_residual);
    let over = verify_interval_design(&d, t + 2, INTERVAL_TOL);
    println!("at t + 2: {}", over.pass);
    Ok(())
}
