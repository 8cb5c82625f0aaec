//! Interval designs on `[-1, 1]` for the ultraspherical weight `(1 - x²)^{(n-3)/2}`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::exact::{interval_mass, interval_monomial_average, ratio_to_f64};
use crate::orthopoly::{christoffel_weights, gegenbauer_roots};

/// Default relative tolerance for interval design verification.
pub const INTERVAL_TOL: f64 = 1e-10;

/// Antipodal nodes in `(-1, 1)` with positive weights summing to one.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntervalDesign {
    /// Dimension parameter of the weight `(1 - x²)^{(n-3)/2}`.
    pub n: usize,
    /// Strength the design was built for.
    pub t: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntervalResidual {
    pub degree: usize,
    pub quadrature: f64,
    pub exact: f64,
    pub residual: f64,
    pub scale: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IntervalReport {
    pub pass: bool,
    pub strength: usize,
    pub tolerance: f64,
    pub max_relative_residual: f64,
    pub residuals: Vec<IntervalResidual>,
}

impl IntervalDesign {
    /// Checks the structural invariants (interior, antipodal, positive weights, unit mass).
    pub fn validate(&self) -> Result<()> {
        let s = self.nodes.len();
        if s == 0 || s != self.weights.len() {
            return Err(invalid("interval design needs equally many nodes and weights"));
        }
        if self.n < 2 {
            return Err(invalid("interval design needs n >= 2"));
        }
        if self.nodes.iter().any(|&c| !(c > -1.0 && c < 1.0)) {
            return Err(invalid("interval design nodes must lie in (-1, 1)"));
        }
        if self.weights.iter().any(|&w| !(w > 0.0)) {
            return Err(invalid("interval design weights must be positive"));
        }
        if !self.nodes.windows(2).all(|w| w[0] < w[1]) {
            return Err(invalid("interval design nodes must be strictly increasing"));
        }
        Ok(())
    }

    pub fn is_antipodal(&self) -> bool {
        let s = self.nodes.len();
        (0..s).all(|i| {
            let j = s - 1 - i;
            self.nodes[i] == -self.nodes[j] && self.weights[i] == self.weights[j]
        })
    }

    /// `Σ γ_i c_i^k`, summed over antipodal pairs so odd moments cancel exactly.
    pub fn moment(&self, k: usize) -> f64 {
        let s = self.nodes.len();
        let mut acc = 0.0;
        for i in 0..s / 2 {
            let j = s - 1 - i;
            acc += self.weights[i] * self.nodes[i].powi(k as i32)
                + self.weights[j] * self.nodes[j].powi(k as i32);
        }
        if s % 2 == 1 {
            acc += self.weights[s / 2] * self.nodes[s / 2].powi(k as i32);
        }
        acc
    }
}

/// Gauss rule with `⌊t/2⌋ + 1` nodes, normalised so the weights sum to one.
pub fn build_interval_design(n: usize, t: usize) -> Result<IntervalDesign> {
    if n < 2 {
        return Err(invalid(format!("interval designs need n >= 2, got {n}")));
    }
    let s = t / 2 + 1;
    let roots = gegenbauer_roots(s, n)?;
    let raw = christoffel_weights(s, n, &roots)?;
    let mass = interval_mass(n)?.to_f64();
    let weights = raw.iter().map(|w| w / mass).collect();
    let d = IntervalDesign {
        n,
        t,
        nodes: roots.roots,
        weights,
    };
    d.validate()?;
    Ok(d)
}

/// Compares `Σ γ c^k` against the exact normalised moment for every `k ≤ t`.
pub fn verify_interval_design(d: &IntervalDesign, t: usize, tol: f64) -> IntervalReport {
    let mut residuals = Vec::with_capacity(t + 1);
    let mut worst: f64 = 0.0;
    for k in 0..=t {
        let exact = ratio_to_f64(
            &interval_monomial_average(d.n, k as u32).expect("n validated at construction"),
        );
        let quadrature = d.moment(k);
        let residual = (quadrature - exact).abs();
        let scale = exact.abs().max(1.0);
        worst = worst.max(residual / scale);
        residuals.push(IntervalResidual {
            degree: k,
            quadrature,
            exact,
            residual,
            scale,
        });
    }
    IntervalReport {
        pass: worst <= tol,
        strength: t,
        tolerance: tol,
        max_relative_residual: worst,
        residuals,
    }
}
