//! Jacobi polynomials, their roots and the Gauss–Jacobi (Christoffel) weights.
//!
//! Only the ultraspherical case `α = β = (n-3)/2` feeds the design
//! constructions, but evaluation works for any `α, β > -1`.
//!
//! Roots are found degree by degree: the zeros of `P_{d-1}` strictly interlace
//! those of `P_d`, so they bracket every root of the next degree and a
//! safeguarded Newton iteration converges inside each bracket.

use serde::Serialize;

use crate::error::{invalid, DesignError, Result};
use crate::exact::{gamma_half, SqrtPiMultiple};

/// Maximum `|P_s(c)|` accepted at a computed root.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-13;

const MAX_ITER: usize = 200;

/// Degree and parameters of a Jacobi polynomial `P_s^{(α,β)}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct JacobiSpec {
    pub degree: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiSpec {
    pub fn new(degree: usize, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > -1.0 && beta > -1.0) {
            return Err(invalid(format!(
                "Jacobi parameters must exceed -1 (alpha={alpha}, beta={beta})"
            )));
        }
        Ok(JacobiSpec { degree, alpha, beta })
    }

    /// `α = β = (n-3)/2`, the weight `(1 - x²)^{(n-3)/2}`.
    pub fn ultraspherical(degree: usize, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(invalid(format!("ultraspherical weight needs n >= 2, got {n}")));
        }
        let a = (n as f64 - 3.0) / 2.0;
        JacobiSpec::new(degree, a, a)
    }

    fn is_symmetric(&self) -> bool {
        self.alpha == self.beta
    }
}

/// Sorted roots of `P_s` in `(-1, 1)` together with `|P_s|` at each root.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RootSet {
    pub spec: JacobiSpec,
    pub roots: Vec<f64>,
    pub residuals: Vec<f64>,
}

impl RootSet {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().cloned().fold(0.0, f64::max)
    }
}

fn jacobi_value(s: usize, a: f64, b: f64, x: f64) -> f64 {
    if s == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = ((a - b) + (a + b + 2.0) * x) / 2.0;
    for k in 2..=s {
        let k = k as f64;
        let c = 2.0 * k + a + b;
        let a1 = 2.0 * k * (k + a + b) * (c - 2.0);
        let a2 = (c - 1.0) * (a * a - b * b);
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
        let next = ((a2 + a3 * x) * cur - a4 * prev) / a1;
        prev = cur;
        cur = next;
    }
    cur
}

/// `(P_s^{(α,β)}(x), d/dx P_s^{(α,β)}(x))` via the three-term recurrence.
///
/// The derivative uses `P_s' = (s+α+β+1)/2 · P_{s-1}^{(α+1,β+1)}`.
pub fn jacobi_eval(spec: &JacobiSpec, x: f64) -> (f64, f64) {
    let JacobiSpec { degree: s, alpha: a, beta: b } = *spec;
    let value = jacobi_value(s, a, b, x);
    let deriv = if s == 0 {
        0.0
    } else {
        (s as f64 + a + b + 1.0) / 2.0 * jacobi_value(s - 1, a + 1.0, b + 1.0, x)
    };
    (value, deriv)
}

/// Safeguarded Newton in a sign-changing bracket.
fn root_in_bracket(spec: &JacobiSpec, lo: f64, hi: f64) -> Result<f64> {
    let fail = || DesignError::NoConvergence { degree: spec.degree, lo, hi };
    let (mut a, mut b) = (lo, hi);
    let mut fa = jacobi_eval(spec, a).0;
    let fb = jacobi_eval(spec, b).0;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(fail());
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..MAX_ITER {
        let (f, df) = jacobi_eval(spec, x);
        if f == 0.0 {
            return Ok(x);
        }
        if f.signum() == fa.signum() {
            a = x;
            fa = f;
        } else {
            b = x;
        }
        let newton = x - f / df;
        let next = if df != 0.0 && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
        if (next - x).abs() <= 2.0 * f64::EPSILON * x.abs().max(f64::MIN_POSITIVE)
            || b - a <= 4.0 * f64::EPSILON * x.abs().max(1e-300)
        {
            return Ok(next);
        }
        x = next;
    }
    Err(fail())
}

/// Roots of a general Jacobi polynomial, sorted ascending.
pub fn jacobi_roots(spec: &JacobiSpec) -> Result<Vec<f64>> {
    let JacobiSpec { alpha: a, beta: b, .. } = *spec;
    if spec.degree == 0 {
        return Ok(Vec::new());
    }
    let mut roots = vec![1.0 - 2.0 * (a + 1.0) / (a + b + 2.0)];
    for d in 2..=spec.degree {
        let sub = JacobiSpec { degree: d, ..*spec };
        let mut edges = Vec::with_capacity(d + 1);
        edges.push(-1.0);
        edges.extend_from_slice(&roots);
        edges.push(1.0);
        roots = edges
            .windows(2)
            .map(|w| root_in_bracket(&sub, w[0], w[1]))
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(roots)
}

/// Accepted `|P_s(c)|` at a computed root: [`ROOT_RESIDUAL_TOL`], or the
/// binary64 floor `8 ε |c| |P_s'(c)|` when that is larger (high degree, large `n`).
pub fn root_residual_limit(spec: &JacobiSpec, c: f64) -> f64 {
    let d = jacobi_eval(spec, c).1;
    ROOT_RESIDUAL_TOL.max(8.0 * f64::EPSILON * c.abs().max(f64::EPSILON) * d.abs())
}

/// Roots of the ultraspherical polynomial `P_s^{((n-3)/2,(n-3)/2)}`.
///
/// The result is made exactly antipodal: paired roots are replaced by
/// `±(|c_i| + |c_{s+1-i}|)/2` and the middle root of an odd degree is set to 0.
pub fn gegenbauer_roots(s: usize, n: usize) -> Result<RootSet> {
    if s == 0 {
        return Err(invalid("gegenbauer_roots needs degree s >= 1"));
    }
    let spec = JacobiSpec::ultraspherical(s, n)?;
    let mut roots = jacobi_roots(&spec)?;
    debug_assert!(spec.is_symmetric());
    for i in 0..s / 2 {
        let j = s - 1 - i;
        let m = 0.5 * (roots[i].abs() + roots[j].abs());
        roots[i] = -m;
        roots[j] = m;
    }
    if s % 2 == 1 {
        roots[s / 2] = 0.0;
    }
    let residuals: Vec<f64> = roots.iter().map(|&c| jacobi_eval(&spec, c).0.abs()).collect();
    for (i, (&c, &r)) in roots.iter().zip(&residuals).enumerate() {
        if !(r < root_residual_limit(&spec, c)) || !(c > -1.0 && c < 1.0) {
            let lo = if i == 0 { -1.0 } else { roots[i - 1] };
            let hi = if i + 1 == s { 1.0 } else { roots[i + 1] };
            return Err(DesignError::NoConvergence { degree: s, lo, hi });
        }
    }
    Ok(RootSet { spec, roots, residuals })
}

/// Prefactor `2^{α+β+1} Γ(α+s+1) Γ(β+s+1) / (s! Γ(α+β+s+1))` for `α = β = (n-3)/2`.
fn christoffel_prefactor(s: usize, n: usize) -> f64 {
    let g = |k: usize| -> SqrtPiMultiple { gamma_half(k as u32).expect("positive argument").into() };
    // Γ(α+s+1) = Γ((n-1+2s)/2), Γ(α+β+s+1) = Γ(n-2+s), s! = Γ(s+1)
    let top = g(n - 1 + 2 * s) * g(n - 1 + 2 * s);
    let bottom = g(2 * s + 2) * g(2 * (n - 2 + s));
    let pow2 = 2f64.powi(n as i32 - 2);
    pow2 * (top / bottom).to_f64()
}

/// Unnormalised Gauss–Jacobi weights attached to the given roots.
///
/// Their sum is `μ(I)`; they integrate every polynomial of degree `≤ 2s - 1`
/// exactly against `(1 - x²)^{(n-3)/2}`.
pub fn christoffel_weights(s: usize, n: usize, roots: &RootSet) -> Result<Vec<f64>> {
    let spec = JacobiSpec::ultraspherical(s, n)?;
    if roots.spec != spec || roots.roots.len() != s {
        return Err(invalid(format!(
            "root set does not belong to degree {s}, dimension {n}"
        )));
    }
    let pref = christoffel_prefactor(s, n);
    let mut weights = Vec::with_capacity(s);
    for &c in &roots.roots {
        let (_, d) = jacobi_eval(&spec, c);
        let denom = (1.0 - c * c) * d * d;
        if !(denom > 0.0) {
            return Err(invalid(format!("degenerate Christoffel denominator at root {c}")));
        }
        weights.push(pref / denom);
    }
    for i in 0..s / 2 {
        let j = s - 1 - i;
        let m = 0.5 * (weights[i] + weights[j]);
        weights[i] = m;
        weights[j] = m;
    }
    Ok(weights)
}
