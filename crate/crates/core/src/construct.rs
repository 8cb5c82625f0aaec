//! Design constructors: the `⋆` lifting, tight polygon designs, lattice shells
//! and the tight lattice-shell designs in ℝ³ and ℝ⁴.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::design::{WeightedPointSet, GROUP_TOL};
use crate::error::{invalid, Result};
use crate::exact::ratio_to_f64;
use crate::interval::{build_interval_design, IntervalDesign};

/// `y ⋆ c = (√(1-c²) y, c ‖y‖)`. Preserves the norm of `y`.
pub fn star_lift_point(y: &[f64], c: f64) -> Vec<f64> {
    let s = (1.0 - c * c).max(0.0).sqrt();
    let r = y.iter().map(|v| v * v).sum::<f64>().sqrt();
    let mut out: Vec<f64> = y.iter().map(|v| s * v).collect();
    out.push(c * r);
    out
}

/// One lifting step `ℝ^{n-1} → ℝⁿ` at strength `t`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiftPlan {
    pub source_dim: usize,
    pub target_dim: usize,
    pub t: usize,
    pub interval: IntervalDesign,
}

impl LiftPlan {
    /// Builds the interval design for the target dimension at exactly strength `t`.
    pub fn new(source_dim: usize, t: usize) -> Result<Self> {
        let target_dim = source_dim + 1;
        if target_dim < 3 {
            return Err(invalid(format!("lifting needs a target dimension >= 3, got {target_dim}")));
        }
        Ok(LiftPlan { source_dim, target_dim, t, interval: build_interval_design(target_dim, t)? })
    }

    /// `(X ⋆ C, w ⋆ γ)`. Does not check that `src` is a design.
    pub fn apply(&self, src: &WeightedPointSet) -> Result<WeightedPointSet> {
        if src.dim() != self.source_dim {
            return Err(invalid(format!(
                "lift plan expects points in dimension {}, got {}",
                self.source_dim,
                src.dim()
            )));
        }
        let s = self.interval.nodes.len();
        let mut points = Vec::with_capacity(src.len() * s);
        let mut weights = Vec::with_capacity(src.len() * s);
        for (y, w) in src.points().iter().zip(src.weights()) {
            for (c, g) in self.interval.nodes.iter().zip(&self.interval.weights) {
                points.push(star_lift_point(y, *c));
                weights.push(w * g);
            }
        }
        WeightedPointSet::new(self.target_dim, points, weights)
    }
}

/// Lifts a Euclidean `t`-design in `ℝ^{n-1}` to one in `ℝⁿ`.
///
/// `src` must be a `t`-design; this is asserted in debug builds only.
pub fn lift_design(src: &WeightedPointSet, t: usize) -> Result<WeightedPointSet> {
    debug_assert!(
        crate::design::verify_euclidean_design_to(src, t, t, crate::design::VERIFY_TOL).pass,
        "lift_design source is not a {t}-design"
    );
    LiftPlan::new(src.dim(), t)?.apply(src)
}

/// Lifts without the debug-build design check. Layer radii and masses are still preserved.
pub fn lift_unchecked(src: &WeightedPointSet, t: usize) -> Result<WeightedPointSet> {
    LiftPlan::new(src.dim(), t)?.apply(src)
}

/// Repeated [`lift_design`] until the points live in `ℝ^target`.
pub fn lift_to_dimension(src: &WeightedPointSet, target: usize, t: usize) -> Result<WeightedPointSet> {
    if target < src.dim() {
        return Err(invalid(format!("cannot lift from dimension {} down to {target}", src.dim())));
    }
    let mut cur = src.clone();
    while cur.dim() < target {
        cur = lift_design(&cur, t)?;
    }
    Ok(cur)
}

/// Angular offset of layer `k` in a polygon design.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LayerOffset {
    /// Layer `k` is rotated by `kπ/m`.
    HalfStep,
    /// All layers share the angles `2jπ/m`. Only useful as a negative control.
    None,
}

/// Largest admissible number of circles for a tight planar `t`-design.
pub fn max_polygon_layers(t: usize) -> usize {
    (t + 5) / 4
}

fn sorted_radii(radii: &[f64]) -> Result<Vec<f64>> {
    let mut r = radii.to_vec();
    if r.iter().any(|v| !(v.is_finite() && *v > 0.0)) {
        return Err(invalid("radii must be positive and finite"));
    }
    r.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if r.windows(2).any(|w| w[1] - w[0] <= GROUP_TOL * w[1]) {
        return Err(invalid("radii must be distinct"));
    }
    Ok(r)
}

/// Per-circle weights of the tight polygon design, radii ascending.
pub fn polygon_layer_weights(t: usize, radii: &[f64]) -> Result<Vec<f64>> {
    let p = radii.len();
    if t < 1 || p < 1 || p > max_polygon_layers(t) {
        return Err(invalid(format!("need 1 <= p <= {} for t = {t}, got p = {p}", max_polygon_layers(t))));
    }
    let r = sorted_radii(radii)?;
    let m = (t + 3 - 2 * p) as i32;
    let r1 = r[0] * r[0];
    let mut w = vec![r[0].powi(-m)];
    for k in 1..p {
        let rk = r[k] * r[k];
        let mut prod = 1.0;
        for (l, rl) in r.iter().enumerate().skip(1) {
            if l != k {
                let rl = rl * rl;
                prod *= (r1 - rl) / (rk - rl);
            }
        }
        // 1-based layer index is k + 1, sign (-1)^{k+1}
        let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
        w.push(sign * r[k].powi(-m) * prod);
    }
    Ok(w)
}

/// Tight Euclidean `t`-design in the plane supported on `p = radii.len()` circles.
///
/// Radii are sorted ascending; the smallest carries weight `r₁^{-m}`, `m = t + 3 - 2p`.
pub fn tight_polygon_design(t: usize, radii: &[f64]) -> Result<WeightedPointSet> {
    polygon_design(t, radii, LayerOffset::HalfStep)
}

/// Polygon design with a selectable layer offset.
pub fn polygon_design(t: usize, radii: &[f64], offset: LayerOffset) -> Result<WeightedPointSet> {
    let layer_w = polygon_layer_weights(t, radii)?;
    let r = sorted_radii(radii)?;
    let m = t + 3 - 2 * r.len();
    let mut points = Vec::with_capacity(m * r.len());
    let mut weights = Vec::with_capacity(m * r.len());
    for (k0, (rk, wk)) in r.iter().zip(&layer_w).enumerate() {
        let k = k0 + 1;
        for j in 1..=m {
            let step = match offset {
                LayerOffset::HalfStep => (2 * j + k) % (2 * m),
                LayerOffset::None => (2 * j) % (2 * m),
            };
            let a = step as f64 * PI / m as f64;
            points.push(vec![rk * a.cos(), rk * a.sin()]);
            weights.push(*wk);
        }
    }
    WeightedPointSet::new(2, points, weights)
}

/// All vectors of `{-1, 0, 1}ⁿ` with exactly `k` nonzero entries, in lexicographic order.
pub fn lattice_shell(n: usize, k: usize) -> Result<Vec<Vec<f64>>> {
    if k < 1 || k > n {
        return Err(invalid(format!("shell index must satisfy 1 <= k <= n (k={k}, n={n})")));
    }
    let mut out = Vec::new();
    let mut cur = vec![0i8; n];
    fn rec(i: usize, left: usize, cur: &mut Vec<i8>, out: &mut Vec<Vec<f64>>) {
        let n = cur.len();
        if i == n {
            if left == 0 {
                out.push(cur.iter().map(|&v| v as f64).collect());
            }
            return;
        }
        if n - i < left {
            return;
        }
        for v in [-1i8, 0, 1] {
            if v != 0 && left == 0 {
                continue;
            }
            cur[i] = v;
            rec(i + 1, left - (v != 0) as usize, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, k, &mut cur, &mut out);
    Ok(out)
}

/// The three tight lattice-shell designs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FgCase {
    /// 5-design in ℝ³ on shells 1 and 3, 14 points.
    D3T5,
    /// 7-design in ℝ³ on shells 1, 2 and 3, 26 points.
    D3T7,
    /// 7-design in ℝ⁴ on shells 1, 2 and 4, 48 points.
    D4T7,
}

impl FgCase {
    pub fn dim(&self) -> usize {
        match self {
            FgCase::D3T5 | FgCase::D3T7 => 3,
            FgCase::D4T7 => 4,
        }
    }

    pub fn strength(&self) -> usize {
        match self {
            FgCase::D3T5 => 5,
            FgCase::D3T7 | FgCase::D4T7 => 7,
        }
    }

    pub fn shells(&self) -> &'static [usize] {
        match self {
            FgCase::D3T5 => &[1, 3],
            FgCase::D3T7 => &[1, 2, 3],
            FgCase::D4T7 => &[1, 2, 4],
        }
    }

    pub fn size(&self) -> usize {
        match self {
            FgCase::D3T5 => 14,
            FgCase::D3T7 => 26,
            FgCase::D4T7 => 48,
        }
    }
}

impl std::str::FromStr for FgCase {
    type Err = crate::error::DesignError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d3t5" => Ok(FgCase::D3T5),
            "d3t7" => Ok(FgCase::D3T7),
            "d4t7" => Ok(FgCase::D4T7),
            _ => Err(invalid(format!("unknown case {s:?} (expected d3t5, d3t7 or d4t7)"))),
        }
    }
}

/// Exact squared radii and shell weights for one case, aligned with [`FgCase::shells`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FgParameters {
    pub case: FgCase,
    pub radius_squared: Vec<BigRational>,
    pub weights: Vec<BigRational>,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shell radii (squared) and weights for a rational shape parameter `λ`.
pub fn fg_parameters_exact(case: FgCase, lambda: &BigRational) -> Result<FgParameters> {
    if !lambda.is_positive() || lambda.is_one() {
        return Err(invalid(format!("shape parameter must be positive and != 1, got {lambda}")));
    }
    let one = BigRational::one();
    let l2 = lambda * lambda;
    let (radius_squared, weights) = match case {
        FgCase::D3T5 => (vec![one.clone(), l2.clone()], vec![one, q(9, 8) / (&l2 * &l2)]),
        FgCase::D3T7 => {
            let a = lambda * q(2, 1) + q(3, 1);
            let a3 = &a * &a * &a;
            (
                vec![one.clone(), &a / (lambda * q(5, 1)), &a / q(5, 1)],
                vec![one, q(100, 1) * &l2 * lambda / &a3, q(675, 8) / a3],
            )
        }
        FgCase::D4T7 => (
            vec![one.clone(), l2.clone(), one.clone()],
            vec![one.clone(), one.clone() / (&l2 * &l2 * &l2), one],
        ),
    };
    Ok(FgParameters { case, radius_squared, weights })
}

/// Builds the design `∪ r(k)/√k · Iⁿ_k` with shell weights from [`fg_parameters_exact`].
pub fn fg_design(case: FgCase, lambda: f64) -> Result<WeightedPointSet> {
    if !lambda.is_finite() {
        return Err(invalid("shape parameter must be finite"));
    }
    let exact = BigRational::from_float(lambda).ok_or_else(|| invalid("shape parameter must be finite"))?;
    let params = fg_parameters_exact(case, &exact)?;
    let n = case.dim();
    let mut points = Vec::with_capacity(case.size());
    let mut weights = Vec::with_capacity(case.size());
    for ((&k, r2), w) in case.shells().iter().zip(&params.radius_squared).zip(&params.weights) {
        // radius r(k)/√k, so each coordinate scales by √(r²/k)
        let scale = (ratio_to_f64(r2) / k as f64).sqrt();
        let w = ratio_to_f64(w);
        for p in lattice_shell(n, k)? {
            points.push(p.iter().map(|c| c * scale).collect());
            weights.push(w);
        }
    }
    WeightedPointSet::new(n, points, weights)
}

/// Largest absolute deviation of `Σ_{k≥2} r_k^{2s₁} Π_{l≠k} (r₁²-r_l²)/(r_k²-r_l²)` from `r₁^{2s₁}`,
/// relative to `r₁^{2s₁}`, over `s₁ = 0..p-2`.
pub fn vandermonde_defect(radii: &[f64]) -> f64 {
    let r: Vec<f64> = radii.iter().map(|v| v * v).collect();
    let p = r.len();
    let mut worst: f64 = 0.0;
    for s1 in 0..p.saturating_sub(1) {
        let mut sum = 0.0;
        for k in 1..p {
            let mut prod = 1.0;
            for l in 1..p {
                if l != k {
                    prod *= (r[0] - r[l]) / (r[k] - r[l]);
                }
            }
            sum += r[k].powi(s1 as i32) * prod;
        }
        let target = r[0].powi(s1 as i32);
        worst = worst.max((sum - target).abs() / target);
    }
    worst
}
