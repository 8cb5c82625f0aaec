//! Weighted point sets, norm layers, the moment verifier and Fisher-type bounds.
//!
//! A weighted set `(X, w)` in `ℝⁿ` is a Euclidean `t`-design when, for every
//! monomial `f` of degree at most `t`,
//!
//! ```text
//! Σ_r W_r · avg_{S_r}(f) = Σ_x w(x) f(x)
//! ```
//!
//! where `W_r` is the total weight on the sphere of radius `r`. The left side
//! is evaluated from exact rational sphere averages; only the right side
//! carries floating point error.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, DesignError, Result};
use crate::exact::sphere_monomial_average;
use crate::poly::{eval_monomial, monomials_of_degree, neumaier_sum};

/// Relative tolerance used to group point norms into layers.
pub const GROUP_TOL: f64 = 1e-9;
/// Relative tolerance of the design verifiers.
pub const VERIFY_TOL: f64 = 1e-9;
/// How many degrees past the requested strength a report probes.
pub const PROBE_EXTRA: usize = 2;

/// A finite set of non-zero points in `ℝⁿ` with strictly positive weights.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightedPointSet {
    dim: usize,
    points: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

impl WeightedPointSet {
    /// Validates and builds a weighted set.
    ///
    /// The origin is rejected: layers are spheres of positive radius, so a
    /// point at `0` has no layer to belong to.
    pub fn new(dim: usize, points: Vec<Vec<f64>>, weights: Vec<f64>) -> Result<Self> {
        if dim < 2 {
            return Err(invalid(format!("point sets live in ℝⁿ with n >= 2, got n = {dim}")));
        }
        if points.is_empty() {
            return Err(DesignError::Empty);
        }
        if points.len() != weights.len() {
            return Err(invalid(format!(
                "{} points but {} weights",
                points.len(),
                weights.len()
            )));
        }
        for (index, (p, &w)) in points.iter().zip(&weights).enumerate() {
            if p.len() != dim {
                return Err(DesignError::DimensionMismatch { index, expected: dim, found: p.len() });
            }
            if p.iter().any(|c| !c.is_finite()) {
                return Err(DesignError::NonFinite("point coordinates"));
            }
            if p.iter().all(|&c| c == 0.0) {
                return Err(DesignError::OriginPoint { index });
            }
            if !(w > 0.0) || !w.is_finite() {
                return Err(DesignError::NonPositiveWeight { index, weight: w });
            }
        }
        Ok(WeightedPointSet { dim, points, weights })
    }

    /// All points with weight one.
    pub fn unweighted(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        let w = vec![1.0; points.len()];
        Self::new(dim, points, w)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn total_weight(&self) -> f64 {
        neumaier_sum(self.weights.iter().copied())
    }

    pub fn norms(&self) -> Vec<f64> {
        self.points.iter().map(|p| norm(p)).collect()
    }

    /// Replaces one weight; used for perturbation experiments.
    pub fn with_weight(&self, index: usize, weight: f64) -> Result<Self> {
        let mut w = self.weights.clone();
        *w.get_mut(index).ok_or_else(|| invalid("weight index out of range"))? = weight;
        Self::new(self.dim, self.points.clone(), w)
    }

    /// Applies a linear map given row-major as `dim × dim`.
    pub fn transformed(&self, matrix: &[Vec<f64>]) -> Result<Self> {
        if matrix.len() != self.dim || matrix.iter().any(|r| r.len() != self.dim) {
            return Err(invalid("transform must be a dim × dim matrix"));
        }
        let points = self
            .points
            .iter()
            .map(|p| matrix.iter().map(|row| row.iter().zip(p).map(|(a, b)| a * b).sum()).collect())
            .collect();
        Self::new(self.dim, points, self.weights.clone())
    }
}

pub(crate) fn norm(p: &[f64]) -> f64 {
    p.iter().map(|c| c * c).sum::<f64>().sqrt()
}

/// A weighted set split into concentric layers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LayeredDesign {
    pub base: WeightedPointSet,
    /// Distinct layer radii, ascending.
    pub radii: Vec<f64>,
    /// Layer index of every point.
    pub layer_of: Vec<usize>,
    /// Total weight `W_r` of every layer.
    pub layer_mass: Vec<f64>,
}

impl LayeredDesign {
    pub fn num_layers(&self) -> usize {
        self.radii.len()
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.radii.len()];
        for &l in &self.layer_of {
            sizes[l] += 1;
        }
        sizes
    }

    /// Indices of the points on layer `l`.
    pub fn layer_points(&self, l: usize) -> Vec<usize> {
        (0..self.layer_of.len()).filter(|&i| self.layer_of[i] == l).collect()
    }
}

/// Groups point norms that agree within `group_tol` (relative) into layers.
pub fn layer_decompose(x: &WeightedPointSet, group_tol: f64) -> Result<LayeredDesign> {
    if x.is_empty() {
        return Err(DesignError::Empty);
    }
    let norms = x.norms();
    let mut order: Vec<usize> = (0..norms.len()).collect();
    order.sort_by(|&a, &b| norms[a].total_cmp(&norms[b]));
    let mut layer_of = vec![0; norms.len()];
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut first = f64::NAN;
    for &i in &order {
        let r = norms[i];
        if r == 0.0 {
            return Err(DesignError::OriginPoint { index: i });
        }
        if groups.is_empty() || r - first > group_tol * first {
            groups.push(Vec::new());
            first = r;
        }
        groups.last_mut().unwrap().push(i);
    }
    let mut radii = Vec::with_capacity(groups.len());
    let mut layer_mass = Vec::with_capacity(groups.len());
    for (l, g) in groups.iter().enumerate() {
        radii.push(g.iter().map(|&i| norms[i]).sum::<f64>() / g.len() as f64);
        layer_mass.push(neumaier_sum(g.iter().map(|&i| x.weights[i])));
        for &i in g {
            layer_of[i] = l;
        }
    }
    Ok(LayeredDesign { base: x.clone(), radii, layer_of, layer_mass })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerificationMethod {
    Moments,
    Harmonic,
}

impl fmt::Display for VerificationMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerificationMethod::Moments => write!(f, "moments"),
            VerificationMethod::Harmonic => write!(f, "harmonic"),
        }
    }
}

/// Worst residual among all test functions of one total degree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeResidual {
    pub degree: usize,
    /// Label of the worst test function (monomial exponents or harmonic index).
    pub term: String,
    pub residual: f64,
    pub scale: f64,
    /// Number of test functions checked at this degree.
    pub checked: usize,
    /// Number of test functions exceeding the tolerance.
    pub failures: usize,
}

impl DegreeResidual {
    pub fn relative(&self) -> f64 {
        self.residual / self.scale
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DesignReport {
    pub method: VerificationMethod,
    pub requested_strength: usize,
    /// Largest `t'` up to the probe limit for which every degree `≤ t'` passes.
    pub verified_strength: usize,
    pub pass: bool,
    pub tolerance: f64,
    pub residuals: Vec<DegreeResidual>,
    pub antipodal: bool,
    pub tight: Option<bool>,
}

impl DesignReport {
    pub(crate) fn assemble(
        method: VerificationMethod,
        t: usize,
        tol: f64,
        residuals: Vec<DegreeResidual>,
        antipodal: bool,
    ) -> Self {
        let mut verified = 0;
        for r in &residuals {
            if r.failures > 0 {
                break;
            }
            verified = r.degree;
        }
        let pass = residuals.iter().filter(|r| r.degree <= t).all(|r| r.failures == 0);
        DesignReport {
            method,
            requested_strength: t,
            verified_strength: verified,
            pass,
            tolerance: tol,
            residuals,
            antipodal,
            tight: None,
        }
    }

    /// Whether every degree `≤ t` passed (only meaningful up to the probe limit).
    pub fn passes_at(&self, t: usize) -> bool {
        let probed = self.residuals.iter().map(|r| r.degree).max().unwrap_or(0);
        t <= probed
            && self
                .residuals
                .iter()
                .filter(|r| r.degree <= t)
                .all(|r| r.failures == 0)
    }

    pub fn max_relative_residual(&self, up_to: usize) -> f64 {
        self.residuals
            .iter()
            .filter(|r| r.degree <= up_to)
            .map(DegreeResidual::relative)
            .fold(0.0, f64::max)
    }
}

fn unit_average(exponents: &[u32]) -> f64 {
    static CACHE: OnceLock<Mutex<HashMap<Vec<u32>, f64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(exponents) {
        return v;
    }
    let v = sphere_monomial_average(exponents.len(), exponents)
        .expect("dimension validated by WeightedPointSet")
        .at_radius(1.0);
    cache.lock().unwrap().insert(exponents.to_vec(), v);
    v
}

fn monomial_label(e: &[u32]) -> String {
    let parts: Vec<String> = e.iter().map(u32::to_string).collect();
    format!("x^({})", parts.join(","))
}

/// Checks the defining moment identity for every monomial of degree `≤ t + PROBE_EXTRA`.
///
/// A monomial passes when `|LHS - RHS| ≤ tol · max(1, |LHS|, Σ w ‖x‖^deg)`.
pub fn verify_euclidean_design(x: &WeightedPointSet, t: usize, tol: f64) -> DesignReport {
    verify_euclidean_design_to(x, t, t + PROBE_EXTRA, tol)
}

/// As [`verify_euclidean_design`] with an explicit probe limit (`probe ≥ t`).
pub fn verify_euclidean_design_to(x: &WeightedPointSet, t: usize, probe: usize, tol: f64) -> DesignReport {
    let probe = probe.max(t);
    let layers = layer_decompose(x, GROUP_TOL).expect("valid point set");
    let n = x.dim();
    let mut residuals = Vec::with_capacity(probe + 1);
    for d in 0..=probe {
        let layer_sum = neumaier_sum(
            layers.radii.iter().zip(&layers.layer_mass).map(|(r, w)| w * r.powi(d as i32)),
        );
        let absolute = neumaier_sum(
            x.points.iter().zip(&x.weights).map(|(p, w)| w * norm(p).powi(d as i32)),
        );
        let monomials = monomials_of_degree(n, d as u32);
        let rows: Vec<(f64, f64)> = monomials
            .par_iter()
            .map(|e| {
                let lhs = unit_average(e) * layer_sum;
                let rhs = neumaier_sum(x.points.iter().zip(&x.weights).map(|(p, w)| w * eval_monomial(p, e)));
                let scale = 1f64.max(lhs.abs()).max(absolute);
                ((lhs - rhs).abs(), scale)
            })
            .collect();
        let mut worst = 0;
        let mut failures = 0;
        for (i, &(res, scale)) in rows.iter().enumerate() {
            if res > tol * scale {
                failures += 1;
            }
            if res / scale > rows[worst].0 / rows[worst].1 {
                worst = i;
            }
        }
        residuals.push(DegreeResidual {
            degree: d,
            term: monomial_label(&monomials[worst]),
            residual: rows[worst].0,
            scale: rows[worst].1,
            checked: rows.len(),
            failures,
        });
    }
    DesignReport::assemble(
        VerificationMethod::Moments,
        t,
        tol,
        residuals,
        is_antipodal(x, GROUP_TOL),
    )
}

/// Whether `(X, w)` is fixed by `x ↦ -x` (points and weights within relative `tol`).
pub fn is_antipodal(x: &WeightedPointSet, tol: f64) -> bool {
    let norms = x.norms();
    let mut used = vec![false; x.len()];
    'outer: for i in 0..x.len() {
        let p = &x.points[i];
        for j in 0..x.len() {
            if used[j] {
                continue;
            }
            let q = &x.points[j];
            let dist = p.iter().zip(q).map(|(a, b)| (a + b) * (a + b)).sum::<f64>().sqrt();
            if dist <= tol * norms[i] && (x.weights[i] - x.weights[j]).abs() <= tol * x.weights[i] {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Exact binomial coefficient with `C(a, k) = 0` for `a < k` (including negative `a`).
pub fn binomial(a: i64, k: i64) -> Result<u64> {
    if k < 0 || a < k {
        return Ok(0);
    }
    let k = k.min(a - k) as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((a as u128) - i)
            .ok_or(DesignError::Overflow("binomial coefficient"))?
            / (i + 1);
    }
    u64::try_from(acc).map_err(|_| DesignError::Overflow("binomial coefficient"))
}

/// `dim Hom_s(ℝⁿ) = C(s+n-1, n-1)`, and 0 for negative `s`.
pub fn dim_hom(n: usize, s: i64) -> Result<u64> {
    if s < 0 {
        return Ok(0);
    }
    binomial(s + n as i64 - 1, n as i64 - 1)
}

/// Lower bound on the size of a Euclidean `t`-design on `p` spheres in `ℝⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FisherBound {
    pub n: usize,
    pub p: usize,
    pub t: usize,
    pub per_k: Vec<u64>,
    #[serde(rename = "N")]
    pub total: u64,
    /// For odd `t` the bound only holds for antipodal designs.
    pub antipodality_required: bool,
}

/// `N(n,p,t) = Σ_{k=1..p} d(⌊t/2⌋+2-2k) + d(⌊(t-1)/2⌋+2-2k)`.
pub fn fisher_bound(n: usize, p: usize, t: usize) -> Result<FisherBound> {
    if n < 2 || p < 1 {
        return Err(invalid(format!("fisher_bound needs n >= 2 and p >= 1 (n={n}, p={p})")));
    }
    let t_i = t as i64;
    let half = t_i.div_euclid(2);
    let half_minus = (t_i - 1).div_euclid(2);
    let mut per_k = Vec::with_capacity(p);
    for k in 1..=p as i64 {
        let a = dim_hom(n, half + 2 - 2 * k)?;
        let b = dim_hom(n, half_minus + 2 - 2 * k)?;
        per_k.push(a.checked_add(b).ok_or(DesignError::Overflow("fisher bound"))?);
    }
    let total = per_k
        .iter()
        .try_fold(0u64, |acc, &v| acc.checked_add(v))
        .ok_or(DesignError::Overflow("fisher bound"))?;
    Ok(FisherBound { n, p, t, per_k, total, antipodality_required: t % 2 == 1 })
}

/// Closed form `C(t/2+n, n) - C(t/2-2p+n, n)`, valid for even `t`.
pub fn fisher_bound_even_closed_form(n: usize, p: usize, t: usize) -> Result<u64> {
    if t % 2 == 1 {
        return Err(invalid("closed form only holds for even t"));
    }
    let h = (t / 2) as i64;
    let n_i = n as i64;
    Ok(binomial(h + n_i, n_i)? - binomial(h - 2 * p as i64 + n_i, n_i)?)
}

/// Tightness verdict: the design meets `N(n, |R|, t)` exactly.
///
/// Refuses (returns an error) when the report does not certify strength `t`,
/// or when `t` is odd and the design is not antipodal, since the bound is
/// not established there.
pub fn is_tight(ld: &LayeredDesign, t: usize, report: &DesignReport) -> Result<bool> {
    if report.requested_strength < t || !report.passes_at(t) {
        return Err(DesignError::TightnessUndefined(format!(
            "design is not verified at strength {t}"
        )));
    }
    if t % 2 == 1 && !report.antipodal {
        return Err(DesignError::TightnessUndefined(format!(
            "strength {t} is odd and the design is not antipodal"
        )));
    }
    let bound = fisher_bound(ld.base.dim(), ld.num_layers(), t)?;
    Ok(ld.base.len() as u64 == bound.total)
}

/// Runs the moment verifier and fills in the tightness verdict where one is defined.
pub fn verify_and_certify(x: &WeightedPointSet, t: usize, tol: f64) -> DesignReport {
    let mut report = verify_euclidean_design(x, t, tol);
    if report.pass {
        if let Ok(ld) = layer_decompose(x, GROUP_TOL) {
            report.tight = is_tight(&ld, t, &report).ok();
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn polygon(m: usize, r: f64) -> Vec<Vec<f64>> {
        (0..m)
            .map(|j| {
                let a = 2.0 * PI * j as f64 / m as f64;
                vec![r * a.cos(), r * a.sin()]
            })
            .collect()
    }

    fn hexagon() -> WeightedPointSet {
        WeightedPointSet::unweighted(2, polygon(6, 1.0)).unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            WeightedPointSet::unweighted(2, vec![vec![1.0, 0.0], vec![0.0, 0.0]]),
            Err(DesignError::OriginPoint { index: 1 })
        );
        assert!(matches!(
            WeightedPointSet::new(2, vec![vec![1.0, 0.0]], vec![0.0]),
            Err(DesignError::NonPositiveWeight { .. })
        ));
        assert!(matches!(
            WeightedPointSet::new(2, vec![vec![1.0, 0.0, 1.0]], vec![1.0]),
            Err(DesignError::DimensionMismatch { .. })
        ));
        assert_eq!(WeightedPointSet::unweighted(2, vec![]), Err(DesignError::Empty));
        assert!(WeightedPointSet::unweighted(1, vec![vec![1.0]]).is_err());
    }

    #[test]
    fn layers_of_two_shells() {
        let mut pts = Vec::new();
        for i in 0..3 {
            for s in [-1.0, 1.0] {
                let mut p = vec![0.0; 3];
                p[i] = s;
                pts.push(p);
            }
        }
        for a in [-1.0, 1.0] {
            for b in [-1.0, 1.0] {
                for c in [-1.0, 1.0] {
                    let k = 2.0 / 3f64.sqrt();
                    pts.push(vec![a * k, b * k, c * k]);
                }
            }
        }
        let x = WeightedPointSet::unweighted(3, pts).unwrap();
        let ld = layer_decompose(&x, GROUP_TOL).unwrap();
        assert_eq!(ld.num_layers(), 2);
        assert!((ld.radii[0] - 1.0).abs() < 1e-15 && (ld.radii[1] - 2.0).abs() < 1e-15);
        assert_eq!(ld.layer_sizes(), vec![6, 8]);
    }

    #[test]
    fn hexagon_layer_mass() {
        let ld = layer_decompose(&hexagon(), GROUP_TOL).unwrap();
        assert_eq!(ld.layer_mass, vec![6.0]);
    }

    #[test]
    fn nearly_equal_norms_share_a_layer() {
        let x = WeightedPointSet::unweighted(2, vec![vec![1.0, 0.0], vec![0.0, 1.0 + 1e-15]]).unwrap();
        assert_eq!(layer_decompose(&x, 1e-9).unwrap().num_layers(), 1);
    }

    #[test]
    fn hexagon_is_a_five_design() {
        let rep = verify_euclidean_design(&hexagon(), 5, VERIFY_TOL);
        assert!(rep.pass);
        assert_eq!(rep.verified_strength, 5);
        assert!(rep.antipodal);
    }

    #[test]
    fn single_point_only_zero_design() {
        let x = WeightedPointSet::unweighted(3, vec![vec![0.3, 0.4, 1.2]]).unwrap();
        assert!(verify_euclidean_design(&x, 0, VERIFY_TOL).pass);
        assert!(!verify_euclidean_design(&x, 1, VERIFY_TOL).pass);
    }

    #[test]
    fn antipodal_pair_is_one_design() {
        let x = WeightedPointSet::unweighted(3, vec![vec![0.3, 0.4, 1.2], vec![-0.3, -0.4, -1.2]]).unwrap();
        let rep = verify_euclidean_design(&x, 1, VERIFY_TOL);
        assert!(rep.pass);
        let ld = layer_decompose(&x, GROUP_TOL).unwrap();
        assert_eq!(is_tight(&ld, 1, &rep), Ok(true));
    }

    #[test]
    fn fisher_bound_examples() {
        assert_eq!(fisher_bound(3, 2, 5).unwrap().total, 14);
        assert_eq!(fisher_bound(4, 2, 7).unwrap().total, 48);
        assert_eq!(fisher_bound(2, 2, 4).unwrap().total, 6);
        assert_eq!(fisher_bound(3, 3, 7).unwrap().total, 26);
        for n in 2..6 {
            assert_eq!(fisher_bound(n, 3, 0).unwrap().total, 1);
        }
        assert!(fisher_bound(1, 1, 3).is_err());
        assert!(fisher_bound(3, 0, 3).is_err());
    }

    #[test]
    fn fisher_even_closed_form() {
        for n in 2..6 {
            for p in 1..5 {
                for t in (0..16).step_by(2) {
                    assert_eq!(
                        fisher_bound(n, p, t).unwrap().total,
                        fisher_bound_even_closed_form(n, p, t).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn dim_hom_examples() {
        for s in 0..10 {
            assert_eq!(dim_hom(2, s).unwrap(), s as u64 + 1);
        }
        assert_eq!(dim_hom(3, 2).unwrap(), 6);
        assert_eq!(dim_hom(5, -1).unwrap(), 0);
    }

    #[test]
    fn tightness_of_hexagon() {
        let x = hexagon();
        let ld = layer_decompose(&x, GROUP_TOL).unwrap();
        let rep5 = verify_euclidean_design(&x, 5, VERIFY_TOL);
        assert_eq!(is_tight(&ld, 5, &rep5), Ok(true));
        let rep3 = verify_euclidean_design(&x, 3, VERIFY_TOL);
        assert_eq!(is_tight(&ld, 3, &rep3), Ok(false));
        assert_eq!(fisher_bound(2, 1, 3).unwrap().total, 4);
    }

    #[test]
    fn tightness_refused_for_odd_non_antipodal() {
        // equilateral triangle: a 2-design, not antipodal
        let x = WeightedPointSet::unweighted(2, polygon(3, 1.0)).unwrap();
        let ld = layer_decompose(&x, GROUP_TOL).unwrap();
        let rep = verify_euclidean_design(&x, 1, VERIFY_TOL);
        assert!(rep.pass);
        assert!(matches!(is_tight(&ld, 1, &rep), Err(DesignError::TightnessUndefined(_))));
        let rep2 = verify_euclidean_design(&x, 2, VERIFY_TOL);
        assert_eq!(is_tight(&ld, 2, &rep2), Ok(true));
        let rep3 = verify_euclidean_design(&x, 3, VERIFY_TOL);
        assert!(is_tight(&ld, 3, &rep3).is_err());
    }

    #[test]
    fn antipodality_examples() {
        let square = WeightedPointSet::unweighted(
            2,
            vec![vec![1.0, 0.0], vec![-1.0, 0.0], vec![0.0, 1.0], vec![0.0, -1.0]],
        )
        .unwrap();
        assert!(is_antipodal(&square, 1e-12));
        let tri = WeightedPointSet::unweighted(2, polygon(3, 1.0)).unwrap();
        assert!(!is_antipodal(&tri, 1e-12));
        let uneven = square.with_weight(0, 2.0).unwrap();
        assert!(!is_antipodal(&uneven, 1e-12));
    }

    #[test]
    fn passing_report_passes_lower_strengths() {
        let rep = verify_euclidean_design(&hexagon(), 5, VERIFY_TOL);
        for t in 0..=5 {
            assert!(rep.passes_at(t));
        }
        assert!(!rep.passes_at(6));
    }
}
