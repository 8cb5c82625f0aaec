//! Harmonic polynomial bases and the harmonic design criterion.
//!
//! `(X, w)` is a Euclidean `t`-design iff `Σ w(x) ‖x‖^{2s₁} f(x) = 0` for all
//! `2s₁ + s ≤ t`, `s ≥ 1` and `f ∈ Harm_s(ℝⁿ)`. This gives a verifier that is
//! independent of the moment verifier in [`crate::design`].
//!
//! The basis `Φ_s^n` is built from products of homogenised Gegenbauer
//! polynomials
//!
//! ```text
//! g_k = r_k^{m_k - m_{k+1}} C_{m_k - m_{k+1}}^{λ_k}(x_{k+1} / r_k),
//! λ_k = m_{k+1} + (n - k - 2)/2,   r_k² = x_{k+1}² + … + x_n²
//! ```
//!
//! and `h_μ = Re/Im (x_{n-1} + i x_n)^{m_{n-2}}`. `λ_k` is the classical
//! Gegenbauer index; each element is gated by an exact Laplacian check.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::design::{
    binomial, is_antipodal, norm, DegreeResidual, DesignReport, LayeredDesign, VerificationMethod,
    WeightedPointSet, GROUP_TOL, PROBE_EXTRA,
};
use crate::error::{invalid, DesignError, Result};
use crate::poly::{neumaier_sum, FloatPoly, Poly};

/// Laplacian of an exact polynomial.
pub fn laplacian(p: &Poly) -> Poly {
    p.laplacian()
}

/// A homogeneous polynomial whose Laplacian vanishes exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarmonicPoly {
    degree: u32,
    poly: Poly,
}

impl HarmonicPoly {
    /// Checks homogeneity and `Δp = 0` in exact arithmetic.
    pub fn new(poly: Poly, degree: u32) -> Result<Self> {
        if !poly.is_homogeneous_of(degree) {
            return Err(DesignError::NotHarmonic(format!("{poly} is not homogeneous of degree {degree}")));
        }
        let lap = poly.laplacian();
        if !lap.is_zero() {
            return Err(DesignError::NotHarmonic(format!("Δ({poly}) = {lap}")));
        }
        Ok(HarmonicPoly { degree, poly })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.poly.dim()
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.poly.eval_f64(x)
    }
}

impl fmt::Display for HarmonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Index `(m_0 = s ≥ m_1 ≥ … ≥ m_{n-2} ≥ 0; μ)` of a basis element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PhiIndex {
    pub m: Vec<u32>,
    pub mu: u8,
}

impl PhiIndex {
    /// All `m_k` even and `μ = 1`: the element is fully even.
    pub fn is_fully_even(&self) -> bool {
        self.mu == 1 && self.m.iter().all(|m| m % 2 == 0)
    }
}

impl fmt::Display for PhiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(u32::to_string).collect();
        write!(f, "f[{};{}]", m.join(","), self.mu)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhiElement {
    pub index: PhiIndex,
    pub poly: HarmonicPoly,
}

/// The basis `Φ_s^n` of `Harm_s(ℝⁿ)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PhiBasis {
    pub n: usize,
    pub s: u32,
    pub elements: Vec<PhiElement>,
}

impl PhiBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `dim Harm_s(ℝⁿ) = C(n+s-1, n-1) - C(n+s-3, n-1)`.
pub fn harmonic_dimension(n: usize, s: u32) -> Result<u64> {
    let (n, s) = (n as i64, s as i64);
    Ok(binomial(n + s - 1, n - 1)? - binomial(n + s - 3, n - 1)?)
}

/// `dim FEvenHarm_s(ℝⁿ) = C(n + s/2 - 2, n - 2)` for even `s`.
pub fn fully_even_dimension(n: usize, s: u32) -> Result<u64> {
    if s % 2 == 1 {
        return Ok(0);
    }
    binomial(n as i64 + s as i64 / 2 - 2, n as i64 - 2)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `r^d C_d^λ(x_var / r)` with `r² = Σ_{l ≥ var} x_l²`, as a polynomial in `dim` variables.
fn homogenised_gegenbauer(dim: usize, var: usize, d: u32, lambda: &BigRational) -> Poly {
    let mut r2 = Poly::zero(dim);
    for l in var..dim {
        let mut e = vec![0; dim];
        e[l] = 2;
        r2.add_term(e, BigRational::one());
    }
    let mut out = Poly::zero(dim);
    let mut fact = vec![BigInt::one()];
    for i in 1..=d as usize {
        let next = &fact[i - 1] * BigInt::from(i);
        fact.push(next);
    }
    for j in 0..=d / 2 {
        // (λ)_{d-j} = λ (λ+1) … (λ+d-j-1)
        let mut poch = BigRational::one();
        for i in 0..(d - j) {
            poch *= lambda + BigRational::from_integer(BigInt::from(i));
        }
        let power = d - 2 * j;
        let mut c = poch * BigRational::from_integer(BigInt::from(2).pow(power))
            / BigRational::from_integer(&fact[j as usize] * &fact[power as usize]);
        if j % 2 == 1 {
            c = -c;
        }
        let mut e = vec![0; dim];
        e[var] = power;
        let term = Poly::monomial(dim, e, c);
        out = &out + &(&term * &r2.pow(j));
    }
    out
}

/// `Re (x_a + i x_b)^m` (`mu = 1`) or `Im (x_a + i x_b)^m` (`mu = 2`).
fn planar_harmonic(dim: usize, a: usize, b: usize, m: u32, mu: u8) -> Poly {
    let mut out = Poly::zero(dim);
    let mut binom = BigInt::one();
    for j in 0..=m {
        let real = j % 2 == 0;
        if real == (mu == 1) {
            // i^j contributes (-1)^{j/2} to the real part, (-1)^{(j-1)/2} to the imaginary part
            let sign = if (j / 2) % 2 == 0 { 1 } else { -1 };
            let mut e = vec![0; dim];
            e[a] = m - j;
            e[b] = j;
            out.add_term(e, BigRational::from_integer(&binom * BigInt::from(sign)));
        }
        binom = binom * BigInt::from(m - j) / BigInt::from(j + 1);
    }
    out
}

fn phi_indices(n: usize, s: u32) -> Vec<PhiIndex> {
    fn rec(n: usize, prefix: &mut Vec<u32>, out: &mut Vec<PhiIndex>) {
        if prefix.len() == n - 1 {
            let last = *prefix.last().unwrap();
            for mu in 1..=std::cmp::min(2, last + 1) as u8 {
                out.push(PhiIndex { m: prefix.clone(), mu });
            }
            return;
        }
        let upper = *prefix.last().unwrap();
        for next in (0..=upper).rev() {
            prefix.push(next);
            rec(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut vec![s], &mut out);
    out
}

/// Builds the element `f_{m_0,…,m_{n-2},μ}`, rejecting it if the Laplacian does not vanish.
pub fn phi_element(n: usize, index: &PhiIndex) -> Result<PhiElement> {
    build_element(n, index, |k| rat(n as i64 - k as i64 - 2, 2))
}

fn build_element(n: usize, index: &PhiIndex, offset: impl Fn(usize) -> BigRational) -> Result<PhiElement> {
    if index.m.len() != n - 1 {
        return Err(invalid(format!("index {index} needs {} entries", n - 1)));
    }
    let s = index.m[0];
    let mut p = Poly::one(n);
    for k in 0..n.saturating_sub(2) {
        let d = index.m[k] - index.m[k + 1];
        let lambda = BigRational::from_integer(BigInt::from(index.m[k + 1])) + offset(k);
        p = &p * &homogenised_gegenbauer(n, k, d, &lambda);
    }
    p = &p * &planar_harmonic(n, n - 2, n - 1, index.m[n - 2], index.mu);
    let poly = HarmonicPoly::new(p.primitive(), s)?;
    Ok(PhiElement { index: index.clone(), poly })
}

/// Builds `Φ_s^n`; every element is verified harmonic and homogeneous in exact arithmetic.
pub fn build_phi_basis(n: usize, s: u32) -> Result<PhiBasis> {
    if n < 2 {
        return Err(invalid(format!("harmonic bases need n >= 2, got {n}")));
    }
    let elements = phi_indices(n, s)
        .par_iter()
        .map(|idx| phi_element(n, idx))
        .collect::<Result<Vec<_>>>()?;
    Ok(PhiBasis { n, s, elements })
}

/// Same as [`build_phi_basis`], memoised per `(n, s)`.
pub fn phi_basis_cached(n: usize, s: u32) -> Result<Arc<PhiBasis>> {
    type Cache = Mutex<HashMap<(usize, u32), Arc<PhiBasis>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&(n, s)) {
        return Ok(b.clone());
    }
    let b = Arc::new(build_phi_basis(n, s)?);
    cache.lock().unwrap().insert((n, s), b.clone());
    Ok(b)
}

/// Builds an element reading the superscript as the Jacobi parameter `α = β`
/// rather than the Gegenbauer index, i.e. `λ = m_{k+1} + (n-k-2)/2 + 1/2`.
/// This reading fails the Laplacian gate for most indices.
pub fn phi_element_jacobi_reading(n: usize, index: &PhiIndex) -> Result<PhiElement> {
    build_element(n, index, |k| rat(n as i64 - k as i64 - 1, 2))
}

/// The fully even part of the basis: all `m_k` even and `μ = 1`.
pub fn feven_filter(b: &PhiBasis) -> PhiBasis {
    PhiBasis {
        n: b.n,
        s: b.s,
        elements: b.elements.iter().filter(|e| e.index.is_fully_even()).cloned().collect(),
    }
}

/// Named harmonic polynomials used by the fully symmetric checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpecialHarmonic {
    /// `x_i² - x_j²`
    F2,
    /// `x_i⁴ - 6x_i²x_j² + x_j⁴`
    F42,
    /// `x_i⁶ - 15x_i⁴x_j² + 15x_i²x_j⁴ - x_j⁶`
    F62,
    /// `2Σx⁶ - 15Σ x_a⁴x_b² + 180 x_i²x_j²x_k²` over three variables
    F63,
}

impl SpecialHarmonic {
    pub fn arity(&self) -> usize {
        match self {
            SpecialHarmonic::F63 => 3,
            _ => 2,
        }
    }

    pub fn degree(&self) -> u32 {
        match self {
            SpecialHarmonic::F2 => 2,
            SpecialHarmonic::F42 => 4,
            SpecialHarmonic::F62 | SpecialHarmonic::F63 => 6,
        }
    }

    fn local(&self) -> Poly {
        match self {
            SpecialHarmonic::F2 => Poly::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], -1)]),
            SpecialHarmonic::F42 => Poly::from_int_terms(2, &[(&[4, 0], 1), (&[2, 2], -6), (&[0, 4], 1)]),
            SpecialHarmonic::F62 => Poly::from_int_terms(
                2,
                &[(&[6, 0], 1), (&[4, 2], -15), (&[2, 4], 15), (&[0, 6], -1)],
            ),
            SpecialHarmonic::F63 => {
                let mut terms: Vec<(Vec<u32>, i64)> = Vec::new();
                for i in 0..3 {
                    let mut e = vec![0; 3];
                    e[i] = 6;
                    terms.push((e, 2));
                    for j in 0..3 {
                        if i != j {
                            let mut e = vec![0; 3];
                            e[i] = 4;
                            e[j] = 2;
                            terms.push((e, -15));
                        }
                    }
                }
                terms.push((vec![2, 2, 2], 180));
                let refs: Vec<(&[u32], i64)> = terms.iter().map(|(e, c)| (e.as_slice(), *c)).collect();
                Poly::from_int_terms(3, &refs)
            }
        }
    }
}

/// The named polynomial placed on the given (0-based, distinct) variables of `ℝⁿ`.
pub fn special_harmonics(n: usize, name: SpecialHarmonic, vars: &[usize]) -> Result<HarmonicPoly> {
    if vars.len() != name.arity() {
        return Err(invalid(format!("{name:?} takes {} variables, got {}", name.arity(), vars.len())));
    }
    if vars.iter().any(|&v| v >= n) {
        return Err(invalid(format!("variable index out of range for n = {n}")));
    }
    for (i, a) in vars.iter().enumerate() {
        if vars[i + 1..].contains(a) {
            return Err(invalid("variable indices must be distinct"));
        }
    }
    HarmonicPoly::new(name.local().embed(n, vars), name.degree())
}

struct EvaluatedBasis {
    labels: Vec<String>,
    l1: Vec<f64>,
    /// values[element][point]
    values: Vec<Vec<f64>>,
}

fn evaluate_basis(b: &PhiBasis, points: &[Vec<f64>]) -> EvaluatedBasis {
    let floats: Vec<FloatPoly> = b.elements.iter().map(|e| e.poly.poly().to_float()).collect();
    let values = floats
        .par_iter()
        .map(|f| points.iter().map(|p| f.eval(p)).collect())
        .collect();
    EvaluatedBasis {
        labels: b.elements.iter().map(|e| e.index.to_string()).collect(),
        l1: b.elements.iter().map(|e| e.poly.poly().coefficient_l1()).collect(),
        values,
    }
}

/// Harmonic criterion for every `2s₁ + s ≤ t + PROBE_EXTRA`.
///
/// A sum passes when `|Σ w ‖x‖^{2s₁} f(x)| ≤ tol · Σ w ‖x‖^{2s₁+s} · ‖f‖₁`, where
/// `‖f‖₁` is the sum of absolute coefficients (which bounds `|f(x)|/‖x‖^s`).
pub fn verify_design_harmonic(x: &WeightedPointSet, t: usize, tol: f64) -> Result<DesignReport> {
    verify_design_harmonic_to(x, t, t + PROBE_EXTRA, tol)
}

/// As [`verify_design_harmonic`] with an explicit probe limit.
pub fn verify_design_harmonic_to(x: &WeightedPointSet, t: usize, probe: usize, tol: f64) -> Result<DesignReport> {
    let probe = probe.max(t);
    let n = x.dim();
    let norms2: Vec<f64> = x.points().iter().map(|p| p.iter().map(|c| c * c).sum()).collect();
    let norms: Vec<f64> = x.points().iter().map(|p| norm(p)).collect();
    let bases = (1..=probe as u32)
        .map(|s| phi_basis_cached(n, s).map(|b| evaluate_basis(&b, x.points())))
        .collect::<Result<Vec<_>>>()?;
    let mut residuals = vec![DegreeResidual {
        degree: 0,
        term: "1".into(),
        residual: 0.0,
        scale: 1.0,
        checked: 0,
        failures: 0,
    }];
    for deg in 1..=probe {
        let mut worst: Option<(f64, f64, String)> = None;
        let mut checked = 0;
        let mut failures = 0;
        for s1 in 0..=deg / 2 {
            let s = deg - 2 * s1;
            if s == 0 {
                continue;
            }
            let eb = &bases[s - 1];
            let radial: Vec<f64> = x
                .weights()
                .iter()
                .zip(&norms2)
                .map(|(w, r2)| w * r2.powi(s1 as i32))
                .collect();
            let mass = neumaier_sum(radial.iter().zip(&norms).map(|(a, r)| a * r.powi(s as i32)));
            for (i, vals) in eb.values.iter().enumerate() {
                let sum = neumaier_sum(radial.iter().zip(vals).map(|(a, v)| a * v));
                let scale = (mass * eb.l1[i]).max(f64::MIN_POSITIVE);
                checked += 1;
                if sum.abs() > tol * scale {
                    failures += 1;
                }
                let rel = sum.abs() / scale;
                if worst.as_ref().is_none_or(|(r, sc, _)| rel > r / sc) {
                    worst = Some((sum.abs(), scale, format!("|x|^{}*{}", 2 * s1, eb.labels[i])));
                }
            }
        }
        let (residual, scale, term) = worst.unwrap_or((0.0, 1.0, String::new()));
        residuals.push(DegreeResidual { degree: deg, term, residual, scale, checked, failures });
    }
    Ok(DesignReport::assemble(
        VerificationMethod::Harmonic,
        t,
        tol,
        residuals,
        is_antipodal(x, GROUP_TOL),
    ))
}

/// Closed form of `Σ_{x ∈ I^n_k} f(x)` for `f_{4,2}` or `f_{6,3}`.
pub fn shell_harmonic_sum(n: usize, k: usize, name: SpecialHarmonic) -> Result<i64> {
    if k < 1 || k > n {
        return Err(invalid(format!("shell index k must satisfy 1 <= k <= n (k={k}, n={n})")));
    }
    let (n, k) = (n as i64, k as i64);
    let c = |a: i64, b: i64| -> Result<i64> { Ok(binomial(a, b)? as i64) };
    let p = 1i64 << k;
    match name {
        SpecialHarmonic::F42 if n >= 2 => Ok(2 * p * c(n - 1, k - 1)? - 6 * p * c(n - 2, k - 2)?),
        SpecialHarmonic::F63 if n >= 3 => Ok(6 * p * c(n - 1, k - 1)? - 90 * p * c(n - 2, k - 2)?
            + 180 * p * c(n - 3, k - 3)?),
        _ => Err(invalid(format!("no closed shell sum for {name:?} in dimension {n}"))),
    }
}

/// Whether the set is closed under coordinate permutations and sign changes
/// with matching weights, and has constant weight on every layer.
pub fn check_fully_symmetric(ld: &LayeredDesign, tol: f64) -> Result<()> {
    let x = &ld.base;
    let n = x.dim();
    for l in 0..ld.num_layers() {
        let idx = ld.layer_points(l);
        let w0 = x.weights()[idx[0]];
        if idx.iter().any(|&i| (x.weights()[i] - w0).abs() > tol * w0) {
            return Err(DesignError::NotFullySymmetric(format!("weights vary on layer {l}")));
        }
    }
    let find = |q: &[f64], w: f64| -> bool {
        let scale = norm(q).max(f64::MIN_POSITIVE);
        x.points().iter().zip(x.weights()).any(|(p, &pw)| {
            let d = p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
            d <= tol * scale && (pw - w).abs() <= tol * w
        })
    };
    for (p, &w) in x.points().iter().zip(x.weights()) {
        let mut flipped = p.clone();
        flipped[0] = -flipped[0];
        if !find(&flipped, w) {
            return Err(DesignError::NotFullySymmetric("not closed under sign changes".into()));
        }
        for i in 1..n {
            let mut swapped = p.clone();
            swapped.swap(0, i);
            if !find(&swapped, w) {
                return Err(DesignError::NotFullySymmetric("not closed under coordinate permutations".into()));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetricSum {
    pub label: String,
    pub value: f64,
    pub scale: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymmetricCheckReport {
    pub t: usize,
    pub pass: bool,
    pub tolerance: f64,
    pub sums: Vec<SymmetricSum>,
}

/// Reduced design test for fully symmetric sets with layer-constant weights.
///
/// Strength 3 holds automatically. Strength 5 needs `Σ w f_{4,2} = 0`; strength 7
/// additionally needs `Σ w f_{6,3} = 0` (when `n ≥ 3`) and `Σ w ‖x‖² f_{4,2} = 0`.
pub fn fully_symmetric_check(ld: &LayeredDesign, t: usize, tol: f64) -> Result<SymmetricCheckReport> {
    if ![3, 5, 7].contains(&t) {
        return Err(invalid(format!("fully symmetric check supports t in {{3, 5, 7}}, got {t}")));
    }
    check_fully_symmetric(ld, GROUP_TOL.max(tol))?;
    let x = &ld.base;
    let n = x.dim();
    let mut wanted: Vec<(String, HarmonicPoly, i32)> = Vec::new();
    if t >= 5 {
        wanted.push(("f42".into(), special_harmonics(n, SpecialHarmonic::F42, &[0, 1])?, 0));
    }
    if t >= 7 {
        if n >= 3 {
            wanted.push(("f63".into(), special_harmonics(n, SpecialHarmonic::F63, &[0, 1, 2])?, 0));
        }
        wanted.push(("|x|^2*f42".into(), special_harmonics(n, SpecialHarmonic::F42, &[0, 1])?, 1));
    }
    let mut sums = Vec::new();
    for (label, f, s1) in wanted {
        let fl = f.poly().to_float();
        let l1 = f.poly().coefficient_l1();
        let mut terms = Vec::with_capacity(x.len());
        let mut mass = Vec::with_capacity(x.len());
        for (p, &w) in x.points().iter().zip(x.weights()) {
            let r = norm(p);
            let radial = w * r.powi(2 * s1);
            terms.push(radial * fl.eval(p));
            mass.push(radial * r.powi(f.degree() as i32));
        }
        sums.push(SymmetricSum { label, value: neumaier_sum(terms), scale: neumaier_sum(mass) * l1 });
    }
    let pass = sums.iter().all(|s| s.value.abs() <= tol * s.scale);
    Ok(SymmetricCheckReport { t, pass, tolerance: tol, sums })
}
