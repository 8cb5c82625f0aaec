//! Exact half-integer gamma values and closed-form monomial averages.
//!
//! Every quantity here is a rational number times an integer power of `√π`.
//! Averages of monomials over spheres and over `[-1, 1]` with the
//! ultraspherical weight `(1 - x²)^((n-3)/2)` are always purely rational, so
//! the verifiers can compare floating point sums against an error-free
//! reference.

use std::fmt;
use std::ops::{Div, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};

/// `Γ(k/2)` stored as `rational_part · (√π)^sqrt_pi_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfGamma {
    pub rational_part: BigRational,
    /// 0 for integer arguments, 1 for half-integer arguments.
    pub sqrt_pi_power: u8,
}

/// A value `coefficient · (√π)^sqrt_pi_power`, closed under products and quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtPiMultiple {
    pub coefficient: BigRational,
    pub sqrt_pi_power: i32,
}

/// Continuous average of a monomial over a sphere of radius `r`: `value · r^radius_exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMoment {
    pub value: BigRational,
    pub radius_exponent: u32,
}

impl HalfGamma {
    pub fn to_f64(&self) -> f64 {
        SqrtPiMultiple::from(self.clone()).to_f64()
    }
}

impl From<HalfGamma> for SqrtPiMultiple {
    fn from(g: HalfGamma) -> Self {
        SqrtPiMultiple {
            coefficient: g.rational_part,
            sqrt_pi_power: i32::from(g.sqrt_pi_power),
        }
    }
}

impl SqrtPiMultiple {
    pub fn rational(q: BigRational) -> Self {
        SqrtPiMultiple {
            coefficient: q,
            sqrt_pi_power: 0,
        }
    }

    pub fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    /// The rational value, if the `√π` factors cancel (or the value is zero).
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.sqrt_pi_power == 0 || self.coefficient.is_zero() {
            Some(self.coefficient.clone())
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        ratio_to_f64(&self.coefficient) * sqrt_pi.powi(self.sqrt_pi_power)
    }
}

impl Mul for SqrtPiMultiple {
    type Output = SqrtPiMultiple;
    fn mul(self, rhs: SqrtPiMultiple) -> SqrtPiMultiple {
        SqrtPiMultiple {
            coefficient: self.coefficient * rhs.coefficient,
            sqrt_pi_power: self.sqrt_pi_power + rhs.sqrt_pi_power,
        }
    }
}

impl Div for SqrtPiMultiple {
    type Output = SqrtPiMultiple;
    fn div(self, rhs: SqrtPiMultiple) -> SqrtPiMultiple {
        assert!(!rhs.coefficient.is_zero(), "division by zero SqrtPiMultiple");
        SqrtPiMultiple {
            coefficient: self.coefficient / rhs.coefficient,
            sqrt_pi_power: self.sqrt_pi_power - rhs.sqrt_pi_power,
        }
    }
}

impl fmt::Display for SqrtPiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.sqrt_pi_power;
        let pi = match (p / 2, p % 2) {
            (0, 0) => return write!(f, "{}", self.coefficient),
            (0, r) => if r > 0 { "√π".to_string() } else { "/√π".to_string() },
            (1, 0) => "π".to_string(),
            (-1, 0) => "/π".to_string(),
            (h, 0) => format!("π^{h}"),
            _ => format!("√π^{p}"),
        };
        if pi.starts_with('/') {
            write!(f, "{}{}", self.coefficient, pi)
        } else if self.coefficient == BigRational::one() {
            write!(f, "{pi}")
        } else {
            write!(f, "{}·{}", self.coefficient, pi)
        }
    }
}

impl ExactMoment {
    pub fn at_radius(&self, r: f64) -> f64 {
        ratio_to_f64(&self.value) * r.powi(self.radius_exponent as i32)
    }

    pub fn at_radius_exact(&self, r: &BigRational) -> BigRational {
        &self.value * num_traits::pow(r.clone(), self.radius_exponent as usize)
    }
}

/// Converts a big rational to the nearest-ish binary64 value.
///
/// Falls back to a shifted division when numerator or denominator overflow `f64`.
pub fn ratio_to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift = nb - db - 60;
    let (num, den) = if shift > 0 {
        (q.numer().clone(), q.denom() << shift as usize)
    } else {
        (q.numer() << (-shift) as usize, q.denom().clone())
    };
    let mantissa = (num / den).to_f64().unwrap_or(f64::NAN);
    mantissa * 2f64.powi(shift as i32)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `Γ(k/2)` for a positive integer `k`, by descent to `Γ(1) = 1` or `Γ(1/2) = √π`.
pub fn gamma_half(k: u32) -> Result<HalfGamma> {
    if k == 0 {
        return Err(invalid("gamma_half needs k >= 1 (Γ has a pole at 0)"));
    }
    let mut value = BigRational::one();
    // Γ(x + 1) = x Γ(x), walking x = k/2 - 1, k/2 - 2, ... down to the base case.
    let mut twice_x = k as i64 - 2;
    while twice_x >= 1 {
        value *= rat(twice_x, 2);
        twice_x -= 2;
    }
    Ok(HalfGamma {
        rational_part: value,
        sqrt_pi_power: (k % 2) as u8,
    })
}

fn gamma_half_sp(k: u32) -> SqrtPiMultiple {
    gamma_half(k).expect("k >= 1 checked by caller").into()
}

/// Surface area of the sphere of radius `r` in `ℝⁿ`: `2 r^(n-1) π^(n/2) / Γ(n/2)`.
pub fn sphere_surface(n: usize, r: &BigRational) -> Result<SqrtPiMultiple> {
    if n < 2 {
        return Err(invalid(format!("sphere_surface needs n >= 2, got {n}")));
    }
    if !r.is_positive() {
        return Err(invalid("sphere_surface needs a positive radius"));
    }
    let numerator = SqrtPiMultiple {
        coefficient: BigRational::from_integer(2.into()) * num_traits::pow(r.clone(), n - 1),
        sqrt_pi_power: n as i32,
    };
    Ok(numerator / gamma_half_sp(n as u32))
}

/// Floating point surface area for an arbitrary positive radius.
pub fn sphere_surface_f64(n: usize, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(invalid("sphere_surface needs a positive radius"));
    }
    let unit = sphere_surface(n, &BigRational::one())?;
    Ok(unit.to_f64() * r.powi(n as i32 - 1))
}

/// Average of `∏ x_i^{α_i}` over the sphere `S^{n-1}` of radius `r`, as `value · r^{|α|}`.
///
/// For even `α` the average is `∏ Γ((α_i+1)/2)/√π · Γ(n/2)/Γ((n+|α|)/2)`; all `√π` cancel.
pub fn sphere_monomial_average(n: usize, exponents: &[u32]) -> Result<ExactMoment> {
    if n < 2 {
        return Err(invalid(format!("sphere averages need n >= 2, got {n}")));
    }
    if exponents.len() != n {
        return Err(invalid(format!(
            "expected {n} exponents, got {}",
            exponents.len()
        )));
    }
    let total: u32 = exponents.iter().sum();
    if exponents.iter().any(|a| a % 2 == 1) {
        return Ok(ExactMoment {
            value: BigRational::zero(),
            radius_exponent: total,
        });
    }
    let mut acc = gamma_half_sp(n as u32) / gamma_half_sp(n as u32 + total);
    for &a in exponents {
        acc = acc * gamma_half_sp(a + 1);
    }
    // n factors of √π from the numerator gammas against π^{n/2} in the measure.
    acc.sqrt_pi_power -= n as i32;
    let value = acc
        .as_rational()
        .expect("sphere averages of monomials are rational");
    Ok(ExactMoment {
        value,
        radius_exponent: total,
    })
}

/// `∫_{-1}^{1} x^k (1 - x²)^{(n-3)/2} dx`, unnormalised.
pub fn interval_moment(n: usize, k: u32) -> Result<SqrtPiMultiple> {
    if n < 2 {
        return Err(invalid(format!(
            "ultraspherical weight needs n >= 2, got {n}"
        )));
    }
    if k % 2 == 1 {
        return Ok(SqrtPiMultiple::zero());
    }
    // Beta((k+1)/2, (n-1)/2)
    Ok(gamma_half_sp(k + 1) * gamma_half_sp(n as u32 - 1) / gamma_half_sp(k + n as u32))
}

/// Total mass `μ(I) = √π Γ((n-1)/2) / Γ(n/2)` of the ultraspherical weight.
pub fn interval_mass(n: usize) -> Result<SqrtPiMultiple> {
    interval_moment(n, 0)
}

/// Normalised moment `(1/μ(I)) ∫ x^k μ(x) dx`; always rational.
pub fn interval_monomial_average(n: usize, k: u32) -> Result<BigRational> {
    let q = interval_moment(n, k)? / interval_mass(n)?;
    Ok(q.as_rational().expect("normalised interval moments are rational"))
}

/// Normalised moment of `(1 - x²)^{m/2} x^k` against `μ`, for even `m`.
///
/// This is the interval factor of the sphere factorisation: the binomial
/// expansion of `(1 - x²)^{m/2}` keeps everything rational.
pub fn interval_weighted_average(n: usize, m: u32, k: u32) -> Result<BigRational> {
    if m % 2 == 1 {
        return Err(invalid("interval_weighted_average needs an even power m"));
    }
    let half = m / 2;
    let mut acc = BigRational::zero();
    let mut binom = BigInt::one();
    for j in 0..=half {
        let term = BigRational::from_integer(binom.clone()) * interval_monomial_average(n, k + 2 * j)?;
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        binom = binom * BigInt::from(half - j) / BigInt::from(j + 1);
    }
    Ok(acc)
}
