//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::ratio_to_f64;

/// Exponent tuple of a monomial.
pub type Exponents = Vec<u32>;

/// All exponent tuples in `n` variables with total degree exactly `d`,
/// in lexicographically decreasing order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponents> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(n, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `x^α` for a float point.
pub fn eval_monomial(x: &[f64], exponents: &[u32]) -> f64 {
    x.iter()
        .zip(exponents)
        .fold(1.0, |acc, (&xi, &a)| acc * xi.powi(a as i32))
}

/// Polynomial in `dim` variables: exponent tuple → non-zero coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    dim: usize,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Poly {
    pub fn zero(dim: usize) -> Self {
        Poly { dim, terms: BTreeMap::new() }
    }

    pub fn constant(dim: usize, c: BigRational) -> Self {
        Self::monomial(dim, vec![0; dim], c)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, BigRational::one())
    }

    pub fn monomial(dim: usize, exponents: Exponents, c: BigRational) -> Self {
        assert_eq!(exponents.len(), dim, "exponent tuple length must match dimension");
        let mut p = Poly::zero(dim);
        p.add_term(exponents, c);
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Self::monomial(dim, e, BigRational::one())
    }

    /// Builds from integer coefficients.
    pub fn from_int_terms(dim: usize, terms: &[(&[u32], i64)]) -> Self {
        let mut p = Poly::zero(dim);
        for (e, c) in terms {
            p.add_term(e.to_vec(), BigRational::from_integer(BigInt::from(*c)));
        }
        p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(exponents).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exponents: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Homogeneous of degree `s` (the zero polynomial counts as homogeneous).
    pub fn is_homogeneous_of(&self, s: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == s)
    }

    /// Every variable has even degree in every term.
    pub fn is_fully_even(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|a| a % 2 == 0))
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        let mut out = Poly::zero(self.dim);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.dim);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂x_i`
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.dim);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                out.add_term(e2, c * BigRational::from_integer(BigInt::from(e[i])));
            }
        }
        out
    }

    /// `Δp = Σ_i ∂²p/∂x_i²`, exact.
    pub fn laplacian(&self) -> Poly {
        let mut out = Poly::zero(self.dim);
        for (e, c) in &self.terms {
            for i in 0..self.dim {
                let a = e[i];
                if a >= 2 {
                    let mut e2 = e.clone();
                    e2[i] -= 2;
                    out.add_term(e2, c * BigRational::from_integer(BigInt::from(a * (a - 1))));
                }
            }
        }
        out
    }

    /// Rescales to coprime integer coefficients with a positive leading term.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
            gcd = gcd.gcd(c.numer());
        }
        let mut factor = BigRational::new(lcm, gcd);
        if self.terms.values().next().is_some_and(|c| c.is_negative()) {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// `Σ |c|`, an upper bound for `|p(x)| / ‖x‖^s` on homogeneous `p`.
    pub fn coefficient_l1(&self) -> f64 {
        self.terms.values().map(|c| ratio_to_f64(c).abs()).sum()
    }

    /// Coefficients rounded to `f64` for repeated evaluation.
    pub fn to_float(&self) -> FloatPoly {
        FloatPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), ratio_to_f64(c)))
                .collect(),
        }
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.to_float().eval(x)
    }

    pub fn eval_exact(&self, x: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (xi, &a) in x.iter().zip(e) {
                term *= num_traits::pow(xi.clone(), a as usize);
            }
            acc += term;
        }
        acc
    }

    /// Substitutes variables: variable `i` of `self` becomes variable `map[i]` of a `dim`-variable polynomial.
    pub fn embed(&self, dim: usize, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.dim);
        let mut out = Poly::zero(dim);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; dim];
            for (i, &a) in e.iter().enumerate() {
                e2[map[i]] += a;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    pub fn to_terms(&self) -> Vec<PolyTerm> {
        self.terms
            .iter()
            .map(|(e, c)| PolyTerm {
                exponents: e.clone(),
                numerator: c.numer().to_string(),
                denominator: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_terms(dim: usize, terms: &[PolyTerm]) -> Option<Poly> {
        let mut p = Poly::zero(dim);
        for t in terms {
            if t.exponents.len() != dim {
                return None;
            }
            let n: BigInt = t.numerator.parse().ok()?;
            let d: BigInt = t.denominator.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            p.add_term(t.exponents.clone(), BigRational::new(n, d));
        }
        Some(p)
    }
}

/// Serialised polynomial term; numerator and denominator are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exponents: Exponents,
    pub numerator: String,
    pub denominator: String,
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            dim: usize,
            terms: Vec<PolyTerm>,
        }
        Repr { dim: self.dim, terms: self.to_terms() }.serialize(s)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.dim, rhs.dim);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-BigRational::one())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.dim, rhs.dim);
        let mut out = Poly::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, a) })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A polynomial with `f64` coefficients, evaluated with compensated summation.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatPoly {
    terms: Vec<(Exponents, f64)>,
}

impl FloatPoly {
    pub fn eval(&self, x: &[f64]) -> f64 {
        neumaier_sum(self.terms.iter().map(|(e, c)| c * eval_monomial(x, e)))
    }
}

/// Neumaier's variant of Kahan summation.
pub fn neumaier_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}
