//! Forward evaluation of `j` through theta nullwerte and the modular lambda.
//!
//! This path shares no code with [`crate::chain`] beyond complex arithmetic,
//! so it serves as the oracle that accepts or rejects a candidate inverse.
//!
//! Accuracy is best for `τ` in (or near) the fundamental domain, where
//! `|q| ≤ e^{−π√3/2} ≈ 0.066`. For `Im τ < 0.5` the series still converge
//! but lose digits to cancellation; reduce `τ` first
//! ([`crate::reduction::reduce`]).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{Error, Result};

/// A point of the upper half-plane (`Im τ > 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint {
    re: f64,
    im: f64,
}

impl UpperHalfPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !re.is_finite() || !im.is_finite() {
            return Err(Error::Domain(format!("τ = {re} + {im}i is not finite")));
        }
        if im <= 0.0 {
            return Err(Error::Domain(format!(
                "τ must lie in the upper half-plane, got Im τ = {im}"
            )));
        }
        Ok(Self { re, im })
    }

    pub fn from_complex(z: Complex64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn re(&self) -> f64 {
        self.re
    }

    pub fn im(&self) -> f64 {
        self.im
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

impl std::fmt::Display for UpperHalfPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaConfig {
    pub term_tolerance: f64,
    pub max_terms: usize,
}

impl Default for ThetaConfig {
    fn default() -> Self {
        Self {
            term_tolerance: 1e-18,
            max_terms: 64,
        }
    }
}

impl ThetaConfig {
    pub fn new(term_tolerance: f64, max_terms: usize) -> Result<Self> {
        if !(term_tolerance > 0.0 && term_tolerance < 1e-10) {
            return Err(Error::Domain(format!(
                "theta term_tolerance must lie in (0, 1e-10), got {term_tolerance:e}"
            )));
        }
        if max_terms == 0 {
            return Err(Error::Domain("theta max_terms must be positive".into()));
        }
        Ok(Self {
            term_tolerance,
            max_terms,
        })
    }
}

/// Theta nullwerte `θ2(τ)`, `θ3(τ)`, `θ4(τ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaNullwerte {
    pub theta2: Complex64,
    pub theta3: Complex64,
    pub theta4: Complex64,
}

/// The nome `q = exp(iπτ)`.
pub fn nome(tau: UpperHalfPoint) -> Complex64 {
    Complex64::from_polar((-PI * tau.im).exp(), PI * tau.re)
}

/// `exp(iπτ·e)` evaluated directly, so large exponents keep full relative accuracy.
fn q_power(tau: UpperHalfPoint, exponent: f64) -> Complex64 {
    Complex64::from_polar(
        (-PI * tau.im * exponent).exp(),
        PI * (tau.re * exponent).rem_euclid(2.0),
    )
}

pub fn theta_nullwerte(tau: UpperHalfPoint, cfg: &ThetaConfig) -> Result<ThetaNullwerte> {
    let too_slow = || Error::Convergence {
        what: "theta series",
        limit: cfg.max_terms,
    };

    // θ2 = 2 Σ_{n≥0} q^{(n+1/2)²}; truncation is measured against the leading term.
    let lead = q_power(tau, 0.25) * 2.0;
    let lead_norm = lead.norm();
    let mut theta2 = lead;
    let mut converged = false;
    for n in 1..cfg.max_terms {
        let h = n as f64 + 0.5;
        let term = q_power(tau, h * h) * 2.0;
        if term.norm() < cfg.term_tolerance * lead_norm {
            converged = true;
            break;
        }
        theta2 += term;
    }
    if !converged {
        return Err(too_slow());
    }

    // θ3 and θ4 share the terms q^{n²}.
    let mut theta3 = Complex64::new(1.0, 0.0);
    let mut theta4 = Complex64::new(1.0, 0.0);
    converged = false;
    for n in 1..=cfg.max_terms {
        let nf = n as f64;
        let term = q_power(tau, nf * nf) * 2.0;
        if term.norm() < cfg.term_tolerance {
            converged = true;
            break;
        }
        theta3 += term;
        if n % 2 == 0 {
            theta4 += term;
        } else {
            theta4 -= term;
        }
    }
    if !converged {
        return Err(too_slow());
    }

    Ok(ThetaNullwerte {
        theta2,
        theta3,
        theta4,
    })
}

/// `λ = (θ2/θ3)⁴` together with its complement `μ = (θ4/θ3)⁴ = 1 − λ`.
pub fn lambda_pair(tau: UpperHalfPoint, cfg: &ThetaConfig) -> Result<(Complex64, Complex64)> {
    let t = theta_nullwerte(tau, cfg)?;
    let lambda = (t.theta2 / t.theta3).powi(4);
    let mu = (t.theta4 / t.theta3).powi(4);
    Ok((lambda, mu))
}

/// The modular lambda function `λ(τ) = (θ2/θ3)⁴`.
pub fn lambda_from_theta(tau: UpperHalfPoint, cfg: &ThetaConfig) -> Result<Complex64> {
    lambda_pair(tau, cfg).map(|(lambda, _)| lambda)
}

/// `j = 4(1 − λμ)³ / (27(λμ)²)` for `μ = 1 − λ`.
///
/// Equal to `4(λ² − λ + 1)³ / (27λ²(1 − λ)²)`; taking `μ` separately lets the
/// caller supply `1 − λ` without cancellation.
pub fn j_from_moduli(lambda: Complex64, mu: Complex64) -> Result<Complex64> {
    let p = lambda * mu;
    if p.norm() == 0.0 {
        return Err(Error::Cusp(format!("λ = {lambda} is a cusp value")));
    }
    let j = (Complex64::new(1.0, 0.0) - p).powi(3) * 4.0 / (p * p * 27.0);
    if !(j.re.is_finite() && j.im.is_finite()) {
        return Err(Error::Cusp(format!("j overflows at λ = {lambda}")));
    }
    Ok(j)
}

/// The degree-6 map `λ ↦ j`, normalized so that `λ = 1/2 ↦ 1`.
pub fn j_from_lambda(lambda: Complex64) -> Result<Complex64> {
    crate::numerics::ensure_finite(lambda, "λ")?;
    j_from_moduli(lambda, Complex64::new(1.0, 0.0) - lambda)
}

/// `j(τ)` with `j(i) = 1`.
pub fn j_paper(tau: UpperHalfPoint, cfg: &ThetaConfig) -> Result<Complex64> {
    let (lambda, mu) = lambda_pair(tau, cfg)?;
    j_from_moduli(lambda, mu)
}

/// Klein's `j(τ)`, with `j(i) = 1728`.
pub fn j_klein(tau: UpperHalfPoint, cfg: &ThetaConfig) -> Result<Complex64> {
    j_paper(tau, cfg).map(|j| j * 1728.0)
}
