//! Complex kernels with fixed branch conventions.
//!
//! Every radical in the inverse chain goes through [`principal_sqrt`] or
//! [`cbrt_branch`], so the conventions here decide which sheet of the inverse
//! is produced:
//!
//! * `Arg z ∈ (−π, π]`, with a signed-zero imaginary part treated as `+0`;
//! * the square root has `Re w ≥ 0`, and `Im w ≥ 0` when `Re w = 0`;
//! * the AGM takes the "optimal" geometric mean at every step, i.e. the sign
//!   with `|a′ − b′| ≤ |a′ + b′|`, ties broken by `Im(b′/a′) > 0`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::dd::DoubleDouble;

use crate::{Error, Result};

/// Complex value as a pair of binary64 reals.
pub type ComplexScalar = Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AgmConfig {
    pub max_iterations: usize,
    pub rel_tolerance: f64,
}

impl Default for AgmConfig {
    fn default() -> Self {
        Self {
            max_iterations: 64,
            rel_tolerance: 1e-15,
        }
    }
}

impl AgmConfig {
    pub fn new(max_iterations: usize, rel_tolerance: f64) -> Result<Self> {
        if max_iterations < 8 {
            return Err(Error::Domain(format!(
                "AGM max_iterations must be at least 8, got {max_iterations}"
            )));
        }
        if !(rel_tolerance > 0.0 && rel_tolerance < 1e-6) {
            return Err(Error::Domain(format!(
                "AGM rel_tolerance must lie in (0, 1e-6), got {rel_tolerance:e}"
            )));
        }
        Ok(Self {
            max_iterations,
            rel_tolerance,
        })
    }
}

pub(crate) fn ensure_finite(z: Complex64, what: &str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be finite, got {z}")))
    }
}

/// Principal argument in `(−π, π]`.
pub fn principal_arg(z: Complex64) -> f64 {
    // atan2(-0.0, x<0) is -π; the half-open convention wants +π.
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    im.atan2(z.re)
}

/// Principal square root: `w² = z`, `Re w ≥ 0`, and `Im w ≥ 0` on the cut.
pub fn principal_sqrt(z: Complex64) -> Complex64 {
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    // Scale huge inputs by 1/4 so |z| + |Re z| cannot overflow.
    let (x, y, scale) = if z.re.abs().max(z.im.abs()) > f64::MAX / 4.0 {
        (z.re * 0.25, z.im * 0.25, 2.0)
    } else {
        (z.re, z.im, 1.0)
    };
    let t = ((x.hypot(y) + x.abs()) * 0.5).sqrt();
    let w = if x >= 0.0 {
        Complex64::new(t, y / (2.0 * t))
    } else {
        let im = if y < 0.0 { -t } else { t };
        Complex64::new(y.abs() / (2.0 * t), im)
    };
    let w = if scale == 1.0 { polish_sqrt(w, z) } else { w };
    w * scale
}

/// Inputs outside this magnitude range skip the Newton polish, whose exact
/// residual would under- or overflow.
const POLISH_RANGE: (f64, f64) = (1e-280, 1e280);

fn in_polish_range(z: Complex64) -> bool {
    let m = z.re.abs().max(z.im.abs());
    m > POLISH_RANGE.0 && m < POLISH_RANGE.1
}

/// One Newton step on `w² = z` with the residual computed exactly.
fn polish_sqrt(w: Complex64, z: Complex64) -> Complex64 {
    if !in_polish_range(z) {
        return w;
    }
    let (a, b) = (w.re, w.im);
    let re = DoubleDouble::product(a, a)
        .sub(DoubleDouble::product(b, b))
        .sub(DoubleDouble::normalize(z.re, 0.0));
    let im = DoubleDouble::product(a, b)
        .scale(2.0)
        .sub(DoubleDouble::normalize(z.im, 0.0));
    let residual = Complex64::new(re.value(), im.value());
    w - residual / (w * 2.0)
}

/// One Newton step on `w³ = z` with the residual computed exactly.
fn polish_cbrt(w: Complex64, z: Complex64) -> Complex64 {
    if !in_polish_range(z) {
        return w;
    }
    let (a, b) = (w.re, w.im);
    let aa = DoubleDouble::product(a, a);
    let bb = DoubleDouble::product(b, b);
    // w³ = (a³ − 3ab²) + i(3a²b − b³)
    let re = aa
        .scale(a)
        .sub(bb.scale(a).scale(3.0))
        .sub(DoubleDouble::normalize(z.re, 0.0));
    let im = aa
        .scale(b)
        .scale(3.0)
        .sub(bb.scale(b))
        .sub(DoubleDouble::normalize(z.im, 0.0));
    let residual = Complex64::new(re.value(), im.value());
    w - residual / (w * w * 3.0)
}

/// Cube root on sheet `branch`: `|z|^{1/3} · exp(i(Arg z + 2π·branch)/3)`.
///
/// `branch` is taken modulo 3; branch 0 is the principal cube root.
pub fn cbrt_branch(z: Complex64, branch: u8) -> Complex64 {
    debug_assert!(branch < 3, "cube-root branch must be 0, 1 or 2");
    if z.re == 0.0 && z.im == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    let r = z.norm().cbrt();
    let phi = (principal_arg(z) + 2.0 * PI * f64::from(branch % 3)) / 3.0;
    if phi == 0.0 {
        // Keep positive reals exact.
        return Complex64::new(r, 0.0);
    }
    polish_cbrt(Complex64::from_polar(r, phi), z)
}

/// Arithmetic–geometric mean of `a` and `b` with the optimal sign rule.
pub fn agm(a: Complex64, b: Complex64, cfg: &AgmConfig) -> Result<Complex64> {
    ensure_finite(a, "AGM argument a")?;
    ensure_finite(b, "AGM argument b")?;
    let zero = Complex64::new(0.0, 0.0);
    if a == zero && b == zero {
        return Err(Error::Domain("AGM of (0, 0) is undefined".into()));
    }
    let (mut a, mut b) = (a, b);
    for _ in 0..cfg.max_iterations {
        if a == zero || b == zero {
            return Ok(zero);
        }
        if (a - b).norm() <= cfg.rel_tolerance * a.norm() {
            return Ok((a + b) * 0.5);
        }
        let sum = a + b;
        if sum == zero {
            return Err(Error::Domain(format!(
                "AGM step with a = -b = {a}: geometric-mean sign is undetermined"
            )));
        }
        let next_a = sum * 0.5;
        let g = principal_sqrt(a * b);
        let keep = (next_a - g).norm();
        let flip = (next_a + g).norm();
        let next_b = if keep < flip {
            g
        } else if flip < keep {
            -g
        } else if (g / next_a).im > 0.0 {
            g
        } else {
            -g
        };
        a = next_a;
        b = next_b;
    }
    Err(Error::Convergence {
        what: "complex AGM",
        limit: cfg.max_iterations,
    })
}

/// `G(x)`: the AGM of 1 and `x`.
pub fn agm_g(x: Complex64, cfg: &AgmConfig) -> Result<Complex64> {
    agm(Complex64::new(1.0, 0.0), x, cfg)
}
