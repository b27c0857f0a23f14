//! Reduction to the standard fundamental domain of SL(2, Z).
//!
//! The reduced point satisfies `|Re τ| ≤ 1/2`, `|τ| ≥ 1`, with the boundary
//! identifications resolved as: points on the arc `|τ| = 1` get `Re τ ≥ 0`,
//! points on the wall `Re τ = −1/2` move to `Re τ = +1/2`.

use num_complex::Complex64;

use crate::forward::{j_paper, ThetaConfig, UpperHalfPoint};
use crate::{Error, Result};

const BOUNDARY_TOL: f64 = 1e-12;
const MAX_STEPS: usize = 10_000;

/// Integer matrix `[[a, b], [c, d]]` with `ad − bc = 1`, acting by `τ ↦ (aτ + b)/(cτ + d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnimodularMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl UnimodularMatrix {
    pub const IDENTITY: Self = Self {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };
    /// `S: τ ↦ −1/τ`.
    pub const S: Self = Self {
        a: 0,
        b: -1,
        c: 1,
        d: 0,
    };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let m = Self { a, b, c, d };
        if m.determinant() != Some(1) {
            return Err(Error::Domain(format!(
                "[[{a}, {b}], [{c}, {d}]] does not have determinant 1"
            )));
        }
        Ok(m)
    }

    /// `T^n: τ ↦ τ + n`.
    pub fn translation(n: i64) -> Self {
        Self {
            a: 1,
            b: n,
            c: 0,
            d: 1,
        }
    }

    pub fn determinant(&self) -> Option<i64> {
        self.a
            .checked_mul(self.d)?
            .checked_sub(self.b.checked_mul(self.c)?)
    }

    /// Matrix product `self · rhs` (apply `rhs` first), `None` on overflow.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let dot = |x: i64, y: i64, u: i64, v: i64| x.checked_mul(y)?.checked_add(u.checked_mul(v)?);
        Some(Self {
            a: dot(self.a, rhs.a, self.b, rhs.c)?,
            b: dot(self.a, rhs.b, self.b, rhs.d)?,
            c: dot(self.c, rhs.a, self.d, rhs.c)?,
            d: dot(self.c, rhs.b, self.d, rhs.d)?,
        })
    }

    pub fn apply(&self, tau: Complex64) -> Complex64 {
        let (a, b, c, d) = (self.a as f64, self.b as f64, self.c as f64, self.d as f64);
        (tau * a + b) / (tau * c + d)
    }
}

impl Default for UnimodularMatrix {
    fn default() -> Self {
        Self::IDENTITY
    }
}

fn overflow() -> Error {
    Error::Convergence {
        what: "fundamental-domain reduction (matrix entries overflow)",
        limit: MAX_STEPS,
    }
}

/// Reduce `tau` to the fundamental domain; returns the reduced point and the
/// matrix `M` with `M·tau = reduced`.
pub fn reduce(tau: UpperHalfPoint) -> Result<(UpperHalfPoint, UnimodularMatrix)> {
    let mut z = tau.to_complex();
    let mut m = UnimodularMatrix::IDENTITY;
    let mut steps = 0;
    loop {
        if z.re.abs() > 0.5 {
            let n = z.re.round();
            z.re -= n;
            m = UnimodularMatrix::translation(-(n as i64))
                .checked_mul(&m)
                .ok_or_else(overflow)?;
        }
        if z.norm_sqr() >= 1.0 {
            break;
        }
        z = -z.inv();
        m = UnimodularMatrix::S.checked_mul(&m).ok_or_else(overflow)?;
        steps += 1;
        if steps > MAX_STEPS || !(z.im > 0.0 && z.im.is_finite()) {
            return Err(Error::Convergence {
                what: "fundamental-domain reduction",
                limit: MAX_STEPS,
            });
        }
    }

    if (z.re + 0.5).abs() <= BOUNDARY_TOL {
        z.re += 1.0;
        m = UnimodularMatrix::translation(1)
            .checked_mul(&m)
            .ok_or_else(overflow)?;
    }
    if (z.norm() - 1.0).abs() <= BOUNDARY_TOL && z.re < 0.0 {
        // On the arc S is the reflection Re τ ↦ −Re τ.
        z = -z.inv();
        m = UnimodularMatrix::S.checked_mul(&m).ok_or_else(overflow)?;
    }
    Ok((UpperHalfPoint::new(z.re, z.im)?, m))
}

/// Whether two points lie in the same SL(2, Z)-orbit, up to `tol`.
///
/// Componentwise agreement of the reduced points is sufficient; otherwise the
/// `j` values decide, which covers points reduced to opposite sides of a seam
/// and the ill-conditioned neighbourhoods of `i` and `ρ`.
pub fn is_equivalent(
    t1: UpperHalfPoint,
    t2: UpperHalfPoint,
    tol: f64,
    cfg: &ThetaConfig,
) -> Result<bool> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let (r1, _) = reduce(t1)?;
    let (r2, _) = reduce(t2)?;
    if (r1.re() - r2.re()).abs() <= tol && (r1.im() - r2.im()).abs() <= tol {
        return Ok(true);
    }
    let j1 = j_paper(r1, cfg)?;
    let j2 = j_paper(r2, cfg)?;
    Ok((j1 - j2).norm() <= tol * (1.0 + j1.norm()))
}
