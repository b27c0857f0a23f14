//! The closed-form inverse `k = k0 ∘ k1 ∘ k2` of the modular invariant.
//!
//! ```text
//! k3(x) = ∛(√(x² − x³) − x)
//! k2(x) = 3/2 · (x/k3(x) + k3(x)) − 1
//! k1(x) = (√(x + 4) − √x) / 2
//! k0(x) = i · G(√(1 − x²)) / G(x)        G(x) = AGM(1, x)
//! ```
//!
//! `k2` returns a root `y` of `4(y + 1)³ = 27xy` (Cardano), `k1` turns it into
//! an elliptic modulus `κ` with `y = (κ − 1/κ)²`, and `k0` is the period ratio
//! `iK′/K` written with the AGM. The inverse is multivalued: the sign of the
//! inner square root and the cube-root sheet in `k3` give six [`BranchChoice`]s.
//! [`invert_verified`] tries them in order and keeps the first one whose `τ`
//! reproduces `x` under the forward evaluator.

use num_complex::Complex64;

use crate::forward::{j_paper, ThetaConfig, UpperHalfPoint};
use crate::numerics::{agm_g, cbrt_branch, ensure_finite, principal_sqrt, AgmConfig};
use crate::reduction::reduce;
use crate::{Error, Result};

/// Branch of the radicals inside `k3`; the default is the principal branch.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct BranchChoice {
    negate_inner_sqrt: bool,
    cbrt_index: u8,
}

impl BranchChoice {
    /// All six branches, default first, then the remaining cube-root sheets
    /// for `+√`, then the three sheets for `−√`.
    pub const ALL: [BranchChoice; 6] = [
        Self {
            negate_inner_sqrt: false,
            cbrt_index: 0,
        },
        Self {
            negate_inner_sqrt: false,
            cbrt_index: 1,
        },
        Self {
            negate_inner_sqrt: false,
            cbrt_index: 2,
        },
        Self {
            negate_inner_sqrt: true,
            cbrt_index: 0,
        },
        Self {
            negate_inner_sqrt: true,
            cbrt_index: 1,
        },
        Self {
            negate_inner_sqrt: true,
            cbrt_index: 2,
        },
    ];

    /// `inner_sqrt_sign` must be ±1 and `cbrt_index` in 0..=2.
    pub fn new(inner_sqrt_sign: i8, cbrt_index: u8) -> Result<Self> {
        let negate_inner_sqrt = match inner_sqrt_sign {
            1 => false,
            -1 => true,
            s => {
                return Err(Error::Domain(format!(
                    "inner square-root sign must be ±1, got {s}"
                )))
            }
        };
        if cbrt_index > 2 {
            return Err(Error::Domain(format!(
                "cube-root index must be 0, 1 or 2, got {cbrt_index}"
            )));
        }
        Ok(Self {
            negate_inner_sqrt,
            cbrt_index,
        })
    }

    pub fn inner_sqrt_sign(&self) -> i8 {
        if self.negate_inner_sqrt {
            -1
        } else {
            1
        }
    }

    pub fn cbrt_index(&self) -> u8 {
        self.cbrt_index
    }

    /// Position in [`BranchChoice::ALL`].
    pub fn index(&self) -> usize {
        usize::from(self.negate_inner_sqrt) * 3 + usize::from(self.cbrt_index)
    }
}

impl std::fmt::Display for BranchChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.negate_inner_sqrt { '-' } else { '+' };
        write!(f, "({sign}1, {})", self.cbrt_index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InversionResult {
    /// Preimage of `x`, reduced to the fundamental domain.
    pub tau: UpperHalfPoint,
    pub branch_used: BranchChoice,
    /// `|j(τ) − x| / (1 + |x|)`.
    pub residual: f64,
}

fn is_zero(z: Complex64) -> bool {
    z.re == 0.0 && z.im == 0.0
}

pub fn k3(x: Complex64, branch: BranchChoice) -> Complex64 {
    if is_zero(x) {
        return Complex64::new(0.0, 0.0);
    }
    let x2 = x * x;
    let x3 = x2 * x;
    let mut root = principal_sqrt(x2 - x3);
    if branch.negate_inner_sqrt {
        root = -root;
    }
    // (r − x)(r + x) = −x³: use whichever form has the larger denominator.
    let plus = root + x;
    let minus = root - x;
    let radicand = if plus.norm() > minus.norm() {
        -x3 / plus
    } else {
        minus
    };
    cbrt_branch(radicand, branch.cbrt_index)
}

/// `4(y + 1)³ − 27xy` and its derivative in `y`.
fn resolvent(x: Complex64, y: Complex64) -> (Complex64, Complex64) {
    let s = y + 1.0;
    (s * s * s * 4.0 - x * y * 27.0, s * s * 12.0 - x * 27.0)
}

/// `k2(0) = −1` is the removable-singularity value.
///
/// The Cardano value is refined by Newton steps on `4(y + 1)³ = 27xy`; a step
/// is kept only if it lowers the residual, so the root (and hence the branch)
/// never changes. This recovers the digits lost when `k3` and `x/k3` nearly
/// cancel, which happens on the branches giving the small root.
pub fn k2(x: Complex64, branch: BranchChoice) -> Complex64 {
    let minus_one = Complex64::new(-1.0, 0.0);
    if is_zero(x) {
        return minus_one;
    }
    let c = k3(x, branch);
    if is_zero(c) {
        // x³ underflowed; the limit is the same as at 0.
        return minus_one;
    }
    let mut y = (x / c + c) * 1.5 - 1.0;
    let (mut f, mut df) = resolvent(x, y);
    for _ in 0..2 {
        if is_zero(f) || is_zero(df) {
            break;
        }
        let next = y - f / df;
        let (next_f, next_df) = resolvent(x, next);
        if next_f.norm() >= f.norm() || next_f.norm().is_nan() {
            break;
        }
        (y, f, df) = (next, next_f, next_df);
    }
    y
}

pub fn k1(x: Complex64) -> Complex64 {
    let p = principal_sqrt(x + 4.0);
    let r = principal_sqrt(x);
    let sum = p + r;
    let diff = p - r;
    // sum · diff = 4, so at least one of them is bounded away from zero.
    debug_assert!(!(is_zero(sum) && is_zero(diff)));
    if sum.norm() > diff.norm() {
        Complex64::new(2.0, 0.0) / sum
    } else {
        diff * 0.5
    }
}

/// Period ratio `i·G(√(1 − x²))/G(x)` of the modulus `x`.
pub fn k0(x: Complex64, cfg: &AgmConfig) -> Result<Complex64> {
    ensure_finite(x, "elliptic modulus")?;
    let one = Complex64::new(1.0, 0.0);
    if is_zero(x) || x == one || x == -one {
        return Err(Error::Cusp(format!("modulus {x} is degenerate")));
    }
    // (1 − x)(1 + x) keeps full relative accuracy near x = ±1.
    period_ratio(x, (one - x) * (one + x), cfg)
}

/// `k0` with `1 − x²` supplied by the caller.
fn period_ratio(x: Complex64, one_minus_x2: Complex64, cfg: &AgmConfig) -> Result<Complex64> {
    if is_zero(x) || is_zero(one_minus_x2) {
        return Err(Error::Cusp(format!("modulus {x} is degenerate")));
    }
    let complement = principal_sqrt(one_minus_x2);
    let num = agm_g(complement, cfg)?;
    let den = agm_g(x, cfg)?;
    if is_zero(num) || is_zero(den) {
        return Err(Error::Cusp(format!("AGM vanishes for modulus {x}")));
    }
    let tau = Complex64::i() * num / den;
    if !(tau.re.is_finite() && tau.im.is_finite()) {
        return Err(Error::Cusp(format!(
            "period ratio overflows for modulus {x}"
        )));
    }
    Ok(tau)
}

fn chain(x: Complex64, branch: BranchChoice, cfg: &AgmConfig) -> Result<Complex64> {
    let y = k2(x, branch);
    if !(y.re.is_finite() && y.im.is_finite()) {
        return Err(Error::Cusp(format!(
            "x = {x} is too large to invert in binary64"
        )));
    }
    let kappa = k1(y);
    ensure_finite(kappa, "elliptic modulus")?;
    // 1/κ − κ = √y, hence 1 − κ² = κ√y without cancellation at κ ≈ ±1.
    period_ratio(kappa, kappa * principal_sqrt(y), cfg)
}

/// `k0(k1(k2(x)))` on the default branch. The result is not guaranteed to lie
/// in the upper half-plane.
pub fn invert_principal(x: Complex64, cfg: &AgmConfig) -> Result<Complex64> {
    ensure_finite(x, "x")?;
    chain(x, BranchChoice::default(), cfg)
}

/// Invert `j` and certify the result against the forward evaluator.
pub fn invert_verified(x: Complex64, tol: f64, cfg: &AgmConfig) -> Result<InversionResult> {
    invert_verified_with(x, tol, cfg, &ThetaConfig::default())
}

pub fn invert_verified_with(
    x: Complex64,
    tol: f64,
    cfg: &AgmConfig,
    theta: &ThetaConfig,
) -> Result<InversionResult> {
    ensure_finite(x, "x")?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let scale = 1.0 + x.norm();
    let mut cusps = 0;
    let mut best = f64::INFINITY;
    for branch in BranchChoice::ALL {
        let tau = match chain(x, branch, cfg) {
            Ok(tau) => tau,
            Err(Error::Cusp(_)) => {
                cusps += 1;
                continue;
            }
            Err(_) => continue,
        };
        let Ok(tau) = UpperHalfPoint::from_complex(tau) else {
            continue;
        };
        let Ok((reduced, _)) = reduce(tau) else {
            continue;
        };
        let Ok(j) = j_paper(reduced, theta) else {
            continue;
        };
        let residual = (j - x).norm() / scale;
        if residual <= tol {
            return Ok(InversionResult {
                tau: reduced,
                branch_used: branch,
                residual,
            });
        }
        best = best.min(residual);
    }
    if cusps == BranchChoice::ALL.len() {
        return Err(Error::Cusp(format!("every branch degenerates at x = {x}")));
    }
    Err(Error::NoBranchFound {
        best_residual: best,
    })
}
