//! The modular invariant `j(τ)` and its explicit inverse.
//!
//! `j` is normalized so that `j(i) = 1` and `j((1+√−3)/2) = 0`; the classical
//! Klein normalization is `1728·j` (see [`forward::j_klein`]).
//!
//! The inverse is the composition `k = k0 ∘ k1 ∘ k2` of elementary radicals
//! and a complex arithmetic–geometric mean ([`chain`]). Its output is checked
//! against an independent forward evaluator built on theta nullwerte and the
//! modular lambda function ([`forward`]), after reduction to the standard
//! fundamental domain ([`reduction`]).
//!
//! ```
//! use jinverse::{chain, forward, AgmConfig, ThetaConfig};
//!
//! let x = num_complex::Complex64::new(166.375, 0.0);
//! let r = chain::invert_verified(x, 1e-9, &AgmConfig::default()).unwrap();
//! assert!((r.tau.to_complex() - num_complex::Complex64::new(0.0, 2.0)).norm() < 1e-8);
//! let j = forward::j_paper(r.tau, &ThetaConfig::default()).unwrap();
//! assert!((j - x).norm() < 1e-6);
//! ```

pub mod chain;
mod dd;
mod error;
pub mod forward;
pub mod literal;
pub mod numerics;
pub mod reduction;
pub mod special;
mod surd;
pub mod sweep;
pub mod verify;

pub use chain::{BranchChoice, InversionResult};
pub use error::{Error, Result};
pub use forward::{ThetaConfig, UpperHalfPoint};
pub use numerics::{AgmConfig, ComplexScalar};
pub use reduction::UnimodularMatrix;
pub use special::{ClosedForm, SpecialValueEntry};
