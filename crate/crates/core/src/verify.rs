//! Table verification: forward `j` against each closed form, and the inverse
//! round trip back to the tabulated `τ`.

use crate::chain::{invert_verified_with, BranchChoice};
use crate::forward::{j_paper, ThetaConfig, UpperHalfPoint};
use crate::numerics::AgmConfig;
use crate::reduction::is_equivalent;
use crate::special::{check_ascending, evaluate_entry, table};

#[derive(Debug, Clone)]
pub struct RowReport {
    pub order_index: usize,
    pub label: String,
    pub tau: UpperHalfPoint,
    pub expected: f64,
    /// Real part of the forward `j(τ)`; the imaginary part is folded into `rel_err`.
    pub forward: f64,
    /// `|j(τ) − expected| / (1 + |expected|)`, or `∞` if the forward evaluation failed.
    pub rel_err: f64,
    pub roundtrip_tau: Option<UpperHalfPoint>,
    pub roundtrip_branch: Option<BranchChoice>,
    pub roundtrip_ok: bool,
}

impl RowReport {
    pub fn passed(&self, tol: f64) -> bool {
        self.rel_err <= tol && self.roundtrip_ok
    }
}

#[derive(Debug, Clone)]
pub struct TableReport {
    pub tol: f64,
    pub rows: Vec<RowReport>,
    pub ascending: bool,
}

impl TableReport {
    pub fn failed_rows(&self) -> usize {
        self.rows.iter().filter(|r| !r.passed(self.tol)).count()
    }

    pub fn passed(&self) -> bool {
        self.ascending && self.failed_rows() == 0
    }
}

/// Check every table row at `tol` (forward relative error, inverse residual and
/// equivalence of the recovered point).
pub fn verify_table(tol: f64, agm: &AgmConfig, theta: &ThetaConfig) -> TableReport {
    let entries = table();
    let rows = entries
        .iter()
        .map(|e| {
            let expected = evaluate_entry(e);
            let (forward, rel_err) = match j_paper(e.tau, theta) {
                Ok(j) => {
                    let err = (j - expected).norm() / (1.0 + expected.abs());
                    (j.re, err)
                }
                Err(_) => (f64::NAN, f64::INFINITY),
            };
            let inverse = invert_verified_with(expected.into(), tol, agm, theta).ok();
            let roundtrip_ok = inverse
                .map(|r| is_equivalent(r.tau, e.tau, tol, theta).unwrap_or(false))
                .unwrap_or(false);
            RowReport {
                order_index: e.order_index,
                label: e.label.clone(),
                tau: e.tau,
                expected,
                forward,
                rel_err,
                roundtrip_tau: inverse.map(|r| r.tau),
                roundtrip_branch: inverse.map(|r| r.branch_used),
                roundtrip_ok,
            }
        })
        .collect();
    TableReport {
        tol,
        rows,
        ascending: check_ascending(&entries),
    }
}
