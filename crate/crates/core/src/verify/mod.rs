//! Verification procedures: exhaustive descendant-key oracles, frameproof
//! and perfect-hash-family checks, projection characterizations, and the
//! structural separability check built from forbidden-configuration
//! detectors.

mod oracle;
mod structural;
pub(crate) mod subset;
mod witness;

pub use oracle::{oracle_sc_bar, oracle_sc_exact};
pub use structural::{
    check_fpc, check_fpc2_projection, check_phf, check_projection_intersections,
    check_sc3bar_structural, detect_delta, detect_nabla, separating_row,
};
pub use witness::Witness;

use serde::{Deserialize, Serialize};

/// How a report was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Exhaustive enumeration against the defining condition.
    Oracle,
    /// Index-driven pattern search.
    Structural,
}

/// Enumeration limits and worker count for verification runs.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Maximum number of subsets an oracle may enumerate.
    pub budget: u64,
    /// Worker threads; 1 means fully sequential. Reports are identical
    /// either way.
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            budget: 100_000_000,
            workers: 1,
        }
    }
}

/// Outcome of one verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub property: String,
    pub holds: bool,
    pub method: Method,
    pub witness: Option<Witness>,
    /// Subsets or patterns examined before the verdict.
    pub examined: u64,
    pub elapsed_ms: u64,
}
