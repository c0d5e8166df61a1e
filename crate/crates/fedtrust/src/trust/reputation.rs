//! Beta-reputation evidence counters and local trust.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Geometric discount factors for positive (`rho1`) and negative (`rho2`)
/// evidence. Requires `0 < rho1 < rho2 <= 1`: negatives are forgotten more
/// slowly than positives, and factors above 1 would amplify history instead
/// of fading it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ForgettingFactors {
    rho1: f64,
    rho2: f64,
}

impl ForgettingFactors {
    pub fn new(rho1: f64, rho2: f64) -> Result<Self> {
        if !(rho1 > 0.0 && rho1 < rho2 && rho2 <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "forgetting factors must satisfy 0 < rho1 < rho2 <= 1, got rho1={rho1}, rho2={rho2}"
            )));
        }
        Ok(Self { rho1, rho2 })
    }

    pub fn rho1(&self) -> f64 {
        self.rho1
    }

    pub fn rho2(&self) -> f64 {
        self.rho2
    }
}

impl Default for ForgettingFactors {
    fn default() -> Self {
        Self {
            rho1: 0.9,
            rho2: 0.95,
        }
    }
}

/// Accumulated behavioral evidence about one peer: `r` counts (discounted)
/// benign observations, `s` counts malicious ones. A fresh record is the
/// uninformative Beta(1, 1) prior, i.e. trust 0.5.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct ReputationRecord {
    r: f64,
    s: f64,
}

impl ReputationRecord {
    pub fn new() -> Self {
        Self::default()
    }

    /// Build a record from raw counters; both must be nonnegative and finite.
    pub fn from_counts(r: f64, s: f64) -> Result<Self> {
        if !(r >= 0.0 && s >= 0.0 && r.is_finite() && s.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "reputation counters must be nonnegative, got r={r}, s={s}"
            )));
        }
        Ok(Self { r, s })
    }

    pub fn positive(&self) -> f64 {
        self.r
    }

    pub fn negative(&self) -> f64 {
        self.s
    }

    /// Local trust: the mean of the Beta(r + 1, s + 1) reputation variable,
    /// `(r + 1) / (r + s + 2)`. Always strictly inside (0, 1).
    pub fn expected_trust(&self) -> f64 {
        (self.r + 1.0) / (self.r + self.s + 2.0)
    }

    /// Fold one round of evidence `I` in [0, 1] into the counters:
    /// `r' = rho1 * r + I`, `s' = rho2 * s + 1 - I`.
    pub fn update(&self, evidence: f64, factors: ForgettingFactors) -> Result<Self> {
        if !(0.0..=1.0).contains(&evidence) {
            return Err(Error::InvalidEvidence(evidence));
        }
        Ok(Self {
            r: factors.rho1 * self.r + evidence,
            s: factors.rho2 * self.s + 1.0 - evidence,
        })
    }
}
