//! Behavioral evidence from exchanged model parameters.
//!
//! Two methods turn a round of messages into the instantaneous evidence
//! `I` in {0, 1} consumed by the reputation records:
//!
//! * clustering-based — a message is trusted when its mean squared distance
//!   to the whole received group stays within a multiple of the median
//!   deviation;
//! * distance-based — a message is trusted when it moved toward (or stayed
//!   as close to) the evaluator's model compared with the previous message.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fl::ParamVector;

/// Which evidence method an evaluator runs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "method")]
pub enum EvalMethod {
    /// Deviation-vs-median clustering with multiplier `threshold` (> 0).
    ClusteringBased { threshold: f64 },
    /// Consecutive-message distance comparison.
    DistanceBased,
}

/// Mean squared Euclidean distance from `target` to every vector in
/// `group`. The group is the evaluator's neighborhood including its own
/// vector; the target itself is a member and contributes a zero term.
pub fn clustering_deviation(target: &ParamVector, group: &[&ParamVector]) -> Result<f64> {
    let mut total = 0.0;
    for member in group {
        total += member.squared_distance(target)?;
    }
    Ok(total / group.len() as f64)
}

/// Threshold each deviation against `th * median(deviations)`: evidence 1
/// when `dev_j <= th * median`, else 0.
pub fn clustering_indicator(deviations: &BTreeMap<usize, f64>, th: f64) -> BTreeMap<usize, f64> {
    let cutoff = th * median(deviations.values().copied());
    deviations
        .iter()
        .map(|(&j, &dev)| (j, if dev <= cutoff { 1.0 } else { 0.0 }))
        .collect()
}

/// Evidence 1 when the trustee's current message is at least as close to
/// the evaluator's model as its previous message was:
/// `||own - msg_prev|| - ||own - msg_curr|| >= 0`.
pub fn distance_indicator(
    own_prev: &ParamVector,
    msg_prev: &ParamVector,
    msg_curr: &ParamVector,
) -> Result<f64> {
    let d_prev = own_prev.squared_distance(msg_prev)?.sqrt();
    let d_curr = own_prev.squared_distance(msg_curr)?.sqrt();
    Ok(if d_prev - d_curr >= 0.0 { 1.0 } else { 0.0 })
}

/// Median with the even-count convention: mean of the two middle order
/// statistics.
fn median(values: impl Iterator<Item = f64>) -> f64 {
    let mut sorted: Vec<f64> = values.collect();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("deviations are finite"));
    let n = sorted.len();
    assert!(n > 0, "median of an empty set");
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}
