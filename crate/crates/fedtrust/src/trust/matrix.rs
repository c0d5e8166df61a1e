//! Dense per-round trust state.

use serde::{Deserialize, Serialize};

/// Local (`tau`) and global (`t`) trust for every ordered (trustor, trustee)
/// pair. Off-diagonal local entries default to the uninformative prior 0.5;
/// the global diagonal is pinned to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrustMatrix {
    n: usize,
    local: Vec<f64>,
    global: Vec<f64>,
}

impl TrustMatrix {
    pub fn new(n: usize) -> Self {
        let mut m = Self {
            n,
            local: vec![0.5; n * n],
            global: vec![0.5; n * n],
        };
        for i in 0..n {
            m.local[i * n + i] = 1.0;
            m.global[i * n + i] = 1.0;
        }
        m
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn local(&self, trustor: usize, trustee: usize) -> f64 {
        self.local[trustor * self.n + trustee]
    }

    pub fn global(&self, trustor: usize, trustee: usize) -> f64 {
        self.global[trustor * self.n + trustee]
    }

    pub fn set_local(&mut self, trustor: usize, trustee: usize, tau: f64) {
        debug_assert!(trustor != trustee, "local diagonal is fixed");
        self.local[trustor * self.n + trustee] = tau;
    }

    pub fn set_global(&mut self, trustor: usize, trustee: usize, t: f64) {
        debug_assert!(trustor != trustee, "global diagonal is fixed at 1");
        self.global[trustor * self.n + trustee] = t;
    }

    /// Row of local trust values held by `trustor`.
    pub fn local_row(&self, trustor: usize) -> &[f64] {
        &self.local[trustor * self.n..(trustor + 1) * self.n]
    }

    /// Replace the global slice with `rows` (diagonal entries forced to 1).
    pub fn install_global(&mut self, rows: &[Vec<f64>]) {
        debug_assert_eq!(rows.len(), self.n);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                self.global[i * self.n + j] = if i == j { 1.0 } else { v };
            }
        }
    }

    /// Copy local trust into the global slice (local-only trust mode).
    pub fn mirror_local_to_global(&mut self) {
        self.global.copy_from_slice(&self.local);
        for i in 0..self.n {
            self.global[i * self.n + i] = 1.0;
        }
    }

    /// The local slice as row vectors, the fixed-point initializer t^0.
    pub fn local_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.local_row(i).to_vec()).collect()
    }
}
