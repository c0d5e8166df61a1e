//! Global trust propagation over the communication graph.
//!
//! A trustor refines its opinion of a trustee by averaging its neighbors'
//! previous opinions, weighted by how much it trusts each neighbor (the
//! trustee itself is excluded from the averaging set). Iterating this step
//! drives every column toward a consensus opinion about that trustee.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::trust::CommGraph;

/// Normalized opinion weights `w_il = tau_il / sum tau_il` over
/// `neighbors \ {excluded}`, in ascending node order.
///
/// Fails with [`Error::EmptyNeighborhood`] when no neighbor remains; callers
/// fall back to first-hand trust in that case.
pub fn trust_weights(
    local_row: &[f64],
    neighbors: &BTreeSet<usize>,
    excluded: Option<usize>,
) -> Result<Vec<(usize, f64)>> {
    let mut total = 0.0;
    let mut kept = Vec::with_capacity(neighbors.len());
    for &l in neighbors {
        if Some(l) == excluded {
            continue;
        }
        let tau = local_row[l];
        total += tau;
        kept.push((l, tau));
    }
    if kept.is_empty() {
        return Err(Error::EmptyNeighborhood);
    }
    for entry in &mut kept {
        entry.1 /= total;
    }
    Ok(kept)
}

/// One synchronous update of the global slice: for every pair `(i, j)` with
/// `i != j`, the new `t_ij` is the trust-weighted average of the neighbors'
/// previous opinions `t_lj` over `l` in `N_i \ {j}`. Diagonal entries stay 1,
/// and pairs with no remaining neighbor fall back to first-hand `tau_ij`.
pub fn global_trust_step(
    prev: &[Vec<f64>],
    local: &[Vec<f64>],
    graph: &CommGraph,
) -> Vec<Vec<f64>> {
    let n = graph.node_count();
    let mut next = vec![vec![0.0; n]; n];
    for i in 0..n {
        let neighbors = graph.neighbors(i);
        for j in 0..n {
            if i == j {
                next[i][j] = 1.0;
                continue;
            }
            next[i][j] = match trust_weights(&local[i], neighbors, Some(j)) {
                Ok(weights) => weights.iter().map(|&(l, w)| w * prev[l][j]).sum(),
                Err(Error::EmptyNeighborhood) => local[i][j],
                Err(_) => unreachable!("trust_weights only fails on empty neighborhoods"),
            };
        }
    }
    next
}

/// Result of iterating [`global_trust_step`] to a fixed point.
#[derive(Debug, Clone, PartialEq)]
pub struct FixedPoint {
    pub global: Vec<Vec<f64>>,
    pub iterations: usize,
    pub converged: bool,
}

/// Iterate the global trust recursion from `t^0 = tau` until the largest
/// entry change drops below `tol` or `max_iter` step evaluations pass.
///
/// Each iterate is averaged with its predecessor. The averaged map has the
/// same fixed points as the raw step, and wherever the raw iteration
/// converges both reach the same limit; the averaging additionally breaks
/// the two-cycles the raw synchronous update falls into on bipartite-like
/// neighborhoods (e.g. a 3-cycle, where `N_i \ {j}` is a single node), so
/// the iteration settles on every connected graph.
pub fn global_trust_fixed_point(
    local: &[Vec<f64>],
    graph: &CommGraph,
    max_iter: usize,
    tol: f64,
) -> FixedPoint {
    let n = graph.node_count();
    let mut current: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row = local[i].clone();
            row[i] = 1.0;
            row
        })
        .collect();

    for iteration in 1..=max_iter {
        let stepped = global_trust_step(&current, local, graph);
        let mut delta: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let next = 0.5 * (current[i][j] + stepped[i][j]);
                delta = delta.max((next - current[i][j]).abs());
                current[i][j] = next;
            }
        }
        if delta < tol {
            return FixedPoint {
                global: current,
                iterations: iteration,
                converged: true,
            };
        }
    }
    FixedPoint {
        global: current,
        iterations: max_iter,
        converged: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uniform_local(n: usize, tau: f64) -> Vec<Vec<f64>> {
        let mut m = vec![vec![tau; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        m
    }

    #[test]
    fn weights_form_probability_vector() {
        let row = vec![1.0, 0.6, 0.2, 0.9];
        let neighbors: BTreeSet<usize> = [1, 2, 3].into_iter().collect();
        let w = trust_weights(&row, &neighbors, Some(3)).unwrap();
        assert_eq!(w.len(), 2);
        assert!((w[0].1 - 0.75).abs() < 1e-12);
        assert!((w[1].1 - 0.25).abs() < 1e-12);
        let sum: f64 = w.iter().map(|&(_, x)| x).sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn weights_symmetric_and_single() {
        let row = vec![0.0, 0.5, 0.5];
        let neighbors: BTreeSet<usize> = [1, 2].into_iter().collect();
        let w = trust_weights(&row, &neighbors, None).unwrap();
        assert!((w[0].1 - 0.5).abs() < 1e-12 && (w[1].1 - 0.5).abs() < 1e-12);

        let neighbors: BTreeSet<usize> = [1].into_iter().collect();
        let w = trust_weights(&[0.0, 0.3], &neighbors, None).unwrap();
        assert_eq!(w, vec![(1, 1.0)]);
    }

    #[test]
    fn weights_empty_after_exclusion() {
        let neighbors: BTreeSet<usize> = [1].into_iter().collect();
        assert!(matches!(
            trust_weights(&[0.0, 0.3], &neighbors, Some(1)),
            Err(Error::EmptyNeighborhood)
        ));
    }

    #[test]
    fn weights_invariant_under_row_scaling() {
        let row = vec![0.0, 0.12, 0.4, 0.31];
        let scaled: Vec<f64> = row.iter().map(|x| x * 7.0).collect();
        let neighbors: BTreeSet<usize> = [1, 2, 3].into_iter().collect();
        let a = trust_weights(&row, &neighbors, None).unwrap();
        let b = trust_weights(&scaled, &neighbors, None).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x.1 - y.1).abs() < 1e-12);
        }
    }

    #[test]
    fn step_keeps_diagonal_and_constant_fields() {
        let graph = CommGraph::complete(4);
        let local = uniform_local(4, 0.7);
        let prev = uniform_local(4, 0.3);
        let next = global_trust_step(&prev, &local, &graph);
        for i in 0..4 {
            assert_eq!(next[i][i], 1.0);
            for j in 0..4 {
                if i != j {
                    // Convex combination of a constant field stays constant.
                    assert!((next[i][j] - 0.3).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn step_matches_brute_force_on_three_node_fixture() {
        // Complete 3-node graph, uniform tau. For each (i, j) the step
        // averages prev[l][j] over the single l in N_i \ {j}.
        let graph = CommGraph::complete(3);
        let local = uniform_local(3, 0.5);
        let prev = vec![
            vec![1.0, 0.4, 1.0],
            vec![0.4, 1.0, 0.4],
            vec![1.0, 0.4, 1.0],
        ];
        let next = global_trust_step(&prev, &local, &graph);
        // Independent brute-force evaluation of the convex combination.
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let others: Vec<usize> =
                    (0..3).filter(|&l| l != i && l != j).collect();
                let expect: f64 =
                    others.iter().map(|&l| prev[l][j]).sum::<f64>() / others.len() as f64;
                assert!((next[i][j] - expect).abs() < 1e-12, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn step_is_monotone_in_prev() {
        let graph = CommGraph::complete(4);
        let local = uniform_local(4, 0.6);
        let prev = uniform_local(4, 0.2);
        let mut bumped = prev.clone();
        bumped[2][1] = 0.9;
        let base = global_trust_step(&prev, &local, &graph);
        let raised = global_trust_step(&bumped, &local, &graph);
        for i in 0..4 {
            for j in 0..4 {
                assert!(raised[i][j] >= base[i][j] - 1e-15);
                assert!((0.0..=1.0).contains(&raised[i][j]));
            }
        }
    }

    #[test]
    fn fixed_point_on_fallback_only_graph_is_one_step() {
        // Two nodes: each N_i \ {j} is empty, so every entry falls back to
        // first-hand tau and the iteration is stationary immediately.
        let graph = CommGraph::complete(2);
        let local = vec![vec![1.0, 0.8], vec![0.3, 1.0]];
        let fp = global_trust_fixed_point(&local, &graph, 50, 1e-9);
        assert!(fp.converged);
        assert_eq!(fp.iterations, 1);
        assert_eq!(fp.global, global_trust_step(&local, &local, &graph));
        assert!((fp.global[0][1] - 0.8).abs() < 1e-12);
        assert!((fp.global[1][0] - 0.3).abs() < 1e-12);
    }

    #[test]
    fn fixed_point_preserves_uniform_field() {
        let graph = CommGraph::complete(5);
        let local = uniform_local(5, 0.42);
        let fp = global_trust_fixed_point(&local, &graph, 50, 1e-10);
        assert!(fp.converged);
        for i in 0..5 {
            for j in 0..5 {
                let expect = if i == j { 1.0 } else { 0.42 };
                assert!((fp.global[i][j] - expect).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn fixed_point_settles_on_three_cycle() {
        // On K3 the raw synchronous step endlessly swaps opinions between
        // the two non-trustee nodes; the averaged iteration must settle.
        let graph = CommGraph::complete(3);
        let mut local = uniform_local(3, 0.5);
        local[0][2] = 0.9;
        local[1][2] = 0.1;
        let fp = global_trust_fixed_point(&local, &graph, 200, 1e-10);
        assert!(fp.converged);
        // Both opinions about node 2 settle on the average of the seeds.
        assert!((fp.global[0][2] - 0.5).abs() < 1e-8);
        assert!((fp.global[1][2] - 0.5).abs() < 1e-8);
    }
}
