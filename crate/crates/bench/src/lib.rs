//! Workloads shared by the criterion benches.

use plethy_core::{partitions_of, polynomial_weights, Partition};

/// Every `(λ, μ)` cell with `λ ∈ Λ(d, n)` and `μ ⊢ n`.
pub fn restriction_cells(n: usize, d: usize) -> Vec<(Partition, Partition)> {
    let mus = partitions_of(n);
    polynomial_weights(d, n)
        .into_iter()
        .flat_map(|lambda| mus.iter().map(move |mu| (lambda.clone(), mu.clone())))
        .collect()
}
