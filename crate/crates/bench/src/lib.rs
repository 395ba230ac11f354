//! Fixed inputs for the benchmarks in `benches/`.

use jackal_core::partitions::skew_shapes;
use jackal_core::{enumerate_partitions, Partition, SkewShape};

/// Partitions of `n` with at most `max_len` rows, reverse lexicographic.
pub fn shapes_of(n: usize, max_len: usize) -> Vec<Partition> {
    enumerate_partitions(n, Some(max_len), None)
}

/// Proper skew shapes of outer size exactly `n`.
pub fn skew_of(n: usize) -> Vec<SkewShape> {
    skew_shapes(n)
        .into_iter()
        .filter(|s| s.outer().size() == n && !s.is_straight())
        .collect()
}

/// `(λ, μ, ν)` with `μ` and `ν` two-row, a typical hard case for g.
pub fn g_triples() -> Vec<(Partition, Partition, Partition)> {
    let p = |s: &str| s.parse::<Partition>().expect("partition");
    vec![
        (p("3,2,1"), p("2,1"), p("2,1")),
        (p("4,2,1"), p("2,1"), p("3,1")),
        (p("4,3,1"), p("3,1"), p("3,1")),
    ]
}
