//! Benchmark inputs shared by the criterion targets.

use cyclepack::{families, Graph};

/// A fixed list of named instances covering dense, sparse and extremal shapes.
pub fn instances() -> Vec<(&'static str, Graph, usize)> {
    vec![
        ("gnk_12_3", families::gnk(12, 3).expect("valid parameters"), 3),
        ("sk_8", families::sk(8).expect("valid parameters"), 3),
        ("k_3x4", families::complete(4).disjoint_union(&families::complete(4)).disjoint_union(&families::complete(4)), 3),
        ("remark8_3", families::remark8(3).expect("valid parameters"), 3),
        ("wheel_12", families::wheel(12).expect("valid parameters"), 2),
        ("grid_ring_16", ring_with_chords(16), 4),
    ]
}

/// A cycle on `n` vertices with chords `i, i+3` at every even `i`.
pub fn ring_with_chords(n: usize) -> Graph {
    let ring = (0..n).map(|i| (i, (i + 1) % n));
    let chords = (0..n).step_by(2).map(|i| (i, (i + 3) % n));
    Graph::new(n, ring.chain(chords)).expect("valid edges")
}
