//! Extremal and exceptional constructions.
//!
//! Numbering is fixed per family: clique vertices first, special vertices
//! (subdivision vertex, hub, leaves) last.

use crate::error::{precondition, Result};
use crate::graph::{Graph, Vertex};

fn clique_edges(vertices: std::ops::Range<Vertex>) -> impl Iterator<Item = (Vertex, Vertex)> {
    let end = vertices.end;
    vertices.flat_map(move |u| (u + 1..end).map(move |v| (u, v)))
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, clique_edges(0..n)).expect("clique edges are valid")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(precondition(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The path on `n` vertices.
pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

/// `SK_m`: `K_m` on `0..m` with the edge `01` subdivided by vertex `m`.
pub fn sk(m: usize) -> Result<Graph> {
    if m < 4 {
        return Err(precondition(format!("SK_m needs m >= 4, got {m}")));
    }
    let edges = clique_edges(0..m).filter(|&e| e != (0, 1)).chain([(0, m), (1, m)]);
    Graph::new(m + 1, edges)
}

/// `G_{n,k} = K_{2k-1} ∨ K̄_{n-2k+1}`: the clique on `0..2k-1`, the
/// independent side after it.
pub fn gnk(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 3 * k {
        return Err(precondition(format!("G_(n,k) needs k >= 1 and n >= 3k, got n={n}, k={k}")));
    }
    Ok(complete(2 * k - 1).join(&Graph::empty(n - 2 * k + 1)))
}

/// Clique `X` of size `2k-1` on `0..2k-1`, then `Y`, then `Z` with
/// `|Y| = |Z| = (n-2k+1)/2`; `X` is complete to `Y` and `Y`, `Z` are joined by
/// a perfect matching.
pub fn de_matching(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n % 2 == 0 || n < 3 * k {
        return Err(precondition(format!("the matching construction needs k >= 1 and odd n >= 3k, got n={n}, k={k}")));
    }
    let x = 2 * k - 1;
    let half = (n - x) / 2;
    let ys = x..x + half;
    let mut edges: Vec<(Vertex, Vertex)> = clique_edges(0..x).collect();
    edges.extend((0..x).flat_map(|a| ys.clone().map(move |y| (a, y))));
    edges.extend(ys.map(|y| (y, y + half)));
    Graph::new(n, edges)
}

/// `2K_k ∨ K̄_k`: cliques on `0..k` and `k..2k`, independent side `2k..3k`.
pub fn kky_exception(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(precondition(format!("2K_k ∨ K̄_k is built for k >= 2, got {k}")));
    }
    Ok(complete(k).disjoint_union(&complete(k)).join(&Graph::empty(k)))
}

/// `K_1 ∨ C_{n-1}`: rim `0..n-1`, hub `n-1`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(precondition(format!("a wheel needs at least 4 vertices, got {n}")));
    }
    Ok(cycle(n - 1)?.join(&Graph::empty(1)))
}

/// The `4k`-vertex graph with `|H_k| - |L_k| = 2k` and no `k` disjoint
/// cycles: `K_{3k-1}` on `0..3k-1` whose last `k` vertices `W` are made
/// independent, `x_0 = 3k-1` joined to `W`, and leaves `3k..4k` on `x_0`.
pub fn remark8(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(precondition(format!("the 4k-vertex construction needs k >= 2, got {k}")));
    }
    let f = 3 * k - 1;
    let w = 2 * k - 1..f;
    let x0 = f;
    let mut edges: Vec<(Vertex, Vertex)> =
        clique_edges(0..f).filter(|&(u, v)| !(w.contains(&u) && w.contains(&v))).collect();
    edges.extend(w.map(|u| (u, x0)));
    edges.extend((x0 + 1..4 * k).map(|leaf| (x0, leaf)));
    Graph::new(4 * k, edges)
}
