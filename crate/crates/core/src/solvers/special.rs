//! Recognisers for the exceptional graphs: wheels, `2K_k ∨ K̄_k`, `SK_5`.

use crate::graph::{Graph, Vertex};

/// `t_G >= 2`.
pub fn has_two_disjoint_triangles(g: &Graph) -> bool {
    let tris = g.triangles();
    tris.iter().enumerate().any(|(i, a)| tris[i + 1..].iter().any(|b| a.iter().all(|v| !b.contains(v))))
}

/// `g ≅ K_1 ∨ C_{n-1}` with `n >= 4`. `K_4` counts as a wheel.
pub fn is_wheel(g: &Graph) -> bool {
    let n = g.order();
    if n < 4 {
        return false;
    }
    (0..n).filter(|&h| g.degree(h) == n - 1).any(|hub| {
        let rim: Vec<Vertex> = (0..n).filter(|&v| v != hub).collect();
        let (rim_graph, _) = g.induced(&rim).expect("rim vertices in range");
        is_single_cycle(&rim_graph)
    })
}

fn is_single_cycle(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 || (0..n).any(|v| g.degree(v) != 2) {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                count += 1;
                stack.push(u);
            }
        }
    }
    count == n
}

/// `g ≅ 2K_k ∨ K̄_k`.
///
/// In that graph the co-clique side has degree `2k` and the clique side
/// `2k - 1`, so the degree profile fixes the candidate partition.
pub fn is_kky_exception(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 || n != 3 * k {
        return false;
    }
    let (side, rest): (Vec<Vertex>, Vec<Vertex>) = (0..n).partition(|&v| g.degree(v) == 2 * k);
    if side.len() != k || rest.iter().any(|&v| g.degree(v) != 2 * k - 1) {
        return false;
    }
    let side_independent = side.iter().all(|&a| side.iter().all(|&b| !g.has_edge(a, b)));
    let side_complete = side.iter().all(|&a| rest.iter().all(|&b| g.has_edge(a, b)));
    if !side_independent || !side_complete {
        return false;
    }
    // each rest vertex has k-1 rest neighbours forming a clique with it
    rest.iter().all(|&v| {
        let mut closed: Vec<Vertex> = rest.iter().copied().filter(|&u| g.has_edge(u, v)).collect();
        closed.push(v);
        closed.len() == k && closed.iter().all(|&a| closed.iter().all(|&b| a == b || g.has_edge(a, b)))
    })
}

/// `g ≅ SK_5`: six vertices, one of degree 2 with non-adjacent neighbours,
/// the other five of degree 4.
pub fn is_sk5(g: &Graph) -> bool {
    if g.order() != 6 || g.size() != 11 {
        return false;
    }
    let low: Vec<Vertex> = (0..6).filter(|&v| g.degree(v) == 2).collect();
    if low.len() != 1 || (0..6).any(|v| v != low[0] && g.degree(v) != 4) {
        return false;
    }
    let nbrs: Vec<Vertex> = g.neighbors(low[0]).collect();
    !g.has_edge(nbrs[0], nbrs[1])
}
