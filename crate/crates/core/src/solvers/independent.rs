use super::{bit, mask_to_vertices, Limits};
use crate::error::Result;
use crate::graph::{BitIter, Graph, Vertex};

/// `α(G)` together with one maximum independent set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependentSet {
    pub size: usize,
    pub vertices: Vec<Vertex>,
}

pub fn independence_number(g: &Graph) -> Result<IndependentSet> {
    let adj = Limits::global().masks(g)?;
    let mut best = 0u64;
    branch(adj, super::cycles::full_mask(g.order()), 0, &mut best);
    let vertices = mask_to_vertices(best);
    debug_assert!(vertices.iter().all(|&u| vertices.iter().all(|&v| !g.has_edge(u, v))));
    Ok(IndependentSet { size: vertices.len(), vertices })
}

fn branch(adj: &[u64], mut cand: u64, mut chosen: u64, best: &mut u64) {
    // vertices of degree at most one in the candidate graph are always safe to take
    loop {
        let forced = BitIter(cand).find(|&v| (adj[v] & cand).count_ones() <= 1);
        match forced {
            Some(v) => {
                chosen |= bit(v);
                cand &= !adj[v] & !bit(v);
            }
            None => break,
        }
    }
    if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    if cand == 0 {
        *best = chosen;
        return;
    }
    let v = BitIter(cand).max_by_key(|&v| ((adj[v] & cand).count_ones(), std::cmp::Reverse(v))).unwrap();
    branch(adj, cand & !adj[v] & !bit(v), chosen | bit(v), best);
    branch(adj, cand & !bit(v), chosen, best);
}
