//! Exact solvers for the quantities the disjoint-cycle theorems talk about.
//!
//! All solvers work on 64-bit neighbour masks and refuse graphs above the
//! configured [`Limits`] with [`Error::TooLarge`] instead of answering
//! approximately.

mod cycles;
mod independent;
mod special;
mod triangles;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub use cycles::{chordless_cycles, find_disjoint_cycles, find_disjoint_cycles_with, max_disjoint_cycles};
pub use independent::{independence_number, IndependentSet};
pub use special::{has_two_disjoint_triangles, is_kky_exception, is_sk5, is_wheel};
pub use triangles::{max_triangle_packing, max_triangle_packing_containing, triangle_packing_number};

/// Environment variable that overrides the default size guard.
pub const SIZE_GUARD_ENV: &str = "CYCLEPACK_SIZE_GUARD";

/// Size guard for the exact solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_vertices: usize,
}

impl Limits {
    /// Default guard, which is also the ceiling imposed by the one-word
    /// adjacency representation the solvers use.
    pub const MAX_VERTICES: usize = 64;

    pub fn new(max_vertices: usize) -> Self {
        Self { max_vertices: max_vertices.min(Self::MAX_VERTICES) }
    }

    /// Reads [`SIZE_GUARD_ENV`]; unparsable values fall back to the default.
    pub fn from_env() -> Self {
        std::env::var(SIZE_GUARD_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(Self::new)
            .unwrap_or_default()
    }

    /// Process-wide limits, read from the environment once.
    pub fn global() -> Self {
        static GLOBAL: OnceLock<Limits> = OnceLock::new();
        *GLOBAL.get_or_init(Self::from_env)
    }

    pub(crate) fn masks<'g>(&self, g: &'g Graph) -> Result<&'g [u64]> {
        let n = g.order();
        if n > self.max_vertices {
            return Err(Error::TooLarge { n, limit: self.max_vertices });
        }
        Ok(g.masks().expect("guarded graphs fit in one word"))
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_vertices: Self::MAX_VERTICES }
    }
}

/// Pairwise vertex-disjoint cycles, each given in cyclic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePacking {
    pub cycles: Vec<Vec<Vertex>>,
}

impl CyclePacking {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// True iff every entry is a cycle of `g`, the cycles are pairwise
    /// disjoint, and there are at least `k` of them.
    pub fn verify(&self, g: &Graph, k: usize) -> bool {
        verify_cycle_packing(g, self, k)
    }
}

pub fn verify_cycle_packing(g: &Graph, p: &CyclePacking, k: usize) -> bool {
    let n = g.order();
    let mut used = vec![false; n];
    for cycle in &p.cycles {
        if cycle.len() < 3 {
            return false;
        }
        for &v in cycle {
            if v >= n || used[v] {
                return false;
            }
            used[v] = true;
        }
        let closed = cycle.iter().zip(cycle.iter().cycle().skip(1));
        if !closed.take(cycle.len()).all(|(&a, &b)| g.has_edge(a, b)) {
            return false;
        }
    }
    p.cycles.len() >= k
}

/// A triangle as its sorted vertex triple.
pub type Triangle = [Vertex; 3];

/// Pairwise disjoint triangles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrianglePacking {
    pub triangles: Vec<Triangle>,
}

impl TrianglePacking {
    pub fn new(mut triangles: Vec<Triangle>) -> Self {
        for t in &mut triangles {
            t.sort_unstable();
        }
        Self { triangles }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// `V(T)`, sorted.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.triangles.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.triangles.iter().any(|t| t.contains(&v))
    }

    /// Index of the triangle containing `v`.
    pub fn triangle_of(&self, v: Vertex) -> Option<usize> {
        self.triangles.iter().position(|t| t.contains(&v))
    }

    /// Each triple induces a triangle of `g` and the triples are disjoint.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        let mut used = vec![false; n];
        for &[a, b, c] in &self.triangles {
            if a >= n || b >= n || c >= n || a == b || b == c || a == c {
                return false;
            }
            if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
                return false;
            }
            for v in [a, b, c] {
                if used[v] {
                    return false;
                }
                used[v] = true;
            }
        }
        true
    }

    /// The same packing as a cycle packing.
    pub fn to_cycles(&self) -> CyclePacking {
        CyclePacking { cycles: self.triangles.iter().map(|t| t.to_vec()).collect() }
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Vertices of the 2-core of the subgraph induced by `within`.
pub(crate) fn core_mask(adj: &[u64], within: u64) -> u64 {
    let mut alive = within;
    loop {
        let mut removed = 0u64;
        let mut rest = alive;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & alive).count_ones() <= 1 {
                removed |= bit(v);
            }
        }
        if removed == 0 {
            return alive;
        }
        alive &= !removed;
    }
}

pub(crate) fn mask_to_vertices(mask: u64) -> Vec<Vertex> {
    crate::graph::BitIter(mask).collect()
}
