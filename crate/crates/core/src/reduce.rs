//! Kernelization for disjoint-cycle packing, with certificate lifting.
//!
//! Exact rules keep the answer unchanged in both directions:
//! R1 deletes a vertex of degree at most one, R2 replaces a degree-2 vertex
//! `x` with non-adjacent neighbours `y, z` by the edge `yz`. Aggressive mode
//! also contracts an edge `xy` with `x ∈ L_k` that lies in no triangle; a
//! packing of the contracted graph always expands to one of the original,
//! but not conversely, so callers fall back to the direct solver.

use std::fmt;

use crate::error::{precondition, Result};
use crate::graph::{Graph, Origin, Vertex, VertexMap};
use crate::solvers::{find_disjoint_cycles, CyclePacking};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Aggressive,
}

/// One reduction step. Vertex ids refer to the graph the step was applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    DeleteLowDegree { v: Vertex },
    /// `x` had neighbours `y, z` and was replaced by the edge `yz`.
    Suppress { x: Vertex, y: Vertex, z: Vertex },
    /// `xy` was contracted into a vertex in `y`'s slot.
    Contract { x: Vertex, y: Vertex },
}

impl Step {
    /// Applies the step, returning the child graph and its map to `parent`.
    pub fn apply(&self, parent: &Graph) -> Result<(Graph, VertexMap)> {
        match *self {
            Step::DeleteLowDegree { v } => parent.delete_vertices(&[v]),
            Step::Suppress { x, y, z } => {
                let (h, map) = parent.delete_vertices(&[x])?;
                let shift = |v: Vertex| if v > x { v - 1 } else { v };
                Ok((h.with_edges([(shift(y), shift(z))])?, map))
            }
            Step::Contract { x, y } => parent.contract(x, y),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::DeleteLowDegree { v } => write!(f, "delete {v}"),
            Step::Suppress { x, y, z } => write!(f, "suppress {x} edge {y} {z}"),
            Step::Contract { x, y } => write!(f, "contract {x} {y}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub step: Step,
    /// Child vertex to parent vertex.
    pub map: VertexMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub original: Graph,
    pub steps: Vec<TraceStep>,
    pub kernel: Graph,
}

impl ReductionTrace {
    /// Re-applies the recorded steps to `g`.
    pub fn replay(&self, g: &Graph) -> Result<Graph> {
        let mut cur = g.clone();
        for s in &self.steps {
            let (next, map) = s.step.apply(&cur)?;
            if map != s.map {
                return Err(precondition(format!("step `{}` renumbers differently on this graph", s.step)));
            }
            cur = next;
        }
        Ok(cur)
    }

    /// For each kernel vertex, the original vertices it stands for.
    pub fn kernel_origins(&self) -> Vec<Vec<Vertex>> {
        let mut sets: Vec<Vec<Vertex>> = (0..self.kernel.order()).map(|v| vec![v]).collect();
        for s in self.steps.iter().rev() {
            for set in &mut sets {
                let mut up: Vec<Vertex> = set.iter().flat_map(|&v| s.map.parents(v)).collect();
                up.sort_unstable();
                *set = up;
            }
        }
        sets
    }
}

/// One step per line.
impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{}", s.step)?;
        }
        Ok(())
    }
}

fn next_step(g: &Graph, k: usize, mode: Mode) -> Option<Step> {
    let n = g.order();
    if let Some(v) = (0..n).find(|&v| g.degree(v) <= 1) {
        return Some(Step::DeleteLowDegree { v });
    }
    for x in (0..n).filter(|&x| g.degree(x) == 2) {
        let mut nb = g.neighbors(x);
        let (y, z) = (nb.next().unwrap(), nb.next().unwrap());
        if !g.has_edge(y, z) {
            return Some(Step::Suppress { x, y, z });
        }
    }
    if mode == Mode::Aggressive {
        for x in (0..n).filter(|&x| g.degree(x) + 2 <= 2 * k) {
            if let Some(y) = g.neighbors(x).find(|&y| g.common_neighbors(x, y).next().is_none()) {
                return Some(Step::Contract { x, y });
            }
        }
    }
    None
}

/// Applies the rules to a fixpoint, lowest vertex first, R1 before R2
/// before contraction.
pub fn kernelize(g: &Graph, k: usize, mode: Mode) -> Result<ReductionTrace> {
    if k == 0 {
        return Err(precondition("k must be at least 1"));
    }
    let mut cur = g.clone();
    let mut steps = Vec::new();
    while let Some(step) = next_step(&cur, k, mode) {
        let (next, map) = step.apply(&cur)?;
        steps.push(TraceStep { step, map });
        cur = next;
    }
    Ok(ReductionTrace { original: g.clone(), steps, kernel: cur })
}

fn lift_cycle(parent: &Graph, s: &TraceStep, cycle: &[Vertex]) -> Vec<Vertex> {
    let len = cycle.len();
    let mut out = Vec::with_capacity(len + 1);
    for (i, &c) in cycle.iter().enumerate() {
        let prev = cycle[(i + len - 1) % len];
        let next = cycle[(i + 1) % len];
        match s.map.origin(c) {
            Origin::Vertex(p) => {
                out.push(p);
                if let Step::Suppress { x, y, z } = s.step {
                    let q = s.map.single(next).unwrap_or(usize::MAX);
                    if (p, q) == (y, z) || (p, q) == (z, y) {
                        out.push(x);
                    }
                }
            }
            Origin::Merged(x, y) => {
                // neighbours are never merged themselves, one contraction per step
                let a = s.map.single(prev).expect("one merged vertex per step");
                let b = s.map.single(next).expect("one merged vertex per step");
                let (ax, ay, bx, by) = (parent.has_edge(a, x), parent.has_edge(a, y), parent.has_edge(b, x), parent.has_edge(b, y));
                if ay && by {
                    out.push(y);
                } else if ax && bx {
                    out.push(x);
                } else if ax && by {
                    out.extend([x, y]);
                } else {
                    debug_assert!(ay && bx);
                    out.extend([y, x]);
                }
            }
        }
    }
    out
}

/// Carries a packing of the kernel back to the original graph, undoing the
/// steps in reverse order.
pub fn lift(trace: &ReductionTrace, p: &CyclePacking) -> Result<CyclePacking> {
    if !p.verify(&trace.kernel, 0) {
        return Err(precondition("packing is not valid in the kernel"));
    }
    let mut graphs = Vec::with_capacity(trace.steps.len());
    let mut cur = trace.original.clone();
    for s in &trace.steps {
        graphs.push(cur.clone());
        cur = s.step.apply(&cur)?.0;
    }
    let mut cycles = p.cycles.clone();
    for (s, parent) in trace.steps.iter().zip(&graphs).rev() {
        cycles = cycles.iter().map(|c| lift_cycle(parent, s, c)).collect();
    }
    let lifted = CyclePacking { cycles };
    assert!(lifted.verify(&trace.original, p.len()), "lifted packing must verify");
    Ok(lifted)
}

/// Edges `uv` with neither `d(u)` nor `d(v)` in `{2k-1, 2k}`.
pub fn hypothesis_edges(g: &Graph, k: usize) -> Vec<(Vertex, Vertex)> {
    let pinned = |v: Vertex| {
        let d = g.degree(v);
        d + 1 == 2 * k || d == 2 * k
    };
    g.edges().filter(|&(u, v)| !pinned(u) && !pinned(v)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub trace: ReductionTrace,
    pub packing: Option<CyclePacking>,
    /// Aggressive mode only: the kernel had no packing and the original
    /// graph was searched directly.
    pub fell_back: bool,
}

/// Kernelizes, solves the kernel and lifts the answer.
pub fn reduce_and_find(g: &Graph, k: usize, mode: Mode) -> Result<Reduced> {
    let trace = kernelize(g, k, mode)?;
    let found = find_disjoint_cycles(&trace.kernel, k)?;
    let (packing, fell_back) = match (found, mode) {
        (Some(p), _) => (Some(lift(&trace, &p)?), false),
        (None, Mode::Exact) => (None, false),
        (None, Mode::Aggressive) => (find_disjoint_cycles(g, k)?, true),
    };
    Ok(Reduced { trace, packing, fell_back })
}

pub fn find_with_reduction(g: &Graph, k: usize, mode: Mode) -> Result<Option<CyclePacking>> {
    Ok(reduce_and_find(g, k, mode)?.packing)
}
