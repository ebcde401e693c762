//! Triangle exchange over a packing of disjoint triangles.
//!
//! Given a packing `T` and a distinguished triangle `T_0`, the auxiliary
//! digraph has an edge `T -> U` whenever some vertex of `T` is adjacent to
//! all three vertices of `U` (that vertex *witnesses* the edge). `R` is the
//! set of triangles from which `T_0` is reachable and `B` the set of vertices
//! outside the packing that are fully joined to `T_0`.
//!
//! Rotating along a path `T_j -> ... -> T_0` with a fresh vertex `v` fully
//! joined to `T_j` shifts every witness one triangle forward: the packing
//! keeps its size and `T_0`, and the witness of the last hop is pushed out
//! of the packing into `B`.

use std::collections::VecDeque;

use crate::error::{precondition, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solvers::{max_triangle_packing_containing, Triangle, TrianglePacking};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuxEdge {
    pub to: usize,
    pub witness: Vertex,
}

/// Digraph over packing indices, each edge carrying its lowest-id witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxDigraph {
    pub succ: Vec<Vec<AuxEdge>>,
}

impl AuxDigraph {
    pub fn node_count(&self) -> usize {
        self.succ.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn witness(&self, from: usize, to: usize) -> Option<Vertex> {
        self.succ.get(from)?.iter().find(|e| e.to == to).map(|e| e.witness)
    }

    /// Nodes from which `target` is reachable, `target` included, sorted.
    pub fn reaching(&self, target: usize) -> Vec<usize> {
        let dist = self.distances_to(target);
        (0..self.succ.len()).filter(|&t| dist[t] != usize::MAX).collect()
    }

    /// Length of a shortest path from each node to `target`.
    fn distances_to(&self, target: usize) -> Vec<usize> {
        let n = self.succ.len();
        let mut pred = vec![Vec::new(); n];
        for (from, edges) in self.succ.iter().enumerate() {
            for e in edges {
                pred[e.to].push(from);
            }
        }
        let mut dist = vec![usize::MAX; n];
        dist[target] = 0;
        let mut queue = VecDeque::from([target]);
        while let Some(u) = queue.pop_front() {
            for &p in &pred[u] {
                if dist[p] == usize::MAX {
                    dist[p] = dist[u] + 1;
                    queue.push_back(p);
                }
            }
        }
        dist
    }

    /// A shortest path `from -> ... -> target`, preferring lower indices.
    pub fn path_to(&self, from: usize, target: usize) -> Option<Vec<usize>> {
        let dist = self.distances_to(target);
        if dist[from] == usize::MAX {
            return None;
        }
        let mut path = vec![from];
        let mut cur = from;
        while cur != target {
            cur = self.succ[cur].iter().map(|e| e.to).find(|&t| dist[t].checked_add(1) == Some(dist[cur])).expect("distance decreases along a shortest path");
            path.push(cur);
        }
        Some(path)
    }
}

fn fully_joined(g: &Graph, v: Vertex, set: &[Vertex]) -> bool {
    set.iter().all(|&u| g.has_edge(v, u))
}

fn check_packing(g: &Graph, p: &TrianglePacking) -> Result<()> {
    if p.verify(g) {
        Ok(())
    } else {
        Err(precondition("packing is not a set of disjoint triangles of the graph"))
    }
}

/// `D(T)`: an edge `T -> U` iff some `v` in `T` has `‖v, U‖ = 3`.
pub fn build_aux_digraph(g: &Graph, p: &TrianglePacking) -> Result<AuxDigraph> {
    check_packing(g, p)?;
    Ok(aux_digraph(g, p))
}

fn aux_digraph(g: &Graph, p: &TrianglePacking) -> AuxDigraph {
    let succ = p
        .triangles
        .iter()
        .enumerate()
        .map(|(i, from)| {
            p.triangles
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .filter_map(|(j, to)| from.iter().copied().find(|&v| fully_joined(g, v, to)).map(|witness| AuxEdge { to: j, witness }))
                .collect()
        })
        .collect();
    AuxDigraph { succ }
}

/// `B`: vertices outside the packing adjacent to all of triangle `t0`.
pub fn b_set(g: &Graph, p: &TrianglePacking, t0: usize) -> Result<Vec<Vertex>> {
    let tri = p.triangles.get(t0).ok_or_else(|| precondition(format!("triangle index {t0} not in the packing")))?;
    Ok(b_of(g, p, tri))
}

fn b_of(g: &Graph, p: &TrianglePacking, tri: &Triangle) -> Vec<Vertex> {
    let covered = p.vertices();
    (0..g.order()).filter(|v| covered.binary_search(v).is_err() && fully_joined(g, *v, tri)).collect()
}

/// The outcome of one rotation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    pub packing: TrianglePacking,
    /// The witness of the last hop, now outside the packing and in `B`.
    pub released: Vertex,
    /// Witnesses `v_j, ..., v_1`, one per hop in path order.
    pub witnesses: Vec<Vertex>,
}

/// Rotates `p` along `path = [T_j, ..., T_1, T_0]` (packing indices) using a
/// vertex `v` outside `V(p) ∪ B` with `‖v, T_j‖ = 3`.
pub fn rotate_along_path(g: &Graph, p: &TrianglePacking, path: &[usize], v: Vertex) -> Result<Rotation> {
    check_packing(g, p)?;
    g.check_vertex(v)?;
    if path.len() < 2 {
        return Err(precondition("rotation path needs at least one hop"));
    }
    if let Some(&bad) = path.iter().find(|&&t| t >= p.len()) {
        return Err(precondition(format!("path index {bad} not in the packing")));
    }
    let mut sorted = path.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != path.len() {
        return Err(precondition("rotation path repeats a triangle"));
    }
    let t0 = *path.last().unwrap();
    if p.contains_vertex(v) {
        return Err(precondition(format!("v={v} already lies in the packing")));
    }
    let b_before = b_of(g, p, &p.triangles[t0]);
    if b_before.contains(&v) {
        return Err(precondition(format!("v={v} is already in B")));
    }
    if !fully_joined(g, v, &p.triangles[path[0]]) {
        return Err(precondition(format!("‖v, T_j‖ != 3 for v={v} and T_j={:?}", p.triangles[path[0]])));
    }
    let digraph = aux_digraph(g, p);
    let mut witnesses = Vec::with_capacity(path.len() - 1);
    for hop in path.windows(2) {
        let w = digraph.witness(hop[0], hop[1]).ok_or_else(|| {
            precondition(format!("no edge {:?} -> {:?} in the auxiliary digraph", p.triangles[hop[0]], p.triangles[hop[1]]))
        })?;
        witnesses.push(w);
    }

    // path[q] loses witnesses[q] and gains the vertex pushed in from behind
    let mut next = p.clone();
    let mut incoming = v;
    for (q, &t) in path[..path.len() - 1].iter().enumerate() {
        let tri = &mut next.triangles[t];
        let slot = tri.iter().position(|&u| u == witnesses[q]).expect("witness lies in its triangle");
        tri[slot] = incoming;
        tri.sort_unstable();
        incoming = witnesses[q];
    }
    let released = incoming;

    let rotation = Rotation { packing: next, released, witnesses };
    check_rotation(g, p, t0, v, &b_before, &rotation)?;
    Ok(rotation)
}

fn check_rotation(g: &Graph, before: &TrianglePacking, t0: usize, v: Vertex, b_before: &[Vertex], r: &Rotation) -> Result<()> {
    let after = &r.packing;
    let fail = |what: &str| Err(Error::Precondition(format!("rotation postcondition failed: {what}")));
    if !after.verify(g) || after.len() != before.len() {
        return fail("packing size or validity");
    }
    if after.triangles[t0] != before.triangles[t0] {
        return fail("T_0 retained");
    }
    let mut expected: Vec<Vertex> = before.vertices().into_iter().filter(|&u| u != r.released).chain([v]).collect();
    expected.sort_unstable();
    if after.vertices() != expected {
        return fail("V(T') = V(T) + v - v_1");
    }
    let mut b_expected = b_before.to_vec();
    b_expected.push(r.released);
    b_expected.sort_unstable();
    if b_of(g, after, &after.triangles[t0]) != b_expected {
        return fail("B(T') = B + v_1");
    }
    Ok(())
}

/// A triangle packing with a distinguished vertex `x` and its derived
/// exchange structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeState {
    pub host: Graph,
    pub packing: TrianglePacking,
    pub x: Vertex,
    /// Index of `T_0`, the triangle containing `x`.
    pub t0: usize,
    pub digraph: AuxDigraph,
    /// `R`: indices of triangles from which `T_0` is reachable.
    pub reach: Vec<usize>,
    pub b: Vec<Vertex>,
}

/// Result of [`grow_packing_with_vertex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Growth {
    Grown(Box<ExchangeState>),
    /// `x` lies in no triangle.
    NoTriangle,
}

impl ExchangeState {
    pub fn new(host: &Graph, packing: TrianglePacking, x: Vertex) -> Result<Self> {
        check_packing(host, &packing)?;
        let t0 = packing.triangle_of(x).ok_or_else(|| precondition(format!("x={x} is not covered by the packing")))?;
        let digraph = aux_digraph(host, &packing);
        let reach = digraph.reaching(t0);
        let b = b_of(host, &packing, &packing.triangles[t0]);
        Ok(Self { host: host.clone(), packing, x, t0, digraph, reach, b })
    }

    pub fn t0_triangle(&self) -> Triangle {
        self.packing.triangles[self.t0]
    }

    /// `V(T_0) ∪ B`, sorted.
    pub fn star_vertices(&self) -> Vec<Vertex> {
        let mut out: Vec<Vertex> = self.t0_triangle().iter().copied().chain(self.b.iter().copied()).collect();
        out.sort_unstable();
        out
    }

    /// The lowest vertex `v` outside `V(T) ∪ B` fully joined to some
    /// triangle of `R`, with a shortest path from that triangle to `T_0`.
    pub fn rotation_opportunity(&self) -> Option<(Vec<usize>, Vertex)> {
        let covered = self.packing.vertices();
        let dist_order: Vec<(usize, usize)> = {
            let mut v: Vec<(usize, usize)> = self
                .reach
                .iter()
                .map(|&t| (self.digraph.path_to(t, self.t0).map_or(usize::MAX, |p| p.len()), t))
                .collect();
            v.sort_unstable();
            v
        };
        for v in 0..self.host.order() {
            if covered.binary_search(&v).is_ok() || self.b.contains(&v) {
                continue;
            }
            for &(_, t) in &dist_order {
                if fully_joined(&self.host, v, &self.packing.triangles[t]) {
                    let path = self.digraph.path_to(t, self.t0).expect("t is in R");
                    return Some((path, v));
                }
            }
        }
        None
    }

    pub fn rotate(&self, path: &[usize], v: Vertex) -> Result<(ExchangeState, Rotation)> {
        if path.last() != Some(&self.t0) {
            return Err(precondition("rotation path must end at T_0"));
        }
        let rotation = rotate_along_path(&self.host, &self.packing, path, v)?;
        let next = ExchangeState::new(&self.host, rotation.packing.clone(), self.x)?;
        Ok((next, rotation))
    }

    /// Re-roots `T_0 = x y z` at `x y u` for some `u` in `B` when that
    /// strictly enlarges `B`.
    pub fn reroot_opportunity(&self) -> Option<ExchangeState> {
        let t0 = self.t0_triangle();
        for &w in t0.iter().filter(|&&w| w != self.x) {
            for &u in &self.b {
                let mut packing = self.packing.clone();
                let tri = &mut packing.triangles[self.t0];
                let slot = tri.iter().position(|&a| a == w).unwrap();
                tri[slot] = u;
                tri.sort_unstable();
                let next = ExchangeState::new(&self.host, packing, self.x).expect("re-rooted packing is valid");
                if next.b.len() > self.b.len() {
                    return Some(next);
                }
            }
        }
        None
    }

    /// Applies rotations, then strictly improving re-roots, until neither
    /// applies. Every step grows `|B|`, so at most `n` steps run.
    pub fn maximize_b(self) -> ExchangeState {
        let mut state = self;
        loop {
            if let Some((path, v)) = state.rotation_opportunity() {
                state = state.rotate(&path, v).expect("opportunities satisfy the rotation preconditions").0;
            } else if let Some(next) = state.reroot_opportunity() {
                state = next;
            } else {
                return state;
            }
        }
    }

    /// Checks the structural invariants of the state against its host.
    pub fn is_consistent(&self) -> bool {
        let t0 = self.t0_triangle();
        self.packing.verify(&self.host)
            && t0.contains(&self.x)
            && self.reach.contains(&self.t0)
            && self.digraph == aux_digraph(&self.host, &self.packing)
            && self.digraph.succ.iter().enumerate().all(|(from, edges)| {
                edges.iter().all(|e| {
                    e.to != from
                        && self.packing.triangles[from].contains(&e.witness)
                        && fully_joined(&self.host, e.witness, &self.packing.triangles[e.to])
                })
            })
            && self.b.iter().all(|&b| !self.packing.contains_vertex(b) && fully_joined(&self.host, b, &t0))
    }
}

/// Packs as many disjoint triangles as possible subject to covering `x`,
/// then enlarges `B` by rotations and re-rooting until stable.
pub fn grow_packing_with_vertex(g: &Graph, x: Vertex) -> Result<Growth> {
    let Some(packing) = max_triangle_packing_containing(g, x)? else {
        return Ok(Growth::NoTriangle);
    };
    let state = ExchangeState::new(g, packing, x)?.maximize_b();
    debug_assert!(state.is_consistent());
    Ok(Growth::Grown(Box::new(state)))
}

/// A node of `D*`: either `T* = G[T_0 ∪ B]` or a packing triangle other than `T_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StarNode {
    Star(Vec<Vertex>),
    Triangle(usize),
}

/// `D*` and `R*`. Node 0 is always `T*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarReach {
    pub nodes: Vec<StarNode>,
    pub digraph: AuxDigraph,
    /// `R*`: node indices from which `T*` is reachable (node 0 included).
    pub reach: Vec<usize>,
}

impl StarReach {
    pub fn r_star(&self) -> usize {
        self.reach.len()
    }
}

/// Edges `T -> U` of `D*` exist when some `v` in `T` has `‖v, U‖ >= 3`.
pub fn star_reach(g: &Graph, s: &ExchangeState) -> Result<StarReach> {
    if &s.host != g {
        return Err(precondition("exchange state belongs to a different graph"));
    }
    let mut nodes = vec![StarNode::Star(s.star_vertices())];
    let mut members = vec![s.star_vertices()];
    for (i, t) in s.packing.triangles.iter().enumerate() {
        if i != s.t0 {
            nodes.push(StarNode::Triangle(i));
            members.push(t.to_vec());
        }
    }
    let succ = members
        .iter()
        .enumerate()
        .map(|(i, from)| {
            members
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .filter_map(|(j, to)| {
                    from.iter().copied().find(|&v| g.count_adjacent(v, to) >= 3).map(|witness| AuxEdge { to: j, witness })
                })
                .collect()
        })
        .collect();
    let digraph = AuxDigraph { succ };
    let reach = digraph.reaching(0);
    Ok(StarReach { nodes, digraph, reach })
}
