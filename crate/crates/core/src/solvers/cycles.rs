use std::collections::HashSet;

use super::{bit, core_mask, CyclePacking, Limits};
use crate::error::{precondition, Result};
use crate::graph::{BitIter, Graph, Vertex};

/// All chordless (induced) cycles of `g`, each starting at its smallest
/// vertex, shortest first.
pub fn chordless_cycles(g: &Graph) -> Result<Vec<Vec<Vertex>>> {
    let adj = Limits::global().masks(g)?;
    let all = full_mask(g.order());
    Ok(chordless_cycle_masks(adj, all).into_iter().map(|c| cycle_order(adj, c)).collect())
}

/// Finds `k` vertex-disjoint cycles or proves there are none, using the
/// process-wide [`Limits`].
pub fn find_disjoint_cycles(g: &Graph, k: usize) -> Result<Option<CyclePacking>> {
    find_disjoint_cycles_with(g, k, Limits::global())
}

pub fn find_disjoint_cycles_with(g: &Graph, k: usize, limits: Limits) -> Result<Option<CyclePacking>> {
    if k == 0 {
        return Err(precondition("find_disjoint_cycles needs k >= 1"));
    }
    let adj = limits.masks(g)?;
    let found = Packer::new(adj, full_mask(g.order())).solve(k);
    let packing = found.map(|masks| CyclePacking { cycles: masks.into_iter().map(|c| cycle_order(adj, c)).collect() });
    if let Some(p) = &packing {
        assert!(p.verify(g, k), "cycle solver produced an invalid certificate");
    }
    Ok(packing)
}

/// A maximum set of disjoint cycles.
pub fn max_disjoint_cycles(g: &Graph) -> Result<CyclePacking> {
    let adj = Limits::global().masks(g)?;
    let packer = Packer::new(adj, full_mask(g.order()));
    let mut best = Vec::new();
    for k in 1..=g.order() / 3 {
        match packer.clone().solve(k) {
            Some(found) => best = found,
            None => break,
        }
    }
    Ok(CyclePacking { cycles: best.into_iter().map(|c| cycle_order(adj, c)).collect() })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn above(s: usize) -> u64 {
    if s >= 63 {
        0
    } else {
        u64::MAX << (s + 1)
    }
}

/// Chordless cycles inside `within`, as vertex masks sorted by length.
pub(crate) fn chordless_cycle_masks(adj: &[u64], within: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for s in BitIter(within) {
        let allowed = within & above(s);
        for v1 in BitIter(adj[s] & allowed) {
            extend(adj, adj[s], v1, v1, bit(s) | bit(v1), 0, allowed, &mut out);
        }
    }
    out.sort_by_key(|&c| (c.count_ones(), c));
    out
}

// The path runs s, v1, ..., last. `blocked` holds the neighbourhoods of the
// interior vertices v1..v_{j-1}; a new vertex next to s closes the cycle.
#[allow(clippy::too_many_arguments)]
fn extend(adj: &[u64], start_nbrs: u64, v1: usize, last: usize, path: u64, blocked: u64, allowed: u64, out: &mut Vec<u64>) {
    for w in BitIter(adj[last] & allowed & !path & !blocked) {
        if start_nbrs & bit(w) != 0 {
            if v1 < w {
                out.push(path | bit(w));
            }
        } else {
            extend(adj, start_nbrs, v1, w, path | bit(w), blocked | adj[last], allowed, out);
        }
    }
}

/// Lists the vertices of an induced cycle in cyclic order from its smallest vertex.
pub(crate) fn cycle_order(adj: &[u64], cycle: u64) -> Vec<Vertex> {
    let start = cycle.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = (adj[start] & cycle).trailing_zeros() as usize;
    while cur != start {
        order.push(cur);
        let next = (adj[cur] & cycle & !bit(prev)).trailing_zeros() as usize;
        prev = cur;
        cur = next;
    }
    order
}

/// Branch and bound over chordless cycles: the lowest vertex `v` of the
/// current 2-core is either covered by a chordless cycle through it, or
/// dropped.
#[derive(Clone)]
struct Packer<'a> {
    adj: &'a [u64],
    cycles: Vec<u64>,
    through: Vec<Vec<usize>>,
    failed: HashSet<(u64, usize)>,
}

impl<'a> Packer<'a> {
    fn new(adj: &'a [u64], within: u64) -> Self {
        let core = core_mask(adj, within);
        let cycles = chordless_cycle_masks(adj, core);
        let mut through = vec![Vec::new(); adj.len()];
        for (i, &c) in cycles.iter().enumerate() {
            for v in BitIter(c) {
                through[v].push(i);
            }
        }
        Self { adj, cycles, through, failed: HashSet::new() }
    }

    fn solve(mut self, k: usize) -> Option<Vec<u64>> {
        if let Some(greedy) = self.greedy(k) {
            return Some(greedy);
        }
        let all = self.cycles.iter().fold(0, |acc, &c| acc | c);
        let mut chosen = Vec::new();
        self.search(all, k, &mut chosen).then_some(chosen)
    }

    fn greedy(&self, k: usize) -> Option<Vec<u64>> {
        let mut used = 0u64;
        let mut picked = Vec::new();
        for &c in &self.cycles {
            if c & used == 0 {
                used |= c;
                picked.push(c);
                if picked.len() == k {
                    return Some(picked);
                }
            }
        }
        None
    }

    fn search(&mut self, free: u64, k: usize, chosen: &mut Vec<u64>) -> bool {
        if k == 0 {
            return true;
        }
        let core = core_mask(self.adj, free);
        if (core.count_ones() as usize) < 3 * k || self.failed.contains(&(core, k)) {
            return false;
        }
        let v = core.trailing_zeros() as usize;
        for idx in 0..self.through[v].len() {
            let c = self.cycles[self.through[v][idx]];
            if c & !core != 0 {
                continue;
            }
            chosen.push(c);
            if self.search(core & !c, k - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        if self.search(core & !bit(v), k, chosen) {
            return true;
        }
        self.failed.insert((core, k));
        false
    }
}
