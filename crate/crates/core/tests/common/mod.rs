//! Brute-force oracles shared by the integration tests. Each one works on
//! raw adjacency bitmasks and shares no code with the library solvers.

#![allow(dead_code)]

use cyclepack::{Graph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, edges.into_iter().filter(|_| rng.gen_bool(p))).unwrap()
}

pub fn adjacency(g: &Graph) -> Vec<u64> {
    (0..g.order()).map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u)).collect()
}

fn components(adj: &[u64], set: u64) -> u32 {
    let mut left = set;
    let mut count = 0;
    while left != 0 {
        count += 1;
        let mut frontier = left & left.wrapping_neg();
        let mut seen = frontier;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & set & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        left &= !seen;
    }
    count
}

pub fn is_connected(adj: &[u64], set: u64) -> bool {
    set != 0 && components(adj, set) == 1
}

/// `G[set]` contains a cycle iff it has more edges than `|set| - components`.
pub fn has_cycle(adj: &[u64], set: u64) -> bool {
    let edges: u32 = (0..adj.len()).filter(|&v| set >> v & 1 == 1).map(|v| (adj[v] & set).count_ones()).sum::<u32>() / 2;
    edges + components(adj, set) > set.count_ones()
}

/// Whether the vertices split into `k` disjoint parts each inducing a cycle.
pub fn brute_has_k_cycles(g: &Graph, k: usize) -> bool {
    let adj = adjacency(g);
    let all = if g.order() == 64 { u64::MAX } else { (1u64 << g.order()) - 1 };
    fn go(adj: &[u64], avail: u64, k: usize) -> bool {
        if k <= 1 {
            return k == 0 || has_cycle(adj, avail);
        }
        // the part holding the lowest used vertex is enumerated as a subset of `avail`
        let mut sub = avail;
        loop {
            if sub.count_ones() >= 3 && has_cycle(adj, sub) && go(adj, avail & !sub, k - 1) {
                return true;
            }
            if sub == 0 {
                return false;
            }
            sub = (sub - 1) & avail;
        }
    }
    go(&adj, all, k)
}

pub fn brute_max_cycles(g: &Graph) -> usize {
    (1..).find(|&k| !brute_has_k_cycles(g, k)).unwrap() - 1
}

pub fn brute_triangle_number(g: &Graph) -> usize {
    let tris = g.triangles();
    fn go(tris: &[[Vertex; 3]], used: u64) -> usize {
        match tris.split_first() {
            None => 0,
            Some((t, rest)) => {
                let mask = t.iter().fold(0u64, |m, &v| m | 1 << v);
                let skip = go(rest, used);
                if used & mask == 0 {
                    skip.max(1 + go(rest, used | mask))
                } else {
                    skip
                }
            }
        }
    }
    go(&tris, 0)
}

pub fn brute_alpha(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0u64..1 << g.order()).filter(|&s| (0..g.order()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)).map(|s| s.count_ones() as usize).max().unwrap()
}

pub fn brute_clique(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0u64..1 << g.order()).filter(|&s| (0..g.order()).all(|v| s >> v & 1 == 0 || s & !(1 << v) & !adj[v] == 0)).map(|s| s.count_ones() as usize).max().unwrap()
}

/// Vertex set of the largest induced subgraph of minimum degree >= 2.
pub fn brute_two_core(g: &Graph) -> Vec<Vertex> {
    let adj = adjacency(g);
    let mut union = 0u64;
    for s in 1u64..1 << g.order() {
        if (0..g.order()).all(|v| s >> v & 1 == 0 || (adj[v] & s).count_ones() >= 2) {
            union |= s;
        }
    }
    (0..g.order()).filter(|&v| union >> v & 1 == 1).collect()
}

/// Whether `g` has a minor with `parts` connected branch sets in which the
/// pairs in `required` touch. With `symmetric`, set `i` may only be opened
/// after sets `0..i`, which removes the label symmetry of complete targets.
fn has_minor(g: &Graph, parts: usize, required: &[(usize, usize)], symmetric: bool) -> bool {
    struct Search<'a> {
        adj: Vec<u64>,
        required: &'a [(usize, usize)],
        symmetric: bool,
        sets: Vec<u64>,
    }
    impl Search<'_> {
        fn go(&mut self, v: usize) -> bool {
            let n = self.adj.len();
            let open = self.sets.iter().filter(|&&s| s != 0).count();
            if open + (n - v) < self.sets.len() {
                return false;
            }
            if v == n {
                return self.sets.iter().all(|&s| is_connected(&self.adj, s))
                    && self.required.iter().all(|&(a, b)| touches(&self.adj, self.sets[a], self.sets[b]));
            }
            if self.go(v + 1) {
                return true;
            }
            let limit = if self.symmetric { (open + 1).min(self.sets.len()) } else { self.sets.len() };
            for i in 0..limit {
                self.sets[i] |= 1 << v;
                let found = self.go(v + 1);
                self.sets[i] &= !(1 << v);
                if found {
                    return true;
                }
            }
            false
        }
    }
    Search { adj: adjacency(g), required, symmetric, sets: vec![0; parts] }.go(0)
}

fn touches(adj: &[u64], a: u64, b: u64) -> bool {
    (0..adj.len()).any(|v| a >> v & 1 == 1 && adj[v] & b != 0)
}

/// Wagner: planar iff no `K_5` and no `K_{3,3}` minor.
pub fn brute_is_planar(g: &Graph) -> bool {
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    !(g.size() >= 10 && has_minor(g, 5, &k5, true)) && !(g.size() >= 9 && has_minor(g, 6, &k33, false))
}

/// Lexicographically least adjacency bitstring over all relabelings.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let adj = adjacency(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mut rows = vec![0u64; n];
        for (u, row) in rows.iter_mut().enumerate() {
            for v in 0..n {
                if adj[p[u]] >> p[v] & 1 == 1 {
                    *row |= 1 << v;
                }
            }
        }
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
    });
    best.unwrap_or_default()
}

fn permute(p: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i == p.len() {
        f(p);
        return;
    }
    for j in i..p.len() {
        p.swap(i, j);
        permute(p, i + 1, f);
        p.swap(i, j);
    }
}
