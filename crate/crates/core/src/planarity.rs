//! Exact planarity testing.
//!
//! The graph is split into biconnected blocks and each block is embedded by
//! path addition (Demoucron, Malgrange and Pertuiset): keep a plane embedding
//! of a growing subgraph as a list of facial cycles, and repeatedly route a
//! path of some fragment through a face that contains all of its attachment
//! vertices. A fragment with no such face proves the block non-planar.

use crate::graph::{Graph, Vertex};

impl Graph {
    pub fn is_planar(&self) -> bool {
        let n = self.order();
        if n >= 3 && self.size() > 3 * n - 6 {
            return false;
        }
        blocks(self).iter().all(|block| block_is_planar(block))
    }
}

/// Edge sets of the biconnected components.
fn blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    let n = g.order();
    let adj: Vec<Vec<Vertex>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut out = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < adj[v].len() {
                let u = adj[v][*next];
                *next += 1;
                if disc[u] == usize::MAX {
                    edge_stack.push((v, u));
                    disc[u] = time;
                    low[u] = time;
                    time += 1;
                    stack.push((u, v, 0));
                } else if u != parent && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

fn block_is_planar(block: &[(Vertex, Vertex)]) -> bool {
    if block.len() < 3 {
        return true;
    }
    let mut verts: Vec<Vertex> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let b = verts.len();
    if block.len() > 3 * b - 6 {
        return false;
    }
    let local = |v: Vertex| verts.binary_search(&v).expect("block vertex");
    let mut adj = vec![Vec::new(); b];
    for &(u, v) in block {
        let (u, v) = (local(u), local(v));
        adj[u].push(v);
        adj[v].push(u);
    }
    Embedding::new(adj).run()
}

struct Embedding {
    adj: Vec<Vec<usize>>,
    n: usize,
    in_h: Vec<bool>,
    edge_in_h: Vec<bool>,
    faces: Vec<Vec<usize>>,
    remaining_edges: usize,
}

enum Fragment {
    Edge(usize, usize),
    Component { attachments: Vec<usize>, vertices: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component { attachments, .. } => attachments.clone(),
        }
    }
}

impl Embedding {
    fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Self { adj, n, in_h: vec![false; n], edge_in_h: vec![false; n * n], faces: Vec::new(), remaining_edges: edges }
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        self.edge_in_h[u * self.n + v] = true;
        self.edge_in_h[v * self.n + u] = true;
        self.remaining_edges -= 1;
    }

    fn run(mut self) -> bool {
        let cycle = self.initial_cycle();
        for (i, &v) in cycle.iter().enumerate() {
            self.in_h[v] = true;
            self.add_edge(v, cycle[(i + 1) % cycle.len()]);
        }
        self.faces = vec![cycle.clone(), cycle];

        while self.remaining_edges > 0 {
            let fragments = self.fragments();
            let mut chosen: Option<(usize, usize)> = None;
            for (i, frag) in fragments.iter().enumerate() {
                let att = frag.attachments();
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&f| att.iter().all(|a| self.faces[f].contains(a)))
                    .collect();
                match admissible.len() {
                    0 => return false,
                    1 => {
                        chosen = Some((i, admissible[0]));
                        break;
                    }
                    _ => {
                        if chosen.is_none() {
                            chosen = Some((i, admissible[0]));
                        }
                    }
                }
            }
            let (frag, face) = chosen.expect("remaining edges imply a fragment");
            let path = self.fragment_path(&fragments[frag]);
            self.embed_path(face, &path);
        }
        true
    }

    /// Any cycle, found from the first back edge of a depth-first search.
    fn initial_cycle(&self) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![usize::MAX; self.n];
        let mut stack = vec![(0usize, 0usize)];
        depth[0] = 0;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next == self.adj[v].len() {
                stack.pop();
                continue;
            }
            let u = self.adj[v][*next];
            *next += 1;
            if depth[u] == usize::MAX {
                depth[u] = depth[v] + 1;
                parent[u] = v;
                stack.push((u, 0));
            } else if u != parent[v] && depth[u] < depth[v] {
                let mut cycle = vec![v];
                let mut w = v;
                while w != u {
                    w = parent[w];
                    cycle.push(w);
                }
                return cycle;
            }
        }
        unreachable!("a biconnected block with at least three edges has a cycle")
    }

    fn fragments(&self) -> Vec<Fragment> {
        let mut out = Vec::new();
        for u in 0..self.n {
            if !self.in_h[u] {
                continue;
            }
            for &v in &self.adj[u] {
                if u < v && self.in_h[v] && !self.edge_in_h[u * self.n + v] {
                    out.push(Fragment::Edge(u, v));
                }
            }
        }
        let mut seen = vec![false; self.n];
        for s in 0..self.n {
            if self.in_h[s] || seen[s] {
                continue;
            }
            seen[s] = true;
            let mut vertices = vec![s];
            let mut attach = vec![false; self.n];
            let mut i = 0;
            while i < vertices.len() {
                let v = vertices[i];
                i += 1;
                for &u in &self.adj[v] {
                    if self.in_h[u] {
                        attach[u] = true;
                    } else if !seen[u] {
                        seen[u] = true;
                        vertices.push(u);
                    }
                }
            }
            let attachments = (0..self.n).filter(|&v| attach[v]).collect();
            out.push(Fragment::Component { attachments, vertices });
        }
        out
    }

    /// A path through the fragment joining two distinct attachment vertices.
    fn fragment_path(&self, frag: &Fragment) -> Vec<usize> {
        match frag {
            Fragment::Edge(u, v) => vec![*u, *v],
            Fragment::Component { attachments, vertices } => {
                let mut member = vec![false; self.n];
                for &v in vertices {
                    member[v] = true;
                }
                let start = attachments[0];
                let first = *self.adj[start].iter().find(|&&c| member[c]).expect("attachment touches fragment");
                let mut prev = vec![usize::MAX; self.n];
                let mut queue = vec![first];
                prev[first] = first;
                let mut i = 0;
                while i < queue.len() {
                    let v = queue[i];
                    i += 1;
                    if let Some(&end) = self.adj[v].iter().find(|&&u| self.in_h[u] && u != start) {
                        let mut interior = vec![v];
                        let mut w = v;
                        while w != first {
                            w = prev[w];
                            interior.push(w);
                        }
                        interior.reverse();
                        let mut path = vec![start];
                        path.extend(interior);
                        path.push(end);
                        return path;
                    }
                    for &u in &self.adj[v] {
                        if member[u] && prev[u] == usize::MAX {
                            prev[u] = v;
                            queue.push(u);
                        }
                    }
                }
                unreachable!("fragments of a biconnected block have two attachments")
            }
        }
    }

    fn embed_path(&mut self, face: usize, path: &[usize]) {
        let boundary = std::mem::take(&mut self.faces[face]);
        let (a, z) = (path[0], path[path.len() - 1]);
        let len = boundary.len();
        let i = boundary.iter().position(|&v| v == a).expect("attachment on face");
        let j = boundary.iter().position(|&v| v == z).expect("attachment on face");
        let interior = &path[1..path.len() - 1];

        let walk = |from: usize, to: usize| {
            let mut out = vec![boundary[from]];
            let mut p = from;
            while p != to {
                p = (p + 1) % len;
                out.push(boundary[p]);
            }
            out
        };
        let mut first = walk(i, j);
        first.extend(interior.iter().rev());
        let mut second = walk(j, i);
        second.extend(interior.iter());

        self.faces[face] = first;
        self.faces.push(second);
        for &v in interior {
            self.in_h[v] = true;
        }
        for w in path.windows(2) {
            self.add_edge(w[0], w[1]);
        }
    }
}
