use super::{bit, Limits, Triangle, TrianglePacking};
use crate::error::Result;
use crate::graph::{BitIter, Graph, Vertex};

/// A maximum set of disjoint triangles (`t_G` triangles).
pub fn max_triangle_packing(g: &Graph) -> Result<TrianglePacking> {
    let adj = Limits::global().masks(g)?;
    let solver = TriangleSolver::new(adj, g.order());
    let best = solver.maximum(solver.all_vertices, &[]);
    Ok(finish(g, best))
}

/// `t_G`.
pub fn triangle_packing_number(g: &Graph) -> Result<usize> {
    max_triangle_packing(g).map(|p| p.len())
}

/// A packing of maximum size among packings that cover `x`, or `None` when
/// `x` lies in no triangle.
pub fn max_triangle_packing_containing(g: &Graph, x: Vertex) -> Result<Option<TrianglePacking>> {
    g.check_vertex(x)?;
    let adj = Limits::global().masks(g)?;
    let solver = TriangleSolver::new(adj, g.order());
    let mut best: Option<Vec<u64>> = None;
    for &t in &solver.through[x] {
        let tri = solver.triangles[t];
        let rest = solver.maximum(solver.all_vertices & !tri, &[tri]);
        if best.as_ref().is_none_or(|b| rest.len() > b.len()) {
            best = Some(rest);
        }
    }
    Ok(best.map(|b| finish(g, b)))
}

fn finish(g: &Graph, masks: Vec<u64>) -> TrianglePacking {
    let triangles: Vec<Triangle> = masks
        .into_iter()
        .map(|m| {
            let mut it = BitIter(m);
            [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()]
        })
        .collect();
    let packing = TrianglePacking { triangles };
    assert!(packing.verify(g), "triangle solver produced an invalid packing");
    packing
}

struct TriangleSolver {
    triangles: Vec<u64>,
    through: Vec<Vec<usize>>,
    all_vertices: u64,
}

impl TriangleSolver {
    fn new(adj: &[u64], n: usize) -> Self {
        let mut triangles = Vec::new();
        for a in 0..n {
            for b in BitIter(adj[a] & above(a)) {
                for c in BitIter(adj[a] & adj[b] & above(b)) {
                    triangles.push(bit(a) | bit(b) | bit(c));
                }
            }
        }
        let mut through = vec![Vec::new(); n];
        for (i, &t) in triangles.iter().enumerate() {
            for v in BitIter(t) {
                through[v].push(i);
            }
        }
        let all_vertices = triangles.iter().fold(0, |acc, &t| acc | t);
        Self { triangles, through, all_vertices }
    }

    fn maximum(&self, free: u64, prefix: &[u64]) -> Vec<u64> {
        let mut best = prefix.to_vec();
        let mut current = prefix.to_vec();
        self.branch(free, &mut current, &mut best);
        best
    }

    fn cover(&self, free: u64) -> u64 {
        let mut cover = 0;
        for v in BitIter(free) {
            if cover & bit(v) != 0 {
                continue;
            }
            for &t in &self.through[v] {
                let tri = self.triangles[t];
                if tri & !free == 0 {
                    cover |= tri;
                }
            }
        }
        cover
    }

    fn branch(&self, free: u64, current: &mut Vec<u64>, best: &mut Vec<u64>) {
        let cover = self.cover(free);
        if current.len() + cover.count_ones() as usize / 3 <= best.len() {
            return;
        }
        if cover == 0 {
            *best = current.clone();
            return;
        }
        let v = cover.trailing_zeros() as usize;
        for &t in &self.through[v] {
            let tri = self.triangles[t];
            if tri & !cover == 0 {
                current.push(tri);
                self.branch(cover & !tri, current, best);
                current.pop();
            }
        }
        self.branch(cover & !bit(v), current, best);
    }
}

fn above(s: usize) -> u64 {
    if s >= 63 {
        0
    } else {
        u64::MAX << (s + 1)
    }
}
