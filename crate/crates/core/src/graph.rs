//! Immutable simple undirected graphs over dense vertex ids `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex, `words` machine words
//! wide. Every operation that "modifies" a graph returns a new value, and
//! operations that renumber vertices also return a [`VertexMap`] back to
//! the parent graph.

use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

/// Where a vertex of a derived graph came from in its parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    Vertex(Vertex),
    /// The vertex obtained by contracting the parent edge `(x, y)`.
    Merged(Vertex, Vertex),
}

/// Total map from the vertices of a derived graph to its parent.
///
/// Injective except at a contracted vertex, which maps to two parent vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMap {
    origins: Vec<Origin>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        Self { origins: (0..n).map(Origin::Vertex).collect() }
    }

    pub(crate) fn from_vertices(parents: impl IntoIterator<Item = Vertex>) -> Self {
        Self { origins: parents.into_iter().map(Origin::Vertex).collect() }
    }

    pub fn len(&self) -> usize {
        self.origins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.origins.is_empty()
    }

    pub fn origin(&self, v: Vertex) -> Origin {
        self.origins[v]
    }

    pub fn origins(&self) -> &[Origin] {
        &self.origins
    }

    /// Parent vertex of `v`, or `None` if `v` is a contracted vertex.
    pub fn single(&self, v: Vertex) -> Option<Vertex> {
        match self.origins[v] {
            Origin::Vertex(p) => Some(p),
            Origin::Merged(..) => None,
        }
    }

    /// Every parent vertex `v` stands for (one, or two for a contracted vertex).
    pub fn parents(&self, v: Vertex) -> Vec<Vertex> {
        match self.origins[v] {
            Origin::Vertex(p) => vec![p],
            Origin::Merged(x, y) => vec![x, y],
        }
    }
}

/// The degree classes `H_k` (degree at least `2k`) and `L_k` (degree at most
/// `2k - 2`). Vertices of degree exactly `2k - 1` belong to neither.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeClasses {
    pub k: usize,
    pub high: Vec<Vertex>,
    pub low: Vec<Vertex>,
}

impl DegreeClasses {
    pub fn h(&self) -> usize {
        self.high.len()
    }

    pub fn l(&self) -> usize {
        self.low.len()
    }

    /// `h - l`.
    pub fn surplus(&self) -> i64 {
        self.high.len() as i64 - self.low.len() as i64
    }
}

struct Rows {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Rows {
    fn new(n: usize) -> Self {
        let words = words_for(n);
        Self { n, words, rows: vec![0; n * words] }
    }

    #[inline]
    fn set(&mut self, u: Vertex, v: Vertex) {
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    fn finish(self) -> Graph {
        let twice: usize = self.rows.iter().map(|w| w.count_ones() as usize).sum();
        Graph { n: self.n, words: self.words, rows: self.rows, m: twice / 2 }
    }
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut rows = Rows::new(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            rows.set(u, v);
        }
        Ok(rows.finish())
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Rows::new(n).finish()
    }

    /// Builds a graph on at most 64 vertices from one neighbour mask per
    /// vertex. The masks must describe a symmetric irreflexive relation.
    pub fn from_masks(masks: &[u64]) -> Result<Self> {
        let n = masks.len();
        if n > WORD {
            return Err(Error::Precondition(format!("from_masks supports at most 64 vertices, got {n}")));
        }
        let valid = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
        for (v, &row) in masks.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::VertexOutOfRange { vertex: (row & !valid).trailing_zeros() as usize, n });
            }
            if row >> v & 1 == 1 {
                return Err(Error::LoopEdge(v));
            }
            let mut rest = row;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if masks[u] >> v & 1 == 0 {
                    return Err(Error::Precondition(format!("adjacency not symmetric at ({v}, {u})")));
                }
            }
        }
        Ok(Self::from_masks_unchecked(masks))
    }

    pub(crate) fn from_masks_unchecked(masks: &[u64]) -> Self {
        let n = masks.len();
        Rows { n, words: 1, rows: masks.to_vec() }.finish()
    }

    /// `|G|`.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// `‖G‖`.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    fn row(&self, v: Vertex) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Neighbour masks, one word per vertex, when the graph fits in 64 vertices.
    #[inline]
    pub fn masks(&self) -> Option<&[u64]> {
        (self.n <= WORD).then_some(&self.rows[..])
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// `δ(G)`, or `None` for the empty graph.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    /// `Δ(G)`, or `None` for the empty graph.
    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.row(v).iter().enumerate().flat_map(|(i, &w)| BitIter(w).map(move |b| i * WORD + b))
    }

    /// Edges as pairs `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// `‖v, U‖`: the number of neighbours of `v` in `set`.
    pub fn count_adjacent(&self, v: Vertex, set: &[Vertex]) -> usize {
        set.iter().filter(|&&u| self.has_edge(v, u)).count()
    }

    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .enumerate()
            .flat_map(|(i, (&a, &b))| BitIter(a & b).map(move |bit| i * WORD + bit))
    }

    pub fn degree_classes(&self, k: usize) -> DegreeClasses {
        assert!(k >= 1, "degree classes need k >= 1");
        let mut high = Vec::new();
        let mut low = Vec::new();
        for v in 0..self.n {
            let d = self.degree(v);
            if d >= 2 * k {
                high.push(v);
            } else if d + 2 <= 2 * k {
                low.push(v);
            }
        }
        DegreeClasses { k, high, low }
    }

    /// `(V_{>=hi}, V_{<=lo})`. Requires `lo < hi`.
    pub fn threshold_classes(&self, hi: usize, lo: usize) -> (Vec<Vertex>, Vec<Vertex>) {
        assert!(lo < hi, "threshold_classes needs lo < hi (got lo={lo}, hi={hi})");
        let mut above = Vec::new();
        let mut below = Vec::new();
        for v in 0..self.n {
            let d = self.degree(v);
            if d >= hi {
                above.push(v);
            } else if d <= lo {
                below.push(v);
            }
        }
        (above, below)
    }

    /// Induced subgraph on `keep`, renumbered in increasing vertex order.
    pub fn induced(&self, keep: &[Vertex]) -> Result<(Graph, VertexMap)> {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&v) = sorted.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in sorted.iter().enumerate() {
            index[v] = i;
        }
        let mut rows = Rows::new(sorted.len());
        for (i, &v) in sorted.iter().enumerate() {
            for u in self.neighbors(v) {
                let j = index[u];
                if j != usize::MAX && j > i {
                    rows.set(i, j);
                }
            }
        }
        Ok((rows.finish(), VertexMap::from_vertices(sorted)))
    }

    pub fn delete_vertices(&self, remove: &[Vertex]) -> Result<(Graph, VertexMap)> {
        let mut gone = vec![false; self.n];
        for &v in remove {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            gone[v] = true;
        }
        let keep: Vec<Vertex> = (0..self.n).filter(|&v| !gone[v]).collect();
        self.induced(&keep)
    }

    /// Removes edge `uv`; deleting a non-edge is a precondition error.
    pub fn delete_edge(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(Error::Precondition(format!("{u}{v} is not an edge")));
        }
        let mut g = self.clone();
        g.rows[u * g.words + v / WORD] &= !(1 << (v % WORD));
        g.rows[v * g.words + u / WORD] &= !(1 << (u % WORD));
        g.m -= 1;
        Ok(g)
    }

    /// A copy with the given extra edges (duplicates are ignored).
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::new(self.n, self.edges().chain(extra))
    }

    /// `G / xy`. The merged vertex takes `y`'s place in the renumbering
    /// and is adjacent to `(N(x) ∪ N(y)) \ {x, y}`.
    pub fn contract(&self, x: Vertex, y: Vertex) -> Result<(Graph, VertexMap)> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y || !self.has_edge(x, y) {
            return Err(Error::Precondition(format!("cannot contract {x}{y}: not an edge")));
        }
        let renumber = |v: Vertex| if v > x { v - 1 } else { v };
        let mut rows = Rows::new(self.n - 1);
        for (u, v) in self.edges() {
            let (a, b) = (if u == x { y } else { u }, if v == x { y } else { v });
            if a != b {
                rows.set(renumber(a), renumber(b));
            }
        }
        let origins = (0..self.n)
            .filter(|&v| v != x)
            .map(|v| if v == y { Origin::Merged(x, y) } else { Origin::Vertex(v) })
            .collect();
        Ok((rows.finish(), VertexMap { origins }))
    }

    /// `G ∨ G'`: vertices of `self` keep their ids, those of `other` are
    /// shifted by `|self|`.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut rows = Rows::new(self.n + other.n);
        for (u, v) in self.edges() {
            rows.set(u, v);
        }
        for (u, v) in other.edges() {
            rows.set(u + shift, v + shift);
        }
        for u in 0..self.n {
            for v in 0..other.n {
                rows.set(u, v + shift);
            }
        }
        rows.finish()
    }

    /// Disjoint union, with `other` shifted by `|self|`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut rows = Rows::new(self.n + other.n);
        for (u, v) in self.edges() {
            rows.set(u, v);
        }
        for (u, v) in other.edges() {
            rows.set(u + shift, v + shift);
        }
        rows.finish()
    }

    pub fn complement(&self) -> Graph {
        let mut rows = Rows::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    rows.set(u, v);
                }
            }
        }
        rows.finish()
    }

    /// The maximal subgraph of minimum degree at least 2, by repeated
    /// deletion of vertices of degree at most 1.
    pub fn two_core(&self) -> (Graph, VertexMap) {
        let mut deg = self.degrees();
        let mut alive = vec![true; self.n];
        let mut stack: Vec<Vertex> = (0..self.n).filter(|&v| deg[v] <= 1).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            for u in self.neighbors(v) {
                if alive[u] {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        stack.push(u);
                    }
                }
            }
        }
        let keep: Vec<Vertex> = (0..self.n).filter(|&v| alive[v]).collect();
        self.induced(&keep).expect("core vertices are in range")
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.common_neighbors(u, v).next().is_none())
    }

    /// All triangles `[a, b, c]` with `a < b < c`, in lexicographic order.
    pub fn triangles(&self) -> Vec<[Vertex; 3]> {
        let mut out = Vec::new();
        for (a, b) in self.edges() {
            for c in self.common_neighbors(a, b) {
                if c > b {
                    out.push([a, b, c]);
                }
            }
        }
        out
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Iterates the set bits of a word, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}
