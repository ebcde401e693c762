//! Labeled enumeration of small graphs.

use crate::error::{precondition, Result};
use crate::graph::Graph;

/// Largest order the built-in enumerator accepts (`2^21` graphs).
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Every labeled graph on `n` vertices exactly once, in edge-mask order:
/// bit `p` of the mask is the `p`-th vertex pair in graph6 order.
pub fn enumerate_labeled(n: usize) -> Result<LabeledGraphs> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(precondition(format!(
            "built-in enumeration stops at n={MAX_ENUMERATION_ORDER}; pipe graph6 from an external generator (e.g. geng {n}) instead"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(LabeledGraphs { n, next: 0, end: 1u64 << pairs.len(), pairs })
}

#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn graph_for_mask(&self, mask: u64) -> Graph {
        let mut rows = vec![0u64; self.n];
        for (p, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> p & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        Graph::from_masks_unchecked(&rows)
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let g = self.graph_for_mask(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}
