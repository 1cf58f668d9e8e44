//! Exhaustive enumeration of labelled simple graphs on a fixed vertex count.
//!
//! Graphs are indexed by a bitmask over the `n(n-1)/2` upper-triangle pairs
//! in graph6 order, so mask `0` is the empty graph and mask `2^{pairs}-1` is
//! `K_n`. No isomorphism reduction is performed.

use std::ops::Range;

use thiserror::Error;

use crate::graph::Graph;

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("enumeration supports 1 <= n <= {max}, got {n}")]
    OrderOutOfRange { n: usize, max: usize },
}

/// All labelled graphs of a given order, addressed by edge bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabeledGraphs {
    n: usize,
}

impl LabeledGraphs {
    pub fn new(n: usize) -> Result<Self, EnumerationError> {
        if n == 0 || n > MAX_ENUMERATION_ORDER {
            return Err(EnumerationError::OrderOutOfRange {
                n,
                max: MAX_ENUMERATION_ORDER,
            });
        }
        Ok(LabeledGraphs { n })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// Number of labelled graphs, `2^{n(n-1)/2}`.
    pub fn count(&self) -> u64 {
        1u64 << self.pairs()
    }

    pub fn graph(&self, mask: u64) -> Graph {
        debug_assert!(mask < self.count());
        Graph::from_upper_triangle(self.n, (0..self.pairs()).map(|b| (mask >> b) & 1 == 1))
            .expect("n >= 1")
    }

    /// Graphs whose masks fall in `range`; sweeps split work this way.
    pub fn range(&self, range: Range<u64>) -> impl Iterator<Item = (u64, Graph)> + '_ {
        let end = range.end.min(self.count());
        (range.start..end).map(move |mask| (mask, self.graph(mask)))
    }
}

/// Every labelled graph on `n` vertices, optionally only the connected ones.
pub fn enumerate_graphs(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = Graph>, EnumerationError> {
    let all = LabeledGraphs::new(n)?;
    Ok((0..all.count())
        .map(move |mask| all.graph(mask))
        .filter(move |g| !connected_only || g.is_connected()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(1, false).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, true).unwrap().count(), 38);
    }

    #[test]
    fn each_graph_once() {
        let seen: HashSet<Graph> = enumerate_graphs(4, false).unwrap().collect();
        assert_eq!(seen.len(), 64);
    }

    #[test]
    fn mask_order_matches_graph6_pairs() {
        let all = LabeledGraphs::new(3).unwrap();
        // bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2)
        assert!(all.graph(0b001).has_edge(0, 1));
        assert!(all.graph(0b010).has_edge(0, 2));
        assert!(all.graph(0b100).has_edge(1, 2));
        assert_eq!(all.graph(0b111).edge_count(), 3);
    }

    #[test]
    fn order_cap() {
        assert!(LabeledGraphs::new(0).is_err());
        assert!(LabeledGraphs::new(9).is_err());
    }
}
