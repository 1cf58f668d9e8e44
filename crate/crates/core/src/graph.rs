//! Simple undirected graphs on the vertex set `{0, …, n-1}`.
//!
//! A [`Graph`] is immutable once built. Every constructor enforces the two
//! structural invariants: the adjacency relation is symmetric and has an
//! empty diagonal.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("edge ({u}, {v}) refers to a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
}

/// A simple undirected graph stored as a dense symmetric adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(Graph {
            n,
            adj: vec![false; n * n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.adj[u * n + v] = true;
            g.adj[v * n + u] = true;
        }
        Ok(g)
    }

    /// Builds the graph whose upper-triangle pairs `(i, j)`, `i < j`, taken in
    /// the order `(0,1), (0,2), (1,2), (0,3), …` are selected by `bits`.
    pub(crate) fn from_upper_triangle<I>(n: usize, bits: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = bool>,
    {
        let mut g = Graph::empty(n)?;
        let mut it = bits.into_iter();
        for j in 1..n {
            for i in 0..j {
                if it.next().unwrap_or(false) {
                    g.adj[i * n + j] = true;
                    g.adj[j * n + i] = true;
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.adj[v * self.n..(v + 1) * self.n];
        row.iter()
            .enumerate()
            .filter_map(|(u, &a)| if a { Some(u) } else { None })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v * self.n..(v + 1) * self.n]
            .iter()
            .filter(|&&a| a)
            .count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&a| a).count() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| self.has_edge(u, v).then_some((u, v)))
        })
    }

    /// Adjacency matrix as dense rows of `f64`.
    pub fn adjacency_f64(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| if self.has_edge(i, j) { 1.0 } else { 0.0 })
                    .collect()
            })
            .collect()
    }

    /// The complement: `uv` is an edge iff `u != v` and `uv` is not an edge here.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut adj = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                adj[i * n + j] = i != j && !self.adj[i * n + j];
            }
        }
        Graph { n, adj }
    }

    pub fn degree_data(&self) -> DegreeVector {
        DegreeVector::new((0..self.n).map(|v| self.degree(v) as u64).collect())
    }

    pub fn is_regular(&self) -> bool {
        let d0 = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d0)
    }

    /// Connected-component label of every vertex, numbered by first appearance.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if comp[u] == usize::MAX {
                        comp[u] = next;
                        queue.push_back(u);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// A proper two-colouring, if one exists.
    ///
    /// Each component is coloured from its smallest vertex, which gets side 0.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                let sv = side[v].unwrap();
                for u in self.neighbors(v) {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            queue.push_back(u);
                        }
                        Some(su) if su == sv => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side: Vec<bool> = side.into_iter().map(|s| s.unwrap()).collect();
        Some(Bipartition { side })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected, bipartite, and degree-constant on each side of the
    /// bipartition. Regular connected bipartite graphs qualify.
    pub fn is_semiregular_bipartite(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        let Some(parts) = self.bipartition() else {
            return false;
        };
        let mut degs: [Option<usize>; 2] = [None, None];
        for v in 0..self.n {
            let d = self.degree(v);
            let slot = &mut degs[parts.side[v] as usize];
            match slot {
                None => *slot = Some(d),
                Some(e) if *e != d => return false,
                _ => {}
            }
        }
        true
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Side assignment of a two-colouring: `side[v]` is `false` for part 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<bool>,
}

impl Bipartition {
    pub fn part(&self, which: bool) -> Vec<usize> {
        self.side
            .iter()
            .enumerate()
            .filter_map(|(v, &s)| (s == which).then_some(v))
            .collect()
    }

    pub fn sizes(&self) -> (usize, usize) {
        let ones = self.side.iter().filter(|&&s| s).count();
        (self.side.len() - ones, ones)
    }
}

/// Degrees together with the two aggregates used throughout: the edge count
/// and the sum of squared degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector {
    pub degrees: Vec<u64>,
    pub m: u64,
    pub sum_of_squares: u64,
}

impl DegreeVector {
    pub fn new(degrees: Vec<u64>) -> Self {
        let total: u64 = degrees.iter().sum();
        debug_assert!(total.is_multiple_of(2), "degree sum must be even");
        let sum_of_squares = degrees.iter().map(|d| d * d).sum();
        DegreeVector {
            degrees,
            m: total / 2,
            sum_of_squares,
        }
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.degrees.contains(&0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        assert_eq!(Graph::empty(0), Err(GraphError::Empty));
    }

    #[test]
    fn complement_of_empty_is_complete() {
        let e = Graph::empty(5).unwrap();
        let k = e.complement();
        assert_eq!(k.edge_count(), 10);
        assert_eq!(k.complement(), e);
    }

    #[test]
    fn k2_complement_is_empty() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(k2.complement(), Graph::empty(2).unwrap());
    }

    #[test]
    fn k22_complement_is_two_k2() {
        let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let c = k22.complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn degree_data_of_small_graphs() {
        let c4 = cycle(4).degree_data();
        assert_eq!(c4.degrees, vec![2, 2, 2, 2]);
        assert_eq!((c4.m, c4.sum_of_squares), (4, 16));

        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let d = star.degree_data();
        assert_eq!(d.degrees, vec![3, 1, 1, 1]);
        assert_eq!((d.m, d.sum_of_squares), (3, 12));
    }

    #[test]
    fn bipartite_facts() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(star.is_semiregular_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert!(cycle(6).is_semiregular_bipartite());

        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(two_edges.is_bipartite());
        assert!(!two_edges.is_connected());
        assert!(!two_edges.is_semiregular_bipartite());
    }

    #[test]
    fn components_are_labelled_in_order() {
        let g = Graph::from_edges(5, [(0, 3), (1, 2)]).unwrap();
        assert_eq!(g.components(), vec![0, 1, 1, 0, 2]);
    }
}
