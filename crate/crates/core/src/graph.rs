//! Finite simple undirected graphs and vertex subsets.
//!
//! Vertices are the integers `0..n`. A [`Graph`] is immutable once built; it
//! keeps both sorted neighbor lists and a dense bitset row per vertex so that
//! neighborhood counts against a [`VertexSet`] are a handful of popcounts.

use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),
    #[error("the graph has no vertices")]
    Empty,
    #[error("vertex {0} is outside 0..{1}")]
    VertexOutOfRange(usize, usize),
}

const BITS: usize = 64;

/// A subset of `0..universe`, stored as a dense bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            blocks: vec![0; universe.div_ceil(BITS)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for (i, block) in set.blocks.iter_mut().enumerate() {
            let remaining = universe - i * BITS;
            *block = if remaining >= BITS {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        set
    }

    /// Builds a set from vertex ids, rejecting any id outside the universe.
    pub fn from_vertices<I>(universe: usize, vertices: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in vertices {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange(v, universe));
            }
            set.insert(v);
        }
        Ok(set)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.blocks[v / BITS] >> (v % BITS) & 1 == 1
    }

    /// Panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside 0..{}", self.universe);
        self.blocks[v / BITS] |= 1 << (v % BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.blocks[v / BITS] &= !(1 << (v % BITS));
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// `|self ∩ other|` without materializing the intersection.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = Self::full(self.universe);
        for (o, b) in out.blocks.iter_mut().zip(&self.blocks) {
            *o &= !b;
        }
        out
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut rest = block;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * BITS + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs (in either
    /// orientation) are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn build<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::OutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();

        let mut neighbors = vec![Vec::new(); n];
        let mut rows = vec![VertexSet::empty(n); n];
        for &(u, v) in &canon {
            neighbors[u].push(v);
            neighbors[v].push(u);
            rows[u].insert(v);
            rows[v].insert(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canon,
            neighbors,
            rows,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Open neighborhood `N(v)` in increasing order.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Open neighborhood `N(v)` as a bitset.
    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighbor_set(&self, v: usize) -> VertexSet {
        let mut set = self.rows[v].clone();
        set.insert(v);
        set
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    pub fn min_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .min()
            .ok_or(GraphError::Empty)
    }

    pub fn max_degree(&self) -> Result<usize, GraphError> {
        (0..self.n)
            .map(|v| self.degree(v))
            .max()
            .ok_or(GraphError::Empty)
    }

    /// The null graph (n = 0) counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.neighbors.iter().any(Vec::is_empty)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.neighbors.first()?.len();
        self.neighbors.iter().all(|l| l.len() == d).then_some(d)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::build(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn path_degrees() {
        let g = p4();
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
        assert_eq!(g.min_degree(), Ok(1));
        assert_eq!(g.max_degree(), Ok(2));
        assert!(g.is_tree());
    }

    #[test]
    fn edgeless() {
        let g = Graph::build(3, []).unwrap();
        assert_eq!(g.m(), 0);
        assert_eq!(g.min_degree(), Ok(0));
        assert_eq!(g.max_degree(), Ok(0));
        assert!(g.has_isolated_vertex());
        assert!(!g.is_connected());
    }

    #[test]
    fn duplicate_pairs_merge() {
        let g = Graph::build(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g, Graph::build(4, [(0, 1)]).unwrap());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::build(3, [(0, 3)]).unwrap_err(),
            GraphError::OutOfRange(0, 3, 3)
        );
        assert_eq!(
            Graph::build(3, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop(1)
        );
    }

    #[test]
    fn empty_graph_has_no_degrees() {
        let g = Graph::build(0, []).unwrap();
        assert_eq!(g.min_degree(), Err(GraphError::Empty));
        assert_eq!(g.max_degree(), Err(GraphError::Empty));
    }

    #[test]
    fn complete_and_star_degrees() {
        let k4 = Graph::build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!((k4.min_degree(), k4.max_degree()), (Ok(3), Ok(3)));
        assert_eq!(k4.regularity(), Some(3));
        let star = Graph::build(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!((star.min_degree(), star.max_degree()), (Ok(1), Ok(3)));
        assert_eq!(star.regularity(), None);
    }

    #[test]
    fn vertex_set_ops() {
        let mut s = VertexSet::empty(130);
        for v in [0, 63, 64, 129] {
            s.insert(v);
        }
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_vec(), vec![0, 63, 64, 129]);
        assert!(s.contains(64) && !s.contains(65) && !s.contains(500));
        let c = s.complement();
        assert_eq!(c.len(), 126);
        assert_eq!(c.intersection_len(&s), 0);
        assert_eq!(VertexSet::full(130).len(), 130);
        assert_eq!(VertexSet::full(64).len(), 64);
        s.remove(63);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert!(VertexSet::from_vertices(3, [3]).is_err());
    }
}
