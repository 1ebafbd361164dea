//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex owns one `u64` neighbour row, so neighbourhood intersections
//! are a single `AND` and degrees a single `popcount`.

mod clique;
mod graph6;

use std::fmt;

pub use clique::clique_number;
pub use graph6::{parse_graph6, to_graph6, Graph6Error};

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("operation needs at least one vertex")]
    Empty,
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An undirected simple graph with bitset adjacency rows.
///
/// Values are immutable once built. Isolated vertices are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: [u64; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Self {
            n,
            rows: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbour rows, validating symmetry and loops.
    pub fn from_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let n = rows.len();
        let mut g = Self::empty(n)?;
        let mask = low_bits(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row & bit(v) != 0 {
                return Err(GraphError::Loop(v));
            }
            g.rows[v] = row;
        }
        // Symmetrise: any one-sided entry is an edge.
        for u in 0..n {
            let mut row = g.rows[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                g.rows[v] |= bit(u);
            }
        }
        Ok(g)
    }

    /// Graph on `n` vertices whose upper triangle is given by `mask`, bit `i`
    /// set meaning the `i`-th pair in graph6 order `(0,1), (0,2), (1,2), (0,3), ...`
    /// is an edge.
    pub(crate) fn from_upper_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n * n.saturating_sub(1) / 2 <= 64);
        let mut g = Self {
            n,
            rows: [0; MAX_VERTICES],
        };
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if mask & bit(idx) != 0 {
                    g.rows[u] |= bit(v);
                    g.rows[v] |= bit(u);
                }
                idx += 1;
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Neighbour rows, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows[..self.n]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let mut higher = self.rows[u] & !low_bits(u + 1);
            std::iter::from_fn(move || {
                if higher == 0 {
                    return None;
                }
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                Some((u, v))
            })
        })
    }

    /// Mask of vertices with at least one neighbour.
    pub fn non_isolated(&self) -> u64 {
        self.rows()
            .iter()
            .enumerate()
            .filter(|(_, &r)| r != 0)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    /// Exact number of triangles.
    ///
    /// Each edge `uv` contributes `|N(u) ∩ N(v)|`; every triangle is seen
    /// once per edge.
    pub fn triangle_count(&self) -> u64 {
        let total: u64 = self
            .edges()
            .map(|(u, v)| (self.rows[u] & self.rows[v]).count_ones() as u64)
            .sum();
        total / 3
    }

    pub fn degree_stats(&self) -> Result<DegreeStats, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        let degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        Ok(DegreeStats {
            min: *degrees.iter().min().expect("non-empty"),
            max: *degrees.iter().max().expect("non-empty"),
            degrees,
        })
    }

    /// Vertices reachable from `start` (as a mask).
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Vertex masks of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            left &= !c;
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> Result<bool, GraphError> {
        if self.n == 0 {
            return Err(GraphError::Empty);
        }
        Ok(self.component_of(0) == self.vertex_mask())
    }

    /// Eccentricity-maximum over BFS layers; `Infinite` for disconnected graphs.
    pub fn diameter(&self) -> Result<Diameter, GraphError> {
        if !self.is_connected()? {
            return Ok(Diameter::Infinite);
        }
        let mut best = 0;
        for s in 0..self.n {
            let mut seen = bit(s);
            let mut frontier = seen;
            let mut depth = 0;
            loop {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.rows[v];
                }
                next &= !seen;
                if next == 0 {
                    break;
                }
                depth += 1;
                seen |= next;
                frontier = next;
            }
            best = best.max(depth);
        }
        Ok(Diameter::Finite(best))
    }

    /// 2-colouring of the vertices in `within`, as `(side_a, side_b)`, or
    /// `None` if the induced subgraph has an odd cycle.
    pub fn bipartition(&self, within: u64) -> Option<(u64, u64)> {
        let (mut a, mut b) = (0u64, 0u64);
        let mut left = within;
        while left != 0 {
            let root = left.trailing_zeros() as usize;
            let mut layer = bit(root);
            let mut side_a = true;
            while layer != 0 {
                if side_a {
                    a |= layer;
                } else {
                    b |= layer;
                }
                left &= !layer;
                let mut next = 0;
                let mut l = layer;
                while l != 0 {
                    let v = l.trailing_zeros() as usize;
                    l &= l - 1;
                    next |= self.rows[v] & within;
                }
                let same = if side_a { a } else { b };
                if next & same != 0 {
                    return None;
                }
                layer = next & left;
                side_a = !side_a;
            }
        }
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition(self.vertex_mask()).is_some()
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut used = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
            if used & bit(v) != 0 {
                return Err(GraphError::DuplicateVertex(v));
            }
            used |= bit(v);
        }
        let mut sub = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.rows[u] & bit(v) != 0 {
                    sub.rows[i] |= bit(j);
                    sub.rows[j] |= bit(i);
                }
            }
        }
        Ok(sub)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut inverse = vec![usize::MAX; self.n];
        if perm.len() != self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: perm.len(),
                n: self.n,
            });
        }
        for (v, &p) in perm.iter().enumerate() {
            if p >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: p, n: self.n });
            }
            if inverse[p] != usize::MAX {
                return Err(GraphError::DuplicateVertex(p));
            }
            inverse[p] = v;
        }
        self.induced_subgraph(&inverse)
    }

    /// Copy with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(self.n + extra)?;
        g.rows[..self.n].copy_from_slice(self.rows());
        Ok(g)
    }

    /// Dense row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({:?})", to_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&to_graph6(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub degrees: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]).unwrap()
    }

    fn c5() -> Graph {
        Graph::from_edge_list(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        assert_eq!(k4().size(), 6);
        let e3 = Graph::from_edge_list(3, []).unwrap();
        assert_eq!((e3.order(), e3.size()), (3, 0));
        let c = c5();
        assert_eq!(c.size(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edge_list(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_edge_list(65, []),
            Err(GraphError::TooManyVertices(65))
        );
        assert!(Graph::from_edge_list(64, [(0, 63)]).is_ok());
    }

    #[test]
    fn from_rows_validates() {
        assert_eq!(Graph::from_rows(&[0b1, 0]), Err(GraphError::Loop(0)));
        assert!(matches!(
            Graph::from_rows(&[0b100, 0]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        let g = Graph::from_rows(&[0b10, 0]).unwrap();
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn triangles() {
        assert_eq!(k4().triangle_count(), 4);
        assert_eq!(c5().triangle_count(), 0);
        let k33 = Graph::from_edge_list(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b))))
            .unwrap();
        assert_eq!(k33.triangle_count(), 0);
    }

    #[test]
    fn degrees() {
        let s = k4().degree_stats().unwrap();
        assert_eq!((s.min, s.max, s.degrees), (3, 3, vec![3, 3, 3, 3]));
        let star = Graph::from_edge_list(5, (1..5).map(|v| (0, v))).unwrap();
        let s = star.degree_stats().unwrap();
        assert_eq!((s.min, s.max), (1, 4));
        let s = c5().degree_stats().unwrap();
        assert_eq!((s.min, s.max), (2, 2));
        assert_eq!(Graph::empty(0).unwrap().degree_stats(), Err(GraphError::Empty));
    }

    #[test]
    fn connectivity_and_diameter() {
        assert!(k4().is_connected().unwrap());
        assert_eq!(k4().diameter().unwrap(), Diameter::Finite(1));
        assert_eq!(c5().diameter().unwrap(), Diameter::Finite(2));
        let two_k2 = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected().unwrap());
        assert_eq!(two_k2.diameter().unwrap(), Diameter::Infinite);
        assert_eq!(two_k2.components(), vec![0b0011, 0b1100]);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.diameter().unwrap(), Diameter::Finite(0));
        assert_eq!(Graph::empty(0).unwrap().is_connected(), Err(GraphError::Empty));
    }

    #[test]
    fn bipartiteness() {
        assert!(!c5().is_bipartite());
        assert!(!k4().is_bipartite());
        let c6 = Graph::from_edge_list(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let (a, b) = c6.bipartition(c6.vertex_mask()).unwrap();
        assert_eq!((a, b), (0b010101, 0b101010));
        assert!(Graph::empty(3).unwrap().is_bipartite());
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = k4().induced_subgraph(&[0, 2, 3]).unwrap();
        assert_eq!((k3.order(), k3.size(), k3.triangle_count()), (3, 3, 1));
        let p3 = c5().induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(c5().induced_subgraph(&[0, 1, 2, 3, 4]).unwrap(), c5());
        assert_eq!(
            c5().induced_subgraph(&[0, 0]),
            Err(GraphError::DuplicateVertex(0))
        );
        assert!(c5().induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn upper_mask_matches_graph6_order() {
        // bits: (0,1)=0, (0,2)=1, (1,2)=2
        let g = Graph::from_upper_mask(3, 0b101);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
