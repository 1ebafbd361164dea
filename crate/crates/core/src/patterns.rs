//! Exact structural recognisers for the exceptional graphs of the triangle
//! theorems, and induced-subgraph search for small fixed patterns.
//!
//! Nothing here touches floating point: exception clauses are decided
//! combinatorially even when the eigenvalues sit on a tolerance boundary.

use serde::Serialize;
use thiserror::Error;

use crate::families::FamilySpec;
use crate::graph::{bit, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("pattern has {pattern} vertices but the host only {host}")]
    PatternTooLarge { pattern: usize, host: usize },
}

/// Exception-family membership of a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StructuralFlags {
    /// Complete bipartite after deleting isolated vertices. Edgeless graphs
    /// count (as `K_{0,b}`), since they meet the equality case with
    /// `λ = m = t = 0`.
    pub is_complete_bipartite_plus_isolated: bool,
    /// `T_{n,2}` on the full vertex set (`n >= 2`, no isolated vertices).
    pub is_turan_2: bool,
    pub is_c5_plus_isolated: bool,
    /// `SK_{2,(m−1)/2}` after deleting isolated vertices.
    pub is_sk2_plus_isolated: bool,
}

pub fn recognize(g: &Graph) -> StructuralFlags {
    let core = g.non_isolated();
    let n_core = core.count_ones() as usize;
    let m = g.size();
    if core == 0 {
        return StructuralFlags {
            is_complete_bipartite_plus_isolated: true,
            ..Default::default()
        };
    }
    let connected = g.component_of(core.trailing_zeros() as usize) == core;
    if !connected {
        return StructuralFlags::default();
    }

    let mut flags = StructuralFlags::default();
    if let Some((a, b)) = g.bipartition(core) {
        let (a, b) = (a.count_ones() as usize, b.count_ones() as usize);
        if a * b == m {
            flags.is_complete_bipartite_plus_isolated = true;
            let n = g.order();
            flags.is_turan_2 = n >= 2 && n_core == n && a.abs_diff(b) <= 1;
        }
    }
    let two_regular = iter_bits(core).all(|v| g.degree(v) == 2);
    flags.is_c5_plus_isolated = n_core == 5 && two_regular;
    flags.is_sk2_plus_isolated = is_sk2_core(g, core, n_core, m, two_regular);
    flags
}

/// `core` is connected and non-empty.
fn is_sk2_core(g: &Graph, core: u64, n_core: usize, m: usize, two_regular: bool) -> bool {
    if m < 3 || m % 2 == 0 {
        return false;
    }
    let k = (m - 1) / 2;
    if n_core != k + 3 {
        return false;
    }
    match k {
        // P4: connected, 4 vertices, 3 edges, maximum degree 2.
        1 => iter_bits(core).all(|v| g.degree(v) <= 2),
        // C5
        2 => two_regular,
        _ => {
            let hubs: Vec<usize> = iter_bits(core).filter(|&v| g.degree(v) == k).collect();
            let twos = iter_bits(core).filter(|&v| g.degree(v) == 2).count();
            if hubs.len() != 2 || twos != k + 1 {
                return false;
            }
            let (x, y) = (hubs[0], hubs[1]);
            if g.has_edge(x, y) {
                return false;
            }
            let (nx, ny) = (g.neighbors(x), g.neighbors(y));
            let only_x = nx & !ny;
            let only_y = ny & !nx;
            if (nx & ny).count_ones() as usize != k - 1
                || only_x.count_ones() != 1
                || only_y.count_ones() != 1
            {
                return false;
            }
            g.has_edge(
                only_x.trailing_zeros() as usize,
                only_y.trailing_zeros() as usize,
            )
        }
    }
}

fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

/// Finds host vertices inducing a copy of `pattern`.
///
/// On success, entry `i` of the returned list is the host vertex playing
/// pattern vertex `i`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>, PatternError> {
    let (n, r) = (host.order(), pattern.order());
    if r > n {
        return Err(PatternError::PatternTooLarge { pattern: r, host: n });
    }
    if r == 0 {
        return Ok(Some(Vec::new()));
    }

    // Grow the order from the highest-degree vertex, always taking the vertex
    // with most already-placed neighbours, so adjacency constraints bite early.
    let mut order = Vec::with_capacity(r);
    let mut placed = 0u64;
    while order.len() < r {
        let next = (0..r)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                (
                    (pattern.neighbors(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex");
        placed |= bit(next);
        order.push(next);
    }
    let degree_ok: Vec<u64> = order
        .iter()
        .map(|&p| {
            let d = pattern.degree(p);
            (0..n).filter(|&h| host.degree(h) >= d).fold(0, |acc, h| acc | bit(h))
        })
        .collect();

    let mut search = InducedSearch {
        host,
        pattern,
        order: &order,
        degree_ok: &degree_ok,
        image: vec![usize::MAX; r],
    };
    Ok(search.extend(0, 0).then_some(search.image))
}

struct InducedSearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    degree_ok: &'a [u64],
    image: Vec<usize>,
}

impl InducedSearch<'_> {
    fn extend(&mut self, depth: usize, used: u64) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.degree_ok[depth] & !used;
        for &q in &self.order[..depth] {
            let row = self.host.neighbors(self.image[q]);
            cand &= if self.pattern.has_edge(p, q) { row } else { !row };
        }
        while cand != 0 {
            let h = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            self.image[p] = h;
            if self.extend(depth + 1, used | bit(h)) {
                return true;
            }
        }
        self.image[p] = usize::MAX;
        false
    }
}

/// Indices `i ∈ 1..=5` whose forbidden fixture occurs as an induced subgraph.
pub fn forbidden_scan(g: &Graph) -> Vec<usize> {
    (1..=5)
        .filter(|&i| {
            let pattern = FamilySpec::Forbidden { i }.generate().expect("valid fixture");
            matches!(contains_induced(g, &pattern), Ok(Some(_)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn complete_bipartite_with_isolated() {
        let g = gen(FamilySpec::CompleteBipartite { a: 3, b: 4 }).with_isolated(2).unwrap();
        let f = recognize(&g);
        assert!(f.is_complete_bipartite_plus_isolated);
        assert!(!f.is_turan_2);
        assert!(!f.is_c5_plus_isolated && !f.is_sk2_plus_isolated);
    }

    #[test]
    fn turan_7_2() {
        let f = recognize(&gen(FamilySpec::Turan { n: 7, k: 2 }));
        assert!(f.is_turan_2 && f.is_complete_bipartite_plus_isolated);
        assert!(!recognize(&gen(FamilySpec::CompleteBipartite { a: 2, b: 5 })).is_turan_2);
    }

    #[test]
    fn c5_is_also_sk2_2() {
        let f = recognize(&gen(FamilySpec::Cycle { n: 5 }));
        assert!(f.is_c5_plus_isolated);
        assert!(!f.is_complete_bipartite_plus_isolated && !f.is_turan_2);
        // SK_{2,2} is C5 itself.
        assert!(f.is_sk2_plus_isolated);
    }

    #[test]
    fn sk2_recognised_for_every_k() {
        for k in 1..=30 {
            let g = gen(FamilySpec::Sk2 { k });
            assert!(recognize(&g).is_sk2_plus_isolated, "k = {k}");
            assert!(recognize(&g.with_isolated(3).unwrap()).is_sk2_plus_isolated);
        }
        // K_{2,3} plus a pendant has the right counts but the wrong shape.
        let mut edges: Vec<_> = gen(FamilySpec::CompleteBipartite { a: 2, b: 3 }).edges().collect();
        edges.push((2, 5));
        let near = Graph::from_edge_list(6, edges).unwrap();
        assert_eq!(near.size(), 7);
        assert!(!recognize(&near).is_sk2_plus_isolated);
        assert!(!recognize(&gen(FamilySpec::Cycle { n: 7 })).is_sk2_plus_isolated);
    }

    #[test]
    fn edgeless_counts_as_complete_bipartite() {
        let f = recognize(&Graph::empty(4).unwrap());
        assert!(f.is_complete_bipartite_plus_isolated);
        assert!(!f.is_turan_2);
    }

    #[test]
    fn disconnected_core_is_nothing() {
        let g = Graph::from_edge_list(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(recognize(&g), StructuralFlags::default());
    }

    #[test]
    fn induced_examples() {
        let c5 = gen(FamilySpec::Cycle { n: 5 });
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        let found = contains_induced(&c5, &p3).unwrap().unwrap();
        assert_eq!(c5.induced_subgraph(&found).unwrap(), p3);

        let k33 = gen(FamilySpec::CompleteBipartite { a: 3, b: 3 });
        let k3 = gen(FamilySpec::Complete { n: 3 });
        assert_eq!(contains_induced(&k33, &k3).unwrap(), None);

        let g4 = gen(FamilySpec::Forbidden { i: 4 });
        let k4 = gen(FamilySpec::Complete { n: 4 });
        assert_eq!(contains_induced(&g4, &k4).unwrap(), None);

        assert_eq!(
            contains_induced(&k3, &k4),
            Err(PatternError::PatternTooLarge { pattern: 4, host: 3 })
        );
    }

    #[test]
    fn induced_means_non_edges_too() {
        // P3 is a subgraph of K3 but not an induced one.
        let k3 = gen(FamilySpec::Complete { n: 3 });
        let p3 = Graph::from_edge_list(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(contains_induced(&k3, &p3).unwrap(), None);
    }

    #[test]
    fn scan_examples() {
        // Every 4 vertices of K_{3,3} induce a complete bipartite graph, never 2K2.
        assert!(forbidden_scan(&gen(FamilySpec::CompleteBipartite { a: 3, b: 3 })).is_empty());
        assert_eq!(forbidden_scan(&gen(FamilySpec::Complete { n: 4 })), vec![3]);
        assert!(forbidden_scan(&Graph::empty(0).unwrap()).is_empty());
        assert!(forbidden_scan(&Graph::empty(9).unwrap()).is_empty());
        for i in 1..=5 {
            assert!(forbidden_scan(&gen(FamilySpec::Forbidden { i })).contains(&i));
        }
    }
}
