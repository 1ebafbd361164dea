//! Maximum clique by branch and bound with a greedy colouring bound.

use super::{bit, Graph, GraphError};

/// Clique number ω(G).
pub fn clique_number(g: &Graph) -> Result<usize, GraphError> {
    if g.order() == 0 {
        return Err(GraphError::Empty);
    }
    let mut best = 1;
    expand(g.rows(), 0, g.vertex_mask(), &mut best);
    Ok(best)
}

/// Greedy sequential colouring of `cand`; vertices come out grouped by colour
/// class with non-decreasing colour numbers.
fn colour_sort(rows: &[u64], cand: u64, order: &mut Vec<u8>, colours: &mut Vec<u8>) {
    let mut uncoloured = cand;
    let mut colour = 0u8;
    while uncoloured != 0 {
        colour += 1;
        let mut avail = uncoloured;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bit(v) & !rows[v];
            uncoloured &= !bit(v);
            order.push(v as u8);
            colours.push(colour);
        }
    }
}

fn expand(rows: &[u64], depth: usize, mut cand: u64, best: &mut usize) {
    let mut order = Vec::with_capacity(cand.count_ones() as usize);
    let mut colours = Vec::with_capacity(order.capacity());
    colour_sort(rows, cand, &mut order, &mut colours);
    for i in (0..order.len()).rev() {
        // `colours[i]` bounds the clique size among order[..=i].
        if depth + colours[i] as usize <= *best {
            return;
        }
        let v = order[i] as usize;
        let next = cand & rows[v];
        if next == 0 {
            *best = (*best).max(depth + 1);
        } else {
            expand(rows, depth + 1, next, best);
        }
        cand &= !bit(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let k4 = Graph::from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        assert_eq!(clique_number(&k4).unwrap(), 4);
        let c5 = Graph::from_edge_list(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(clique_number(&c5).unwrap(), 2);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()).unwrap(), 1);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), Err(GraphError::Empty));
    }

    #[test]
    fn turan_9_3_has_omega_3() {
        let part = |v: usize| v / 3;
        let edges = (0..9).flat_map(|u| (u + 1..9).map(move |v| (u, v)));
        let g = Graph::from_edge_list(9, edges.filter(|&(u, v)| part(u) != part(v))).unwrap();
        assert_eq!(clique_number(&g).unwrap(), 3);
    }

    #[test]
    fn full_64() {
        let edges = (0..64).flat_map(|u| (u + 1..64).map(move |v| (u, v)));
        let g = Graph::from_edge_list(64, edges).unwrap();
        assert_eq!(clique_number(&g).unwrap(), 64);
    }
}
