//! Greedy colouring along a caller-supplied node order.

use super::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Colour the nodes in the given order, assigning each the lowest label not
/// used by any already-coloured neighbour. O(n + m) once the order is fixed.
pub fn greedy_colour(g: &Graph, order: &[usize]) -> Result<Colouring> {
    let n = g.node_count();
    if order.len() != n {
        return Err(Error::InvalidPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::InvalidPermutation);
        }
        seen[v] = true;
    }

    let mut labels = vec![usize::MAX; n];
    // forbidden[c] = stamp of the node currently being coloured
    let mut forbidden = vec![usize::MAX; n + 1];
    for (stamp, &v) in order.iter().enumerate() {
        for &w in g.neighbours(v) {
            if labels[w] != usize::MAX {
                forbidden[labels[w]] = stamp;
            }
        }
        labels[v] = (0..=n)
            .find(|&c| forbidden[c] != stamp)
            .expect("n+1 labels always suffice");
    }
    Ok(Colouring::node("greedy", labels))
}
