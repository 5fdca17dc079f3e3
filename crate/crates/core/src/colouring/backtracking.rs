//! Exact node colouring by recursive backtracking.
//!
//! A greedily found clique is pre-coloured with distinct colours and fixes
//! the lower bound. The colour budget k starts at n and drops to l - 1 each
//! time a full colouring with l colours is found, so the incumbent strictly
//! improves until either the search tree is exhausted or the clique bound is
//! met. Node selection at every choice point follows the DSatur rule.

use super::dsatur::SaturationState;
use super::{Colouring, OptimalityCertificate};
use crate::graph::Graph;

/// Minimise colours by exhaustive backtracking. `node_limit` caps tentative
/// node assignments; `None` runs to completion. Exhausting the budget is not
/// an error: the best colouring found so far is returned with
/// `optimal = false` (unless it already meets the clique bound).
pub fn backtracking_colour(
    g: &Graph,
    node_limit: Option<u64>,
) -> (Colouring, OptimalityCertificate) {
    let n = g.node_count();
    let clique = g.greedy_clique();
    let mut search = Search {
        g,
        state: SaturationState::new(g, n.max(1)),
        k: n,
        clique_size: clique.size(),
        best: None,
        assignments: 0,
        limit: node_limit.unwrap_or(u64::MAX),
        aborted: false,
    };
    for (i, &v) in clique.members.iter().enumerate() {
        search.state.assign(g, v, i);
    }
    let bound_met = search.colour() && !search.aborted;
    let exhausted = !bound_met && !search.aborted;

    let labels = match search.best {
        Some(labels) => labels,
        // budget ran out before any full colouring: finish the current
        // partial assignment greedily, still clash-free
        None => {
            while let Some(v) = search.state.select() {
                let c = search.state.min_feasible(v).expect("capacity n suffices");
                search.state.assign(g, v, c);
            }
            search.state.complete_labels()
        }
    };
    let provenance = match node_limit {
        None => "backtracking".to_string(),
        Some(limit) => format!("backtracking(limit={limit})"),
    };
    let colouring = Colouring::node(provenance, labels);
    let certificate = OptimalityCertificate {
        lower_bound: clique.size(),
        upper_bound: colouring.k,
        optimal: !search.aborted || colouring.k == clique.size(),
        search_exhausted: exhausted,
    };
    (colouring, certificate)
}

struct Search<'a> {
    g: &'a Graph,
    state: SaturationState,
    k: usize,
    clique_size: usize,
    best: Option<Vec<usize>>,
    assignments: u64,
    limit: u64,
    aborted: bool,
}

impl Search<'_> {
    // true means stop the whole search: the clique bound was met, or the
    // budget was exhausted (flagged separately)
    fn colour(&mut self) -> bool {
        let l = self.state.colours_in_use();
        if self.state.all_coloured() {
            self.best = Some(self.state.complete_labels());
            if l == self.clique_size {
                return true;
            }
            self.k = l - 1;
            return false;
        }
        let u = self.state.select().expect("uncoloured node exists");
        let mut i = 0;
        while i < self.k && l <= self.k {
            if self.state.feasible(u, i) {
                if self.assignments >= self.limit {
                    self.aborted = true;
                    return true;
                }
                self.assignments += 1;
                self.state.assign(self.g, u, i);
                if self.colour() {
                    return true;
                }
                self.state.unassign(self.g, u);
            }
            i += 1;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::Seed;

    // independent oracle: enumerate canonical label vectors (node 0 gets 0,
    // node i introduces at most one fresh label) with pruning
    fn brute_force_chromatic(g: &Graph) -> usize {
        fn descend(g: &Graph, labels: &mut Vec<usize>, v: usize, used: usize, best: &mut usize) {
            if used >= *best {
                return;
            }
            if v == g.node_count() {
                *best = used;
                return;
            }
            let cap = (used + 1).min(*best - 1);
            for c in 0..cap {
                let clash = g.neighbours(v).iter().any(|&w| w < v && labels[w] == c);
                if clash {
                    continue;
                }
                labels[v] = c;
                descend(g, labels, v + 1, used.max(c + 1), best);
            }
        }
        let mut best = g.node_count();
        let mut labels = vec![0; g.node_count()];
        descend(g, &mut labels, 0, 0, &mut best);
        best
    }

    #[test]
    fn matches_brute_force_on_small_graphs() {
        let mut cases = 0;
        for seed in 0..60u64 {
            let n = 4 + (seed as usize % 4);
            let p = [0.3, 0.5, 0.8][seed as usize % 3];
            let g = generators::gnp(n, p, Seed(seed)).unwrap();
            let expected = brute_force_chromatic(&g);
            let (col, cert) = backtracking_colour(&g, None);
            assert_eq!(col.k, expected, "seed {seed}");
            assert!(cert.optimal);
            assert!(cert.search_exhausted || cert.lower_bound == cert.upper_bound);
            for &(u, v) in g.edges() {
                assert_ne!(col.assignment[u], col.assignment[v]);
            }
            cases += 1;
        }
        assert_eq!(cases, 60);
    }

    #[test]
    fn dodecahedral_is_three_chromatic() {
        let g = generators::dodecahedral().graph;
        let (col, cert) = backtracking_colour(&g, None);
        assert_eq!(col.k, 3);
        assert!(cert.optimal);
    }

    #[test]
    fn complete_graph_halts_at_clique_bound() {
        let g = generators::complete(6);
        // the clique precolouring alone finishes the search: zero budget
        let (col, cert) = backtracking_colour(&g, Some(0));
        assert_eq!(col.k, 6);
        assert!(cert.optimal);
        assert_eq!(cert.lower_bound, 6);
        assert!(!cert.search_exhausted);
    }

    #[test]
    fn budget_exhaustion_is_honest() {
        let g = generators::gnp(30, 0.5, Seed(7)).unwrap();
        let (col, cert) = backtracking_colour(&g, Some(40));
        assert!(!cert.optimal);
        assert!(!cert.search_exhausted);
        assert!(cert.lower_bound <= cert.upper_bound);
        assert_eq!(cert.upper_bound, col.k);
        for &(u, v) in g.edges() {
            assert_ne!(col.assignment[u], col.assignment[v]);
        }
    }

    #[test]
    fn never_beats_the_clique_bound() {
        for seed in 0..20u64 {
            let g = generators::gnp(14, 0.5, Seed(seed)).unwrap();
            let clique = g.greedy_clique().size();
            let (col, cert) = backtracking_colour(&g, None);
            assert!(col.k >= clique);
            if col.k == clique {
                assert!(cert.optimal);
            }
        }
    }

    #[test]
    fn single_node_and_edgeless_graphs() {
        let g = Graph::build(1, &[]).unwrap();
        let (col, cert) = backtracking_colour(&g, None);
        assert_eq!(col.k, 1);
        assert!(cert.optimal);

        let g = Graph::build(5, &[]).unwrap();
        let (col, _) = backtracking_colour(&g, None);
        assert_eq!(col.k, 1);
    }

    #[test]
    fn odd_cycles_need_three() {
        for n in [5usize, 9, 15] {
            let g = generators::cycle(n).unwrap();
            let (col, cert) = backtracking_colour(&g, None);
            assert_eq!(col.k, 3, "C{n}");
            assert!(cert.optimal);
            assert!(cert.search_exhausted);
        }
    }
}
