//! DSatur colouring and the shared saturation bookkeeping.
//!
//! The selection rule: take the uncoloured node with the most distinct
//! colours among its neighbours; break ties by the largest degree within the
//! subgraph induced by the uncoloured nodes, then by lowest index. The same
//! incremental state drives the backtracking search, which also unassigns.

use super::Colouring;
use crate::graph::Graph;
use rand::Rng;

pub(crate) struct SaturationState {
    // counts[v][c]: coloured neighbours of v currently holding colour c
    counts: Vec<Vec<u32>>,
    saturation: Vec<u32>,
    uncoloured_degree: Vec<u32>,
    labels: Vec<Option<usize>>,
    colour_use: Vec<u32>,
    distinct_colours: usize,
    remaining: usize,
}

impl SaturationState {
    pub(crate) fn new(g: &Graph, colour_capacity: usize) -> Self {
        let n = g.node_count();
        SaturationState {
            counts: vec![vec![0; colour_capacity]; n],
            saturation: vec![0; n],
            uncoloured_degree: (0..n).map(|v| g.degree(v) as u32).collect(),
            labels: vec![None; n],
            colour_use: vec![0; colour_capacity],
            distinct_colours: 0,
            remaining: n,
        }
    }

    pub(crate) fn assign(&mut self, g: &Graph, v: usize, c: usize) {
        debug_assert!(self.labels[v].is_none());
        self.labels[v] = Some(c);
        self.remaining -= 1;
        if self.colour_use[c] == 0 {
            self.distinct_colours += 1;
        }
        self.colour_use[c] += 1;
        for &w in g.neighbours(v) {
            self.uncoloured_degree[w] -= 1;
            let cell = &mut self.counts[w][c];
            if *cell == 0 {
                self.saturation[w] += 1;
            }
            *cell += 1;
        }
    }

    pub(crate) fn unassign(&mut self, g: &Graph, v: usize) {
        let c = self.labels[v].take().expect("node is coloured");
        self.remaining += 1;
        self.colour_use[c] -= 1;
        if self.colour_use[c] == 0 {
            self.distinct_colours -= 1;
        }
        for &w in g.neighbours(v) {
            self.uncoloured_degree[w] += 1;
            let cell = &mut self.counts[w][c];
            *cell -= 1;
            if *cell == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    /// Next node under the DSatur rule, or None when all are coloured.
    pub(crate) fn select(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.labels.len() {
            if self.labels[v].is_some() {
                continue;
            }
            best = match best {
                Some(b)
                    if (self.saturation[v], self.uncoloured_degree[v])
                        <= (self.saturation[b], self.uncoloured_degree[b]) =>
                {
                    Some(b)
                }
                _ => Some(v),
            };
        }
        best
    }

    /// DSatur selection with ties broken uniformly at random instead of by
    /// lowest index; used to diversify population initialisation.
    pub(crate) fn select_random_tie<R: Rng>(&self, rng: &mut R) -> Option<usize> {
        let best = self.select()?;
        let key = (self.saturation[best], self.uncoloured_degree[best]);
        let ties: Vec<usize> = (0..self.labels.len())
            .filter(|&v| {
                self.labels[v].is_none() && (self.saturation[v], self.uncoloured_degree[v]) == key
            })
            .collect();
        Some(ties[rng.random_range(0..ties.len())])
    }

    pub(crate) fn feasible(&self, v: usize, c: usize) -> bool {
        self.counts[v][c] == 0
    }

    /// Lowest feasible colour below the state's capacity, if any.
    pub(crate) fn min_feasible(&self, v: usize) -> Option<usize> {
        (0..self.counts[v].len()).find(|&c| self.feasible(v, c))
    }

    pub(crate) fn colours_in_use(&self) -> usize {
        self.distinct_colours
    }

    pub(crate) fn all_coloured(&self) -> bool {
        self.remaining == 0
    }

    pub(crate) fn complete_labels(&self) -> Vec<usize> {
        self.labels
            .iter()
            .map(|l| l.expect("assignment is complete"))
            .collect()
    }
}

/// Colour `g` with the DSatur algorithm: repeatedly select a node by the
/// saturation rule and give it the lowest feasible colour. Exact for
/// bipartite graphs, trees, cycles, and wheels.
pub fn dsatur_colour(g: &Graph) -> Colouring {
    let mut state = SaturationState::new(g, g.max_degree() + 2);
    while let Some(v) = state.select() {
        let c = state.min_feasible(v).expect("degree bounds the label");
        state.assign(g, v, c);
    }
    Colouring::node("dsatur", state.complete_labels())
}
