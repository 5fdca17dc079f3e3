//! Hybrid evolutionary colouring: a small population of improper
//! k-colourings evolves by partition crossover plus tabu-search local
//! improvement, lowering k each time a proper colouring is found.

use super::dsatur::SaturationState;
use super::tabu::{tabu_search_with, TabuParams};
use super::{Colouring, OptimalityCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::Seed;
use rand::Rng;
use std::time::{Duration, Instant};

/// Tuning for [`hea_colour`]. `time_limit` optionally caps the wall-clock
/// spend; leaving it `None` keeps the run fully deterministic in `seed`.
#[derive(Debug, Clone)]
pub struct HeaParams {
    pub population_size: usize,
    pub tabu_iterations_per_offspring: u64,
    pub tabu_tenure_scale: f64,
    pub tabu_tenure_jitter: u32,
    /// consecutive crossover cycles without a clash improvement before the
    /// current k is declared out of reach
    pub stall_cycles: u64,
    pub time_limit: Option<Duration>,
    pub seed: Seed,
}

impl Default for HeaParams {
    fn default() -> Self {
        HeaParams {
            population_size: 10,
            tabu_iterations_per_offspring: 4000,
            tabu_tenure_scale: 0.6,
            tabu_tenure_jitter: 9,
            stall_cycles: 20,
            time_limit: None,
            seed: Seed(0),
        }
    }
}

/// Partition crossover: the offspring inherits, alternately from the larger
/// side, the biggest colour class still available across both parents. At
/// step s the largest remaining class (ties: lower label, parent order) is
/// copied as class s and its nodes are struck from both parents; nodes left
/// over after k steps get uniform random labels.
pub fn gpx_crossover(
    g: &Graph,
    parent_a: &[usize],
    parent_b: &[usize],
    k: usize,
    seed: Seed,
) -> Result<Vec<usize>> {
    let n = g.node_count();
    if parent_a.len() != n || parent_b.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: parent_a.len().max(parent_b.len()),
        });
    }
    for &c in parent_a.iter().chain(parent_b) {
        if c >= k {
            return Err(Error::LabelOutOfRange { label: c, k });
        }
    }

    let mut rng = seed.rng();
    // classes[side][label] lists the nodes still carrying that label
    let mut classes: [Vec<Vec<usize>>; 2] = [vec![Vec::new(); k], vec![Vec::new(); k]];
    for v in 0..n {
        classes[0][parent_a[v]].push(v);
        classes[1][parent_b[v]].push(v);
    }
    let mut taken = vec![false; n];
    let mut child = vec![usize::MAX; n];

    for step in 0..k {
        let mut pick: Option<(usize, usize)> = None;
        let mut pick_len = 0usize;
        // ties go to the lower label, then to parent A, so walk the two
        // parents' classes for each label together
        for (label, (a, b)) in classes[0].iter().zip(&classes[1]).enumerate() {
            for (side, class) in [a, b].into_iter().enumerate() {
                let len = class.iter().filter(|&&v| !taken[v]).count();
                if len > pick_len {
                    pick_len = len;
                    pick = Some((side, label));
                }
            }
        }
        let Some((side, label)) = pick else { break };
        for &v in &classes[side][label] {
            if !taken[v] {
                taken[v] = true;
                child[v] = step;
            }
        }
        classes[side][label].clear();
    }
    for v in 0..n {
        if !taken[v] {
            child[v] = rng.random_range(0..k);
        }
    }
    Ok(child)
}

/// Minimise colours with the evolutionary search. The certificate's lower
/// bound comes from a greedily found clique; `optimal` is only claimed when
/// the two bounds meet, and the search is never marked exhausted.
pub fn hea_colour(g: &Graph, params: &HeaParams) -> Result<(Colouring, OptimalityCertificate)> {
    if params.population_size < 2 {
        return Err(Error::InvalidParameter(
            "population size must be at least 2".into(),
        ));
    }
    let lower = g.greedy_clique().size();
    let tabu_params = TabuParams {
        tenure_scale: params.tabu_tenure_scale,
        tenure_jitter: params.tabu_tenure_jitter,
    };
    let deadline = params.time_limit.map(|limit| Instant::now() + limit);
    let mut rng = params.seed.rng();

    let seed_colouring = super::dsatur_colour(g);
    let mut best_labels = seed_colouring.assignment.clone();
    let mut best_k = seed_colouring.k;

    'shrink: while best_k > lower {
        let k = best_k - 1;
        let mut population = Vec::with_capacity(params.population_size);
        let mut fitness = Vec::with_capacity(params.population_size);
        for _ in 0..params.population_size {
            let start = capped_dsatur(g, k, &mut rng);
            let (labels, clashes) = tabu_search_with(
                g,
                &start,
                k,
                params.tabu_iterations_per_offspring,
                Seed(rng.random::<u64>()),
                &tabu_params,
            );
            population.push(labels);
            fitness.push(clashes);
        }

        let mut stall = 0u64;
        let mut k_best = *fitness.iter().min().expect("population is non-empty");
        loop {
            if let Some(i) = fitness.iter().position(|&f| f == 0) {
                best_labels = population[i].clone();
                best_k = k;
                continue 'shrink;
            }
            if stall >= params.stall_cycles {
                break 'shrink; // k is out of reach; keep the last success
            }
            if let Some(deadline) = deadline {
                if Instant::now() >= deadline {
                    break 'shrink;
                }
            }
            let a = rng.random_range(0..population.len());
            let b = loop {
                let b = rng.random_range(0..population.len());
                if b != a {
                    break b;
                }
            };
            let child = gpx_crossover(g, &population[a], &population[b], k, Seed(rng.random()))?;
            let (labels, clashes) = tabu_search_with(
                g,
                &child,
                k,
                params.tabu_iterations_per_offspring,
                Seed(rng.random()),
                &tabu_params,
            );
            // the weaker parent makes way; ties evict the second pick
            let out = if fitness[a] > fitness[b] { a } else { b };
            population[out] = labels;
            fitness[out] = clashes;
            if clashes < k_best {
                k_best = clashes;
                stall = 0;
            } else {
                stall += 1;
            }
        }
    }

    let colouring = Colouring::node("hea", best_labels);
    let certificate = OptimalityCertificate {
        lower_bound: lower,
        upper_bound: colouring.k,
        optimal: colouring.k == lower,
        search_exhausted: false,
    };
    Ok((colouring, certificate))
}

// DSatur restricted to k colours, random tie-breaks: nodes with no feasible
// colour get a uniform random label, leaving clashes for tabu to repair
fn capped_dsatur<R: Rng>(g: &Graph, k: usize, rng: &mut R) -> Vec<usize> {
    let mut state = SaturationState::new(g, k);
    while let Some(v) = state.select_random_tie(rng) {
        match state.min_feasible(v) {
            Some(c) => state.assign(g, v, c),
            None => state.assign(g, v, rng.random_range(0..k)),
        }
    }
    state.complete_labels()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::backtracking_colour;
    use crate::generators;

    fn params(seed: u64) -> HeaParams {
        HeaParams {
            seed: Seed(seed),
            ..HeaParams::default()
        }
    }

    #[test]
    fn gpx_prefers_the_globally_largest_class() {
        // parent a: {0,1,2} as class 0, {3,4} as class 1
        // parent b: {0,1} as class 0, {2,3,4} as class 1
        let g = generators::path(5).unwrap();
        let a = vec![0, 0, 0, 1, 1];
        let b = vec![0, 0, 1, 1, 1];
        let child = gpx_crossover(&g, &a, &b, 2, Seed(1)).unwrap();
        // step 0 takes {0,1,2} (size 3, label 0 of a, scanned before b's
        // equally sized class 1); step 1 takes a's class 1 = {3,4}
        assert_eq!(child, vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn gpx_on_identical_parents_relabels_classes_by_size() {
        let g = generators::complete(4);
        let a = vec![2, 1, 0, 2];
        let child = gpx_crossover(&g, &a, &a, 3, Seed(5)).unwrap();
        // class 2 = {0,3} is largest and becomes 0; classes {1} and {2}
        // follow in label order
        assert_eq!(child, vec![0, 2, 1, 0]);
    }

    #[test]
    fn gpx_output_labels_stay_below_k() {
        for seed in 0..20u64 {
            let g = generators::gnp(15, 0.5, Seed(seed)).unwrap();
            let k = 4;
            let mut rng = Seed(seed ^ 0x5eed).rng();
            let a: Vec<usize> = (0..15).map(|_| rng.random_range(0..k)).collect();
            let b: Vec<usize> = (0..15).map(|_| rng.random_range(0..k)).collect();
            let child = gpx_crossover(&g, &a, &b, k, Seed(seed)).unwrap();
            assert_eq!(child.len(), 15);
            assert!(child.iter().all(|&c| c < k), "seed {seed}");
        }
    }

    #[test]
    fn gpx_rejects_bad_input() {
        let g = generators::path(3).unwrap();
        let short = vec![0, 1];
        let full = vec![0, 1, 0];
        assert!(matches!(
            gpx_crossover(&g, &short, &full, 2, Seed(0)),
            Err(Error::SizeMismatch { .. })
        ));
        let high = vec![0, 5, 0];
        assert!(matches!(
            gpx_crossover(&g, &full, &high, 2, Seed(0)),
            Err(Error::LabelOutOfRange { label: 5, k: 2 })
        ));
    }

    #[test]
    fn bipartite_graphs_collapse_to_two_colours() {
        let g = generators::hexagonal_lattice(2, 3).graph;
        let (col, cert) = hea_colour(&g, &params(9)).unwrap();
        assert_eq!(col.k, 2);
        assert_eq!(cert.lower_bound, 2);
        assert!(cert.optimal);
    }

    #[test]
    fn complete_graph_meets_its_clique_bound() {
        let g = generators::complete(6);
        let (col, cert) = hea_colour(&g, &params(4)).unwrap();
        assert_eq!(col.k, 6);
        assert!(cert.optimal);
        assert!(!cert.search_exhausted);
    }

    #[test]
    fn never_worse_than_dsatur_and_always_proper() {
        for seed in 0..6u64 {
            let g = generators::gnp(28, 0.45, Seed(seed)).unwrap();
            let dsatur_k = crate::colouring::dsatur_colour(&g).k;
            let (col, cert) = hea_colour(&g, &params(seed)).unwrap();
            assert!(col.k <= dsatur_k, "seed {seed}");
            assert!(cert.lower_bound <= col.k);
            for &(u, v) in g.edges() {
                assert_ne!(col.assignment[u], col.assignment[v], "seed {seed}");
            }
        }
    }

    #[test]
    fn agrees_with_exhaustive_search_on_small_graphs() {
        for seed in 0..8u64 {
            let g = generators::gnp(12, 0.5, Seed(100 + seed)).unwrap();
            let (exact, cert) = backtracking_colour(&g, None);
            assert!(cert.optimal);
            let (col, _) = hea_colour(&g, &params(seed)).unwrap();
            assert_eq!(col.k, exact.k, "seed {seed}");
        }
    }

    #[test]
    fn deterministic_without_a_time_limit() {
        let g = generators::gnp(20, 0.5, Seed(77)).unwrap();
        let (a, ca) = hea_colour(&g, &params(13)).unwrap();
        let (b, cb) = hea_colour(&g, &params(13)).unwrap();
        assert_eq!(a.assignment, b.assignment);
        assert_eq!(ca, cb);
    }
}
