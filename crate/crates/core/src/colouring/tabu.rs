//! Tabu search over improper k-colourings.
//!
//! The state is a complete assignment with labels below a fixed k; the cost
//! is the number of clashing edges. A move recolours one endpoint of a
//! clashing edge and is tabu for a spell proportional to the cost after the
//! move, plus a small random jitter. A tabu move is still taken when it
//! beats the best cost seen (aspiration).

use crate::graph::Graph;
use crate::rng::Seed;
use rand::Rng;

/// Tuning knobs for the tabu spell. The defaults reproduce the classic
/// `0.6 * clashes + rand(10)` schedule.
#[derive(Debug, Clone, Copy)]
pub struct TabuParams {
    pub tenure_scale: f64,
    pub tenure_jitter: u32,
}

impl Default for TabuParams {
    fn default() -> Self {
        TabuParams {
            tenure_scale: 0.6,
            tenure_jitter: 9,
        }
    }
}

/// Run tabu search from `start` for at most `iterations` moves, or until a
/// proper colouring is reached. Returns the best labels seen and their
/// clash count.
pub fn tabu_search(
    g: &Graph,
    start: &[usize],
    k: usize,
    iterations: u64,
    seed: Seed,
) -> (Vec<usize>, usize) {
    tabu_search_with(g, start, k, iterations, seed, &TabuParams::default())
}

/// As [`tabu_search`], with explicit tenure parameters.
pub fn tabu_search_with(
    g: &Graph,
    start: &[usize],
    k: usize,
    iterations: u64,
    seed: Seed,
    params: &TabuParams,
) -> (Vec<usize>, usize) {
    assert!(k >= 1, "k must be at least 1");
    assert_eq!(start.len(), g.node_count());
    assert!(start.iter().all(|&c| c < k), "start labels must be below k");

    let n = g.node_count();
    let mut rng = seed.rng();
    let mut labels = start.to_vec();

    // counts[v][c]: neighbours of v currently labelled c
    let mut counts = vec![vec![0usize; k]; n];
    for &(u, v) in g.edges() {
        counts[u][labels[v]] += 1;
        counts[v][labels[u]] += 1;
    }
    let mut clashes = g
        .edges()
        .iter()
        .filter(|&&(u, v)| labels[u] == labels[v])
        .count();

    let mut best_labels = labels.clone();
    let mut best_clashes = clashes;
    let mut tabu_until = vec![vec![0u64; k]; n];

    for iter in 1..=iterations {
        if best_clashes == 0 {
            break;
        }
        // candidate moves: recolour a clashing node
        let mut best_delta = isize::MAX;
        let mut chosen: Option<(usize, usize)> = None;
        let mut ties = 0usize;
        for v in 0..n {
            let old = labels[v];
            if counts[v][old] == 0 {
                continue;
            }
            for c in 0..k {
                if c == old {
                    continue;
                }
                let delta = counts[v][c] as isize - counts[v][old] as isize;
                let tabu = tabu_until[v][c] > iter;
                let aspires = (clashes as isize + delta) < best_clashes as isize;
                if tabu && !aspires {
                    continue;
                }
                if delta < best_delta {
                    best_delta = delta;
                    chosen = Some((v, c));
                    ties = 1;
                } else if delta == best_delta {
                    // reservoir sampling keeps each tied move equally likely
                    ties += 1;
                    if rng.random_range(0..ties) == 0 {
                        chosen = Some((v, c));
                    }
                }
            }
        }
        let Some((v, c)) = chosen else {
            break; // every move tabu and nothing aspires: stuck this sweep
        };

        let old = labels[v];
        labels[v] = c;
        for &w in g.neighbours(v) {
            counts[w][old] -= 1;
            counts[w][c] += 1;
        }
        clashes = (clashes as isize + best_delta) as usize;
        let spell = (params.tenure_scale * clashes as f64) as u64
            + rng.random_range(0..=params.tenure_jitter) as u64;
        tabu_until[v][old] = iter + spell;

        if clashes < best_clashes {
            best_clashes = clashes;
            best_labels.copy_from_slice(&labels);
        }
    }

    (best_labels, best_clashes)
}
