//! Node placement: force simulation, colour-grouped circle, and
//! colour-column layouts.

use super::{Layout, LayoutStyle};
use crate::colouring::{Colouring, ColouringKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::Seed;
use rand::Rng;

// force-model constants: nodes repel with k_r / d, edges pull with a
// Hooke spring towards the ideal length, and per-step movement is capped
// by a geometrically cooling temperature
const IDEAL_EDGE_LENGTH: f64 = 1.0;
const REPULSION: f64 = 0.2;
const SPRING: f64 = 0.08;
const INITIAL_TEMPERATURE: f64 = 0.25;
const COOLING: f64 = 0.985;

/// Iterative force simulation: mutual repulsion, spring attraction along
/// edges, geometric cooling. Output is normalised to the unit square and
/// fully determined by `(g, seed, iterations)`.
pub fn spring_layout(g: &Graph, seed: Seed, iterations: usize) -> Layout {
    let n = g.node_count();
    let mut rng = seed.rng();
    if n == 1 {
        return Layout {
            positions: vec![(0.5, 0.5)],
            style: LayoutStyle::Spring,
        };
    }

    let spread = (n as f64).sqrt() * IDEAL_EDGE_LENGTH;
    let mut pos: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.random::<f64>() * spread, rng.random::<f64>() * spread))
        .collect();
    let mut temperature = INITIAL_TEMPERATURE * spread;

    let mut force = vec![(0.0f64, 0.0f64); n];
    for _ in 0..iterations {
        for f in force.iter_mut() {
            *f = (0.0, 0.0);
        }
        for u in 0..n {
            for v in u + 1..n {
                let (dx, dy) = (pos[u].0 - pos[v].0, pos[u].1 - pos[v].1);
                let d = (dx * dx + dy * dy).sqrt();
                // coincident nodes get a deterministic nudge instead of a
                // division by zero
                let (dx, dy, d) = if d < 1e-9 {
                    let angle = (u * n + v) as f64;
                    (angle.cos() * 1e-6, angle.sin() * 1e-6, 1e-6)
                } else {
                    (dx, dy, d)
                };
                let push = REPULSION / d;
                force[u].0 += push * dx / d;
                force[u].1 += push * dy / d;
                force[v].0 -= push * dx / d;
                force[v].1 -= push * dy / d;
            }
        }
        for &(u, v) in g.edges() {
            let (dx, dy) = (pos[u].0 - pos[v].0, pos[u].1 - pos[v].1);
            let d = (dx * dx + dy * dy).sqrt().max(1e-9);
            let pull = SPRING * (d - IDEAL_EDGE_LENGTH);
            force[u].0 -= pull * dx / d;
            force[u].1 -= pull * dy / d;
            force[v].0 += pull * dx / d;
            force[v].1 += pull * dy / d;
        }
        for v in 0..n {
            let (fx, fy) = force[v];
            let magnitude = (fx * fx + fy * fy).sqrt();
            if magnitude > 1e-12 {
                let step = magnitude.min(temperature);
                pos[v].0 += fx / magnitude * step;
                pos[v].1 += fy / magnitude * step;
            }
        }
        temperature *= COOLING;
    }

    Layout {
        positions: normalise_to_unit_square(pos),
        style: LayoutStyle::Spring,
    }
}

/// Scale and translate into [0, 1]^2, preserving the aspect ratio and
/// centring the shorter axis.
fn normalise_to_unit_square(positions: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    let min_x = positions.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = positions
        .iter()
        .map(|p| p.0)
        .fold(f64::NEG_INFINITY, f64::max);
    let min_y = positions.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = positions
        .iter()
        .map(|p| p.1)
        .fold(f64::NEG_INFINITY, f64::max);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-12);
    let offset_x = (1.0 - (max_x - min_x) / span) / 2.0;
    let offset_y = (1.0 - (max_y - min_y) / span) / 2.0;
    positions
        .into_iter()
        .map(|(x, y)| ((x - min_x) / span + offset_x, (y - min_y) / span + offset_y))
        .collect()
}

fn expect_node_colouring(g: &Graph, colouring: &Colouring) -> Result<()> {
    if colouring.kind != ColouringKind::Node {
        return Err(Error::WrongColouringKind {
            expected: "node",
            found: colouring.kind.name(),
        });
    }
    if colouring.len() != g.node_count() {
        return Err(Error::SizeMismatch {
            expected: g.node_count(),
            found: colouring.len(),
        });
    }
    Ok(())
}

/// Nodes on a unit circle, same-coloured nodes in adjacent positions:
/// sorted by (label, index), then spaced at equal angles starting from the
/// top and running clockwise.
pub fn circular_grouped_layout(g: &Graph, colouring: &Colouring) -> Result<Layout> {
    expect_node_colouring(g, colouring)?;
    let n = g.node_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colouring.assignment[v], v));
    let mut positions = vec![(0.0, 0.0); n];
    for (slot, &v) in order.iter().enumerate() {
        let angle = std::f64::consts::FRAC_PI_2 - std::f64::consts::TAU * slot as f64 / n as f64;
        positions[v] = (angle.cos(), angle.sin());
    }
    Ok(Layout {
        positions,
        style: LayoutStyle::Circular,
    })
}

/// One column per colour class at x = label, members stacked by index:
/// with a valid colouring no edge can be vertical, because its endpoints
/// carry different labels and so different x.
pub fn multipartite_layout(g: &Graph, colouring: &Colouring) -> Result<Layout> {
    expect_node_colouring(g, colouring)?;
    let mut height = vec![0usize; colouring.k.max(1)];
    let mut positions = Vec::with_capacity(g.node_count());
    for &label in &colouring.assignment {
        positions.push((label as f64, height[label] as f64));
        height[label] += 1;
    }
    Ok(Layout {
        positions,
        style: LayoutStyle::Multipartite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::dsatur_colour;
    use crate::generators;

    fn distance(a: (f64, f64), b: (f64, f64)) -> f64 {
        ((a.0 - b.0).powi(2) + (a.1 - b.1).powi(2)).sqrt()
    }

    #[test]
    fn single_node_sits_in_the_centre() {
        let g = Graph::build(1, &[]).unwrap();
        let layout = spring_layout(&g, Seed(3), 50);
        assert_eq!(layout.positions, vec![(0.5, 0.5)]);
    }

    #[test]
    fn isolated_nodes_repel() {
        let g = Graph::build(2, &[]).unwrap();
        // replay the seeded initial placement to know the starting gap
        let mut rng = Seed(8).rng();
        let spread = 2f64.sqrt();
        let a = (rng.random::<f64>() * spread, rng.random::<f64>() * spread);
        let b = (rng.random::<f64>() * spread, rng.random::<f64>() * spread);
        let initial = distance(a, b) / spread; // in unit-square terms

        let layout = spring_layout(&g, Seed(8), 200);
        let final_gap = distance(layout.positions[0], layout.positions[1]);
        assert!(
            final_gap > initial,
            "repulsion should push the pair apart ({initial:.3} -> {final_gap:.3})"
        );
        assert!(
            final_gap > 0.9,
            "unnormalised flight is rescaled to the frame"
        );
    }

    #[test]
    fn springs_keep_cycle_neighbours_closest() {
        let g = generators::cycle(10).unwrap();
        let layout = spring_layout(&g, Seed(1), 200);
        let mut adjacent = Vec::new();
        let mut distant = Vec::new();
        for u in 0..10 {
            for v in u + 1..10 {
                let d = distance(layout.positions[u], layout.positions[v]);
                if g.has_edge(u, v) {
                    adjacent.push(d);
                } else {
                    distant.push(d);
                }
            }
        }
        let mean = |xs: &[f64]| xs.iter().sum::<f64>() / xs.len() as f64;
        assert!(
            mean(&adjacent) < mean(&distant),
            "adjacent {:.3} vs non-adjacent {:.3}",
            mean(&adjacent),
            mean(&distant)
        );
    }

    #[test]
    fn layouts_are_deterministic_and_inside_the_unit_square() {
        let g = generators::gnp(40, 0.15, Seed(6)).unwrap();
        let a = spring_layout(&g, Seed(9), 150);
        let b = spring_layout(&g, Seed(9), 150);
        assert_eq!(a.positions, b.positions);
        for &(x, y) in &a.positions {
            assert!((-1e-9..=1.0 + 1e-9).contains(&x), "x={x}");
            assert!((-1e-9..=1.0 + 1e-9).contains(&y), "y={y}");
        }
        // distinct positions
        for i in 0..40 {
            for j in i + 1..40 {
                assert!(distance(a.positions[i], a.positions[j]) > 1e-9);
            }
        }
    }

    #[test]
    fn circle_positions_group_labels_contiguously() {
        let g = generators::gnp(30, 0.5, Seed(4)).unwrap();
        let colouring = dsatur_colour(&g);
        let layout = circular_grouped_layout(&g, &colouring).unwrap();

        for &(x, y) in &layout.positions {
            assert!(((x * x + y * y).sqrt() - 1.0).abs() < 1e-9);
        }
        // recover each node's slot on the circle from its coordinates, then
        // count label changes walking once around (including the wrap): k
        // contiguous arcs have exactly k boundaries
        let mut by_slot: Vec<(usize, usize)> = (0..30)
            .map(|v| {
                let (x, y) = layout.positions[v];
                let turns = (std::f64::consts::FRAC_PI_2 - y.atan2(x)) / std::f64::consts::TAU;
                ((turns * 30.0).round().rem_euclid(30.0) as usize, v)
            })
            .collect();
        by_slot.sort_unstable();
        let slots: Vec<usize> = by_slot.iter().map(|&(s, _)| s).collect();
        assert_eq!(slots, (0..30).collect::<Vec<_>>(), "equal angular spacing");
        let ring: Vec<usize> = by_slot
            .iter()
            .map(|&(_, v)| colouring.assignment[v])
            .collect();
        let changes =
            ring.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(ring[0] != ring[29]);
        assert!(colouring.k > 1);
        assert_eq!(changes, colouring.k);
    }

    #[test]
    fn columns_hold_whole_colour_classes() {
        let g = generators::cycle(8).unwrap();
        let colouring = dsatur_colour(&g); // alternating, k=2
        let layout = multipartite_layout(&g, &colouring).unwrap();
        let mut column_sizes = vec![0usize; colouring.k];
        for v in 0..8 {
            let (x, _) = layout.positions[v];
            assert_eq!(x, colouring.assignment[v] as f64);
            column_sizes[x as usize] += 1;
        }
        let mut expected = vec![0usize; colouring.k];
        for v in 0..8 {
            expected[colouring.assignment[v]] += 1;
        }
        assert_eq!(column_sizes, expected);
    }

    #[test]
    fn no_edge_is_ever_vertical() {
        for seed in 0..10u64 {
            let g = generators::gnp(25, 0.3, Seed(seed)).unwrap();
            let colouring = dsatur_colour(&g);
            let layout = multipartite_layout(&g, &colouring).unwrap();
            for &(u, v) in g.edges() {
                assert_ne!(
                    layout.positions[u].0, layout.positions[v].0,
                    "seed {seed}: edge ({u},{v})"
                );
            }
        }
    }

    #[test]
    fn grouped_layouts_reject_non_node_colourings() {
        let g = generators::cycle(6).unwrap();
        let edge_col =
            crate::colouring::colour_edges(&g, &crate::colouring::AlgorithmChoice::Dsatur)
                .unwrap()
                .colouring;
        assert!(matches!(
            circular_grouped_layout(&g, &edge_col),
            Err(Error::WrongColouringKind { .. })
        ));
        assert!(matches!(
            multipartite_layout(&g, &edge_col),
            Err(Error::WrongColouringKind { .. })
        ));
    }
}
