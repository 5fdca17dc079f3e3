//! Constructors for the graph families the engine works with: random
//! G(n,p), complete graphs, cycles, wheels, paths, trees, lattices, the
//! Sierpinski triangle, and the dodecahedral graph.
//!
//! Families with a natural drawing return an [`EmbeddedGraph`] whose
//! straight-line layout is crossing-free. Everything here is deterministic:
//! the same arguments (and seed, where one applies) reproduce the same
//! graph bit for bit.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::Seed;
use rand::Rng;
use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, TAU};

/// A graph together with per-node drawing coordinates.
#[derive(Debug, Clone)]
pub struct EmbeddedGraph {
    pub graph: Graph,
    /// One `(x, y)` position per node, in abstract drawing units.
    pub coordinates: Vec<(f64, f64)>,
}

impl EmbeddedGraph {
    /// Pair a graph with coordinates, validating that there is one finite
    /// position per node and that no two nodes coincide.
    pub fn new(graph: Graph, coordinates: Vec<(f64, f64)>) -> Result<EmbeddedGraph> {
        if coordinates.len() != graph.node_count() {
            return Err(Error::SizeMismatch {
                expected: graph.node_count(),
                found: coordinates.len(),
            });
        }
        for (i, &(x, y)) in coordinates.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "non-finite coordinate at node {i}"
                )));
            }
        }
        let mut keyed: Vec<(u64, u64, usize)> = coordinates
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| (canon_bits(x), canon_bits(y), i))
            .collect();
        keyed.sort_unstable();
        for pair in keyed.windows(2) {
            if pair[0].0 == pair[1].0 && pair[0].1 == pair[1].1 {
                return Err(Error::CoincidentCoordinates {
                    a: pair[0].2.min(pair[1].2),
                    b: pair[0].2.max(pair[1].2),
                });
            }
        }
        Ok(EmbeddedGraph { graph, coordinates })
    }

    /// All pairs of non-adjacent edges whose straight segments intersect.
    /// Empty for a valid plane drawing. Exhaustive over edge pairs.
    pub fn crossing_edge_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let edges = self.graph.edges();
        let mut out = Vec::new();
        for i in 0..edges.len() {
            let (a, b) = edges[i];
            for &(c, d) in &edges[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if segments_intersect(
                    self.coordinates[a],
                    self.coordinates[b],
                    self.coordinates[c],
                    self.coordinates[d],
                ) {
                    out.push(((a, b), (c, d)));
                }
            }
        }
        out
    }

    /// Whether the straight-line drawing is free of edge crossings.
    pub fn is_plane_drawing(&self) -> bool {
        self.crossing_edge_pairs().is_empty()
    }
}

fn canon_bits(x: f64) -> u64 {
    // fold -0.0 onto 0.0 so coincidence is by value
    if x == 0.0 {
        0.0f64.to_bits()
    } else {
        x.to_bits()
    }
}

const EPS: f64 = 1e-12;

fn orient(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    let v = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
    if v.abs() < EPS {
        0.0
    } else {
        v
    }
}

fn bounding_box_contains(a: (f64, f64), b: (f64, f64), p: (f64, f64)) -> bool {
    p.0 >= a.0.min(b.0) - EPS
        && p.0 <= a.0.max(b.0) + EPS
        && p.1 >= a.1.min(b.1) - EPS
        && p.1 <= a.1.max(b.1) + EPS
}

/// Closed-segment intersection for segments with four distinct endpoints.
fn segments_intersect(p1: (f64, f64), p2: (f64, f64), p3: (f64, f64), p4: (f64, f64)) -> bool {
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && bounding_box_contains(p3, p4, p1))
        || (d2 == 0.0 && bounding_box_contains(p3, p4, p2))
        || (d3 == 0.0 && bounding_box_contains(p1, p2, p3))
        || (d4 == 0.0 && bounding_box_contains(p1, p2, p4))
}

/// Erdos-Renyi G(n, p): each node pair becomes an edge independently with
/// probability `p`. Pairs are visited in lexicographic order and consume one
/// uniform deviate each, so the result is reproducible per seed.
pub fn gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::build(n, &edges)
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    assert!(n >= 1, "complete graph needs at least one node");
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).expect("complete graph edges are valid")
}

/// Cycle C_n, n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs at least 3 nodes, got {n}"
        )));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &edges)
}

/// Wheel on `n` nodes: hub 0 joined to a rim cycle on nodes `1..n`.
/// Needs a rim of at least 3, so n >= 4.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "wheel needs at least 4 nodes (hub plus a 3-cycle rim), got {n}"
        )));
    }
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    for i in 1..n {
        let j = if i == n - 1 { 1 } else { i + 1 };
        edges.push((i, j));
    }
    Graph::build(n, &edges)
}

/// Path on `n` nodes, n >= 1.
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges)
}

/// Layout parameters for [`binary_tree_with`].
#[derive(Debug, Clone, Copy)]
pub struct TreeLayout {
    /// Angle between each child branch and its parent's heading, in degrees.
    pub branch_angle_degrees: f64,
    /// Ratio of a child edge's length to its parent edge's length.
    pub length_decay: f64,
}

impl Default for TreeLayout {
    // decay 0.55 is the largest value (in 0.01 steps) whose drawing stays
    // crossing-free up to 4096 nodes at a 30 degree branch angle
    fn default() -> Self {
        TreeLayout {
            branch_angle_degrees: 30.0,
            length_decay: 0.55,
        }
    }
}

/// Complete binary tree truncated to `node_count` nodes, heap-indexed
/// (children of `i` are `2i+1` and `2i+2`), drawn as a self-avoiding
/// fractal canopy with the default [`TreeLayout`].
pub fn binary_tree(node_count: usize) -> EmbeddedGraph {
    binary_tree_with(node_count, TreeLayout::default())
}

/// [`binary_tree`] with explicit layout parameters. The root sits at the
/// origin heading straight up; each edge is `length_decay` times as long as
/// the one above it, starting from unit length.
pub fn binary_tree_with(node_count: usize, layout: TreeLayout) -> EmbeddedGraph {
    assert!(node_count >= 1, "tree needs at least one node");
    let edges: Vec<(usize, usize)> = (1..node_count).map(|i| ((i - 1) / 2, i)).collect();
    let graph = Graph::build(node_count, &edges).expect("heap edges are valid");

    let angle = layout.branch_angle_degrees.to_radians();
    let mut coords = vec![(0.0, 0.0); node_count];
    let mut heading = vec![FRAC_PI_2; node_count];
    let mut depth = vec![0u32; node_count];
    for i in 1..node_count {
        let parent = (i - 1) / 2;
        depth[i] = depth[parent] + 1;
        heading[i] = if i % 2 == 1 {
            heading[parent] + angle
        } else {
            heading[parent] - angle
        };
        let len = layout.length_decay.powi(depth[i] as i32 - 1);
        coords[i] = (
            coords[parent].0 + len * heading[i].cos(),
            coords[parent].1 + len * heading[i].sin(),
        );
    }
    EmbeddedGraph::new(graph, coords).expect("tree layout places nodes distinctly")
}

/// Square lattice of `rows` x `cols` unit cells on integer coordinates.
pub fn square_lattice(rows: usize, cols: usize) -> EmbeddedGraph {
    assert!(rows >= 1 && cols >= 1, "lattice needs at least one cell");
    let width = cols + 1;
    let idx = |r: usize, c: usize| r * width + c;
    let mut edges = Vec::new();
    let mut coords = Vec::with_capacity(width * (rows + 1));
    for r in 0..=rows {
        for c in 0..=cols {
            coords.push((c as f64, r as f64));
            if c < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
            }
        }
    }
    let graph = Graph::build(width * (rows + 1), &edges).expect("lattice edges are valid");
    EmbeddedGraph::new(graph, coords).expect("lattice coordinates are distinct")
}

/// Triangular lattice: `rows` x `cols` rhombic cells, each split into an
/// upward and a downward triangle, on a sheared integer grid.
pub fn triangular_lattice(rows: usize, cols: usize) -> EmbeddedGraph {
    assert!(rows >= 1 && cols >= 1, "lattice needs at least one cell");
    let width = cols + 1;
    let idx = |r: usize, c: usize| r * width + c;
    let row_height = 3f64.sqrt() / 2.0;
    let mut edges = Vec::new();
    let mut coords = Vec::with_capacity(width * (rows + 1));
    for r in 0..=rows {
        for c in 0..=cols {
            coords.push((c as f64 + r as f64 / 2.0, r as f64 * row_height));
            if c < cols {
                edges.push((idx(r, c), idx(r, c + 1)));
            }
            if r < rows {
                edges.push((idx(r, c), idx(r + 1, c)));
                if c < cols {
                    edges.push((idx(r, c + 1), idx(r + 1, c)));
                }
            }
        }
    }
    let graph = Graph::build(width * (rows + 1), &edges).expect("lattice edges are valid");
    EmbeddedGraph::new(graph, coords).expect("lattice coordinates are distinct")
}

/// Hexagonal (honeycomb) lattice of `rows` x `cols` pointy-top cells, odd
/// rows offset half a cell. Corners shared between cells are deduplicated
/// on an integer grid, then scaled so every edge has unit length.
pub fn hexagonal_lattice(rows: usize, cols: usize) -> EmbeddedGraph {
    assert!(rows >= 1 && cols >= 1, "lattice needs at least one cell");
    // pointy-top hexagon corners around a cell centre, counterclockwise
    const CORNERS: [(i64, i64); 6] = [(0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1), (1, 1)];
    let mut index: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut keys: Vec<(i64, i64)> = Vec::new();
    let mut intern = |key: (i64, i64)| -> usize {
        *index.entry(key).or_insert_with(|| {
            keys.push(key);
            keys.len() - 1
        })
    };
    let mut edges = Vec::new();
    for r in 0..rows as i64 {
        for c in 0..cols as i64 {
            let centre = (2 * c + (r & 1), 3 * r);
            let ring: Vec<usize> = CORNERS
                .iter()
                .map(|&(dx, dy)| intern((centre.0 + dx, centre.1 + dy)))
                .collect();
            for k in 0..6 {
                edges.push((ring[k], ring[(k + 1) % 6]));
            }
        }
    }
    let unit_x = 3f64.sqrt() / 2.0;
    let coords: Vec<(f64, f64)> = keys
        .iter()
        .map(|&(x, y)| (x as f64 * unit_x, y as f64 * 0.5))
        .collect();
    let graph = Graph::build(keys.len(), &edges).expect("lattice edges are valid");
    EmbeddedGraph::new(graph, coords).expect("lattice coordinates are distinct")
}

/// Sierpinski triangle graph at the given subdivision level. Level 1 is a
/// triangle of triangles (6 nodes, 9 edges); each further level subdivides
/// every triangle into three. Shared corners are deduplicated on an integer
/// grid sized so that all midpoints stay integral.
pub fn sierpinski(level: usize) -> EmbeddedGraph {
    assert!(level >= 1, "subdivision level must be at least 1");
    assert!(level <= 16, "subdivision level {level} too deep");
    let span = 1i64 << level;
    let mut index: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    let mut keys: Vec<(i64, i64)> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    fn subdivide(
        a: (i64, i64),
        b: (i64, i64),
        c: (i64, i64),
        depth: usize,
        index: &mut BTreeMap<(i64, i64), usize>,
        keys: &mut Vec<(i64, i64)>,
        edges: &mut Vec<(usize, usize)>,
    ) {
        if depth == 0 {
            let mut intern = |key: (i64, i64)| -> usize {
                *index.entry(key).or_insert_with(|| {
                    keys.push(key);
                    keys.len() - 1
                })
            };
            let (i, j, k) = (intern(a), intern(b), intern(c));
            edges.push((i, j));
            edges.push((j, k));
            edges.push((k, i));
            return;
        }
        let ab = ((a.0 + b.0) / 2, (a.1 + b.1) / 2);
        let bc = ((b.0 + c.0) / 2, (b.1 + c.1) / 2);
        let ca = ((c.0 + a.0) / 2, (c.1 + a.1) / 2);
        subdivide(a, ab, ca, depth - 1, index, keys, edges);
        subdivide(ab, b, bc, depth - 1, index, keys, edges);
        subdivide(ca, bc, c, depth - 1, index, keys, edges);
    }

    subdivide(
        (0, 0),
        (span, 0),
        (0, span),
        level,
        &mut index,
        &mut keys,
        &mut edges,
    );

    let row_height = 3f64.sqrt() / 2.0;
    let coords: Vec<(f64, f64)> = keys
        .iter()
        .map(|&(p, q)| (p as f64 + q as f64 / 2.0, q as f64 * row_height))
        .collect();
    let graph = Graph::build(keys.len(), &edges).expect("subdivision edges are valid");
    EmbeddedGraph::new(graph, coords).expect("subdivision coordinates are distinct")
}

/// The dodecahedral graph (20 nodes, 30 edges, 3-regular) with a Schlegel
/// diagram layout: four concentric rings of five nodes, the outer two
/// rotated half a step.
pub fn dodecahedral() -> EmbeddedGraph {
    let mut edges = Vec::with_capacity(30);
    for k in 0..5 {
        let next = (k + 1) % 5;
        edges.push((k, next)); // inner pentagon
        edges.push((k, 5 + k)); // inner spokes
        edges.push((5 + k, 10 + k)); // middle zigzag, outward
        edges.push((10 + k, 5 + next)); // middle zigzag, inward
        edges.push((10 + k, 15 + k)); // outer spokes
        edges.push((15 + k, 15 + next)); // outer pentagon
    }
    let graph = Graph::build(20, &edges).expect("dodecahedral edges are valid");

    let mut coords = Vec::with_capacity(20);
    for (ring, radius) in [1.0f64, 2.0, 3.0, 4.0].into_iter().enumerate() {
        let offset = if ring >= 2 { 0.5 } else { 0.0 };
        for k in 0..5 {
            let theta = FRAC_PI_2 + (k as f64 + offset) * TAU / 5.0;
            coords.push((radius * theta.cos(), radius * theta.sin()));
        }
    }
    EmbeddedGraph::new(graph, coords).expect("ring coordinates are distinct")
}
