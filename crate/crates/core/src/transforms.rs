//! Reductions that turn edge and face colouring into node colouring:
//! line graphs, rotation systems, face tracing, and dual graphs.

use crate::error::{Error, Result};
use crate::generators::EmbeddedGraph;
use crate::graph::Graph;

/// Line graph L(G) plus the mapping from its nodes back to edges of G.
#[derive(Debug, Clone)]
pub struct LineGraphResult {
    pub line_graph: Graph,
    /// `edge_of_node[i]` is the edge of the original graph behind line-graph
    /// node `i`; indices follow the original's lexicographic edge order.
    pub edge_of_node: Vec<(usize, usize)>,
}

/// Build the line graph: one node per edge of `g`, adjacent iff the edges
/// share an endpoint.
pub fn line_graph(g: &Graph) -> Result<LineGraphResult> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let mut line_edges = Vec::new();
    for v in 0..g.node_count() {
        let incident: Vec<usize> = g
            .neighbours(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("adjacency and edges agree"))
            .collect();
        for (i, &e) in incident.iter().enumerate() {
            for &f in &incident[i + 1..] {
                line_edges.push((e, f));
            }
        }
    }
    let line_graph = Graph::build(g.edge_count(), &line_edges)?;
    Ok(LineGraphResult {
        line_graph,
        edge_of_node: g.edges().to_vec(),
    })
}

/// A combinatorial embedding: the cyclic counterclockwise neighbour order
/// around every node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    /// `rotation[v]` is a permutation of the neighbours of `v`.
    pub rotation: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Check that every rotation list permutes the node's adjacency list.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.rotation.len() != g.node_count() {
            return Err(Error::SizeMismatch {
                expected: g.node_count(),
                found: self.rotation.len(),
            });
        }
        for v in 0..g.node_count() {
            let mut sorted = self.rotation[v].clone();
            sorted.sort_unstable();
            if sorted != g.neighbours(v) {
                return Err(Error::InvalidRotation { node: v });
            }
        }
        Ok(())
    }
}

/// Derive the rotation system of a straight-line drawing: neighbours of each
/// node sorted by counterclockwise angle around its coordinates. The drawing
/// is assumed crossing-free; node coordinates are distinct by construction
/// of [`EmbeddedGraph`].
pub fn rotation_from_coordinates(eg: &EmbeddedGraph) -> RotationSystem {
    let rotation = (0..eg.graph.node_count())
        .map(|v| {
            let (vx, vy) = eg.coordinates[v];
            let mut ring: Vec<usize> = eg.graph.neighbours(v).to_vec();
            ring.sort_by(|&a, &b| {
                let (ax, ay) = eg.coordinates[a];
                let (bx, by) = eg.coordinates[b];
                let alpha = (ay - vy).atan2(ax - vx);
                let beta = (by - vy).atan2(bx - vx);
                alpha.total_cmp(&beta).then(a.cmp(&b))
            });
            ring
        })
        .collect();
    RotationSystem { rotation }
}

/// The faces of an embedding, each a closed walk of directed edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    /// Every directed edge appears in exactly one walk.
    pub faces: Vec<Vec<(usize, usize)>>,
}

impl FaceSet {
    pub fn count(&self) -> usize {
        self.faces.len()
    }
}

/// Trace the faces of `(g, rot)`: starting from each unvisited directed edge
/// `(u, v)`, repeatedly continue with `(v, w)` where `w` immediately precedes
/// `u` in the counterclockwise rotation at `v`. The orbits of this rule are
/// the faces; for a plane drawing's rotation system they satisfy Euler's
/// formula.
pub fn trace_faces(g: &Graph, rot: &RotationSystem) -> Result<FaceSet> {
    rot.validate(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.node_count();
    // position of u in the rotation at v, for each directed edge (u, v)
    let mut slot = vec![usize::MAX; 2 * g.edge_count()];
    let directed = |g: &Graph, u: usize, v: usize| -> usize {
        2 * g.edge_index(u, v).expect("edge exists") + usize::from(u > v)
    };
    for v in 0..n {
        for (pos, &u) in rot.rotation[v].iter().enumerate() {
            slot[directed(g, u, v)] = pos;
        }
    }

    let mut face_of = vec![usize::MAX; 2 * g.edge_count()];
    let mut faces = Vec::new();
    for u in 0..n {
        for &v in g.neighbours(u) {
            if face_of[directed(g, u, v)] != usize::MAX {
                continue;
            }
            let face_index = faces.len();
            let mut walk = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                face_of[directed(g, a, b)] = face_index;
                walk.push((a, b));
                let ring = &rot.rotation[b];
                let pos = slot[directed(g, a, b)];
                let w = ring[(pos + ring.len() - 1) % ring.len()];
                (a, b) = (b, w);
                if (a, b) == (u, v) {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    Ok(FaceSet { faces })
}

/// Dual graph: one node per face, adjacent iff the faces share at least one
/// boundary edge (parallel boundary edges collapse to a single dual edge).
#[derive(Debug, Clone)]
pub struct DualGraphResult {
    pub dual: Graph,
    /// Face behind each dual node; dual node `i` is face `i` of the traced
    /// [`FaceSet`].
    pub face_of_node: Vec<usize>,
    /// The face of greatest geometric extent when coordinates are given,
    /// otherwise the longest face walk; ties go to the lowest face index.
    pub unbounded_face: usize,
}

/// Build the dual of `(g, rot)`. Every edge must border two distinct faces,
/// so bridges are rejected. `coordinates`, when given, pick the unbounded
/// face by enclosed area instead of walk length.
pub fn dual_graph(
    g: &Graph,
    rot: &RotationSystem,
    coordinates: Option<&[(f64, f64)]>,
) -> Result<DualGraphResult> {
    let face_set = trace_faces(g, rot)?;
    let mut face_of = vec![(usize::MAX, usize::MAX); g.edge_count()];
    for (face_index, walk) in face_set.faces.iter().enumerate() {
        for &(u, v) in walk {
            let e = g.edge_index(u, v).expect("walk follows edges");
            if u < v {
                face_of[e].0 = face_index;
            } else {
                face_of[e].1 = face_index;
            }
        }
    }
    let mut dual_edges = Vec::with_capacity(g.edge_count());
    for (e, &(left, right)) in face_of.iter().enumerate() {
        if left == right {
            let (u, v) = g.edges()[e];
            return Err(Error::Bridge { u, v });
        }
        dual_edges.push((left, right));
    }
    let dual = Graph::build(face_set.count(), &dual_edges)?;

    let keyed_extent = |walk: &Vec<(usize, usize)>| -> f64 {
        match coordinates {
            // twice the enclosed (shoelace) area of the walk polygon; the
            // outer boundary of a plane drawing encloses everything else
            Some(pos) => walk
                .iter()
                .map(|&(u, v)| {
                    let (ux, uy) = pos[u];
                    let (vx, vy) = pos[v];
                    ux * vy - vx * uy
                })
                .sum::<f64>()
                .abs(),
            None => walk.len() as f64,
        }
    };
    let mut unbounded_face = 0;
    let mut best = f64::MIN;
    for (i, walk) in face_set.faces.iter().enumerate() {
        let extent = keyed_extent(walk);
        if extent > best {
            best = extent;
            unbounded_face = i;
        }
    }

    Ok(DualGraphResult {
        dual,
        face_of_node: (0..face_set.count()).collect(),
        unbounded_face,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::Seed;

    fn unit_square_c4() -> EmbeddedGraph {
        let g = generators::cycle(4).unwrap();
        EmbeddedGraph::new(g, vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]).unwrap()
    }

    fn planar_k4() -> EmbeddedGraph {
        let g = generators::complete(4);
        // outer triangle plus its centroid
        EmbeddedGraph::new(g, vec![(0.0, 0.0), (3.0, 0.0), (0.0, 3.0), (1.0, 1.0)]).unwrap()
    }

    #[test]
    fn line_graph_of_triangle_is_triangle() {
        let lg = line_graph(&generators::complete(3)).unwrap();
        assert_eq!(lg.line_graph.node_count(), 3);
        assert_eq!(lg.line_graph.edge_count(), 3);
    }

    #[test]
    fn line_graph_of_path_is_shorter_path() {
        let lg = line_graph(&generators::path(4).unwrap()).unwrap();
        assert_eq!(lg.line_graph.node_count(), 3);
        assert_eq!(lg.line_graph.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn line_graph_of_star_is_complete() {
        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let lg = line_graph(&star).unwrap();
        assert_eq!(lg.line_graph.edge_count(), 3);
        assert_eq!(lg.line_graph.node_count(), 3);
    }

    #[test]
    fn line_graph_rejects_edgeless() {
        let g = Graph::build(3, &[]).unwrap();
        assert!(matches!(line_graph(&g), Err(Error::NoEdges)));
    }

    #[test]
    fn line_graph_counts_on_random_graphs() {
        for seed in 0..200u64 {
            let n = 3 + (seed as usize % 10);
            let g = generators::gnp(n, 0.4, Seed(seed)).unwrap();
            if g.edge_count() == 0 {
                continue;
            }
            let lg = line_graph(&g).unwrap();
            assert_eq!(lg.line_graph.node_count(), g.edge_count());
            let expected: usize = (0..n)
                .map(|v| g.degree(v) * (g.degree(v).max(1) - 1) / 2)
                .sum();
            assert_eq!(lg.line_graph.edge_count(), expected, "seed {seed}");
            assert_eq!(lg.edge_of_node, g.edges());
        }
    }

    #[test]
    fn rotation_of_square_cycle() {
        let rot = rotation_from_coordinates(&unit_square_c4());
        assert!(rot.rotation.iter().all(|ring| ring.len() == 2));
        rot.validate(&unit_square_c4().graph).unwrap();
    }

    #[test]
    fn faces_of_square_cycle() {
        let eg = unit_square_c4();
        let rot = rotation_from_coordinates(&eg);
        let faces = trace_faces(&eg.graph, &rot).unwrap();
        assert_eq!(faces.count(), 2);
        assert!(faces.faces.iter().all(|w| w.len() == 4));
    }

    #[test]
    fn faces_of_planar_k4() {
        let eg = planar_k4();
        let rot = rotation_from_coordinates(&eg);
        let faces = trace_faces(&eg.graph, &rot).unwrap();
        assert_eq!(faces.count(), 4);
        assert!(faces.faces.iter().all(|w| w.len() == 3));
    }

    #[test]
    fn faces_of_dodecahedral_embedding() {
        let eg = generators::dodecahedral();
        let rot = rotation_from_coordinates(&eg);
        let faces = trace_faces(&eg.graph, &rot).unwrap();
        assert_eq!(faces.count(), 12);
        assert!(faces.faces.iter().all(|w| w.len() == 5));
    }

    // directed-edge partition, total length 2m, and Euler's formula
    fn assert_face_set_invariants(g: &Graph, faces: &FaceSet) {
        let mut seen = std::collections::BTreeSet::new();
        for walk in &faces.faces {
            for (i, &(u, v)) in walk.iter().enumerate() {
                assert!(g.has_edge(u, v));
                assert!(seen.insert((u, v)), "directed edge ({u},{v}) repeated");
                let (nu, _) = walk[(i + 1) % walk.len()];
                assert_eq!(v, nu, "walk not closed");
            }
        }
        assert_eq!(seen.len(), 2 * g.edge_count());
        let total: usize = faces.faces.iter().map(Vec::len).sum();
        assert_eq!(total, 2 * g.edge_count());
        assert_eq!(
            g.node_count() as i64 - g.edge_count() as i64 + faces.count() as i64,
            2
        );
    }

    #[test]
    fn face_invariants_across_corpus() {
        let corpus: Vec<EmbeddedGraph> = vec![
            unit_square_c4(),
            planar_k4(),
            generators::dodecahedral(),
            generators::sierpinski(3),
            generators::square_lattice(3, 4),
            generators::triangular_lattice(2, 3),
            generators::hexagonal_lattice(2, 3),
            generators::binary_tree(31),
        ];
        for eg in &corpus {
            let rot = rotation_from_coordinates(eg);
            let faces = trace_faces(&eg.graph, &rot).unwrap();
            assert_face_set_invariants(&eg.graph, &faces);
        }
    }

    #[test]
    fn tracing_rejects_disconnected_and_bad_rotation() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let rot = RotationSystem {
            rotation: vec![vec![1], vec![0], vec![3], vec![2]],
        };
        assert!(matches!(trace_faces(&g, &rot), Err(Error::Disconnected)));

        let g = generators::cycle(3).unwrap();
        let rot = RotationSystem {
            rotation: vec![vec![1, 2], vec![0, 0], vec![0, 1]],
        };
        assert!(matches!(
            trace_faces(&g, &rot),
            Err(Error::InvalidRotation { node: 1 })
        ));
    }

    #[test]
    fn dual_of_square_cycle_is_single_edge() {
        let eg = unit_square_c4();
        let rot = rotation_from_coordinates(&eg);
        let dual = dual_graph(&eg.graph, &rot, Some(&eg.coordinates)).unwrap();
        assert_eq!(dual.dual.node_count(), 2);
        assert_eq!(dual.dual.edges(), &[(0, 1)]);
    }

    #[test]
    fn dual_of_dodecahedral_is_icosahedral() {
        let eg = generators::dodecahedral();
        let rot = rotation_from_coordinates(&eg);
        let faces = trace_faces(&eg.graph, &rot).unwrap();
        let dual = dual_graph(&eg.graph, &rot, Some(&eg.coordinates)).unwrap();
        assert_eq!(dual.dual.node_count(), 12);
        assert!((0..12).all(|v| dual.dual.degree(v) == 5));

        // independent adjacency count straight from the traced walks
        for i in 0..faces.count() {
            for j in (i + 1)..faces.count() {
                let edges_i: std::collections::BTreeSet<(usize, usize)> = faces.faces[i]
                    .iter()
                    .map(|&(u, v)| (u.min(v), u.max(v)))
                    .collect();
                let shares = faces.faces[j]
                    .iter()
                    .any(|&(u, v)| edges_i.contains(&(u.min(v), u.max(v))));
                assert_eq!(dual.dual.has_edge(i, j), shares, "faces {i},{j}");
            }
        }
    }

    #[test]
    fn eulerian_embeddings_have_bipartite_duals() {
        let mut corpus: Vec<EmbeddedGraph> = (1..=5).map(generators::sierpinski).collect();
        corpus.push(generators::triangular_lattice(2, 2));
        corpus.push(generators::square_lattice(2, 2));
        let mut eulerian_cases = 0;
        for eg in &corpus {
            if !eg.graph.is_eulerian() {
                continue;
            }
            eulerian_cases += 1;
            let rot = rotation_from_coordinates(eg);
            let dual = dual_graph(&eg.graph, &rot, Some(&eg.coordinates)).unwrap();
            assert!(dual.dual.bipartition().is_some());
        }
        assert!(eulerian_cases >= 5, "corpus lost its Eulerian members");
    }

    #[test]
    fn bridges_are_rejected() {
        // square with a pendant edge hanging off node 0
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]).unwrap();
        let eg = EmbeddedGraph::new(
            g,
            vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (-1.0, 0.0)],
        )
        .unwrap();
        let rot = rotation_from_coordinates(&eg);
        assert!(matches!(
            dual_graph(&eg.graph, &rot, Some(&eg.coordinates)),
            Err(Error::Bridge { u: 0, v: 4 })
        ));
    }

    #[test]
    fn unbounded_face_is_outermost_by_area() {
        let eg = generators::dodecahedral();
        let rot = rotation_from_coordinates(&eg);
        let faces = trace_faces(&eg.graph, &rot).unwrap();
        let dual = dual_graph(&eg.graph, &rot, Some(&eg.coordinates)).unwrap();
        // the outer face is the one walking the outer pentagon 15..20
        let outer = faces
            .faces
            .iter()
            .position(|w| w.iter().all(|&(u, _)| u >= 15))
            .expect("outer pentagon face exists");
        assert_eq!(dual.unbounded_face, outer);

        // without coordinates every face of this embedding has length 5,
        // so the tie falls to the lowest index
        let blind = dual_graph(&eg.graph, &rot, None).unwrap();
        assert_eq!(blind.unbounded_face, 0);
    }
}
