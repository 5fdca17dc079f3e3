//! SVG and Graphviz output for coloured graphs.
//!
//! All coordinates pass through one fixed-precision formatter, so rendering
//! the same figure twice yields byte-identical output.

use crate::colouring::{Colouring, ColouringKind};
use crate::error::{Error, Result};
use crate::generators::EmbeddedGraph;
use crate::graph::Graph;
use crate::io::GraphDocument;
use crate::render::{spring_layout, Layout, RenderOptions};
use crate::rng::Seed;
use crate::transforms::{trace_faces, FaceSet};

/// Stroke used for edges that carry no colour of their own.
const NEUTRAL_EDGE_COLOUR: &str = "#545454";
/// Outline drawn around every node disc.
const NODE_OUTLINE_COLOUR: &str = "#2f2f2f";
/// Disc fill for nodes in figures where the nodes themselves are uncoloured.
const NEUTRAL_NODE_COLOUR: &str = "#ffffff";

/// Spring iterations used when a document has no stored coordinates.
const DEFAULT_SPRING_ITERATIONS: usize = 300;

/// Render `v` with three decimals, then strip trailing zeroes so whole
/// numbers stay short. `-0` folds onto `0`.
fn fmt(v: f64) -> String {
    let mut s = format!("{v:.3}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// Affine map from layout space onto the canvas: uniform scale, centred
/// within the margins, with the y axis flipped so "up" in layout space is
/// "up" on screen.
struct Frame {
    scale: f64,
    off_x: f64,
    off_y: f64,
    min_x: f64,
    max_y: f64,
}

impl Frame {
    fn fit(positions: &[(f64, f64)], options: &RenderOptions) -> Frame {
        let inner_w = (options.width - 2.0 * options.margin).max(1.0);
        let inner_h = (options.height - 2.0 * options.margin).max(1.0);
        let mut min_x = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for &(x, y) in positions {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
        if positions.is_empty() {
            (min_x, max_x, min_y, max_y) = (0.0, 1.0, 0.0, 1.0);
        }
        let span_x = max_x - min_x;
        let span_y = max_y - min_y;
        let sx = if span_x > 0.0 {
            inner_w / span_x
        } else {
            f64::INFINITY
        };
        let sy = if span_y > 0.0 {
            inner_h / span_y
        } else {
            f64::INFINITY
        };
        let mut scale = sx.min(sy);
        if !scale.is_finite() {
            scale = 1.0; // all points coincide; any scale centres them
        }
        Frame {
            scale,
            off_x: options.margin + (inner_w - scale * span_x) / 2.0,
            off_y: options.margin + (inner_h - scale * span_y) / 2.0,
            min_x,
            max_y,
        }
    }

    fn map(&self, p: (f64, f64)) -> (f64, f64) {
        (
            self.off_x + self.scale * (p.0 - self.min_x),
            self.off_y + self.scale * (self.max_y - p.1),
        )
    }
}

fn open_svg(options: &RenderOptions) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n",
        w = fmt(options.width),
        h = fmt(options.height),
    )
}

fn line_element(from: (f64, f64), to: (f64, f64), colour: &str, width: f64) -> String {
    format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\" stroke-linecap=\"round\"/>\n",
        fmt(from.0),
        fmt(from.1),
        fmt(to.0),
        fmt(to.1),
        colour,
        fmt(width),
    )
}

fn circle_element(at: (f64, f64), radius: f64, fill: &str) -> String {
    format!(
        "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" stroke=\"{}\" stroke-width=\"1\"/>\n",
        fmt(at.0),
        fmt(at.1),
        fmt(radius),
        fill,
        NODE_OUTLINE_COLOUR,
    )
}

fn polygon_element(points: &[(f64, f64)], fill: &str) -> String {
    let coords: Vec<String> = points
        .iter()
        .map(|&(x, y)| format!("{},{}", fmt(x), fmt(y)))
        .collect();
    format!(
        "  <polygon points=\"{}\" fill=\"{}\" stroke=\"none\"/>\n",
        coords.join(" "),
        fill,
    )
}

fn expect_kind(colouring: &Colouring, expected: ColouringKind, len: usize) -> Result<()> {
    if colouring.kind != expected {
        return Err(Error::WrongColouringKind {
            expected: expected.name(),
            found: colouring.kind.name(),
        });
    }
    if colouring.assignment.len() != len {
        return Err(Error::SizeMismatch {
            expected: len,
            found: colouring.assignment.len(),
        });
    }
    Ok(())
}

fn check_layout(layout: &Layout, n: usize) -> Result<()> {
    if layout.positions.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: layout.positions.len(),
        });
    }
    Ok(())
}

/// Draw `g` with each node disc filled by its colour class and neutral
/// edges underneath.
pub fn render_nodes_svg(
    g: &Graph,
    layout: &Layout,
    colouring: &Colouring,
    options: &RenderOptions,
) -> Result<String> {
    expect_kind(colouring, ColouringKind::Node, g.node_count())?;
    check_layout(layout, g.node_count())?;
    let frame = Frame::fit(&layout.positions, options);
    let mut svg = open_svg(options);
    for &(u, v) in g.edges() {
        svg.push_str(&line_element(
            frame.map(layout.positions[u]),
            frame.map(layout.positions[v]),
            NEUTRAL_EDGE_COLOUR,
            options.edge_width,
        ));
    }
    if options.show_nodes {
        for v in 0..g.node_count() {
            svg.push_str(&circle_element(
                frame.map(layout.positions[v]),
                options.node_radius,
                options.palette.colour(colouring.assignment[v]),
            ));
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Draw `g` with each edge stroked in its colour class; nodes, when shown,
/// are plain discs.
pub fn render_edges_svg(
    g: &Graph,
    layout: &Layout,
    colouring: &Colouring,
    options: &RenderOptions,
) -> Result<String> {
    expect_kind(colouring, ColouringKind::Edge, g.edge_count())?;
    check_layout(layout, g.node_count())?;
    let frame = Frame::fit(&layout.positions, options);
    let mut svg = open_svg(options);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        svg.push_str(&line_element(
            frame.map(layout.positions[u]),
            frame.map(layout.positions[v]),
            options.palette.colour(colouring.assignment[e]),
            options.edge_width,
        ));
    }
    if options.show_nodes {
        for v in 0..g.node_count() {
            svg.push_str(&circle_element(
                frame.map(layout.positions[v]),
                options.node_radius,
                NEUTRAL_NODE_COLOUR,
            ));
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Twice the signed area of the polygon; magnitude ranks faces by extent.
fn shoelace(points: &[(f64, f64)]) -> f64 {
    let mut doubled = 0.0;
    for (i, &(x1, y1)) in points.iter().enumerate() {
        let (x2, y2) = points[(i + 1) % points.len()];
        doubled += x1 * y2 - x2 * y1;
    }
    doubled
}

/// Draw the faces of a plane drawing as filled polygons. The unbounded face
/// (largest extent, ties to the lowest index) becomes a canvas-filling
/// background rectangle when `options.fill_unbounded` is set and is omitted
/// otherwise; bounded faces are painted in decreasing order of area so that
/// nested faces stay visible. Edges and, optionally, plain node discs go on
/// top.
pub fn render_faces_svg(
    eg: &EmbeddedGraph,
    faces: &FaceSet,
    colouring: &Colouring,
    options: &RenderOptions,
) -> Result<String> {
    expect_kind(colouring, ColouringKind::Face, faces.count())?;
    let g = &eg.graph;
    let polygons: Vec<Vec<(f64, f64)>> = faces
        .faces
        .iter()
        .map(|walk| walk.iter().map(|&(u, _)| eg.coordinates[u]).collect())
        .collect();
    let areas: Vec<f64> = polygons.iter().map(|p| shoelace(p).abs()).collect();
    let unbounded = (0..faces.count())
        .max_by(|&a, &b| areas[a].total_cmp(&areas[b]).then(b.cmp(&a)))
        .expect("a connected plane graph has at least one face");

    let frame = Frame::fit(&eg.coordinates, options);
    let mut svg = open_svg(options);
    if options.fill_unbounded {
        svg.push_str(&format!(
            "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
            fmt(options.width),
            fmt(options.height),
            options.palette.colour(colouring.assignment[unbounded]),
        ));
    }
    let mut order: Vec<usize> = (0..faces.count()).filter(|&f| f != unbounded).collect();
    order.sort_by(|&a, &b| areas[b].total_cmp(&areas[a]).then(a.cmp(&b)));
    for f in order {
        let mapped: Vec<(f64, f64)> = polygons[f].iter().map(|&p| frame.map(p)).collect();
        svg.push_str(&polygon_element(
            &mapped,
            options.palette.colour(colouring.assignment[f]),
        ));
    }
    for &(u, v) in g.edges() {
        svg.push_str(&line_element(
            frame.map(eg.coordinates[u]),
            frame.map(eg.coordinates[v]),
            NEUTRAL_EDGE_COLOUR,
            options.edge_width,
        ));
    }
    if options.show_nodes {
        for v in 0..g.node_count() {
            svg.push_str(&circle_element(
                frame.map(eg.coordinates[v]),
                options.node_radius,
                NEUTRAL_NODE_COLOUR,
            ));
        }
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Render a document under whatever colouring it is paired with. Node and
/// edge figures use the stored coordinates when present and a seeded spring
/// layout otherwise; face figures require an embedding.
pub fn render_document(
    doc: &GraphDocument,
    colouring: &Colouring,
    options: &RenderOptions,
) -> Result<String> {
    match colouring.kind {
        ColouringKind::Node | ColouringKind::Edge => {
            let layout = match &doc.coordinates {
                Some(coords) => Layout::provided(coords.clone()),
                None => spring_layout(&doc.graph, Seed(0), DEFAULT_SPRING_ITERATIONS),
            };
            match colouring.kind {
                ColouringKind::Node => render_nodes_svg(&doc.graph, &layout, colouring, options),
                _ => render_edges_svg(&doc.graph, &layout, colouring, options),
            }
        }
        ColouringKind::Face => {
            let eg = doc.embedded()?;
            let rot = doc.rotation_or_derived()?;
            let faces = trace_faces(&doc.graph, &rot)?;
            render_faces_svg(&eg, &faces, colouring, options)
        }
    }
}

/// Write the graph in Graphviz dot form, colouring node fills or edge
/// strokes according to the colouring's kind. Face colourings have no dot
/// representation.
pub fn write_dot(g: &Graph, colouring: &Colouring, options: &RenderOptions) -> Result<String> {
    let mut out = String::from("graph g {\n  node [shape=circle];\n");
    match colouring.kind {
        ColouringKind::Node => {
            expect_kind(colouring, ColouringKind::Node, g.node_count())?;
            for v in 0..g.node_count() {
                out.push_str(&format!(
                    "  {v} [style=filled fillcolor=\"{}\"];\n",
                    options.palette.colour(colouring.assignment[v]),
                ));
            }
            for &(u, v) in g.edges() {
                out.push_str(&format!("  {u} -- {v};\n"));
            }
        }
        ColouringKind::Edge => {
            expect_kind(colouring, ColouringKind::Edge, g.edge_count())?;
            for v in 0..g.node_count() {
                out.push_str(&format!("  {v};\n"));
            }
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                out.push_str(&format!(
                    "  {u} -- {v} [color=\"{}\" penwidth=2];\n",
                    options.palette.colour(colouring.assignment[e]),
                ));
            }
        }
        ColouringKind::Face => {
            return Err(Error::InvalidParameter(
                "face colourings have no dot form; use an svg rendering".into(),
            ));
        }
    }
    out.push_str("}\n");
    Ok(out)
}
