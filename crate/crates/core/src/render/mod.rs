//! Node layouts and SVG / DOT emission for coloured graphs.
//!
//! Everything here is deterministic: layouts depend only on the input and
//! an explicit seed, and the SVG writer formats every coordinate to three
//! decimals so identical inputs give identical bytes.

mod layout;
mod svg;

pub use layout::{circular_grouped_layout, multipartite_layout, spring_layout};
pub use svg::{render_document, render_edges_svg, render_faces_svg, render_nodes_svg, write_dot};

use crate::error::{Error, Result};

/// How a set of node positions was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LayoutStyle {
    Spring,
    Circular,
    Multipartite,
    /// coordinates supplied by the caller or a file
    Provided,
}

/// Node positions in abstract units; the SVG writer maps them to the
/// canvas.
#[derive(Debug, Clone)]
pub struct Layout {
    pub positions: Vec<(f64, f64)>,
    pub style: LayoutStyle,
}

impl Layout {
    pub fn provided(positions: Vec<(f64, f64)>) -> Self {
        Layout {
            positions,
            style: LayoutStyle::Provided,
        }
    }
}

/// An ordered list of CSS colours, cycled when a colouring uses more
/// labels than the palette has entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Palette {
    colours: Vec<String>,
}

impl Palette {
    /// The ten-colour palette used throughout: blue, orange, red, teal,
    /// green, yellow, purple, pink, brown, grey.
    pub fn tableau10() -> Self {
        Palette {
            colours: [
                "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1",
                "#ff9da7", "#9c755f", "#bab0ac",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect(),
        }
    }

    /// A custom palette; entries must be non-empty and pairwise distinct.
    pub fn new(colours: Vec<String>) -> Result<Self> {
        if colours.is_empty() {
            return Err(Error::InvalidParameter("palette cannot be empty".into()));
        }
        for (i, a) in colours.iter().enumerate() {
            for b in &colours[i + 1..] {
                if a == b {
                    return Err(Error::InvalidParameter(format!(
                        "palette colour {a:?} appears twice"
                    )));
                }
            }
        }
        Ok(Palette { colours })
    }

    /// The colour for a label, cycling past the end of the list.
    pub fn colour(&self, label: usize) -> &str {
        &self.colours[label % self.colours.len()]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction guarantees at least one entry
    }
}

impl Default for Palette {
    fn default() -> Self {
        Palette::tableau10()
    }
}

/// Canvas and styling knobs for the SVG writer.
#[derive(Debug, Clone)]
pub struct RenderOptions {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    pub node_radius: f64,
    pub edge_width: f64,
    /// draw nodes as filled circles (several figure styles omit them)
    pub show_nodes: bool,
    /// paint the unbounded face as a canvas-wide background
    pub fill_unbounded: bool,
    pub palette: Palette,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 800.0,
            height: 600.0,
            margin: 24.0,
            node_radius: 6.0,
            edge_width: 1.5,
            show_nodes: true,
            fill_unbounded: true,
            palette: Palette::default(),
        }
    }
}
