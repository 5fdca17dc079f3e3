//! Reading and writing graph files, with the format chosen by extension:
//! `.col`/`.dimacs` for DIMACS, `.g6`/`.graph6` for graph6, `.emb` for the
//! embedding format.

use std::path::Path;

use chromatica::io::{
    parse_dimacs, parse_embedding, parse_graph6, write_dimacs, write_embedding, write_graph6,
};
use chromatica::{Error, GraphDocument, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    Graph6,
    Embedding,
}

pub fn format_for(path: &Path) -> Result<GraphFormat> {
    let ext = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    match ext.to_ascii_lowercase().as_str() {
        "col" | "dimacs" => Ok(GraphFormat::Dimacs),
        "g6" | "graph6" => Ok(GraphFormat::Graph6),
        "emb" => Ok(GraphFormat::Embedding),
        _ => Err(Error::InvalidParameter(format!(
            "cannot tell the format of '{}'; use .col/.dimacs, .g6, or .emb",
            path.display()
        ))),
    }
}

pub fn read_document(path: &Path) -> Result<GraphDocument> {
    let format = format_for(path)?;
    let text = std::fs::read_to_string(path)?;
    match format {
        GraphFormat::Dimacs => parse_dimacs(&text),
        GraphFormat::Graph6 => Ok(GraphDocument::new(parse_graph6(&text)?)),
        GraphFormat::Embedding => parse_embedding(&text),
    }
}

/// Serialise in the format named by the extension. Coordinates and rotations
/// survive only in `.emb` files; the other formats keep the graph alone.
pub fn write_document(doc: &GraphDocument, path: &Path) -> Result<()> {
    let text = match format_for(path)? {
        GraphFormat::Dimacs => write_dimacs(doc),
        GraphFormat::Graph6 => format!("{}\n", write_graph6(&doc.graph)),
        GraphFormat::Embedding => write_embedding(doc),
    };
    std::fs::write(path, text)?;
    Ok(())
}
