//! JSON and DOT serialisation.
//!
//! A bare graph is `{"n": …, "edges": [[u, v], …]}` with edges listed in id
//! order. Generated graphs are written as a bundle `{"descriptor": …,
//! "graph": …}` so the construction's parameters, predicted counts and
//! claims travel with the edge list. Readers accept both shapes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructions::ConstructionDescriptor;
use crate::graph::{GraphError, Multigraph};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// JSON shape of a bare multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&Multigraph> for GraphJson {
    fn from(g: &Multigraph) -> Self {
        GraphJson {
            n: g.num_vertices(),
            edges: g.edges().to_vec(),
        }
    }
}

/// A graph together with the descriptor that generated it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphBundle {
    pub descriptor: ConstructionDescriptor,
    pub graph: GraphJson,
}

/// Pretty-printed JSON for a bare graph, ending in a newline.
pub fn graph_to_json(g: &Multigraph) -> String {
    let mut text = serde_json::to_string_pretty(&GraphJson::from(g)).expect("graph serialises");
    text.push('\n');
    text
}

/// Pretty-printed JSON for a descriptor + graph bundle, ending in a newline.
pub fn bundle_to_json(descriptor: &ConstructionDescriptor, g: &Multigraph) -> String {
    let bundle = GraphBundle {
        descriptor: descriptor.clone(),
        graph: GraphJson::from(g),
    };
    let mut text = serde_json::to_string_pretty(&bundle).expect("bundle serialises");
    text.push('\n');
    text
}

/// Parses a bare graph object.
pub fn graph_from_json(text: &str) -> Result<Multigraph, FormatError> {
    let parsed: GraphJson = serde_json::from_str(text)?;
    Ok(Multigraph::from_edges(parsed.n, &parsed.edges)?)
}

/// Parses either a bare graph or a descriptor bundle, returning the graph
/// and the descriptor when one was present.
pub fn read_graph_text(
    text: &str,
) -> Result<(Multigraph, Option<ConstructionDescriptor>), FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("descriptor").is_some() {
        let bundle: GraphBundle = serde_json::from_value(value)?;
        let g = Multigraph::from_edges(bundle.graph.n, &bundle.graph.edges)?;
        Ok((g, Some(bundle.descriptor)))
    } else {
        let parsed: GraphJson = serde_json::from_value(value)?;
        Ok((Multigraph::from_edges(parsed.n, &parsed.edges)?, None))
    }
}

/// Graphviz DOT output: one statement per vertex (so isolated vertices
/// survive), then one `u -- v;` statement per edge in id order, repeating
/// parallel edges.
pub fn graph_to_dot(g: &Multigraph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.num_vertices() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}
