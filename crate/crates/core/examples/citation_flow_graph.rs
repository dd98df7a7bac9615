//! Export the citation network with node size = Eigenfactor and edge weight =
//! citation probability, for Graphviz, Gephi, Cytoscape and friends.
//!
//! ```bash
//! cargo run -p eigenfactor --example citation_flow_graph > flow.dot
//! cargo run -p eigenfactor --example citation_flow_graph -- graphml 0.2 > flow.graphml
//! ```

use std::path::PathBuf;

use eigenfactor::graph::{load_edges, load_registry, CrossCitationMatrix};
use eigenfactor::output::{CitationFlowGraph, GraphFormat};
use eigenfactor::ranking::{compute, DampingParameters};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let format: GraphFormat = args.next().as_deref().unwrap_or("dot").parse()?;
    let threshold: f64 = args.next().as_deref().unwrap_or("0").parse()?;

    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let registry = load_registry(data.join("journals.csv"))?;
    let edges = load_edges(data.join("edges.csv"), &registry)?;
    let z = CrossCitationMatrix::build(&registry, &edges)?;
    let run = compute(&registry, &z, &DampingParameters::default())?;

    let graph = CitationFlowGraph::new(&registry, &run.normalized, &run.eigenfactor, threshold);
    eprintln!("{} nodes, {} edges at threshold {threshold}", graph.nodes.len(), graph.edges.len());
    print!("{}", graph.render(format));
    Ok(())
}
