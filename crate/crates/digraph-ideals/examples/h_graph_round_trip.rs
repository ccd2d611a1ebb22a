//! Doubles a digraph into its bipartite companion (tail copies on one
//! side, original vertices on the other, plus a perfect matching), renders
//! it as DOT, and reconstructs the original digraph from the doubling.

use digraph_ideals::cli::render_dot_undirected;
use digraph_ideals::{digraph_from_bipartite, h_graph, Digraph, Result};

fn main() -> Result<()> {
    let d = Digraph::new(
        vec!["v1", "v2", "v3", "v4", "v5"],
        vec![
            ("e1", "v1", "v2"),
            ("e2", "v2", "v3"),
            ("e3", "v1", "v3"),
            ("e4", "v4", "v3"),
            ("e5", "v3", "v5"),
        ],
    )?;

    let h = h_graph(&d)?;
    println!("doubled graph in DOT form:");
    println!("{}", render_dot_undirected(&h.graph));
    println!("matching edges: {}", h.f_edges.join(", "));

    let matching = h.graph.perfect_matching()?;
    println!("has a perfect matching: {}", matching.is_some());
    println!("bipartite: {}", h.graph.bipartition().is_some());

    let back = digraph_from_bipartite(&h.graph, &h.f_edges, &h.z_labels)?;
    assert_eq!(back, d);
    println!("reconstruction returns the original digraph");
    Ok(())
}
