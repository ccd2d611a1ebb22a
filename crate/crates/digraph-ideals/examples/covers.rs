//! Enumerates minimal vertex covers of the doubled-minus-matching graph
//! and transfers the pure-side covers back to the digraph: tail-side
//! covers become source covers, head-side covers become sink covers.

use digraph_ideals::{k_graph, minimal_vertex_covers, source_sink_covers, Digraph, Result};

fn main() -> Result<()> {
    let d = Digraph::new(
        vec!["v1", "v2", "v3", "v4", "v5"],
        vec![
            ("e1", "v1", "v2"),
            ("e2", "v2", "v3"),
            ("e3", "v3", "v1"),
            ("e4", "v1", "v4"),
            ("e5", "v3", "v4"),
            ("e6", "v3", "v5"),
        ],
    )?;

    let k = k_graph(&d)?;
    println!("minimal vertex covers of the doubled graph:");
    for cover in minimal_vertex_covers(&k, 1000)? {
        println!("  {}", cover.join(", "));
    }

    let report = source_sink_covers(&d, 1000)?;
    for cover in &report.source_covers {
        println!("source cover: {}", cover.join(", "));
    }
    for cover in &report.sink_covers {
        println!("sink cover: {}", cover.join(", "));
    }
    Ok(())
}
