//! Tests two digraphs for acyclicity: topological sort decides, and the
//! edge ideal corroborates (a generator shaped product-minus-1 exhibits a
//! directed cycle).

use digraph_ideals::{is_dag, Digraph, Result};

fn main() -> Result<()> {
    let acyclic = Digraph::new(
        vec!["v1", "v2", "v3", "v4", "v5"],
        vec![
            ("e1", "v1", "v2"),
            ("e2", "v2", "v3"),
            ("e3", "v1", "v3"),
            ("e4", "v4", "v3"),
            ("e5", "v3", "v5"),
        ],
    )?;
    let report = is_dag(&acyclic)?;
    println!("first digraph acyclic: {}", report.is_dag);
    println!("  ideal shows a directed cycle: {}", report.ideal_evidence);

    let cyclic = Digraph::new(
        vec!["v1", "v2", "v3", "v4"],
        vec![
            ("e1", "v1", "v2"),
            ("e2", "v2", "v3"),
            ("e3", "v3", "v1"),
            ("e4", "v1", "v4"),
        ],
    )?;
    let report = is_dag(&cyclic)?;
    println!("second digraph acyclic: {}", report.is_dag);
    if let Some(cycle) = report.witness {
        println!("  witness cycle: {}", cycle.join(" -> "));
    }
    println!("  ideal shows a directed cycle: {}", report.ideal_evidence);
    Ok(())
}
