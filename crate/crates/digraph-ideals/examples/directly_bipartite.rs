//! Tests whether every non-isolated vertex is purely a source or purely a
//! sink. The verdict is certified by the vertex ideal of the doubled
//! graph: the split exists exactly when (product of source copies) minus
//! (product of sink copies) is a member.

use digraph_ideals::{is_directly_bipartite, Digraph, MulStyle, Result, TermOrder};

fn main() -> Result<()> {
    let split = Digraph::new(
        vec!["v1", "v2", "v3", "v4", "v5"],
        vec![
            ("e1", "v1", "v2"),
            ("e2", "v3", "v2"),
            ("e3", "v1", "v4"),
            ("e4", "v3", "v4"),
            ("e5", "v3", "v5"),
        ],
    )?;
    let report = is_directly_bipartite(&split)?;
    println!("first digraph directly bipartite: {}", report.directly_bipartite);
    println!("  sources: {}", report.sources.join(", "));
    println!("  sinks: {}", report.sinks.join(", "));
    if let Some(w) = &report.witness {
        let ord = TermOrder::grevlex(w.vars().len());
        println!("  ideal witness: {}", w.to_text(&ord, MulStyle::Explicit));
    }

    // v3 receives e2 and emits e3, so it is neither purely source nor sink.
    let mixed = Digraph::new(
        vec!["v1", "v2", "v3", "v4"],
        vec![("e1", "v1", "v2"), ("e2", "v1", "v3"), ("e3", "v3", "v4")],
    )?;
    let report = is_directly_bipartite(&mixed)?;
    println!("second digraph directly bipartite: {}", report.directly_bipartite);
    Ok(())
}
