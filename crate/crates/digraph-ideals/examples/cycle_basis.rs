//! Computes an integer basis of the rational cycle space (the kernel of
//! the incidence matrix) and checks enumerated cycles against its span.

use digraph_ideals::{
    cycle_in_linear_span, cycle_space_dimension, linear_edge_ideal, Digraph, MulStyle, Result,
    TermOrder,
};

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

    let basis = linear_edge_ideal(&d)?;
    let ord = TermOrder::grevlex(d.n_edges());
    println!("cycle space dimension: {}", cycle_space_dimension(&d));
    println!("kernel basis as linear forms:");
    for form in &basis {
        println!("  {}", form.to_text(&ord, MulStyle::Explicit));
    }

    for (cycle, _) in d.cycles_with_orientation(1000)? {
        let ids = d.underlying().sorted_edge_ids(&cycle);
        let inside = cycle_in_linear_span(&cycle, &d)?;
        println!("cycle {{{}}} lies in the span: {inside}", ids.join(", "));
    }
    Ok(())
}
