//! Computes the reduced basis of a digraph's binomial edge ideal, first
//! under an explicit lexicographic priority and then under the default
//! graded reverse lexicographic order.

use digraph_ideals::{diedge_ideal, Digraph, MulStyle, Result, TermOrder};

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

    // Priority e3 > e1 > e4 > e2 > e5 > e6, by edge index.
    let lex = TermOrder::lex_with(vec![2, 0, 3, 1, 4, 5])?;
    let gb = diedge_ideal(&d, &lex)?;
    println!("reduced basis under the custom lex order:");
    for g in gb.generators() {
        println!("  {}", g.to_text(gb.order(), MulStyle::Explicit));
    }

    let grevlex = TermOrder::grevlex(d.n_edges());
    let gb = diedge_ideal(&d, &grevlex)?;
    println!("reduced basis under graded reverse lex:");
    for g in gb.generators() {
        println!("  {}", g.to_text(gb.order(), MulStyle::Explicit));
    }
    Ok(())
}
