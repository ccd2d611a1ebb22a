//! Computes the same toric ideal two independent ways, through variable
//! elimination in an extended ring and through lattice-ideal saturation,
//! and shows the reduced bases coincide.

use digraph_ideals::{
    diedge_ideal_via, toric_by_elimination, toric_by_saturation, Digraph, ElimStrategy,
    IntMatrix, MulStyle, Result, TermOrder, ToricRoute, VarTable,
};

fn main() -> Result<()> {
    // The twisted cubic: parametrized by (1, t, t^2, t^3).
    let m = IntMatrix::from_rows(vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]])?;
    let vars = VarTable::new(vec!["x0", "x1", "x2", "x3"])?;
    let ord = TermOrder::grevlex(4);
    let by_elim = toric_by_elimination(&m, &vars, &ord, ElimStrategy::Block)?;
    let by_sat = toric_by_saturation(&m, &vars, &ord)?;
    println!("twisted cubic ideal by elimination:");
    for g in by_elim.generators() {
        println!("  {}", g.to_text(by_elim.order(), MulStyle::Explicit));
    }
    assert_eq!(by_elim.generators(), by_sat.generators());
    println!("saturation produces the identical reduced basis");

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
    let ord = TermOrder::grevlex(d.n_edges());
    let by_elim = diedge_ideal_via(&d, &ord, ToricRoute::Elimination)?;
    let by_sat = diedge_ideal_via(&d, &ord, ToricRoute::Saturation)?;
    assert_eq!(by_elim.generators(), by_sat.generators());
    println!("the two routes also agree on the digraph's edge ideal:");
    for g in by_elim.generators() {
        println!("  {}", g.to_text(by_elim.order(), MulStyle::Explicit));
    }
    Ok(())
}
