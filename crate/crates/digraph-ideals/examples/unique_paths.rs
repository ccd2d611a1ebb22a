//! Tests the unique-path property: between any two vertices there is at
//! most one directed path. Algebraically this holds exactly when every
//! reduced generator of the edge ideal is a directed cycle product and no
//! two generators share an edge.

use digraph_ideals::{is_upd, Digraph, Result};

fn main() -> Result<()> {
    let triangle = Digraph::new(
        vec!["a", "b", "c"],
        vec![("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a")],
    )?;

    // Two directed triangles sharing only the vertex c.
    let bowtie = Digraph::new(
        vec!["a", "b", "c", "d", "e"],
        vec![
            ("e1", "a", "b"),
            ("e2", "b", "c"),
            ("e3", "c", "a"),
            ("e4", "c", "d"),
            ("e5", "d", "e"),
            ("e6", "e", "c"),
        ],
    )?;

    // Two walks from v1 to v3, so paths are not unique.
    let rhombus = Digraph::new(
        vec!["v1", "v2", "v3"],
        vec![("e1", "v1", "v2"), ("e2", "v2", "v3"), ("e3", "v1", "v3")],
    )?;

    for (name, d) in [("triangle", triangle), ("bowtie", bowtie), ("rhombus", rhombus)] {
        let report = is_upd(&d, 1000)?;
        println!("{name}: unique paths = {}", report.is_upd);
        println!("  because {}", report.reason);
    }
    Ok(())
}
