//! Decide structural properties of directed graphs through polynomial ideals.
//!
//! Each question about a digraph is answered twice: once through commutative
//! algebra (toric/binomial ideals of the incidence matrix, reduced Groebner
//! bases, elimination and saturation) and once through a direct combinatorial
//! oracle (cycle enumeration, topological sort, path counting, vertex cover
//! search). The analysis layer cross-checks the two routes on every call.
//!
//! Start with the runnable examples:
//!
//! ```text
//! cargo run -p digraph-ideals --example diedge_ideal
//! cargo run -p digraph-ideals --example cycle_classification
//! cargo run -p digraph-ideals --example dag_check
//! cargo run -p digraph-ideals --example unique_paths
//! cargo run -p digraph-ideals --example cycle_basis
//! cargo run -p digraph-ideals --example toric_routes
//! cargo run -p digraph-ideals --example covers
//! cargo run -p digraph-ideals --example directly_bipartite
//! cargo run -p digraph-ideals --example h_graph_round_trip
//! cargo run -p digraph-ideals --example orient_undirected
//! cargo run -p digraph-ideals --example groebner_basics
//! ```
//!
//! The same capabilities are scriptable through the thin `digraph-ideals`
//! binary (`ideal`, `cycles`, `cycle-basis`, `is-dag`, `is-upd`, `covers`,
//! `bipartite`, `hgraph`, `analyze` subcommands over JSON or DOT input).

pub mod analysis;
pub mod cli;
pub mod error;
pub mod graphs;
pub mod groebner;
pub mod toric;
pub mod poly;

pub use analysis::{
    classify_generators, cycle_binomial, cycle_in_linear_span, cycle_space_dimension,
    diedge_ideal, diedge_ideal_via, edge_table, is_dag, is_directly_bipartite, is_upd,
    linear_cycle_report, linear_edge_ideal, minimal_vertex_covers, oracle_cycle_report,
    source_sink_covers, symmetric_difference_cycle, undirected_cycles_via_orientation,
    vector_in_linear_span, vertex_ideal, BipartitionReport, CoverReport, CycleClass,
    CycleReport, CycleSource, DagReport, ReportedCycle, ToricRoute, UpdReport,
    DEFAULT_COVER_CAP, DEFAULT_CYCLE_CAP,
};
pub use error::{Error, Result};
pub use graphs::{digraph_from_bipartite, h_graph, k_graph, Cycle, DiEdge, Digraph, HGraph, TopoSort, UEdge, UGraph};
pub use groebner::{reduce, s_polynomial, BasisStatus, ElimStrategy, IdealBasis};
pub use toric::{integer_kernel_basis, lattice_ideal, toric_by_elimination, toric_by_saturation, IntMatrix, LatticeBasis};
pub use poly::order::{OrderKind, TermOrder};
pub use poly::{Monomial, MulStyle, Polynomial, Scalar, VarTable};
