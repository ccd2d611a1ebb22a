//! Decision procedures tying digraph structure to polynomial ideals.
//!
//! Key operations:
//! - [`diedge_ideal`]: reduced basis of the binomial edge ideal, computable
//!   by two independent routes (variable elimination and lattice saturation).
//! - [`classify_generators`]: reads cycles out of basis generators and
//!   verifies each against the combinatorial cycle oracle.
//! - [`is_dag`] / [`is_upd`] / [`is_directly_bipartite`]: structure tests,
//!   each answered algebraically and combinatorially in tandem.
//! - [`linear_edge_ideal`] / [`cycle_in_linear_span`]: the rational cycle
//!   space as integer linear forms.
//! - [`minimal_vertex_covers`] / [`source_sink_covers`]: cover enumeration
//!   and its tail/head transfer through the doubled graph.
//!
//! Design notes: the combinatorial side is authoritative where the algebra
//! is only evidence (acyclicity), and the algebraic criterion is
//! authoritative where it is an exact equivalence (unique paths, direct
//! bipartiteness). Either way the two routes run together, and any
//! disagreement raises a structural error instead of silently picking a
//! side.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use num::BigInt;

use crate::error::{Error, Result};
use crate::graphs::{k_graph, partner_label, Cycle, Digraph, TopoSort, UGraph};
use crate::groebner::{s_polynomial, ElimStrategy, IdealBasis};
use crate::poly::order::TermOrder;
use crate::poly::{scalar, Monomial, Polynomial, VarTable};
use crate::toric::{
    integer_kernel_basis, present_under, toric_by_elimination, toric_by_saturation,
    vector_binomial, IntMatrix,
};

/// Default bound on enumerated cycles.
pub const DEFAULT_CYCLE_CAP: usize = 10_000;
/// Default bound on enumerated vertex covers.
pub const DEFAULT_COVER_CAP: usize = 10_000;

// ---- report types ----

/// How a toric ideal is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToricRoute {
    /// Extended ring with inverses, then variable elimination.
    Elimination,
    /// Lattice ideal of the integer kernel, then saturation.
    Saturation,
}

/// Whether a cycle's edges are consistently oriented.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleClass {
    Directed,
    Undirected,
}

/// One cycle as reported: its sorted edge ids, class, and length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportedCycle {
    pub edges: Vec<String>,
    pub class: CycleClass,
    pub length: usize,
}

/// Which route produced a cycle list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleSource {
    ToricGenerators,
    LinearBasis,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub cycles: Vec<ReportedCycle>,
    pub source: CycleSource,
}

/// Acyclicity verdict: the topological sort decides, the ideal testifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DagReport {
    pub is_dag: bool,
    /// Edge ids of a directed cycle, in traversal order, when one exists.
    pub witness: Option<Vec<String>>,
    /// Whether the reduced edge-ideal basis shows a directed cycle product.
    pub ideal_evidence: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpdReport {
    pub is_upd: bool,
    pub reason: String,
}

/// Direct-bipartiteness verdict with the source/sink split and the witness
/// binomial from the vertex ideal when the split exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartitionReport {
    pub directly_bipartite: bool,
    pub sources: Vec<String>,
    pub sinks: Vec<String>,
    pub witness: Option<Polynomial>,
}

/// Minimal vertex covers of the doubled graph without its matching, plus
/// the pure-side covers transferred back to digraph vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub k_covers: Vec<Vec<String>>,
    pub source_covers: Vec<Vec<String>>,
    pub sink_covers: Vec<Vec<String>>,
}

// ---- edge ideals ----

/// Variable table over the edge ids of a digraph, in edge order.
pub fn edge_table(d: &Digraph) -> Result<Arc<VarTable>> {
    VarTable::new(d.edge_ids())
}

/// Reduced basis of the binomial edge ideal under `ord`, via elimination.
pub fn diedge_ideal(d: &Digraph, ord: &TermOrder) -> Result<IdealBasis> {
    diedge_ideal_via(d, ord, ToricRoute::Elimination)
}

/// Reduced basis of the binomial edge ideal by the chosen route: the toric
/// ideal of the incidence matrix, with one variable per edge.
pub fn diedge_ideal_via(d: &Digraph, ord: &TermOrder, route: ToricRoute) -> Result<IdealBasis> {
    let vars = edge_table(d)?;
    if d.n_edges() == 0 {
        return IdealBasis::new(vars, ord.clone(), Vec::new())?.reduced_groebner();
    }
    let m = d.incidence_matrix();
    match route {
        ToricRoute::Elimination => toric_by_elimination(&m, &vars, ord, ElimStrategy::Block),
        ToricRoute::Saturation => toric_by_saturation(&m, &vars, ord),
    }
}

/// Binomial of a cycle walk over the edge variables: the product of the
/// forward edges minus the product of the backward ones (1 when none).
pub fn cycle_binomial(d: &Digraph, cycle: &Cycle, vars: &Arc<VarTable>) -> Result<Polynomial> {
    if vars.len() != d.n_edges() {
        return Err(Error::Usage("variable table does not match the edge count".into()));
    }
    let u: Vec<BigInt> = d.cycle_vector(cycle).into_iter().map(BigInt::from).collect();
    vector_binomial(&u, vars)
}

/// Maps every generator of an edge-ideal basis to the cycle it announces: a
/// product minus 1 is a directed cycle, a product minus a product is an
/// undirected one. Every announced edge set is verified to trace an
/// elementary cycle whose orientation matches the binomial's sign split.
pub fn classify_generators(gb: &IdealBasis, d: &Digraph) -> Result<CycleReport> {
    let var_edge: Vec<usize> = gb
        .vars()
        .names()
        .map(|name| {
            d.edge_index(name).ok_or_else(|| {
                Error::Usage(format!("basis variable {name:?} is not an edge of the digraph"))
            })
        })
        .collect::<Result<_>>()?;
    if var_edge.len() != d.n_edges() {
        return Err(Error::Usage("basis does not cover every edge variable".into()));
    }
    let underlying = d.underlying();
    let mut cycles: Vec<ReportedCycle> = gb
        .generators()
        .iter()
        .map(|g| generator_cycle(g, d, &underlying, &var_edge))
        .collect::<Result<_>>()?;
    cycles.sort_by(|x, y| x.edges.cmp(&y.edges));
    Ok(CycleReport { cycles, source: CycleSource::ToricGenerators })
}

fn generator_cycle(
    g: &Polynomial,
    d: &Digraph,
    underlying: &UGraph,
    var_edge: &[usize],
) -> Result<ReportedCycle> {
    let shape_err = |why: &str| Error::Structural(format!("edge ideal generator {g}: {why}"));
    if !g.is_pure_binomial() {
        return Err(shape_err("not a difference of two monic monomials"));
    }
    let mut plus = None;
    let mut minus = None;
    for (c, m) in g.terms() {
        if c == &scalar(1) {
            plus = Some(m);
        } else {
            minus = Some(m);
        }
    }
    let (plus, minus) = match (plus, minus) {
        (Some(p), Some(m)) => (p, m),
        _ => return Err(shape_err("not a difference of two monic monomials")),
    };
    if !plus.is_squarefree() || !minus.is_squarefree() {
        return Err(shape_err("repeats an edge within one side"));
    }
    if !plus.coprime(minus) {
        return Err(shape_err("repeats an edge on both sides"));
    }
    let edge_set: Vec<usize> =
        plus.support().chain(minus.support()).map(|v| var_edge[v]).collect();
    let cycle = underlying
        .cycle_from_edge_set(&edge_set)
        .ok_or_else(|| shape_err("support does not trace a single elementary cycle"))?;
    let mut expected = vec![0i64; d.n_edges()];
    for v in plus.support() {
        expected[var_edge[v]] = 1;
    }
    for v in minus.support() {
        expected[var_edge[v]] = -1;
    }
    let walked = d.cycle_vector(&cycle);
    let flipped: Vec<i64> = expected.iter().map(|x| -x).collect();
    if walked != expected && walked != flipped {
        return Err(shape_err("sign split does not match the cycle's orientation"));
    }
    let class =
        if plus.is_one() || minus.is_one() { CycleClass::Directed } else { CycleClass::Undirected };
    Ok(ReportedCycle {
        edges: underlying.sorted_edge_ids(&cycle),
        class,
        length: (plus.total_degree() + minus.total_degree()) as usize,
    })
}

/// Cycle list straight from exhaustive enumeration.
pub fn oracle_cycle_report(d: &Digraph, cap: usize) -> Result<CycleReport> {
    let underlying = d.underlying();
    let cycles = d
        .cycles_with_orientation(cap)?
        .into_iter()
        .map(|(cycle, directed)| ReportedCycle {
            edges: underlying.sorted_edge_ids(&cycle),
            class: if directed { CycleClass::Directed } else { CycleClass::Undirected },
            length: cycle.len(),
        })
        .collect();
    Ok(CycleReport { cycles, source: CycleSource::Oracle })
}

/// Cycle list from enumeration, with every cycle verified to lie in the
/// rational span of the linear cycle basis.
pub fn linear_cycle_report(d: &Digraph, cap: usize) -> Result<CycleReport> {
    let tagged = d.cycles_with_orientation(cap)?;
    for (cycle, _) in &tagged {
        if !cycle_in_linear_span(cycle, d)? {
            return Err(Error::Structural(
                "an enumerated cycle falls outside the linear cycle space".into(),
            ));
        }
    }
    let underlying = d.underlying();
    let cycles = tagged
        .into_iter()
        .map(|(cycle, directed)| ReportedCycle {
            edges: underlying.sorted_edge_ids(&cycle),
            class: if directed { CycleClass::Directed } else { CycleClass::Undirected },
            length: cycle.len(),
        })
        .collect();
    Ok(CycleReport { cycles, source: CycleSource::LinearBasis })
}

// ---- acyclicity and unique paths ----

fn directed_cycle_shape(g: &Polynomial) -> bool {
    g.is_pure_binomial() && g.terms().iter().any(|(_, m)| m.is_one())
}

/// Decides acyclicity by topological sort; the edge ideal's reduced basis
/// is consulted as corroborating evidence. A directed cycle product in the
/// basis of an acyclic digraph would contradict the theory, so that
/// combination is a structural error; the converse direction is reported
/// but not enforced.
pub fn is_dag(d: &Digraph) -> Result<DagReport> {
    let witness = match d.topological_sort() {
        TopoSort::Order(_) => None,
        TopoSort::Cycle(edges) => {
            Some(edges.into_iter().map(|e| d.edges()[e].id.clone()).collect::<Vec<_>>())
        }
    };
    let gb = diedge_ideal(d, &TermOrder::grevlex(d.n_edges()))?;
    let ideal_evidence = gb.generators().iter().any(directed_cycle_shape);
    if witness.is_none() && ideal_evidence {
        return Err(Error::Structural(
            "edge ideal shows a directed cycle product but no directed cycle exists".into(),
        ));
    }
    Ok(DagReport { is_dag: witness.is_none(), witness, ideal_evidence })
}

fn upd_from_basis(gb: &IdealBasis) -> Result<(bool, String)> {
    let gens = gb.generators();
    if gens.is_empty() {
        return Ok((true, "the edge ideal is zero".into()));
    }
    let mut products = Vec::with_capacity(gens.len());
    for g in gens {
        if !directed_cycle_shape(g) {
            return Ok((false, format!("generator {g} is not a directed cycle product")));
        }
        products.push(g.leading_term(gb.order())?.1.clone());
    }
    for i in 0..products.len() {
        for j in i + 1..products.len() {
            if !products[i].coprime(&products[j]) {
                return Ok((
                    false,
                    format!("generators {} and {} share an edge", gens[i], gens[j]),
                ));
            }
        }
    }
    Ok((true, format!("all {} generators are pairwise coprime directed cycle products", gens.len())))
}

/// Unique-path test: true iff the edge ideal is zero or every reduced-basis
/// generator is a directed cycle product, pairwise coprime. The equivalent
/// combinatorial reading (every cycle directed, no two sharing more than a
/// vertex) runs alongside; disagreement is a structural error.
pub fn is_upd(d: &Digraph, cap: usize) -> Result<UpdReport> {
    let gb = diedge_ideal(d, &TermOrder::grevlex(d.n_edges()))?;
    let (algebraic, reason) = upd_from_basis(&gb)?;
    let oracle = d.has_unique_path_property(cap)?;
    if algebraic != oracle {
        return Err(Error::Structural(format!(
            "unique-path criteria disagree: ideal says {algebraic}, cycle oracle says {oracle}"
        )));
    }
    Ok(UpdReport { is_upd: algebraic, reason })
}

/// The undirected cycle left by removing the shared edges of two directed
/// cycles, computed as the S-polynomial of their binomials and verified
/// combinatorially.
pub fn symmetric_difference_cycle(c1: &Cycle, c2: &Cycle, d: &Digraph) -> Result<Cycle> {
    let underlying = d.underlying();
    let a = underlying
        .cycle_from_edge_set(&c1.edges)
        .ok_or_else(|| Error::Graph("first argument is not an elementary cycle".into()))?;
    let b = underlying
        .cycle_from_edge_set(&c2.edges)
        .ok_or_else(|| Error::Graph("second argument is not an elementary cycle".into()))?;
    for c in [&a, &b] {
        if !d.cycle_is_directed(c) {
            return Err(Error::Graph("both cycles must be directed".into()));
        }
    }
    let s1: BTreeSet<usize> = a.edges.iter().copied().collect();
    let s2: BTreeSet<usize> = b.edges.iter().copied().collect();
    if s1 == s2 {
        return Err(Error::Graph("the cycles coincide, so their difference is empty".into()));
    }
    if s1.is_disjoint(&s2) {
        return Err(Error::Graph("the cycles share no edge".into()));
    }
    let vars = edge_table(d)?;
    let ord = TermOrder::grevlex(vars.len());
    let f1 = cycle_binomial(d, &a, &vars)?;
    let f2 = cycle_binomial(d, &b, &vars)?;
    let s = s_polynomial(&f1, &f2, &ord)?;
    if s.num_terms() != 2 {
        return Err(Error::Structural(format!("S-polynomial {s} is not a binomial")));
    }
    let support: Vec<usize> = s.terms().iter().flat_map(|(_, m)| m.support()).collect();
    let expected: BTreeSet<usize> = s1.symmetric_difference(&s2).copied().collect();
    if support.iter().copied().collect::<BTreeSet<_>>() != expected {
        return Err(Error::Structural(
            "S-polynomial support differs from the symmetric difference".into(),
        ));
    }
    let cycle = underlying.cycle_from_edge_set(&support).ok_or_else(|| {
        Error::Structural("the symmetric difference splits into multiple cycles".into())
    })?;
    if d.cycle_is_directed(&cycle) {
        return Err(Error::Structural(
            "overlapping directed cycles left a directed difference".into(),
        ));
    }
    Ok(cycle)
}

// ---- linear cycle space ----

/// Basis of the rational cycle space as integer linear forms in the edge
/// variables, one per kernel basis vector of the incidence matrix.
pub fn linear_edge_ideal(d: &Digraph) -> Result<Vec<Polynomial>> {
    let vars = edge_table(d)?;
    let kernel = integer_kernel_basis(&d.incidence_matrix());
    kernel
        .vectors()
        .iter()
        .map(|u| {
            let terms = u.iter().enumerate().map(|(j, c)| {
                (crate::poly::Scalar::from_integer(c.clone()), Monomial::var(j))
            });
            Ok(Polynomial::from_terms(vars.clone(), terms))
        })
        .collect()
}

/// Dimension of the cycle space: edges minus vertices plus components.
pub fn cycle_space_dimension(d: &Digraph) -> usize {
    d.n_edges() + d.underlying().component_count() - d.n_vertices()
}

/// Whether a signed edge vector lies in the rational span of the cycle
/// space.
pub fn vector_in_linear_span(vector: &[i64], d: &Digraph) -> Result<bool> {
    if vector.len() != d.n_edges() {
        return Err(Error::Usage("vector length does not match the edge count".into()));
    }
    let kernel = integer_kernel_basis(&d.incidence_matrix());
    let mut rows: Vec<Vec<BigInt>> = kernel.vectors().to_vec();
    let base_rank = stack(&rows, d.n_edges())?.rank();
    rows.push(vector.iter().map(|&x| BigInt::from(x)).collect());
    Ok(stack(&rows, d.n_edges())?.rank() == base_rank)
}

/// Whether a cycle's signed incidence vector lies in the cycle space span.
pub fn cycle_in_linear_span(cycle: &Cycle, d: &Digraph) -> Result<bool> {
    vector_in_linear_span(&d.cycle_vector(cycle), d)
}

fn stack(rows: &[Vec<BigInt>], cols: usize) -> Result<IntMatrix> {
    IntMatrix::new(rows.len(), cols, rows.iter().flatten().cloned().collect())
}

// ---- vertex ideals and direct bipartiteness ----

/// Reduced basis, in the vertex variables only, of the ideal generated by
/// each vertex minus the product of its incident edge variables. The graph
/// must have no isolated vertices (strip them first); `ord` ranges over the
/// vertex variables in vertex order.
pub fn vertex_ideal(g: &UGraph, ord: &TermOrder) -> Result<IdealBasis> {
    let n = g.n_vertices();
    if ord.n_vars() != n {
        return Err(Error::Usage(format!(
            "order covers {} variables, expected one per vertex ({n})",
            ord.n_vars()
        )));
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::Graph(format!(
            "vertex {:?} is isolated; strip isolated vertices before taking the vertex ideal",
            g.vertex_label(v)
        )));
    }
    let mut names: Vec<String> = g.vertex_labels().to_vec();
    for e in g.edges() {
        if g.vertex_index(&e.id).is_some() {
            return Err(Error::Graph(format!("edge id {:?} collides with a vertex label", e.id)));
        }
        names.push(e.id.clone());
    }
    let vars = VarTable::new(names)?;
    let m = g.n_edges();
    let gens: Vec<Polynomial> = (0..n)
        .map(|v| {
            let incident = g
                .edges()
                .iter()
                .enumerate()
                .filter(|(_, e)| e.a == v || e.b == v)
                .map(|(j, _)| (n + j, 1u32));
            Polynomial::from_terms(
                vars.clone(),
                vec![(scalar(1), Monomial::var(v)), (scalar(-1), Monomial::from_exps(incident))],
            )
        })
        .collect();
    let basis = IdealBasis::new(vars, TermOrder::grevlex(n + m), gens)?;
    let drop: Vec<bool> = (0..n + m).map(|i| i >= n).collect();
    let eliminated = basis.eliminate(&drop, ElimStrategy::Block)?;
    let vertex_vars = eliminated.vars().clone();
    present_under(eliminated, &vertex_vars, ord)
}

/// Tests whether every vertex that touches an edge is purely a source or
/// purely a sink. The verdict is cross-checked against the vertex ideal of
/// the stripped doubled graph: when the split exists, the binomial (product
/// of tail copies) minus (product of head copies) must be a member, and
/// when it does not, no generator may have that shape.
pub fn is_directly_bipartite(d: &Digraph) -> Result<BipartitionReport> {
    let ds = d.strip_isolated();
    let mut report = BipartitionReport {
        directly_bipartite: false,
        sources: Vec::new(),
        sinks: Vec::new(),
        witness: None,
    };
    if ds.n_edges() == 0 {
        return Ok(report);
    }
    let tails: BTreeSet<usize> = ds.edges().iter().map(|e| e.tail).collect();
    let heads: BTreeSet<usize> = ds.edges().iter().map(|e| e.head).collect();
    let split = tails.is_disjoint(&heads);

    let k = k_graph(&ds)?.strip_isolated();
    let ord = TermOrder::grevlex(k.n_vertices());
    let ideal = vertex_ideal(&k, &ord)?;
    if split {
        let z_vars = tails
            .iter()
            .map(|&i| var_for(&ideal, &partner_label(ds.vertex_label(i))))
            .collect::<Result<Vec<_>>>()?;
        let v_vars = heads
            .iter()
            .map(|&j| var_for(&ideal, ds.vertex_label(j)))
            .collect::<Result<Vec<_>>>()?;
        let candidate = Polynomial::from_terms(
            ideal.vars().clone(),
            vec![
                (scalar(1), Monomial::from_exps(z_vars.into_iter().map(|v| (v, 1)))),
                (scalar(-1), Monomial::from_exps(v_vars.into_iter().map(|v| (v, 1)))),
            ],
        );
        if !ideal.contains(&candidate)? {
            return Err(Error::Structural(format!(
                "sources and sinks split but the witness {candidate} is not in the vertex ideal"
            )));
        }
        report.directly_bipartite = true;
        report.sources = tails.iter().map(|&i| ds.vertex_label(i).to_string()).collect();
        report.sinks = heads.iter().map(|&j| ds.vertex_label(j).to_string()).collect();
        report.witness = Some(candidate.monic(&ord)?);
    } else if let Some(g) = split_witness_generator(&ideal, &ds) {
        return Err(Error::Structural(format!(
            "vertex ideal generator {g} announces a source/sink split that does not exist"
        )));
    }
    Ok(report)
}

fn var_for(ideal: &IdealBasis, label: &str) -> Result<usize> {
    ideal
        .vars()
        .index_of(label)
        .ok_or_else(|| Error::Structural(format!("variable {label:?} missing from vertex ideal")))
}

/// A generator shaped like (product of distinct tail copies) minus (product
/// of distinct head copies) whose two disjoint vertex index sets together
/// cover every vertex, if any. Such a binomial asserts a full source/sink
/// partition.
fn split_witness_generator<'a>(ideal: &'a IdealBasis, ds: &Digraph) -> Option<&'a Polynomial> {
    let mut z_of = HashMap::new();
    let mut v_of = HashMap::new();
    for i in 0..ds.n_vertices() {
        z_of.insert(partner_label(ds.vertex_label(i)), i);
        v_of.insert(ds.vertex_label(i).to_string(), i);
    }
    let side = |m: &Monomial, names: &HashMap<String, usize>| -> Option<BTreeSet<usize>> {
        if !m.is_squarefree() || m.is_one() {
            return None;
        }
        m.support().map(|v| names.get(ideal.vars().name(v)).copied()).collect()
    };
    ideal.generators().iter().find(|g| {
        if !g.is_pure_binomial() {
            return false;
        }
        let (m1, m2) = (&g.terms()[0].1, &g.terms()[1].1);
        for (z_m, v_m) in [(m1, m2), (m2, m1)] {
            if let (Some(zs), Some(vs)) = (side(z_m, &z_of), side(v_m, &v_of)) {
                if zs.is_disjoint(&vs) && zs.len() + vs.len() == ds.n_vertices() {
                    return true;
                }
            }
        }
        false
    })
}

// ---- covers ----

/// All minimal vertex covers, each sorted by vertex index, the list sorted
/// by size then indices. The cap bounds the enumeration's candidate set.
pub fn minimal_vertex_covers(g: &UGraph, cap: usize) -> Result<Vec<Vec<String>>> {
    let mut found: HashSet<BTreeSet<usize>> = HashSet::new();
    let mut chosen = BTreeSet::new();
    branch_covers(g, &mut chosen, &mut found, cap)?;
    let mut minimal: Vec<Vec<usize>> = found
        .into_iter()
        .filter(|c| is_minimal_cover(g, c))
        .map(|c| c.into_iter().collect())
        .collect();
    minimal.sort_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
    Ok(minimal
        .into_iter()
        .map(|c| c.into_iter().map(|v| g.vertex_label(v).to_string()).collect())
        .collect())
}

fn branch_covers(
    g: &UGraph,
    chosen: &mut BTreeSet<usize>,
    found: &mut HashSet<BTreeSet<usize>>,
    cap: usize,
) -> Result<()> {
    let uncovered =
        g.edges().iter().find(|e| !chosen.contains(&e.a) && !chosen.contains(&e.b));
    match uncovered {
        None => {
            found.insert(chosen.clone());
            if found.len() > cap {
                return Err(Error::CapExceeded { what: "covers", cap });
            }
            Ok(())
        }
        Some(e) => {
            for v in [e.a, e.b] {
                chosen.insert(v);
                branch_covers(g, chosen, found, cap)?;
                chosen.remove(&v);
            }
            Ok(())
        }
    }
}

fn is_minimal_cover(g: &UGraph, cover: &BTreeSet<usize>) -> bool {
    cover.iter().all(|&v| {
        g.edges().iter().any(|e| {
            (e.a == v && !cover.contains(&e.b)) || (e.b == v && !cover.contains(&e.a))
        })
    })
}

/// Minimal covers of the doubled-minus-matching graph, with the pure
/// tail-side covers transferred to source covers of the digraph and the
/// pure head-side covers to sink covers.
pub fn source_sink_covers(d: &Digraph, cap: usize) -> Result<CoverReport> {
    let k = k_graph(d)?;
    let k_covers = minimal_vertex_covers(&k, cap)?;
    let mut original = HashMap::new();
    for i in 0..d.n_vertices() {
        original.insert(partner_label(d.vertex_label(i)), (d.vertex_label(i).to_string(), i));
    }
    let vertex_pos: HashMap<&str, usize> = d
        .vertex_labels()
        .iter()
        .enumerate()
        .map(|(i, label)| (label.as_str(), i))
        .collect();
    let mut source_covers = Vec::new();
    let mut sink_covers = Vec::new();
    for cover in &k_covers {
        if cover.iter().all(|label| original.contains_key(label)) {
            let mut mapped: Vec<(usize, String)> = cover
                .iter()
                .map(|label| {
                    let (orig, i) = &original[label];
                    (*i, orig.clone())
                })
                .collect();
            mapped.sort_unstable();
            source_covers.push(mapped.into_iter().map(|(_, l)| l).collect());
        }
        if cover.iter().all(|label| vertex_pos.contains_key(label.as_str())) {
            let mut mapped: Vec<(usize, String)> =
                cover.iter().map(|label| (vertex_pos[label.as_str()], label.clone())).collect();
            mapped.sort_unstable();
            sink_covers.push(mapped.into_iter().map(|(_, l)| l).collect());
        }
    }
    Ok(CoverReport { k_covers, source_covers, sink_covers })
}

// ---- undirected analysis through orientation ----

/// Orients the graph with the seed, computes the edge ideal of the
/// orientation, and classifies its generators; the resulting edge sets are
/// cycles of the undirected input.
pub fn undirected_cycles_via_orientation(g: &UGraph, seed: u64) -> Result<CycleReport> {
    let d = g.orient(seed);
    let gb = diedge_ideal(&d, &TermOrder::grevlex(d.n_edges()))?;
    classify_generators(&gb, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MulStyle;

    fn d1() -> Digraph {
        Digraph::new(
            vec!["v1", "v2", "v3", "v4", "v5"],
            vec![
                ("e1", "v1", "v2"),
                ("e2", "v2", "v3"),
                ("e3", "v3", "v1"),
                ("e4", "v1", "v4"),
                ("e5", "v3", "v4"),
                ("e6", "v3", "v5"),
            ],
        )
        .expect("valid digraph")
    }

    fn d2() -> Digraph {
        Digraph::new(
            vec!["v1", "v2", "v3", "v4", "v5"],
            vec![
                ("e1", "v1", "v2"),
                ("e2", "v2", "v3"),
                ("e3", "v1", "v3"),
                ("e4", "v4", "v3"),
                ("e5", "v3", "v5"),
            ],
        )
        .expect("valid digraph")
    }

    fn d4() -> Digraph {
        Digraph::new(
            vec!["v1", "v2", "v3", "v4", "v5"],
            vec![
                ("e1", "v1", "v2"),
                ("e2", "v3", "v2"),
                ("e3", "v1", "v4"),
                ("e4", "v3", "v4"),
                ("e5", "v3", "v5"),
            ],
        )
        .expect("valid digraph")
    }

    fn path3() -> Digraph {
        Digraph::new(vec!["a", "b", "c"], vec![("e1", "a", "b"), ("e2", "b", "c")])
            .expect("valid digraph")
    }

    /// Lex order for the priority e3 > e1 > e4 > e2 > e5 > e6.
    fn sigma1() -> TermOrder {
        TermOrder::lex_with(vec![2, 0, 3, 1, 4, 5]).expect("valid priority")
    }

    /// Lex order for the priority e1 > e3 > e2 > e4 > e5.
    fn sigma2() -> TermOrder {
        TermOrder::lex_with(vec![0, 2, 1, 3, 4]).expect("valid priority")
    }

    fn rendered(gb: &IdealBasis) -> Vec<String> {
        let mut out: Vec<String> =
            gb.generators().iter().map(|g| g.to_text(gb.order(), MulStyle::Implicit)).collect();
        out.sort();
        out
    }

    #[test]
    fn diedge_ideal_of_d1_under_a_priority_lex_order() {
        let gb = diedge_ideal(&d1(), &sigma1()).expect("toric route succeeds");
        assert_eq!(rendered(&gb), ["e1e2e3 - 1", "e1e2e5 - e4", "e3e4 - e5"]);
    }

    #[test]
    fn diedge_ideal_of_d2_under_a_priority_lex_order() {
        let gb = diedge_ideal(&d2(), &sigma2()).expect("toric route succeeds");
        assert_eq!(rendered(&gb), ["e1e2 - e3"]);
    }

    #[test]
    fn diedge_routes_agree() {
        for d in [d1(), d2(), d4()] {
            let ord = TermOrder::grevlex(d.n_edges());
            let a = diedge_ideal_via(&d, &ord, ToricRoute::Elimination).expect("elimination");
            let b = diedge_ideal_via(&d, &ord, ToricRoute::Saturation).expect("saturation");
            assert_eq!(a.generators(), b.generators());
        }
    }

    #[test]
    fn diedge_ideal_of_acyclic_graphs_is_zero() {
        let gb = diedge_ideal(&path3(), &TermOrder::grevlex(2)).expect("toric route succeeds");
        assert!(gb.is_zero_ideal());
        let lonely = Digraph::new(vec!["a"], vec![]).expect("valid digraph");
        let gb = diedge_ideal(&lonely, &TermOrder::grevlex(0)).expect("toric route succeeds");
        assert!(gb.is_zero_ideal());
    }

    #[test]
    fn classify_reads_the_three_cycles_of_d1() {
        let gb = diedge_ideal(&d1(), &sigma1()).expect("toric route succeeds");
        let report = classify_generators(&gb, &d1()).expect("generators are cycles");
        assert_eq!(report.source, CycleSource::ToricGenerators);
        let got: Vec<(Vec<&str>, CycleClass, usize)> = report
            .cycles
            .iter()
            .map(|c| (c.edges.iter().map(String::as_str).collect(), c.class, c.length))
            .collect();
        assert_eq!(
            got,
            vec![
                (vec!["e1", "e2", "e3"], CycleClass::Directed, 3),
                (vec!["e1", "e2", "e4", "e5"], CycleClass::Undirected, 4),
                (vec!["e3", "e4", "e5"], CycleClass::Undirected, 3),
            ]
        );
    }

    #[test]
    fn classify_reads_the_single_cycle_of_d2() {
        let gb = diedge_ideal(&d2(), &sigma2()).expect("toric route succeeds");
        let report = classify_generators(&gb, &d2()).expect("generators are cycles");
        assert_eq!(report.cycles.len(), 1);
        assert_eq!(report.cycles[0].edges, ["e1", "e2", "e3"]);
        assert_eq!(report.cycles[0].class, CycleClass::Undirected);
        assert_eq!(report.cycles[0].length, 3);
    }

    #[test]
    fn classify_rejects_non_cycle_generators() {
        let d = d1();
        let vars = edge_table(&d).expect("edge table");
        let ord = TermOrder::grevlex(6);
        let fake = Polynomial::from_terms(
            vars.clone(),
            vec![(scalar(1), Monomial::var(0)), (scalar(-1), Monomial::var(1))],
        );
        let basis = IdealBasis::new(vars, ord, vec![fake]).expect("basis wraps");
        assert!(matches!(classify_generators(&basis, &d), Err(Error::Structural(_))));
    }

    #[test]
    fn oracle_and_toric_cycle_lists_coincide_on_d1() {
        let gb = diedge_ideal(&d1(), &sigma1()).expect("toric route succeeds");
        let classified = classify_generators(&gb, &d1()).expect("generators are cycles");
        let oracle = oracle_cycle_report(&d1(), 100).expect("under cap");
        assert_eq!(classified.cycles, oracle.cycles);
    }

    #[test]
    fn dag_reports() {
        let yes = is_dag(&d2()).expect("consistent");
        assert!(yes.is_dag && yes.witness.is_none() && !yes.ideal_evidence);

        let no = is_dag(&d1()).expect("consistent");
        assert!(!no.is_dag && no.ideal_evidence);
        let mut witness = no.witness.expect("cycle witness");
        witness.sort();
        assert_eq!(witness, ["e1", "e2", "e3"]);

        let lonely = Digraph::new(vec!["a"], vec![]).expect("valid digraph");
        let trivial = is_dag(&lonely).expect("consistent");
        assert!(trivial.is_dag && !trivial.ideal_evidence);
    }

    #[test]
    fn upd_reports() {
        assert!(is_upd(&path3(), 100).expect("consistent").is_upd);

        let triangle = Digraph::new(
            vec!["a", "b", "c"],
            vec![("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a")],
        )
        .expect("valid digraph");
        assert!(is_upd(&triangle, 100).expect("consistent").is_upd);

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
        )
        .expect("valid digraph");
        assert!(is_upd(&bowtie, 100).expect("consistent").is_upd);

        for d in [d1(), d2(), d4()] {
            let report = is_upd(&d, 100).expect("consistent");
            assert!(!report.is_upd, "unexpected unique paths: {}", report.reason);
        }
    }

    #[test]
    fn symmetric_difference_of_overlapping_triangles() {
        // Two directed triangles sharing the edge e3.
        let d = Digraph::new(
            vec!["v1", "v2", "v3", "v4"],
            vec![
                ("e1", "v1", "v2"),
                ("e2", "v2", "v3"),
                ("e3", "v3", "v1"),
                ("e4", "v1", "v4"),
                ("e5", "v4", "v3"),
            ],
        )
        .expect("valid digraph");
        let cycles = d.underlying().elementary_cycles(100).expect("under cap");
        let directed: Vec<&Cycle> =
            cycles.iter().filter(|c| d.cycle_is_directed(c)).collect();
        assert_eq!(directed.len(), 2);
        let diff = symmetric_difference_cycle(directed[0], directed[1], &d).expect("one cycle");
        assert_eq!(d.underlying().sorted_edge_ids(&diff), ["e1", "e2", "e4", "e5"]);
        assert!(!d.cycle_is_directed(&diff));

        let same = symmetric_difference_cycle(directed[0], directed[0], &d);
        assert!(matches!(same, Err(Error::Graph(_))));
    }

    #[test]
    fn symmetric_difference_requires_a_shared_edge() {
        let two = Digraph::new(
            vec!["a", "b", "c", "d", "e", "f"],
            vec![
                ("e1", "a", "b"),
                ("e2", "b", "c"),
                ("e3", "c", "a"),
                ("e4", "d", "e"),
                ("e5", "e", "f"),
                ("e6", "f", "d"),
            ],
        )
        .expect("valid digraph");
        let cycles = two.underlying().elementary_cycles(100).expect("under cap");
        assert_eq!(cycles.len(), 2);
        let disjoint = symmetric_difference_cycle(&cycles[0], &cycles[1], &two);
        assert!(matches!(disjoint, Err(Error::Graph(_))));
    }

    #[test]
    fn linear_edge_ideal_spans_known_cycle_vectors() {
        let d = d1();
        let basis = linear_edge_ideal(&d).expect("kernel basis");
        assert_eq!(basis.len(), 2);
        assert_eq!(cycle_space_dimension(&d), 2);
        // e3 + e4 - e5 and e1 + e2 - e4 + e5 span the same plane.
        assert!(vector_in_linear_span(&[0, 0, 1, 1, -1, 0], &d).expect("shape ok"));
        assert!(vector_in_linear_span(&[1, 1, 0, -1, 1, 0], &d).expect("shape ok"));
        assert!(!vector_in_linear_span(&[1, 0, 0, 0, 0, 0], &d).expect("shape ok"));

        let d = d2();
        let basis = linear_edge_ideal(&d).expect("kernel basis");
        assert_eq!(basis.len(), 1);
        assert_eq!(cycle_space_dimension(&d), 1);
        assert!(vector_in_linear_span(&[1, 1, -1, 0, 0], &d).expect("shape ok"));
    }

    #[test]
    fn every_oracle_cycle_lies_in_the_linear_span() {
        for d in [d1(), d2(), d4()] {
            for (cycle, _) in d.cycles_with_orientation(100).expect("under cap") {
                assert!(cycle_in_linear_span(&cycle, &d).expect("shape ok"));
            }
        }
        let report = linear_cycle_report(&d1(), 100).expect("all in span");
        assert_eq!(report.cycles.len(), 3);
        assert_eq!(report.source, CycleSource::LinearBasis);
    }

    #[test]
    fn cycle_space_dimension_counts_components() {
        assert_eq!(cycle_space_dimension(&d4()), 1);
        assert_eq!(cycle_space_dimension(&path3()), 0);
        let lonely = Digraph::new(vec!["a", "b"], vec![]).expect("valid digraph");
        assert_eq!(cycle_space_dimension(&lonely), 0);
    }

    #[test]
    fn vertex_ideal_of_the_stripped_double_of_d4() {
        let k = k_graph(&d4()).expect("doubling succeeds").strip_isolated();
        let ord = TermOrder::grevlex(k.n_vertices());
        let ideal = vertex_ideal(&k, &ord).expect("elimination succeeds");
        assert_eq!(rendered(&ideal), ["v2v4v5 - z1z3"]);
    }

    #[test]
    fn vertex_ideal_requires_stripping() {
        let k = k_graph(&d4()).expect("doubling succeeds");
        let ord = TermOrder::grevlex(k.n_vertices());
        assert!(matches!(vertex_ideal(&k, &ord), Err(Error::Graph(_))));
    }

    #[test]
    fn vertex_ideal_of_a_square_relates_opposite_corners() {
        let square = UGraph::new(
            vec!["a", "b", "c", "d"],
            vec![("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "d"), ("e4", "d", "a")],
        )
        .expect("valid graph");
        let ord = TermOrder::grevlex(4);
        let ideal = vertex_ideal(&square, &ord).expect("elimination succeeds");
        let vars = ideal.vars().clone();
        let ac_bd = Polynomial::from_terms(
            vars,
            vec![
                (scalar(1), Monomial::from_exps([(0, 1), (2, 1)])),
                (scalar(-1), Monomial::from_exps([(1, 1), (3, 1)])),
            ],
        );
        assert!(ideal.contains(&ac_bd).expect("normal form"));
    }

    #[test]
    fn vertex_ideal_of_a_triangle_has_no_disjoint_split() {
        let triangle = UGraph::new(
            vec!["a", "b", "c"],
            vec![("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a")],
        )
        .expect("valid graph");
        let ord = TermOrder::grevlex(3);
        let ideal = vertex_ideal(&triangle, &ord).expect("elimination succeeds");
        for (one, two) in [(0usize, (1usize, 2usize)), (1, (0, 2)), (2, (0, 1))] {
            let split = Polynomial::from_terms(
                ideal.vars().clone(),
                vec![
                    (scalar(1), Monomial::var(one)),
                    (scalar(-1), Monomial::from_exps([(two.0, 1), (two.1, 1)])),
                ],
            );
            assert!(!ideal.contains(&split).expect("normal form"));
        }
    }

    #[test]
    fn directly_bipartite_reports() {
        let yes = is_directly_bipartite(&d4()).expect("consistent");
        assert!(yes.directly_bipartite);
        assert_eq!(yes.sources, ["v1", "v3"]);
        assert_eq!(yes.sinks, ["v2", "v4", "v5"]);
        assert_eq!(format!("{}", yes.witness.expect("witness")), "v2v4v5 - z1z3");

        assert!(!is_directly_bipartite(&d1()).expect("consistent").directly_bipartite);
        assert!(!is_directly_bipartite(&d2()).expect("consistent").directly_bipartite);

        let single = Digraph::new(vec!["v1", "v2"], vec![("e1", "v1", "v2")]).expect("valid");
        let report = is_directly_bipartite(&single).expect("consistent");
        assert!(report.directly_bipartite);
        assert_eq!((report.sources, report.sinks), (vec!["v1".into()], vec!["v2".into()]));

        let empty = Digraph::new(vec!["a"], vec![]).expect("valid digraph");
        assert!(!is_directly_bipartite(&empty).expect("consistent").directly_bipartite);
    }

    #[test]
    fn minimal_covers_of_small_graphs() {
        let single = UGraph::new(vec!["a", "b"], vec![("e1", "a", "b")]).expect("valid graph");
        let covers = minimal_vertex_covers(&single, 100).expect("under cap");
        assert_eq!(covers, vec![vec!["a".to_string()], vec!["b".to_string()]]);

        let k = k_graph(&d1()).expect("doubling succeeds");
        let covers = minimal_vertex_covers(&k, 100).expect("under cap");
        let as_sets: Vec<Vec<&str>> =
            covers.iter().map(|c| c.iter().map(String::as_str).collect()).collect();
        assert!(as_sets.contains(&vec!["z1", "z2", "z3"]));
        assert!(as_sets.contains(&vec!["v1", "v2", "v3", "v4", "v5"]));
        for cover in &covers {
            let set: HashSet<&String> = cover.iter().collect();
            for e in k.edges() {
                let a = k.vertex_label(e.a).to_string();
                let b = k.vertex_label(e.b).to_string();
                assert!(set.contains(&a) || set.contains(&b), "cover misses edge {}", e.id);
            }
        }
    }

    #[test]
    fn cover_enumeration_respects_the_cap() {
        let k = k_graph(&d1()).expect("doubling succeeds");
        assert!(matches!(
            minimal_vertex_covers(&k, 2),
            Err(Error::CapExceeded { what: "covers", cap: 2 })
        ));
    }

    #[test]
    fn source_and_sink_covers_match_the_fixtures() {
        let report = source_sink_covers(&d1(), 1000).expect("under cap");
        assert_eq!(report.source_covers, vec![vec!["v1", "v2", "v3"]]);
        assert_eq!(report.sink_covers, vec![vec!["v1", "v2", "v3", "v4", "v5"]]);

        let report = source_sink_covers(&d2(), 1000).expect("under cap");
        assert_eq!(report.source_covers, vec![vec!["v1", "v2", "v3", "v4"]]);
        assert_eq!(report.sink_covers, vec![vec!["v2", "v3", "v5"]]);

        let report = source_sink_covers(&d4(), 1000).expect("under cap");
        assert_eq!(report.source_covers, vec![vec!["v1", "v3"]]);
        assert_eq!(report.sink_covers, vec![vec!["v2", "v4", "v5"]]);
    }

    #[test]
    fn orientation_reports_odd_and_even_cycles() {
        let c5 = UGraph::new(
            vec!["a", "b", "c", "d", "e"],
            vec![
                ("e1", "a", "b"),
                ("e2", "b", "c"),
                ("e3", "c", "d"),
                ("e4", "d", "e"),
                ("e5", "e", "a"),
            ],
        )
        .expect("valid graph");
        let report = undirected_cycles_via_orientation(&c5, 11).expect("classifies");
        assert_eq!(report.cycles.len(), 1);
        assert_eq!(report.cycles[0].length, 5);

        let c4 = UGraph::new(
            vec!["a", "b", "c", "d"],
            vec![("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "d"), ("e4", "d", "a")],
        )
        .expect("valid graph");
        let report = undirected_cycles_via_orientation(&c4, 11).expect("classifies");
        assert_eq!(report.cycles.len(), 1);
        assert_eq!(report.cycles[0].length, 4);

        let tree = UGraph::new(vec!["a", "b", "c"], vec![("e1", "a", "b"), ("e2", "a", "c")])
            .expect("valid graph");
        let report = undirected_cycles_via_orientation(&tree, 11).expect("classifies");
        assert!(report.cycles.is_empty());
    }
}
