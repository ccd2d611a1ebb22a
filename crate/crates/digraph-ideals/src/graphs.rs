//! Directed and undirected graphs plus the combinatorial oracles that
//! cross-check every algebraic answer.
//!
//! Key operations:
//! - [`Digraph::incidence_matrix`]: the vertex-by-edge matrix whose toric
//!   ideal drives the algebraic route.
//! - [`UGraph::elementary_cycles`]: exhaustive capped enumeration of
//!   elementary cycles, the oracle behind cycle classification.
//! - [`Digraph::topological_sort`]: Kahn's algorithm, returning a directed
//!   cycle witness when no order exists.
//! - [`h_graph`] / [`digraph_from_bipartite`]: the bipartite doubling that
//!   carries vertex covers between a digraph and an undirected graph.
//!
//! Design notes: graphs are simple throughout. Digraphs reject loops,
//! repeated edges, and antiparallel pairs, so the underlying undirected
//! graph is simple as well; this matches the reach of the incidence-matrix
//! ideals, which cannot distinguish parallel edges.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::is_identifier;
use crate::toric::IntMatrix;

// ---- directed graphs ----

/// Directed edge `tail -> head` over vertex indices; `id` doubles as the
/// ring variable name in edge ideals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiEdge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// Simple digraph: no loops, no repeated edges, no antiparallel pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertices: Vec<String>,
    edges: Vec<DiEdge>,
}

/// Outcome of a topological sort attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopoSort {
    /// Vertex indices listed so every edge points forward.
    Order(Vec<usize>),
    /// Edge indices of a directed cycle obstructing any order.
    Cycle(Vec<usize>),
}

impl Digraph {
    /// Builds a digraph from vertex labels and `(id, from, to)` edge triples.
    pub fn new<S: Into<String>>(vertices: Vec<S>, edges: Vec<(S, S, S)>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = label_index(&vertices, "vertex")?;
        let mut ids = HashSet::new();
        let mut pairs = HashSet::new();
        let mut built = Vec::with_capacity(edges.len());
        for (id, from, to) in edges {
            let (id, from, to) = (id.into(), from.into(), to.into());
            if !is_identifier(&id) {
                return Err(Error::Graph(format!("edge id {id:?} is not identifier-shaped")));
            }
            if !ids.insert(id.clone()) {
                return Err(Error::Graph(format!("duplicate edge id {id:?}")));
            }
            let tail = vertex_of(&index, &from, &id)?;
            let head = vertex_of(&index, &to, &id)?;
            if tail == head {
                return Err(Error::Graph(format!("edge {id:?} is a loop at {from:?}")));
            }
            if pairs.contains(&(head, tail)) {
                return Err(Error::Graph(format!(
                    "edge {id:?} is antiparallel to an existing edge; the underlying graph must stay simple"
                )));
            }
            if !pairs.insert((tail, head)) {
                return Err(Error::Graph(format!("edge {id:?} repeats an existing edge")));
            }
            built.push(DiEdge { id, tail, head });
        }
        Ok(Digraph { vertices, edges: built })
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[DiEdge] {
        &self.edges
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Edge ids in edge order, ready to seed a variable table.
    pub fn edge_ids(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.id.clone()).collect()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.tail == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.head == v).count()
    }

    /// Vertex indices with no incoming edge.
    pub fn source_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.in_degree(v) == 0).collect()
    }

    /// Vertex indices with no outgoing edge.
    pub fn sink_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&v| self.out_degree(v) == 0).collect()
    }

    /// Incidence matrix: one row per vertex, one column per edge, entry -1
    /// at the tail and +1 at the head of each edge.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut rows = vec![vec![0i64; self.edges.len()]; self.vertices.len()];
        for (j, e) in self.edges.iter().enumerate() {
            rows[e.tail][j] = -1;
            rows[e.head][j] = 1;
        }
        IntMatrix::from_rows(rows).expect("incidence rows are rectangular by construction")
    }

    /// Forgets directions; edge indices and ids carry over unchanged.
    pub fn underlying(&self) -> UGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| UEdge {
                id: e.id.clone(),
                a: e.tail.min(e.head),
                b: e.tail.max(e.head),
            })
            .collect();
        UGraph { vertices: self.vertices.clone(), edges }
    }

    /// Kahn's algorithm with deterministic smallest-index tie-breaking; on
    /// failure walks predecessors inside the stuck subgraph until a vertex
    /// repeats, which recovers a directed cycle.
    pub fn topological_sort(&self) -> TopoSort {
        let n = self.vertices.len();
        let mut in_deg = vec![0usize; n];
        for e in &self.edges {
            in_deg[e.head] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| in_deg[v] == 0).collect();
        let mut remaining = vec![true; n];
        let mut order = Vec::with_capacity(n);
        while let Some(&v) = ready.iter().next() {
            ready.remove(&v);
            remaining[v] = false;
            order.push(v);
            for e in self.edges.iter().filter(|e| e.tail == v) {
                in_deg[e.head] -= 1;
                if in_deg[e.head] == 0 {
                    ready.insert(e.head);
                }
            }
        }
        if order.len() == n {
            return TopoSort::Order(order);
        }
        let start = (0..n).find(|&v| remaining[v]).expect("some vertex is stuck");
        let mut seen_at = HashMap::from([(start, 0usize)]);
        let mut walk = vec![start];
        loop {
            let cur = *walk.last().expect("walk starts nonempty");
            let pred = self
                .edges
                .iter()
                .find(|e| e.head == cur && remaining[e.tail])
                .expect("every stuck vertex keeps an unprocessed predecessor")
                .tail;
            if let Some(&i) = seen_at.get(&pred) {
                // Forward cycle: pred, then the walk segment back down to it.
                let mut seq = vec![pred];
                seq.extend(walk[i + 1..].iter().rev().copied());
                let edges = (0..seq.len())
                    .map(|t| self.directed_edge_between(seq[t], seq[(t + 1) % seq.len()]))
                    .collect::<Option<Vec<usize>>>()
                    .expect("consecutive walk vertices are joined by edges");
                return TopoSort::Cycle(edges);
            }
            seen_at.insert(pred, walk.len());
            walk.push(pred);
        }
    }

    fn directed_edge_between(&self, tail: usize, head: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.tail == tail && e.head == head)
    }

    /// Elementary cycles of the underlying graph, each tagged `true` when
    /// its edges are consistently oriented along one walk direction.
    pub fn cycles_with_orientation(&self, cap: usize) -> Result<Vec<(Cycle, bool)>> {
        let cycles = self.underlying().elementary_cycles(cap)?;
        Ok(cycles.into_iter().map(|c| { let d = self.cycle_is_directed(&c); (c, d) }).collect())
    }

    /// Whether a cycle of the underlying graph is consistently oriented
    /// along one of its two walk directions.
    pub fn cycle_is_directed(&self, cycle: &Cycle) -> bool {
        let k = cycle.vertices.len();
        let mut forward = true;
        let mut backward = true;
        for i in 0..k {
            let from = cycle.vertices[i];
            let to = cycle.vertices[(i + 1) % k];
            let e = &self.edges[cycle.edges[i]];
            if e.tail == from && e.head == to {
                backward = false;
            } else {
                forward = false;
            }
        }
        forward || backward
    }

    /// Signed incidence vector of a cycle walk: +1 for edges traversed tail
    /// to head, -1 against, 0 off the cycle. Lies in the kernel of the
    /// incidence matrix.
    pub fn cycle_vector(&self, cycle: &Cycle) -> Vec<i64> {
        let mut vector = vec![0i64; self.edges.len()];
        let k = cycle.vertices.len();
        for i in 0..k {
            let from = cycle.vertices[i];
            let e = &self.edges[cycle.edges[i]];
            vector[cycle.edges[i]] = if e.tail == from { 1 } else { -1 };
        }
        vector
    }

    /// Combinatorial unique-path check: every elementary cycle of the
    /// underlying graph is consistently oriented, and no two cycles share
    /// more than one vertex.
    pub fn has_unique_path_property(&self, cap: usize) -> Result<bool> {
        let cycles = self.cycles_with_orientation(cap)?;
        if cycles.iter().any(|(_, directed)| !directed) {
            return Ok(false);
        }
        for (i, (c1, _)) in cycles.iter().enumerate() {
            let s1: HashSet<usize> = c1.vertices.iter().copied().collect();
            for (c2, _) in &cycles[i + 1..] {
                if c2.vertices.iter().filter(|v| s1.contains(v)).count() > 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Drops vertices that touch no edge, reindexing the rest in order.
    pub fn strip_isolated(&self) -> Digraph {
        let mut used = vec![false; self.vertices.len()];
        for e in &self.edges {
            used[e.tail] = true;
            used[e.head] = true;
        }
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, label) in self.vertices.iter().enumerate() {
            if used[i] {
                remap[i] = vertices.len();
                vertices.push(label.clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| DiEdge { id: e.id.clone(), tail: remap[e.tail], head: remap[e.head] })
            .collect();
        Digraph { vertices, edges }
    }
}

// ---- undirected graphs ----

/// Undirected edge between vertex indices `a < b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UEdge {
    pub id: String,
    pub a: usize,
    pub b: usize,
}

/// Simple undirected graph: no loops, no repeated edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    vertices: Vec<String>,
    edges: Vec<UEdge>,
}

/// Elementary cycle, stored as the closed vertex walk plus the edge indices
/// it traverses; `edges[i]` joins `vertices[i]` to the next vertex around.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

impl UGraph {
    /// Builds a graph from vertex labels and `(id, end, end)` edge triples.
    pub fn new<S: Into<String>>(vertices: Vec<S>, edges: Vec<(S, S, S)>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = label_index(&vertices, "vertex")?;
        let mut ids = HashSet::new();
        let mut pairs = HashSet::new();
        let mut built = Vec::with_capacity(edges.len());
        for (id, x, y) in edges {
            let (id, x, y) = (id.into(), x.into(), y.into());
            if !is_identifier(&id) {
                return Err(Error::Graph(format!("edge id {id:?} is not identifier-shaped")));
            }
            if !ids.insert(id.clone()) {
                return Err(Error::Graph(format!("duplicate edge id {id:?}")));
            }
            let a = vertex_of(&index, &x, &id)?;
            let b = vertex_of(&index, &y, &id)?;
            if a == b {
                return Err(Error::Graph(format!("edge {id:?} is a loop at {x:?}")));
            }
            let (a, b) = (a.min(b), a.max(b));
            if !pairs.insert((a, b)) {
                return Err(Error::Graph(format!("edge {id:?} repeats an existing edge")));
            }
            built.push(UEdge { id, a, b });
        }
        Ok(UGraph { vertices, edges: built })
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[UEdge] {
        &self.edges
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.a == v || e.b == v).count()
    }

    /// Neighbor lists `(other endpoint, edge index)` sorted by neighbor, so
    /// every traversal below is deterministic.
    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.a].push((e.b, i));
            adj[e.b].push((e.a, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Two-colors each component from its smallest vertex (color `false`),
    /// or returns `None` when some cycle is odd.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for root in 0..n {
            if color[root].is_some() {
                continue;
            }
            color[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].expect("queued vertices are colored");
                for &(w, _) in &adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.expect("all vertices colored")).collect())
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut count = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            count += 1;
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &(w, _) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        count
    }

    /// Enumerates every elementary cycle exactly once, rooted at its
    /// smallest vertex and walked toward its smaller second vertex. Results
    /// come back sorted lexicographically by sorted edge-id set. Errs when
    /// more than `cap` cycles exist.
    pub fn elementary_cycles(&self, cap: usize) -> Result<Vec<Cycle>> {
        let adj = self.adjacency();
        let mut found = Vec::new();
        let mut on_path = vec![false; self.vertices.len()];
        let mut path_v = Vec::new();
        let mut path_e = Vec::new();
        for root in 0..self.vertices.len() {
            on_path[root] = true;
            path_v.push(root);
            cycle_dfs(root, root, &adj, &mut on_path, &mut path_v, &mut path_e, &mut found, cap)?;
            path_v.pop();
            on_path[root] = false;
        }
        found.sort_by_cached_key(|c| self.sorted_edge_ids(c));
        Ok(found)
    }

    /// The ids of a cycle's edges in ascending order.
    pub fn sorted_edge_ids(&self, cycle: &Cycle) -> Vec<String> {
        let mut ids: Vec<String> =
            cycle.edges.iter().map(|&e| self.edges[e].id.clone()).collect();
        ids.sort_unstable();
        ids
    }

    /// Reconstructs the elementary cycle carried by an edge subset, in the
    /// same canonical form the enumeration produces, or `None` when the
    /// subset is not a single elementary cycle.
    pub fn cycle_from_edge_set(&self, edges: &[usize]) -> Option<Cycle> {
        if edges.len() < 3 || edges.iter().any(|&e| e >= self.edges.len()) {
            return None;
        }
        let set: HashSet<usize> = edges.iter().copied().collect();
        if set.len() != edges.len() {
            return None;
        }
        let mut touch: HashMap<usize, Vec<(usize, usize)>> = HashMap::new();
        for &e in &set {
            let UEdge { a, b, .. } = self.edges[e];
            touch.entry(a).or_default().push((b, e));
            touch.entry(b).or_default().push((a, e));
        }
        if touch.values().any(|ends| ends.len() != 2) {
            return None;
        }
        let &start = touch.keys().min()?;
        let mut first = touch[&start].clone();
        first.sort_unstable();
        let mut vertices = vec![start];
        let mut walk = vec![first[0].1];
        let mut cur = first[0].0;
        while cur != start {
            vertices.push(cur);
            let last = *walk.last().expect("walk starts nonempty");
            let &(next, edge) = touch[&cur].iter().find(|&&(_, e)| e != last)?;
            walk.push(edge);
            cur = next;
        }
        // A proper subset walked means the input split into several cycles.
        (walk.len() == edges.len()).then_some(Cycle { vertices, edges: walk })
    }

    /// Drops vertices that touch no edge, reindexing the rest in order.
    pub fn strip_isolated(&self) -> UGraph {
        let mut used = vec![false; self.vertices.len()];
        for e in &self.edges {
            used[e.a] = true;
            used[e.b] = true;
        }
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, label) in self.vertices.iter().enumerate() {
            if used[i] {
                remap[i] = vertices.len();
                vertices.push(label.clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| UEdge { id: e.id.clone(), a: remap[e.a], b: remap[e.b] })
            .collect();
        UGraph { vertices, edges }
    }

    /// Maximum matching by augmenting paths; the graph must be bipartite.
    /// Returns the matched edge indices in ascending order.
    pub fn maximum_matching(&self) -> Result<Vec<usize>> {
        let colors = self
            .bipartition()
            .ok_or_else(|| Error::Graph("maximum matching requires a bipartite graph".into()))?;
        let n = self.vertices.len();
        let adj = self.adjacency();
        let mut matched: Vec<Option<usize>> = vec![None; n];
        for u in (0..n).filter(|&u| !colors[u]) {
            if matched[u].is_none() {
                let mut visited = vec![false; n];
                try_augment(u, &adj, &self.edges, &mut matched, &mut visited);
            }
        }
        let mut result: Vec<usize> =
            (0..n).filter(|&u| !colors[u]).filter_map(|u| matched[u]).collect();
        result.sort_unstable();
        Ok(result)
    }

    /// A matching saturating every vertex, if one exists; the graph must be
    /// bipartite.
    pub fn perfect_matching(&self) -> Result<Option<Vec<usize>>> {
        let matching = self.maximum_matching()?;
        Ok((matching.len() * 2 == self.vertices.len()).then_some(matching))
    }

    /// Orients every edge by a seeded coin flip; the same seed always gives
    /// the same digraph.
    pub fn orient(&self, seed: u64) -> Digraph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (tail, head) = if rng.random_bool(0.5) { (e.a, e.b) } else { (e.b, e.a) };
                DiEdge { id: e.id.clone(), tail, head }
            })
            .collect();
        Digraph { vertices: self.vertices.clone(), edges }
    }
}

#[allow(clippy::too_many_arguments)]
fn cycle_dfs(
    root: usize,
    current: usize,
    adj: &[Vec<(usize, usize)>],
    on_path: &mut Vec<bool>,
    path_v: &mut Vec<usize>,
    path_e: &mut Vec<usize>,
    found: &mut Vec<Cycle>,
    cap: usize,
) -> Result<()> {
    for &(next, edge) in &adj[current] {
        if next == root {
            // Keep one of the two walk directions per cycle.
            if path_v.len() >= 3 && path_v[1] < *path_v.last().expect("path is nonempty") {
                let mut edges = path_e.clone();
                edges.push(edge);
                found.push(Cycle { vertices: path_v.clone(), edges });
                if found.len() > cap {
                    return Err(Error::CapExceeded { what: "cycles", cap });
                }
            }
        } else if next > root && !on_path[next] {
            on_path[next] = true;
            path_v.push(next);
            path_e.push(edge);
            cycle_dfs(root, next, adj, on_path, path_v, path_e, found, cap)?;
            path_e.pop();
            path_v.pop();
            on_path[next] = false;
        }
    }
    Ok(())
}

fn try_augment(
    u: usize,
    adj: &[Vec<(usize, usize)>],
    edges: &[UEdge],
    matched: &mut Vec<Option<usize>>,
    visited: &mut Vec<bool>,
) -> bool {
    for &(w, e) in &adj[u] {
        if visited[w] {
            continue;
        }
        visited[w] = true;
        let freed = match matched[w] {
            None => true,
            Some(old) => {
                let partner = edges[old].a + edges[old].b - w;
                try_augment(partner, adj, edges, matched, visited)
            }
        };
        if freed {
            matched[w] = Some(e);
            matched[u] = Some(e);
            return true;
        }
    }
    false
}

// ---- bipartite doubling ----

/// A digraph doubled into a bipartite graph: every vertex splits into a
/// tail copy and a head copy, every edge joins the tail copy of its tail to
/// the head copy of its head, and a distinguished perfect matching joins
/// the two copies of each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HGraph {
    pub graph: UGraph,
    /// Ids of the matching edges, one per original vertex, in vertex order.
    pub f_edges: Vec<String>,
    /// Tail-copy labels, in original vertex order.
    pub z_labels: Vec<String>,
}

/// Tail-copy label: `v`-prefixed labels swap the prefix for `z`, anything
/// else gains a `z_` prefix.
pub(crate) fn partner_label(label: &str) -> String {
    match label.strip_prefix('v') {
        Some(rest) if !rest.is_empty() => format!("z{rest}"),
        _ => format!("z_{label}"),
    }
}

pub(crate) fn fresh_id(used: &HashSet<String>, stem: &str) -> String {
    if !used.contains(stem) {
        return stem.to_string();
    }
    for k in 0.. {
        let candidate = format!("{stem}_{k}");
        if !used.contains(&candidate) {
            return candidate;
        }
    }
    unreachable!()
}

/// Doubles a digraph into its bipartite form with the matching edges kept.
pub fn h_graph(d: &Digraph) -> Result<HGraph> {
    let mut taken: HashSet<String> = d.vertices.iter().cloned().collect();
    let mut z_labels = Vec::with_capacity(d.n_vertices());
    for label in &d.vertices {
        let partner = partner_label(label);
        if !taken.insert(partner.clone()) {
            return Err(Error::Graph(format!(
                "tail-copy label {partner:?} for vertex {label:?} collides with another label"
            )));
        }
        z_labels.push(partner);
    }
    let mut vertices = z_labels.clone();
    vertices.extend(d.vertices.iter().cloned());
    let mut used_ids: HashSet<String> = d.edges.iter().map(|e| e.id.clone()).collect();
    let mut edges: Vec<(String, String, String)> = d
        .edges
        .iter()
        .map(|e| (e.id.clone(), z_labels[e.tail].clone(), d.vertices[e.head].clone()))
        .collect();
    let mut f_edges = Vec::with_capacity(d.n_vertices());
    for (i, label) in d.vertices.iter().enumerate() {
        let id = fresh_id(&used_ids, &format!("f{}", i + 1));
        used_ids.insert(id.clone());
        f_edges.push(id.clone());
        edges.push((id, z_labels[i].clone(), label.clone()));
    }
    let graph = UGraph::new(vertices, edges)?;
    Ok(HGraph { graph, f_edges, z_labels })
}

/// The doubled graph without its matching edges; covers of this graph
/// encode the source and sink covers of the digraph.
pub fn k_graph(d: &Digraph) -> Result<UGraph> {
    let h = h_graph(d)?;
    let f: HashSet<&String> = h.f_edges.iter().collect();
    let vertices = h.graph.vertices.clone();
    let edges = h
        .graph
        .edges
        .iter()
        .filter(|e| !f.contains(&e.id))
        .map(|e| {
            (e.id.clone(), h.graph.vertices[e.a].clone(), h.graph.vertices[e.b].clone())
        })
        .collect();
    UGraph::new(vertices, edges)
}

/// Inverts the doubling: given a graph whose edges all cross between the
/// named tail side and its complement, plus a perfect matching, rebuilds
/// the digraph whose doubling they are. Each non-matching edge turns into
/// an edge from the matched partner of its tail-side endpoint to its other
/// endpoint.
pub fn digraph_from_bipartite(
    graph: &UGraph,
    f_edges: &[String],
    z_labels: &[String],
) -> Result<Digraph> {
    let n2 = graph.n_vertices();
    let mut is_z = vec![false; n2];
    for label in z_labels {
        let i = graph
            .vertex_index(label)
            .ok_or_else(|| Error::Graph(format!("unknown tail-side label {label:?}")))?;
        if is_z[i] {
            return Err(Error::Graph(format!("repeated tail-side label {label:?}")));
        }
        is_z[i] = true;
    }
    for e in &graph.edges {
        if is_z[e.a] == is_z[e.b] {
            return Err(Error::Graph(format!(
                "edge {:?} does not cross the given bipartition",
                e.id
            )));
        }
    }
    let mut partner: Vec<Option<usize>> = vec![None; n2];
    let mut f_set = HashSet::new();
    for id in f_edges {
        let idx = graph
            .edge_index(id)
            .ok_or_else(|| Error::Graph(format!("unknown matching edge {id:?}")))?;
        if !f_set.insert(idx) {
            return Err(Error::Graph(format!("repeated matching edge {id:?}")));
        }
        let e = &graph.edges[idx];
        for v in [e.a, e.b] {
            if partner[v].is_some() {
                return Err(Error::Graph(format!(
                    "matching touches vertex {:?} twice",
                    graph.vertices[v]
                )));
            }
        }
        partner[e.a] = Some(e.b);
        partner[e.b] = Some(e.a);
    }
    if let Some(v) = (0..n2).find(|&v| partner[v].is_none()) {
        return Err(Error::Graph(format!("matching misses vertex {:?}", graph.vertices[v])));
    }
    let vertices: Vec<String> =
        (0..n2).filter(|&v| !is_z[v]).map(|v| graph.vertices[v].clone()).collect();
    let edges: Vec<(String, String, String)> = graph
        .edges
        .iter()
        .enumerate()
        .filter(|(i, _)| !f_set.contains(i))
        .map(|(_, e)| {
            let (z_end, v_end) = if is_z[e.a] { (e.a, e.b) } else { (e.b, e.a) };
            let tail = partner[z_end].expect("matching is perfect");
            (e.id.clone(), graph.vertices[tail].clone(), graph.vertices[v_end].clone())
        })
        .collect();
    Digraph::new(vertices, edges)
}

// ---- shared construction helpers ----

fn label_index(labels: &[String], what: &str) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, label) in labels.iter().enumerate() {
        if !is_identifier(label) {
            return Err(Error::Graph(format!("{what} label {label:?} is not identifier-shaped")));
        }
        if index.insert(label.clone(), i).is_some() {
            return Err(Error::Graph(format!("duplicate {what} label {label:?}")));
        }
    }
    Ok(index)
}

fn vertex_of(index: &HashMap<String, usize>, label: &str, edge: &str) -> Result<usize> {
    index
        .get(label)
        .copied()
        .ok_or_else(|| Error::Graph(format!("edge {edge:?} references unknown vertex {label:?}")))
}
