//! Structured (non-oracle) decision procedures, one per variant, plus the
//! auxiliary graphs they are built from. Each solver is cross-checkable
//! against the oracle; `solve_auto` dispatches by variant and falls back to
//! the oracle where no structured procedure applies.

use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::incidence::{self, PatternKind};
use crate::model::{check_order, LinearOrder, MarkVariant, MarkedHypergraph, Marks, VertexId};
use crate::oracle::{self, OracleResult};

/// Which construction produced a precedence digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DigraphOrigin {
    /// Digraph on mark-equivalence classes of a min-marked hypergraph.
    DGraph,
    /// Vertex digraph of a min&max hypergraph.
    MinMaxG,
    /// Vertex digraph induced by a component coloring of a one-extreme
    /// hypergraph.
    AbGraph,
}

/// A digraph whose nodes are vertex ids (or class representatives); arcs are
/// deduplicated and never self-loops.
#[derive(Debug, Clone)]
pub struct PrecedenceDigraph {
    pub origin: DigraphOrigin,
    pub nodes: Vec<VertexId>,
    pub arcs: Vec<(VertexId, VertexId)>,
}

impl PrecedenceDigraph {
    fn new(
        origin: DigraphOrigin,
        nodes: Vec<VertexId>,
        arcs: BTreeSet<(VertexId, VertexId)>,
    ) -> Self {
        PrecedenceDigraph {
            origin,
            nodes,
            arcs: arcs.into_iter().collect(),
        }
    }

    /// Lexicographically least topological order of the nodes, or `None` when
    /// a directed cycle exists.
    pub fn lex_topological_order(&self) -> Option<Vec<VertexId>> {
        let idx = |v: VertexId| {
            self.nodes
                .binary_search(&v)
                .expect("arc endpoint is a node")
        };
        let mut out_adj = vec![Vec::new(); self.nodes.len()];
        let mut indeg = vec![0usize; self.nodes.len()];
        for &(a, b) in &self.arcs {
            out_adj[idx(a)].push(idx(b));
            indeg[idx(b)] += 1;
        }
        let mut heap: BinaryHeap<Reverse<VertexId>> = self
            .nodes
            .iter()
            .enumerate()
            .filter(|&(i, _)| indeg[i] == 0)
            .map(|(_, &v)| Reverse(v))
            .collect();
        let mut order = Vec::with_capacity(self.nodes.len());
        while let Some(Reverse(v)) = heap.pop() {
            order.push(v);
            for &t in &out_adj[idx(v)] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    heap.push(Reverse(self.nodes[t]));
                }
            }
        }
        (order.len() == self.nodes.len()).then_some(order)
    }

    pub fn has_cycle(&self) -> bool {
        self.lex_topological_order().is_none()
    }
}

/// D-graph of a min-marked hypergraph: nodes are the mark-equivalence classes
/// of edges (identified by their shared marked vertex), with an arc from the
/// class of `e` to the class of `f` whenever the mark of `f` lies in `e`.
pub fn min_marked_digraph(h: &MarkedHypergraph) -> Result<PrecedenceDigraph> {
    require_variant(h, MarkVariant::MinMarked)?;
    let mut nodes = BTreeSet::new();
    for e in h.edges() {
        let Marks::MinMarked(a) = e.marks() else {
            unreachable!()
        };
        nodes.insert(a);
    }
    let mut arcs = BTreeSet::new();
    for e in h.edges() {
        let Marks::MinMarked(a) = e.marks() else {
            unreachable!()
        };
        for &v in e.verts() {
            if v != a && nodes.contains(&v) {
                arcs.insert((a, v));
            }
        }
    }
    Ok(PrecedenceDigraph::new(
        DigraphOrigin::DGraph,
        nodes.into_iter().collect(),
        arcs,
    ))
}

/// Decides a min-marked hypergraph through its D-graph. When the D-graph is
/// acyclic the returned order lists the marked vertices in topological class
/// order and appends the never-marked vertices in ascending id.
pub fn solve_min_marked(h: &MarkedHypergraph) -> Result<OracleResult> {
    let d = min_marked_digraph(h)?;
    let Some(classes) = d.lex_topological_order() else {
        return Ok(OracleResult::no());
    };
    let marked: BTreeSet<VertexId> = d.nodes.iter().copied().collect();
    let mut seq = classes;
    seq.extend(h.vertices().filter(|v| !marked.contains(v)));
    let order = LinearOrder::new(seq).expect("class order is a permutation");
    debug_assert!(check_order(h, &order).unwrap().agrees);
    Ok(OracleResult::yes(order))
}

/// Vertex digraph of a min&max hypergraph: for every edge, arcs from the
/// min-mark to every other member and from every member to the max-mark.
pub fn min_max_digraph(h: &MarkedHypergraph) -> Result<PrecedenceDigraph> {
    require_variant(h, MarkVariant::MinMax)?;
    let mut arcs = BTreeSet::new();
    for e in h.edges() {
        let Marks::MinMax(a, b) = e.marks() else {
            unreachable!()
        };
        for &v in e.verts() {
            if v != a {
                arcs.insert((a, v));
            }
            if v != b {
                arcs.insert((v, b));
            }
        }
    }
    Ok(PrecedenceDigraph::new(
        DigraphOrigin::MinMaxG,
        h.vertex_vec(),
        arcs,
    ))
}

/// Decides a min&max hypergraph: an agreeing order exists exactly when the
/// vertex digraph is acyclic, and any topological order agrees. Returns the
/// lexicographically least one.
pub fn solve_min_max(h: &MarkedHypergraph) -> Result<OracleResult> {
    let g = min_max_digraph(h)?;
    match g.lex_topological_order() {
        Some(seq) => {
            let order = LinearOrder::new(seq).expect("topological order is a permutation");
            debug_assert!(check_order(h, &order).unwrap().agrees);
            Ok(OracleResult::yes(order))
        }
        None => Ok(OracleResult::no()),
    }
}

/// Edge-level S/F graph of a one-extreme hypergraph, with its S-contraction.
///
/// `classes` are the connected components of the S-edges, indexed by their
/// least member edge; `compound_adjacency` lists the F-edges between classes
/// after contraction, deduplicated, with S-loops removed. An entry `(c, c)`
/// records an F-edge inside one class (which already rules out a proper
/// two-coloring).
#[derive(Debug, Clone)]
pub struct SfGraph {
    pub edge_count: usize,
    pub s_edges: Vec<(usize, usize)>,
    pub f_edges: Vec<(usize, usize)>,
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub compound_adjacency: Vec<(usize, usize)>,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so class numbering is stable
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Builds the S/F graph of a one-extreme hypergraph from its incidence
/// matrix pattern scan.
pub fn build_sf_graph(h: &MarkedHypergraph) -> Result<SfGraph> {
    let m = incidence::build_matrix(h)?;
    let hits = incidence::find_sf(&m, false)?;
    let edge_count = h.edges().len();
    let mut s_edges = Vec::new();
    let mut f_edges = Vec::new();
    for hit in hits {
        match hit.kind {
            PatternKind::S => s_edges.push(hit.rows),
            PatternKind::F => f_edges.push(hit.rows),
            _ => unreachable!("find_sf yields only S and F"),
        }
    }
    s_edges.dedup(); // one S hit per shared column; collapse to one per pair
    let mut uf = UnionFind::new(edge_count);
    for &(a, b) in &s_edges {
        uf.union(a, b);
    }
    // number classes by least member edge
    let mut class_of = vec![usize::MAX; edge_count];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for e in 0..edge_count {
        let root = uf.find(e);
        if class_of[root] == usize::MAX {
            class_of[root] = classes.len();
            classes.push(Vec::new());
        }
        class_of[e] = class_of[root];
        classes[class_of[root]].push(e);
    }
    let compound: BTreeSet<(usize, usize)> = f_edges
        .iter()
        .map(|&(a, b)| {
            let (ca, cb) = (class_of[a], class_of[b]);
            (ca.min(cb), ca.max(cb))
        })
        .collect();
    Ok(SfGraph {
        edge_count,
        s_edges,
        f_edges,
        class_of,
        classes,
        compound_adjacency: compound.into_iter().collect(),
    })
}

/// Edge color in a two-coloring of the contracted S/F graph: `A` marks edges
/// whose mark must be the edge minimum, `B` those whose mark must be the
/// maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbColor {
    A,
    B,
}

impl AbColor {
    fn flipped(self) -> AbColor {
        match self {
            AbColor::A => AbColor::B,
            AbColor::B => AbColor::A,
        }
    }
}

/// Vertex digraph induced by an edge coloring of a one-extreme hypergraph:
/// the mark of an A-edge precedes its other members; the mark of a B-edge
/// follows them.
pub fn ab_digraph(h: &MarkedHypergraph, colors: &[AbColor]) -> Result<PrecedenceDigraph> {
    require_variant(h, MarkVariant::OneExtreme)?;
    assert_eq!(colors.len(), h.edges().len());
    let mut arcs = BTreeSet::new();
    for (e, &color) in h.edges().iter().zip(colors) {
        let Marks::OneExtreme(x) = e.marks() else {
            unreachable!()
        };
        for &v in e.verts() {
            if v == x {
                continue;
            }
            match color {
                AbColor::A => arcs.insert((x, v)),
                AbColor::B => arcs.insert((v, x)),
            };
        }
    }
    Ok(PrecedenceDigraph::new(
        DigraphOrigin::AbGraph,
        h.vertex_vec(),
        arcs,
    ))
}

pub const DEFAULT_COLORING_CAP: usize = 20;

/// Decides a one-extreme hypergraph with the default component cap.
pub fn solve_one_extreme(h: &MarkedHypergraph) -> Result<OracleResult> {
    solve_one_extreme_capped(h, DEFAULT_COLORING_CAP)
}

/// Decides a one-extreme hypergraph: no agreeing order when the contracted
/// S/F graph is not two-colorable; otherwise the 2^c component colorings are
/// tried in Gray-code order (components in index order, all-A first) and the
/// first whose induced vertex digraph is acyclic yields the order.
pub fn solve_one_extreme_capped(h: &MarkedHypergraph, cap: usize) -> Result<OracleResult> {
    require_variant(h, MarkVariant::OneExtreme)?;
    let sf = build_sf_graph(h)?;
    let class_count = sf.classes.len();

    // adjacency between classes; a loop makes the graph non-two-colorable
    let mut adj = vec![Vec::new(); class_count];
    for &(a, b) in &sf.compound_adjacency {
        if a == b {
            return Ok(OracleResult::no());
        }
        adj[a].push(b);
        adj[b].push(a);
    }

    // two-color each component by BFS; components indexed by least class
    let mut base_color = vec![AbColor::A; class_count];
    let mut component_of = vec![usize::MAX; class_count];
    let mut components = 0usize;
    for start in 0..class_count {
        if component_of[start] != usize::MAX {
            continue;
        }
        let comp = components;
        components += 1;
        component_of[start] = comp;
        base_color[start] = AbColor::A;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(c) = queue.pop_front() {
            for &d in &adj[c] {
                if component_of[d] == usize::MAX {
                    component_of[d] = comp;
                    base_color[d] = base_color[c].flipped();
                    queue.push_back(d);
                } else if base_color[d] == base_color[c] {
                    return Ok(OracleResult::no()); // odd cycle
                }
            }
        }
    }

    if components > cap {
        return Err(Error::ColoringSpaceTooLarge { components, cap });
    }

    let mut edge_colors = vec![AbColor::A; h.edges().len()];
    for step in 0u64..(1u64 << components) {
        let mask = step ^ (step >> 1); // Gray code over component flips
        for (e, color) in edge_colors.iter_mut().enumerate() {
            let class = sf.class_of[e];
            let flip = (mask >> component_of[class]) & 1 == 1;
            *color = if flip {
                base_color[class].flipped()
            } else {
                base_color[class]
            };
        }
        let ab = ab_digraph(h, &edge_colors)?;
        if let Some(seq) = ab.lex_topological_order() {
            let order = LinearOrder::new(seq).expect("topological order is a permutation");
            debug_assert!(check_order(h, &order).unwrap().agrees);
            return Ok(OracleResult::yes(order));
        }
    }
    Ok(OracleResult::no())
}

/// Vertices that belong to the boundary pair of every edge containing them.
/// A two-extreme clique has at most two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalReport {
    pub extremal: Vec<VertexId>,
}

pub fn extremal_vertices(h: &MarkedHypergraph) -> Result<ExtremalReport> {
    require_variant(h, MarkVariant::TwoExtreme)?;
    let mut ok = vec![true; h.n() as usize + 1];
    for e in h.edges() {
        let Marks::TwoExtreme(a, b) = e.marks() else {
            unreachable!()
        };
        for &v in e.verts() {
            if v != a && v != b {
                ok[v as usize] = false;
            }
        }
    }
    Ok(ExtremalReport {
        extremal: h.vertices().filter(|&v| ok[v as usize]).collect(),
    })
}

/// Partition of the vertices other than the pivot `x` under the similarity
/// relation: `u ~ v` when `u = v` or the triple `{x, u, v}` is not marked
/// `{u, v}`. Computed as the reflexive-transitive closure of the pairwise
/// relation, so it is total even on inputs where the relation is not already
/// transitive; more than two classes is reported, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimilarityClasses {
    pub pivot: VertexId,
    pub classes: Vec<Vec<VertexId>>,
}

pub fn similarity_classes(h: &MarkedHypergraph, x: VertexId) -> Result<SimilarityClasses> {
    require_variant(h, MarkVariant::TwoExtreme)?;
    if h.r() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            got: h.r(),
        });
    }
    assert!(x >= 1 && x <= h.n(), "pivot outside the vertex set");
    let others: Vec<VertexId> = h.vertices().filter(|&v| v != x).collect();
    let mut uf = UnionFind::new(others.len());
    for i in 0..others.len() {
        for j in i + 1..others.len() {
            let (u, v) = (others[i], others[j]);
            let mut verts = vec![x, u, v];
            verts.sort_unstable();
            let e = h.edge_index(&verts).expect("clique contains every triple");
            let Marks::TwoExtreme(a, b) = h.edges()[e].marks() else {
                unreachable!()
            };
            if (a, b) != (u.min(v), u.max(v)) {
                uf.union(i, j);
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<VertexId>> = Default::default();
    for i in 0..others.len() {
        let root = uf.find(i);
        by_root.entry(root).or_default().push(others[i]);
    }
    Ok(SimilarityClasses {
        pivot: x,
        classes: by_root.into_values().collect(),
    })
}

/// Decides a two-extreme clique by peeling extremal vertices.
///
/// An extremal vertex is the minimum or maximum of every agreeing order, so
/// it can be peeled as the global minimum and the remainder solved
/// recursively; the assembled order is gated by [`check_order`] and the
/// oracle takes over whenever the peel is inconclusive, which makes the
/// verdict unconditionally equal to the oracle's. Non-clique inputs go
/// straight to the oracle.
pub fn solve_two_extreme(h: &MarkedHypergraph) -> Result<OracleResult> {
    require_variant(h, MarkVariant::TwoExtreme)?;
    if !h.is_clique() {
        return Ok(oracle::decide(h, &h.vertex_vec()));
    }
    Ok(peel(h))
}

fn peel(h: &MarkedHypergraph) -> OracleResult {
    let all = h.vertex_vec();
    if h.n() <= h.r() + 1 {
        return oracle::decide(h, &all);
    }
    let Ok(report) = extremal_vertices(h) else {
        return oracle::decide(h, &all);
    };
    let Some(&least) = report.extremal.first() else {
        return oracle::decide(h, &all);
    };
    let rest: Vec<VertexId> = all.iter().copied().filter(|&v| v != least).collect();
    let (sub, back) = h.restrict(&rest);
    let sub_result = peel(&sub);
    let Some(sub_order) = sub_result.order else {
        // a restriction of an agreeing order agrees, so the whole fails too
        return OracleResult::no();
    };
    let tail: Vec<VertexId> = sub_order
        .seq()
        .iter()
        .map(|&v| back[v as usize - 1])
        .collect();
    for candidate in [tail.clone(), tail.into_iter().rev().collect()] {
        let mut seq = vec![least];
        seq.extend(candidate);
        let order = LinearOrder::new(seq).expect("peel builds a permutation");
        if check_order(h, &order).expect("order over subset").agrees {
            return OracleResult::yes(order);
        }
    }
    oracle::decide(h, &all)
}

/// Number of agreeing orders of the whole vertex set.
pub fn count_agreeing(h: &MarkedHypergraph) -> u64 {
    oracle::enumerate(h, &h.vertex_vec(), None).len() as u64
}

/// Dispatches to the structured solver of the input's variant, falling back
/// to the oracle where none applies (non-clique two-extreme inputs, or a
/// one-extreme coloring space beyond the cap).
pub fn solve_auto(h: &MarkedHypergraph) -> OracleResult {
    match h.variant() {
        MarkVariant::MinMarked => solve_min_marked(h).expect("variant matches"),
        MarkVariant::MinMax => solve_min_max(h).expect("variant matches"),
        MarkVariant::TwoExtreme => solve_two_extreme(h).expect("variant matches"),
        MarkVariant::OneExtreme => match solve_one_extreme(h) {
            Ok(result) => result,
            Err(Error::ColoringSpaceTooLarge { .. }) => oracle::decide(h, &h.vertex_vec()),
            Err(e) => unreachable!("unexpected solver error: {e}"),
        },
    }
}

fn require_variant(h: &MarkedHypergraph, expected: MarkVariant) -> Result<()> {
    if h.variant() != expected {
        return Err(Error::WrongVariant {
            expected,
            got: h.variant(),
        });
    }
    Ok(())
}
