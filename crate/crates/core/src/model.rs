//! Domain types: marked hypergraphs, linear orders and the agreement check
//! that every other module trusts.

use std::fmt;

use crate::comb::{binomial, subsets_lex};
use crate::error::{Error, Result};

/// Vertices are dense 1-based integers; any external naming lives in the
/// file-format layer.
pub type VertexId = u32;

/// The four marking disciplines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MarkVariant {
    TwoExtreme,
    MinMarked,
    OneExtreme,
    MinMax,
}

impl MarkVariant {
    pub const ALL: [MarkVariant; 4] = [
        MarkVariant::TwoExtreme,
        MarkVariant::MinMarked,
        MarkVariant::OneExtreme,
        MarkVariant::MinMax,
    ];

    /// Kebab-case token used by the file format and the CLI.
    pub fn token(self) -> &'static str {
        match self {
            MarkVariant::TwoExtreme => "two-extreme",
            MarkVariant::MinMarked => "min-marked",
            MarkVariant::OneExtreme => "one-extreme",
            MarkVariant::MinMax => "min-max",
        }
    }

    pub fn from_token(s: &str) -> Option<MarkVariant> {
        MarkVariant::ALL.into_iter().find(|v| v.token() == s)
    }

    /// Number of distinct markings a single r-edge admits.
    pub fn marking_choices(self, r: u32) -> u64 {
        let r = r as u64;
        match self {
            MarkVariant::TwoExtreme => r * (r - 1) / 2,
            MarkVariant::MinMarked | MarkVariant::OneExtreme => r,
            MarkVariant::MinMax => r * (r - 1),
        }
    }
}

impl fmt::Display for MarkVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// Variant-dependent marks of a single edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Marks {
    /// Unordered boundary pair, stored ascending.
    TwoExtreme(VertexId, VertexId),
    /// Prescribed minimum.
    MinMarked(VertexId),
    /// Prescribed extreme (minimum or maximum, decided by the order).
    OneExtreme(VertexId),
    /// Prescribed minimum and maximum, in that order.
    MinMax(VertexId, VertexId),
}

impl Marks {
    pub fn variant(self) -> MarkVariant {
        match self {
            Marks::TwoExtreme(..) => MarkVariant::TwoExtreme,
            Marks::MinMarked(_) => MarkVariant::MinMarked,
            Marks::OneExtreme(_) => MarkVariant::OneExtreme,
            Marks::MinMax(..) => MarkVariant::MinMax,
        }
    }

    /// Marked vertex ids, in stored order.
    pub fn vertices(self) -> Vec<VertexId> {
        match self {
            Marks::TwoExtreme(a, b) | Marks::MinMax(a, b) => vec![a, b],
            Marks::MinMarked(a) | Marks::OneExtreme(a) => vec![a],
        }
    }
}

/// A sorted r-set of vertices together with its marks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedEdge {
    verts: Vec<VertexId>,
    marks: Marks,
}

impl MarkedEdge {
    /// Builds an edge, sorting the vertex set. Marks must be members; paired
    /// marks must be distinct. The two-extreme boundary pair is normalized to
    /// ascending order.
    pub fn new(mut verts: Vec<VertexId>, marks: Marks) -> Result<MarkedEdge> {
        verts.sort_unstable();
        if let Some(w) = verts.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex(w[0]));
        }
        let marks = match marks {
            Marks::TwoExtreme(a, b) if a == b => return Err(Error::DuplicateBoundary),
            Marks::MinMax(a, b) if a == b => return Err(Error::DuplicateBoundary),
            Marks::TwoExtreme(a, b) => Marks::TwoExtreme(a.min(b), a.max(b)),
            m => m,
        };
        for m in marks.vertices() {
            if verts.binary_search(&m).is_err() {
                return Err(Error::MarkNotInEdge(m));
            }
        }
        Ok(MarkedEdge { verts, marks })
    }

    pub fn verts(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn marks(&self) -> Marks {
        self.marks
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    /// True when every vertex of the edge is ranked by the order.
    pub fn within(&self, order: &LinearOrder) -> bool {
        self.verts.iter().all(|&v| order.rank(v).is_some())
    }

    /// Agreement of one fully-ranked edge with an order.
    fn agrees(&self, order: &LinearOrder) -> bool {
        let mut min_v = self.verts[0];
        let mut max_v = self.verts[0];
        let mut min_r = order.rank(min_v).unwrap();
        let mut max_r = min_r;
        for &v in &self.verts[1..] {
            let r = order.rank(v).unwrap();
            if r < min_r {
                min_r = r;
                min_v = v;
            }
            if r > max_r {
                max_r = r;
                max_v = v;
            }
        }
        match self.marks {
            Marks::TwoExtreme(a, b) => (min_v == a && max_v == b) || (min_v == b && max_v == a),
            Marks::MinMarked(a) => min_v == a,
            Marks::OneExtreme(a) => min_v == a || max_v == a,
            Marks::MinMax(a, b) => min_v == a && max_v == b,
        }
    }
}

/// A marked r-uniform hypergraph on vertex set `{1..=n}`.
///
/// Edges are stored sorted and in lexicographic order of their vertex sets,
/// with no repeats; `is_clique` records whether every r-subset is present.
/// All types are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedHypergraph {
    n: u32,
    r: u32,
    variant: MarkVariant,
    edges: Vec<MarkedEdge>,
    is_clique: bool,
}

impl MarkedHypergraph {
    /// Validates and canonicalizes a hypergraph: `r >= 3`, edges of size `r`
    /// over `1..=n`, marks of the stated variant, no repeated vertex sets.
    pub fn new(
        n: u32,
        r: u32,
        variant: MarkVariant,
        mut edges: Vec<MarkedEdge>,
    ) -> Result<MarkedHypergraph> {
        if r < 3 {
            return Err(Error::BadArity(r));
        }
        for e in &edges {
            if e.verts.len() != r as usize {
                return Err(Error::EdgeWrongSize {
                    expected: r,
                    got: e.verts.len(),
                });
            }
            for &v in &e.verts {
                if v < 1 || v > n {
                    return Err(Error::VertexOutOfRange { id: v, n });
                }
            }
            if e.marks.variant() != variant {
                return Err(Error::WrongVariant {
                    expected: variant,
                    got: e.marks.variant(),
                });
            }
        }
        edges.sort_by(|a, b| a.verts.cmp(&b.verts));
        if edges.windows(2).any(|w| w[0].verts == w[1].verts) {
            return Err(Error::DuplicateEdge);
        }
        let is_clique = n >= r && edges.len() as u128 == binomial(n as u64, r as u64);
        Ok(MarkedHypergraph {
            n,
            r,
            variant,
            edges,
            is_clique,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn variant(&self) -> MarkVariant {
        self.variant
    }

    pub fn edges(&self) -> &[MarkedEdge] {
        &self.edges
    }

    pub fn is_clique(&self) -> bool {
        self.is_clique
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.n
    }

    pub fn vertex_vec(&self) -> Vec<VertexId> {
        (1..=self.n).collect()
    }

    /// Index of the edge with this exact vertex set, if present. Edges are in
    /// lexicographic order, so this is a binary search.
    pub fn edge_index(&self, verts: &[VertexId]) -> Option<usize> {
        self.edges
            .binary_search_by(|e| e.verts.as_slice().cmp(verts))
            .ok()
    }

    /// Subhypergraph induced by `subset`, relabeled onto `1..=k` in ascending
    /// id order. Returns the new hypergraph and the new-to-old id map
    /// (`map[new - 1] = old`).
    pub fn restrict(&self, subset: &[VertexId]) -> (MarkedHypergraph, Vec<VertexId>) {
        let mut keep: Vec<VertexId> = subset.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_id = vec![0u32; self.n as usize + 1];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v as usize] = i as u32 + 1;
        }
        let relabel = |v: VertexId| new_id[v as usize];
        let mut edges = Vec::new();
        for e in &self.edges {
            if !e.verts.iter().all(|&v| relabel(v) != 0) {
                continue;
            }
            let verts: Vec<VertexId> = e.verts.iter().map(|&v| relabel(v)).collect();
            let marks = match e.marks {
                Marks::TwoExtreme(a, b) => Marks::TwoExtreme(relabel(a), relabel(b)),
                Marks::MinMarked(a) => Marks::MinMarked(relabel(a)),
                Marks::OneExtreme(a) => Marks::OneExtreme(relabel(a)),
                Marks::MinMax(a, b) => Marks::MinMax(relabel(a), relabel(b)),
            };
            edges.push(MarkedEdge::new(verts, marks).expect("relabeling preserves validity"));
        }
        let sub = MarkedHypergraph::new(keep.len() as u32, self.r, self.variant, edges)
            .expect("restriction preserves validity");
        (sub, keep)
    }
}

/// Builds the complete r-uniform hypergraph on `{1..=n}`, marking each
/// r-subset with the value returned by `marks`. Subsets are visited in
/// lexicographic order.
pub fn build_clique(
    n: u32,
    r: u32,
    variant: MarkVariant,
    mut marks: impl FnMut(&[VertexId]) -> Marks,
) -> Result<MarkedHypergraph> {
    if r < 3 {
        return Err(Error::BadArity(r));
    }
    if n < r {
        return Err(Error::VertexOutOfRange { id: r, n });
    }
    let mut edges = Vec::with_capacity(binomial(n as u64, r as u64) as usize);
    for verts in subsets_lex(n, r) {
        let m = marks(&verts);
        edges.push(MarkedEdge::new(verts, m)?);
    }
    MarkedHypergraph::new(n, r, variant, edges)
}

/// A permutation of a vertex subset with O(1) rank lookup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearOrder {
    seq: Vec<VertexId>,
    rank: Vec<u32>, // rank[v] = position, u32::MAX when absent
}

const ABSENT: u32 = u32::MAX;

impl LinearOrder {
    pub fn new(seq: Vec<VertexId>) -> Result<LinearOrder> {
        let max = seq.iter().copied().max().unwrap_or(0);
        let mut rank = vec![ABSENT; max as usize + 1];
        for (i, &v) in seq.iter().enumerate() {
            if v == 0 || rank[v as usize] != ABSENT {
                return Err(Error::OrderNotOverSubset);
            }
            rank[v as usize] = i as u32;
        }
        Ok(LinearOrder { seq, rank })
    }

    pub fn empty() -> LinearOrder {
        LinearOrder {
            seq: Vec::new(),
            rank: Vec::new(),
        }
    }

    pub fn seq(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Position of `v` in the order, if present.
    pub fn rank(&self, v: VertexId) -> Option<usize> {
        match self.rank.get(v as usize) {
            Some(&r) if r != ABSENT => Some(r as usize),
            _ => None,
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.rank(v).is_some()
    }

    /// The dual order: every relation reversed.
    pub fn dual(&self) -> LinearOrder {
        let mut seq = self.seq.clone();
        seq.reverse();
        LinearOrder::new(seq).expect("reversal preserves validity")
    }

    /// Restriction to the vertices in `keep`, preserving relative order.
    pub fn restrict(&self, keep: &[VertexId]) -> LinearOrder {
        let keep: std::collections::HashSet<VertexId> = keep.iter().copied().collect();
        let seq = self
            .seq
            .iter()
            .copied()
            .filter(|v| keep.contains(v))
            .collect();
        LinearOrder::new(seq).expect("restriction preserves validity")
    }
}

impl fmt::Display for LinearOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.seq.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Outcome of [`check_order`]: whether the order agrees, and if not the
/// lexicographically first violated edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreeVerdict {
    pub agrees: bool,
    pub witness: Option<MarkedEdge>,
}

/// Checks a linear order over a subset `U` of the vertex set against every
/// edge contained in `U`; edges not contained in `U` are ignored. The witness,
/// when present, is the first violated edge in edge-list order.
pub fn check_order(h: &MarkedHypergraph, order: &LinearOrder) -> Result<AgreeVerdict> {
    for &v in order.seq() {
        if v < 1 || v > h.n() {
            return Err(Error::OrderNotOverSubset);
        }
    }
    for e in h.edges() {
        if e.within(order) && !e.agrees(order) {
            return Ok(AgreeVerdict {
                agrees: false,
                witness: Some(e.clone()),
            });
        }
    }
    Ok(AgreeVerdict {
        agrees: true,
        witness: None,
    })
}
