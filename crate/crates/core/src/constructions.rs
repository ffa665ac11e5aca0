//! Deterministic generators for the instance families used as fixtures by
//! the tests and exposed through the CLI. Identical parameters always yield
//! bit-identical instances.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::model::{build_clique, MarkVariant, MarkedEdge, MarkedHypergraph, Marks, VertexId};

/// The named instance families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    TwoExtremeTight,
    MinMaxTight,
    OneExtremeCycle,
    SparseMinMarkedCycle,
    NaturalMarking,
}

impl Family {
    pub fn token(self) -> &'static str {
        match self {
            Family::TwoExtremeTight => "two-extreme-tight",
            Family::MinMaxTight => "min-max-tight",
            Family::OneExtremeCycle => "one-extreme-cycle",
            Family::SparseMinMarkedCycle => "sparse-cycle",
            Family::NaturalMarking => "natural",
        }
    }

    pub fn from_token(s: &str) -> Option<Family> {
        [
            Family::TwoExtremeTight,
            Family::MinMaxTight,
            Family::OneExtremeCycle,
            Family::SparseMinMarkedCycle,
            Family::NaturalMarking,
        ]
        .into_iter()
        .find(|f| f.token() == s)
    }
}

/// Parameters for [`generate`]. `n` is required by the cycle and natural
/// families, `m` by the sparse cycle, `variant` by the natural family.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub family: Family,
    pub r: u32,
    pub n: Option<u32>,
    pub m: Option<u32>,
    pub variant: Option<MarkVariant>,
}

pub fn generate(spec: &FamilySpec) -> Result<MarkedHypergraph> {
    let need = |p: Option<u32>, name| p.ok_or(Error::MissingParam(name));
    match spec.family {
        Family::TwoExtremeTight => gen_two_extreme_tight(spec.r),
        Family::MinMaxTight => gen_min_max_tight(spec.r),
        Family::OneExtremeCycle => gen_one_extreme_cycle(spec.r, need(spec.n, "n")?),
        Family::SparseMinMarkedCycle => gen_sparse_min_marked_cycle(spec.r, need(spec.m, "m")?),
        Family::NaturalMarking => {
            let variant = spec.variant.ok_or(Error::MissingParam("variant"))?;
            gen_natural(spec.r, need(spec.n, "n")?, variant)
        }
    }
}

/// Two-extreme clique on `2r - 2` vertices with no agreeing order whose
/// every `(2r - 3)`-subset has one: the edge `{1..r}` is marked `{1, r-1}`
/// and every other edge carries its own min and max.
pub fn gen_two_extreme_tight(r: u32) -> Result<MarkedHypergraph> {
    if r < 3 {
        return Err(Error::BadArity(r));
    }
    let n = 2 * r - 2;
    build_clique(n, r, MarkVariant::TwoExtreme, |verts| {
        if verts == (1..=r).collect::<Vec<_>>() {
            Marks::TwoExtreme(1, r - 1)
        } else {
            Marks::TwoExtreme(verts[0], verts[r as usize - 1])
        }
    })
}

/// Min&max analogue of the tight two-extreme clique: `{1..r}` is marked
/// `(1, r-1)` and every other edge `(min, max)`.
pub fn gen_min_max_tight(r: u32) -> Result<MarkedHypergraph> {
    if r < 3 {
        return Err(Error::BadArity(r));
    }
    let n = 2 * r - 2;
    build_clique(n, r, MarkVariant::MinMax, |verts| {
        if verts == (1..=r).collect::<Vec<_>>() {
            Marks::MinMax(1, r - 1)
        } else {
            Marks::MinMax(verts[0], verts[r as usize - 1])
        }
    })
}

/// One-extreme clique on `n` vertices (`n - r` even) with no agreeing order
/// whose every `(n - 1)`-subset has one.
///
/// The core is an odd cycle of triples on `n0 = n - r + 3` vertices, each
/// marked at its middle element; for `r > 3` every core triple is padded
/// with the fixed tail `W = {n0+1 .. n}` and keeps its mark, and every other
/// edge is marked at its least core vertex. The tail takes the largest ids
/// so generated instances are stable.
pub fn gen_one_extreme_cycle(r: u32, n: u32) -> Result<MarkedHypergraph> {
    if r < 3 {
        return Err(Error::BadArity(r));
    }
    if n < r + 1 {
        return Err(Error::VertexOutOfRange { id: r + 1, n });
    }
    if (n - r) % 2 != 0 {
        return Err(Error::BadParity { r, n });
    }
    let n0 = n - r + 3; // odd and >= 5, so the core cycle is a genuine odd cycle
    let cyc = |k: u32| (k - 1) % n0 + 1;
    let mut middle: HashMap<Vec<VertexId>, VertexId> = HashMap::new();
    for i in 1..=n0 {
        let mut triple = vec![cyc(i), cyc(i + 1), cyc(i + 2)];
        triple.sort_unstable();
        middle.insert(triple, cyc(i + 1));
    }
    build_clique(n, r, MarkVariant::OneExtreme, |verts| {
        let core: Vec<VertexId> = verts.iter().copied().filter(|&v| v <= n0).collect();
        let tail_full = verts.iter().filter(|&&v| v > n0).count() as u32 == r - 3;
        if tail_full && core.len() == 3 {
            if let Some(&mark) = middle.get(&core) {
                return Marks::OneExtreme(mark);
            }
        }
        Marks::OneExtreme(core[0])
    })
}

/// Sparse min-marked hypergraph with `m` edges arranged in a cycle: edge
/// `e_i` joins hub vertices `u_i, u_{i+1}` with `r - 2` private vertices and
/// is marked at `u_i`. Its D-graph is a directed m-cycle, so no agreeing
/// order exists, while deleting any vertex deletes an edge and leaves one.
pub fn gen_sparse_min_marked_cycle(r: u32, m: u32) -> Result<MarkedHypergraph> {
    if r < 3 {
        return Err(Error::BadArity(r));
    }
    if m < 3 {
        return Err(Error::BadArity(m));
    }
    let n = m + m * (r - 2);
    let mut edges = Vec::with_capacity(m as usize);
    for i in 1..=m {
        let mut verts = vec![i, i % m + 1];
        // private vertices of edge i occupy one contiguous block after the hubs
        let base = m + (i - 1) * (r - 2);
        verts.extend(base + 1..=base + (r - 2));
        edges.push(MarkedEdge::new(verts, Marks::MinMarked(i))?);
    }
    MarkedHypergraph::new(n, r, MarkVariant::MinMarked, edges)
}

/// Positive-control clique: marks induced by the identity order, so
/// `(1, 2, ..., n)` agrees by construction.
pub fn gen_natural(r: u32, n: u32, variant: MarkVariant) -> Result<MarkedHypergraph> {
    build_clique(n, r, variant, |verts| {
        let (lo, hi) = (verts[0], verts[r as usize - 1]);
        match variant {
            MarkVariant::TwoExtreme => Marks::TwoExtreme(lo, hi),
            MarkVariant::MinMarked => Marks::MinMarked(lo),
            MarkVariant::OneExtreme => Marks::OneExtreme(lo),
            MarkVariant::MinMax => Marks::MinMax(lo, hi),
        }
    })
}
