//! The {-1, 0, 1} edge-by-vertex incidence matrix of min-marked and
//! one-extreme hypergraphs, and the 2x2 pattern scans over it.
//!
//! Row e has -1 at the marked vertex, +1 at the other members and 0
//! elsewhere. Rows are stored sparsely (vertex list plus mark), since a
//! clique has C(n, r) rows.

use crate::error::{Error, Result};
use crate::model::{MarkVariant, MarkedHypergraph, Marks, VertexId};

/// Sparse incidence matrix; rows follow edge-list order, columns are `1..=n`.
#[derive(Debug, Clone)]
pub struct IncidenceMatrix {
    variant: MarkVariant,
    n: u32,
    r: u32,
    rows: Vec<Row>,
}

#[derive(Debug, Clone)]
struct Row {
    verts: Vec<VertexId>, // sorted support
    marked: VertexId,
}

/// Which 2x2 pattern a hit matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PatternKind {
    /// `[-1 1; 1 -1]` with both marks inside both edges: no agreeing order
    /// can satisfy the two rows.
    Forbidden,
    /// `[-1 1; 0 -1]`: forces the first column's vertex before the second's.
    Precedence,
    /// `[1 -1; 1 -1]`: the shared mark is an extreme of the same type in both
    /// edges.
    S,
    /// `[-1 1; 1 -1]` in the one-extreme matrix: the two marks are extremes
    /// of different types.
    F,
}

/// A matched 2x2 submatrix, up to the permutations the patterns allow.
/// `rows` is an edge-index pair with the lower index first; `cols` keeps the
/// pattern's own column roles (see the scan functions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternHit {
    pub kind: PatternKind,
    pub rows: (usize, usize),
    pub cols: (VertexId, VertexId),
}

/// Builds the incidence matrix of a min-marked or one-extreme hypergraph.
pub fn build_matrix(h: &MarkedHypergraph) -> Result<IncidenceMatrix> {
    if !matches!(
        h.variant(),
        MarkVariant::MinMarked | MarkVariant::OneExtreme
    ) {
        return Err(Error::WrongVariant {
            expected: MarkVariant::MinMarked,
            got: h.variant(),
        });
    }
    let rows = h
        .edges()
        .iter()
        .map(|e| {
            let marked = match e.marks() {
                Marks::MinMarked(a) | Marks::OneExtreme(a) => a,
                _ => unreachable!("variant checked above"),
            };
            Row {
                verts: e.verts().to_vec(),
                marked,
            }
        })
        .collect();
    Ok(IncidenceMatrix {
        variant: h.variant(),
        n: h.n(),
        r: h.r(),
        rows,
    })
}

impl IncidenceMatrix {
    pub fn variant(&self) -> MarkVariant {
        self.variant
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    /// Dense entry lookup: 0 outside the edge, -1 at the mark, +1 otherwise.
    pub fn entry(&self, row: usize, col: VertexId) -> i8 {
        let r = &self.rows[row];
        if r.marked == col {
            -1
        } else if r.verts.binary_search(&col).is_ok() {
            1
        } else {
            0
        }
    }

    /// One dense row, for display and tests.
    pub fn dense_row(&self, row: usize) -> Vec<i8> {
        (1..=self.n).map(|v| self.entry(row, v)).collect()
    }

    fn marked(&self, row: usize) -> VertexId {
        self.rows[row].marked
    }

    fn supports(&self, row: usize, v: VertexId) -> bool {
        self.rows[row].verts.binary_search(&v).is_ok()
    }

    /// Forbidden test for an edge pair: each row's mark lies in the other
    /// edge and the marks differ.
    fn forbidden_pair(&self, i: usize, j: usize) -> Option<PatternHit> {
        let (a, b) = (self.marked(i), self.marked(j));
        (a != b && self.supports(j, a) && self.supports(i, b)).then_some(PatternHit {
            kind: PatternKind::Forbidden,
            rows: (i, j),
            cols: (a, b),
        })
    }
}

/// Scans a min-marked matrix for forbidden 2x2 submatrices.
///
/// With `localized` set, only edge pairs with `|e ∪ f| = r + 1` are scanned;
/// on cliques with at least `r + 1` vertices the emptiness of this restricted
/// scan equals the emptiness of the full scan. Hits are reported once per
/// pair, lower row index first, in (row-pair, col-pair) lexicographic order;
/// `cols` is `(mark of first row, mark of second row)`. With `early_exit`
/// the scan stops at the first hit.
pub fn find_forbidden(
    m: &IncidenceMatrix,
    localized: bool,
    early_exit: bool,
) -> Result<Vec<PatternHit>> {
    require_variant(m, MarkVariant::MinMarked)?;
    if localized {
        scan_localized(m, early_exit)
    } else {
        let mut hits = Vec::new();
        'rows: for i in 0..m.rows.len() {
            for j in i + 1..m.rows.len() {
                if let Some(hit) = m.forbidden_pair(i, j) {
                    hits.push(hit);
                    if early_exit {
                        break 'rows;
                    }
                }
            }
        }
        Ok(hits)
    }
}

/// Localized scan: neighbors of each edge that replace one vertex, i.e. all
/// pairs sharing r - 1 vertices.
fn scan_localized(m: &IncidenceMatrix, early_exit: bool) -> Result<Vec<PatternHit>> {
    // Row lookup by vertex set; rows are in lexicographic edge order.
    let row_index = |verts: &[VertexId]| -> Option<usize> {
        m.rows
            .binary_search_by(|r| r.verts.as_slice().cmp(verts))
            .ok()
    };
    let mut hits = Vec::new();
    let mut scratch = Vec::with_capacity(m.r as usize);
    'rows: for i in 0..m.rows.len() {
        for drop_pos in 0..m.rows[i].verts.len() {
            for w in 1..=m.n {
                if m.supports(i, w) {
                    continue;
                }
                scratch.clear();
                scratch.extend_from_slice(&m.rows[i].verts);
                scratch.remove(drop_pos);
                let ins = scratch.partition_point(|&x| x < w);
                scratch.insert(ins, w);
                let Some(j) = row_index(&scratch) else {
                    continue;
                };
                if j <= i {
                    continue; // each pair once, lower row first
                }
                if let Some(hit) = m.forbidden_pair(i, j) {
                    hits.push(hit);
                    if early_exit {
                        break 'rows;
                    }
                }
            }
        }
    }
    hits.sort_by_key(|h| (h.rows, h.cols));
    hits.dedup();
    Ok(hits)
}

/// Scans a min-marked matrix for precedence 2x2 submatrices: one row holding
/// `-1` at α and `+1` at β, the other `0` at α and `-1` at β, which forces
/// α before β in every agreeing order. `cols` is `(α, β)` in that forced
/// order; `rows` keeps the lower edge index first.
pub fn find_precedence(m: &IncidenceMatrix, early_exit: bool) -> Result<Vec<PatternHit>> {
    require_variant(m, MarkVariant::MinMarked)?;
    let mut hits = Vec::new();
    'rows: for i in 0..m.rows.len() {
        for j in i + 1..m.rows.len() {
            let (a, b) = (m.marked(i), m.marked(j));
            if a == b {
                continue;
            }
            let cols = if m.supports(i, b) && !m.supports(j, a) {
                (a, b) // row i plays the (-1, 1) role
            } else if m.supports(j, a) && !m.supports(i, b) {
                (b, a)
            } else {
                continue;
            };
            hits.push(PatternHit {
                kind: PatternKind::Precedence,
                rows: (i, j),
                cols,
            });
            if early_exit {
                break 'rows;
            }
        }
    }
    Ok(hits)
}

/// Scans a one-extreme matrix for S- and F-matrices over all edge pairs and
/// column pairs.
///
/// An F hit has `cols = (mark of first row, mark of second row)`; an S hit is
/// reported once per shared `+1` column, with `cols = (shared mark, +1
/// column)`. Hits come out in (row-pair, col-pair) lexicographic order.
pub fn find_sf(m: &IncidenceMatrix, early_exit: bool) -> Result<Vec<PatternHit>> {
    require_variant(m, MarkVariant::OneExtreme)?;
    let mut hits = Vec::new();
    'rows: for i in 0..m.rows.len() {
        for j in i + 1..m.rows.len() {
            let (a, b) = (m.marked(i), m.marked(j));
            if a == b {
                // shared mark: an S-matrix per further shared column
                for &v in &m.rows[i].verts {
                    if v != a && m.supports(j, v) {
                        hits.push(PatternHit {
                            kind: PatternKind::S,
                            rows: (i, j),
                            cols: (a, v),
                        });
                        if early_exit {
                            break 'rows;
                        }
                    }
                }
            } else if let Some(mut hit) = m.forbidden_pair(i, j) {
                hit.kind = PatternKind::F;
                hits.push(hit);
                if early_exit {
                    break 'rows;
                }
            }
        }
    }
    Ok(hits)
}

fn require_variant(m: &IncidenceMatrix, expected: MarkVariant) -> Result<()> {
    if m.variant != expected {
        return Err(Error::WrongVariant {
            expected,
            got: m.variant,
        });
    }
    Ok(())
}
