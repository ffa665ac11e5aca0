//! Shared fixtures for unit tests.

use crate::model::{MarkVariant, MarkedEdge, MarkedHypergraph, Marks, VertexId};

/// The five-edge one-extreme instance whose contracted S/F graph is a
/// triangle on the compound classes {e}, {f,g}, {h,j}; vertices are 1..=5.
pub(crate) fn triangle_instance() -> MarkedHypergraph {
    let table: &[(&[VertexId], VertexId)] = &[
        (&[1, 2, 3], 1), // e
        (&[1, 2, 5], 2), // f
        (&[2, 3, 5], 2), // g
        (&[2, 3, 4], 3), // h
        (&[1, 3, 4], 3), // j
    ];
    let edges = table
        .iter()
        .map(|&(v, a)| MarkedEdge::new(v.to_vec(), Marks::OneExtreme(a)).unwrap())
        .collect();
    MarkedHypergraph::new(5, 3, MarkVariant::OneExtreme, edges).unwrap()
}

/// The clique completion of [`triangle_instance`]: the five listed edges keep
/// their marks and every other triple is marked at its least vertex.
pub(crate) fn triangle_clique() -> MarkedHypergraph {
    let base = triangle_instance();
    crate::model::build_clique(5, 3, MarkVariant::OneExtreme, |verts| {
        match base.edge_index(verts) {
            Some(i) => base.edges()[i].marks(),
            None => Marks::OneExtreme(verts[0]),
        }
    })
    .unwrap()
}
