//! Agreeing linear orders of marked uniform hypergraphs.
//!
//! An r-uniform hypergraph whose edges carry one or two *marked* vertices
//! constrains the linear orders of its vertex set: in an *agreeing* order
//! every edge must place its marks at prescribed extreme positions. Four
//! marking variants are supported:
//!
//! * **two-extreme** — each edge has an unordered boundary pair that must be
//!   exactly the edge's minimum and maximum;
//! * **min-marked** — each edge has a vertex that must be the edge's minimum;
//! * **one-extreme** — each edge has a vertex that must be the edge's minimum
//!   or maximum (the side may differ between edges);
//! * **min&max** — each edge has an ordered pair prescribing both the minimum
//!   and the maximum.
//!
//! The crate provides the domain model ([`model`]), an exhaustive backtracking
//! decision procedure ([`oracle`]), incidence-matrix pattern scans
//! ([`incidence`]), structured per-variant solvers ([`solvers`]), the instance
//! families used as fixtures ([`constructions`]) and subset-sweep / census
//! machinery that measures Helly numbers empirically ([`helly`]).

pub mod comb;
pub mod constructions;
mod error;
pub mod helly;
pub mod incidence;
pub mod model;
pub mod oracle;
pub mod rng;
pub mod solvers;
#[cfg(test)]
pub(crate) mod testfix;

pub use error::{Error, Result};
pub use model::{
    build_clique, check_order, AgreeVerdict, LinearOrder, MarkVariant, MarkedEdge,
    MarkedHypergraph, Marks, VertexId,
};
pub use oracle::OracleResult;
