//! Distance-based topological indices of connected graphs, and closed-form
//! decompositions of those indices over splice constructions.
//!
//! The crate computes five indices of a simple connected undirected graph —
//! Szeged, edge-Szeged, edge-PI, vertex-PI, and eccentric connectivity —
//! directly from their definitions, and evaluates the same indices for a
//! splice of two graphs (the composite obtained by identifying one chosen
//! vertex of each) from per-component parameters alone, without building
//! the composite. The closed forms come in two variants: the coefficients
//! as printed in the literature, which double-count the identified vertex
//! on the vertex-based indices, and the corrected coefficients validated
//! against a brute-force oracle. The [`verify`] module carries that oracle:
//! exhaustive small-graph enumeration, seeded random instances, and a
//! campaign runner comparing formula values against direct computation.
//!
//! The crate is `no_std` (with `alloc`) and dependency-free; all I/O, file
//! formats, and the command-line interface live in the companion CLI crate.
//!
//! ```
//! use splice_indices::{formulas, indices, Graph, Method, SpliceSpec};
//!
//! # fn main() -> splice_indices::Result<()> {
//! let triangle = Graph::new(3, &[(0, 1), (0, 2), (1, 2)])?;
//! let edge = Graph::new(2, &[(0, 1)])?;
//! assert_eq!(indices::szeged(&triangle)?, 3);
//!
//! // Indices of the paw graph (triangle plus a pendant edge) without
//! // constructing it:
//! let spec = SpliceSpec::new(triangle, edge, 0, 0)?;
//! let report = formulas::splice_index_report(&spec, Method::FormulaCorrected)?;
//! assert_eq!(report.values.szeged, 8);
//! # Ok(())
//! # }
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod formulas;
pub mod graph;
pub mod indices;
pub mod splice;
pub mod verify;

pub use error::{Error, Result};
pub use formulas::FormulaInputs;
pub use graph::{DistanceMatrix, EccentricityProfile, Graph};
pub use indices::{Counters, EdgeCutCounts, IndexKind, IndexReport, IndexValues, Method};
pub use splice::{SpliceHalf, SpliceSpec, Variant, VertexMap};
pub use verify::{CampaignConfig, CampaignReport, SplitMix64};
