//! Complexes of right-angled regular polytopes and the constructions that
//! embed dodecahedral and octahedral hyperbolic 3-manifolds geodesically in
//! hyperbolic 4-manifolds.
//!
//! The crate is purely combinatorial. Cells are copies of four templates
//! (the right-angled dodecahedron, the ideal octahedron, the right-angled
//! 120-cell and the ideal 24-cell), complexes are cells plus facet pairings,
//! and every geometric claim is checked through face lattices, links of
//! faces and exact volume bookkeeping.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bundled;
pub mod catalog;
pub mod complex;
pub mod construct;
pub mod field;
pub mod lattice;
pub mod union_find;
pub mod volume;

pub use catalog::{template, LatticeMap, PolytopeTemplate, TemplateKind};
pub use complex::{Complex, Gluing, Shape, Slot};
pub use lattice::FaceLattice;
pub use volume::Volume;
