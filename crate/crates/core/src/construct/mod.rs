//! Constructions on complexes: doubling, lifting a 3-manifold into the
//! pole facets of 4-cells, geodesic embedding, boundary colouring, colour
//! covers and orientation double covers.

mod color;
mod cover;
mod double;
mod embed;
mod lift;

use thiserror::Error;

use crate::catalog::{CatalogError, TemplateKind};
use crate::complex::{ComplexError, Slot};

pub use color::{color_boundary, color_boundary_of, Coloring, ColoringStrategy};
pub use cover::{
    cover, cover_neighbor, orientation_double_cover, CoverCertificate, CoverHandle, CoverMode, DEFAULT_MAX_CELLS,
};
pub use double::double;
pub use embed::{connector, cut_along, embed, verify_embedding, EmbeddingCheck, EmbeddingRecord};
pub use lift::{lift, Lifting};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("slot {0} is glued, not a boundary facet")]
    NotBoundary(Slot),
    #[error("slot {0} lies in a selected merged boundary facet but was not selected")]
    NotMergeClosed(Slot),
    #[error("all cells must be copies of one three-dimensional template")]
    MixedTemplates,
    #[error("no construction is defined for {0}")]
    UnsupportedKind(TemplateKind),
    #[error("component {0} is not orientable")]
    NonOrientableComponent(usize),
    #[error("input is not a closed manifold")]
    InvalidManifold,
    #[error("complex has no boundary")]
    NoBoundary,
    #[error("colouring is not proper: {0}")]
    ImproperColoring(&'static str),
    #[error("cover would have {cells} cells, budget is {budget}")]
    BudgetExceeded { cells: u128, budget: u64 },
    #[error("{0} colours exceed the supported 63")]
    TooManyColors(u32),
    #[error("slot {0} is not glued in the host, so it is not part of the embedded image")]
    NotEmbedded(Slot),
}
