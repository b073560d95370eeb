use alloc::collections::BTreeSet;

use super::ConstructError;
use crate::complex::{merged_classes, Complex, ComplexError, Slot};

/// Two copies of `complex` (copy 1 shifted by the cell count) glued by the
/// identity along the given boundary slots. The selection must be a union
/// of merged boundary facets.
pub fn double(complex: &Complex, facets: &[Slot]) -> Result<Complex, ConstructError> {
    let selected: BTreeSet<Slot> = facets.iter().copied().collect();
    for &s in &selected {
        if s.cell as usize >= complex.cell_count() {
            return Err(ComplexError::UnknownCell(s.cell).into());
        }
        if s.facet as usize >= complex.lattice(s.cell).facet_count() {
            return Err(ComplexError::UnknownFacet(s).into());
        }
        if complex.is_glued(s) {
            return Err(ConstructError::NotBoundary(s));
        }
    }
    if !selected.is_empty() {
        let classes = merged_classes(complex)?;
        let touched: BTreeSet<usize> = selected.iter().map(|s| classes[s]).collect();
        if let Some((&s, _)) = classes.iter().find(|(s, k)| touched.contains(k) && !selected.contains(s)) {
            return Err(ConstructError::NotMergeClosed(s));
        }
    }
    let shift = complex.cell_count() as u32;
    let mut out = complex.disjoint_union(complex);
    for &s in &selected {
        let verts = complex.facet_vertices(s).to_vec();
        out.glue_unchecked(s, Slot::new(s.cell + shift, s.facet), verts);
    }
    Ok(out)
}
