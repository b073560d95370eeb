use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{Coloring, ConstructError};
use crate::complex::{analyze, boundary_complex, gluing_sign, orientability, BoundaryComplex, Complex, Slot};
use crate::volume::Volume;

/// Largest explicit cover built by default.
pub const DEFAULT_MAX_CELLS: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMode {
    /// Build every cell.
    Explicit,
    /// Keep only the base and the colouring; neighbours are computed on demand.
    Implicit,
    /// Explicit when within the cell budget, implicit otherwise.
    Auto,
}

/// Local conditions that make the colour cover a closed manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverCertificate {
    pub coloring_proper: bool,
    pub base_is_manifold_with_corners: bool,
    /// At every boundary face of depth `m`, the boundary strata through it
    /// lie in `m` distinct merged facets of distinct colours.
    pub corners_see_distinct_colors: bool,
}

impl CoverCertificate {
    pub fn passes(&self) -> bool {
        self.coloring_proper && self.base_is_manifold_with_corners && self.corners_see_distinct_colors
    }
}

/// The cover of a manifold with corners defined by a boundary colouring with
/// `k` colours: `2^k` sheets indexed by `v`, where a boundary facet of colour
/// `c` in sheet `v` is glued by the identity to its copy in sheet `v ^ 2^c`.
/// Cell `(v, c)` has index `v * |base| + c`.
#[derive(Debug, Clone)]
pub struct CoverHandle {
    base: Complex,
    coloring: Coloring,
    certificate: CoverCertificate,
    explicit: Option<Complex>,
}

impl CoverHandle {
    pub fn base(&self) -> &Complex {
        &self.base
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn k(&self) -> u32 {
        self.coloring.k
    }

    pub fn sheets(&self) -> u64 {
        1u64 << self.coloring.k
    }

    pub fn cell_count(&self) -> u128 {
        u128::from(self.sheets()) * self.base.cell_count() as u128
    }

    /// `2^k` times the base volume, if it fits.
    pub fn volume(&self) -> Option<Volume> {
        self.base.volume().scaled(self.sheets())
    }

    pub fn certificate(&self) -> CoverCertificate {
        self.certificate
    }

    pub fn is_explicit(&self) -> bool {
        self.explicit.is_some()
    }

    pub fn explicit(&self) -> Option<&Complex> {
        self.explicit.as_ref()
    }

    pub fn into_explicit(self) -> Option<Complex> {
        self.explicit
    }

    /// Signs for the explicit cover: the base orientation on sheet `v`,
    /// flipped when `v` has odd bit weight. `None` for implicit covers and
    /// non-orientable bases.
    pub fn bit_weight_orientation(&self) -> Option<Vec<i8>> {
        let cover = self.explicit.as_ref()?;
        let base = orientability(&self.base)?;
        let size = self.base.cell_count();
        Some(
            (0..cover.cell_count())
                .map(|i| {
                    let v = (i / size) as u64;
                    let flip = if v.count_ones().is_multiple_of(2) { 1 } else { -1 };
                    flip * base[i % size]
                })
                .collect(),
        )
    }

    /// Index of cell `cell` of sheet `v`.
    pub fn cell_index(&self, v: u64, cell: u32) -> u128 {
        u128::from(v) * self.base.cell_count() as u128 + u128::from(cell)
    }
}

/// The sheet and slot across facet `facet` of cell `cell` in sheet `v`.
pub fn cover_neighbor(handle: &CoverHandle, v: u64, cell: u32, facet: u32) -> (u64, Slot) {
    let s = Slot::new(cell, facet);
    match handle.base.partner(s) {
        Some(t) => (v, t),
        None => {
            let c = handle.coloring.color_of(s).expect("boundary slots are coloured");
            (v ^ (1u64 << c), s)
        }
    }
}

fn certify(w: &Complex, bc: &BoundaryComplex, coloring: &Coloring) -> Result<CoverCertificate, ConstructError> {
    let analysis = analyze(w)?;
    let n = w.dim();
    let base_is_manifold_with_corners = analysis.violations.is_empty();
    let mut corners_see_distinct_colors = true;
    for (k, class) in analysis.classes.all().iter().enumerate() {
        let Some(shape) = analysis.link(k) else { continue };
        if shape.depth == 0 || class.dim + 1 >= n {
            continue;
        }
        let mut merged = BTreeSet::new();
        for &(c, f) in &class.members {
            let lat = w.lattice(c);
            for wall in lat.faces_containing(class.dim, f, n - 1) {
                if let Some(&i) = bc.class_of.get(&Slot::new(c, wall)) {
                    merged.insert(i);
                }
            }
        }
        let colors: BTreeSet<u32> = merged.iter().map(|&i| coloring.colors[i]).collect();
        if merged.len() != shape.depth || colors.len() != shape.depth {
            corners_see_distinct_colors = false;
            break;
        }
    }
    Ok(CoverCertificate {
        coloring_proper: coloring.is_proper(bc),
        base_is_manifold_with_corners,
        corners_see_distinct_colors,
    })
}

/// Builds the colour cover of `w`. Explicit covers above `max_cells` cells
/// are refused; `Auto` falls back to an implicit handle instead.
pub fn cover(w: &Complex, coloring: &Coloring, mode: CoverMode, max_cells: u64) -> Result<CoverHandle, ConstructError> {
    let bc = boundary_complex(w)?;
    if bc.facets.is_empty() {
        return Err(ConstructError::NoBoundary);
    }
    if !coloring.is_proper(&bc) {
        return Err(ConstructError::ImproperColoring("colouring does not match the merged boundary"));
    }
    if coloring.k > 63 {
        return Err(ConstructError::TooManyColors(coloring.k));
    }
    let certificate = certify(w, &bc, coloring)?;
    let cells = (1u128 << coloring.k) * w.cell_count() as u128;
    let build = match mode {
        CoverMode::Explicit if cells > u128::from(max_cells) => {
            return Err(ConstructError::BudgetExceeded { cells, budget: max_cells })
        }
        CoverMode::Explicit => true,
        CoverMode::Implicit => false,
        CoverMode::Auto => cells <= u128::from(max_cells),
    };
    let explicit = build.then(|| build_explicit(w, coloring));
    Ok(CoverHandle { base: w.clone(), coloring: coloring.clone(), certificate, explicit })
}

fn build_explicit(w: &Complex, coloring: &Coloring) -> Complex {
    let sheets = 1u32 << coloring.k;
    let size = w.cell_count() as u32;
    let mut out = Complex::new(w.dim());
    for _ in 0..sheets {
        for c in w.cells() {
            let i = out.add_cell(c.shape.clone()).expect("cells share the base dimension");
            out.set_north_pole(i, c.north_pole).expect("pole facet exists");
        }
    }
    let gluings = w.gluings();
    for v in 0..sheets {
        let shift = v * size;
        for g in &gluings {
            out.glue_unchecked(
                Slot::new(g.from.cell + shift, g.from.facet),
                Slot::new(g.to.cell + shift, g.to.facet),
                g.images.clone(),
            );
        }
        for (&s, &c) in &coloring.slot_colors {
            let u = v ^ (1 << c);
            if v < u {
                let verts = w.facet_vertices(s).to_vec();
                out.glue_unchecked(Slot::new(s.cell + shift, s.facet), Slot::new(s.cell + u * size, s.facet), verts);
            }
        }
    }
    out
}

/// The orientation double cover: cell `(A, s)` with `s = +1, -1` has index
/// `2A` or `2A + 1`, and a gluing of sign `e` joins `(A, s)` to `(B, s e)`.
/// Returned with the deck transformation on cells.
pub fn orientation_double_cover(m: &Complex) -> (Complex, Vec<u32>) {
    let mut out = Complex::new(m.dim());
    for c in m.cells() {
        for _ in 0..2 {
            let i = out.add_cell(c.shape.clone()).expect("cells share the base dimension");
            out.set_north_pole(i, c.north_pole).expect("pole facet exists");
        }
    }
    for g in m.gluings() {
        let e = gluing_sign(m, g.from, g.to, &g.images);
        for s in [0u32, 1] {
            let t = if e > 0 { s } else { 1 - s };
            out.glue_unchecked(
                Slot::new(2 * g.from.cell + s, g.from.facet),
                Slot::new(2 * g.to.cell + t, g.to.facet),
                g.images.clone(),
            );
        }
    }
    let deck = (0..out.cell_count() as u32).map(|i| i ^ 1).collect();
    (out, deck)
}
