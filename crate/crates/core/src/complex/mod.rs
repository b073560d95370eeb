//! Complexes of polytope cells glued along facets, and everything that can be
//! verified about them: face classes, links, orientability, Euler
//! characteristic, cusps, volume, the merged boundary and isomorphism.

mod boundary;
mod classes;
mod cusp;
mod iso;
mod orient;
mod validate;

use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::catalog::{template, TemplateKind};
use crate::lattice::FaceLattice;
use crate::volume::Volume;

pub use boundary::{boundary_complex, boundary_subcomplex, merged_classes, BoundaryComplex, MergedFacet};
pub use classes::{face_classes, FaceClass, FaceClasses};
pub use cusp::{cusp_sections, CuspSection};
pub use iso::{isomorphic, ComplexIsomorphism};
pub use orient::{euler_characteristic, gluing_sign, is_orientation, orientability};
pub use validate::{analyze, validate, Analysis, LinkShape, ValidationReport, Violation, ViolationKind};

/// A facet of a cell: `(cell, facet)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub cell: u32,
    pub facet: u32,
}

impl Slot {
    pub const fn new(cell: u32, facet: u32) -> Slot {
        Slot { cell, facet }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.cell, self.facet)
    }
}

/// The combinatorial type of a cell.
#[derive(Debug, Clone)]
pub enum Shape {
    Template(TemplateKind),
    /// Any other polytope lattice, used for boundary pieces and cusp sections.
    Custom(Arc<FaceLattice>),
}

impl Shape {
    pub fn lattice(&self) -> &FaceLattice {
        match self {
            Shape::Template(kind) => template(*kind).lattice(),
            Shape::Custom(lat) => lat,
        }
    }

    pub fn kind(&self) -> Option<TemplateKind> {
        match self {
            Shape::Template(kind) => Some(*kind),
            Shape::Custom(_) => None,
        }
    }

    /// Identity of the underlying lattice, for caches keyed by shape.
    pub(crate) fn key(&self) -> (usize, usize) {
        match self {
            Shape::Template(kind) => (0, *kind as usize),
            Shape::Custom(lat) => (1, Arc::as_ptr(lat) as usize),
        }
    }
}

impl PartialEq for Shape {
    fn eq(&self, other: &Shape) -> bool {
        match (self, other) {
            (Shape::Template(a), Shape::Template(b)) => a == b,
            (Shape::Custom(a), Shape::Custom(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    pub shape: Shape,
    /// Designated north-pole facet, if the cell was produced by a lift.
    pub north_pole: Option<u32>,
}

/// One facet pairing. `images[i]` is the image in `to.cell` of the `i`-th
/// vertex (in increasing label order) of facet `from.facet` of `from.cell`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gluing {
    pub from: Slot,
    pub to: Slot,
    pub images: Vec<u32>,
}

impl Gluing {
    /// The vertex map as `(v, v')` pairs sorted by `v`.
    pub fn vertex_map(&self, complex: &Complex) -> Vec<(u32, u32)> {
        let src = complex.facet_vertices(self.from);
        src.iter().copied().zip(self.images.iter().copied()).collect()
    }
}

/// The far side of a glued facet, seen from one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfGluing {
    pub to: Slot,
    /// Images of the sorted vertices of this side's facet.
    pub images: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("cell {0} does not exist")]
    UnknownCell(u32),
    #[error("slot {0} names a facet the cell does not have")]
    UnknownFacet(Slot),
    #[error("cell shape has dimension {found}, complex has dimension {expected}")]
    ShapeDimension { expected: usize, found: usize },
    #[error("slot {0} is already glued")]
    SlotTaken(Slot),
    #[error("slot {0} cannot be glued to itself")]
    SelfGluing(Slot),
    #[error("vertex map from {from} to {to} is not a facet isomorphism")]
    NotALatticeMap { from: Slot, to: Slot },
    #[error("gluings identify face {face} of dimension {dim} in cell {cell} with itself by a non-trivial map")]
    InconsistentGluing { dim: usize, cell: u32, face: u32 },
    #[error("cusp sections have {} open slots", open.len())]
    IncompleteCusp { open: Vec<(usize, Slot)> },
}

/// Cells plus facet pairings. Every slot is glued at most once.
#[derive(Debug, Clone)]
pub struct Complex {
    dim: usize,
    cells: Vec<Cell>,
    halves: Vec<Vec<Option<HalfGluing>>>,
    glued: usize,
}

impl Complex {
    pub fn new(dim: usize) -> Complex {
        assert!(dim >= 1, "complexes have positive dimension");
        Complex { dim, cells: Vec::new(), halves: Vec::new(), glued: 0 }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, c: u32) -> &Cell {
        &self.cells[c as usize]
    }

    pub fn lattice(&self, c: u32) -> &FaceLattice {
        self.cells[c as usize].shape.lattice()
    }

    pub fn add_cell(&mut self, shape: Shape) -> Result<u32, ComplexError> {
        let found = shape.lattice().dim();
        if found != self.dim {
            return Err(ComplexError::ShapeDimension { expected: self.dim, found });
        }
        let facets = shape.lattice().facet_count();
        self.cells.push(Cell { shape, north_pole: None });
        self.halves.push(vec![None; facets]);
        Ok(self.cells.len() as u32 - 1)
    }

    /// Adds a copy of a template. Panics if the dimension does not match.
    pub fn add_template(&mut self, kind: TemplateKind) -> u32 {
        self.add_cell(Shape::Template(kind)).expect("template dimension matches complex")
    }

    pub fn set_north_pole(&mut self, cell: u32, facet: Option<u32>) -> Result<(), ComplexError> {
        if let Some(f) = facet {
            self.check_slot(Slot::new(cell, f))?;
        } else if cell as usize >= self.cells.len() {
            return Err(ComplexError::UnknownCell(cell));
        }
        self.cells[cell as usize].north_pole = facet;
        Ok(())
    }

    fn check_slot(&self, s: Slot) -> Result<(), ComplexError> {
        let cell = self.cells.get(s.cell as usize).ok_or(ComplexError::UnknownCell(s.cell))?;
        if s.facet as usize >= cell.shape.lattice().facet_count() {
            return Err(ComplexError::UnknownFacet(s));
        }
        Ok(())
    }

    /// Sorted vertex labels of a facet.
    pub fn facet_vertices(&self, s: Slot) -> &[u32] {
        self.lattice(s.cell).vertices_of(self.dim - 1, s.facet)
    }

    /// Glues two facets by a vertex map given as `(v, v')` pairs.
    pub fn glue(&mut self, from: Slot, to: Slot, pairs: &[(u32, u32)]) -> Result<(), ComplexError> {
        self.check_slot(from)?;
        let mut pairs = pairs.to_vec();
        pairs.sort_unstable();
        let src = self.facet_vertices(from);
        if pairs.len() != src.len() || pairs.iter().zip(src).any(|(p, &v)| p.0 != v) {
            return Err(ComplexError::NotALatticeMap { from, to });
        }
        let images: Vec<u32> = pairs.into_iter().map(|p| p.1).collect();
        self.glue_images(from, to, images)
    }

    /// Glues two facets; `images` is aligned with the sorted vertices of `from`.
    pub fn glue_images(&mut self, from: Slot, to: Slot, images: Vec<u32>) -> Result<(), ComplexError> {
        self.check_slot(from)?;
        self.check_slot(to)?;
        if from == to {
            return Err(ComplexError::SelfGluing(from));
        }
        for s in [from, to] {
            if self.is_glued(s) {
                return Err(ComplexError::SlotTaken(s));
            }
        }
        let la = self.lattice(from.cell);
        let lb = self.lattice(to.cell);
        if !la.is_facet_isomorphism(from.facet, lb, to.facet, &images) {
            return Err(ComplexError::NotALatticeMap { from, to });
        }
        self.glue_unchecked(from, to, images);
        Ok(())
    }

    /// Glues without checking the map; for constructions whose maps are
    /// correct by construction (identity maps between copies).
    pub(crate) fn glue_unchecked(&mut self, from: Slot, to: Slot, images: Vec<u32>) {
        let src = self.facet_vertices(from).to_vec();
        let dst = self.facet_vertices(to);
        let mut inverse = vec![0u32; images.len()];
        for (i, &w) in images.iter().enumerate() {
            let j = dst.binary_search(&w).expect("image lies in target facet");
            inverse[j] = src[i];
        }
        self.halves[from.cell as usize][from.facet as usize] = Some(HalfGluing { to, images });
        self.halves[to.cell as usize][to.facet as usize] = Some(HalfGluing { to: from, images: inverse });
        self.glued += 1;
    }

    /// Removes the gluing at `s`, returning it oriented from `s`.
    pub fn unglue(&mut self, s: Slot) -> Option<Gluing> {
        let half = self.halves.get_mut(s.cell as usize)?.get_mut(s.facet as usize)?.take()?;
        self.halves[half.to.cell as usize][half.to.facet as usize] = None;
        self.glued -= 1;
        Some(Gluing { from: s, to: half.to, images: half.images })
    }

    pub fn half(&self, s: Slot) -> Option<&HalfGluing> {
        self.halves[s.cell as usize][s.facet as usize].as_ref()
    }

    pub fn partner(&self, s: Slot) -> Option<Slot> {
        self.half(s).map(|h| h.to)
    }

    pub fn is_glued(&self, s: Slot) -> bool {
        self.halves[s.cell as usize][s.facet as usize].is_some()
    }

    pub fn gluing_count(&self) -> usize {
        self.glued
    }

    /// All gluings, each listed once from its smaller slot, in slot order.
    pub fn gluings(&self) -> Vec<Gluing> {
        let mut out = Vec::with_capacity(self.glued);
        for (c, row) in self.halves.iter().enumerate() {
            for (f, h) in row.iter().enumerate() {
                if let Some(h) = h {
                    let from = Slot::new(c as u32, f as u32);
                    if from < h.to {
                        out.push(Gluing { from, to: h.to, images: h.images.clone() });
                    }
                }
            }
        }
        out
    }

    /// Every slot, in order.
    pub fn slots(&self) -> impl Iterator<Item = Slot> + '_ {
        self.halves
            .iter()
            .enumerate()
            .flat_map(|(c, row)| (0..row.len() as u32).map(move |f| Slot::new(c as u32, f)))
    }

    pub fn boundary_slots(&self) -> Vec<Slot> {
        self.slots().filter(|&s| !self.is_glued(s)).collect()
    }

    pub fn has_boundary(&self) -> bool {
        self.slots().any(|s| !self.is_glued(s))
    }

    /// The single template kind shared by all cells, if any.
    pub fn kind(&self) -> Option<TemplateKind> {
        let first = self.cells.first()?.shape.kind()?;
        self.cells.iter().all(|c| c.shape.kind() == Some(first)).then_some(first)
    }

    /// Connected components as sorted cell lists, ordered by smallest cell.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.cells.len()];
        let mut out = Vec::new();
        for start in 0..self.cells.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start as u32];
            let mut queue = VecDeque::from([start]);
            while let Some(c) = queue.pop_front() {
                for h in self.halves[c].iter().flatten() {
                    let d = h.to.cell as usize;
                    if !seen[d] {
                        seen[d] = true;
                        comp.push(d as u32);
                        queue.push_back(d);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The sub-complex on `cells` (renumbered in the given order), keeping
    /// only gluings between them.
    pub fn induced(&self, cells: &[u32]) -> Complex {
        let mut renumber = vec![u32::MAX; self.cells.len()];
        for (i, &c) in cells.iter().enumerate() {
            renumber[c as usize] = i as u32;
        }
        let mut out = Complex::new(self.dim);
        for &c in cells {
            out.cells.push(self.cells[c as usize].clone());
            out.halves.push(vec![None; self.halves[c as usize].len()]);
        }
        for (i, &c) in cells.iter().enumerate() {
            for (f, h) in self.halves[c as usize].iter().enumerate() {
                if let Some(h) = h {
                    let t = renumber[h.to.cell as usize];
                    if t != u32::MAX {
                        out.halves[i][f] = Some(HalfGluing { to: Slot::new(t, h.to.facet), images: h.images.clone() });
                    }
                }
            }
        }
        out.glued = out.halves.iter().flatten().flatten().count() / 2;
        out
    }

    /// The image of `self` under a cell permutation and one lattice
    /// isomorphism per cell: cell `c` becomes cell `cells[c]` and its vertex
    /// `v` becomes `vertex_maps[c][v]`. Each map must be an automorphism of
    /// the cell's lattice.
    pub fn relabeled(&self, cells: &[u32], vertex_maps: &[Vec<u32>]) -> Result<Complex, ComplexError> {
        let count = self.cells.len();
        let mut seen = vec![false; count];
        for &t in cells {
            match seen.get_mut(t as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(ComplexError::UnknownCell(t)),
            }
        }
        if cells.len() != count || vertex_maps.len() != count {
            return Err(ComplexError::UnknownCell(count as u32));
        }
        for (c, map) in vertex_maps.iter().enumerate() {
            let lat = self.lattice(c as u32);
            if !lat.is_isomorphism(lat, map) {
                return Err(ComplexError::NotALatticeMap { from: Slot::new(c as u32, 0), to: Slot::new(cells[c], 0) });
            }
        }
        let mut order = vec![0u32; count];
        for (c, &t) in cells.iter().enumerate() {
            order[t as usize] = c as u32;
        }
        let mut out = Complex::new(self.dim);
        for &c in &order {
            out.add_cell(self.cells[c as usize].shape.clone())?;
        }
        let n = self.dim;
        let image_facet = |c: u32, f: u32| -> u32 {
            let lat = self.lattice(c);
            let mut verts: Vec<u32> = lat.vertices_of(n - 1, f).iter().map(|&v| vertex_maps[c as usize][v as usize]).collect();
            verts.sort_unstable();
            lat.find_dim(n - 1, &verts).expect("automorphisms map facets to facets")
        };
        for (c, cell) in self.cells.iter().enumerate() {
            let pole = cell.north_pole.map(|p| image_facet(c as u32, p));
            out.set_north_pole(cells[c], pole)?;
        }
        for g in self.gluings() {
            let (a, b) = (g.from.cell as usize, g.to.cell as usize);
            let mut pairs: Vec<(u32, u32)> = self
                .facet_vertices(g.from)
                .iter()
                .zip(&g.images)
                .map(|(&x, &y)| (vertex_maps[a][x as usize], vertex_maps[b][y as usize]))
                .collect();
            pairs.sort_unstable();
            out.glue_images(
                Slot::new(cells[a], image_facet(g.from.cell, g.from.facet)),
                Slot::new(cells[b], image_facet(g.to.cell, g.to.facet)),
                pairs.into_iter().map(|p| p.1).collect(),
            )?;
        }
        Ok(out)
    }

    /// Disjoint union; cells of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Complex) -> Complex {
        assert_eq!(self.dim, other.dim, "disjoint union of complexes of different dimensions");
        let mut out = self.clone();
        let shift = self.cells.len() as u32;
        out.cells.extend(other.cells.iter().cloned());
        for row in &other.halves {
            out.halves.push(
                row.iter()
                    .map(|h| {
                        h.as_ref().map(|h| HalfGluing { to: Slot::new(h.to.cell + shift, h.to.facet), images: h.images.clone() })
                    })
                    .collect(),
            );
        }
        out.glued += other.glued;
        out
    }

    /// Total volume; cells of custom shape contribute nothing.
    pub fn volume(&self) -> Volume {
        self.cells
            .iter()
            .filter_map(|c| c.shape.kind())
            .fold(Volume::ZERO, |acc, k| acc + Volume::of_cell(k))
    }
}

/// Volume of a complex, as a symbolic multiple of the template volumes.
pub fn volume(complex: &Complex) -> Volume {
    complex.volume()
}

#[cfg(test)]
mod tests;
