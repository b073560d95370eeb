use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::ConstructError;
use crate::catalog::{template, TemplateKind};
use crate::complex::{orientability, validate, Complex, Slot};
use crate::lattice::FaceLattice;

/// How a 3-cell sits in the north pole of the 4-cell above it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lifting {
    pub kind: TemplateKind,
    pub cell: TemplateKind,
    /// The north-pole facet of the 4-cell.
    pub pole: u32,
    /// Vertex `y` of the 3-template goes to vertex `psi[y]` of the 4-cell.
    pub psi: Vec<u32>,
    /// For each facet `f` of the 3-template, the other 4-cell facet through
    /// the ridge `psi(f)`.
    pub second: Vec<u32>,
}

impl Lifting {
    /// The lexicographically first identification of `kind` with facet 0
    /// of the cell above it.
    pub fn new(kind: TemplateKind) -> Result<Lifting, ConstructError> {
        let cell = kind.cell_above().ok_or(ConstructError::UnsupportedKind(kind))?;
        let big = template(cell).lattice();
        let small = template(kind).lattice();
        let pole = 0;
        let (sub, verts) = big.sublattice(3, pole);
        let iso = small.isomorphisms_to(&sub).into_iter().min().expect("pole facet has the facet type");
        let psi: Vec<u32> = iso.iter().map(|&i| verts[i as usize]).collect();
        let second = (0..small.facet_count() as u32)
            .map(|f| {
                let r = Self::ridge_of(big, small, &psi, f);
                let up = big.sup(2, r);
                if up[0] == pole {
                    up[1]
                } else {
                    up[0]
                }
            })
            .collect();
        Ok(Lifting { kind, cell, pole, psi, second })
    }

    fn ridge_of(big: &FaceLattice, small: &FaceLattice, psi: &[u32], f: u32) -> u32 {
        let mut verts: Vec<u32> = small.vertices_of(2, f).iter().map(|&y| psi[y as usize]).collect();
        verts.sort_unstable();
        big.find_dim(2, &verts).expect("facets of the pole are ridges")
    }

    /// The ridge of the 4-cell that facet `f` of the 3-template becomes.
    pub fn ridge(&self, f: u32) -> u32 {
        Self::ridge_of(template(self.cell).lattice(), template(self.kind).lattice(), &self.psi, f)
    }
}

/// Checks the lift preconditions: one 3-dimensional template, closed,
/// every component orientable.
pub(crate) fn check_input(m: &Complex) -> Result<TemplateKind, ConstructError> {
    let kind = m.kind().filter(|k| k.dimension() == 3).ok_or(ConstructError::MixedTemplates)?;
    if m.dim() != 3 || m.cell_count() == 0 {
        return Err(ConstructError::MixedTemplates);
    }
    if !validate(m).is_closed_manifold {
        return Err(ConstructError::InvalidManifold);
    }
    if orientability(m).is_none() {
        for (i, comp) in m.components().iter().enumerate() {
            if orientability(&m.induced(comp)).is_none() {
                return Err(ConstructError::NonOrientableComponent(i));
            }
        }
    }
    Ok(kind)
}

/// One 4-cell per cell of `m`, its north pole identified with the cell, glued
/// along the second facets through the pole ridges by the unique extension
/// of each gluing of `m`.
pub fn lift(m: &Complex) -> Result<Complex, ConstructError> {
    let kind = check_input(m)?;
    let lifting = Lifting::new(kind)?;
    let big = template(lifting.cell).lattice();
    let small = template(kind).lattice();
    let mut out = Complex::new(4);
    for c in 0..m.cell_count() as u32 {
        out.add_template(lifting.cell);
        out.set_north_pole(c, Some(lifting.pole))?;
    }
    let mut subs: BTreeMap<u32, (FaceLattice, Vec<u32>)> = BTreeMap::new();
    for g in m.gluings() {
        let (f1, f2) = (g.from.facet, g.to.facet);
        let (s1, s2) = (lifting.second[f1 as usize], lifting.second[f2 as usize]);
        for s in [s1, s2] {
            subs.entry(s).or_insert_with(|| big.sublattice(3, s));
        }
        let (sub1, verts1) = &subs[&s1];
        let (sub2, verts2) = &subs[&s2];
        let local1 = |x: u32| verts1.binary_search(&x).expect("ridge lies in its facet") as u32;
        let local2 = |x: u32| verts2.binary_search(&x).expect("ridge lies in its facet") as u32;
        let ridge_local = |f: u32, local: &dyn Fn(u32) -> u32| -> Vec<u32> {
            let mut r: Vec<u32> = big.vertices_of(2, lifting.ridge(f)).iter().map(|&x| local(x)).collect();
            r.sort_unstable();
            r
        };
        let r1 = sub1.find_dim(2, &ridge_local(f1, &local1)).expect("ridge is a face of the facet");
        let r2 = sub2.find_dim(2, &ridge_local(f2, &local2)).expect("ridge is a face of the facet");
        let mut pairs: Vec<(u32, u32)> = small
            .vertices_of(2, f1)
            .iter()
            .zip(&g.images)
            .map(|(&y, &z)| (local1(lifting.psi[y as usize]), local2(lifting.psi[z as usize])))
            .collect();
        pairs.sort_unstable();
        let images: Vec<u32> = pairs.into_iter().map(|p| p.1).collect();
        let ext = sub1.extend_facet_map(r1, sub2, r2, &images).ok_or(ConstructError::InvalidManifold)?;
        let full: Vec<u32> = ext.iter().map(|&i| verts2[i as usize]).collect();
        out.glue_images(Slot::new(g.from.cell, s1), Slot::new(g.to.cell, s2), full)?;
    }
    Ok(out)
}
