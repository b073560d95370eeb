//! Cusp sections: the links of ideal vertex classes.
//!
//! The link of an ideal vertex of a cell is its vertex figure (a square for
//! the ideal octahedron, a cube for the ideal 24-cell). Gluing the vertex
//! figures of all members of an ideal vertex class along the facet gluings
//! gives a flat `(n-1)`-manifold when the complex is complete.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::classes::FaceClasses;
use super::orient::{euler_from_classes, orientability};
use super::validate::{validate, ValidationReport};
use super::{Complex, ComplexError, Shape, Slot};
use crate::lattice::FaceLattice;

#[derive(Debug, Clone)]
pub struct CuspSection {
    /// The `(cell, vertex)` members of the ideal vertex class; cell `i` of
    /// `complex` is the vertex figure of member `i`.
    pub members: Vec<(u32, u32)>,
    pub complex: Complex,
    pub report: ValidationReport,
    pub orientable: bool,
    pub euler_characteristic: i64,
}

impl CuspSection {
    /// Closed, with every link check passing.
    pub fn is_closed_flat(&self) -> bool {
        self.report.is_closed_manifold
    }
}

type Figure = Arc<(Arc<FaceLattice>, Vec<u32>)>;

/// One section per ideal vertex class, in class order.
pub fn cusp_sections(complex: &Complex) -> Result<Vec<CuspSection>, ComplexError> {
    let n = complex.dim();
    let classes = FaceClasses::compute(complex)?;
    let mut figures: BTreeMap<((usize, usize), u32), Figure> = BTreeMap::new();
    let mut figure = |cell: u32, v: u32| -> Figure {
        let shape = &complex.cell(cell).shape;
        figures
            .entry((shape.key(), v))
            .or_insert_with(|| {
                let (lat, edges) = shape.lattice().vertex_figure(v);
                Arc::new((Arc::new(lat), edges))
            })
            .clone()
    };

    let mut sections = Vec::new();
    let mut open = Vec::new();
    for class in classes.of_dim(0).iter().filter(|c| c.ideal) {
        let index = sections.len();
        let members = class.members.clone();
        let figs: Vec<Figure> = members.iter().map(|&(c, v)| figure(c, v)).collect();
        let mut section = Complex::new(n - 1);
        for fig in &figs {
            section.add_cell(Shape::Custom(fig.0.clone())).expect("vertex figure has dimension n-1");
        }
        for (i, &(c, v)) in members.iter().enumerate() {
            let lat = complex.lattice(c);
            for wall in lat.faces_containing(0, v, n - 1) {
                let local = local_facet(lat, &figs[i], wall);
                let here = Slot::new(i as u32, local);
                let Some(h) = complex.half(Slot::new(c, wall)) else {
                    open.push((index, here));
                    continue;
                };
                let src = lat.vertices_of(n - 1, wall);
                let img = |x: u32| h.images[src.binary_search(&x).expect("vertex of wall")];
                let w = img(v);
                let j = members.binary_search(&(h.to.cell, w)).expect("image vertex is in the same class");
                let lb = complex.lattice(h.to.cell);
                let there = Slot::new(j as u32, local_facet(lb, &figs[j], h.to.facet));
                if there <= here {
                    continue;
                }
                let (fig_lat, edges) = (&figs[i].0, &figs[i].1);
                let images: Vec<u32> = fig_lat
                    .vertices_of(n - 2, local)
                    .iter()
                    .map(|&e| {
                        let ends: Vec<u32> = lat.vertices_of(1, edges[e as usize]).iter().map(|&x| img(x)).collect();
                        let target_edge = lb.find_dim(1, &ends).expect("edges map to edges");
                        figs[j].1.binary_search(&target_edge).expect("edge through image vertex") as u32
                    })
                    .collect();
                section.glue_images(here, there, images).expect("vertex figures glue isomorphically");
            }
        }
        let report = validate(&section);
        let orientable = orientability(&section).is_some();
        let sub_classes = FaceClasses::compute(&section)?;
        let euler_characteristic = euler_from_classes(&section, &sub_classes);
        sections.push(CuspSection { members, complex: section, report, orientable, euler_characteristic });
    }
    if !open.is_empty() {
        return Err(ComplexError::IncompleteCusp { open });
    }
    Ok(sections)
}

/// Index in the vertex figure of the facet coming from cell facet `wall`.
fn local_facet(lat: &FaceLattice, fig: &Figure, wall: u32) -> u32 {
    let (fig_lat, edges) = (&fig.0, &fig.1);
    let n = lat.dim();
    let local: Vec<u32> = lat
        .faces_within(n - 1, wall, 1)
        .into_iter()
        .filter_map(|e| edges.binary_search(&e).ok().map(|i| i as u32))
        .collect();
    fig_lat.find_dim(n - 2, &local).expect("wall through the vertex is a facet of its figure")
}
