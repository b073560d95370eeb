use super::*;
use crate::catalog::TemplateKind;

fn whitehead() -> Complex {
    let mut c = Complex::new(3);
    c.add_template(TemplateKind::IdealOctahedron);
    for (a, b, images) in [(0, 3, [0, 3, 4]), (1, 4, [5, 2, 1]), (2, 7, [5, 4, 3]), (5, 6, [2, 4, 5])] {
        c.glue_images(Slot::new(0, a), Slot::new(0, b), images.to_vec()).unwrap();
    }
    c
}

#[test]
fn single_cell_has_one_class_per_face() {
    let mut c = Complex::new(3);
    c.add_template(TemplateKind::Dodecahedron);
    let classes = face_classes(&c, 2).unwrap();
    assert_eq!(classes.len(), 12);
    let report = validate(&c);
    assert!(report.is_manifold_with_corners);
    assert!(!report.is_closed_manifold);
    assert_eq!(report.boundary_facets, 12);
}

#[test]
fn gluing_two_cells_along_a_face_merges_it() {
    let mut c = Complex::new(3);
    c.add_template(TemplateKind::Dodecahedron);
    c.add_template(TemplateKind::Dodecahedron);
    let verts = c.facet_vertices(Slot::new(0, 0)).to_vec();
    c.glue_images(Slot::new(0, 0), Slot::new(1, 0), verts).unwrap();
    assert_eq!(face_classes(&c, 2).unwrap().len(), 23);
    assert!(c.is_connected());
    assert_eq!(c.gluing_count(), 1);
    let report = validate(&c);
    assert!(report.is_manifold_with_corners);
    assert_eq!(report.flat_ridges, 5);
}

#[test]
fn slot_errors() {
    let mut c = Complex::new(3);
    c.add_template(TemplateKind::IdealOctahedron);
    assert_eq!(c.glue_images(Slot::new(0, 0), Slot::new(0, 0), vec![0, 1, 2]), Err(ComplexError::SelfGluing(Slot::new(0, 0))));
    assert_eq!(c.glue_images(Slot::new(0, 9), Slot::new(0, 1), vec![0, 1, 2]), Err(ComplexError::UnknownFacet(Slot::new(0, 9))));
    assert_eq!(c.glue_images(Slot::new(3, 0), Slot::new(0, 1), vec![0, 1, 2]), Err(ComplexError::UnknownCell(3)));
    assert!(matches!(c.glue_images(Slot::new(0, 0), Slot::new(0, 1), vec![0, 2, 2]), Err(ComplexError::NotALatticeMap { .. })));
    c.glue_images(Slot::new(0, 0), Slot::new(0, 3), vec![0, 3, 4]).unwrap();
    assert_eq!(c.glue_images(Slot::new(0, 3), Slot::new(0, 1), vec![0, 1, 3]), Err(ComplexError::SlotTaken(Slot::new(0, 3))));
    assert!(matches!(c.add_cell(Shape::Template(TemplateKind::Cell24)), Err(ComplexError::ShapeDimension { .. })));
}

#[test]
fn whitehead_link_complement_is_closed_with_two_cusps() {
    let c = whitehead();
    let report = validate(&c);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert!(report.is_closed_manifold);
    let edges = face_classes(&c, 1).unwrap();
    assert!(edges.iter().all(|e| e.members.len() == 4));
    assert_eq!(euler_characteristic(&c).unwrap(), 0);
    assert!(orientability(&c).is_some());
    let cusps = cusp_sections(&c).unwrap();
    assert_eq!(cusps.len(), 2);
    for s in &cusps {
        assert!(s.is_closed_flat());
        assert_eq!(s.euler_characteristic, 0);
    }
}

#[test]
fn unglue_restores_boundary() {
    let mut c = whitehead();
    let g = c.unglue(Slot::new(0, 3)).unwrap();
    assert_eq!(g.to, Slot::new(0, 0));
    assert_eq!(c.boundary_slots(), vec![Slot::new(0, 0), Slot::new(0, 3)]);
    assert!(matches!(cusp_sections(&c), Err(ComplexError::IncompleteCusp { .. })));
    c.glue_images(g.from, g.to, g.images).unwrap();
    assert!(isomorphic(&c, &whitehead()).unwrap().is_identity());
}

#[test]
fn lone_cell24_is_a_manifold_with_corners() {
    let mut c = Complex::new(4);
    c.add_template(TemplateKind::Cell24);
    let report = validate(&c);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert!(report.is_manifold_with_corners);
    let bc = boundary_complex(&c).unwrap();
    assert_eq!(bc.facets.len(), 24);
    assert!(bc.facets.iter().all(|f| f.face_count == 8));
    assert_eq!(bc.max_degree(), 8);
}
