use corner_forge::bundled::{borromean, dodecahedral16, dodecahedron_four_coloring, m128, whitehead};
use corner_forge::catalog::{template, TemplateKind};
use corner_forge::complex::{
    cusp_sections, euler_characteristic, face_classes, isomorphic, orientability, validate, Complex,
};
use corner_forge::volume::Volume;

fn assert_complete(c: &Complex) {
    let report = validate(c);
    assert!(report.violations.is_empty(), "{:?}", report.violations);
    assert!(report.is_closed_manifold);
    assert_eq!(euler_characteristic(c).unwrap(), 0);
    for edge in face_classes(c, 1).unwrap() {
        assert_eq!(edge.members.len(), 4);
    }
}

#[test]
fn whitehead_complement() {
    let c = whitehead();
    assert_complete(&c);
    assert!(orientability(&c).is_some());
    let cusps = cusp_sections(&c).unwrap();
    assert_eq!(cusps.len(), 2);
    assert!(cusps.iter().all(|s| s.is_closed_flat() && s.orientable && s.euler_characteristic == 0));
    assert_eq!(c.volume(), Volume::of_cell(TemplateKind::IdealOctahedron));
}

#[test]
fn borromean_complement() {
    let c = borromean();
    assert_complete(&c);
    assert!(orientability(&c).is_some());
    let cusps = cusp_sections(&c).unwrap();
    assert_eq!(cusps.len(), 3);
    assert!(cusps.iter().all(|s| s.is_closed_flat() && s.orientable && s.euler_characteristic == 0));
    assert!((c.volume().numeric() - 7.32772).abs() < 1e-4);
    assert!(isomorphic(&c, &whitehead()).is_none());
}

#[test]
fn m128_is_non_orientable() {
    let c = m128();
    assert_complete(&c);
    assert!(orientability(&c).is_none());
    let cusps = cusp_sections(&c).unwrap();
    assert!(!cusps.is_empty());
    assert!(cusps.iter().all(|s| s.is_closed_flat() && s.euler_characteristic == 0));
    assert!(cusps.iter().any(|s| !s.orientable));
}

#[test]
fn four_colouring_is_proper() {
    let colors = dodecahedron_four_coloring();
    let adjacency = template(TemplateKind::Dodecahedron).facet_adjacency();
    assert_eq!(colors.len(), 12);
    for (i, nb) in adjacency.iter().enumerate() {
        assert!(nb.iter().all(|&j| colors[j as usize] != colors[i]));
    }
    assert_eq!(*colors.iter().max().unwrap(), 3);
}

#[test]
fn sixteen_dodecahedra() {
    let c = dodecahedral16();
    assert_eq!(c.cell_count(), 16);
    assert_complete(&c);
    assert!(orientability(&c).is_some());
    assert!(c.is_connected());
    assert!(cusp_sections(&c).unwrap().is_empty());
    assert!((c.volume().numeric() - 68.8992).abs() < 1e-3);
    assert_eq!(c.volume(), Volume::of_cell(TemplateKind::Dodecahedron).scaled(16).unwrap());
}

#[test]
fn m128_double_cover_is_the_borromean_complement() {
    let (double, _) = corner_forge::construct::orientation_double_cover(&m128());
    assert!(orientability(&double).is_some());
    assert!(isomorphic(&double, &borromean()).is_some());
}
