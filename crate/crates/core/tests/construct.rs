use std::collections::BTreeMap;

use corner_forge::bundled::{borromean, whitehead};
use corner_forge::catalog::{template, TemplateKind};
use corner_forge::complex::{
    boundary_complex, boundary_subcomplex, isomorphic, orientability, validate, Complex, Slot,
};
use corner_forge::construct::{
    color_boundary, connector, cover, cover_neighbor, cut_along, double, embed, lift, orientation_double_cover,
    verify_embedding, Coloring, ColoringStrategy, ConstructError, CoverMode, Lifting, DEFAULT_MAX_CELLS,
};

fn single(kind: TemplateKind) -> Complex {
    let mut c = Complex::new(kind.dimension());
    c.add_template(kind);
    c
}

fn census(map: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    map.iter().copied().collect()
}

#[test]
fn doubled_dodecahedron_has_a_seventeen_face_facet() {
    let d = double(&single(TemplateKind::Dodecahedron), &[Slot::new(0, 0)]).unwrap();
    let bc = boundary_complex(&d).unwrap();
    let big: Vec<_> = bc.facets.iter().filter(|f| f.slots.len() > 1).collect();
    assert_eq!(big.len(), 5);
    assert!(big.iter().all(|f| f.face_count == 6 && f.slots.len() == 2));
    assert_eq!(bc.facets.len(), 2 * 11 - 5);
    assert_eq!(bc.census(), census(&[(5, 12), (6, 5)]));
}

#[test]
fn doubled_octahedron_has_eleven_faces() {
    let d = double(&single(TemplateKind::IdealOctahedron), &[Slot::new(0, 0)]).unwrap();
    let bc = boundary_complex(&d).unwrap();
    assert_eq!(bc.census(), census(&[(3, 8), (4, 3)]));
}

#[test]
fn three_doublings_at_a_vertex_give_the_forty_two_face_polyhedron() {
    let lat = template(TemplateKind::Dodecahedron).lattice();
    let faces = lat.faces_containing(0, 0, 2);
    assert_eq!(faces.len(), 3);
    let mut x = single(TemplateKind::Dodecahedron);
    for &f in &faces {
        let classes = corner_forge::complex::merged_classes(&x).unwrap();
        let k = classes[&Slot::new(0, f)];
        let slots: Vec<Slot> = classes.iter().filter(|(_, &j)| j == k).map(|(&s, _)| s).collect();
        x = double(&x, &slots).unwrap();
    }
    assert_eq!(x.cell_count(), 8);
    let bc = boundary_complex(&x).unwrap();
    assert_eq!(bc.census(), census(&[(5, 24), (6, 12), (8, 6)]));
    assert!(validate(&x).is_manifold_with_corners);
}

#[test]
fn double_rejects_glued_and_partial_selections() {
    let w = whitehead();
    assert_eq!(double(&w, &[Slot::new(0, 0)]).unwrap_err(), ConstructError::NotBoundary(Slot::new(0, 0)));
    let d = double(&single(TemplateKind::Dodecahedron), &[Slot::new(0, 0)]).unwrap();
    let bc = boundary_complex(&d).unwrap();
    let merged = bc.facets.iter().find(|f| f.slots.len() == 2).unwrap();
    assert!(matches!(double(&d, &merged.slots[..1]), Err(ConstructError::NotMergeClosed(_))));
    assert!(double(&d, &merged.slots).is_ok());
}

#[test]
fn doubling_faces_of_the_octahedron_gives_isomorphic_results() {
    let o = single(TemplateKind::IdealOctahedron);
    let a = double(&o, &[Slot::new(0, 0)]).unwrap();
    for f in 1..8 {
        let b = double(&o, &[Slot::new(0, f)]).unwrap();
        assert!(isomorphic(&a, &b).is_some());
    }
}

#[test]
fn lifting_pole_ridges_pair_with_second_layer() {
    for kind in [TemplateKind::Dodecahedron, TemplateKind::IdealOctahedron] {
        let l = Lifting::new(kind).unwrap();
        let layers = template(l.cell).layer_of(l.pole);
        assert!(l.second.iter().all(|&s| layers[s as usize] == 1));
        let mut sorted = l.second.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), l.second.len());
    }
}

#[test]
fn lift_of_whitehead_and_borromean() {
    let lw = lift(&whitehead()).unwrap();
    assert_eq!(lw.cell_count(), 1);
    assert_eq!(lw.gluing_count(), 4);
    let lb = lift(&borromean()).unwrap();
    assert_eq!(lb.cell_count(), 2);
    assert_eq!(lb.gluing_count(), 8);
    for l in [&lw, &lb] {
        let report = validate(l);
        assert!(report.is_manifold_with_corners, "{:?}", report.violations);
        let bc = boundary_complex(l).unwrap();
        for c in 0..l.cell_count() as u32 {
            let south = *template(TemplateKind::Cell24).layers(0).last().unwrap().first().unwrap();
            let k = bc.class_of[&Slot::new(c, south)];
            assert_eq!(bc.facets[k].slots.len(), 1);
            let k = bc.class_of[&Slot::new(c, 0)];
            let poles: Vec<Slot> = (0..l.cell_count() as u32).map(|i| Slot::new(i, 0)).collect();
            assert_eq!(bc.facets[k].slots, poles);
        }
    }
}

#[test]
fn lift_rejects_bad_input() {
    assert_eq!(lift(&corner_forge::bundled::m128()).unwrap_err(), ConstructError::NonOrientableComponent(0));
    assert_eq!(lift(&single(TemplateKind::Dodecahedron)).unwrap_err(), ConstructError::InvalidManifold);
    assert_eq!(lift(&single(TemplateKind::Cell24)).unwrap_err(), ConstructError::MixedTemplates);
}

#[test]
fn connectors() {
    let (p, g) = connector(TemplateKind::Cell24, 1).unwrap();
    assert_eq!(p.cell_count(), 1);
    assert_eq!(g.len(), 1);
    for q in [2, 3, 5] {
        let (p, g) = connector(TemplateKind::Cell24, q).unwrap();
        assert_eq!(g.len(), q);
        assert!(p.cell_count() >= q && p.cell_count() < 2 * q);
        let bc = boundary_complex(&p).unwrap();
        let ks: Vec<usize> = g.iter().map(|s| bc.class_of[s]).collect();
        for &a in &ks {
            assert_eq!(bc.facets[a].slots.len(), 1);
            assert_eq!(bc.facets[a].census, census(&[(3, 8)]));
            assert!(ks.iter().all(|b| !bc.adjacency[a].contains(b)));
        }
    }
    assert!(matches!(connector(TemplateKind::Dodecahedron, 2), Err(ConstructError::UnsupportedKind(_))));
}

#[test]
fn whitehead_pipeline() {
    let m = whitehead();
    let (w, record) = embed(&m).unwrap();
    assert_eq!(w.cell_count(), 2);
    assert!(verify_embedding(&w, &record).passes());
    let coloring = color_boundary(&w, ColoringStrategy::OctahedralCanonical).unwrap();
    assert!(!coloring.fell_back);
    assert!(coloring.k <= 8);
    let handle = cover(&w, &coloring, CoverMode::Explicit, DEFAULT_MAX_CELLS).unwrap();
    assert!(handle.certificate().passes());
    let host = handle.explicit().unwrap();
    assert_eq!(host.cell_count(), 2 << coloring.k);
    let report = validate(host);
    assert!(report.is_closed_manifold, "{:?}", report.violations);
    assert!(orientability(host).is_some());
    let check = verify_embedding(host, &record.in_cover());
    assert!(check.passes(), "{check:?}");

    let cut = cut_along(host, &record).unwrap();
    let (bd, _) = boundary_subcomplex(&cut).unwrap();
    assert!(isomorphic(&bd, &m.disjoint_union(&m)).is_some());
    assert_eq!(cut_along(&cut, &record).unwrap_err(), ConstructError::NotEmbedded(record.images[0]));
}

#[test]
fn negative_embedding_controls() {
    let (mut w, record) = embed(&whitehead()).unwrap();
    let mut open = w.clone();
    open.unglue(record.images[0]);
    assert!(!verify_embedding(&open, &record).interior);
    w = w.disjoint_union(&single(TemplateKind::Cell24));
    assert!(!verify_embedding(&w, &record).connected);
}

#[test]
fn cover_neighbor_flips_colour_bits() {
    let d = single(TemplateKind::Dodecahedron);
    let bc = boundary_complex(&d).unwrap();
    let colors = corner_forge::bundled::dodecahedron_four_coloring();
    let coloring = Coloring::from_facet_colors(&bc, colors.clone()).unwrap();
    let h = cover(&d, &coloring, CoverMode::Implicit, DEFAULT_MAX_CELLS).unwrap();
    assert!(h.explicit().is_none());
    assert_eq!(h.cell_count(), 16);
    let f = colors.iter().position(|&c| c == 3).unwrap() as u32;
    assert_eq!(cover_neighbor(&h, 0, 0, f), (8, Slot::new(0, f)));
    assert!(matches!(
        cover(&d, &coloring, CoverMode::Explicit, 15),
        Err(ConstructError::BudgetExceeded { cells: 16, budget: 15 })
    ));
    let auto = cover(&d, &coloring, CoverMode::Auto, 15).unwrap();
    assert!(!auto.is_explicit());
    let bad = Coloring::from_facet_colors(&bc, vec![0; 12]);
    assert!(matches!(bad, Err(ConstructError::ImproperColoring(_))));
}

#[test]
fn closed_base_has_no_boundary_to_colour() {
    let w = whitehead();
    assert_eq!(color_boundary(&w, ColoringStrategy::Greedy).unwrap_err(), ConstructError::NoBoundary);
}

#[test]
fn orientation_double_covers() {
    let m = corner_forge::bundled::m128();
    assert!(orientability(&m).is_none());
    let (mm, deck) = orientation_double_cover(&m);
    assert_eq!(mm.cell_count(), 2);
    assert!(orientability(&mm).is_some());
    assert!(mm.is_connected());
    assert!(validate(&mm).is_closed_manifold);
    assert_eq!(deck, vec![1, 0]);
    let w = whitehead();
    let (ww, _) = orientation_double_cover(&w);
    assert!(isomorphic(&ww, &w.disjoint_union(&w)).is_some());
}
