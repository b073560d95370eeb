use super::*;

#[test]
fn f_vectors() {
    assert_eq!(template(TemplateKind::Dodecahedron).f_vector(), vec![20, 30, 12]);
    assert_eq!(template(TemplateKind::IdealOctahedron).f_vector(), vec![6, 12, 8]);
    assert_eq!(template(TemplateKind::Cell24).f_vector(), vec![24, 96, 96, 24]);
    assert_eq!(template(TemplateKind::Cell120).f_vector(), vec![600, 1200, 720, 120]);
}

#[test]
fn boundary_euler_relation() {
    for kind in TemplateKind::ALL {
        let f = template(kind).f_vector();
        let alt: i64 = f.iter().enumerate().map(|(d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum();
        assert_eq!(alt, if kind.dimension() == 3 { 2 } else { 0 }, "{kind}");
    }
}

#[test]
fn ridges_lie_on_two_facets() {
    for kind in TemplateKind::ALL {
        let lat = template(kind).lattice();
        let rd = lat.dim() - 2;
        for r in 0..lat.face_count(rd) as u32 {
            assert_eq!(lat.sup(rd, r).len(), 2);
        }
    }
}

#[test]
fn finite_vertices_are_simple() {
    for kind in [TemplateKind::Dodecahedron, TemplateKind::Cell120] {
        let lat = template(kind).lattice();
        let n = lat.dim();
        for v in 0..lat.vertex_count() as u32 {
            assert_eq!(lat.sup(0, v).len(), n);
            assert_eq!(lat.faces_containing(0, v, n - 1).len(), n);
        }
    }
}

#[test]
fn ideal_vertex_figures() {
    let (square, _) = template(TemplateKind::IdealOctahedron).lattice().vertex_figure(0);
    assert_eq!(square.f_vector(), vec![4, 4]);
    let (cube, _) = template(TemplateKind::Cell24).lattice().vertex_figure(0);
    assert_eq!(cube.f_vector(), vec![8, 12, 6]);
}

#[test]
fn adjacency_is_regular() {
    for (kind, deg) in [
        (TemplateKind::Dodecahedron, 5),
        (TemplateKind::IdealOctahedron, 3),
        (TemplateKind::Cell120, 12),
        (TemplateKind::Cell24, 8),
    ] {
        let adj = template(kind).facet_adjacency();
        assert!(adj.iter().all(|l| l.len() == deg), "{kind}");
    }
}

#[test]
fn layer_sequences() {
    let sizes = |kind, f| template(kind).layers(f).iter().map(Vec::len).collect::<Vec<_>>();
    for f in 0..12 {
        assert_eq!(sizes(TemplateKind::Dodecahedron, f), vec![1, 5, 5, 1]);
    }
    for f in 0..24 {
        assert_eq!(sizes(TemplateKind::Cell24, f), vec![1, 8, 6, 8, 1]);
    }
    for f in [0, 17, 119] {
        assert_eq!(sizes(TemplateKind::Cell120, f), vec![1, 12, 20, 12, 30, 12, 20, 12, 1]);
    }
}

#[test]
fn regeneration_is_identical() {
    for kind in [TemplateKind::Dodecahedron, TemplateKind::IdealOctahedron, TemplateKind::Cell24] {
        let fresh = PolytopeTemplate::generate(kind);
        assert_eq!(fresh.lattice(), template(kind).lattice());
        assert!(core::ptr::eq(template(kind), template(kind)));
    }
}

#[test]
fn symmetry_orders() {
    let d = template(TemplateKind::Dodecahedron).symmetries();
    assert_eq!(d.len(), 120);
    assert_eq!(d[0], (0..20).collect::<Vec<u32>>());
    assert_eq!(template(TemplateKind::IdealOctahedron).symmetries().len(), 48);
    assert_eq!(template(TemplateKind::Cell24).symmetries().len(), 1152);
}

#[test]
fn names_round_trip() {
    for kind in TemplateKind::ALL {
        assert_eq!(kind.name().parse::<TemplateKind>(), Ok(kind));
    }
    assert!("tetrahedron".parse::<TemplateKind>().is_err());
}

#[test]
fn identity_extends_to_identity() {
    for kind in [TemplateKind::Dodecahedron, TemplateKind::Cell24] {
        let t = template(kind);
        for f in 0..t.facet_count() as u32 {
            let id = LatticeMap::identity(t.lattice(), f);
            let ext = t.extend_facet_map(&id).unwrap();
            assert_eq!(ext, (0..t.lattice().vertex_count() as u32).collect::<Vec<_>>());
        }
    }
}

#[test]
fn every_face_symmetry_extends_uniquely() {
    let t = template(TemplateKind::Dodecahedron);
    let lat = t.lattice();
    let (target, target_verts) = lat.sublattice(2, 0);
    let mut all = BTreeSet::new();
    for f in 0..12u32 {
        let (face, verts) = lat.sublattice(2, f);
        let isos = face.isomorphisms_to(&target);
        assert_eq!(isos.len(), 10);
        for a in isos {
            let pairs = (0..verts.len()).map(|i| (verts[i], target_verts[a[i] as usize])).collect();
            let map = LatticeMap::new(lat, f, 0, pairs).unwrap();
            all.insert(t.extend_facet_map(&map).unwrap());
        }
    }
    assert_eq!(all.len(), 120);
    assert_eq!(all, t.symmetries().into_iter().collect());
}

#[test]
fn broken_map_does_not_extend() {
    let t = template(TemplateKind::Dodecahedron);
    let verts = t.lattice().vertices_of(2, 0).to_vec();
    let mut pairs: Vec<(u32, u32)> = verts.iter().map(|&v| (v, v)).collect();
    pairs[0].1 = verts[1];
    pairs[1].1 = verts[0];
    // a transposition of two pentagon vertices is never a dihedral symmetry
    let swapped = LatticeMap { source: 0, target: 0, vertex_map: pairs.clone() };
    assert_eq!(t.extend_facet_map(&swapped), Err(CatalogError::NoExtension));
    assert!(LatticeMap::new(t.lattice(), 0, 0, pairs).is_err());
    let off_facet = LatticeMap { source: 0, target: 1, vertex_map: verts.iter().map(|&v| (v, v)).collect() };
    assert_eq!(t.extend_facet_map(&off_facet), Err(CatalogError::NoExtension));
}

#[test]
fn three_coloring_of_24_cell() {
    let t = template(TemplateKind::Cell24);
    let colors = t.canonical_three_coloring().unwrap();
    let mut sizes = [0; 3];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    assert_eq!(sizes, [8, 8, 8]);
    let adj = t.facet_adjacency();
    for (f, l) in adj.iter().enumerate() {
        for &g in l {
            assert_ne!(colors[f], colors[g as usize]);
        }
    }
    for f in 0..24u32 {
        let layers = t.layers(f);
        for (depth, layer) in layers.iter().enumerate() {
            if depth % 2 == 0 {
                assert!(layer.iter().all(|&g| colors[g as usize] == colors[f as usize]));
            } else {
                let mut split = BTreeSet::new();
                let mut counts = [0; 3];
                for &g in layer {
                    split.insert(colors[g as usize]);
                    counts[colors[g as usize] as usize] += 1;
                }
                assert_eq!(split.len(), 2);
                assert!(counts.iter().all(|&c| c == 0 || c == 4));
            }
        }
    }
    assert_eq!(template(TemplateKind::Cell120).canonical_three_coloring(), Err(CatalogError::NoThreeColoring));
}

#[test]
fn nonincident_triples() {
    for kind in [TemplateKind::Cell24, TemplateKind::Cell120] {
        let t = template(kind);
        let picked = t.nonincident_facets(3).unwrap();
        assert_eq!(picked.len(), 3);
        let adj = t.facet_adjacency();
        for &a in &picked {
            for &b in &picked {
                assert!(!adj[a as usize].contains(&b));
            }
        }
    }
    assert_eq!(template(TemplateKind::Dodecahedron).nonincident_facets(1), Ok(vec![0]));
    assert!(matches!(
        template(TemplateKind::IdealOctahedron).nonincident_facets(5),
        Err(CatalogError::NotEnoughFacets { requested: 5, .. })
    ));
}

#[test]
fn orthoplex_references() {
    assert_eq!(orthoplex_boundary(2).len(), 4);
    assert_eq!(orthoplex_boundary(4).len(), 16);
    assert_eq!(orthoplex_sector(3, 1).len(), 4);
    assert!(orthoplex_sector(3, 1).iter().all(|s| s.contains(&4)));
    assert_eq!(orthoplex_sector(2, 2), vec![vec![0, 2]]);
}
