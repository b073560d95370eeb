use proptest::prelude::*;

use corner_forge::bundled::{borromean, m128, whitehead};
use corner_forge::catalog::{template, TemplateKind};
use corner_forge::complex::{
    boundary_complex, cusp_sections, euler_characteristic, face_classes, isomorphic, merged_classes, orientability,
    validate, Complex, Slot,
};
use corner_forge::construct::{color_boundary, double, ColoringStrategy};

fn relabel(c: &Complex, perm_keys: &[u64], sym_picks: &[usize]) -> Complex {
    let n = c.cell_count();
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by_key(|&i| (perm_keys[i as usize % perm_keys.len()], i));
    let mut cells = vec![0u32; n];
    for (pos, &i) in order.iter().enumerate() {
        cells[i as usize] = pos as u32;
    }
    let maps: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let syms = template(c.cell(i as u32).shape.kind().unwrap()).symmetries();
            syms[sym_picks[i % sym_picks.len()] % syms.len()].clone()
        })
        .collect();
    c.relabeled(&cells, &maps).unwrap()
}

/// A facet map from `f` to `g` in the template, chosen among the symmetries
/// carrying one onto the other.
fn facet_map(kind: TemplateKind, f: u32, g: u32, pick: usize) -> Vec<u32> {
    let t = template(kind);
    let n = t.dimension();
    let lat = t.lattice();
    let target: Vec<u32> = lat.vertices_of(n - 1, g).to_vec();
    let options: Vec<Vec<u32>> = t
        .symmetries()
        .into_iter()
        .filter(|s| {
            let mut img: Vec<u32> = lat.vertices_of(n - 1, f).iter().map(|&v| s[v as usize]).collect();
            img.sort_unstable();
            img == target
        })
        .map(|s| lat.vertices_of(n - 1, f).iter().map(|&v| s[v as usize]).collect())
        .collect();
    options[pick % options.len()].clone()
}

/// Random octahedral complex with some of its facets glued.
fn random_complex(cells: usize, picks: &[(usize, usize, usize)]) -> Complex {
    let kind = TemplateKind::IdealOctahedron;
    let mut c = Complex::new(3);
    for _ in 0..cells {
        c.add_template(kind);
    }
    for &(a, b, m) in picks {
        let free = c.boundary_slots();
        if free.len() < 2 {
            break;
        }
        let s = free[a % free.len()];
        let rest: Vec<Slot> = free.into_iter().filter(|&x| x != s).collect();
        let t = rest[b % rest.len()];
        let images = facet_map(kind, s.facet, t.facet, m);
        c.glue_images(s, t, images).unwrap();
    }
    c
}

fn bundled(i: usize) -> Complex {
    match i % 3 {
        0 => whitehead(),
        1 => borromean(),
        _ => m128(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_survive_relabeling(which in 0usize..3, keys in prop::collection::vec(any::<u64>(), 1..4), syms in prop::collection::vec(any::<usize>(), 1..4)) {
        let c = bundled(which);
        let r = relabel(&c, &keys, &syms);
        prop_assert!(isomorphic(&c, &r).is_some());
        prop_assert_eq!(r.volume(), c.volume());
        prop_assert_eq!(euler_characteristic(&r).unwrap(), euler_characteristic(&c).unwrap());
        prop_assert_eq!(orientability(&r).is_some(), orientability(&c).is_some());
        prop_assert!(validate(&r).is_closed_manifold);
        prop_assert_eq!(euler_characteristic(&r).unwrap(), 0);
        prop_assert_eq!(cusp_sections(&r).unwrap().len(), cusp_sections(&c).unwrap().len());
    }

    #[test]
    fn face_classes_partition_all_faces(cells in 1usize..4, picks in prop::collection::vec((any::<usize>(), any::<usize>(), any::<usize>()), 0..8)) {
        let c = random_complex(cells, &picks);
        for d in 0..3 {
            let Ok(classes) = face_classes(&c, d) else { continue };
            let total: usize = classes.iter().map(|k| k.members.len()).sum();
            prop_assert_eq!(total, cells * template(TemplateKind::IdealOctahedron).lattice().face_count(d));
            let mut members: Vec<(u32, u32)> = classes.iter().flat_map(|k| k.members.iter().copied()).collect();
            members.sort_unstable();
            members.dedup();
            prop_assert_eq!(members.len(), total);
        }
    }

    #[test]
    fn volume_and_euler_add_over_disjoint_unions(a in 1usize..3, b in 1usize..3, pa in prop::collection::vec((any::<usize>(), any::<usize>(), any::<usize>()), 0..5), pb in prop::collection::vec((any::<usize>(), any::<usize>(), any::<usize>()), 0..5)) {
        let (x, y) = (random_complex(a, &pa), random_complex(b, &pb));
        let u = x.disjoint_union(&y);
        prop_assert_eq!(u.volume(), x.volume() + y.volume());
        if let (Ok(ex), Ok(ey)) = (euler_characteristic(&x), euler_characteristic(&y)) {
            prop_assert_eq!(euler_characteristic(&u).unwrap(), ex + ey);
        }
        prop_assert_eq!(orientability(&u).is_some(), orientability(&x).is_some() && orientability(&y).is_some());
    }

    #[test]
    fn orientability_is_isomorphism_invariant(cells in 1usize..3, picks in prop::collection::vec((any::<usize>(), any::<usize>(), any::<usize>()), 0..6), keys in prop::collection::vec(any::<u64>(), 1..3), syms in prop::collection::vec(any::<usize>(), 1..3)) {
        let c = random_complex(cells, &picks);
        let r = relabel(&c, &keys, &syms);
        prop_assert_eq!(orientability(&r).is_some(), orientability(&c).is_some());
        prop_assert!(isomorphic(&c, &r).is_some());
        if let (Ok(bc), Ok(br)) = (boundary_complex(&c), boundary_complex(&r)) {
            let mut x: Vec<_> = bc.facets.iter().map(|f| f.census.clone()).collect();
            let mut y: Vec<_> = br.facets.iter().map(|f| f.census.clone()).collect();
            x.sort();
            y.sort();
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn doubling_is_symmetric_and_doubles_volume(kind_pick in 0usize..2, rounds in prop::collection::vec(any::<usize>(), 1..3)) {
        let kind = [TemplateKind::Dodecahedron, TemplateKind::IdealOctahedron][kind_pick];
        let mut x = Complex::new(3);
        x.add_template(kind);
        for r in rounds {
            let classes = merged_classes(&x).unwrap();
            let count = classes.values().max().unwrap() + 1;
            let k = r % count;
            let slots: Vec<Slot> = classes.iter().filter(|(_, &j)| j == k).map(|(&s, _)| s).collect();
            let d = double(&x, &slots).unwrap();
            prop_assert_eq!(d.volume(), x.volume() + x.volume());
            let n = x.cell_count() as u32;
            let swap: Vec<u32> = (0..2 * n).map(|c| (c + n) % (2 * n)).collect();
            let ids: Vec<Vec<u32>> = (0..2 * n).map(|c| (0..d.lattice(c).vertex_count() as u32).collect()).collect();
            let swapped = d.relabeled(&swap, &ids).unwrap();
            prop_assert_eq!(swapped.gluings(), d.gluings());
            prop_assert!(validate(&d).is_manifold_with_corners);
            x = d;
        }
        let bc = boundary_complex(&x).unwrap();
        let coloring = color_boundary(&x, ColoringStrategy::Greedy).unwrap();
        prop_assert!(coloring.is_proper(&bc));
        prop_assert!(coloring.k as usize <= bc.max_degree() + 1);
    }
}

#[test]
fn every_template_alone_is_a_manifold_with_corners() {
    for kind in TemplateKind::ALL {
        let mut c = Complex::new(kind.dimension());
        c.add_template(kind);
        let report = validate(&c);
        assert!(report.violations.is_empty(), "{kind}");
        assert!(report.is_manifold_with_corners, "{kind}");
        assert!(!report.has_flat_boundary_ridges, "{kind}");
        assert!(orientability(&c).is_some());
    }
}
