use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::lift::{check_input, lift, Lifting};
use super::{double, ConstructError};
use crate::catalog::{template, TemplateKind};
use crate::complex::{isomorphic, orientability, validate, Complex, FaceClasses, Slot};

/// Where a 3-manifold sits inside a host 4-complex.
#[derive(Debug, Clone)]
pub struct EmbeddingRecord {
    /// The embedded 3-manifold.
    pub source: Complex,
    /// Host slot carrying cell `i` of `source`.
    pub images: Vec<Slot>,
    /// The slot on the other side of each image.
    pub mirrors: Vec<Slot>,
    /// Vertex `y` of source cell `i` is vertex `vertex_maps[i][y]` of the
    /// host cell `images[i].cell`.
    pub vertex_maps: Vec<Vec<u32>>,
    /// Whether the host is expected to be closed.
    pub closed_host: bool,
}

impl EmbeddingRecord {
    /// The same record in a colour cover of its host, where sheet 0 keeps
    /// the base cell numbering.
    pub fn in_cover(&self) -> EmbeddingRecord {
        EmbeddingRecord { closed_host: true, ..self.clone() }
    }

    /// One record per connected component of the source.
    pub fn components(&self) -> Vec<EmbeddingRecord> {
        self.source
            .components()
            .into_iter()
            .map(|comp| EmbeddingRecord {
                source: self.source.induced(&comp),
                images: comp.iter().map(|&c| self.images[c as usize]).collect(),
                mirrors: comp.iter().map(|&c| self.mirrors[c as usize]).collect(),
                vertex_maps: comp.iter().map(|&c| self.vertex_maps[c as usize].clone()).collect(),
                closed_host: self.closed_host,
            })
            .collect()
    }
}

/// A connected manifold with corners built from copies of a 4-cell by
/// repeated doubling, with `q` pairwise non-adjacent boundary facets. The
/// facets are copies of one facet `b` of the cell; the doublings run along
/// copies of two facets non-incident to `b` and to each other.
pub fn connector(kind: TemplateKind, q: usize) -> Result<(Complex, Vec<Slot>), ConstructError> {
    if kind.dimension() != 4 {
        return Err(ConstructError::UnsupportedKind(kind));
    }
    let [a, b, c]: [u32; 3] = template(kind).nonincident_facets(3)?.try_into().expect("three facets requested");
    let mut p = Complex::new(4);
    p.add_template(kind);
    while p.cell_count() < q.max(1) {
        let s = p
            .boundary_slots()
            .into_iter()
            .find(|s| s.facet == a || s.facet == c)
            .expect("a copy of a or c is still free");
        p = double(&p, &[s])?;
    }
    let gates = (0..q as u32).map(|i| Slot::new(i, b)).collect();
    Ok((p, gates))
}

/// Embeds a closed orientable 3-manifold `m` built from dodecahedra or ideal
/// octahedra as a totally geodesic boundary-free hypersurface in a connected
/// orientable 4-manifold with corners.
pub fn embed(m: &Complex) -> Result<(Complex, EmbeddingRecord), ConstructError> {
    let kind = check_input(m)?;
    let lifting = Lifting::new(kind)?;
    let lifted = lift(m)?;
    let n = m.cell_count() as u32;
    let poles: Vec<Slot> = (0..n).map(|c| Slot::new(c, lifting.pole)).collect();
    let mut host = double(&lifted, &poles)?;

    let comps = m.components();
    if comps.len() > 1 {
        let (conn, gates) = connector(lifting.cell, comps.len())?;
        let shift = host.cell_count() as u32;
        host = host.disjoint_union(&conn);
        let tmpl = template(lifting.cell);
        let south = *tmpl.layers(lifting.pole).last().and_then(|l| l.first()).expect("layers are non-empty");
        let lat = tmpl.lattice();
        let (south_lat, south_verts) = lat.sublattice(3, south);
        for (comp, gate) in comps.iter().zip(&gates) {
            let (gate_lat, gate_verts) = lat.sublattice(3, gate.facet);
            let iso = gate_lat.isomorphisms_to(&south_lat).into_iter().min().expect("facets are congruent");
            debug_assert_eq!(gate_verts.len(), iso.len());
            let images: Vec<u32> = iso.iter().map(|&i| south_verts[i as usize]).collect();
            host.glue_images(Slot::new(gate.cell + shift, gate.facet), Slot::new(comp[0], south), images)?;
        }
    }

    let record = EmbeddingRecord {
        source: m.clone(),
        images: poles.clone(),
        mirrors: poles.iter().map(|s| Slot::new(s.cell + n, s.facet)).collect(),
        vertex_maps: vec![lifting.psi.clone(); n as usize],
        closed_host: false,
    };
    Ok((host, record))
}

/// Outcome of checking an embedding record against its host.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingCheck {
    /// The image complex rebuilt from host ridge classes is isomorphic to the source.
    pub image_isomorphic: bool,
    /// Every image slot is glued, so the image is interior.
    pub interior: bool,
    pub connected: bool,
    pub orientable: bool,
    /// For records of closed hosts, whether the host is a closed manifold.
    pub closed: Option<bool>,
}

impl EmbeddingCheck {
    pub fn passes(&self) -> bool {
        self.image_isomorphic && self.interior && self.connected && self.orientable && self.closed != Some(false)
    }
}

fn rebuild_image(host: &Complex, record: &EmbeddingRecord) -> Option<Complex> {
    let source = &record.source;
    if record.images.len() != source.cell_count() || record.vertex_maps.len() != source.cell_count() {
        return None;
    }
    let classes = FaceClasses::compute(host).ok()?;
    let mut image = Complex::new(3);
    let mut by_class: BTreeMap<usize, Vec<(u32, u32, u32)>> = BTreeMap::new();
    for (i, slot) in record.images.iter().enumerate() {
        let kind = source.cell(i as u32).shape.kind()?;
        image.add_template(kind);
        let small = template(kind).lattice();
        let lat = host.lattice(slot.cell);
        let psi = &record.vertex_maps[i];
        for f in 0..small.facet_count() as u32 {
            let mut verts: Vec<u32> = small.vertices_of(2, f).iter().map(|&y| psi[y as usize]).collect();
            verts.sort_unstable();
            let r = lat.find_dim(2, &verts)?;
            by_class.entry(classes.class_of(slot.cell, 2, r)).or_default().push((i as u32, f, r));
        }
    }
    for members in by_class.values() {
        let [(i, f, r), (j, g, r2)] = members[..] else { return None };
        let (hi, hj) = (record.images[i as usize].cell, record.images[j as usize].cell);
        let forward = classes.transport(host, 2, (hi, r), (hj, r2));
        let ridge_i = host.lattice(hi).vertices_of(2, r);
        let kind_i = source.cell(i).shape.kind()?;
        let psi_j = &record.vertex_maps[j as usize];
        let images: Vec<u32> = template(kind_i)
            .lattice()
            .vertices_of(2, f)
            .iter()
            .map(|&y| {
                let x = record.vertex_maps[i as usize][y as usize];
                let k = ridge_i.binary_search(&x).ok()?;
                psi_j.iter().position(|&z| z == forward[k]).map(|p| p as u32)
            })
            .collect::<Option<_>>()?;
        image.glue_images(Slot::new(i, f), Slot::new(j, g), images).ok()?;
    }
    Some(image)
}

/// Checks that the recorded image is the source manifold, sits in the
/// interior of the host, and that the host is connected and orientable.
pub fn verify_embedding(host: &Complex, record: &EmbeddingRecord) -> EmbeddingCheck {
    let image_isomorphic = rebuild_image(host, record).is_some_and(|img| isomorphic(&img, &record.source).is_some());
    let interior = record.images.iter().all(|&s| {
        (s.cell as usize) < host.cell_count()
            && (s.facet as usize) < host.lattice(s.cell).facet_count()
            && host.is_glued(s)
    });
    EmbeddingCheck {
        image_isomorphic,
        interior,
        connected: host.is_connected(),
        orientable: orientability(host).is_some(),
        closed: record.closed_host.then(|| validate(host).is_closed_manifold),
    }
}

/// The host cut open along the embedded image.
pub fn cut_along(host: &Complex, record: &EmbeddingRecord) -> Result<Complex, ConstructError> {
    let mut out = host.clone();
    for &s in &record.images {
        if (s.cell as usize) >= out.cell_count() || (s.facet as usize) >= out.lattice(s.cell).facet_count() {
            return Err(ConstructError::NotEmbedded(s));
        }
        out.unglue(s).ok_or(ConstructError::NotEmbedded(s))?;
    }
    Ok(out)
}
