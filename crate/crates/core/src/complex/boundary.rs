//! The merged boundary of a manifold with corners.
//!
//! Boundary facets of two cells that meet along a flat ridge (total angle π)
//! lie in one totally geodesic boundary facet. Merging across every flat
//! ridge gives the true facets of the boundary, each of which is itself a
//! complex of facet pieces; its faces are found by merging its own boundary
//! in turn.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::validate::{analyze, Analysis};
use super::{Complex, ComplexError, Shape, Slot};
use crate::lattice::FaceLattice;
use crate::union_find::UnionFind;

/// One facet of the merged boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedFacet {
    /// Constituent cell facets, sorted.
    pub slots: Vec<Slot>,
    /// Number of faces of the merged facet (sides, for polygons).
    pub face_count: usize,
    /// Faces of the merged facet by their own face count.
    pub census: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone)]
pub struct BoundaryComplex {
    pub dimension: usize,
    /// Merged facets, ordered by smallest constituent slot.
    pub facets: Vec<MergedFacet>,
    pub class_of: BTreeMap<Slot, usize>,
    /// Merged facets sharing a corner ridge, sorted.
    pub adjacency: Vec<Vec<usize>>,
    /// Merged facets that meet themselves along a corner ridge.
    pub self_adjacent: Vec<usize>,
}

impl BoundaryComplex {
    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of merged facets by face count.
    pub fn census(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for f in &self.facets {
            *out.entry(f.face_count).or_default() += 1;
        }
        out
    }

    /// Distinct per-facet censuses with their multiplicities.
    pub fn facet_types(&self) -> BTreeMap<BTreeMap<usize, usize>, usize> {
        let mut out = BTreeMap::new();
        for f in &self.facets {
            *out.entry(f.census.clone()).or_default() += 1;
        }
        out
    }
}

type Piece = Arc<(Arc<FaceLattice>, Vec<u32>)>;

struct Merging {
    slots: Vec<Slot>,
    class_ids: Vec<u32>,
    count: usize,
    /// Flat ridges: `(slot i, ridge in cell, slot j, ridge in cell, images)`.
    flat: Vec<(usize, u32, usize, u32, Vec<u32>)>,
    corners: Vec<(usize, usize)>,
}

fn merge(complex: &Complex, analysis: &Analysis) -> Merging {
    let n = complex.dim();
    let slots = complex.boundary_slots();
    let position: BTreeMap<Slot, usize> = slots.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut uf = UnionFind::new(slots.len());
    let mut flat = Vec::new();
    let mut corners = Vec::new();
    if n >= 2 {
        let offset = analysis.classes.dim_offset(n - 2);
        for (k, class) in analysis.classes.of_dim(n - 2).iter().enumerate() {
            let Some(shape) = analysis.link(offset + k) else { continue };
            let open_walls = |(c, r): (u32, u32)| -> Vec<usize> {
                complex
                    .lattice(c)
                    .sup(n - 2, r)
                    .iter()
                    .filter_map(|&w| position.get(&Slot::new(c, w)).copied())
                    .collect()
            };
            if shape.is_flat_ridge() {
                let (p, q) = (class.members[0], class.members[1]);
                let (wp, wq) = (open_walls(p), open_walls(q));
                if wp.len() == 1 && wq.len() == 1 {
                    uf.union(wp[0], wq[0]);
                    let images = analysis.classes.transport(complex, n - 2, p, q);
                    flat.push((wp[0], p.1, wq[0], q.1, images));
                }
            } else if shape.is_corner_ridge() {
                let w = open_walls(class.members[0]);
                if w.len() == 2 {
                    corners.push((w[0], w[1]));
                }
            }
        }
    }
    let (class_ids, count) = uf.class_ids();
    Merging { slots, class_ids, count, flat, corners }
}

fn piece(cache: &mut BTreeMap<((usize, usize), u32), Piece>, complex: &Complex, s: Slot) -> Piece {
    let shape = &complex.cell(s.cell).shape;
    let n = complex.dim();
    cache
        .entry((shape.key(), s.facet))
        .or_insert_with(|| {
            let (lat, verts) = shape.lattice().sublattice(n - 1, s.facet);
            Arc::new((Arc::new(lat), verts))
        })
        .clone()
}

fn build_subcomplex(
    complex: &Complex,
    m: &Merging,
    cache: &mut BTreeMap<((usize, usize), u32), Piece>,
) -> Complex {
    let n = complex.dim();
    let pieces: Vec<Piece> = m.slots.iter().map(|&s| piece(cache, complex, s)).collect();
    let mut sub = Complex::new(n - 1);
    for p in &pieces {
        sub.add_cell(Shape::Custom(p.0.clone())).expect("facet pieces have dimension n-1");
    }
    let local = |i: usize, v: u32| pieces[i].1.binary_search(&v).expect("vertex of the facet") as u32;
    for (i, r, j, r2, images) in &m.flat {
        let (ci, cj) = (m.slots[*i].cell, m.slots[*j].cell);
        let ridge_i: Vec<u32> = complex.lattice(ci).vertices_of(n - 2, *r).iter().map(|&v| local(*i, v)).collect();
        let ridge_j: Vec<u32> = complex.lattice(cj).vertices_of(n - 2, *r2).iter().map(|&v| local(*j, v)).collect();
        let fi = pieces[*i].0.find_dim(n - 2, &ridge_i).expect("ridge is a facet of its piece");
        let fj = pieces[*j].0.find_dim(n - 2, &ridge_j).expect("ridge is a facet of its piece");
        let local_images: Vec<u32> = images.iter().map(|&w| local(*j, w)).collect();
        // local labels preserve order, so `local_images` stays aligned
        sub.glue_images(Slot::new(*i as u32, fi), Slot::new(*j as u32, fj), local_images)
            .expect("flat ridges glue facet pieces isomorphically");
    }
    sub
}

/// The boundary as an `(n-1)`-complex: one cell per boundary facet (in slot
/// order, returned alongside), glued across flat ridges.
pub fn boundary_subcomplex(complex: &Complex) -> Result<(Complex, Vec<Slot>), ComplexError> {
    let analysis = analyze(complex)?;
    let m = merge(complex, &analysis);
    let mut cache = BTreeMap::new();
    let sub = build_subcomplex(complex, &m, &mut cache);
    Ok((sub, m.slots))
}

/// The merged boundary class of every boundary slot, without censuses.
/// Classes are numbered by smallest slot.
pub fn merged_classes(complex: &Complex) -> Result<BTreeMap<Slot, usize>, ComplexError> {
    let analysis = analyze(complex)?;
    let m = merge(complex, &analysis);
    Ok(m.slots.iter().enumerate().map(|(i, &s)| (s, m.class_ids[i] as usize)).collect())
}

/// Merged boundary facets, their face censuses and their adjacency graph.
pub fn boundary_complex(complex: &Complex) -> Result<BoundaryComplex, ComplexError> {
    let mut cache = BTreeMap::new();
    boundary_complex_cached(complex, &mut cache)
}

fn boundary_complex_cached(
    complex: &Complex,
    cache: &mut BTreeMap<((usize, usize), u32), Piece>,
) -> Result<BoundaryComplex, ComplexError> {
    let n = complex.dim();
    let analysis = analyze(complex)?;
    let m = merge(complex, &analysis);
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); m.count];
    for (i, &k) in m.class_ids.iter().enumerate() {
        members[k as usize].push(i);
    }
    let sub = if n >= 2 { Some(build_subcomplex(complex, &m, cache)) } else { None };

    let mut facets = Vec::with_capacity(m.count);
    for cells in &members {
        let slots: Vec<Slot> = cells.iter().map(|&i| m.slots[i]).collect();
        let (face_count, census) = match &sub {
            Some(sub) if n >= 3 => {
                let cells_u32: Vec<u32> = cells.iter().map(|&i| i as u32).collect();
                let piece_complex = sub.induced(&cells_u32);
                let inner = boundary_complex_cached(&piece_complex, cache)?;
                (inner.facets.len(), inner.census())
            }
            Some(sub) => {
                let cells_u32: Vec<u32> = cells.iter().map(|&i| i as u32).collect();
                (sub.induced(&cells_u32).boundary_slots().len(), BTreeMap::new())
            }
            None => (0, BTreeMap::new()),
        };
        facets.push(MergedFacet { slots, face_count, census });
    }

    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); m.count];
    let mut self_adjacent = Vec::new();
    for &(a, b) in &m.corners {
        let (x, y) = (m.class_ids[a] as usize, m.class_ids[b] as usize);
        if x == y {
            self_adjacent.push(x);
        } else {
            adjacency[x].push(y);
            adjacency[y].push(x);
        }
    }
    for l in adjacency.iter_mut() {
        l.sort_unstable();
        l.dedup();
    }
    self_adjacent.sort_unstable();
    self_adjacent.dedup();
    let class_of = m.slots.iter().enumerate().map(|(i, &s)| (s, m.class_ids[i] as usize)).collect();
    Ok(BoundaryComplex { dimension: n - 1, facets, class_of, adjacency, self_adjacent })
}
