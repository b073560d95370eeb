//! The four right-angled regular polytopes used as cells: the right-angled
//! dodecahedron, the ideal octahedron, the right-angled 120-cell and the
//! ideal 24-cell.
//!
//! Each template is generated from exact coordinates in Q(√5) the first time
//! it is requested and shared afterwards. Vertices are labelled in increasing
//! lexicographic order of their coordinates, and every other face by the
//! sorted list of its vertex labels (see [`FaceLattice`]).

mod coords;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use once_cell::race::OnceBox;
use thiserror::Error;

use crate::field::{dot, Q5};
use crate::lattice::FaceLattice;
use crate::volume::Volume;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TemplateKind {
    Dodecahedron,
    IdealOctahedron,
    Cell120,
    Cell24,
}

impl TemplateKind {
    pub const ALL: [TemplateKind; 4] = [
        TemplateKind::Dodecahedron,
        TemplateKind::IdealOctahedron,
        TemplateKind::Cell120,
        TemplateKind::Cell24,
    ];

    pub fn dimension(self) -> usize {
        match self {
            TemplateKind::Dodecahedron | TemplateKind::IdealOctahedron => 3,
            TemplateKind::Cell120 | TemplateKind::Cell24 => 4,
        }
    }

    pub fn is_ideal(self) -> bool {
        matches!(self, TemplateKind::IdealOctahedron | TemplateKind::Cell24)
    }

    /// The template every facet of `self` is isomorphic to.
    pub fn facet_kind(self) -> Option<TemplateKind> {
        match self {
            TemplateKind::Cell120 => Some(TemplateKind::Dodecahedron),
            TemplateKind::Cell24 => Some(TemplateKind::IdealOctahedron),
            _ => None,
        }
    }

    /// The four-dimensional template whose facets are copies of `self`.
    pub fn cell_above(self) -> Option<TemplateKind> {
        match self {
            TemplateKind::Dodecahedron => Some(TemplateKind::Cell120),
            TemplateKind::IdealOctahedron => Some(TemplateKind::Cell24),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TemplateKind::Dodecahedron => "dodecahedron",
            TemplateKind::IdealOctahedron => "ideal-octahedron",
            TemplateKind::Cell120 => "120-cell",
            TemplateKind::Cell24 => "24-cell",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for TemplateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown template kind `{0}`")]
pub struct UnknownKind(pub alloc::string::String);

impl FromStr for TemplateKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TemplateKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownKind(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("vertex map is not a lattice isomorphism from facet {from} to facet {to}")]
    NotALatticeMap { from: u32, to: u32 },
    #[error("no automorphism restricts to the given facet map")]
    NoExtension,
    #[error("only {found} pairwise non-incident facets found, {requested} requested")]
    NotEnoughFacets { requested: usize, found: usize },
    #[error("the canonical three-colouring exists only for the 24-cell")]
    NoThreeColoring,
}

/// Immutable combinatorial model of one right-angled regular polytope.
#[derive(Debug)]
pub struct PolytopeTemplate {
    kind: TemplateKind,
    coordinates: Vec<Vec<Q5>>,
    normals: Vec<Vec<Q5>>,
    lattice: FaceLattice,
}

impl PolytopeTemplate {
    /// Regenerates the template from coordinates. Prefer [`template`], which
    /// caches the result.
    pub fn generate(kind: TemplateKind) -> PolytopeTemplate {
        let verts = coords::vertices(kind);
        let normals = coords::facet_normals(kind);
        let n = verts.len();

        let mut with_normals: Vec<(Vec<u32>, Vec<Q5>)> = normals
            .into_iter()
            .map(|nrm| {
                let values: Vec<Q5> = verts.iter().map(|v| dot(&nrm, v)).collect();
                let top = *values.iter().max().expect("non-empty vertex set");
                let facet = (0..n as u32).filter(|&i| values[i as usize] == top).collect();
                (facet, nrm)
            })
            .collect();
        with_normals.sort();
        let (facets, normals): (Vec<Vec<u32>>, Vec<Vec<Q5>>) = with_normals.into_iter().unzip();

        let sq = |i: usize, j: usize| -> Q5 {
            let diff: Vec<Q5> = verts[i].iter().zip(&verts[j]).map(|(&a, &b)| a - b).collect();
            dot(&diff, &diff)
        };
        let mut min_len = None;
        for i in 0..n {
            for j in i + 1..n {
                let d = sq(i, j);
                if min_len.is_none_or(|m| d < m) {
                    min_len = Some(d);
                }
            }
        }
        let min_len = min_len.expect("at least two vertices");
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if sq(i, j) == min_len {
                    edges.push(vec![i as u32, j as u32]);
                }
            }
        }

        let dim = kind.dimension();
        let mut levels = vec![(0..n as u32).map(|v| vec![v]).collect::<Vec<_>>(), edges];
        if dim == 4 {
            let mut ridges = BTreeSet::new();
            for a in 0..facets.len() {
                for b in a + 1..facets.len() {
                    let common: Vec<u32> =
                        facets[a].iter().copied().filter(|v| facets[b].binary_search(v).is_ok()).collect();
                    if common.len() >= 3 {
                        ridges.insert(common);
                    }
                }
            }
            levels.push(ridges.into_iter().collect());
        }
        levels.push(facets);

        let ideal = vec![kind.is_ideal(); n];
        let lattice = FaceLattice::from_faces(dim, ideal, levels).expect("regular polytopes have valid lattices");
        PolytopeTemplate { kind, coordinates: verts, normals, lattice }
    }

    pub fn kind(&self) -> TemplateKind {
        self.kind
    }

    pub fn dimension(&self) -> usize {
        self.kind.dimension()
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    /// Exact coordinates of vertex `v`.
    pub fn coordinates(&self, v: u32) -> &[Q5] {
        &self.coordinates[v as usize]
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.lattice.f_vector()
    }

    pub fn facet_count(&self) -> usize {
        self.lattice.facet_count()
    }

    pub fn ideal_vertices(&self) -> &[bool] {
        self.lattice.ideal_flags()
    }

    pub fn volume(&self) -> Volume {
        Volume::of_cell(self.kind)
    }

    /// Facets sharing a ridge with each facet.
    pub fn facet_adjacency(&self) -> Vec<Vec<u32>> {
        facet_adjacency(&self.lattice)
    }

    /// Outward unit normal of facet `f`, exact.
    pub fn normal(&self, f: u32) -> &[Q5] {
        &self.normals[f as usize]
    }

    /// Spherical layers around facet `base`: facets grouped by the angle
    /// between their normal and the normal of `base`, nearest first.
    pub fn layers(&self, base: u32) -> Vec<Vec<u32>> {
        let b = self.normal(base);
        let mut keyed: Vec<(Q5, u32)> =
            (0..self.facet_count() as u32).map(|f| (-dot(b, self.normal(f)), f)).collect();
        keyed.sort();
        let mut out: Vec<Vec<u32>> = Vec::new();
        let mut last = None;
        for (key, f) in keyed {
            if last != Some(key) {
                out.push(Vec::new());
                last = Some(key);
            }
            out.last_mut().expect("layer just pushed").push(f);
        }
        out
    }

    /// Layer index of every facet relative to `base`.
    pub fn layer_of(&self, base: u32) -> Vec<usize> {
        let mut depth = vec![0; self.facet_count()];
        for (i, layer) in self.layers(base).iter().enumerate() {
            for &f in layer {
                depth[f as usize] = i;
            }
        }
        depth
    }

    /// Every automorphism of the face lattice, as a vertex permutation.
    /// The identity comes first. For the 120-cell this is 14400 maps.
    pub fn symmetries(&self) -> Vec<Vec<u32>> {
        self.lattice.automorphisms()
    }

    /// The automorphism carrying facet `map.source` to `map.target` and
    /// restricting to `map` on it.
    pub fn extend_facet_map(&self, map: &LatticeMap) -> Result<Vec<u32>, CatalogError> {
        extend_facet_map(&self.lattice, map)
    }

    /// Greedy list of `count` pairwise non-incident facets, in label order.
    pub fn nonincident_facets(&self, count: usize) -> Result<Vec<u32>, CatalogError> {
        let lat = &self.lattice;
        let facet_dim = lat.dim() - 1;
        let incident = |a: u32, b: u32| {
            let fa = lat.vertices_of(facet_dim, a);
            let common: Vec<u32> =
                lat.vertices_of(facet_dim, b).iter().copied().filter(|v| fa.binary_search(v).is_ok()).collect();
            common.len() >= 2 || common.iter().any(|&v| !lat.is_ideal(v))
        };
        let mut chosen: Vec<u32> = Vec::new();
        for f in 0..lat.facet_count() as u32 {
            if chosen.len() == count {
                break;
            }
            if chosen.iter().all(|&g| !incident(f, g)) {
                chosen.push(f);
            }
        }
        if chosen.len() < count {
            return Err(CatalogError::NotEnoughFacets { requested: count, found: chosen.len() });
        }
        Ok(chosen)
    }

    /// Proper 3-colouring of the 24-cell's facets: the facets in the even
    /// layers around any facet share its colour.
    pub fn canonical_three_coloring(&self) -> Result<Vec<u8>, CatalogError> {
        if self.kind != TemplateKind::Cell24 {
            return Err(CatalogError::NoThreeColoring);
        }
        let mut color = vec![u8::MAX; self.facet_count()];
        let mut next = 0u8;
        for f in 0..self.facet_count() as u32 {
            if color[f as usize] != u8::MAX {
                continue;
            }
            for (depth, layer) in self.layers(f).iter().enumerate() {
                if depth % 2 == 0 {
                    for &g in layer {
                        color[g as usize] = next;
                    }
                }
            }
            next += 1;
        }
        Ok(color)
    }
}

/// A vertex bijection between two facets of one lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeMap {
    pub source: u32,
    pub target: u32,
    /// Pairs `(v, v')`, sorted by `v`.
    pub vertex_map: Vec<(u32, u32)>,
}

impl LatticeMap {
    /// Checks that `pairs` is a bijection from the vertices of facet `source`
    /// onto those of facet `target` that carries faces to faces.
    pub fn new(lattice: &FaceLattice, source: u32, target: u32, mut pairs: Vec<(u32, u32)>) -> Result<LatticeMap, CatalogError> {
        pairs.sort_unstable();
        let err = CatalogError::NotALatticeMap { from: source, to: target };
        let fd = lattice.dim() - 1;
        let src = lattice.vertices_of(fd, source);
        if pairs.len() != src.len() || pairs.iter().zip(src).any(|(p, &v)| p.0 != v) {
            return Err(err);
        }
        let images: Vec<u32> = pairs.iter().map(|p| p.1).collect();
        if !lattice.is_facet_isomorphism(source, lattice, target, &images) {
            return Err(err);
        }
        Ok(LatticeMap { source, target, vertex_map: pairs })
    }

    pub fn identity(lattice: &FaceLattice, facet: u32) -> LatticeMap {
        let fd = lattice.dim() - 1;
        let vertex_map = lattice.vertices_of(fd, facet).iter().map(|&v| (v, v)).collect();
        LatticeMap { source: facet, target: facet, vertex_map }
    }

    pub fn images(&self) -> Vec<u32> {
        self.vertex_map.iter().map(|p| p.1).collect()
    }
}

pub(crate) fn facet_adjacency(lat: &FaceLattice) -> Vec<Vec<u32>> {
    let fd = lat.dim() - 1;
    let mut adj = vec![Vec::new(); lat.facet_count()];
    if fd == 0 {
        return adj;
    }
    for r in 0..lat.face_count(fd - 1) as u32 {
        let pair = lat.sup(fd - 1, r);
        for &a in pair {
            for &b in pair {
                if a != b {
                    adj[a as usize].push(b);
                }
            }
        }
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
        l.dedup();
    }
    adj
}

/// Extends a facet-to-facet lattice map to an automorphism of the whole
/// lattice, returned as a vertex permutation.
pub fn extend_facet_map(lat: &FaceLattice, map: &LatticeMap) -> Result<Vec<u32>, CatalogError> {
    lat.extend_facet_map(map.source, lat, map.target, &map.images()).ok_or(CatalogError::NoExtension)
}

static CACHE: [OnceBox<PolytopeTemplate>; 4] = [OnceBox::new(), OnceBox::new(), OnceBox::new(), OnceBox::new()];

/// The canonical template of `kind`. Every call returns the same instance.
pub fn template(kind: TemplateKind) -> &'static PolytopeTemplate {
    CACHE[kind.index()].get_or_init(|| alloc::boxed::Box::new(PolytopeTemplate::generate(kind)))
}

/// Reference complexes for link checks: the boundary of the `j`-dimensional
/// cross-polytope, as its top simplices over vertices `±e_i ↦ 2i, 2i+1`.
pub fn orthoplex_boundary(j: usize) -> Vec<Vec<u32>> {
    orthoplex_sector(j, 0)
}

/// The top simplices of the orthoplex boundary that contain the `m` fixed
/// vertices `+e_{j-m}, …, +e_{j-1}`: a ball made of `2^(j-m)` simplices.
pub fn orthoplex_sector(j: usize, m: usize) -> Vec<Vec<u32>> {
    assert!(m <= j);
    let free = j - m;
    let mut out = Vec::with_capacity(1 << free);
    for bits in 0..(1u32 << free) {
        let mut simplex: Vec<u32> = (0..free as u32).map(|i| 2 * i + ((bits >> i) & 1)).collect();
        simplex.extend((free as u32..j as u32).map(|i| 2 * i));
        out.push(simplex);
    }
    out
}

#[cfg(test)]
mod tests;
