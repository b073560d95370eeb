//! Face classes: orbits of cell faces under the gluing maps.
//!
//! Every gluing is applied to the whole lattice of its facet, identifying
//! faces of every dimension at once in a union-find over `(cell, face)`
//! pairs. A second union-find over `(cell, face, vertex position)` records
//! how the vertices of identified faces correspond, which detects faces
//! identified with themselves by a non-trivial map and lets later stages
//! transport vertices between members of a class.

use alloc::vec;
use alloc::vec::Vec;

use super::{Complex, ComplexError, Slot};
use crate::lattice::FaceLattice;
use crate::union_find::UnionFind;

/// Dense numbering of all `(cell, dim, face)` triples of a complex.
#[derive(Debug, Clone)]
pub(crate) struct FaceIndex {
    dim: usize,
    starts: Vec<usize>,
}

impl FaceIndex {
    pub(crate) fn new(complex: &Complex) -> FaceIndex {
        let dim = complex.dim();
        let mut starts = Vec::with_capacity(complex.cell_count() * dim + 1);
        let mut next = 0;
        for c in 0..complex.cell_count() as u32 {
            let lat = complex.lattice(c);
            for d in 0..dim {
                starts.push(next);
                next += lat.face_count(d);
            }
        }
        starts.push(next);
        FaceIndex { dim, starts }
    }

    pub(crate) fn id(&self, cell: u32, d: usize, face: u32) -> usize {
        self.starts[cell as usize * self.dim + d] + face as usize
    }

    pub(crate) fn len(&self) -> usize {
        *self.starts.last().expect("sentinel present")
    }

    /// Inverse of `id`.
    pub(crate) fn locate(&self, id: usize) -> (u32, usize, u32) {
        let k = self.starts.partition_point(|&s| s <= id) - 1;
        ((k / self.dim) as u32, k % self.dim, (id - self.starts[k]) as u32)
    }
}

/// An equivalence class of faces under the gluings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceClass {
    pub dim: usize,
    /// `(cell, face)` pairs, sorted.
    pub members: Vec<(u32, u32)>,
    /// Whether the class is an ideal vertex.
    pub ideal: bool,
}

impl FaceClass {
    pub fn corner_count(&self) -> usize {
        self.members.len()
    }

    pub fn codim(&self, n: usize) -> usize {
        n - self.dim
    }
}

/// All face classes of a complex, with vertex correspondences.
#[derive(Debug, Clone)]
pub struct FaceClasses {
    pub(crate) index: FaceIndex,
    class_of: Vec<u32>,
    classes: Vec<FaceClass>,
    by_dim: Vec<(usize, usize)>,
    pos_start: Vec<usize>,
    pos_class: Vec<u32>,
}

/// Calls `visit(d, g, h, images_of_g)` for every face `g` of facet `from`
/// and its image `h` under the gluing, in every dimension `d < n`.
pub(crate) fn for_each_face_pair(
    la: &FaceLattice,
    from_facet: u32,
    lb: &FaceLattice,
    images: &[u32],
    mut visit: impl FnMut(usize, u32, u32, &[u32]),
) {
    let fd = la.dim() - 1;
    let src = la.vertices_of(fd, from_facet);
    let img = |v: u32| images[src.binary_search(&v).expect("vertex lies in facet")];
    let mut mapped = Vec::new();
    for d in 0..=fd {
        for g in la.faces_within(fd, from_facet, d) {
            mapped.clear();
            mapped.extend(la.vertices_of(d, g).iter().map(|&v| img(v)));
            let h = lb.find_dim(d, &mapped).expect("gluing maps faces to faces");
            visit(d, g, h, &mapped);
        }
    }
}

impl FaceClasses {
    pub fn compute(complex: &Complex) -> Result<FaceClasses, ComplexError> {
        let n = complex.dim();
        let index = FaceIndex::new(complex);
        let total = index.len();

        // vertex positions of every face of positive dimension
        let mut pos_start = vec![0usize; total + 1];
        for c in 0..complex.cell_count() as u32 {
            let lat = complex.lattice(c);
            for d in 0..n {
                for f in 0..lat.face_count(d) as u32 {
                    let id = index.id(c, d, f);
                    pos_start[id + 1] = if d == 0 { 0 } else { lat.vertices_of(d, f).len() };
                }
            }
        }
        for i in 0..total {
            pos_start[i + 1] += pos_start[i];
        }

        let mut faces = UnionFind::new(total);
        let mut positions = UnionFind::new(pos_start[total]);
        for g in complex.gluings() {
            let la = complex.lattice(g.from.cell);
            let lb = complex.lattice(g.to.cell);
            for_each_face_pair(la, g.from.facet, lb, &g.images, |d, f, h, mapped| {
                let a = index.id(g.from.cell, d, f);
                let b = index.id(g.to.cell, d, h);
                faces.union(a, b);
                if d > 0 {
                    let target = lb.vertices_of(d, h);
                    for (i, w) in mapped.iter().enumerate() {
                        let j = target.binary_search(w).expect("image vertex in image face");
                        positions.union(pos_start[a] + i, pos_start[b] + j);
                    }
                }
            });
        }

        for id in 0..total {
            let (s, e) = (pos_start[id], pos_start[id + 1]);
            for i in s..e {
                for j in i + 1..e {
                    if positions.same(i, j) {
                        let (cell, dim, face) = index.locate(id);
                        return Err(ComplexError::InconsistentGluing { dim, cell, face });
                    }
                }
            }
        }

        let (ids, _) = positions.class_ids();
        let pos_class = ids;

        // classes ordered by dimension, then by smallest member
        let mut class_of = vec![u32::MAX; total];
        let mut classes: Vec<FaceClass> = Vec::new();
        let mut by_dim = Vec::with_capacity(n);
        let mut root_class = vec![u32::MAX; total];
        for d in 0..n {
            let first = classes.len();
            for c in 0..complex.cell_count() as u32 {
                let lat = complex.lattice(c);
                for f in 0..lat.face_count(d) as u32 {
                    let id = index.id(c, d, f);
                    let r = faces.find(id);
                    if root_class[r] == u32::MAX {
                        root_class[r] = classes.len() as u32;
                        let ideal = d == 0 && lat.is_ideal(f);
                        classes.push(FaceClass { dim: d, members: Vec::new(), ideal });
                    }
                    let k = root_class[r];
                    class_of[id] = k;
                    classes[k as usize].members.push((c, f));
                }
            }
            by_dim.push((first, classes.len()));
        }
        Ok(FaceClasses { index, class_of, classes, by_dim, pos_start, pos_class })
    }

    pub fn all(&self) -> &[FaceClass] {
        &self.classes
    }

    pub fn of_dim(&self, d: usize) -> &[FaceClass] {
        let (s, e) = self.by_dim[d];
        &self.classes[s..e]
    }

    /// Global index of the first class of dimension `d`.
    pub fn dim_offset(&self, d: usize) -> usize {
        self.by_dim[d].0
    }

    /// Global class index of face `(cell, d, face)`.
    pub fn class_of(&self, cell: u32, d: usize, face: u32) -> usize {
        self.class_of[self.index.id(cell, d, face)] as usize
    }

    pub fn class(&self, k: usize) -> &FaceClass {
        &self.classes[k]
    }

    /// Identifier shared by corresponding vertex positions of identified
    /// faces: position `i` of face `(cell, d, face)` (its `i`-th smallest
    /// vertex). Requires `d > 0`.
    pub fn position_class(&self, cell: u32, d: usize, face: u32, i: usize) -> u32 {
        self.pos_class[self.pos_start[self.index.id(cell, d, face)] + i]
    }

    /// For two members of one class of dimension `d`, the vertex map
    /// from the first to the second induced by the gluings, aligned with the
    /// sorted vertices of the first.
    pub fn transport(&self, complex: &Complex, d: usize, from: (u32, u32), to: (u32, u32)) -> Vec<u32> {
        if d == 0 {
            return vec![to.1];
        }
        let src_len = complex.lattice(from.0).vertices_of(d, from.1).len();
        let dst = complex.lattice(to.0).vertices_of(d, to.1);
        let dst_classes: Vec<u32> = (0..dst.len()).map(|j| self.position_class(to.0, d, to.1, j)).collect();
        (0..src_len)
            .map(|i| {
                let k = self.position_class(from.0, d, from.1, i);
                let j = dst_classes.iter().position(|&x| x == k).expect("members of one class correspond");
                dst[j]
            })
            .collect()
    }

    /// Slot-level helper: the class of facet `s`.
    pub fn facet_class(&self, n: usize, s: Slot) -> usize {
        self.class_of(s.cell, n - 1, s.facet)
    }
}

/// Face classes of dimension `dim`.
pub fn face_classes(complex: &Complex, dim: usize) -> Result<Vec<FaceClass>, ComplexError> {
    assert!(dim < complex.dim(), "face dimension must be below the complex dimension");
    Ok(FaceClasses::compute(complex)?.of_dim(dim).to_vec())
}
