//! Manifold checks through links of face classes.
//!
//! In a right-angled cell, the link of a face of codimension `j` is a
//! `(j-1)`-simplex whose vertices are the faces one dimension up. The link of
//! a face class is assembled from the simplices of its members, identified
//! along the gluings. An interior class must have the boundary of the
//! `j`-dimensional cross-polytope as its link; a boundary class of depth `m`
//! must have the sector of that sphere where `m` coordinates are
//! non-negative, made of `2^(j-m)` simplices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::classes::FaceClasses;
use super::{Complex, ComplexError, Slot};
use crate::catalog::orthoplex_sector;
use crate::union_find::UnionFind;

/// Shape of the link of a face class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkShape {
    pub codim: usize,
    pub corners: usize,
    /// Number of boundary strata through the class; 0 for interior classes.
    pub depth: usize,
}

impl LinkShape {
    pub fn is_interior(&self) -> bool {
        self.depth == 0
    }

    /// A codimension-2 boundary class where two cells meet at angle π.
    pub fn is_flat_ridge(&self) -> bool {
        self.codim == 2 && self.depth == 1 && self.corners == 2
    }

    /// A codimension-2 boundary class with a single corner.
    pub fn is_corner_ridge(&self) -> bool {
        self.codim == 2 && self.depth == 2 && self.corners == 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    /// Some face is identified with itself by a non-trivial map.
    InconsistentGluing,
    /// A member face does not lie on exactly `codim` faces one dimension up.
    NonSimple,
    /// Two vertices of one member's link simplex were identified.
    DegenerateLink,
    /// The link is not a cross-polytope sphere or sector.
    NotOrthoplex,
    /// Unglued walls of the link do not match its fixed vertices.
    BoundaryMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub dim: usize,
    /// A member `(cell, face)` of the offending class.
    pub at: (u32, u32),
    pub corners: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub dimension: usize,
    /// Number of checked face classes per `(codim, corner count)`.
    pub tallies: BTreeMap<(usize, usize), usize>,
    pub violations: Vec<Violation>,
    pub boundary_facets: usize,
    pub ideal_vertex_classes: usize,
    pub flat_ridges: usize,
    pub is_closed_manifold: bool,
    pub is_manifold_with_corners: bool,
    pub has_flat_boundary_ridges: bool,
}

/// Face classes together with the link shape of every class.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub classes: FaceClasses,
    /// Indexed like `classes.all()`; `None` for ideal vertices and for
    /// classes whose link failed a check.
    pub links: Vec<Option<LinkShape>>,
    pub violations: Vec<Violation>,
}

impl Analysis {
    pub fn link(&self, k: usize) -> Option<LinkShape> {
        self.links[k]
    }
}

/// Numbering of incidences `(cell, f, F)` with `F` one dimension above `f`
/// and `F` a proper face of the cell.
struct IncidenceIndex {
    starts: Vec<usize>,
}

impl IncidenceIndex {
    fn new(complex: &Complex, classes: &FaceClasses) -> IncidenceIndex {
        let n = complex.dim();
        let total = classes.index.len();
        let mut starts = vec![0usize; total + 1];
        for c in 0..complex.cell_count() as u32 {
            let lat = complex.lattice(c);
            for d in 0..n.saturating_sub(1) {
                for f in 0..lat.face_count(d) as u32 {
                    starts[classes.index.id(c, d, f) + 1] = lat.sup(d, f).len();
                }
            }
        }
        for i in 0..total {
            starts[i + 1] += starts[i];
        }
        IncidenceIndex { starts }
    }

    fn len(&self) -> usize {
        *self.starts.last().expect("sentinel present")
    }
}

/// Computes face classes and checks every link.
pub fn analyze(complex: &Complex) -> Result<Analysis, ComplexError> {
    let classes = FaceClasses::compute(complex)?;
    let n = complex.dim();
    let inc = IncidenceIndex::new(complex, &classes);
    let mut uf = UnionFind::new(inc.len());
    for g in complex.gluings() {
        let la = complex.lattice(g.from.cell);
        let lb = complex.lattice(g.to.cell);
        let src = la.vertices_of(n - 1, g.from.facet);
        let img = |v: u32| g.images[src.binary_search(&v).expect("vertex lies in facet")];
        let mut mapped = Vec::new();
        for d in 0..n.saturating_sub(1) {
            for f in la.faces_within(n - 1, g.from.facet, d) {
                mapped.clear();
                mapped.extend(la.vertices_of(d, f).iter().map(|&v| img(v)));
                let h = lb.find_dim(d, &mapped).expect("gluing maps faces to faces");
                let a = classes.index.id(g.from.cell, d, f);
                let b = classes.index.id(g.to.cell, d, h);
                for (i, &up) in la.sup(d, f).iter().enumerate() {
                    let up_verts = la.vertices_of(d + 1, up);
                    if !crate::lattice::is_subset(up_verts, src) {
                        continue;
                    }
                    mapped.clear();
                    mapped.extend(up_verts.iter().map(|&v| img(v)));
                    let up_img = lb.find_dim(d + 1, &mapped).expect("gluing maps faces to faces");
                    let j = lb.sup(d, h).binary_search(&up_img).expect("image incidence exists");
                    uf.union(inc.starts[a] + i, inc.starts[b] + j);
                }
            }
        }
    }

    let mut links = vec![None; classes.all().len()];
    let mut violations = Vec::new();
    for (k, class) in classes.all().iter().enumerate() {
        if class.ideal {
            continue;
        }
        match link_shape(complex, &classes, &inc, &mut uf, class) {
            Ok(shape) => links[k] = Some(shape),
            Err(kind) => violations.push(Violation {
                kind,
                dim: class.dim,
                at: class.members[0],
                corners: class.corner_count(),
            }),
        }
    }
    Ok(Analysis { classes, links, violations })
}

fn link_shape(
    complex: &Complex,
    classes: &FaceClasses,
    inc: &IncidenceIndex,
    uf: &mut UnionFind,
    class: &super::FaceClass,
) -> Result<LinkShape, ViolationKind> {
    let n = complex.dim();
    let d = class.dim;
    let j = n - d;
    let corners = class.corner_count();
    if j == 1 {
        let (c, f) = class.members[0];
        let glued = complex.is_glued(Slot::new(c, f));
        return match (corners, glued) {
            (2, _) => Ok(LinkShape { codim: 1, corners, depth: 0 }),
            (1, false) => Ok(LinkShape { codim: 1, corners, depth: 1 }),
            _ => Err(ViolationKind::NotOrthoplex),
        };
    }

    // link simplices as sets of vertex classes
    let mut simplices: Vec<Vec<usize>> = Vec::with_capacity(corners);
    for &(c, f) in &class.members {
        let lat = complex.lattice(c);
        let ups = lat.sup(d, f);
        if ups.len() != j {
            return Err(ViolationKind::NonSimple);
        }
        let id = classes.index.id(c, d, f);
        let mut verts: Vec<usize> = (0..j).map(|i| uf.find(inc.starts[id] + i)).collect();
        verts.sort_unstable();
        verts.dedup();
        if verts.len() != j {
            return Err(ViolationKind::DegenerateLink);
        }
        simplices.push(verts);
    }
    let all: BTreeSet<usize> = simplices.iter().flatten().copied().collect();
    let fixed: BTreeSet<usize> = all.iter().copied().filter(|v| simplices.iter().all(|s| s.contains(v))).collect();
    let m = fixed.len();
    let free: Vec<usize> = all.iter().copied().filter(|v| !fixed.contains(v)).collect();
    if free.len() != 2 * (j - m) || corners != 1 << (j - m) {
        return Err(ViolationKind::NotOrthoplex);
    }

    // pair every free vertex with the unique free vertex it never meets
    let mut relabel: BTreeMap<usize, u32> = BTreeMap::new();
    let mut pair_count = 0u32;
    for &x in &free {
        if relabel.contains_key(&x) {
            continue;
        }
        let strangers: Vec<usize> = free
            .iter()
            .copied()
            .filter(|&y| y != x && !simplices.iter().any(|s| s.contains(&x) && s.contains(&y)))
            .collect();
        if strangers.len() != 1 || relabel.contains_key(&strangers[0]) {
            return Err(ViolationKind::NotOrthoplex);
        }
        relabel.insert(x, 2 * pair_count);
        relabel.insert(strangers[0], 2 * pair_count + 1);
        pair_count += 1;
    }
    for (i, &x) in fixed.iter().enumerate() {
        relabel.insert(x, 2 * (pair_count + i as u32));
    }
    let mut mapped: Vec<Vec<u32>> = simplices
        .iter()
        .map(|s| {
            let mut t: Vec<u32> = s.iter().map(|v| relabel[v]).collect();
            t.sort_unstable();
            t
        })
        .collect();
    mapped.sort();
    let mut reference = orthoplex_sector(j, m);
    reference.sort();
    if mapped != reference {
        return Err(ViolationKind::NotOrthoplex);
    }

    // an unglued wall must sit opposite a fixed vertex, and conversely
    for &(c, f) in &class.members {
        let lat = complex.lattice(c);
        let id = classes.index.id(c, d, f);
        let ups = lat.sup(d, f);
        for wall in lat.faces_containing(d, f, n - 1) {
            let wall_verts = lat.vertices_of(n - 1, wall);
            let opposite: Vec<usize> = (0..j)
                .filter(|&i| !crate::lattice::is_subset(lat.vertices_of(d + 1, ups[i]), wall_verts))
                .collect();
            if opposite.len() != 1 {
                return Err(ViolationKind::NonSimple);
            }
            let vertex = uf.find(inc.starts[id] + opposite[0]);
            if complex.is_glued(Slot::new(c, wall)) == fixed.contains(&vertex) {
                return Err(ViolationKind::BoundaryMismatch);
            }
        }
    }
    Ok(LinkShape { codim: j, corners, depth: m })
}

/// Runs every link check and summarizes the result.
pub fn validate(complex: &Complex) -> ValidationReport {
    let boundary_facets = complex.boundary_slots().len();
    let mut report = ValidationReport {
        dimension: complex.dim(),
        tallies: BTreeMap::new(),
        violations: Vec::new(),
        boundary_facets,
        ideal_vertex_classes: 0,
        flat_ridges: 0,
        is_closed_manifold: false,
        is_manifold_with_corners: false,
        has_flat_boundary_ridges: false,
    };
    let analysis = match analyze(complex) {
        Ok(a) => a,
        Err(ComplexError::InconsistentGluing { dim, cell, face }) => {
            report.violations.push(Violation { kind: ViolationKind::InconsistentGluing, dim, at: (cell, face), corners: 0 });
            return report;
        }
        Err(_) => unreachable!("face classes only fail on inconsistent gluings"),
    };
    for (k, class) in analysis.classes.all().iter().enumerate() {
        if class.ideal {
            report.ideal_vertex_classes += 1;
            continue;
        }
        if let Some(shape) = analysis.links[k] {
            *report.tallies.entry((shape.codim, shape.corners)).or_default() += 1;
            if shape.is_flat_ridge() {
                report.flat_ridges += 1;
            }
        }
    }
    report.violations = analysis.violations;
    report.is_manifold_with_corners = report.violations.is_empty();
    report.is_closed_manifold = report.is_manifold_with_corners && boundary_facets == 0;
    report.has_flat_boundary_ridges = report.flat_ridges > 0;
    report
}
