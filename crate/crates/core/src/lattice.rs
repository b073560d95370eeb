//! Face lattices of polytopes, their flags, and flag-driven isomorphisms.
//!
//! A face is stored as the sorted list of its vertex labels. Faces of each
//! dimension are sorted lexicographically by that list, so the labels are a
//! pure function of the vertex labelling.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("face list for dimension 0 must be the singletons 0..n")]
    BadVertices,
    #[error("diamond property fails at flag {flag:?}, position {position}")]
    NotDiamond { flag: Vec<u32>, position: usize },
    #[error("flag graph is not bipartite")]
    NonOrientable,
}

/// The face lattice of an abstract polytope of dimension `dim`.
#[derive(Debug, Clone)]
pub struct FaceLattice {
    dim: usize,
    ideal: Vec<bool>,
    faces: Vec<Vec<Vec<u32>>>,
    sub: Vec<Vec<Vec<u32>>>,
    sup: Vec<Vec<Vec<u32>>>,
    lookup: BTreeMap<Vec<u32>, (usize, u32)>,
    flags: Vec<u32>,
    flag_adj: Vec<u32>,
    flag_sign: Vec<i8>,
}

impl PartialEq for FaceLattice {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.ideal == other.ideal && self.faces == other.faces
    }
}

impl Eq for FaceLattice {}

impl FaceLattice {
    /// Builds a lattice from its proper faces graded by dimension.
    /// `faces[0]` must list the vertices as singletons.
    pub fn from_faces(
        dim: usize,
        ideal: Vec<bool>,
        mut faces: Vec<Vec<Vec<u32>>>,
    ) -> Result<FaceLattice, LatticeError> {
        assert!(dim >= 1 && faces.len() == dim);
        for level in faces.iter_mut() {
            for f in level.iter_mut() {
                f.sort_unstable();
                f.dedup();
            }
            level.sort();
            level.dedup();
        }
        let n = ideal.len();
        if faces[0].len() != n || faces[0].iter().enumerate().any(|(i, f)| f != &[i as u32]) {
            return Err(LatticeError::BadVertices);
        }

        // vertex -> faces of each dimension containing it
        let mut vert_faces: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); n]; dim];
        for (d, level) in faces.iter().enumerate() {
            for (i, f) in level.iter().enumerate() {
                for &v in f {
                    vert_faces[d][v as usize].push(i as u32);
                }
            }
        }
        let mut sub: Vec<Vec<Vec<u32>>> = vec![Vec::new(); dim];
        let mut sup: Vec<Vec<Vec<u32>>> = vec![Vec::new(); dim];
        for d in 0..dim {
            sub[d] = vec![Vec::new(); faces[d].len()];
            sup[d] = vec![Vec::new(); faces[d].len()];
        }
        for d in 1..dim {
            for (g, gv) in faces[d - 1].iter().enumerate() {
                for &f in &vert_faces[d][gv[0] as usize] {
                    if is_subset(gv, &faces[d][f as usize]) {
                        sub[d][f as usize].push(g as u32);
                        sup[d - 1][g].push(f);
                    }
                }
            }
        }
        for d in 0..dim {
            for l in sub[d].iter_mut().chain(sup[d].iter_mut()) {
                l.sort_unstable();
            }
        }

        let mut lookup = BTreeMap::new();
        for (d, level) in faces.iter().enumerate() {
            for (i, f) in level.iter().enumerate() {
                lookup.insert(f.clone(), (d, i as u32));
            }
        }

        let mut lattice = FaceLattice {
            dim,
            ideal,
            faces,
            sub,
            sup,
            lookup,
            flags: Vec::new(),
            flag_adj: Vec::new(),
            flag_sign: Vec::new(),
        };
        lattice.build_flags()?;
        Ok(lattice)
    }

    fn build_flags(&mut self) -> Result<(), LatticeError> {
        let dim = self.dim;
        let mut chains: Vec<Vec<u32>> = Vec::new();
        let mut chain = vec![0u32; dim];
        for f in 0..self.faces[dim - 1].len() as u32 {
            chain[dim - 1] = f;
            self.collect_chains(dim - 1, &mut chain, &mut chains);
        }
        chains.sort();
        self.flags = chains.concat();
        let count = chains.len();

        let mut adj = vec![0u32; count * dim];
        for x in 0..count {
            let flag = &chains[x];
            for i in 0..dim {
                let candidates: Vec<u32> = if i == 0 {
                    if dim == 1 {
                        (0..self.faces[0].len() as u32).collect()
                    } else {
                        self.sub[1][flag[1] as usize].clone()
                    }
                } else {
                    let above = &self.sup[i - 1][flag[i - 1] as usize];
                    if i + 1 < dim {
                        let within = &self.sub[i + 1][flag[i + 1] as usize];
                        above.iter().copied().filter(|g| within.binary_search(g).is_ok()).collect()
                    } else {
                        above.clone()
                    }
                };
                let others: Vec<u32> = candidates.into_iter().filter(|&g| g != flag[i]).collect();
                if others.len() != 1 {
                    return Err(LatticeError::NotDiamond { flag: flag.clone(), position: i });
                }
                let mut next = flag.clone();
                next[i] = others[0];
                let y = chains.binary_search(&next).expect("neighbouring chain is a flag");
                adj[x * dim + i] = y as u32;
            }
        }
        self.flag_adj = adj;

        let mut sign = vec![0i8; count];
        if count > 0 {
            sign[0] = 1;
            let mut queue = VecDeque::from([0usize]);
            while let Some(x) = queue.pop_front() {
                for i in 0..dim {
                    let y = self.flag_adj[x * dim + i] as usize;
                    if sign[y] == 0 {
                        sign[y] = -sign[x];
                        queue.push_back(y);
                    } else if sign[y] == sign[x] {
                        return Err(LatticeError::NonOrientable);
                    }
                }
            }
        }
        self.flag_sign = sign;
        Ok(())
    }

    fn collect_chains(&self, d: usize, chain: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if d == 0 {
            out.push(chain.clone());
            return;
        }
        let f = chain[d] as usize;
        for &g in &self.sub[d][f] {
            chain[d - 1] = g;
            self.collect_chains(d - 1, chain, out);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.ideal.len()
    }

    pub fn facet_count(&self) -> usize {
        self.faces[self.dim - 1].len()
    }

    pub fn face_count(&self, d: usize) -> usize {
        self.faces[d].len()
    }

    /// Face counts by dimension, vertices first.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn faces(&self, d: usize) -> &[Vec<u32>] {
        &self.faces[d]
    }

    pub fn vertices_of(&self, d: usize, i: u32) -> &[u32] {
        &self.faces[d][i as usize]
    }

    /// The `(d-1)`-faces of face `(d, i)`.
    pub fn sub(&self, d: usize, i: u32) -> &[u32] {
        &self.sub[d][i as usize]
    }

    /// The `(d+1)`-faces containing face `(d, i)`; empty for facets.
    pub fn sup(&self, d: usize, i: u32) -> &[u32] {
        &self.sup[d][i as usize]
    }

    pub fn is_ideal(&self, v: u32) -> bool {
        self.ideal[v as usize]
    }

    pub fn ideal_flags(&self) -> &[bool] {
        &self.ideal
    }

    pub fn has_ideal_vertices(&self) -> bool {
        self.ideal.iter().any(|&b| b)
    }

    /// Looks up a face by its (unsorted) vertex set.
    pub fn find(&self, vertices: &[u32]) -> Option<(usize, u32)> {
        let mut key = vertices.to_vec();
        key.sort_unstable();
        self.lookup.get(&key).copied()
    }

    /// Looks up a face of dimension `d` by vertex set.
    pub fn find_dim(&self, d: usize, vertices: &[u32]) -> Option<u32> {
        match self.find(vertices) {
            Some((e, i)) if e == d => Some(i),
            _ => None,
        }
    }

    /// All faces of dimension `d` contained in face `(outer_dim, outer)`.
    pub fn faces_within(&self, outer_dim: usize, outer: u32, d: usize) -> Vec<u32> {
        assert!(d <= outer_dim);
        let mut level: BTreeSet<u32> = BTreeSet::from([outer]);
        let mut cur = outer_dim;
        while cur > d {
            level = level.iter().flat_map(|&f| self.sub[cur][f as usize].iter().copied()).collect();
            cur -= 1;
        }
        level.into_iter().collect()
    }

    /// All faces of dimension `d` (`d < dim`) containing face `(inner_dim, inner)`.
    pub fn faces_containing(&self, inner_dim: usize, inner: u32, d: usize) -> Vec<u32> {
        assert!(inner_dim <= d && d < self.dim);
        let mut level: BTreeSet<u32> = BTreeSet::from([inner]);
        let mut cur = inner_dim;
        while cur < d {
            level = level.iter().flat_map(|&f| self.sup[cur][f as usize].iter().copied()).collect();
            cur += 1;
        }
        level.into_iter().collect()
    }

    pub fn contains(&self, outer_dim: usize, outer: u32, inner_dim: usize, inner: u32) -> bool {
        inner_dim <= outer_dim
            && is_subset(&self.faces[inner_dim][inner as usize], &self.faces[outer_dim][outer as usize])
    }

    pub fn flag_count(&self) -> usize {
        self.flag_sign.len()
    }

    /// The chain `(f_0, …, f_{dim-1})` of flag `x`.
    pub fn flag(&self, x: u32) -> &[u32] {
        let x = x as usize;
        &self.flags[x * self.dim..(x + 1) * self.dim]
    }

    /// The flag differing from `x` only in its `i`-face.
    pub fn flag_neighbor(&self, x: u32, i: usize) -> u32 {
        self.flag_adj[x as usize * self.dim + i]
    }

    /// Orientation class (+1 / -1) of a flag; flag 0 is positive.
    pub fn flag_sign(&self, x: u32) -> i8 {
        self.flag_sign[x as usize]
    }

    pub fn find_flag(&self, chain: &[u32]) -> Option<u32> {
        let dim = self.dim;
        let (mut lo, mut hi) = (0usize, self.flag_count());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.flags[mid * dim..(mid + 1) * dim].cmp(chain) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return Some(mid as u32),
            }
        }
        None
    }

    /// First flag whose top face is facet `f`.
    pub fn flag_on_facet(&self, f: u32) -> u32 {
        let mut chain = vec![0u32; self.dim];
        chain[self.dim - 1] = f;
        let mut d = self.dim - 1;
        while d > 0 {
            chain[d - 1] = self.sub[d][chain[d] as usize][0];
            d -= 1;
        }
        self.find_flag(&chain).expect("descending chain is a flag")
    }

    /// Image of flag `x` under a vertex map into `target`.
    pub fn map_flag(&self, target: &FaceLattice, vmap: &[u32], x: u32) -> Option<u32> {
        let chain: Option<Vec<u32>> = self
            .flag(x)
            .iter()
            .enumerate()
            .map(|(d, &f)| {
                let img: Vec<u32> = self.faces[d][f as usize].iter().map(|&v| vmap[v as usize]).collect();
                target.find_dim(d, &img)
            })
            .collect();
        target.find_flag(&chain?)
    }

    /// The isomorphism onto `target` carrying flag `from` to flag `to`, as a
    /// vertex map, or `None` if flag propagation is inconsistent.
    pub fn isomorphism(&self, target: &FaceLattice, from: u32, to: u32) -> Option<Vec<u32>> {
        if self.dim != target.dim || self.flag_count() != target.flag_count() {
            return None;
        }
        let dim = self.dim;
        let mut image = vec![u32::MAX; self.flag_count()];
        image[from as usize] = to;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            let fx = image[x as usize];
            for i in 0..dim {
                let y = self.flag_neighbor(x, i);
                let fy = target.flag_neighbor(fx, i);
                let slot = &mut image[y as usize];
                if *slot == u32::MAX {
                    *slot = fy;
                    queue.push_back(y);
                } else if *slot != fy {
                    return None;
                }
            }
        }
        if image.contains(&u32::MAX) {
            return None;
        }
        // induced face maps must be well defined and injective
        let mut vmap = Vec::new();
        for d in 0..dim {
            let mut map = vec![u32::MAX; self.faces[d].len()];
            for x in 0..self.flag_count() as u32 {
                let src = self.flag(x)[d] as usize;
                let dst = target.flag(image[x as usize])[d];
                if map[src] == u32::MAX {
                    map[src] = dst;
                } else if map[src] != dst {
                    return None;
                }
            }
            let mut seen = vec![false; target.faces[d].len()];
            for &m in &map {
                if m == u32::MAX || core::mem::replace(&mut seen[m as usize], true) {
                    return None;
                }
            }
            if d == 0 {
                vmap = map;
            }
        }
        Some(vmap)
    }

    /// All automorphisms as vertex permutations, in the order of the image of
    /// flag 0. The identity comes first.
    pub fn automorphisms(&self) -> Vec<Vec<u32>> {
        (0..self.flag_count() as u32)
            .filter_map(|t| self.isomorphism(self, 0, t))
            .collect()
    }

    /// All isomorphisms onto `target`, sorted lexicographically as vertex maps.
    pub fn isomorphisms_to(&self, target: &FaceLattice) -> Vec<Vec<u32>> {
        if self.flag_count() == 0 {
            return Vec::new();
        }
        let mut out: Vec<Vec<u32>> = (0..target.flag_count() as u32)
            .filter_map(|t| self.isomorphism(target, 0, t))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Whether a vertex map is an isomorphism onto `target`: it must be a
    /// bijection carrying every face to a face of the same dimension.
    pub fn is_isomorphism(&self, target: &FaceLattice, vmap: &[u32]) -> bool {
        if self.dim != target.dim || vmap.len() != self.vertex_count() || self.f_vector() != target.f_vector() {
            return false;
        }
        let mut seen = vec![false; target.vertex_count()];
        for &v in vmap {
            if v as usize >= seen.len() || core::mem::replace(&mut seen[v as usize], true) {
                return false;
            }
        }
        self.faces.iter().enumerate().all(|(d, level)| {
            level.iter().all(|f| {
                let img: Vec<u32> = f.iter().map(|&v| vmap[v as usize]).collect();
                target.find_dim(d, &img).is_some()
            })
        })
    }

    /// Orientation character of an automorphism: +1 if it preserves flag signs.
    pub fn parity(&self, vmap: &[u32]) -> i8 {
        let img = self.map_flag(self, vmap, 0).expect("vertex map is an automorphism");
        self.flag_sign(img)
    }

    /// Whether `images` (aligned with the sorted vertices of facet `facet`)
    /// is a lattice isomorphism onto facet `target_facet` of `target`.
    pub fn is_facet_isomorphism(&self, facet: u32, target: &FaceLattice, target_facet: u32, images: &[u32]) -> bool {
        if target.dim != self.dim {
            return false;
        }
        let fd = self.dim - 1;
        let src = self.vertices_of(fd, facet);
        let dst = target.vertices_of(fd, target_facet);
        if images.len() != src.len() || dst.len() != src.len() {
            return false;
        }
        let mut sorted = images.to_vec();
        sorted.sort_unstable();
        if sorted != dst {
            return false;
        }
        for d in 1..fd {
            let inside = self.faces_within(fd, facet, d);
            if inside.len() != target.faces_within(fd, target_facet, d).len() {
                return false;
            }
            for g in inside {
                let img: Vec<u32> = self.faces[d][g as usize]
                    .iter()
                    .map(|v| images[src.binary_search(v).expect("vertex in facet")])
                    .collect();
                if target.find_dim(d, &img).is_none() {
                    return false;
                }
            }
        }
        true
    }

    /// The isomorphism onto `target` that carries facet `facet` to
    /// `target_facet` and restricts to `images` there (aligned with the sorted
    /// vertices of `facet`), if one exists.
    pub fn extend_facet_map(&self, facet: u32, target: &FaceLattice, target_facet: u32, images: &[u32]) -> Option<Vec<u32>> {
        if !self.is_facet_isomorphism(facet, target, target_facet, images) {
            return None;
        }
        let fd = self.dim - 1;
        let src = self.vertices_of(fd, facet);
        let img_of = |v: u32| images[src.binary_search(&v).expect("vertex in facet")];
        let x = self.flag_on_facet(facet);
        let mut chain = Vec::with_capacity(self.dim);
        for (d, &f) in self.flag(x).iter().enumerate() {
            if d == fd {
                chain.push(target_facet);
            } else {
                let img: Vec<u32> = self.faces[d][f as usize].iter().map(|&v| img_of(v)).collect();
                chain.push(target.find_dim(d, &img)?);
            }
        }
        let y = target.find_flag(&chain)?;
        let map = self.isomorphism(target, x, y)?;
        if src.iter().any(|&v| map[v as usize] != img_of(v)) {
            return None;
        }
        Some(map)
    }

    /// The image under a facet map of the first flag on `facet`, together
    /// with that flag. Used to compare orientations across a gluing.
    pub fn transported_flag(&self, facet: u32, target: &FaceLattice, target_facet: u32, images: &[u32]) -> Option<(u32, u32)> {
        let fd = self.dim - 1;
        let src = self.vertices_of(fd, facet);
        let x = self.flag_on_facet(facet);
        let mut chain = Vec::with_capacity(self.dim);
        for (d, &f) in self.flag(x).iter().enumerate() {
            if d == fd {
                chain.push(target_facet);
            } else {
                let img: Vec<u32> = self.faces[d][f as usize]
                    .iter()
                    .map(|v| src.binary_search(v).ok().and_then(|i| images.get(i).copied()))
                    .collect::<Option<Vec<u32>>>()?;
                chain.push(target.find_dim(d, &img)?);
            }
        }
        Some((x, target.find_flag(&chain)?))
    }

    /// The lattice of face `(d, i)`, with its vertices relabelled `0..k` in
    /// increasing order. Returns the lattice and the local-to-parent labels.
    pub fn sublattice(&self, d: usize, i: u32) -> (FaceLattice, Vec<u32>) {
        assert!(d >= 1);
        let verts = self.faces[d][i as usize].clone();
        let local = |v: u32| verts.binary_search(&v).expect("vertex of face") as u32;
        let mut levels = Vec::with_capacity(d);
        for e in 0..d {
            let level: Vec<Vec<u32>> = self
                .faces_within(d, i, e)
                .into_iter()
                .map(|g| self.faces[e][g as usize].iter().map(|&v| local(v)).collect())
                .collect();
            levels.push(level);
        }
        let ideal = verts.iter().map(|&v| self.ideal[v as usize]).collect();
        let lattice = FaceLattice::from_faces(d, ideal, levels).expect("faces of a polytope are polytopes");
        (lattice, verts)
    }

    /// The vertex figure at `v`: its vertices are the edges through `v` in
    /// increasing label order, and its `k`-faces are the `(k+1)`-faces through `v`.
    pub fn vertex_figure(&self, v: u32) -> (FaceLattice, Vec<u32>) {
        assert!(self.dim >= 2);
        let edges = self.sup[0][v as usize].clone();
        let local_edge = |e: u32| edges.binary_search(&e).expect("edge through vertex") as u32;
        let mut levels = Vec::with_capacity(self.dim - 1);
        for k in 0..self.dim - 1 {
            let level: Vec<Vec<u32>> = self
                .faces_containing(0, v, k + 1)
                .into_iter()
                .map(|f| self.faces_within(k + 1, f, 1).into_iter().filter(|e| edges.binary_search(e).is_ok()).map(local_edge).collect())
                .collect();
            levels.push(level);
        }
        let ideal = vec![false; edges.len()];
        let lattice = FaceLattice::from_faces(self.dim - 1, ideal, levels).expect("vertex figures are polytopes");
        (lattice, edges)
    }
}

pub(crate) fn is_subset(small: &[u32], big: &[u32]) -> bool {
    let mut j = 0;
    for &x in small {
        while j < big.len() && big[j] < x {
            j += 1;
        }
        if j == big.len() || big[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> FaceLattice {
        FaceLattice::from_faces(
            2,
            vec![false; 4],
            vec![
                vec![vec![0], vec![1], vec![2], vec![3]],
                vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
            ],
        )
        .unwrap()
    }

    #[test]
    fn square_flags_and_automorphisms() {
        let sq = square();
        assert_eq!(sq.f_vector(), vec![4, 4]);
        assert_eq!(sq.flag_count(), 8);
        let autos = sq.automorphisms();
        assert_eq!(autos.len(), 8);
        assert_eq!(autos[0], vec![0, 1, 2, 3]);
        let pos = autos.iter().filter(|a| sq.parity(a) == 1).count();
        assert_eq!(pos, 4);
    }

    #[test]
    fn rejects_non_diamond() {
        // three edges through one vertex
        let r = FaceLattice::from_faces(
            2,
            vec![false; 4],
            vec![vec![vec![0], vec![1], vec![2], vec![3]], vec![vec![0, 1], vec![0, 2], vec![0, 3]]],
        );
        assert!(matches!(r, Err(LatticeError::NotDiamond { .. })));
    }

    #[test]
    fn subset_helper() {
        assert!(is_subset(&[1, 3], &[0, 1, 2, 3]));
        assert!(!is_subset(&[1, 4], &[0, 1, 2, 3]));
        assert!(is_subset(&[], &[0]));
    }
}
