//! Isomorphism of complexes.
//!
//! A component is matched by choosing the image of one root cell together
//! with a lattice isomorphism for it; every gluing then determines the image
//! of the neighbouring cell and its map uniquely, so each choice is checked
//! by propagation alone.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Complex, Slot};
use crate::lattice::FaceLattice;

/// A cell bijection with a vertex map per cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexIsomorphism {
    pub cells: Vec<u32>,
    pub vertex_maps: Vec<Vec<u32>>,
}

impl ComplexIsomorphism {
    pub fn is_identity(&self) -> bool {
        self.cells.iter().enumerate().all(|(i, &c)| c as usize == i)
            && self.vertex_maps.iter().all(|m| m.iter().enumerate().all(|(i, &v)| v as usize == i))
    }
}

fn cell_signature(c: &Complex, cell: u32) -> (Vec<usize>, usize, usize) {
    let lat = c.lattice(cell);
    let mut glued = 0;
    let mut self_glued = 0;
    for f in 0..lat.facet_count() as u32 {
        if let Some(p) = c.partner(Slot::new(cell, f)) {
            glued += 1;
            if p.cell == cell {
                self_glued += 1;
            }
        }
    }
    (lat.f_vector(), glued, self_glued)
}

fn image_facet(la: &FaceLattice, lb: &FaceLattice, map: &[u32], facet: u32) -> Option<u32> {
    let n = la.dim();
    let img: Vec<u32> = la.vertices_of(n - 1, facet).iter().map(|&v| map[v as usize]).collect();
    lb.find_dim(n - 1, &img)
}

/// Tries to extend `root -> (target, map)` over the component of `root`.
#[allow(clippy::too_many_arguments)]
fn propagate(
    c1: &Complex,
    c2: &Complex,
    root: u32,
    target: u32,
    map: Vec<u32>,
    cell_map: &mut [u32],
    maps: &mut [Vec<u32>],
    used: &mut [bool],
) -> bool {
    let n = c1.dim();
    let mut assigned: Vec<u32> = Vec::new();
    let ok = (|| {
        cell_map[root as usize] = target;
        maps[root as usize] = map;
        used[target as usize] = true;
        assigned.push(root);
        let mut queue = VecDeque::from([root]);
        while let Some(a) = queue.pop_front() {
            let a2 = cell_map[a as usize];
            let (la, la2) = (c1.lattice(a), c2.lattice(a2));
            for f in 0..la.facet_count() as u32 {
                let Some(f2) = image_facet(la, la2, &maps[a as usize], f) else { return false };
                let (h1, h2) = (c1.half(Slot::new(a, f)), c2.half(Slot::new(a2, f2)));
                let (h1, h2) = match (h1, h2) {
                    (None, None) => continue,
                    (Some(x), Some(y)) => (x, y),
                    _ => return false,
                };
                let (b, b2) = (h1.to.cell, h2.to.cell);
                let (lb, lb2) = (c1.lattice(b), c2.lattice(b2));
                // phi_b(mu(x)) must equal nu(phi_a(x)) for x in facet f
                let src = la.vertices_of(n - 1, f);
                let src2 = la2.vertices_of(n - 1, f2);
                let b_verts = lb.vertices_of(n - 1, h1.to.facet);
                let mut want = vec![0u32; b_verts.len()];
                for (i, &x) in src.iter().enumerate() {
                    let mx = h1.images[i];
                    let px = maps[a as usize][x as usize];
                    let Ok(k) = src2.binary_search(&px) else { return false };
                    let j = b_verts.binary_search(&mx).expect("image lies in the partner facet");
                    want[j] = h2.images[k];
                }
                if cell_map[b as usize] != u32::MAX {
                    if cell_map[b as usize] != b2 {
                        return false;
                    }
                    let mb = &maps[b as usize];
                    if b_verts.iter().zip(&want).any(|(&v, &w)| mb[v as usize] != w) {
                        return false;
                    }
                    if image_facet(lb, lb2, mb, h1.to.facet) != Some(h2.to.facet) {
                        return false;
                    }
                } else {
                    if used[b2 as usize] {
                        return false;
                    }
                    let Some(mb) = lb.extend_facet_map(h1.to.facet, lb2, h2.to.facet, &want) else { return false };
                    cell_map[b as usize] = b2;
                    maps[b as usize] = mb;
                    used[b2 as usize] = true;
                    assigned.push(b);
                    queue.push_back(b);
                }
            }
        }
        true
    })();
    if !ok {
        for &a in &assigned {
            used[cell_map[a as usize] as usize] = false;
            cell_map[a as usize] = u32::MAX;
            maps[a as usize].clear();
        }
    }
    ok
}

/// An isomorphism from `c1` to `c2` respecting cells, lattices and gluings,
/// or `None`. The identity is tried first.
pub fn isomorphic(c1: &Complex, c2: &Complex) -> Option<ComplexIsomorphism> {
    if c1.dim() != c2.dim() || c1.cell_count() != c2.cell_count() || c1.gluing_count() != c2.gluing_count() {
        return None;
    }
    let sig1: Vec<_> = (0..c1.cell_count() as u32).map(|c| cell_signature(c1, c)).collect();
    let sig2: Vec<_> = (0..c2.cell_count() as u32).map(|c| cell_signature(c2, c)).collect();
    let (mut s1, mut s2) = (sig1.clone(), sig2.clone());
    s1.sort();
    s2.sort();
    if s1 != s2 {
        return None;
    }
    let comps2 = c2.components();
    let mut comp_size2 = vec![0usize; c2.cell_count()];
    for comp in &comps2 {
        for &c in comp {
            comp_size2[c as usize] = comp.len();
        }
    }

    let n = c1.cell_count();
    let mut cell_map = vec![u32::MAX; n];
    let mut maps: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut used = vec![false; n];
    for comp in c1.components() {
        let root = comp[0];
        let la = c1.lattice(root);
        let mut candidates: Vec<u32> = (0..n as u32)
            .filter(|&t| !used[t as usize] && comp_size2[t as usize] == comp.len() && sig2[t as usize] == sig1[root as usize])
            .collect();
        if let Some(p) = candidates.iter().position(|&t| t == root) {
            candidates[..=p].rotate_right(1);
        }
        let mut found = false;
        'search: for t in candidates {
            let lt = c2.lattice(t);
            if lt.flag_count() != la.flag_count() || la.flag_count() == 0 {
                continue;
            }
            for y in 0..lt.flag_count() as u32 {
                let Some(map) = la.isomorphism(lt, 0, y) else { continue };
                if propagate(c1, c2, root, t, map, &mut cell_map, &mut maps, &mut used) {
                    found = true;
                    break 'search;
                }
            }
        }
        if !found {
            return None;
        }
    }
    Some(ComplexIsomorphism { cells: cell_map, vertex_maps: maps })
}
