use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::ConstructError;
use crate::catalog::template;
use crate::complex::{boundary_complex, BoundaryComplex, Complex, Slot};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringStrategy {
    /// Largest merged facets first, each taking the smallest free colour.
    Greedy,
    /// Colour 0 for every merged facet made of even-layer facets of its
    /// cells (counted from each cell's north pole), greedy for the rest.
    OctahedralCanonical,
}

/// A colouring of the merged boundary facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// Colour of each merged facet, indexed like `BoundaryComplex::facets`.
    pub colors: Vec<u32>,
    pub slot_colors: BTreeMap<Slot, u32>,
    /// Number of colours used.
    pub k: u32,
    /// The canonical strategy could not be applied and greedy was used.
    pub fell_back: bool,
}

impl Coloring {
    /// Builds a colouring from one colour per merged facet.
    pub fn from_facet_colors(bc: &BoundaryComplex, colors: Vec<u32>) -> Result<Coloring, ConstructError> {
        if colors.len() != bc.facets.len() {
            return Err(ConstructError::ImproperColoring("one colour per merged facet is required"));
        }
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let slot_colors = bc.class_of.iter().map(|(&s, &i)| (s, colors[i])).collect();
        let coloring = Coloring { colors, slot_colors, k, fell_back: false };
        if !coloring.is_proper(bc) {
            return Err(ConstructError::ImproperColoring("adjacent merged facets share a colour"));
        }
        Ok(coloring)
    }

    pub fn color_of(&self, s: Slot) -> Option<u32> {
        self.slot_colors.get(&s).copied()
    }

    /// Adjacent merged facets differ, no merged facet meets itself and every
    /// colour below `k` is used.
    pub fn is_proper(&self, bc: &BoundaryComplex) -> bool {
        if self.colors.len() != bc.facets.len() || !bc.self_adjacent.is_empty() {
            return false;
        }
        let adjacent_ok = bc
            .adjacency
            .iter()
            .enumerate()
            .all(|(i, nb)| nb.iter().all(|&j| self.colors[i] != self.colors[j]));
        let mut used = vec![false; self.k as usize];
        for &c in &self.colors {
            match used.get_mut(c as usize) {
                Some(u) => *u = true,
                None => return false,
            }
        }
        let slots_ok = bc.class_of.iter().all(|(s, &i)| self.slot_colors.get(s) == Some(&self.colors[i]))
            && self.slot_colors.len() == bc.class_of.len();
        adjacent_ok && used.into_iter().all(|u| u) && slots_ok
    }
}

/// Merged facets by decreasing size, ties by smallest slot.
fn greedy_order(bc: &BoundaryComplex) -> Vec<usize> {
    let mut order: Vec<usize> = (0..bc.facets.len()).collect();
    order.sort_by_key(|&i| (core::cmp::Reverse(bc.facets[i].slots.len()), bc.facets[i].slots[0]));
    order
}

fn greedy(bc: &BoundaryComplex, colors: &mut [Option<u32>], first: u32) {
    for i in greedy_order(bc) {
        if colors[i].is_some() {
            continue;
        }
        let taken: Vec<u32> = bc.adjacency[i].iter().filter_map(|&j| colors[j]).collect();
        let c = (first..).find(|c| !taken.contains(c)).expect("colours are unbounded");
        colors[i] = Some(c);
    }
}

fn finish(bc: &BoundaryComplex, colors: Vec<Option<u32>>, fell_back: bool) -> Coloring {
    let colors: Vec<u32> = colors.into_iter().map(|c| c.expect("every facet coloured")).collect();
    let k = colors.iter().max().map_or(0, |&c| c + 1);
    let slot_colors = bc.class_of.iter().map(|(&s, &i)| (s, colors[i])).collect();
    Coloring { colors, slot_colors, k, fell_back }
}

/// Colours the merged boundary of `w`.
pub fn color_boundary(w: &Complex, strategy: ColoringStrategy) -> Result<Coloring, ConstructError> {
    let bc = boundary_complex(w)?;
    color_boundary_of(w, &bc, strategy)
}

/// Like [`color_boundary`] with the merged boundary already computed.
pub fn color_boundary_of(
    w: &Complex,
    bc: &BoundaryComplex,
    strategy: ColoringStrategy,
) -> Result<Coloring, ConstructError> {
    if bc.facets.is_empty() {
        return Err(ConstructError::NoBoundary);
    }
    let mut colors = vec![None; bc.facets.len()];
    if strategy == ColoringStrategy::OctahedralCanonical {
        let mut layer_cache = BTreeMap::new();
        let mut even = |s: Slot| -> bool {
            let cell = w.cell(s.cell);
            let (Some(kind), Some(pole)) = (cell.shape.kind(), cell.north_pole) else { return false };
            let layers = layer_cache.entry((kind, pole)).or_insert_with(|| template(kind).layer_of(pole));
            layers[s.facet as usize] % 2 == 0
        };
        let yellow: Vec<bool> = bc.facets.iter().map(|f| f.slots.iter().all(|&s| even(s))).collect();
        let independent = bc.self_adjacent.iter().all(|&i| !yellow[i])
            && bc.adjacency.iter().enumerate().all(|(i, nb)| !yellow[i] || nb.iter().all(|&j| !yellow[j]));
        if independent && yellow.iter().any(|&y| y) {
            for (c, y) in colors.iter_mut().zip(&yellow) {
                if *y {
                    *c = Some(0);
                }
            }
            greedy(bc, &mut colors, 1);
            return Ok(finish(bc, colors, false));
        }
        greedy(bc, &mut colors, 0);
        return Ok(finish(bc, colors, true));
    }
    greedy(bc, &mut colors, 0);
    Ok(finish(bc, colors, false))
}
