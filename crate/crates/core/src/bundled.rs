//! Bundled example manifolds.
//!
//! Ideal octahedron labels: vertices `0..6` are `-e1, -e2, -e3, e3, e2, e1`
//! and faces `0..8` are the triangles `012, 013, 024, 034, 125, 135, 245,
//! 345`. Each gluing lists the images of the face's sorted vertices.

use alloc::vec::Vec;

use crate::catalog::{template, TemplateKind};
use crate::complex::{boundary_complex, Complex, Slot};
use crate::construct::{cover, Coloring, CoverMode, DEFAULT_MAX_CELLS};

type Pairing = (u32, u32, u32, u32, [u32; 3]);

fn octahedral(cells: usize, pairings: &[Pairing]) -> Complex {
    let mut c = Complex::new(3);
    for _ in 0..cells {
        c.add_template(TemplateKind::IdealOctahedron);
    }
    for &(a, f, b, g, images) in pairings {
        c.glue_images(Slot::new(a, f), Slot::new(b, g), images.to_vec()).expect("bundled gluings are valid");
    }
    c
}

/// The Whitehead link complement: one ideal octahedron, two cusps.
pub fn whitehead() -> Complex {
    octahedral(
        1,
        &[(0, 0, 0, 3, [0, 3, 4]), (0, 1, 0, 4, [5, 2, 1]), (0, 2, 0, 7, [5, 4, 3]), (0, 5, 0, 6, [2, 4, 5])],
    )
}

/// A non-orientable manifold from one ideal octahedron. Its orientation
/// double cover is the Borromean rings complement.
pub fn m128() -> Complex {
    octahedral(
        1,
        &[(0, 0, 0, 3, [0, 4, 3]), (0, 1, 0, 7, [4, 5, 3]), (0, 2, 0, 4, [1, 2, 5]), (0, 5, 0, 6, [4, 2, 5])],
    )
}

/// The Borromean rings complement: two ideal octahedra, three cusps.
pub fn borromean() -> Complex {
    octahedral(
        2,
        &[
            (0, 0, 1, 3, [0, 4, 3]),
            (1, 0, 0, 3, [0, 4, 3]),
            (0, 1, 0, 7, [4, 5, 3]),
            (1, 1, 1, 7, [4, 5, 3]),
            (0, 2, 0, 4, [1, 2, 5]),
            (1, 2, 1, 4, [1, 2, 5]),
            (0, 5, 1, 6, [4, 2, 5]),
            (1, 5, 0, 6, [4, 2, 5]),
        ],
    )
}

/// Lexicographically first proper colouring of the dodecahedron's faces
/// with four colours.
pub fn dodecahedron_four_coloring() -> Vec<u32> {
    let adjacency = template(TemplateKind::Dodecahedron).facet_adjacency();
    let mut colors: Vec<u32> = Vec::new();
    let mut next = 0u32;
    loop {
        let i = colors.len();
        if i == adjacency.len() {
            return colors;
        }
        match (next..4).find(|&c| adjacency[i].iter().all(|&j| (j as usize) >= i || colors[j as usize] != c)) {
            Some(c) => {
                colors.push(c);
                next = 0;
            }
            None => {
                next = colors.pop().expect("the dodecahedron is four-colourable") + 1;
            }
        }
    }
}

/// The closed dodecahedral manifold of sixteen cells: the colour cover of a
/// single right-angled dodecahedron under a proper four-colouring.
pub fn dodecahedral16() -> Complex {
    let mut d = Complex::new(3);
    d.add_template(TemplateKind::Dodecahedron);
    let bc = boundary_complex(&d).expect("a single cell has consistent classes");
    let by_slot = dodecahedron_four_coloring();
    let colors = bc.facets.iter().map(|f| by_slot[f.slots[0].facet as usize]).collect();
    let coloring = Coloring::from_facet_colors(&bc, colors).expect("four-colouring is proper");
    cover(&d, &coloring, CoverMode::Explicit, DEFAULT_MAX_CELLS)
        .expect("sixteen cells fit the budget")
        .into_explicit()
        .expect("explicit cover requested")
}
