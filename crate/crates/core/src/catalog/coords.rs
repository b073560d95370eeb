//! Exact vertex coordinates and facet normals of the four templates.
//!
//! All values lie in Q(√5). Facet normals are the vertices of the dual
//! polytope; a facet is the set of vertices maximising the dot product with
//! its normal.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use super::TemplateKind;
use crate::field::Q5;

type Point = Vec<Q5>;

fn sign_variants(base: &[Q5]) -> Vec<Point> {
    let mut out = vec![Vec::new()];
    for &x in base {
        let mut next = Vec::with_capacity(out.len() * 2);
        for p in &out {
            let mut a = p.clone();
            a.push(x);
            next.push(a);
            if !x.is_zero() {
                let mut b = p.clone();
                b.push(-x);
                next.push(b);
            }
        }
        out = next;
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Perms {
    All,
    Even,
    Odd,
    Cyclic,
}

fn orbit(base: &[Q5], perms: Perms, into: &mut BTreeSet<Point>) {
    let n = base.len();
    let chosen: Vec<Vec<usize>> = match perms {
        Perms::Cyclic => (0..n).map(|s| (0..n).map(|i| (i + s) % n).collect()).collect(),
        _ => permutations(n)
            .into_iter()
            .filter(|p| match perms {
                Perms::All => true,
                Perms::Even => is_even(p),
                _ => !is_even(p),
            })
            .collect(),
    };
    for signed in sign_variants(base) {
        for p in &chosen {
            into.insert(p.iter().map(|&i| signed[i]).collect());
        }
    }
}

/// Vertices in increasing lexicographic order of their coordinates.
pub(super) fn vertices(kind: TemplateKind) -> Vec<Point> {
    let mut pts = BTreeSet::new();
    let one = Q5::ONE;
    let zero = Q5::ZERO;
    let phi = Q5::phi();
    let phi_inv = Q5::half(-1, 1);
    match kind {
        TemplateKind::Dodecahedron => {
            orbit(&[one, one, one], Perms::Cyclic, &mut pts);
            orbit(&[zero, phi_inv, phi], Perms::Cyclic, &mut pts);
        }
        TemplateKind::IdealOctahedron => {
            orbit(&[one, zero, zero], Perms::All, &mut pts);
        }
        TemplateKind::Cell24 => {
            orbit(&[one, one, zero, zero], Perms::All, &mut pts);
        }
        TemplateKind::Cell120 => {
            let two = Q5::int(2);
            let sqrt5 = Q5::new(0, 1, 1);
            let phi2 = Q5::half(3, 1);
            let phi_inv2 = Q5::half(3, -1);
            orbit(&[zero, zero, two, two], Perms::All, &mut pts);
            orbit(&[one, one, one, sqrt5], Perms::All, &mut pts);
            orbit(&[phi_inv2, phi, phi, phi], Perms::All, &mut pts);
            orbit(&[phi_inv, phi_inv, phi_inv, phi2], Perms::All, &mut pts);
            orbit(&[zero, phi_inv2, one, phi2], Perms::Even, &mut pts);
            orbit(&[zero, phi_inv, phi, sqrt5], Perms::Even, &mut pts);
            orbit(&[phi_inv, one, phi, two], Perms::Even, &mut pts);
        }
    }
    pts.into_iter().collect()
}

/// Outward facet normals (vertices of the dual polytope).
pub(super) fn facet_normals(kind: TemplateKind) -> Vec<Point> {
    let mut pts = BTreeSet::new();
    let one = Q5::ONE;
    let zero = Q5::ZERO;
    let half = Q5::half(1, 0);
    let phi = Q5::phi();
    match kind {
        TemplateKind::Dodecahedron => {
            orbit(&[zero, phi, one], Perms::Cyclic, &mut pts);
        }
        TemplateKind::IdealOctahedron => {
            orbit(&[one, one, one], Perms::All, &mut pts);
        }
        TemplateKind::Cell24 => {
            orbit(&[one, zero, zero, zero], Perms::All, &mut pts);
            orbit(&[half, half, half, half], Perms::All, &mut pts);
        }
        TemplateKind::Cell120 => {
            orbit(&[one, zero, zero, zero], Perms::All, &mut pts);
            orbit(&[half, half, half, half], Perms::All, &mut pts);
            orbit(&[Q5::new(1, 1, 4), half, Q5::new(-1, 1, 4), zero], Perms::Odd, &mut pts);
        }
    }
    pts.into_iter().collect()
}
