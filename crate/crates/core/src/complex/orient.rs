//! Orientations and Euler characteristic.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::classes::FaceClasses;
use super::{Complex, ComplexError, Slot};

/// Orientation character of a gluing: +1 if cells oriented by their flag
/// signs induce opposite orientations on the shared facet (so the gluing is
/// compatible when both cells keep the same sign), -1 otherwise.
pub fn gluing_sign(complex: &Complex, from: Slot, to: Slot, images: &[u32]) -> i8 {
    let la = complex.lattice(from.cell);
    let lb = complex.lattice(to.cell);
    let (x, y) = la
        .transported_flag(from.facet, lb, to.facet, images)
        .expect("gluing maps carry flags to flags");
    -la.flag_sign(x) * lb.flag_sign(y)
}

/// A sign per cell making every gluing orientation-reversing on the shared
/// facet, or `None` if some component is non-orientable. The smallest cell
/// of each component gets +1.
pub fn orientability(complex: &Complex) -> Option<Vec<i8>> {
    let mut sign = vec![0i8; complex.cell_count()];
    for start in 0..complex.cell_count() {
        if sign[start] != 0 {
            continue;
        }
        sign[start] = 1;
        let mut queue = VecDeque::from([start as u32]);
        while let Some(c) = queue.pop_front() {
            for f in 0..complex.lattice(c).facet_count() as u32 {
                let s = Slot::new(c, f);
                let Some(h) = complex.half(s) else { continue };
                let want = sign[c as usize] * gluing_sign(complex, s, h.to, &h.images);
                let t = h.to.cell as usize;
                if sign[t] == 0 {
                    sign[t] = want;
                    queue.push_back(h.to.cell);
                } else if sign[t] != want {
                    return None;
                }
            }
        }
    }
    Some(sign)
}

/// Whether `signs` (one per cell) make every gluing compatible.
pub fn is_orientation(complex: &Complex, signs: &[i8]) -> bool {
    signs.len() == complex.cell_count()
        && complex
            .gluings()
            .iter()
            .all(|g| signs[g.from.cell as usize] * signs[g.to.cell as usize] == gluing_sign(complex, g.from, g.to, &g.images))
}

/// Alternating count of non-ideal face classes and cells.
pub fn euler_characteristic(complex: &Complex) -> Result<i64, ComplexError> {
    let classes = FaceClasses::compute(complex)?;
    Ok(euler_from_classes(complex, &classes))
}

pub(crate) fn euler_from_classes(complex: &Complex, classes: &FaceClasses) -> i64 {
    let n = complex.dim();
    let mut chi = 0i64;
    for d in 0..n {
        let count = classes.of_dim(d).iter().filter(|c| !c.ideal).count() as i64;
        chi += if d % 2 == 0 { count } else { -count };
    }
    let cells = complex.cell_count() as i64;
    chi + if n.is_multiple_of(2) { cells } else { -cells }
}
