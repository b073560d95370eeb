//! Hyperbolic volumes of complexes built from the four templates.
//!
//! Every cell of a complex is a copy of one template, so a volume is a
//! vector of multiplicities. The two 3-dimensional constants are stored to
//! full double precision; the 4-dimensional ones are rational multiples of
//! π².

use core::f64::consts::PI;
use core::fmt;
use core::ops::Add;

use crate::catalog::TemplateKind;

/// Volume of the right-angled dodecahedron.
pub const VOL_DODECAHEDRON: f64 = 4.306_207_600_730_809;
/// Volume of the regular ideal octahedron.
pub const VOL_OCTAHEDRON: f64 = 3.663_862_376_708_876;
/// Volume of the right-angled 120-cell, `34π²/3`.
pub const VOL_CELL120: f64 = 34.0 * PI * PI / 3.0;
/// Volume of the ideal 24-cell, `4π²/3`.
pub const VOL_CELL24: f64 = 4.0 * PI * PI / 3.0;

/// An exact volume `a·Vol(D) + b·Vol(O) + (34c/3 + 4d/3)·π²`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Volume {
    pub dodecahedra: u64,
    pub octahedra: u64,
    pub cells120: u64,
    pub cells24: u64,
}

impl Volume {
    pub const ZERO: Volume = Volume { dodecahedra: 0, octahedra: 0, cells120: 0, cells24: 0 };

    pub fn of_cell(kind: TemplateKind) -> Volume {
        let mut v = Volume::ZERO;
        *v.slot(kind) = 1;
        v
    }

    fn slot(&mut self, kind: TemplateKind) -> &mut u64 {
        match kind {
            TemplateKind::Dodecahedron => &mut self.dodecahedra,
            TemplateKind::IdealOctahedron => &mut self.octahedra,
            TemplateKind::Cell120 => &mut self.cells120,
            TemplateKind::Cell24 => &mut self.cells24,
        }
    }

    pub fn count(&self, kind: TemplateKind) -> u64 {
        match kind {
            TemplateKind::Dodecahedron => self.dodecahedra,
            TemplateKind::IdealOctahedron => self.octahedra,
            TemplateKind::Cell120 => self.cells120,
            TemplateKind::Cell24 => self.cells24,
        }
    }

    /// `factor` copies of this volume; `None` on overflow.
    pub fn scaled(self, factor: u64) -> Option<Volume> {
        Some(Volume {
            dodecahedra: self.dodecahedra.checked_mul(factor)?,
            octahedra: self.octahedra.checked_mul(factor)?,
            cells120: self.cells120.checked_mul(factor)?,
            cells24: self.cells24.checked_mul(factor)?,
        })
    }

    pub fn numeric(&self) -> f64 {
        self.dodecahedra as f64 * VOL_DODECAHEDRON
            + self.octahedra as f64 * VOL_OCTAHEDRON
            + self.cells120 as f64 * VOL_CELL120
            + self.cells24 as f64 * VOL_CELL24
    }
}

impl Add for Volume {
    type Output = Volume;
    fn add(self, o: Volume) -> Volume {
        Volume {
            dodecahedra: self.dodecahedra + o.dodecahedra,
            octahedra: self.octahedra + o.octahedra,
            cells120: self.cells120 + o.cells120,
            cells24: self.cells24 + o.cells24,
        }
    }
}

impl fmt::Display for Volume {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = alloc::vec::Vec::new();
        if self.dodecahedra > 0 {
            terms.push(alloc::format!("{}·Vol(D)", self.dodecahedra));
        }
        if self.octahedra > 0 {
            terms.push(alloc::format!("{}·Vol(O)", self.octahedra));
        }
        // π² coefficient as a fraction over 3
        let thirds = 34 * self.cells120 as u128 + 4 * self.cells24 as u128;
        if thirds > 0 {
            if thirds.is_multiple_of(3) {
                terms.push(alloc::format!("{}·π²", thirds / 3));
            } else {
                terms.push(alloc::format!("{}/3·π²", thirds));
            }
        }
        if terms.is_empty() {
            return f.write_str("0");
        }
        write!(f, "{} = {:.6}", terms.join(" + "), self.numeric())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const _: () = assert!(VOL_CELL120 / VOL_DODECAHEDRON <= 26.0);
    const _: () = assert!(VOL_CELL24 / VOL_OCTAHEDRON <= 3.6);

    #[test]
    fn arithmetic() {
        let v = Volume::of_cell(TemplateKind::IdealOctahedron) + Volume::of_cell(TemplateKind::IdealOctahedron);
        assert_eq!(v.octahedra, 2);
        assert!((v.numeric() - 7.327_724_753_417_752).abs() < 1e-12);
        assert_eq!(v.scaled(u64::MAX), None);
        assert_eq!(alloc::format!("{}", Volume::of_cell(TemplateKind::Cell24)), "4/3·π² = 13.159473");
    }
}
