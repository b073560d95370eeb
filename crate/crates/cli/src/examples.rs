//! Named bundled manifolds and the invariants they are expected to have.

use corner_forge::bundled;
use corner_forge::complex::Complex;

use crate::CliError;

#[derive(Debug, Clone, Copy)]
pub struct BundledExample {
    pub name: &'static str,
    pub cusps: usize,
    pub orientable: bool,
    build: fn() -> Complex,
}

impl BundledExample {
    pub fn complex(&self) -> Complex {
        (self.build)()
    }
}

pub const EXAMPLES: [BundledExample; 4] = [
    BundledExample { name: "whitehead", cusps: 2, orientable: true, build: bundled::whitehead },
    BundledExample { name: "borromean", cusps: 3, orientable: true, build: bundled::borromean },
    BundledExample { name: "m128", cusps: 2, orientable: false, build: bundled::m128 },
    BundledExample { name: "dodecahedral16", cusps: 0, orientable: true, build: bundled::dodecahedral16 },
];

pub fn example(name: &str) -> Result<BundledExample, CliError> {
    EXAMPLES.iter().copied().find(|e| e.name == name).ok_or_else(|| CliError::UnknownExample(name.to_string()))
}
