//! Volumes of the templates from independent formulas: Lobachevsky-function
//! quadrature in dimension three, the orbifold Gauss–Bonnet theorem in
//! dimension four.

use std::f64::consts::PI;

use corner_forge::catalog::{template, TemplateKind};
use corner_forge::volume::{Volume, VOL_CELL120, VOL_CELL24, VOL_DODECAHEDRON, VOL_OCTAHEDRON};

/// Lobachevsky function `-∫_0^θ ln|2 sin t| dt` for `0 <= θ <= π/2`, with
/// the logarithmic singularity integrated in closed form and the smooth
/// remainder `ln(sin t / t)` by composite Simpson.
fn lobachevsky(theta: f64) -> f64 {
    if theta == 0.0 {
        return 0.0;
    }
    let singular = theta * (2.0 * theta).ln() - theta;
    let g = |t: f64| if t == 0.0 { 0.0 } else { (t.sin() / t).ln() };
    let steps = 20_000;
    let h = theta / steps as f64;
    let mut sum = g(0.0) + g(theta);
    for i in 1..steps {
        sum += g(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    -(singular + sum * h / 3.0)
}

/// Volume of the hyperbolic orthoscheme with essential angles `a, b, c`.
fn orthoscheme(a: f64, b: f64, c: f64) -> f64 {
    let delta = ((b.cos().powi(2) - (a.sin() * c.sin()).powi(2)).sqrt() / (a.cos() * c.cos())).atan();
    let l = lobachevsky_signed;
    0.25 * (l(a + delta) - l(a - delta) + l(c + delta) - l(c - delta) - l(PI / 2.0 - b + delta)
        + l(PI / 2.0 - b - delta)
        + 2.0 * l(PI / 2.0 - delta))
}

/// Lobachevsky function on the whole line: odd and π-periodic.
fn lobachevsky_signed(theta: f64) -> f64 {
    let t = theta.rem_euclid(PI);
    if t <= PI / 2.0 {
        lobachevsky(t)
    } else {
        -lobachevsky(PI - t)
    }
}

#[test]
fn octahedron_volume_is_eight_lobachevsky_quarter_pi() {
    let v = 8.0 * lobachevsky(PI / 4.0);
    assert!((v - VOL_OCTAHEDRON).abs() < 1e-12, "{v}");
}

#[test]
fn dodecahedron_volume_is_120_orthoschemes() {
    let v = 120.0 * orthoscheme(PI / 5.0, PI / 3.0, PI / 4.0);
    assert!((v - VOL_DODECAHEDRON).abs() < 1e-11, "{v}");
}

/// Orbifold Euler characteristic of the reflection group of a right-angled
/// polytope: each finite face of codimension `j` contributes `±2^-j`.
fn orbifold_euler(kind: TemplateKind) -> f64 {
    let t = template(kind);
    let lat = t.lattice();
    let n = t.dimension();
    let mut chi = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    for d in 0..n {
        let finite = if d == 0 { (0..lat.vertex_count() as u32).filter(|&v| !lat.is_ideal(v)).count() } else { lat.face_count(d) };
        let sign = if d % 2 == 0 { 1.0 } else { -1.0 };
        chi += sign * finite as f64 / f64::powi(2.0, (n - d) as i32);
    }
    chi
}

#[test]
fn four_dimensional_volumes_follow_gauss_bonnet() {
    let unit = 4.0 * PI * PI / 3.0;
    assert_eq!(orbifold_euler(TemplateKind::Cell120), 8.5);
    assert_eq!(orbifold_euler(TemplateKind::Cell24), 1.0);
    assert!((unit * orbifold_euler(TemplateKind::Cell120) - VOL_CELL120).abs() < 1e-12);
    assert!((unit * orbifold_euler(TemplateKind::Cell24) - VOL_CELL24).abs() < 1e-12);
}

#[test]
fn three_dimensional_orbifold_characteristic_vanishes() {
    assert_eq!(orbifold_euler(TemplateKind::Dodecahedron), 0.0);
    assert_eq!(orbifold_euler(TemplateKind::IdealOctahedron), 0.0);
}

#[test]
fn published_digits_and_ratios() {
    let borromean = Volume::of_cell(TemplateKind::IdealOctahedron).scaled(2).unwrap();
    assert!((borromean.numeric() - 7.32772).abs() < 1e-4);
    let d16 = Volume::of_cell(TemplateKind::Dodecahedron).scaled(16).unwrap();
    assert!((d16.numeric() - 68.8992).abs() < 1e-3);
    assert!((VOL_DODECAHEDRON - 4.3062).abs() < 1e-4);
    assert!((VOL_OCTAHEDRON - 3.6638).abs() < 1e-4);
    const _: () = assert!(VOL_CELL24 / VOL_OCTAHEDRON <= 3.6);
    const _: () = assert!(VOL_CELL120 / VOL_DODECAHEDRON <= 26.0);
}
