//! End-to-end pipeline report: validate a 3-manifold, embed it, colour the
//! boundary, build the colour cover and check the volume bound.

use std::collections::BTreeMap;
use std::fmt;
use std::f64::consts::PI;

use serde::Serialize;

use corner_forge::catalog::TemplateKind;
use corner_forge::complex::{
    boundary_complex, cusp_sections, euler_characteristic, is_orientation, orientability, validate, Complex,
};
use corner_forge::construct::{
    color_boundary_of, cover, embed, orientation_double_cover, verify_embedding, ColoringStrategy, CoverMode,
};

use crate::format::CertificateView;
use crate::CliError;

/// Volume bound for octahedral inputs.
pub const OCTAHEDRAL_BOUND: f64 = 1844.0;
/// Colour bound for octahedral inputs.
pub const OCTAHEDRAL_COLORS: u32 = 8;
/// Colour bound for dodecahedral inputs.
pub const DODECAHEDRAL_COLORS: u32 = 43;

/// Volume bound for dodecahedral inputs, `13 · 2^45`.
pub fn dodecahedral_bound() -> f64 {
    13.0 * 2f64.powi(45)
}

#[derive(Debug, Clone, Serialize)]
pub struct InputSummary {
    pub name: String,
    pub cells: usize,
    pub template: String,
    pub cusps: usize,
    pub orientable: bool,
    /// The input was non-orientable and its orientation double cover was used.
    pub used_double_cover: bool,
    pub volume: String,
    pub volume_numeric: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct HostSummary {
    pub cells: usize,
    pub boundary_facets: usize,
    /// Merged boundary facets by face count.
    pub census: BTreeMap<usize, usize>,
    pub max_degree: usize,
    pub embedding_verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoringSummary {
    pub strategy: String,
    pub k: u32,
    pub fell_back: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverSummary {
    pub mode: String,
    pub cells: String,
    pub volume: String,
    pub volume_numeric: f64,
    pub euler_characteristic: Option<i64>,
    pub closed: Option<bool>,
    pub certificate: CertificateView,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub ratio: f64,
    pub bound: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub input: InputSummary,
    pub host: HostSummary,
    pub coloring: ColoringSummary,
    pub cover: CoverSummary,
    pub bound: BoundCheck,
    pub checks: Vec<Check>,
}

impl PipelineReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    /// Cover mode; by default octahedral inputs use `Auto` and dodecahedral
    /// inputs `Implicit`.
    pub mode: Option<CoverMode>,
    pub max_cells: u64,
}

fn mode_name(explicit: bool) -> &'static str {
    if explicit {
        "explicit"
    } else {
        "implicit"
    }
}

/// Runs the full pipeline on `m`.
pub fn pipeline_report(name: &str, m: &Complex, options: ReportOptions) -> Result<PipelineReport, CliError> {
    let mut checks = Vec::new();
    let mut check = |name: &str, pass: bool| checks.push(Check { name: name.to_string(), pass });

    let input_report = validate(m);
    check("input is a complete manifold", input_report.is_closed_manifold);
    let cusps = cusp_sections(m);
    check("cusp sections are closed and flat", cusps.as_ref().is_ok_and(|s| s.iter().all(|c| c.is_closed_flat())));
    let cusp_count = cusps.map_or(0, |s| s.len());
    let orientable = orientability(m).is_some();
    let (m, used_double_cover) = if orientable { (m.clone(), false) } else { (orientation_double_cover(m).0, true) };
    let kind = m.kind().ok_or(corner_forge::construct::ConstructError::MixedTemplates)?;

    let (w, record) = embed(&m)?;
    let embedding_verified = verify_embedding(&w, &record).passes();
    check("embedding verified in W", embedding_verified);
    let bc = boundary_complex(&w)?;

    let octahedral = kind == TemplateKind::IdealOctahedron;
    let strategy = if octahedral { ColoringStrategy::OctahedralCanonical } else { ColoringStrategy::Greedy };
    let coloring = color_boundary_of(&w, &bc, strategy)?;
    check("colouring is proper", coloring.is_proper(&bc));
    let color_bound = if octahedral { OCTAHEDRAL_COLORS } else { DODECAHEDRAL_COLORS };
    check("colour count within bound", coloring.k <= color_bound);
    check("colouring within max degree + 1", coloring.k as usize <= bc.max_degree() + 1);

    let mode = options.mode.unwrap_or(if octahedral { CoverMode::Auto } else { CoverMode::Implicit });
    let handle = cover(&w, &coloring, mode, options.max_cells)?;
    check("cover certificate", handle.certificate().passes());
    let vol_cover = 2f64.powi(coloring.k as i32) * w.volume().numeric();
    let (mut euler, mut closed) = (None, None);
    if let Some(host) = handle.explicit() {
        let report = validate(host);
        closed = Some(report.is_closed_manifold);
        check("cover is a complete manifold", report.is_closed_manifold);
        check("cover is connected", host.is_connected());
        check("cover is orientable", orientability(host).is_some());
        check(
            "bit-weight signs orient the cover",
            handle.bit_weight_orientation().is_some_and(|s| is_orientation(host, &s)),
        );
        check("embedding verified in cover", verify_embedding(host, &record.in_cover()).passes());
        let chi = euler_characteristic(host)?;
        euler = Some(chi);
        let gauss_bonnet = (4.0 * PI * PI / 3.0) * chi as f64;
        check("Gauss-Bonnet", (gauss_bonnet - vol_cover).abs() <= 1e-9 * vol_cover.max(1.0));
    }

    let ratio = vol_cover / m.volume().numeric();
    let bound = if octahedral { OCTAHEDRAL_BOUND } else { dodecahedral_bound() };
    check("volume bound", ratio <= bound);

    let cells = if handle.is_explicit() {
        handle.cell_count().to_string()
    } else {
        format!("2^{}·{}", coloring.k, w.cell_count())
    };
    let volume = match handle.volume() {
        Some(v) => v.to_string(),
        None => format!("2^{}·({})", coloring.k, w.volume()),
    };
    Ok(PipelineReport {
        input: InputSummary {
            name: name.to_string(),
            cells: m.cell_count(),
            template: kind.name().to_string(),
            cusps: cusp_count,
            orientable,
            used_double_cover,
            volume: m.volume().to_string(),
            volume_numeric: m.volume().numeric(),
        },
        host: HostSummary {
            cells: w.cell_count(),
            boundary_facets: bc.facets.len(),
            census: bc.census(),
            max_degree: bc.max_degree(),
            embedding_verified,
        },
        coloring: ColoringSummary {
            strategy: if octahedral { "canonical" } else { "greedy" }.to_string(),
            k: coloring.k,
            fell_back: coloring.fell_back,
        },
        cover: CoverSummary {
            mode: mode_name(handle.is_explicit()).to_string(),
            cells,
            volume,
            volume_numeric: vol_cover,
            euler_characteristic: euler,
            closed,
            certificate: handle.certificate().into(),
        },
        bound: BoundCheck { ratio, bound, holds: ratio <= bound },
        checks,
    })
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = &self.input;
        writeln!(f, "input      {} ({} {} cells, {} cusps)", i.name, i.cells, i.template, i.cusps)?;
        if i.used_double_cover {
            writeln!(f, "           non-orientable; using its orientation double cover")?;
        }
        writeln!(f, "           volume {}", i.volume)?;
        let h = &self.host;
        let census: Vec<String> = h.census.iter().map(|(faces, n)| format!("{n} with {faces} faces")).collect();
        writeln!(f, "W          {} cells, {} boundary facets", h.cells, h.boundary_facets)?;
        writeln!(f, "           merged facets: {}", census.join(", "))?;
        writeln!(f, "           max adjacency degree {}", h.max_degree)?;
        let c = &self.coloring;
        writeln!(f, "colouring  {} colours ({}{})", c.k, c.strategy, if c.fell_back { ", fell back to greedy" } else { "" })?;
        let v = &self.cover;
        writeln!(f, "cover      {} with {} cells", v.mode, v.cells)?;
        writeln!(f, "           volume {}", v.volume)?;
        if let Some(chi) = v.euler_characteristic {
            writeln!(f, "           euler characteristic {chi}")?;
        }
        writeln!(f, "bound      Vol(cover)/Vol(M) = {:.6e} <= {:.6e}", self.bound.ratio, self.bound.bound)?;
        for check in &self.checks {
            writeln!(f, "{} {}", if check.pass { "PASS" } else { "FAIL" }, check.name)?;
        }
        Ok(())
    }
}
