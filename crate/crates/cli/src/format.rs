//! JSON file formats for complexes, embedding records, colourings and
//! implicit covers.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use corner_forge::complex::{BoundaryComplex, Complex, Slot};
use corner_forge::construct::{Coloring, CoverCertificate, CoverHandle, EmbeddingRecord};
use corner_forge::TemplateKind;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellEntry {
    pub id: u32,
    pub template: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub north_pole: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GluingEntry {
    pub from: [u32; 2],
    pub to: [u32; 2],
    pub vertex_map: Vec<[u32; 2]>,
}

/// A complex on disk. Cell ids must be `0..n` in order; labels follow the
/// catalog's canonical numbering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub dimension: usize,
    pub cells: Vec<CellEntry>,
    pub gluings: Vec<GluingEntry>,
}

impl ComplexFile {
    pub fn from_complex(c: &Complex) -> Result<ComplexFile, CliError> {
        let cells = c
            .cells()
            .iter()
            .enumerate()
            .map(|(i, cell)| {
                let kind = cell
                    .shape
                    .kind()
                    .ok_or_else(|| CliError::Format(format!("cell {i} is not a template and cannot be written")))?;
                Ok(CellEntry { id: i as u32, template: kind.name().to_string(), north_pole: cell.north_pole })
            })
            .collect::<Result<_, CliError>>()?;
        let gluings = c
            .gluings()
            .iter()
            .map(|g| GluingEntry {
                from: [g.from.cell, g.from.facet],
                to: [g.to.cell, g.to.facet],
                vertex_map: g.vertex_map(c).into_iter().map(|(a, b)| [a, b]).collect(),
            })
            .collect();
        Ok(ComplexFile { dimension: c.dim(), cells, gluings })
    }

    pub fn to_complex(&self) -> Result<Complex, CliError> {
        if self.dimension == 0 {
            return Err(CliError::Format("dimension must be positive".into()));
        }
        let mut c = Complex::new(self.dimension);
        for (i, cell) in self.cells.iter().enumerate() {
            if cell.id as usize != i {
                return Err(CliError::Format(format!("cell ids must be 0..n in order, found {} at {i}", cell.id)));
            }
            let kind: TemplateKind = cell.template.parse()?;
            let id = c.add_cell(corner_forge::Shape::Template(kind))?;
            c.set_north_pole(id, cell.north_pole)?;
        }
        for g in &self.gluings {
            let pairs: Vec<(u32, u32)> = g.vertex_map.iter().map(|p| (p[0], p[1])).collect();
            c.glue(Slot::new(g.from[0], g.from[1]), Slot::new(g.to[0], g.to[1]), &pairs)?;
        }
        Ok(c)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecordFile {
    pub source: ComplexFile,
    pub images: Vec<[u32; 2]>,
    pub mirrors: Vec<[u32; 2]>,
    pub vertex_maps: Vec<Vec<u32>>,
    pub closed_host: bool,
}

fn pair(s: Slot) -> [u32; 2] {
    [s.cell, s.facet]
}

fn slot(p: [u32; 2]) -> Slot {
    Slot::new(p[0], p[1])
}

impl RecordFile {
    pub fn from_record(r: &EmbeddingRecord) -> Result<RecordFile, CliError> {
        Ok(RecordFile {
            source: ComplexFile::from_complex(&r.source)?,
            images: r.images.iter().copied().map(pair).collect(),
            mirrors: r.mirrors.iter().copied().map(pair).collect(),
            vertex_maps: r.vertex_maps.clone(),
            closed_host: r.closed_host,
        })
    }

    pub fn to_record(&self) -> Result<EmbeddingRecord, CliError> {
        Ok(EmbeddingRecord {
            source: self.source.to_complex()?,
            images: self.images.iter().copied().map(slot).collect(),
            mirrors: self.mirrors.iter().copied().map(slot).collect(),
            vertex_maps: self.vertex_maps.clone(),
            closed_host: self.closed_host,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoredFacet {
    pub color: u32,
    pub slots: Vec<[u32; 2]>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ColoringFile {
    pub k: u32,
    pub fell_back: bool,
    pub facets: Vec<ColoredFacet>,
}

impl ColoringFile {
    pub fn from_coloring(bc: &BoundaryComplex, c: &Coloring) -> ColoringFile {
        let facets = bc
            .facets
            .iter()
            .zip(&c.colors)
            .map(|(f, &color)| ColoredFacet { color, slots: f.slots.iter().copied().map(pair).collect() })
            .collect();
        ColoringFile { k: c.k, fell_back: c.fell_back, facets }
    }

    /// Reads the colours back against the merged boundary of the base.
    pub fn to_coloring(&self, bc: &BoundaryComplex) -> Result<Coloring, CliError> {
        let by_slot: BTreeMap<Slot, u32> =
            self.facets.iter().flat_map(|f| f.slots.iter().map(move |&p| (slot(p), f.color))).collect();
        let colors = bc
            .facets
            .iter()
            .map(|f| {
                let c = by_slot.get(&f.slots[0]).copied();
                match c {
                    Some(c) if f.slots.iter().all(|s| by_slot.get(s) == Some(&c)) => Ok(c),
                    _ => Err(CliError::Format(format!("merged facet at {} is not coloured consistently", f.slots[0]))),
                }
            })
            .collect::<Result<Vec<u32>, CliError>>()?;
        let mut coloring = Coloring::from_facet_colors(bc, colors)?;
        coloring.fell_back = self.fell_back;
        Ok(coloring)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateView {
    pub coloring_proper: bool,
    pub base_is_manifold_with_corners: bool,
    pub corners_see_distinct_colors: bool,
    pub passes: bool,
}

impl From<CoverCertificate> for CertificateView {
    fn from(c: CoverCertificate) -> CertificateView {
        CertificateView {
            coloring_proper: c.coloring_proper,
            base_is_manifold_with_corners: c.base_is_manifold_with_corners,
            corners_see_distinct_colors: c.corners_see_distinct_colors,
            passes: c.passes(),
        }
    }
}

/// An implicit cover on disk: the base, its colouring and symbolic counts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ImplicitCoverFile {
    pub base: ComplexFile,
    pub coloring: ColoringFile,
    pub k: u32,
    pub sheets: String,
    pub cells: String,
    pub volume: String,
    pub certificate: CertificateView,
}

impl ImplicitCoverFile {
    pub fn from_handle(h: &CoverHandle, bc: &BoundaryComplex) -> Result<ImplicitCoverFile, CliError> {
        Ok(ImplicitCoverFile {
            base: ComplexFile::from_complex(h.base())?,
            coloring: ColoringFile::from_coloring(bc, h.coloring()),
            k: h.k(),
            sheets: format!("2^{}", h.k()),
            cells: format!("2^{}·{}", h.k(), h.base().cell_count()),
            volume: h.volume().map_or_else(|| "overflow".to_string(), |v| v.to_string()),
            certificate: h.certificate().into(),
        })
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let shown = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: shown, source })
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), CliError> {
    let shown = path.display().to_string();
    let mut text = serde_json::to_string_pretty(value).map_err(|source| CliError::Json { path: shown.clone(), source })?;
    text.push('\n');
    fs::write(path, text).map_err(|source| CliError::Io { path: shown, source })
}

pub fn read_complex(path: &Path) -> Result<Complex, CliError> {
    read_json::<ComplexFile>(path)?.to_complex()
}
