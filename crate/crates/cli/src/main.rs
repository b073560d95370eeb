use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use corner_forge::catalog::{template, TemplateKind};
use corner_forge::complex::{
    boundary_complex, cusp_sections, euler_characteristic, isomorphic, orientability, validate, Complex,
    ValidationReport,
};
use corner_forge::construct::{
    color_boundary_of, cover, cut_along, embed, ColoringStrategy, CoverMode, DEFAULT_MAX_CELLS,
};
use corner_forge_cli::examples::{example, EXAMPLES};
use corner_forge_cli::format::{
    read_complex, read_json, write_json, ColoringFile, ComplexFile, ImplicitCoverFile, RecordFile,
};
use corner_forge_cli::report::{pipeline_report, ReportOptions};
use corner_forge_cli::CliError;

#[derive(Parser)]
#[command(name = "corner-forge", version, about = "Right-angled polytope complexes, colour covers and geodesic embeddings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Greedy,
    Canonical,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Auto,
    Explicit,
    Implicit,
}

impl From<Mode> for CoverMode {
    fn from(m: Mode) -> CoverMode {
        match m {
            Mode::Auto => CoverMode::Auto,
            Mode::Explicit => CoverMode::Explicit,
            Mode::Implicit => CoverMode::Implicit,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Face census of a template, or of the merged boundary of a complex file.
    Census { target: String },
    /// Check every face link of a complex.
    Validate {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Embed a closed 3-manifold in a 4-manifold with corners.
    Embed {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        record: PathBuf,
    },
    /// Colour the merged boundary facets of a 4-manifold with corners.
    Color {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "greedy")]
        strategy: Strategy,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build the colour cover of a manifold with corners.
    Cover {
        file: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        mode: Mode,
        /// Largest explicit cover; defaults to CORNER_FORGE_MAX_CELLS or 2^20.
        #[arg(long)]
        max_cells: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Cut a host open along an embedded 3-manifold.
    Cut {
        file: PathBuf,
        #[arg(long)]
        record: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decide whether two complexes are isomorphic.
    Iso { first: PathBuf, second: PathBuf },
    /// Run the full pipeline on a bundled example or a complex file.
    Report {
        #[arg(long)]
        input: String,
        /// Defaults to auto for octahedral inputs and implicit for dodecahedral ones.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[arg(long)]
        max_cells: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// List or write the bundled example manifolds.
    Examples {
        #[arg(long)]
        emit: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn max_cells(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var("CORNER_FORGE_MAX_CELLS") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Format(format!("CORNER_FORGE_MAX_CELLS={s:?} is not a number"))),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}

#[derive(Serialize)]
struct ValidationView {
    dimension: usize,
    cells: usize,
    tallies: Vec<[usize; 3]>,
    violations: Vec<String>,
    boundary_facets: usize,
    flat_ridges: usize,
    is_closed_manifold: bool,
    is_manifold_with_corners: bool,
    has_flat_boundary_ridges: bool,
    cusps: Option<usize>,
    orientable: bool,
    euler_characteristic: Option<i64>,
    volume: String,
}

fn validation_view(c: &Complex, r: &ValidationReport) -> ValidationView {
    ValidationView {
        dimension: r.dimension,
        cells: c.cell_count(),
        tallies: r.tallies.iter().map(|(&(codim, corners), &n)| [codim, corners, n]).collect(),
        violations: r
            .violations
            .iter()
            .map(|v| format!("{:?} at dimension {} face {:?} ({} corners)", v.kind, v.dim, v.at, v.corners))
            .collect(),
        boundary_facets: r.boundary_facets,
        flat_ridges: r.flat_ridges,
        is_closed_manifold: r.is_closed_manifold,
        is_manifold_with_corners: r.is_manifold_with_corners,
        has_flat_boundary_ridges: r.has_flat_boundary_ridges,
        cusps: cusp_sections(c).ok().map(|s| s.len()),
        orientable: orientability(c).is_some(),
        euler_characteristic: euler_characteristic(c).ok(),
        volume: c.volume().to_string(),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serializes"));
}

fn load_input(input: &str) -> Result<(String, Complex), CliError> {
    match example(input) {
        Ok(e) => Ok((e.name.to_string(), e.complex())),
        Err(_) if Path::new(input).exists() => Ok((input.to_string(), read_complex(Path::new(input))?)),
        Err(e) => Err(e),
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Census { target } => {
            if let Ok(kind) = target.parse::<TemplateKind>() {
                let t = template(kind);
                let layers: Vec<usize> = t.layers(0).iter().map(Vec::len).collect();
                println!("template   {kind}");
                println!("f-vector   {:?}", t.f_vector());
                println!("layers     {layers:?}");
                println!("volume     {}", t.volume());
                return Ok(true);
            }
            let c = read_complex(Path::new(&target))?;
            let bc = boundary_complex(&c)?;
            println!("merged boundary facets {}", bc.facets.len());
            for (census, n) in bc.facet_types() {
                let faces: Vec<String> = census.iter().map(|(sides, m)| format!("{m}×{sides}")).collect();
                println!("{n:>6} facets with faces {}", faces.join(", "));
            }
            println!("max adjacency degree {}", bc.max_degree());
            Ok(true)
        }
        Command::Validate { file, json } => {
            let c = read_complex(&file)?;
            let report = validate(&c);
            let view = validation_view(&c, &report);
            if json {
                print_json(&view);
            } else {
                println!("dimension {}, {} cells, volume {}", view.dimension, view.cells, view.volume);
                for [codim, corners, n] in &view.tallies {
                    println!("  codim {codim}, {corners} corners: {n} classes");
                }
                println!("boundary facets {}, flat ridges {}", view.boundary_facets, view.flat_ridges);
                println!("closed manifold {}", view.is_closed_manifold);
                println!("manifold with corners {}", view.is_manifold_with_corners);
                if let Some(n) = view.cusps {
                    println!("cusps {n}");
                }
                println!("orientable {}", view.orientable);
                if let Some(chi) = view.euler_characteristic {
                    println!("euler characteristic {chi}");
                }
                for v in &view.violations {
                    println!("violation: {v}");
                }
            }
            Ok(report.violations.is_empty())
        }
        Command::Embed { file, output, record } => {
            let m = read_complex(&file)?;
            let (w, rec) = embed(&m)?;
            write_json(&output, &ComplexFile::from_complex(&w)?)?;
            write_json(&record, &RecordFile::from_record(&rec)?)?;
            println!("W has {} cells", w.cell_count());
            Ok(true)
        }
        Command::Color { file, strategy, output } => {
            let w = read_complex(&file)?;
            let bc = boundary_complex(&w)?;
            let strategy = match strategy {
                Strategy::Greedy => ColoringStrategy::Greedy,
                Strategy::Canonical => ColoringStrategy::OctahedralCanonical,
            };
            let coloring = color_boundary_of(&w, &bc, strategy)?;
            if coloring.fell_back {
                eprintln!("warning: canonical colour 0 is not independent; used greedy colouring");
            }
            write_json(&output, &ColoringFile::from_coloring(&bc, &coloring))?;
            println!("{} colours on {} merged facets", coloring.k, bc.facets.len());
            Ok(true)
        }
        Command::Cover { file, coloring, mode, max_cells: flag, output } => {
            let w = read_complex(&file)?;
            let bc = boundary_complex(&w)?;
            let coloring = read_json::<ColoringFile>(&coloring)?.to_coloring(&bc)?;
            let handle = cover(&w, &coloring, mode.into(), max_cells(flag)?)?;
            let passes = handle.certificate().passes();
            match handle.explicit() {
                Some(c) => {
                    write_json(&output, &ComplexFile::from_complex(c)?)?;
                    println!("explicit cover with {} cells", c.cell_count());
                }
                None => {
                    write_json(&output, &ImplicitCoverFile::from_handle(&handle, &bc)?)?;
                    println!("implicit cover with 2^{}·{} cells", handle.k(), w.cell_count());
                }
            }
            println!("certificate {}", if passes { "passes" } else { "fails" });
            Ok(passes)
        }
        Command::Cut { file, record, output } => {
            let host = read_complex(&file)?;
            let rec = read_json::<RecordFile>(&record)?.to_record()?;
            let cut = cut_along(&host, &rec)?;
            write_json(&output, &ComplexFile::from_complex(&cut)?)?;
            println!("cut along {} facets; {} boundary facets", rec.images.len(), cut.boundary_slots().len());
            Ok(true)
        }
        Command::Iso { first, second } => {
            let (a, b) = (read_complex(&first)?, read_complex(&second)?);
            let found = isomorphic(&a, &b);
            match &found {
                Some(iso) => println!("isomorphic; cells map to {:?}", iso.cells),
                None => println!("not isomorphic"),
            }
            Ok(found.is_some())
        }
        Command::Report { input, mode, max_cells: flag, json } => {
            let (name, m) = load_input(&input)?;
            let options = ReportOptions { mode: mode.map(Into::into), max_cells: max_cells(flag)? };
            let report = pipeline_report(&name, &m, options)?;
            if json {
                print_json(&report);
            } else {
                print!("{report}");
            }
            Ok(report.passes())
        }
        Command::Examples { emit, output } => {
            let Some(name) = emit else {
                for e in EXAMPLES {
                    println!("{:<16} cusps {}, orientable {}", e.name, e.cusps, e.orientable);
                }
                return Ok(true);
            };
            let file = ComplexFile::from_complex(&example(&name)?.complex())?;
            match output {
                Some(path) => write_json(&path, &file)?,
                None => print_json(&file),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
