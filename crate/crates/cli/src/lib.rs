//! `inscribed` command-line tool: analyze point sets, print ideal polyhedra,
//! and run the multi-start search.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 degenerate geometry.

pub mod xyz;

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use inscribed::analytic::{
    bipyramid_max_area, build_ideal_bipyramid, build_ideal_pyramid, g_bound, optimal_pyramid_height,
    pyramid_max_area,
};
use inscribed::discrepancy::{evaluate, Normalization};
use inscribed::geom::{convex_hull, GeomError, Polyhedron, Vec3};
use inscribed::search::{known_optimum, multi_start, Objective, SearchError};
use serde::Serialize;
use thiserror::Error;

use crate::xyz::{format_xyz, parse_xyz, XyzError};

/// Largest `v` accepted by `ideal`.
pub const MAX_IDEAL_V: usize = 1000;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "inscribed", version, about = "Polyhedra inscribed in the unit sphere")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Measure the hull of an XYZ point file and compare it with its ideal.
    Analyze {
        /// Point file, or `-` for standard input.
        file: PathBuf,
        /// Measure the points as given instead of projecting them onto the sphere.
        #[arg(long)]
        no_renormalize: bool,
        #[arg(long)]
        json: bool,
    },
    /// Print an ideal pyramid or bipyramid, or the bound table.
    Ideal {
        family: Family,
        /// Vertex count (not used by `table`).
        v: Option<usize>,
        #[arg(long, conflicts_with = "xyz")]
        json: bool,
        /// Emit the vertices as an XYZ point file.
        #[arg(long)]
        xyz: bool,
    },
    /// Multi-start search for the largest inscribed area or volume.
    Search {
        v: usize,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Area)]
        objective: ObjectiveArg,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        restarts: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Pyramid,
    Bipyramid,
    Table,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ObjectiveArg {
    Area,
    Volume,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::Area => Objective::Area,
            ObjectiveArg::Volume => Objective::Volume,
        }
    }
}

#[derive(Error, Debug)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: XyzError },
    #[error("need at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("degenerate geometry: {0}")]
    Degenerate(GeomError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Degenerate(_) => EXIT_DEGENERATE,
            _ => EXIT_USAGE,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Geometry(g) => CliError::Degenerate(g),
            SearchError::TooFewPoints(n) => CliError::TooFewPoints(n),
            other => CliError::Usage(other.to_string()),
        }
    }
}

#[derive(Serialize, Debug)]
struct AnalyzeReport {
    vertices: usize,
    edges: usize,
    facets: usize,
    #[serde(rename = "type")]
    kind: String,
    area: f64,
    volume: f64,
    surface_discrepancy: Option<f64>,
    volume_discrepancy: Option<f64>,
    ideal_known: bool,
}

#[derive(Serialize, Debug)]
struct IdealReport {
    family: &'static str,
    v: usize,
    height: f64,
    area: f64,
    volume: f64,
    #[serde(rename = "type")]
    kind: String,
}

#[derive(Serialize, Debug)]
struct TableRow {
    v: usize,
    g: f64,
    max_area: Option<f64>,
    maximizer: Option<&'static str>,
}

#[derive(Serialize, Debug)]
struct SearchReport {
    v: usize,
    objective: String,
    restarts: usize,
    seed: u64,
    best_value: f64,
    known_optimum: Option<f64>,
    #[serde(rename = "type")]
    kind: String,
    converged_fraction: f64,
    non_converged: usize,
    vertices: Vec<[f64; 3]>,
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<(), CliError> {
    let text = match command {
        Command::Analyze { file, no_renormalize, json } => analyze(&file, !no_renormalize, json)?,
        Command::Ideal { family, v, json, xyz } => ideal(family, v, json, xyz)?,
        Command::Search { v, objective, restarts, seed, json } => {
            search(v, objective.into(), restarts as usize, seed, json)?
        }
    };
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Io { path: "<stdout>".into(), source })
}

fn read_input(file: &PathBuf) -> Result<(String, String), CliError> {
    if file.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
        return Ok(("<stdin>".into(), s));
    }
    let path = file.display().to_string();
    let text = fs::read_to_string(file).map_err(|source| CliError::Io { path: path.clone(), source })?;
    Ok((path, text))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn opt(x: Option<f64>) -> String {
    x.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

fn analyze(file: &PathBuf, renormalize: bool, json: bool) -> Result<String, CliError> {
    let (path, text) = read_input(file)?;
    let points = parse_xyz(&text).map_err(|source| CliError::Parse { path, source })?;
    if points.len() < 4 {
        return Err(CliError::TooFewPoints(points.len()));
    }
    let points: Vec<Vec3> = if renormalize {
        points
            .iter()
            .map(|p| p.normalized().ok_or(CliError::Degenerate(GeomError::ZeroVector)))
            .collect::<Result<_, _>>()?
    } else {
        points
    };
    let hull = convex_hull(&points).map_err(CliError::Degenerate)?;
    let report = evaluate(&hull, Normalization::AsGiven).map_err(CliError::Degenerate)?;
    let ct = &report.combinatorial_type;
    let r = AnalyzeReport {
        vertices: ct.vertex_count,
        edges: ct.edge_count,
        facets: ct.facet_count,
        kind: ct.label.to_string(),
        area: report.observed_area,
        volume: report.observed_volume,
        surface_discrepancy: report.surface_discrepancy,
        volume_discrepancy: report.volume_discrepancy,
        ideal_known: renormalize && report.ideal_known(),
    };
    if json {
        return Ok(to_json(&r));
    }
    Ok(format!(
        "vertices            {}\nedges               {}\nfacets              {}\ntype                {}\n\
         area                {}\nvolume              {}\nsurface_discrepancy {}\nvolume_discrepancy  {}\n\
         ideal_known         {}\n",
        r.vertices,
        r.edges,
        r.facets,
        r.kind,
        r.area,
        r.volume,
        opt(r.surface_discrepancy),
        opt(r.volume_discrepancy),
        r.ideal_known
    ))
}

fn ideal(family: Family, v: Option<usize>, json: bool, xyz: bool) -> Result<String, CliError> {
    let (name, min_v) = match family {
        Family::Table => {
            if xyz {
                return Err(CliError::Usage("`ideal table` has no XYZ form".into()));
            }
            if v.is_some() {
                return Err(CliError::Usage("`ideal table` takes no vertex count".into()));
            }
            return Ok(table(json));
        }
        Family::Pyramid => ("pyramid", 4),
        Family::Bipyramid => ("bipyramid", 5),
    };
    let v = v.ok_or_else(|| CliError::Usage(format!("`ideal {name}` needs a vertex count")))?;
    if !(min_v..=MAX_IDEAL_V).contains(&v) {
        return Err(CliError::Usage(format!("{name} needs {min_v} <= v <= {MAX_IDEAL_V}, got {v}")));
    }
    let (p, height, area): (Polyhedron, f64, f64) = match family {
        Family::Pyramid => (build_ideal_pyramid(v), optimal_pyramid_height(v), pyramid_max_area(v)),
        _ => (build_ideal_bipyramid(v), 1.0, bipyramid_max_area(v)),
    };
    if xyz {
        return Ok(format_xyz(p.vertices()));
    }
    let r = IdealReport {
        family: name,
        v,
        height,
        area,
        volume: p.volume(),
        kind: p.classify().label.to_string(),
    };
    if json {
        return Ok(to_json(&r));
    }
    Ok(format!(
        "family  {}\nv       {}\ntype    {}\nheight  {}\narea    {}\nvolume  {}\n",
        r.family, r.v, r.kind, r.height, r.area, r.volume
    ))
}

fn table(json: bool) -> String {
    let rows: Vec<TableRow> = (4..=12)
        .map(|v| {
            let maximizer = match v {
                4 => Some("regular tetrahedron"),
                5 => Some("triangular bipyramid"),
                6 => Some("regular octahedron"),
                12 => Some("regular icosahedron"),
                _ => None,
            };
            TableRow { v, g: g_bound(v), max_area: known_optimum(v, Objective::Area), maximizer }
        })
        .collect();
    if json {
        return to_json(&rows);
    }
    let mut s = format!("{:<3} {:<18} {:<18} {}\n", "v", "G(v)", "S(Q*_v)", "maximizer");
    for r in rows {
        s.push_str(&format!(
            "{:<3} {:<18} {:<18} {}\n",
            r.v,
            format!("{:.15}", r.g),
            r.max_area.map_or_else(|| "-".to_string(), |a| format!("{a:.15}")),
            r.maximizer.unwrap_or("-")
        ));
    }
    s
}

fn search(v: usize, kind: Objective, restarts: usize, seed: u64, json: bool) -> Result<String, CliError> {
    let result = multi_start(v, kind, restarts, seed)?;
    let hull = result.best_polyhedron().map_err(CliError::Degenerate)?;
    let points = result.best_config.to_points();
    let r = SearchReport {
        v,
        objective: kind.to_string(),
        restarts: result.restarts_used,
        seed,
        best_value: result.best_value,
        known_optimum: known_optimum(v, kind),
        kind: hull.classify().label.to_string(),
        converged_fraction: result.converged_fraction,
        non_converged: result.non_converged,
        vertices: points.iter().map(|p| p.to_array()).collect(),
    };
    if json {
        return Ok(to_json(&r));
    }
    Ok(format!(
        "v                  {}\nobjective          {}\nrestarts           {}\nseed               {}\n\
         best               {}\nknown_optimum      {}\ntype               {}\nconverged_fraction {}\n\
         non_converged      {}\nvertices\n{}",
        r.v,
        r.objective,
        r.restarts,
        r.seed,
        r.best_value,
        opt(r.known_optimum),
        r.kind,
        r.converged_fraction,
        r.non_converged,
        format_xyz(&points)
    ))
}
