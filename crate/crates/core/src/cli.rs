//! Command-line front end: JSON input, the check commands, and report output.
//!
//! Input documents look like
//!
//! ```json
//! {"dimension": 2, "pieces": [[[0,0],[1,0],[0,1],[1,1]]], "direction": ["1","2"]}
//! ```
//!
//! Coordinates may be integers, decimal numbers, or strings such as `"1/3"`
//! and `"0.25"`; all become exact rationals. Optional keys are `complex` (a
//! list of cells, each a vertex list, closed under faces), `direction`, and
//! `measure` (`"uniform"` or an inline density spec).
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
//! input errors.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::analysis::{
    critical_point_report, euler_characteristic, gauss_bonnet_report, DEFAULT_TOLERANCE,
};
use crate::angle::{Monomial, MonteCarloConfig, PolynomialDensity, SphereMeasure};
use crate::complexes::{
    brin_check, combinatorial_curvature_c, complex_curvature_g_with, conic_gamma_sum,
    euler_characteristic_complex, local_euler_sum, local_euler_sum_cone, sommerville_check_with,
    validate_complex, CellComplex, ConicComplex, IdentityCheck,
};
use crate::cone::tangent_cone_of_polytope;
use crate::error::{Error, Result};
use crate::linalg::{parse_rational, rat_to_f64, RatVector, Rational};
use crate::polyhedron::Polyhedron;
use crate::polytope::ConvexPolytope;
use crate::valuation::{vertex_curvature, ConeValuation, CurvatureValue, Estimate};

/// Density `Σ c · Π uᵢ^eᵢ` on unit vectors with a declared upper bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeasureSpec {
    #[serde(default = "default_measure_name")]
    pub name: String,
    pub terms: Vec<Monomial>,
    pub sup: f64,
    #[serde(default = "yes")]
    pub normalized: bool,
    #[serde(default = "yes")]
    pub vanishes_on_great_subspheres: bool,
}

fn default_measure_name() -> String {
    "density".into()
}

fn yes() -> bool {
    true
}

impl MeasureSpec {
    pub fn to_measure(&self) -> SphereMeasure {
        match SphereMeasure::polynomial(
            self.name.clone(),
            PolynomialDensity {
                terms: self.terms.clone(),
            },
            self.sup,
        ) {
            SphereMeasure::Density(mut d) => {
                d.normalized = self.normalized;
                d.vanishes_on_great_subspheres = self.vanishes_on_great_subspheres;
                SphereMeasure::Density(d)
            }
            uniform => uniform,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InputDocument {
    pub dimension: usize,
    pub pieces: Vec<Vec<RatVector>>,
    pub complex: Option<Vec<Vec<RatVector>>>,
    pub direction: Option<RatVector>,
    pub measure: Option<MeasureSpec>,
}

impl InputDocument {
    pub fn polyhedron(&self) -> Result<Polyhedron> {
        Polyhedron::from_vertex_lists(self.dimension, &self.pieces)
    }

    pub fn cell_complex(&self) -> Result<Option<CellComplex>> {
        let Some(cells) = &self.complex else {
            return Ok(None);
        };
        let cells = cells
            .iter()
            .map(|c| ConvexPolytope::hull(c))
            .collect::<Result<Vec<_>>>()?;
        validate_complex(cells).map(Some)
    }
}

fn parse_coordinate(v: &Value, at: &str) -> Result<Rational> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => {
            return Err(Error::input(
                at,
                "coordinate must be a number or a string such as \"1/3\"",
            ))
        }
    };
    parse_rational(&text)
        .ok_or_else(|| Error::input(at, format!("not a rational number: {text:?}")))
}

fn parse_point(v: &Value, dim: usize, at: &str) -> Result<RatVector> {
    let coords = v
        .as_array()
        .ok_or_else(|| Error::input(at, "point must be an array of coordinates"))?;
    if coords.len() != dim {
        return Err(Error::input(
            at,
            format!("point has {} coordinates, expected {dim}", coords.len()),
        ));
    }
    let coords = coords
        .iter()
        .enumerate()
        .map(|(i, c)| parse_coordinate(c, &format!("{at}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    Ok(RatVector::new(coords))
}

fn parse_vertex_lists(v: &Value, dim: usize, at: &str) -> Result<Vec<Vec<RatVector>>> {
    let lists = v
        .as_array()
        .ok_or_else(|| Error::input(at, "expected an array of vertex lists"))?;
    lists
        .iter()
        .enumerate()
        .map(|(i, list)| {
            let here = format!("{at}[{i}]");
            let points = list
                .as_array()
                .ok_or_else(|| Error::input(&here, "expected a vertex list"))?;
            if points.is_empty() {
                return Err(Error::input(&here, "vertex list is empty"));
            }
            points
                .iter()
                .enumerate()
                .map(|(j, p)| parse_point(p, dim, &format!("{here}[{j}]")))
                .collect()
        })
        .collect()
}

fn parse_measure(v: &Value, at: &str) -> Result<Option<MeasureSpec>> {
    match v {
        Value::String(s) if s == "uniform" => Ok(None),
        Value::Object(_) => serde_json::from_value(v.clone())
            .map(Some)
            .map_err(|e| Error::input(at, e.to_string())),
        _ => Err(Error::input(
            at,
            "measure must be \"uniform\" or a density object",
        )),
    }
}

/// Parses and validates an input document; `source` names it in diagnostics.
pub fn parse_input(text: &str, source: &str) -> Result<InputDocument> {
    let root: Value = serde_json::from_str(text).map_err(|e| {
        Error::input(
            format!("{source}:{}:{}", e.line(), e.column()),
            e.to_string(),
        )
    })?;
    let obj = root
        .as_object()
        .ok_or_else(|| Error::input(source, "top level must be an object"))?;
    for key in obj.keys() {
        if !["dimension", "pieces", "complex", "direction", "measure"].contains(&key.as_str()) {
            return Err(Error::input(format!("{source}: {key}"), "unknown key"));
        }
    }
    let at = |k: &str| format!("{source}: {k}");
    let dimension = obj
        .get("dimension")
        .ok_or_else(|| Error::input(at("dimension"), "missing"))?
        .as_u64()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::input(at("dimension"), "must be a positive integer"))?
        as usize;
    let pieces = parse_vertex_lists(
        obj.get("pieces")
            .ok_or_else(|| Error::input(at("pieces"), "missing"))?,
        dimension,
        &at("pieces"),
    )?;
    let complex = obj
        .get("complex")
        .map(|v| parse_vertex_lists(v, dimension, &at("complex")))
        .transpose()?;
    let direction = obj
        .get("direction")
        .map(|v| parse_point(v, dimension, &at("direction")))
        .transpose()?;
    let measure = match obj.get("measure") {
        Some(v) => parse_measure(v, &at("measure"))?,
        None => None,
    };
    Ok(InputDocument {
        dimension,
        pieces,
        complex,
        direction,
        measure,
    })
}

pub fn parse_input_file(path: &Path) -> Result<InputDocument> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::input("<stdin>", e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::input(path.display().to_string(), e.to_string()))?
    };
    parse_input(&text, &path.display().to_string())
}

/// Parses `"1,1/2,0.25"` into a point of the given dimension.
pub fn parse_point_arg(text: &str, dim: usize, flag: &str) -> Result<RatVector> {
    let coords = text
        .split(',')
        .map(|t| {
            parse_rational(t.trim())
                .ok_or_else(|| Error::input(flag, format!("not a rational number: {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.len() != dim {
        return Err(Error::input(
            flag,
            format!("expected {dim} coordinates, found {}", coords.len()),
        ));
    }
    Ok(RatVector::new(coords))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub lhs: Estimate,
    pub rhs: Estimate,
    pub pass: bool,
}

impl CheckRecord {
    fn from_identity(name: String, c: IdentityCheck) -> Self {
        CheckRecord {
            name,
            lhs: c.lhs,
            rhs: c.rhs,
            pass: c.pass,
        }
    }

    fn exact(name: String, lhs: f64, rhs: f64) -> Self {
        CheckRecord {
            name,
            lhs: Estimate::exact(lhs),
            rhs: Estimate::exact(rhs),
            pass: lhs == rhs,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloRecord {
    pub samples: u64,
    pub seed: u64,
    pub confidence: f64,
    pub hoeffding_bound: f64,
}

/// Everything a command computed. Serialized keys follow field order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub measure: String,
    pub points: Vec<CurvatureValue>,
    pub curvature_sum: Option<Estimate>,
    pub euler_characteristic: Option<i64>,
    pub checks: Vec<CheckRecord>,
    pub tolerance: f64,
    pub monte_carlo: MonteCarloRecord,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    GaussBonnet,
    Curvature,
    Euler,
    Index,
    ComplexCheck,
    ConeIdentities,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::GaussBonnet => "gauss-bonnet",
            Command::Curvature => "curvature",
            Command::Euler => "euler",
            Command::Index => "index",
            Command::ComplexCheck => "complex-check",
            Command::ConeIdentities => "cone-identities",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub mc: MonteCarloConfig,
    pub tolerance: f64,
    /// Overrides the document's measure.
    pub measure: Option<SphereMeasure>,
    pub point: Option<RatVector>,
    pub xi: Option<RatVector>,
    pub timing: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            mc: MonteCarloConfig::default(),
            tolerance: DEFAULT_TOLERANCE,
            measure: None,
            point: None,
            xi: None,
            timing: false,
        }
    }
}

/// Runs one command on a parsed document.
pub fn run(command: Command, doc: &InputDocument, opts: &RunOptions) -> Result<ReportDocument> {
    let start = Instant::now();
    let measure = match &opts.measure {
        Some(m) => m.clone(),
        None => doc
            .measure
            .as_ref()
            .map_or(SphereMeasure::Uniform, |m| m.to_measure()),
    };
    let mut report = ReportDocument {
        command: command.name().to_string(),
        measure: measure.name().to_string(),
        points: Vec::new(),
        curvature_sum: None,
        euler_characteristic: None,
        checks: Vec::new(),
        tolerance: opts.tolerance,
        monte_carlo: MonteCarloRecord {
            samples: opts.mc.samples,
            seed: opts.mc.seed,
            confidence: opts.mc.confidence,
            hoeffding_bound: opts.mc.hoeffding_bound(),
        },
        pass: true,
        timing_ms: None,
    };
    let phi = ConeValuation::from_measure(measure, opts.mc);
    let p = doc.polyhedron()?;
    match command {
        Command::GaussBonnet => {
            let r = gauss_bonnet_report(&p, &phi, opts.tolerance)?;
            report.points = r.points;
            report.curvature_sum = Some(r.curvature_sum);
            report.euler_characteristic = Some(r.euler_characteristic);
            report.pass = r.pass;
        }
        Command::Curvature => {
            let x = opts
                .point
                .clone()
                .ok_or_else(|| Error::input("--point", "the curvature command needs --point"))?;
            if x.dim() != doc.dimension {
                return Err(Error::input(
                    "--point",
                    format!("expected {} coordinates", doc.dimension),
                ));
            }
            report.points = vec![vertex_curvature(&phi, &p, &x)?];
        }
        Command::Euler => {
            let chi = euler_characteristic(&p)?;
            report.euler_characteristic = Some(chi);
            if let Some(z) = doc.cell_complex()? {
                let chi_z = euler_characteristic_complex(&z);
                report.checks.push(CheckRecord::exact(
                    "χ of pieces = χ of complex".into(),
                    chi as f64,
                    chi_z as f64,
                ));
            }
        }
        Command::Index => {
            let xi = opts
                .xi
                .clone()
                .or_else(|| doc.direction.clone())
                .ok_or_else(|| {
                    Error::input("--xi", "the index command needs an explicit direction")
                })?;
            let r = critical_point_report(&p, &xi, opts.tolerance)?;
            report.points = r.points;
            report.curvature_sum = Some(r.curvature_sum);
            report.euler_characteristic = Some(r.euler_characteristic);
            report.pass = r.pass;
        }
        Command::ComplexCheck => {
            let z = doc.cell_complex()?.ok_or_else(|| {
                Error::input("complex", "the complex-check command needs a complex")
            })?;
            complex_checks(&z, opts, &mut report)?;
        }
        Command::ConeIdentities => {
            for (i, piece) in p.pieces().iter().enumerate() {
                cone_checks(i, piece, opts, &mut report)?;
            }
        }
    }
    report.pass &= report.checks.iter().all(|c| c.pass);
    if opts.timing {
        report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(report)
}

fn complex_checks(z: &CellComplex, opts: &RunOptions, report: &mut ReportDocument) -> Result<()> {
    let chi = euler_characteristic_complex(z);
    let mut c_sum = Rational::default();
    for x in z.vertices() {
        let g = complex_curvature_g_with(z, &x, &opts.mc)?;
        let brin = brin_check(z, &x, opts.tolerance)?;
        report.checks.push(CheckRecord::from_identity(
            format!("G = Γ(|Z|) at {x}"),
            brin,
        ));
        c_sum += combinatorial_curvature_c(z, &x);
        report.points.push(CurvatureValue {
            point: x,
            value: g.value,
            abs_error: g.abs_error,
        });
    }
    let sum: Estimate = report.points.iter().map(|c| c.estimate()).sum();
    report.checks.push(CheckRecord::from_identity(
        "Σ G = χ(Z)".into(),
        IdentityCheck {
            lhs: sum,
            rhs: Estimate::exact(chi as f64),
            tolerance: opts.tolerance,
            pass: sum.agrees_with(chi as f64, opts.tolerance),
        },
    ));
    let c_pass = c_sum == Rational::from_integer(chi.into());
    report.checks.push(CheckRecord {
        name: "Σ C = χ(Z)".into(),
        lhs: Estimate::exact(rat_to_f64(&c_sum)),
        rhs: Estimate::exact(chi as f64),
        pass: c_pass,
    });
    report.curvature_sum = Some(sum);
    report.euler_characteristic = Some(chi);
    Ok(())
}

fn cone_checks(
    i: usize,
    piece: &ConvexPolytope,
    opts: &RunOptions,
    report: &mut ReportDocument,
) -> Result<()> {
    let mut worst = 0i64;
    for f in piece.all_faces().iter().filter(|f| f.dim < piece.dim()) {
        worst = worst.max(local_euler_sum(piece, f)?.abs());
    }
    report.checks.push(CheckRecord::exact(
        format!("local Euler relation, piece {i}"),
        worst as f64,
        0.0,
    ));
    for x in piece.vertices() {
        let c = tangent_cone_of_polytope(piece, x)?;
        let s = sommerville_check_with(&c, opts.tolerance, &opts.mc)?;
        report.checks.push(CheckRecord::from_identity(
            format!("Σ (−1)^dim F Γ(F) = Γ(C), piece {i} at {x}"),
            s,
        ));
        let fan = ConicComplex::from_cone(&c)?;
        let g = conic_gamma_sum(&fan, opts.tolerance)?;
        report.checks.push(CheckRecord::from_identity(
            format!("conic complex sum, piece {i} at {x}"),
            g,
        ));
        let mut worst = 0i64;
        for f in c.faces().iter().filter(|f| **f != c) {
            worst = worst.max(local_euler_sum_cone(&c, f)?.abs());
        }
        report.checks.push(CheckRecord::exact(
            format!("local Euler relation, tangent cone of piece {i} at {x}"),
            worst as f64,
            0.0,
        ));
    }
    Ok(())
}

/// Rounds away float noise below `1e-12` for display.
fn show(v: f64) -> String {
    let r = (v * 1e12).round() / 1e12;
    if r == 0.0 {
        "0".into()
    } else {
        r.to_string()
    }
}

fn show_estimate(e: &Estimate) -> String {
    format!("{} ± {}", show(e.value), show(e.abs_error))
}

/// Human-readable report: one line per point (sorted), one per check, then a summary.
pub fn emit_text(report: &ReportDocument, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{} (measure {})", report.command, report.measure)?;
    for c in &report.points {
        writeln!(out, "{}: {}", c.point, show_estimate(&c.estimate()))?;
    }
    for c in &report.checks {
        let verdict = if c.pass { "pass" } else { "FAIL" };
        writeln!(
            out,
            "{}: {} vs {}, {verdict}",
            c.name,
            show_estimate(&c.lhs),
            show_estimate(&c.rhs)
        )?;
    }
    let mut summary = Vec::new();
    if let Some(chi) = report.euler_characteristic {
        summary.push(format!("χ = {chi}"));
    }
    if let Some(sum) = &report.curvature_sum {
        summary.push(format!("sum = {}", show(sum.value)));
    }
    summary.push(if report.pass {
        "pass".into()
    } else {
        "fail".into()
    });
    writeln!(out, "{}", summary.join(", "))
}

pub fn emit_json(report: &ReportDocument, out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, report)?;
    writeln!(out)
}

#[derive(Parser, Debug)]
#[command(
    name = "polycurv",
    version,
    about = "Vertex curvatures and Gauss-Bonnet checks for unions of polytopes"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Curvature at every candidate point, summed and compared with χ.
    GaussBonnet(Common),
    /// Curvature at one point.
    Curvature {
        #[command(flatten)]
        common: Common,
        /// Point such as `1,1/2`.
        #[arg(long)]
        point: String,
    },
    /// Euler characteristic, compared with the complex when one is given.
    Euler(Common),
    /// Critical-point indices for the height function `⟨ξ, ·⟩`.
    Index {
        #[command(flatten)]
        common: Common,
        /// Direction such as `1,2`.
        #[arg(long)]
        xi: Option<String>,
    },
    /// Angle identities on the document's cell complex.
    ComplexCheck(Common),
    /// Cone angle identities at every vertex of every piece.
    ConeIdentities(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Input document, or `-` for stdin.
    input: PathBuf,
    #[arg(long, default_value_t = 100_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0 - 1e-6)]
    confidence: f64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// `uniform` or a density file.
    #[arg(long)]
    measure: Option<String>,
    #[arg(long)]
    json: bool,
    /// Include wall-clock time in the report.
    #[arg(long)]
    timing: bool,
}

fn load_measure(arg: &str) -> Result<SphereMeasure> {
    if arg == "uniform" {
        return Ok(SphereMeasure::Uniform);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Error::input(arg, e.to_string()))?;
    let spec: MeasureSpec = serde_json::from_str(&text)
        .map_err(|e| Error::input(format!("{arg}:{}:{}", e.line(), e.column()), e.to_string()))?;
    Ok(spec.to_measure())
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<bool> {
    let (command, common, point, xi) = match cli.command {
        CliCommand::GaussBonnet(c) => (Command::GaussBonnet, c, None, None),
        CliCommand::Curvature { common, point } => (Command::Curvature, common, Some(point), None),
        CliCommand::Euler(c) => (Command::Euler, c, None, None),
        CliCommand::Index { common, xi } => (Command::Index, common, None, xi),
        CliCommand::ComplexCheck(c) => (Command::ComplexCheck, c, None, None),
        CliCommand::ConeIdentities(c) => (Command::ConeIdentities, c, None, None),
    };
    let doc = parse_input_file(&common.input)?;
    let mc = MonteCarloConfig::new(common.samples, common.seed, common.confidence);
    mc.validate()?;
    let opts = RunOptions {
        mc,
        tolerance: common.tolerance,
        measure: common.measure.as_deref().map(load_measure).transpose()?,
        point: point
            .map(|p| parse_point_arg(&p, doc.dimension, "--point"))
            .transpose()?,
        xi: xi
            .map(|p| parse_point_arg(&p, doc.dimension, "--xi"))
            .transpose()?,
        timing: common.timing,
    };
    let report = run(command, &doc, &opts)?;
    let written = if common.json {
        emit_json(&report, out)
    } else {
        emit_text(&report, out)
    };
    written.map_err(|e| Error::input("<stdout>", e.to_string()))?;
    Ok(report.pass)
}

/// Entry point shared by the binary and the tests; returns the exit code.
pub fn main_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
