//! The `radialfall` command-line interface.
//!
//! [`run`] parses arguments, executes one subcommand and writes the report.
//! Output is buffered so that a failing invocation writes nothing to stdout
//! and exactly one diagnostic line to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{Map, Value};

use crate::constants::{gravity_field_of, lookup_body, GravityField, CATALOG, G_NEWTON};
use crate::error::Error;
use crate::freefall::{
    approximation_error, collapse_time, fall, fall_time_constant_g, gravitational_acceleration,
    sample_trajectory, FallScenario, RadialVelocity, Speed,
};
use crate::numerics::{integrate_radial_fall_at, ToleranceConfig};
use crate::orbits::{circular_period, degenerate_limit_check, elliptical_period, EllipseGeometry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Significant digits used for times in human output.
const HUMAN_TIME_DIGITS: usize = 6;

#[derive(Debug, Parser)]
#[command(
    name = "radialfall",
    version,
    about = "Radial free fall and orbital periods under inverse-square gravity"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatKind::Human)]
    format: FormatKind,

    /// Significant digits for numeric output (1..=17).
    #[arg(long, global = true, default_value_t = 9, value_parser = clap::value_parser!(u8).range(1..=17))]
    precision: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatKind {
    Human,
    Csv,
    Json,
}

/// Output format plus significant digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutputFormat {
    pub kind: FormatKind,
    pub precision: usize,
}

impl OutputFormat {
    pub fn new(kind: FormatKind, precision: usize) -> Result<Self, Error> {
        if !(1..=17).contains(&precision) {
            return Err(Error::domain(format!(
                "precision must lie in 1..=17, got {precision}"
            )));
        }
        Ok(OutputFormat { kind, precision })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fall time from r0 to r1, exact and/or constant-g.
    Falltime(FalltimeArgs),
    /// Time to fall from a radius to the center.
    Collapse(CollapseArgs),
    /// Tabulate r(t) and v(t) along a fall.
    Trajectory(TrajectoryArgs),
    /// Relative error of the constant-g model against the exact fall time.
    Compare(CompareArgs),
    /// Circular or elliptical orbital period.
    Period(PeriodArgs),
    /// Catalog of celestial bodies.
    Bodies {
        #[command(subcommand)]
        action: BodiesAction,
    },
}

#[derive(Debug, Subcommand)]
enum BodiesAction {
    /// List every catalog body.
    List,
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Gravitational parameter μ = GM in m³/s².
    #[arg(long, conflicts_with = "body")]
    mu: Option<f64>,

    /// Catalog body supplying μ (see `bodies list`).
    #[arg(long)]
    body: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Exact,
    ConstantG,
    Both,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct FalltimeArgs {
    /// Release radius in meters.
    #[arg(long)]
    r0: f64,
    /// Target radius in meters.
    #[arg(long)]
    r1: f64,
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long, value_enum, default_value_t = Model::Exact)]
    model: Model,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct CollapseArgs {
    /// Catalog body; uses its mean radius and μ.
    #[arg(long, conflicts_with_all = ["radius", "mu"])]
    body: Option<String>,
    /// Starting radius in meters.
    #[arg(long, requires = "mu")]
    radius: Option<f64>,
    #[arg(long, requires = "radius")]
    mu: Option<f64>,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct TrajectoryArgs {
    #[arg(long)]
    r0: f64,
    #[command(flatten)]
    field: FieldArgs,
    /// Number of samples (≥ 2).
    #[arg(long)]
    samples: usize,
    /// Radius at which the tabulation stops.
    #[arg(long, default_value_t = 0.0)]
    floor: f64,
    /// Also integrate the equation of motion and report deviations.
    #[arg(long)]
    oracle: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct CompareArgs {
    #[arg(long)]
    r0: f64,
    #[command(flatten)]
    field: FieldArgs,
    /// Comma-separated relative drop heights ε = h / r0.
    #[arg(
        long,
        value_delimiter = ',',
        required = true,
        allow_hyphen_values = true
    )]
    eps_list: Vec<f64>,
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("shape").required(true).args(["circular", "ellipse"]))]
#[command(allow_negative_numbers = true)]
struct PeriodArgs {
    #[arg(long, requires = "r")]
    circular: bool,
    #[arg(long, requires_all = ["rmax", "rmin"])]
    ellipse: bool,
    /// Circular orbit radius in meters.
    #[arg(long)]
    r: Option<f64>,
    #[arg(long)]
    rmax: Option<f64>,
    #[arg(long)]
    rmin: Option<f64>,
    #[command(flatten)]
    field: FieldArgs,
    /// Comma-separated δ values for the degenerate-ellipse table.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    limit_check: Option<Vec<f64>>,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let _ = writeln!(stderr, "radialfall: {}", one_line(&e.render().to_string()));
            return EXIT_USAGE;
        }
    };

    let format = OutputFormat {
        kind: cli.format,
        precision: cli.precision as usize,
    };
    match execute(&cli.command, format) {
        Ok(text) => {
            let _ = stdout.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "radialfall: {e}");
            if e.is_numerical() {
                EXIT_NUMERICAL
            } else {
                EXIT_USAGE
            }
        }
    }
}

/// Folds a clap diagnostic into a single line, dropping the usage block.
fn one_line(rendered: &str) -> String {
    let text = rendered
        .lines()
        .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join(" ");
    let text = text.trim_start_matches("error: ");
    if text.is_empty() {
        "invalid arguments".to_string()
    } else {
        text.to_string()
    }
}

fn execute(command: &Command, format: OutputFormat) -> Result<String, Error> {
    let report = match command {
        Command::Falltime(a) => cmd_falltime(a)?,
        Command::Collapse(a) => cmd_collapse(a)?,
        Command::Trajectory(a) => cmd_trajectory(a)?,
        Command::Compare(a) => cmd_compare(a)?,
        Command::Period(a) => cmd_period(a)?,
        Command::Bodies {
            action: BodiesAction::List,
        } => cmd_bodies(),
    };
    Ok(report.render(format))
}

/// A resolved gravity source with the inputs it came from.
struct Source {
    field: GravityField,
    body: Option<&'static str>,
}

fn resolve_field(args: &FieldArgs) -> Result<Source, Error> {
    match (args.mu, &args.body) {
        (Some(_), Some(_)) => Err(Error::domain("--mu and --body are mutually exclusive")),
        (Some(mu), None) => Ok(Source {
            field: GravityField::new(mu)?,
            body: None,
        }),
        (None, Some(name)) => {
            let body = lookup_body(name)?;
            Ok(Source {
                field: gravity_field_of(&body),
                body: Some(body.name),
            })
        }
        (None, None) => Err(Error::domain("one of --mu or --body is required")),
    }
}

fn scenario_header(source: &Source) -> Vec<(&'static str, Cell)> {
    let mut fields = Vec::new();
    if let Some(name) = source.body {
        fields.push(("body", Cell::Text(name.to_string())));
    }
    fields.push(("mu_m3ps2", Cell::Num(source.field.mu())));
    fields
}

fn cmd_falltime(a: &FalltimeArgs) -> Result<Report, Error> {
    let source = resolve_field(&a.field)?;
    let scenario = FallScenario::new(a.r0, a.r1, source.field)?;
    let mut inputs = vec![("r0_m", Cell::Num(a.r0)), ("r1_m", Cell::Num(a.r1))];
    inputs.extend(scenario_header(&source));

    let h = a.r0 - a.r1;
    let mut result = Vec::new();
    if matches!(a.model, Model::Exact | Model::Both) {
        let exact = fall(&scenario);
        result.push(("t_exact_s", Cell::Time(exact.elapsed)));
        result.push((
            "impact_speed_mps",
            match exact.impact_speed {
                Speed::Finite(v) => Cell::Num(v),
                Speed::Unbounded => Cell::Unbounded,
            },
        ));
    }
    if matches!(a.model, Model::ConstantG | Model::Both) {
        let g = gravitational_acceleration(a.r0, source.field)?;
        result.push(("g_mps2", Cell::Num(g)));
        result.push(("t_constant_g_s", Cell::Time(fall_time_constant_g(h, g)?)));
    }
    if a.model == Model::Both {
        let discrepancy = if h > 0.0 {
            Cell::Num(approximation_error(a.r0, h, source.field)?)
        } else {
            Cell::Missing
        };
        result.push(("rel_discrepancy", discrepancy));
    }
    Ok(Report::single("falltime", inputs, result))
}

fn cmd_collapse(a: &CollapseArgs) -> Result<Report, Error> {
    let (radius, source) = match (&a.body, a.radius, a.mu) {
        (Some(name), None, None) => {
            let body = lookup_body(name)?;
            (
                body.mean_radius,
                Source {
                    field: gravity_field_of(&body),
                    body: Some(body.name),
                },
            )
        }
        (None, Some(radius), Some(mu)) => (
            radius,
            Source {
                field: GravityField::new(mu)?,
                body: None,
            },
        ),
        _ => {
            return Err(Error::domain(
                "collapse needs --body, or both --radius and --mu",
            ))
        }
    };
    let t = collapse_time(radius, source.field)?;
    let mut inputs = vec![("radius_m", Cell::Num(radius))];
    inputs.extend(scenario_header(&source));
    let result = vec![
        ("collapse_time_s", Cell::Time(t)),
        ("collapse_time_min", Cell::Num(t / 60.0)),
    ];
    Ok(Report::single("collapse", inputs, result))
}

fn cmd_trajectory(a: &TrajectoryArgs) -> Result<Report, Error> {
    let source = resolve_field(&a.field)?;
    if a.oracle && a.floor <= 0.0 {
        return Err(Error::domain(
            "--oracle requires --floor > 0: the equation of motion is singular at r = 0",
        ));
    }
    let samples = sample_trajectory(a.r0, source.field, a.samples, a.floor)?;

    let mut columns = vec!["t_s", "r_m", "v_mps"];
    let mut rows: Vec<Vec<Cell>> = samples
        .iter()
        .map(|s| {
            let v = match s.v {
                RadialVelocity::Finite(v) => Cell::Num(v),
                RadialVelocity::Unbounded => Cell::Unbounded,
            };
            vec![Cell::Num(s.t), Cell::Num(s.r), v]
        })
        .collect();

    if a.oracle {
        columns.extend(["r_oracle_m", "rel_dev"]);
        let times: Vec<f64> = samples.iter().map(|s| s.t).collect();
        let oracle =
            integrate_radial_fall_at(a.r0, source.field, &times, &ToleranceConfig::oracle())?;
        for ((row, s), o) in rows.iter_mut().zip(&samples).zip(&oracle) {
            row.push(Cell::Num(o.r));
            row.push(Cell::Num((o.r - s.r).abs() / s.r));
        }
    }

    let mut inputs = vec![
        ("r0_m", Cell::Num(a.r0)),
        ("floor_m", Cell::Num(a.floor)),
        ("samples", Cell::Count(a.samples)),
        ("oracle", Cell::Flag(a.oracle)),
    ];
    inputs.extend(scenario_header(&source));
    Ok(Report {
        command: "trajectory",
        inputs,
        body: Body::Samples { columns, rows },
    })
}

fn cmd_compare(a: &CompareArgs) -> Result<Report, Error> {
    let source = resolve_field(&a.field)?;
    if !(a.r0 > 0.0 && a.r0.is_finite()) {
        return Err(Error::domain(format!("r0 must be positive, got {}", a.r0)));
    }
    let g = gravitational_acceleration(a.r0, source.field)?;
    let columns = vec![
        "eps",
        "t_exact_s",
        "t_constant_g_s",
        "rel_error",
        "error_over_eps",
    ];
    let rows = a
        .eps_list
        .iter()
        .map(|&eps| {
            if !(eps > 0.0 && eps <= 1.0) {
                return Err(Error::domain(format!("eps must lie in (0, 1], got {eps}")));
            }
            let h = eps * a.r0;
            let exact = fall(&FallScenario::new(a.r0, a.r0 - h, source.field)?).elapsed;
            let approx = fall_time_constant_g(h, g)?;
            let err = approximation_error(a.r0, h, source.field)?;
            Ok(vec![
                Cell::Num(eps),
                Cell::Time(exact),
                Cell::Time(approx),
                Cell::Num(err),
                Cell::Num(err / eps),
            ])
        })
        .collect::<Result<Vec<_>, Error>>()?;

    let mut inputs = vec![("r0_m", Cell::Num(a.r0))];
    inputs.extend(scenario_header(&source));
    Ok(Report {
        command: "compare",
        inputs,
        body: Body::Table { columns, rows },
    })
}

fn cmd_period(a: &PeriodArgs) -> Result<Report, Error> {
    let source = resolve_field(&a.field)?;
    let mut inputs = Vec::new();
    let mut result = Vec::new();

    let reference_radius = if a.circular {
        let r =
            a.r.ok_or_else(|| Error::domain("--circular requires --r"))?;
        inputs.push(("r_m", Cell::Num(r)));
        let period = circular_period(r, source.field)?;
        let t_c = collapse_time(r, source.field)?;
        result.push(("period_s", Cell::Time(period)));
        result.push(("collapse_time_s", Cell::Time(t_c)));
        result.push(("period_over_collapse", Cell::Num(period / t_c)));
        r
    } else {
        let (rmax, rmin) = match (a.rmax, a.rmin) {
            (Some(rmax), Some(rmin)) => (rmax, rmin),
            _ => return Err(Error::domain("--ellipse requires --rmax and --rmin")),
        };
        inputs.push(("rmax_m", Cell::Num(rmax)));
        inputs.push(("rmin_m", Cell::Num(rmin)));
        let geometry = EllipseGeometry::new(rmax, rmin)?;
        let period = elliptical_period(&geometry, source.field)?;
        let t_c = collapse_time(rmax, source.field)?;
        result.push(("period_s", Cell::Time(period)));
        result.push(("half_period_s", Cell::Time(0.5 * period)));
        result.push(("collapse_time_s", Cell::Time(t_c)));
        result.push(("half_period_over_collapse", Cell::Num(0.5 * period / t_c)));
        rmax
    };
    inputs.extend(scenario_header(&source));

    let body = match &a.limit_check {
        None => Body::Single(result),
        Some(deltas) => {
            let rows = degenerate_limit_check(reference_radius, source.field, deltas)?
                .into_iter()
                .map(|row| vec![Cell::Num(row.delta), Cell::Num(row.ratio)])
                .collect();
            Body::WithTable {
                result,
                columns: vec!["delta", "ratio"],
                rows,
            }
        }
    };
    Ok(Report {
        command: "period",
        inputs,
        body,
    })
}

fn cmd_bodies() -> Report {
    let columns = vec![
        "name",
        "mass_kg",
        "radius_m",
        "mu_m3ps2",
        "surface_g_mps2",
        "collapse_time_s",
    ];
    let rows = CATALOG
        .iter()
        .map(|b| {
            let field = gravity_field_of(b);
            // catalog radii are positive by construction
            let g = gravitational_acceleration(b.mean_radius, field).expect("catalog radius");
            let t_c = collapse_time(b.mean_radius, field).expect("catalog radius");
            vec![
                Cell::Text(b.name.to_string()),
                Cell::Num(b.mass),
                Cell::Num(b.mean_radius),
                Cell::Num(field.mu()),
                Cell::Num(g),
                Cell::Time(t_c),
            ]
        })
        .collect();
    Report {
        command: "bodies",
        inputs: vec![("newtonian_constant", Cell::Num(G_NEWTON))],
        body: Body::Table { columns, rows },
    }
}

// ---------------------------------------------------------------- rendering

#[derive(Debug, Clone)]
enum Cell {
    Num(f64),
    /// A duration; human output adds a friendly unit when long.
    Time(f64),
    Count(usize),
    Flag(bool),
    Text(String),
    /// Diverging velocity at the central point.
    Unbounded,
    Missing,
}

impl Cell {
    fn csv(&self, digits: usize) -> String {
        match self {
            Cell::Num(x) | Cell::Time(x) => format_sig(*x, digits),
            Cell::Count(n) => n.to_string(),
            Cell::Flag(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Unbounded => "-inf".to_string(),
            Cell::Missing => String::new(),
        }
    }

    fn human(&self, digits: usize) -> String {
        match self {
            Cell::Time(t) => {
                let base = format!("{} s", format_sig(*t, HUMAN_TIME_DIGITS));
                match friendly_duration(*t) {
                    Some(friendly) => format!("{base} ({friendly})"),
                    None => base,
                }
            }
            Cell::Unbounded => "unbounded".to_string(),
            Cell::Missing => "n/a".to_string(),
            other => other.csv(digits),
        }
    }

    fn json(&self, digits: usize) -> Value {
        match self {
            Cell::Num(x) | Cell::Time(x) => json_number(*x, digits),
            Cell::Count(n) => Value::from(*n),
            Cell::Flag(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Unbounded | Cell::Missing => Value::Null,
        }
    }
}

enum Body {
    Single(Vec<(&'static str, Cell)>),
    Samples {
        columns: Vec<&'static str>,
        rows: Vec<Vec<Cell>>,
    },
    Table {
        columns: Vec<&'static str>,
        rows: Vec<Vec<Cell>>,
    },
    WithTable {
        result: Vec<(&'static str, Cell)>,
        columns: Vec<&'static str>,
        rows: Vec<Vec<Cell>>,
    },
}

struct Report {
    command: &'static str,
    inputs: Vec<(&'static str, Cell)>,
    body: Body,
}

impl Report {
    fn single(
        command: &'static str,
        inputs: Vec<(&'static str, Cell)>,
        result: Vec<(&'static str, Cell)>,
    ) -> Self {
        Report {
            command,
            inputs,
            body: Body::Single(result),
        }
    }

    fn render(&self, format: OutputFormat) -> String {
        match format.kind {
            FormatKind::Human => self.human(format.precision),
            FormatKind::Csv => self.csv(format.precision),
            FormatKind::Json => {
                let mut text = serde_json::to_string_pretty(&self.json(format.precision))
                    .expect("serializable");
                text.push('\n');
                text
            }
        }
    }

    fn csv(&self, digits: usize) -> String {
        let (columns, rows): (Vec<&str>, Vec<Vec<&Cell>>) = match &self.body {
            Body::Single(result) => (
                result.iter().map(|(k, _)| *k).collect(),
                vec![result.iter().map(|(_, c)| c).collect()],
            ),
            Body::Samples { columns, rows }
            | Body::Table { columns, rows }
            | Body::WithTable { columns, rows, .. } => (
                columns.clone(),
                rows.iter().map(|r| r.iter().collect()).collect(),
            ),
        };
        let mut out = columns.join(",");
        out.push('\n');
        for row in rows {
            let line: Vec<String> = row.iter().map(|c| c.csv(digits)).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    fn human(&self, digits: usize) -> String {
        let mut out = String::new();
        let pairs = |out: &mut String, items: &[(&str, Cell)]| {
            let width = items.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, c) in items {
                let _ = writeln!(out, "{k:<width$}  {}", c.human(digits));
            }
        };
        let table = |out: &mut String, columns: &[&str], rows: &[Vec<Cell>]| {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(|c| c.csv(digits)).collect())
                .collect();
            let widths: Vec<usize> = (0..columns.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r[i].len())
                        .chain([columns[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let fmt_row = |items: Vec<&str>| {
                items
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let _ = writeln!(out, "{}", fmt_row(columns.to_vec()));
            for r in &cells {
                let _ = writeln!(out, "{}", fmt_row(r.iter().map(String::as_str).collect()));
            }
        };

        pairs(&mut out, &self.inputs);
        out.push('\n');
        match &self.body {
            Body::Single(result) => pairs(&mut out, result),
            Body::Samples { columns, rows } | Body::Table { columns, rows } => {
                table(&mut out, columns, rows)
            }
            Body::WithTable {
                result,
                columns,
                rows,
            } => {
                pairs(&mut out, result);
                out.push('\n');
                table(&mut out, columns, rows);
            }
        }
        out
    }

    fn json(&self, digits: usize) -> Value {
        let object = |items: &[(&str, Cell)]| -> Value {
            Value::Object(
                items
                    .iter()
                    .map(|(k, c)| (k.to_string(), c.json(digits)))
                    .collect(),
            )
        };
        let records = |columns: &[&str], rows: &[Vec<Cell>]| -> Value {
            Value::Array(
                rows.iter()
                    .map(|r| {
                        Value::Object(
                            columns
                                .iter()
                                .zip(r)
                                .map(|(k, c)| (k.to_string(), c.json(digits)))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        };

        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.into()));
        top.insert("scenario".into(), object(&self.inputs));
        match &self.body {
            Body::Single(result) => {
                top.insert("result".into(), object(result));
            }
            Body::Samples { columns, rows } => {
                top.insert("samples".into(), records(columns, rows));
            }
            Body::Table { columns, rows } => {
                top.insert("result".into(), records(columns, rows));
            }
            Body::WithTable {
                result,
                columns,
                rows,
            } => {
                let mut obj = match object(result) {
                    Value::Object(m) => m,
                    _ => unreachable!(),
                };
                obj.insert("limit_check".into(), records(columns, rows));
                top.insert("result".into(), Value::Object(obj));
            }
        }
        Value::Object(top)
    }
}

/// Formats `x` with `digits` significant digits, `%g` style: fixed notation
/// for moderate exponents, scientific otherwise, trailing zeros trimmed.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let digits = digits.clamp(1, 17);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn json_number(x: f64, digits: usize) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format_sig(x, digits)
        .parse()
        .expect("formatted float parses");
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

/// "≈ 14.9 min" style rendering for durations over two minutes.
pub fn friendly_duration(seconds: f64) -> Option<String> {
    const MINUTE: f64 = 60.0;
    const HOUR: f64 = 3600.0;
    const DAY: f64 = 86_400.0;
    const YEAR: f64 = 365.25 * DAY;
    if !(seconds > 120.0) || !seconds.is_finite() {
        return None;
    }
    let (value, unit) = if seconds < 2.0 * HOUR {
        (seconds / MINUTE, "min")
    } else if seconds < 2.0 * DAY {
        (seconds / HOUR, "h")
    } else if seconds < YEAR {
        (seconds / DAY, "days")
    } else {
        (seconds / YEAR, "years")
    };
    Some(format!("≈ {} {unit}", format_sig(value, 3)))
}
