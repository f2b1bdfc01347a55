//! `gft` — command-line front end for the starlike-class toolkit.
//!
//! Subcommands:
//!
//! * `radii`    — solve the thirteen radius problems and compare each root
//!   with its quoted constant,
//! * `verify`   — radii plus the seeded property suites,
//! * `member`   — test one function for class membership,
//! * `construct`— build a class member from a perturbation document via the
//!   double-integral construction,
//! * `catalog`  — print the starlike-target table,
//! * `plot`     — emit boundary traces and radius profiles as plain data.
//!
//! Tabular commands honor `--format {json,csv}`; `member` and `construct`
//! emit JSON documents regardless of format. Every output begins with a
//! header naming the tool version and the columns. All randomness is seeded,
//! so identical flags produce byte-identical output.
//!
//! Exit status: 0 on success, 1 when a verification check fails (a radius
//! beyond tolerance, a failed suite, a membership verdict of "not
//! satisfied"), 2 for unusable input (bad flags, unreadable or malformed
//! documents).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use gft_core::{
    catalog, check_sufficient_condition, disk_radius_r1, entry, in_g, in_omega,
    radius_catalog, subordination_disk_test, taylor_coefficients, verify_radii, verify_with,
    AnalyticMap, ClassParams, Condition, DiskGrid, GftError, MaMindaName, MembershipReport,
    RadiusOutcome, SeriesDocument, SuiteOutcome,
};

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Coefficients below this magnitude in `construct` output are quadrature
/// noise around an exact zero and are snapped to zero so the emitted
/// document round-trips through the normalized-series parser.
const COEFF_SNAP: f64 = 1e-13;

#[derive(Parser)]
#[command(
    name = "gft",
    version,
    about = "Radius problems and membership oracles for two classes of normalized analytic functions"
)]
struct Cli {
    /// Output format for tabular commands
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Tolerance for comparing computed radii with quoted constants
    /// (default: each problem's own tolerance)
    #[arg(long, global = true, env = "GFT_DEFAULT_TOL")]
    tol: Option<f64>,
    /// Radius of the sampling circle for membership suprema
    #[arg(long, global = true, default_value_t = 0.999)]
    guard: f64,
    /// Angular sample count per circle
    #[arg(long, global = true, default_value_t = 4096)]
    angles: usize,
    /// Seed for the randomized suites
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    /// |z f' - f| < 1/2 on the disk
    Omega,
    /// The two-parameter class; requires --lambda and --alpha
    G,
    /// Starlike with respect to a catalog target; requires --phi
    Sstar,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConditionArg {
    /// |z f'' - alpha (f' - f/z)| below the threshold
    First,
    /// |z f'' - alpha (f' - 1)| below the contracted threshold
    Second,
}

impl From<ConditionArg> for Condition {
    fn from(c: ConditionArg) -> Condition {
        match c {
            ConditionArg::First => Condition::First,
            ConditionArg::Second => Condition::Second,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Radii,
    Bounds,
    Sufficiency,
    Inclusion,
    Monotonicity,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the thirteen radius problems and compare with the quoted constants
    Radii,
    /// Run the radius problems plus the seeded property suites
    Verify {
        /// Which suite to run
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Test one function for membership in a class
    ///
    /// The function under test comes from --series (a JSON document
    /// {"n": 1, "coeffs": [[re, im], ...]} with coeffs[0] = [1, 0]) or, for
    /// omega/g, from --phi naming a catalog target whose extremal function
    /// is tested. For --class sstar, --phi names the target family and the
    /// test is the subordination disk criterion with c = r1/(1 + r1).
    /// Emits the membership report as JSON; exit 1 when not satisfied.
    Member {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// First class parameter (required for --class g)
        #[arg(long)]
        lambda: Option<f64>,
        /// Second class parameter (required for --class g)
        #[arg(long)]
        alpha: Option<f64>,
        /// Catalog target name: L, e, RL, C, S, Cr, SG, wp, Ne
        #[arg(long)]
        phi: Option<String>,
        /// Path to a normalized power-series document
        #[arg(long)]
        series: Option<PathBuf>,
    },
    /// Build a member from a perturbation document via the double integral
    ///
    /// Reads g as a JSON document {"coeffs": [[re, im], ...]} where
    /// coeffs[k] is the coefficient of z^k (constant term first; "n" is
    /// ignored), builds f, and emits f's power-series document (coefficients
    /// recovered by quadrature on a circle) together with the sufficient-
    /// condition report. Always JSON; exit 1 when the condition fails.
    Construct {
        /// Which sufficient condition shapes the construction
        #[arg(long, value_enum, default_value_t = ConditionArg::First)]
        condition: ConditionArg,
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        alpha: f64,
        /// Normalization order: f = z + a_{n+1} z^{n+1} + ...
        #[arg(long, default_value_t = 1)]
        n: u32,
        /// Path to the perturbation document
        #[arg(long)]
        g: PathBuf,
        /// Number of Taylor coefficients to recover
        #[arg(long, default_value_t = 8)]
        coeffs: usize,
    },
    /// Print the starlike-target table: name, disk radius r1, distance formula
    Catalog,
    /// Emit plot data: a boundary trace of a target, or a radius profile
    ///
    /// Exactly one of --target (theta -> phi(r e^{i theta}) on |z| = r) or
    /// --problem (r -> psi(r) for one radius problem) must be given.
    Plot {
        /// Catalog target for a boundary trace
        #[arg(long)]
        target: Option<String>,
        /// Radius problem id (R1..R13) for a profile of its equation
        #[arg(long)]
        problem: Option<String>,
        /// Circle radius for boundary traces
        #[arg(long, default_value_t = 0.99)]
        radius: f64,
        /// Number of sample points
        #[arg(long, default_value_t = 360)]
        samples: usize,
    },
}

/// One output cell. Keeping cells typed (rather than pre-rendered strings)
/// lets CSV use the shortest round-trip float form while JSON keeps real
/// numbers.
enum Cell {
    S(String),
    F(f64),
    B(bool),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::S(s) => {
                if s.contains([',', '"', '\n']) {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s.clone()
                }
            }
            Cell::F(x) => format!("{x}"),
            Cell::B(b) => format!("{b}"),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Cell::S(s) => serde_json::Value::from(s.as_str()),
            Cell::F(x) => serde_json::Value::from(*x),
            Cell::B(b) => serde_json::Value::from(*b),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

/// Renders one table in the chosen format, headed by the tool version and
/// the column names.
fn print_table(format: Format, command: &str, columns: &[&str], rows: &[Vec<Cell>]) {
    match format {
        Format::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# gft {VERSION} {command}");
            let _ = writeln!(out, "{}", columns.join(","));
            for row in rows {
                let fields: Vec<String> = row.iter().map(Cell::csv).collect();
                let _ = writeln!(out, "{}", fields.join(","));
            }
            print!("{out}");
        }
        Format::Json => {
            let body = serde_json::json!({
                "tool": "gft",
                "version": VERSION,
                "command": command,
                "columns": columns,
                "rows": rows
                    .iter()
                    .map(|row| row.iter().map(Cell::json).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&body).expect("static shape"));
        }
    }
}

/// Emits a JSON document (member/construct output) with the same header
/// fields as the tabular envelope.
fn print_document(command: &str, body: serde_json::Value) {
    let doc = serde_json::json!({
        "tool": "gft",
        "version": VERSION,
        "command": command,
        "result": body,
    });
    println!("{}", serde_json::to_string_pretty(&doc).expect("static shape"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gft: error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, GftError> {
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(GftError::Domain(format!("need tol > 0, got {t}")));
        }
    }
    if !(0.0 < cli.guard && cli.guard < 1.0) {
        return Err(GftError::Domain(format!(
            "need 0 < guard < 1, got {}",
            cli.guard
        )));
    }
    if cli.angles < 64 {
        return Err(GftError::Domain(format!(
            "need at least 64 angles, got {}",
            cli.angles
        )));
    }
    let grid = || -> Result<DiskGrid, GftError> {
        DiskGrid::new((1..=9).map(|k| k as f64 / 10.0).collect(), cli.angles, cli.guard)
    };

    match &cli.command {
        Command::Radii => {
            let rows = verify_radii(cli.tol)?;
            let ok = rows.iter().all(row_ok);
            print_table(cli.format, "radii", RADII_COLUMNS, &radii_cells(&rows));
            Ok(if ok { 0 } else { 1 })
        }
        Command::Verify { suite } => run_verify(&cli, *suite),
        Command::Member {
            class,
            lambda,
            alpha,
            phi,
            series,
        } => {
            let report = run_member(*class, *lambda, *alpha, phi.as_deref(), series.as_deref(), &grid()?)?;
            let body = serde_json::to_value(report).expect("report serializes");
            print_document("member", body);
            Ok(if report.satisfied { 0 } else { 1 })
        }
        Command::Construct {
            condition,
            lambda,
            alpha,
            n,
            g,
            coeffs,
        } => run_construct((*condition).into(), *lambda, *alpha, *n, g, *coeffs, &grid()?),
        Command::Catalog => {
            print_table(cli.format, "catalog", &["name", "r1", "dist_max"], &catalog_cells());
            Ok(0)
        }
        Command::Plot {
            target,
            problem,
            radius,
            samples,
        } => run_plot(
            cli.format,
            target.as_deref(),
            problem.as_deref(),
            *radius,
            *samples,
        ),
    }
}

const RADII_COLUMNS: &[&str] = &[
    "id",
    "computed",
    "expected",
    "diff",
    "sharp",
    "sharpness_residual",
    "within",
];

/// A radius row counts as verified when the root matches the quoted
/// constant and whatever cross-checks the problem carries also hold.
fn row_ok(r: &RadiusOutcome) -> bool {
    r.within && r.sharpness_ok.unwrap_or(true) && r.empirical_ok.unwrap_or(true)
}

fn radii_cells(rows: &[RadiusOutcome]) -> Vec<Vec<Cell>> {
    rows.iter()
        .map(|r| {
            vec![
                Cell::S(r.id.to_string()),
                Cell::F(r.computed),
                Cell::F(r.expected),
                Cell::F(r.diff),
                Cell::B(r.sharp),
                r.sharpness_residual.map_or(Cell::Empty, Cell::F),
                Cell::B(r.within),
            ]
        })
        .collect()
}

fn run_verify(cli: &Cli, suite: Suite) -> Result<u8, GftError> {
    let mut rows: Vec<Vec<Cell>> = Vec::new();
    let mut all = true;
    let push_radii = |rows: &mut Vec<Vec<Cell>>, all: &mut bool| -> Result<(), GftError> {
        for r in verify_radii(cli.tol)? {
            let ok = row_ok(&r);
            *all &= ok;
            rows.push(vec![
                Cell::S(format!("radius {}", r.id)),
                Cell::B(ok),
                Cell::S(format!(
                    "computed={} expected={} diff={:.3e}",
                    r.computed, r.expected, r.diff
                )),
            ]);
        }
        Ok(())
    };
    let push_suite = |rows: &mut Vec<Vec<Cell>>, all: &mut bool, s: SuiteOutcome| {
        *all &= s.passed;
        rows.push(vec![
            Cell::S(s.name.to_string()),
            Cell::B(s.passed),
            Cell::S(format!(
                "checks={} failures={} {}",
                s.checks, s.failures, s.detail
            )),
        ]);
    };

    match suite {
        Suite::All => {
            let report = verify_with(cli.tol, cli.seed)?;
            for r in &report.radii {
                let ok = row_ok(r);
                rows.push(vec![
                    Cell::S(format!("radius {}", r.id)),
                    Cell::B(ok),
                    Cell::S(format!(
                        "computed={} expected={} diff={:.3e}",
                        r.computed, r.expected, r.diff
                    )),
                ]);
            }
            for s in report.suites {
                push_suite(&mut rows, &mut all, s);
            }
            all &= report.all_passed;
        }
        Suite::Radii => push_radii(&mut rows, &mut all)?,
        Suite::Bounds => push_suite(&mut rows, &mut all, gft_core::bounds_suite(cli.seed)),
        Suite::Sufficiency => {
            push_suite(&mut rows, &mut all, gft_core::sufficiency_suite(cli.seed))
        }
        Suite::Inclusion => push_suite(&mut rows, &mut all, gft_core::inclusion_suite(cli.seed)),
        Suite::Monotonicity => push_suite(&mut rows, &mut all, gft_core::monotonicity_suite()),
    }

    rows.push(vec![
        Cell::S("all".to_string()),
        Cell::B(all),
        Cell::S(format!("seed={} tol={:?}", cli.seed, cli.tol)),
    ]);
    print_table(cli.format, "verify", &["check", "passed", "detail"], &rows);
    Ok(if all { 0 } else { 1 })
}

/// Resolves the function under test and runs the requested oracle.
fn run_member(
    class: ClassArg,
    lambda: Option<f64>,
    alpha: Option<f64>,
    phi: Option<&str>,
    series: Option<&Path>,
    grid: &DiskGrid,
) -> Result<MembershipReport, GftError> {
    let f = match (series, phi, class) {
        (Some(path), _, _) => load_series(path)?,
        // For sstar, --phi names the target, so the function under test
        // must come from --series.
        (None, Some(name), ClassArg::Omega | ClassArg::G) => {
            entry(name.parse::<MaMindaName>()?).f0.clone()
        }
        _ => {
            return Err(GftError::Domain(
                "member needs --series <file>, or --phi <name> with --class omega/g".into(),
            ))
        }
    };

    match class {
        ClassArg::Omega => in_omega(&f, grid),
        ClassArg::G => {
            let (Some(lambda), Some(alpha)) = (lambda, alpha) else {
                return Err(GftError::Domain(
                    "--class g needs --lambda and --alpha".into(),
                ));
            };
            in_g(&f, lambda, alpha, grid)
        }
        ClassArg::Sstar => {
            let Some(name) = phi else {
                return Err(GftError::Domain(
                    "--class sstar needs --phi naming the target family".into(),
                ));
            };
            let r1 = disk_radius_r1(name.parse::<MaMindaName>()?)?;
            // |f/(zf') - 1| < r1/(1+r1) forces |zf'/f - 1| < r1, which keeps
            // the starlikeness field inside the target's extremal disk.
            subordination_disk_test(&f, r1 / (1.0 + r1), grid)
        }
    }
}

fn load_series(path: &Path) -> Result<AnalyticMap, GftError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| GftError::BadDocument(format!("{}: {e}", path.display())))?;
    let series = SeriesDocument::parse(&text)?.into_series()?;
    Ok(AnalyticMap::from_series(&series))
}

fn run_construct(
    condition: Condition,
    lambda: f64,
    alpha: f64,
    n: u32,
    g_path: &Path,
    coeffs: usize,
    grid: &DiskGrid,
) -> Result<u8, GftError> {
    if coeffs == 0 || coeffs > 64 {
        return Err(GftError::Domain(format!(
            "need 1 <= coeffs <= 64, got {coeffs}"
        )));
    }
    let text = std::fs::read_to_string(g_path)
        .map_err(|e| GftError::BadDocument(format!("{}: {e}", g_path.display())))?;
    let g = SeriesDocument::parse(&text)?.into_raw_map();

    let params = ClassParams::new(lambda, alpha, n)?;
    let f = gft_core::build_double_integral_fn(&g, &params, condition)?;

    // Quadrature on |z| = 1/2 recovers the coefficients; snap noise-level
    // values (exact zeros of the construction) so the document is clean.
    let recovered = taylor_coefficients(&f, coeffs.max(n as usize + 1), 0.5, 512)?;
    let snapped: Vec<[f64; 2]> = recovered
        .iter()
        .map(|c| {
            let snap = |x: f64| if x.abs() < COEFF_SNAP { 0.0 } else { x };
            [snap(c.re), snap(c.im)]
        })
        .collect();
    let doc = SeriesDocument {
        n: n as usize,
        coeffs: snapped,
    };

    let report = check_sufficient_condition(&f, &params, condition, grid)?;
    let body = serde_json::json!({
        "series": doc,
        "report": serde_json::to_value(report).expect("report serializes"),
    });
    print_document("construct", body);
    Ok(if report.satisfied { 0 } else { 1 })
}

/// Closed-form identifiers for each target's boundary distance
/// max_theta |phi(r e^{i theta}) - 1|.
fn dist_formula(name: MaMindaName) -> &'static str {
    match name {
        MaMindaName::L => "1 - sqrt(1 - r)",
        MaMindaName::E => "exp(r) - 1",
        MaMindaName::Rl => "sqrt(2) - 1 - (sqrt(2) - 1) sqrt((1 - r)/(1 + 2(sqrt(2) - 1) r))",
        MaMindaName::C => "4r/3 + 2r^2/3",
        MaMindaName::S => "sinh(r)",
        MaMindaName::Cr => "r + sqrt(1 + r^2) - 1",
        MaMindaName::Sg => "tan(r/2)",
        MaMindaName::Wp => "r exp(r)",
        MaMindaName::Ne => "r + r^3/3",
    }
}

fn catalog_cells() -> Vec<Vec<Cell>> {
    catalog()
        .iter()
        .map(|e| {
            vec![
                Cell::S(e.name.to_string()),
                e.r1.map_or(Cell::Empty, Cell::F),
                Cell::S(dist_formula(e.name).to_string()),
            ]
        })
        .collect()
}

fn run_plot(
    format: Format,
    target: Option<&str>,
    problem: Option<&str>,
    radius: f64,
    samples: usize,
) -> Result<u8, GftError> {
    if !(2..=1_000_000).contains(&samples) {
        return Err(GftError::Domain(format!(
            "need 2 <= samples <= 1000000, got {samples}"
        )));
    }
    match (target, problem) {
        (Some(name), None) => {
            if !(0.0 < radius && radius < 1.0) {
                return Err(GftError::Domain(format!("need 0 < radius < 1, got {radius}")));
            }
            let e = entry(name.parse::<MaMindaName>()?);
            let mut rows = Vec::with_capacity(samples);
            for j in 0..samples {
                let theta = std::f64::consts::TAU * j as f64 / samples as f64;
                let w = e.phi.eval(Complex64::from_polar(radius, theta))?;
                rows.push(vec![Cell::F(theta), Cell::F(w.re), Cell::F(w.im)]);
            }
            print_table(format, "plot", &["theta", "re", "im"], &rows);
            Ok(0)
        }
        (None, Some(id)) => {
            let p = radius_catalog()
                .iter()
                .find(|p| p.id.eq_ignore_ascii_case(id))
                .ok_or_else(|| {
                    GftError::Domain(format!("unknown problem id {id:?}; expected R1..R13"))
                })?;
            let mut rows = Vec::with_capacity(samples);
            for k in 1..=samples {
                let r = k as f64 / (samples as f64 + 1.0);
                rows.push(vec![Cell::F(r), Cell::F((p.psi)(r)?)]);
            }
            print_table(format, "plot", &["r", "psi"], &rows);
            Ok(0)
        }
        _ => Err(GftError::Domain(
            "plot needs exactly one of --target <name> or --problem <id>".into(),
        )),
    }
}
