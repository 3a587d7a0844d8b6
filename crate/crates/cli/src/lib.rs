//! Command-line front end: every pipeline stage as a subcommand.
//!
//! Exit codes: 0 on success, 2 on usage or input errors, 1 when a mathematical
//! invariant fails (for example an independence failure or a failing self-test).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gkagc::codes::{self, CodeError, CodeFamily, CodeKind, EvalMatrix};
use gkagc::curve::{CurveParams, CurvePoint, GkCurve, Orbit, PointKind};
use gkagc::field::GaloisField;
use gkagc::funcfield::{BasePoint, Frame};
use gkagc::intersect::{self, certify_nongap, imult_origin, search_nongaps, BiPoly, LinearSystem};
use gkagc::selftest::{self, Status};
use gkagc::semigroup::{gk_semigroup, nu_rows, NumericalSemigroup};

/// Environment variable holding comma-separated GF(64) modulus coefficients, constant term first.
pub const FIELD_POLY_ENV: &str = "GKAGC_FIELD_POLY";

#[derive(Parser, Debug)]
#[command(name = "gkagc", version, about = "AG codes on the GK maximal curves over GF(64) and GF(729)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the rational points in canonical order.
    Points(Common),
    /// Generators, genus, conductor and gaps of a Weierstrass semigroup.
    Semigroup(SemigroupArgs),
    /// ℓ, ρ_ℓ, ν_ℓ and the order bound for each ℓ.
    NuTable(SemigroupArgs),
    /// Parameters of the codes C_ℓ.
    CodeTable(TableArgs),
    /// Parameters of the improved codes; without --orbit, the best code per d.
    ImprovedTable(ImprovedTableArgs),
    /// The GF(64) codes obtained from improved codes by propagation.
    Improvements(Common),
    /// Parity-check matrix of C_ℓ.
    Matrix(MatrixArgs),
    /// Parity-check matrix of the improved code with designed distance d.
    ImprovedMatrix(ImprovedMatrixArgs),
    /// Generator functions, their pole orders and intersection certificates.
    VerifyFunction(Common),
    /// Intersection multiplicity at the origin of two curves in Y, Z.
    Imult(ImultArgs),
    /// Exhaustive non-gap search over a linear system (q̄ = 2).
    SearchNongap(SearchArgs),
    /// Run the built-in consistency checks.
    Selftest(Common),
}

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..=3))]
    qbar: u32,
    #[arg(long)]
    orbit: Option<Orbit>,
    /// Base point as generator exponents `a,b,c`; `z` stands for the zero element.
    #[arg(long)]
    point: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Allow full q̄ = 3 matrices.
    #[arg(long)]
    big: bool,
}

#[derive(Args, Debug)]
struct SemigroupArgs {
    #[command(flatten)]
    common: Common,
    /// Explicit generators, overriding --qbar/--orbit.
    #[arg(long, value_delimiter = ',')]
    generators: Option<Vec<u64>>,
    #[arg(long)]
    max_rho: Option<u64>,
}

#[derive(Args, Debug)]
struct TableArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    max_rho: Option<u64>,
}

#[derive(Args, Debug)]
struct ImprovedTableArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    d_max: Option<u64>,
}

#[derive(Args, Debug)]
struct MatrixArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    ell: u64,
}

#[derive(Args, Debug)]
struct ImprovedMatrixArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    d: u64,
}

#[derive(Args, Debug)]
struct ImultArgs {
    #[command(flatten)]
    common: Common,
    /// First polynomial, e.g. `Z + Z^2 + w9*Y^2 + Y^3`.
    f: String,
    /// Second polynomial.
    g: String,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[command(flatten)]
    common: Common,
    /// Monomials in Y, Z, comma-separated.
    #[arg(long, value_delimiter = ',', default_value = "Z,Z^2,Y^2,Y*Z")]
    monomials: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Gkmat,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Invariant(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::IndependenceFailure { .. } => CliError::Invariant(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Parses `argv` (program name first), runs the subcommand and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(CliError::Invariant(m)) => {
            let _ = writeln!(err, "invariant violation: {m}");
            1
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn field_for(qbar: u32) -> Result<GaloisField, CliError> {
    match (qbar, std::env::var(FIELD_POLY_ENV)) {
        (2, Ok(spec)) => {
            let coeffs = spec
                .split(',')
                .map(|c| c.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| usage(format!("{FIELD_POLY_ENV}: expected comma-separated integers")))?;
            GaloisField::new(2, 6, &coeffs).map_err(|e| usage(format!("{FIELD_POLY_ENV}: {e}")))
        }
        (2, Err(_)) => Ok(GaloisField::gf64()),
        (3, _) => Ok(GaloisField::gf729()),
        (other, _) => Err(usage(format!("unsupported q̄ = {other}"))),
    }
}

fn curve_for(qbar: u32) -> Result<GkCurve, CliError> {
    Ok(GkCurve::new(CurveParams::new(qbar, field_for(qbar)?).map_err(usage)?))
}

fn parse_point(params: &CurveParams, spec: &str) -> Result<CurvePoint, CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(usage("--point expects three exponents a,b,c"));
    }
    let mut exps = [None; 3];
    for (slot, p) in exps.iter_mut().zip(&parts) {
        *slot = match *p {
            "z" => None,
            e => Some(e.parse::<i64>().map_err(|_| usage(format!("bad exponent `{e}`")))?),
        };
    }
    params.point_from_exponents(exps).map_err(usage)
}

/// The base point selected by --point / --orbit (default O2 when neither is given).
fn base_point(curve: &GkCurve, common: &Common) -> Result<CurvePoint, CliError> {
    match (&common.point, common.orbit) {
        (Some(spec), orbit) => {
            let p = parse_point(&curve.params, spec)?;
            if orbit.is_some_and(|o| o != p.orbit) {
                return Err(usage(format!("point lies in {}, not {}", p.orbit, orbit.unwrap())));
            }
            Ok(p)
        }
        (None, orbit) => {
            let base = BasePoint::standard(&curve.params, &curve.points, orbit.unwrap_or(Orbit::O2)).map_err(usage)?;
            Ok(base.point)
        }
    }
}

fn orbit_or_default(common: &Common) -> Orbit {
    common.orbit.unwrap_or(Orbit::O2)
}

struct Output<'a> {
    stdout: &'a mut dyn Write,
    file: Option<BufWriter<File>>,
}

impl Output<'_> {
    fn open<'a>(stdout: &'a mut dyn Write, path: &Option<PathBuf>) -> Result<Output<'a>, CliError> {
        let file = match path {
            Some(p) => Some(BufWriter::new(File::create(p)?)),
            None => None,
        };
        Ok(Output { stdout, file })
    }

    fn w(&mut self) -> &mut dyn Write {
        match &mut self.file {
            Some(f) => f,
            None => self.stdout,
        }
    }
}

fn emit_rows<T: Serialize>(out: &mut dyn Write, format: Format, rows: &[T]) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows).map_err(|e| CliError::Io(e.into()))?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in rows {
                w.serialize(r).map_err(|e| CliError::Io(io::Error::other(e)))?;
            }
            w.flush()?;
        }
        Format::Gkmat => return Err(usage("gkmat output is only available for matrices")),
    }
    Ok(())
}

fn emit_value<T: Serialize>(out: &mut dyn Write, format: Format, value: &T) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, value).map_err(|e| CliError::Io(e.into()))?;
            writeln!(out)?;
            Ok(())
        }
        _ => Err(usage("this subcommand only supports --format json")),
    }
}

#[derive(Serialize)]
struct PointRow {
    index: usize,
    x: String,
    y: String,
    z: String,
    orbit: Orbit,
}

#[derive(Serialize)]
struct SemigroupReport {
    generators: Vec<u64>,
    genus: u64,
    conductor: u64,
    gaps: Vec<u64>,
}

#[derive(Serialize)]
struct BestImprovedRow {
    n: u64,
    k: u64,
    d: u64,
    orbit: Orbit,
}

#[derive(Serialize)]
struct ImprovementCsvRow {
    n: u64,
    k: u64,
    d: u64,
    source: String,
}

#[derive(Serialize)]
struct MatrixSummary {
    qbar: u32,
    orbit: Orbit,
    kind: String,
    n: usize,
    rows: usize,
    rank: usize,
    pole_orders: Vec<u64>,
}

#[derive(Serialize)]
struct MatrixJson {
    #[serde(flatten)]
    summary: MatrixSummary,
    entries: Vec<Vec<u16>>,
}

#[derive(Serialize)]
struct FunctionReport {
    name: String,
    pole_order: u64,
    form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Certificate>,
}

#[derive(Serialize)]
struct Certificate {
    m: u32,
    intersection: u64,
    pole_order: i64,
    bracket: (i64, i64),
}

#[derive(Serialize)]
struct VerifyReport {
    qbar: u32,
    base_point: String,
    orbit: Orbit,
    functions: Vec<FunctionReport>,
}

#[derive(Serialize)]
struct SearchRow {
    n: i64,
    m: u64,
    witness: Vec<String>,
}

fn point_label(f: &GaloisField, p: &CurvePoint) -> String {
    match p.kind {
        PointKind::Infinite => "Xinf".into(),
        PointKind::Affine { x, y, z } => format!("({}, {}, {})", f.display(x), f.display(y), f.display(z)),
    }
}

fn semigroup_from(args: &SemigroupArgs) -> Result<NumericalSemigroup, CliError> {
    match &args.generators {
        Some(g) => NumericalSemigroup::from_generators(g).map_err(usage),
        None => gk_semigroup(args.common.qbar, orbit_or_default(&args.common)).map_err(usage),
    }
}

fn default_max_rho(qbar: u32) -> u64 {
    if qbar == 2 {
        38
    } else {
        198
    }
}

fn write_matrix(
    out: &mut dyn Write,
    format: Format,
    f: &GaloisField,
    m: &EvalMatrix,
    big: bool,
) -> Result<(), CliError> {
    let summary = MatrixSummary {
        qbar: m.qbar,
        orbit: m.orbit,
        kind: m.kind.to_string(),
        n: m.n,
        rows: m.rows.len(),
        rank: m.rank(f),
        pole_orders: m.row_meta.clone(),
    };
    if m.qbar == 3 && !big {
        return emit_value(out, Format::Json, &summary);
    }
    match format {
        Format::Gkmat => m.write_gkmat(f, out)?,
        Format::Json => {
            let entries = m.rows.iter().map(|r| r.iter().map(|e| e.enc()).collect()).collect();
            emit_value(out, Format::Json, &MatrixJson { summary, entries })?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &m.rows {
                w.write_record(r.iter().map(|e| e.enc().to_string())).map_err(|e| CliError::Io(io::Error::other(e)))?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Points(c) => {
            let curve = curve_for(c.qbar)?;
            let f = curve.field();
            let rows: Vec<PointRow> = curve
                .points
                .iter()
                .enumerate()
                .map(|(index, p)| {
                    let (x, y, z) = match p.kind {
                        PointKind::Infinite => ("inf".into(), "inf".into(), "inf".into()),
                        PointKind::Affine { x, y, z } => (f.display(x), f.display(y), f.display(z)),
                    };
                    PointRow { index, x, y, z, orbit: p.orbit }
                })
                .collect();
            emit_rows(Output::open(stdout, &c.out)?.w(), c.format, &rows)
        }
        Command::Semigroup(args) => {
            let s = semigroup_from(&args)?;
            let report = SemigroupReport {
                generators: s.generators().to_vec(),
                genus: s.genus(),
                conductor: s.conductor(),
                gaps: s.gaps(),
            };
            emit_value(Output::open(stdout, &args.common.out)?.w(), args.common.format, &report)
        }
        Command::NuTable(args) => {
            let s = semigroup_from(&args)?;
            let max_rho = args.max_rho.unwrap_or(2 * s.conductor());
            emit_rows(Output::open(stdout, &args.common.out)?.w(), args.common.format, &nu_rows(&s, max_rho))
        }
        Command::CodeTable(args) => {
            let c = &args.common;
            let rows = codes::cl_table(c.qbar, orbit_or_default(c), args.max_rho.unwrap_or(default_max_rho(c.qbar)))?;
            emit_rows(Output::open(stdout, &c.out)?.w(), c.format, &rows)
        }
        Command::ImprovedTable(args) => {
            let c = &args.common;
            let d_max = args.d_max.unwrap_or(if c.qbar == 2 { 20 } else { 198 });
            let mut out = Output::open(stdout, &c.out)?;
            match c.orbit {
                Some(orbit) => {
                    let d_min = if c.qbar == 2 { 3 } else { 2 };
                    let rows = codes::improved_table(c.qbar, orbit, d_min..=d_max)?;
                    emit_rows(out.w(), c.format, &rows)
                }
                None => {
                    let rows: Vec<BestImprovedRow> = codes::best_improved_table(c.qbar, d_max)?
                        .into_iter()
                        .map(|s| BestImprovedRow {
                            n: s.n,
                            k: s.k,
                            d: s.d_designed,
                            orbit: s.orbit.expect("improved codes carry an orbit"),
                        })
                        .collect();
                    emit_rows(out.w(), c.format, &rows)
                }
            }
        }
        Command::Improvements(c) => {
            if c.qbar != 2 {
                return Err(usage("improvements are tabulated for q̄ = 2 only"));
            }
            let rows: Vec<ImprovementCsvRow> = codes::improvements_table()?
                .into_iter()
                .map(|s| ImprovementCsvRow {
                    n: s.n,
                    k: s.k,
                    d: s.d_designed,
                    source: match s.kind {
                        CodeKind::Improved { d } => format!("improved/{d}@{}", s.orbit.expect("seed orbit")),
                        CodeKind::Propagated { from: (n, k, d), rule, s } => {
                            format!("{rule:?}(s={s}) from [{n},{k},{d}]")
                        }
                        CodeKind::Cl { ell, .. } => format!("cl/{ell}"),
                    },
                })
                .collect();
            emit_rows(Output::open(stdout, &c.out)?.w(), c.format, &rows)
        }
        Command::Matrix(args) => {
            let c = &args.common;
            let curve = curve_for(c.qbar)?;
            let fam = CodeFamily::at(&curve, base_point(&curve, c)?)?;
            let m = fam.parity_matrix_cl(args.ell)?;
            write_matrix(Output::open(stdout, &c.out)?.w(), c.format, fam.field(), &m, c.big)
        }
        Command::ImprovedMatrix(args) => {
            let c = &args.common;
            let curve = curve_for(c.qbar)?;
            let fam = CodeFamily::at(&curve, base_point(&curve, c)?)?;
            let m = fam.parity_matrix_improved(args.d)?;
            write_matrix(Output::open(stdout, &c.out)?.w(), c.format, fam.field(), &m, c.big)
        }
        Command::VerifyFunction(c) => verify_function(&c, stdout),
        Command::Imult(args) => {
            let c = &args.common;
            let f = field_for(c.qbar)?;
            let a = BiPoly::parse(&f, &args.f).map_err(usage)?;
            let b = BiPoly::parse(&f, &args.g).map_err(usage)?;
            let m = imult_origin(&f, &a, &b).map_err(usage)?;
            let mut out = Output::open(stdout, &c.out)?;
            match c.format {
                Format::Json => {
                    emit_value(out.w(), Format::Json, &serde_json::json!({ "multiplicity": m.to_string() }))
                }
                _ => {
                    writeln!(out.w(), "{m}")?;
                    Ok(())
                }
            }
        }
        Command::SearchNongap(args) => {
            let c = &args.common;
            let curve = curve_for(c.qbar)?;
            let point = base_point(&curve, c)?;
            let f = curve.field();
            let monomials = args
                .monomials
                .iter()
                .map(|m| {
                    let p = BiPoly::parse(f, m).map_err(usage)?;
                    match p.terms().as_slice() {
                        [(_, e)] => Ok(*e),
                        _ => Err(usage(format!("`{m}` is not a monomial"))),
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            let out = search_nongaps(&curve.params, &point, &LinearSystem::new(monomials)).map_err(|e| match e {
                intersect::IntersectError::Dependent { .. } => CliError::Invariant(e.to_string()),
                other => usage(other),
            })?;
            let rows: Vec<SearchRow> = out
                .reports
                .values()
                .map(|r| SearchRow {
                    n: r.n_value,
                    m: r.m_value,
                    witness: r.combination.iter().map(|&e| f.display(e)).collect(),
                })
                .collect();
            emit_rows(Output::open(stdout, &c.out)?.w(), c.format, &rows)
        }
        Command::Selftest(c) => {
            let curve = curve_for(c.qbar)?;
            let results = selftest::run_on(&curve);
            let mut out = Output::open(stdout, &c.out)?;
            match c.format {
                Format::Json => emit_value(out.w(), Format::Json, &results)?,
                _ => {
                    for r in &results {
                        writeln!(out.w(), "{r}")?;
                    }
                }
            }
            let failed: Vec<u32> = results.iter().filter(|r| r.status == Status::Fail).map(|r| r.id).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(CliError::Invariant(format!("self-test failures in criteria {failed:?}")))
            }
        }
    }
}

fn verify_function(c: &Common, stdout: &mut dyn Write) -> Result<(), CliError> {
    let curve = curve_for(c.qbar)?;
    let point = base_point(&curve, c)?;
    let base = BasePoint::new(&curve.params, point).map_err(usage)?;
    let f = base.field();
    let mut functions = Vec::new();
    for g in &base.generators {
        let certificate = match base.frame {
            Frame::Ambient => None,
            Frame::Barred => {
                let (system, coeffs) = LinearSystem::from_form(&g.form);
                let rep = certify_nongap(&curve.params, &point, &system, &coeffs).map_err(usage)?;
                if rep.n_value != g.pole_order as i64 || !rep.in_bracket() {
                    return Err(CliError::Invariant(format!(
                        "{}: certified pole order {} (bracket {:?}) but {} claimed",
                        g.name, rep.n_value, rep.bracket, g.pole_order
                    )));
                }
                Some(Certificate {
                    m: system.m,
                    intersection: rep.m_value,
                    pole_order: rep.n_value,
                    bracket: rep.bracket,
                })
            }
        };
        functions.push(FunctionReport {
            name: g.name.clone(),
            pole_order: g.pole_order,
            form: g.form.render(f, base.frame_names()),
            certificate,
        });
    }
    let report = VerifyReport { qbar: c.qbar, base_point: point_label(f, &point), orbit: point.orbit, functions };
    let mut out = Output::open(stdout, &c.out)?;
    match c.format {
        Format::Json => emit_value(out.w(), Format::Json, &report),
        _ => {
            let w = out.w();
            writeln!(w, "base point {} ({})", report.base_point, report.orbit)?;
            for func in &report.functions {
                write!(w, "{} = {}  pole order {}", func.name, func.form, func.pole_order)?;
                if let Some(cert) = &func.certificate {
                    write!(
                        w,
                        "  certified: M = {}, N = {}·{} - M = {}, bracket {:?}",
                        cert.intersection,
                        cert.m,
                        u64::from(c.qbar).pow(3) + 1,
                        cert.pole_order,
                        cert.bracket
                    )?;
                }
                writeln!(w)?;
            }
            Ok(())
        }
    }
}
