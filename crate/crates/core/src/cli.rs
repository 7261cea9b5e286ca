//! The `gcnodes` command line.
//!
//! Data commands (`fixture`, `generate`, `specialize`, the `dual`s) always
//! write JSON so they can be piped; report commands write text unless
//! `--json` is given. Exit status is 0 when the checked property holds, 1
//! when it fails and 2 on invalid input, with a `{kind, message}` object on
//! stdout.

use std::fmt::Display;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::chung_yao::{chung_yao_ideal, generic_forms};
use crate::cm::{cm_report, fv_duality_check, is_cohen_macaulay, CmReport, CmVerdict};
use crate::combinatorics::{ComplexFile, Face, FVector, SimplicialComplex};
use crate::error::{Error, Result};
use crate::fixtures::{fixture, Bundle};
use crate::gc::{infer_parameters, monomial_gc_report, parameter_report, MonomialGcReport};
use crate::geometry::{
    augment_with_spanned, certificate_span_dimension, certify_points, is_n_correct,
    maximal_hyperplanes, resolution_profile, specialize, FormsFile, GcCertificate,
    HyperplaneCount, LinearForm, PointConfiguration, ResolutionProfile, SpecializationMap,
};
use crate::ideal::{sr_ideal, IdealFile, PrimeComponent, SquarefreeMonomialIdeal};

#[derive(Parser, Debug)]
#[command(name = "gcnodes", version, about = "Squarefree monomial ideals and GC node sets")]
struct Cli {
    /// Write reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simplicial complex operations.
    #[command(subcommand)]
    Complex(ComplexOp),
    /// Squarefree monomial ideal operations.
    #[command(subcommand)]
    Ideal(IdealOp),
    /// Monomial GC analysis.
    #[command(subcommand)]
    Gc(GcOp),
    /// Substitute linear forms for the variables and solve for the points.
    Specialize(SpecializeArgs),
    /// n-correctness, GC certificates and maximal hyperplanes of a configuration.
    Verify(VerifyArgs),
    /// Generate input data.
    #[command(subcommand)]
    Generate(GenerateOp),
    /// Numerical invariants.
    #[command(subcommand)]
    Profile(ProfileOp),
    /// Print a shipped fixture bundle.
    Fixture {
        /// cy-4-lines, berzolari-radon-10 or one-lattice-8.
        name: String,
    },
}

#[derive(Args, Debug)]
struct Input {
    /// JSON input; `-` or absent reads stdin.
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum ComplexOp {
    Fvector(Input),
    Dual(Input),
    CheckCm(Input),
    CheckBicm(Input),
}

#[derive(Subcommand, Debug)]
enum IdealOp {
    Decompose(Input),
    Dual(Input),
    Params(Input),
}

#[derive(Subcommand, Debug)]
enum GcOp {
    MonomialReport(Input),
}

#[derive(Args, Debug)]
struct SpecializeArgs {
    #[command(flatten)]
    input: Input,
    /// Forms file; required when the input is a bare ideal.
    #[arg(long)]
    forms: Option<PathBuf>,
    /// Dehomogenization coordinate; defaults to the bundle's or the last.
    #[arg(long)]
    chart: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PoolMode {
    /// The supplied forms, then spanned hyperplanes for points they miss.
    Auto,
    /// Only the supplied forms.
    Forms,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    /// Degree; defaults to the value recorded in the input.
    #[arg(long)]
    n: Option<usize>,
    /// Pool forms file for a bare configuration.
    #[arg(long)]
    forms: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = PoolMode::Auto)]
    pool_mode: PoolMode,
    /// Retry with repeated factors when sets of distinct forms fail.
    #[arg(long)]
    allow_repeats: bool,
    #[arg(long)]
    chart: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum GenerateOp {
    /// The natural lattice on n+d generic hyperplanes in P^d.
    ChungYao {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ProfileOp {
    /// Eagon–Northcott ranks and Hilbert data of a GC_{d,n} set.
    Resolution {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
}

/// Output of `specialize`, input of `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializeReport {
    pub configuration: PointConfiguration,
    pub forms: FormsFile,
    pub n: usize,
    /// The regular-sequence hypothesis is replaced by its checked
    /// consequences: the forms span, each component cuts a point, the
    /// points are distinct and their number is the degree.
    pub regular_sequence_substitution: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub n: usize,
    pub n_correct: bool,
    pub gc_certified: bool,
    pub pool_mode: PoolMode,
    /// Spanned hyperplanes appended after the supplied forms; certificate
    /// indices beyond the supplied forms point here.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_forms: Vec<LinearForm>,
    pub certificates: Vec<Option<GcCertificate>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub uncertified: Vec<usize>,
    /// Certified directly from the supplied forms.
    pub certified_from_forms: usize,
    /// Dimension spanned by the `Q_p` in degree n, when all are certified.
    pub certificate_span: Option<usize>,
    pub maximal_hyperplanes: Vec<HyperplaneCount>,
    pub regular_sequence_substitution: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FvectorReport {
    pub f_vector: FVector,
    pub dimension: Option<isize>,
    pub pure: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BicmReport {
    #[serde(flatten)]
    pub report: CmReport,
    pub fv_duality: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub components: Vec<PrimeComponent>,
    pub codimension: usize,
    /// Absent for a mixed decomposition.
    pub degree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledGcReport {
    pub label_offset: usize,
    #[serde(flatten)]
    pub report: MonomialGcReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorObject {
    pub kind: String,
    pub message: String,
}

enum Output {
    Data(Value),
    Report { value: Value, text: String, holds: bool },
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn report<T: Serialize>(x: &T, text: String, holds: bool) -> Output {
    Output::Report { value: to_value(x), text, holds }
}

/// Runs the command line on `args` (including the program name).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            let _ = write!(stderr, "{}", e.render());
            let obj = ErrorObject { kind: "usage".into(), message: e.kind().to_string() };
            let _ = writeln!(stdout, "{}", serde_json::to_string(&obj).expect("serializes"));
            return 2;
        }
    };
    match execute(cli.command, stdin) {
        Ok(Output::Data(value)) => {
            let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&value).expect("serializes"));
            0
        }
        Ok(Output::Report { value, text, holds }) => {
            if cli.json {
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&value).expect("serializes"));
            } else {
                let _ = write!(stdout, "{text}");
            }
            if holds {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            let obj = ErrorObject { kind: e.kind().into(), message: e.to_string() };
            let _ = writeln!(stdout, "{}", serde_json::to_string(&obj).expect("serializes"));
            2
        }
    }
}

fn read_text(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::Input(format!("{}: {e}", p.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::Input(format!("stdin: {e}")))?;
        }
    }
    if text.trim().is_empty() {
        return Err(Error::Input("empty input".into()));
    }
    Ok(text)
}

fn parse<T: for<'de> Deserialize<'de>>(value: Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::Input(e.to_string()))
}

/// Any of the JSON objects the commands exchange, told apart by their keys.
enum Loaded {
    Complex(SimplicialComplex),
    Ideal(SquarefreeMonomialIdeal),
    Bundle(Bundle),
    Specialized(SpecializeReport),
    Configuration(PointConfiguration),
}

fn load(path: Option<&Path>, stdin: &mut dyn Read) -> Result<Loaded> {
    let text = read_text(path, stdin)?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("invalid JSON: {e}")))?;
    let has = |k: &str| value.get(k).is_some();
    if has("configuration") {
        Ok(Loaded::Specialized(parse(value)?))
    } else if has("ideal") {
        Ok(Loaded::Bundle(parse(value)?))
    } else if has("generators") {
        // Go through the wire struct so validation errors keep their kind.
        Ok(Loaded::Ideal(parse::<IdealFile>(value)?.try_into()?))
    } else if has("facets") {
        Ok(Loaded::Complex(parse::<ComplexFile>(value)?.try_into()?))
    } else if has("points") {
        Ok(Loaded::Configuration(parse(value)?))
    } else {
        Err(Error::Input(
            "expected a complex, ideal, bundle or configuration object".into(),
        ))
    }
}

fn load_complex(input: &Input, stdin: &mut dyn Read) -> Result<SimplicialComplex> {
    match load(input.input.as_deref(), stdin)? {
        Loaded::Complex(c) => Ok(c),
        Loaded::Ideal(i) => Ok(i.complex()),
        Loaded::Bundle(b) => Ok(b.ideal.complex()),
        _ => Err(Error::Input("expected a complex or an ideal".into())),
    }
}

/// The ideal and the label offset to print it with.
fn load_ideal(input: &Input, stdin: &mut dyn Read) -> Result<(SquarefreeMonomialIdeal, usize)> {
    match load(input.input.as_deref(), stdin)? {
        Loaded::Ideal(i) => Ok((i, 0)),
        Loaded::Bundle(b) => Ok((b.ideal, b.label_offset)),
        Loaded::Complex(c) => Ok((sr_ideal(&c)?, 0)),
        _ => Err(Error::Input("expected an ideal or a complex".into())),
    }
}

fn load_forms(path: &Path) -> Result<FormsFile> {
    let text = read_text(Some(path), &mut std::io::empty())?;
    let forms: FormsFile =
        serde_json::from_str(&text).map_err(|e| Error::Input(format!("forms: {e}")))?;
    forms.validate()?;
    Ok(forms)
}

fn tuple<T: Display>(xs: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = xs.into_iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn labelled(face: Face, offset: usize) -> String {
    let parts: Vec<String> = face.vertices().map(|v| (v + offset).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Output> {
    match command {
        Command::Complex(op) => complex_command(op, stdin),
        Command::Ideal(op) => ideal_command(op, stdin),
        Command::Gc(GcOp::MonomialReport(input)) => {
            let (ideal, offset) = load_ideal(&input, stdin)?;
            let r = monomial_gc_report(&ideal)?;
            let mut text = format!("GC_{{{},{}}} parameters\n", r.d, r.n);
            for c in &r.components {
                match c.witness {
                    Some(tau) => text += &format!(
                        "  {}  witness {}\n",
                        labelled(c.vars, offset),
                        labelled(tau, offset)
                    ),
                    None => text += &format!("  {}  no witness\n", labelled(c.vars, offset)),
                }
            }
            text += &format!("monomial GC components: {} of {}\n", r.gc_count, r.components.len());
            text += &format!(
                "maximal hyperplanes: {}\n",
                tuple(r.maximal_hyperplanes.iter().map(|v| v.vertex + offset))
            );
            if !r.exceeding_vertices.is_empty() {
                text += &format!(
                    "vertices above the maximal count: {}\n",
                    tuple(r.exceeding_vertices.iter().map(|v| v.vertex + offset))
                );
            }
            let holds = r.monomial_gc;
            Ok(report(&LabelledGcReport { label_offset: offset, report: r }, text, holds))
        }
        Command::Specialize(args) => specialize_command(args, stdin),
        Command::Verify(args) => verify_command(args, stdin),
        Command::Generate(GenerateOp::ChungYao { d, n, seed }) => {
            let bundle = Bundle {
                name: format!("chung-yao-{d}-{n}-seed{seed}"),
                ideal: chung_yao_ideal(d, n)?,
                forms: FormsFile { ambient_dim: d, forms: generic_forms(d, d + n, seed)? },
                chart: d,
                n,
                label_offset: 0,
            };
            Ok(Output::Data(to_value(&bundle)))
        }
        Command::Profile(ProfileOp::Resolution { d, n }) => {
            let p: ResolutionProfile = resolution_profile(d, n)?;
            let mut text = String::from("0 <- R/I <- R");
            for t in &p.terms {
                text += &format!(" <- R(-{})^{}", t.shift, t.rank);
            }
            text += " <- 0\n";
            text += &format!("Hilbert series numerator: {}\n", tuple(&p.hilbert_numerator));
            text += &format!("Hilbert polynomial: {}\n", p.hilbert_polynomial_constant);
            Ok(report(&p, text, true))
        }
        Command::Fixture { name } => Ok(Output::Data(to_value(&fixture(&name)?))),
    }
}

fn complex_command(op: ComplexOp, stdin: &mut dyn Read) -> Result<Output> {
    match op {
        ComplexOp::Fvector(input) => {
            let c = load_complex(&input, stdin)?;
            let r = FvectorReport { f_vector: c.f_vector(), dimension: c.dimension(), pure: c.is_pure() };
            let text = format!(
                "f = {}\ndimension {}, {}\n",
                tuple(r.f_vector.counts()),
                r.dimension.map_or("void".to_string(), |d| d.to_string()),
                if r.pure { "pure" } else { "not pure" }
            );
            Ok(report(&r, text, true))
        }
        ComplexOp::Dual(input) => {
            let c = load_complex(&input, stdin)?;
            Ok(Output::Data(to_value(&c.alexander_dual())))
        }
        ComplexOp::CheckCm(input) => {
            let c = load_complex(&input, stdin)?;
            let v: CmVerdict = is_cohen_macaulay(&c)?;
            let text = match v.failure {
                None => "Cohen-Macaulay: true\n".to_string(),
                Some((face, dim)) => format!(
                    "Cohen-Macaulay: false (link of {face} has reduced homology in dimension {dim})\n"
                ),
            };
            let holds = v.cohen_macaulay;
            Ok(report(&v, text, holds))
        }
        ComplexOp::CheckBicm(input) => {
            let c = load_complex(&input, stdin)?;
            let r = BicmReport { report: cm_report(&c)?, fv_duality: fv_duality_check(&c) };
            let mut text = format!(
                "Cohen-Macaulay: {}\ndual Cohen-Macaulay: {}\nBi-CM: {}\n",
                r.report.cm, r.report.dual_cm, r.report.bicm
            );
            if let Some(face) = r.report.failing_face {
                text += &format!("failing face: {face}\n");
            }
            if let Some(f) = r.report.fvect_factorization {
                text += &format!("f-vector factorization: i={}, m'={}, k={}\n", f.i, f.m, f.k);
            }
            let holds = r.report.bicm;
            Ok(report(&r, text, holds))
        }
    }
}

fn ideal_command(op: IdealOp, stdin: &mut dyn Read) -> Result<Output> {
    match op {
        IdealOp::Decompose(input) => {
            let (ideal, offset) = load_ideal(&input, stdin)?;
            let components = ideal.primary_decomposition()?;
            let codimension = components.iter().map(|c| c.variables().len()).min().unwrap_or(0);
            let degree = ideal.codim_degree().ok().map(|(_, deg)| deg);
            let mut text = String::new();
            for c in &components {
                text += &format!("{}\n", labelled(c.variables(), offset));
            }
            text += &format!(
                "codimension {codimension}, degree {}\n",
                degree.map_or("undefined (mixed)".to_string(), |d| d.to_string())
            );
            Ok(report(&DecompositionReport { components, codimension, degree }, text, true))
        }
        IdealOp::Dual(input) => {
            let (ideal, _) = load_ideal(&input, stdin)?;
            Ok(Output::Data(to_value(&ideal.dual()?)))
        }
        IdealOp::Params(input) => {
            let (ideal, _) = load_ideal(&input, stdin)?;
            let r = parameter_report(&ideal)?;
            let mut text = format!(
                "d = {}, n = {} (codimension {}, degree {})\ngenerators: {} (expected {})\n",
                r.d, r.n, r.codimension, r.degree, r.generator_count, r.expected_generator_count
            );
            for w in &r.warnings {
                text += &format!("warning: {w}\n");
            }
            Ok(report(&r, text, true))
        }
    }
}

fn specialize_command(args: SpecializeArgs, stdin: &mut dyn Read) -> Result<Output> {
    let (ideal, forms, chart, n) = match load(args.input.input.as_deref(), stdin)? {
        Loaded::Bundle(b) => {
            let forms = match &args.forms {
                Some(p) => load_forms(p)?,
                None => b.forms,
            };
            (b.ideal, forms, Some(b.chart), Some(b.n))
        }
        Loaded::Ideal(i) => {
            let path = args
                .forms
                .as_deref()
                .ok_or_else(|| Error::Input("a bare ideal needs --forms".into()))?;
            (i, load_forms(path)?, None, None)
        }
        _ => return Err(Error::Input("expected an ideal or a bundle".into())),
    };
    let params = infer_parameters(&ideal)?;
    let chart = args.chart.or(chart).unwrap_or(forms.ambient_dim);
    let map = SpecializationMap::new(forms.ambient_dim, forms.forms.clone())?;
    let configuration = specialize(&ideal, &map, chart)?;
    Ok(Output::Data(to_value(&SpecializeReport {
        configuration,
        forms,
        n: n.unwrap_or(params.n),
        regular_sequence_substitution: true,
    })))
}

fn verify_command(args: VerifyArgs, stdin: &mut dyn Read) -> Result<Output> {
    let (config, forms, recorded_n) = match load(args.input.input.as_deref(), stdin)? {
        Loaded::Specialized(s) => (s.configuration, Some(s.forms), Some(s.n)),
        Loaded::Configuration(c) => (c, None, None),
        _ => return Err(Error::Input("expected a specialized configuration".into())),
    };
    let forms = match (&args.forms, forms) {
        (Some(p), _) => Some(load_forms(p)?),
        (None, f) => f,
    };
    let pool: Vec<LinearForm> = forms.map(|f| f.forms).unwrap_or_default();
    let n = args
        .n
        .or(recorded_n)
        .ok_or_else(|| Error::Parameters("degree unknown; pass --n".into()))?;
    let config = match args.chart {
        Some(c) => config.with_chart(c)?,
        None => config,
    };
    verify(&config, &pool, n, args.pool_mode, args.allow_repeats).map(|r| {
        let text = verify_text(&r, pool.len());
        let holds = r.n_correct && r.gc_certified;
        report(&r, text, holds)
    })
}

/// The composed verification behind `gcnodes verify`.
pub fn verify(
    config: &PointConfiguration,
    pool: &[LinearForm],
    n: usize,
    mode: PoolMode,
    allow_repeats: bool,
) -> Result<VerifyReport> {
    let n_correct = is_n_correct(config, n)?;
    let direct = certify_points(config, pool, n, allow_repeats);
    let certified_from_forms = direct.iter().filter(|c| c.is_some()).count();
    let (certificates, full_pool) = if mode == PoolMode::Auto && certified_from_forms < config.len() {
        let augmented = augment_with_spanned(config, pool);
        (certify_points(config, &augmented, n, allow_repeats), augmented)
    } else {
        (direct, pool.to_vec())
    };
    let uncertified: Vec<usize> = (0..certificates.len()).filter(|&p| certificates[p].is_none()).collect();
    let gc_certified = uncertified.is_empty();
    let certificate_span = gc_certified.then(|| {
        let certs: Vec<GcCertificate> = certificates.iter().flatten().cloned().collect();
        certificate_span_dimension(config, &certs, &full_pool)
    });
    Ok(VerifyReport {
        n,
        n_correct,
        gc_certified,
        pool_mode: mode,
        extra_forms: full_pool[pool.len()..].to_vec(),
        certificates,
        uncertified,
        certified_from_forms,
        certificate_span,
        maximal_hyperplanes: maximal_hyperplanes(config, pool, n),
        regular_sequence_substitution: true,
    })
}

fn verify_text(r: &VerifyReport, supplied: usize) -> String {
    let mut text = format!("{}-correct: {}\n", r.n, r.n_correct);
    text += &format!(
        "GC-certified: {} ({} of {} points from the supplied forms",
        r.gc_certified,
        r.certified_from_forms,
        r.certificates.len()
    );
    if !r.extra_forms.is_empty() {
        text += &format!(", {} spanned hyperplanes added", r.extra_forms.len());
    }
    text += ")\n";
    for (p, cert) in r.certificates.iter().enumerate() {
        match cert {
            Some(c) => {
                let names: Vec<String> = c
                    .factors
                    .iter()
                    .map(|&f| if f < supplied { format!("l{f}") } else { format!("h{}", f - supplied) })
                    .collect();
                text += &format!("  point {p}: {} * {}\n", c.scale, names.join(" "));
            }
            None => text += &format!("  point {p}: not certified from the pool\n"),
        }
    }
    if let Some(span) = r.certificate_span {
        text += &format!("certificate span in degree {}: {span}\n", r.n);
    }
    let maximal: Vec<usize> = r.maximal_hyperplanes.iter().filter(|h| h.maximal).map(|h| h.form).collect();
    text += &format!("maximal hyperplanes among the forms: {}\n", tuple(maximal));
    text
}
