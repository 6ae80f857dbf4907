//! The `voltlift` command line.
//!
//! ```text
//! voltlift <spectrum|verify|lift|walks|validate> --digraph PATH --group SPEC
//!     [--irreps PATH] [--chars PATH] [--method M] [--tol T] [--length L]
//!     [--format json|text] [--out PATH]
//! ```
//!
//! `--group` is either a builtin spec (`cyclic:n`, `dihedral:n`,
//! `product:a,b`) or the path of a multiplication-table JSON file.
//! Exit status is 0 on success, 1 on a verification mismatch and 2 on any
//! input error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{build_builtin_group, parse_group_table, GroupTable};
use crate::repr::{builtin_irreps, character_table, load_character_table, load_irreps, CharacterTable, IrrepSet};
use crate::spectra::{
    charsum_well_conditioned, cluster_tolerance, lift_norm_one, lift_spectrum, spectra_equal, MatchReport, Method,
    BRUTEFORCE_MAX_ORDER, DEFAULT_TOL,
};
use crate::voltage::{associated_matrix, build_lift, parse_voltage_digraph, VoltageDigraph};

/// Thread-count override; `0` or unset means one thread per core.
pub const THREADS_ENV: &str = "VOLTLIFT_THREADS";
/// Absolute tolerance for `verify` comparisons against the brute-force spectrum.
pub const VERIFY_TOL_BRUTEFORCE: f64 = 1e-7;
/// Absolute tolerance for `verify` comparisons against the character route.
pub const VERIFY_TOL_CHARSUM: f64 = 1e-6;
/// Largest lift for which `walks` checks every coefficient against the lift.
pub const WALK_ORACLE_MAX_ORDER: usize = 200;

#[derive(Args, Debug, Clone)]
struct Common {
    #[arg(long)]
    digraph: Option<PathBuf>,
    #[arg(long)]
    group: String,
    #[arg(long)]
    irreps: Option<PathBuf>,
    #[arg(long)]
    chars: Option<PathBuf>,
    #[arg(long, default_value = "repr")]
    method: Method,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long)]
    length: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "voltlift", version, about = "Spectra of voltage-digraph lifts")]
struct Invocation {
    #[arg(value_enum)]
    command: SubcommandName,
    #[command(flatten)]
    common: Common,
}

/// Which operation to run.
#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcommandName {
    Spectrum,
    Verify,
    Lift,
    Walks,
    Validate,
}

/// Validated command-line configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: SubcommandName,
    pub digraph: Option<PathBuf>,
    pub group: String,
    pub irreps: Option<PathBuf>,
    pub chars: Option<PathBuf>,
    pub method: Method,
    pub tol: f64,
    pub length: Option<u32>,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    /// Parses `argv` (without the program name).
    pub fn parse<I, S>(argv: I) -> std::result::Result<Self, clap::Error>
    where
        I: IntoIterator<Item = S>,
        S: Into<std::ffi::OsString> + Clone,
    {
        let args = std::iter::once(std::ffi::OsString::from("voltlift")).chain(argv.into_iter().map(Into::into));
        let inv = Invocation::try_parse_from(args)?;
        let c = inv.common;
        Ok(RunConfig {
            command: inv.command,
            digraph: c.digraph,
            group: c.group,
            irreps: c.irreps,
            chars: c.chars,
            method: c.method,
            tol: c.tol,
            length: c.length,
            format: c.format,
            out: c.out,
        })
    }

    fn check(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidArgument(format!("--tol must be positive, got {}", self.tol)));
        }
        if self.command != SubcommandName::Validate && self.digraph.is_none() {
            return Err(Error::InvalidArgument("--digraph is required".into()));
        }
        if self.command == SubcommandName::Walks && self.length.is_none() {
            return Err(Error::InvalidArgument("walks needs --length".into()));
        }
        Ok(())
    }
}

/// Exit status and rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub status: i32,
    /// The output document, unless it was written to `--out`.
    pub stdout: String,
    pub stderr: String,
}

/// Runs one invocation; never panics on bad input.
pub fn run<I, S>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::parse(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    RunOutput { status: 0, stdout: text, stderr: String::new() }
                }
                _ => RunOutput { status: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    match with_thread_pool(|| execute(&config)) {
        Ok((status, doc)) => match &config.out {
            Some(path) => match std::fs::write(path, &doc) {
                Ok(()) => RunOutput { status, stdout: String::new(), stderr: String::new() },
                Err(e) => RunOutput { status: 2, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
            },
            None => RunOutput { status, stdout: doc, stderr: String::new() },
        },
        Err(e) => RunOutput { status: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn with_thread_pool<T: Send>(f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    // parallelism comes from the per-irrep pipelines; dense solves stay
    // sequential so output does not depend on the thread count
    faer::set_global_parallelism(faer::Par::Seq);
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::InvalidArgument(format!("{THREADS_ENV} must be a non-negative integer, got {v:?}")))?,
        Err(_) => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start thread pool: {e}")))?;
    pool.install(f)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

/// A builtin spec, or a table file if `spec` names an existing file.
pub fn load_group(spec: &str) -> Result<GroupTable> {
    let path = Path::new(spec);
    if path.is_file() {
        parse_group_table(&read(path)?)
    } else {
        build_builtin_group(spec)
    }
}

struct Inputs {
    group: Arc<GroupTable>,
    irreps: Option<IrrepSet>,
    chars: Option<CharacterTable>,
    irreps_source: &'static str,
    chars_source: &'static str,
}

fn load_inputs(config: &RunConfig, need_irreps: bool, need_chars: bool) -> Result<Inputs> {
    let group = Arc::new(load_group(&config.group)?);
    let (irreps, irreps_source) = match &config.irreps {
        Some(p) => (Some(load_irreps(&read(p)?, group.clone())?), "file"),
        None if need_irreps || (need_chars && config.chars.is_none()) => match builtin_irreps(group.clone()) {
            Ok(s) => (Some(s), "builtin"),
            Err(Error::UnsupportedFamily(_)) if !need_irreps => (None, "none"),
            Err(e) => return Err(e),
        },
        None => (None, "none"),
    };
    let (chars, chars_source) = match (&config.chars, &irreps) {
        (Some(p), _) => (Some(load_character_table(&read(p)?, group.clone())?), "file"),
        (None, Some(s)) => (Some(character_table(s)), "irreps"),
        (None, None) if need_chars => {
            return Err(Error::InvalidArgument("a character table is needed: pass --chars or --irreps".into()))
        }
        (None, None) => (None, "none"),
    };
    Ok(Inputs { group, irreps, chars, irreps_source, chars_source })
}

fn load_digraph(config: &RunConfig, group: Arc<GroupTable>) -> Result<VoltageDigraph> {
    let path = config.digraph.as_ref().expect("checked");
    parse_voltage_digraph(&read(path)?, group)
}

fn execute(config: &RunConfig) -> Result<(i32, String)> {
    config.check()?;
    match config.command {
        SubcommandName::Spectrum => spectrum(config),
        SubcommandName::Verify => verify(config),
        SubcommandName::Lift => lift(config),
        SubcommandName::Walks => walks(config),
        SubcommandName::Validate => validate(config),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn spectrum(config: &RunConfig) -> Result<(i32, String)> {
    let inputs = load_inputs(config, config.method == Method::Repr, config.method == Method::Charsum)?;
    let d = load_digraph(config, inputs.group.clone())?;
    let s = lift_spectrum(&d, config.method, inputs.irreps.as_ref(), inputs.chars.as_ref(), config.tol)?;
    let out = match config.format {
        Format::Json => to_json(&s.to_document(config.method))?,
        Format::Text => s.to_text(),
    };
    Ok((0, out))
}

#[derive(Serialize)]
struct Comparison {
    left: Method,
    right: Method,
    status: &'static str,
    worst: Option<f64>,
    tolerance: f64,
    detail: String,
}

#[derive(Serialize)]
struct VerifyDocument {
    order: usize,
    matched: bool,
    comparisons: Vec<Comparison>,
    report: Vec<String>,
}

fn comparison(left: Method, right: Method, tol: f64, result: Result<MatchReport>) -> Comparison {
    match result {
        Ok(r) => Comparison {
            left,
            right,
            status: if r.matched { "match" } else { "mismatch" },
            worst: Some(r.worst),
            tolerance: tol,
            detail: r.to_string(),
        },
        Err(e) => Comparison { left, right, status: "skipped", worst: None, tolerance: tol, detail: format!("SKIPPED ({e})") },
    }
}

fn verify(config: &RunConfig) -> Result<(i32, String)> {
    let inputs = load_inputs(config, true, false)?;
    let d = load_digraph(config, inputs.group.clone())?;
    let irreps = inputs.irreps.as_ref();
    let repr = lift_spectrum(&d, Method::Repr, irreps, None, config.tol)?;
    let order = d.order() * d.group().order();

    let mut comparisons = Vec::new();
    let bruteforce = if order <= BRUTEFORCE_MAX_ORDER {
        lift_spectrum(&d, Method::Bruteforce, None, None, config.tol)
            .map(|b| spectra_equal(&repr, &b, VERIFY_TOL_BRUTEFORCE))
    } else {
        Err(Error::SizeLimit(format!("lift has {order} vertices")))
    };
    comparisons.push(comparison(Method::Repr, Method::Bruteforce, VERIFY_TOL_BRUTEFORCE, bruteforce));

    let charsum = match inputs.chars.as_ref() {
        Some(t) if charsum_well_conditioned(&d, t) => {
            lift_spectrum(&d, Method::Charsum, None, Some(t), config.tol).map(|c| spectra_equal(&repr, &c, VERIFY_TOL_CHARSUM))
        }
        Some(_) => Err(Error::SizeLimit("r·d above 12, power sums are too ill-conditioned".into())),
        None => Err(Error::InvalidArgument("no character table".into())),
    };
    comparisons.push(comparison(Method::Repr, Method::Charsum, VERIFY_TOL_CHARSUM, charsum));

    let matched = comparisons.iter().all(|c| c.status != "mismatch");
    let report: Vec<String> = comparisons.iter().map(|c| format!("{} vs {}: {}", c.left, c.right, c.detail)).collect();
    let status = if matched { 0 } else { 1 };
    let out = match config.format {
        Format::Json => to_json(&VerifyDocument { order, matched, comparisons, report })?,
        Format::Text => report.iter().map(|l| format!("{l}\n")).collect(),
    };
    Ok((status, out))
}

fn lift(config: &RunConfig) -> Result<(i32, String)> {
    let group = Arc::new(load_group(&config.group)?);
    let d = load_digraph(config, group)?;
    let lift = build_lift(&d);
    let out = match config.format {
        Format::Json => to_json(&lift.to_document())?,
        Format::Text => {
            let mut s = String::new();
            for &(a, b) in lift.arcs() {
                let _ = writeln!(s, "{} -> {}", lift.labels()[a], lift.labels()[b]);
            }
            s
        }
    };
    Ok((0, out))
}

#[derive(Serialize)]
struct WalkEntry {
    from: String,
    to: String,
    /// `[element, count]` for every element with a nonzero count.
    coefficients: Vec<(String, i64)>,
}

#[derive(Serialize)]
struct WalkOracle {
    checked: bool,
    coefficient_mismatches: usize,
    trace_lift: Option<i64>,
    trace_algebra: Option<i64>,
}

#[derive(Serialize)]
struct WalksDocument {
    length: u32,
    entries: Vec<WalkEntry>,
    oracle: WalkOracle,
}

fn walks(config: &RunConfig) -> Result<(i32, String)> {
    let group = Arc::new(load_group(&config.group)?);
    let d = load_digraph(config, group.clone())?;
    let length = config.length.expect("checked");
    let power = associated_matrix(&d).pow(length)?;
    let r = d.order();
    let n = group.order();
    let mut entries = Vec::with_capacity(r * r);
    for u in 0..r {
        for v in 0..r {
            let coefficients =
                power.entry(u, v).support().map(|(g, a)| (group.name(g).to_string(), a)).collect();
            entries.push(WalkEntry { from: d.vertices()[u].clone(), to: d.vertices()[v].clone(), coefficients });
        }
    }

    let mut oracle = WalkOracle { checked: false, coefficient_mismatches: 0, trace_lift: None, trace_algebra: None };
    if r * n <= WALK_ORACLE_MAX_ORDER {
        let lift = build_lift(&d);
        let a = lift.adjacency_power(length)?;
        let m = lift.order();
        for u in 0..r {
            for v in 0..r {
                for g in 0..n {
                    let want = power.entry(u, v).coeff(g);
                    oracle.coefficient_mismatches +=
                        (0..n).filter(|&h| a[lift.vertex(u, h) * m + lift.vertex(v, group.mul(h, g))] != want).count();
                }
            }
        }
        let trace_lift = (0..m).try_fold(0i64, |acc, i| acc.checked_add(a[i * m + i])).ok_or(Error::Overflow("lift trace"))?;
        let identity_sum = (0..r)
            .try_fold(0i64, |acc, u| acc.checked_add(power.entry(u, u).coeff(group.identity())))
            .and_then(|s| s.checked_mul(n as i64))
            .ok_or(Error::Overflow("algebra trace"))?;
        oracle.checked = true;
        oracle.trace_lift = Some(trace_lift);
        oracle.trace_algebra = Some(identity_sum);
    }
    let mismatch = oracle.checked && (oracle.coefficient_mismatches > 0 || oracle.trace_lift != oracle.trace_algebra);

    let out = match config.format {
        Format::Json => to_json(&WalksDocument { length, entries, oracle })?,
        Format::Text => {
            let mut s = String::new();
            for u in 0..r {
                for v in 0..r {
                    let _ = writeln!(s, "{} -> {}: {}", d.vertices()[u], d.vertices()[v], power.entry(u, v).display(&group));
                }
            }
            if oracle.checked {
                let verdict = if mismatch { "MISMATCH" } else { "MATCH" };
                let _ = writeln!(
                    s,
                    "lift walk counts: {verdict} ({} coefficient mismatches, traces {} and {})",
                    oracle.coefficient_mismatches,
                    oracle.trace_lift.unwrap_or_default(),
                    oracle.trace_algebra.unwrap_or_default()
                );
            }
            s
        }
    };
    Ok((if mismatch { 1 } else { 0 }, out))
}

#[derive(Serialize)]
struct GroupSummary {
    order: usize,
    abelian: bool,
    identity: String,
    class_sizes: Vec<usize>,
    family: Option<String>,
}

#[derive(Serialize)]
struct ValidateDocument {
    group: GroupSummary,
    irreps: Option<IrrepSummary>,
    characters: Option<CharacterSummary>,
    digraph: Option<DigraphSummary>,
}

#[derive(Serialize)]
struct IrrepSummary {
    source: &'static str,
    dims: Vec<usize>,
}

#[derive(Serialize)]
struct CharacterSummary {
    source: &'static str,
    degrees: Vec<usize>,
    column_orthogonality_defect: f64,
}

#[derive(Serialize)]
struct DigraphSummary {
    vertices: usize,
    arcs: usize,
    lift_order: usize,
    norm_one: f64,
    cluster_tolerance: f64,
}

fn validate(config: &RunConfig) -> Result<(i32, String)> {
    let inputs = load_inputs(config, false, false)?;
    // builtin irreps are reported when available, but are not required
    let (irreps, irreps_source) = match inputs.irreps {
        Some(s) => (Some(s), inputs.irreps_source),
        None => match builtin_irreps(inputs.group.clone()) {
            Ok(s) => (Some(s), "builtin"),
            Err(Error::UnsupportedFamily(_)) => (None, "none"),
            Err(e) => return Err(e),
        },
    };
    let (chars, chars_source) = match (inputs.chars, &irreps) {
        (Some(t), _) => (Some(t), inputs.chars_source),
        (None, Some(s)) => (Some(character_table(s)), "irreps"),
        (None, None) => (None, "none"),
    };
    let g = &inputs.group;
    let group = GroupSummary {
        order: g.order(),
        abelian: g.is_abelian(),
        identity: g.name(g.identity()).to_string(),
        class_sizes: g.conjugacy_classes().iter().map(Vec::len).collect(),
        family: g.family().map(|f| f.to_string()),
    };
    let digraph = match &config.digraph {
        Some(_) => {
            let d = load_digraph(config, g.clone())?;
            Some(DigraphSummary {
                vertices: d.order(),
                arcs: d.arcs().len(),
                lift_order: d.order() * g.order(),
                norm_one: lift_norm_one(&d),
                cluster_tolerance: cluster_tolerance(&d, config.tol),
            })
        }
        None => None,
    };
    let doc = ValidateDocument {
        group,
        irreps: irreps.as_ref().map(|s| IrrepSummary { source: irreps_source, dims: s.dims() }),
        characters: chars.as_ref().map(|t| CharacterSummary {
            source: chars_source,
            degrees: (0..t.len()).map(|i| t.degree(i)).collect(),
            column_orthogonality_defect: t.column_orthogonality_defect(),
        }),
        digraph,
    };
    let out = match config.format {
        Format::Json => to_json(&doc)?,
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "group: order {}, {} classes {:?}", doc.group.order, doc.group.class_sizes.len(), doc.group.class_sizes);
            match &doc.irreps {
                Some(i) => _ = writeln!(s, "irreps ({}): OK, dimensions {:?}", i.source, i.dims),
                None => _ = writeln!(s, "irreps: none"),
            }
            match &doc.characters {
                Some(c) => _ = writeln!(s, "characters ({}): OK, degrees {:?}", c.source, c.degrees),
                None => _ = writeln!(s, "characters: none"),
            }
            if let Some(d) = &doc.digraph {
                let _ = writeln!(s, "digraph: OK, {} vertices, {} arcs, lift order {}", d.vertices, d.arcs, d.lift_order);
            }
            s
        }
    };
    Ok((0, out))
}
