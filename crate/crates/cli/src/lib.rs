//! Argument parsing and dispatch for the `skewbrace` binary.
//!
//! Every verb produces JSON carrying `tool_version`, `command` and
//! `elapsed_ms`. Exit codes: 0 success, 1 a verification failed, 2 usage
//! error, 3 resource limit or other module error.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use skewbrace::brace::{brace_maps, image_subgroups, is_left_simple, left_ideals, SkewBrace};
use skewbrace::classification::{
    audit::DEFAULT_SEED, audit_tables_seeded, check_conditions, check_thm2b, verify_thm1, verify_thm2a,
    THM1_DEFAULT_LIMIT,
};
use skewbrace::enumeration::{brute_force_braces, enumerate_braces, EnumerateOptions, SearchBudget};
use skewbrace::group::{
    all_subgroups, automorphism_group, builtin_group, builtin_names, direct_power, group_profile, Bounds, FiniteGroup,
};
use skewbrace::hopf_galois::{correspondence_report, fixed_algebra_stats};
use skewbrace::io::{load_brace_json, load_group_json, BraceFile};
use skewbrace::Error;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser, Debug)]
#[command(name = "skewbrace", version, about = "Finite skew brace toolkit")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Built-in group name or path to a group JSON file.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Path to a brace JSON file, or `trivial` / `almost-trivial` on `--group`.
    #[arg(long, global = true)]
    brace: Option<String>,
    #[arg(long, global = true)]
    p: Option<u64>,
    #[arg(long, global = true)]
    n: Option<u32>,
    #[arg(long, global = true)]
    up_to_iso: bool,
    /// Worker threads; the result does not depend on this.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true)]
    timeout_ms: Option<u64>,
    #[arg(long, global = true)]
    lattice_bound: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand, Debug, Clone)]
enum Verb {
    /// Order, profile, automorphism counts and subgroup count of a group.
    GroupInspect { path: Option<String> },
    /// Validates a brace and its λ/ρ maps.
    BraceCheck { path: Option<String> },
    /// Lists every left ideal.
    BraceIdeals { path: Option<String> },
    /// Decides left-simplicity, with a witness ideal otherwise.
    BraceSimple { path: Option<String> },
    /// Streams every brace on a group as JSON lines.
    Enumerate { path: Option<String> },
    /// Left-simple braces on an elementary abelian group.
    VerifyThm1,
    /// Left-simple braces on a non-abelian simple group.
    VerifyThm2a { path: Option<String> },
    /// Necessary conditions for a brace on a power of a simple group.
    CheckThm2b { path: Option<String> },
    /// Factorization conditions for a brace on a simple group.
    ClassifyConditions { path: Option<String> },
    /// Recomputes every entry of the factorization tables.
    AuditTables,
    /// Hopf–Galois correspondence data of a brace.
    HgsReport { path: Option<String> },
    /// Compares brute force with the holomorph enumeration.
    OracleCompare { path: Option<String> },
}

impl Verb {
    fn name(&self) -> &'static str {
        match self {
            Verb::GroupInspect { .. } => "group-inspect",
            Verb::BraceCheck { .. } => "brace-check",
            Verb::BraceIdeals { .. } => "brace-ideals",
            Verb::BraceSimple { .. } => "brace-simple",
            Verb::Enumerate { .. } => "enumerate",
            Verb::VerifyThm1 => "verify-thm1",
            Verb::VerifyThm2a { .. } => "verify-thm2a",
            Verb::CheckThm2b { .. } => "check-thm2b",
            Verb::ClassifyConditions { .. } => "classify-conditions",
            Verb::AuditTables => "audit-tables",
            Verb::HgsReport { .. } => "hgs-report",
            Verb::OracleCompare { .. } => "oracle-compare",
        }
    }

    fn path(&self) -> Option<&str> {
        match self {
            Verb::GroupInspect { path }
            | Verb::BraceCheck { path }
            | Verb::BraceIdeals { path }
            | Verb::BraceSimple { path }
            | Verb::Enumerate { path }
            | Verb::VerifyThm2a { path }
            | Verb::CheckThm2b { path }
            | Verb::ClassifyConditions { path }
            | Verb::HgsReport { path }
            | Verb::OracleCompare { path } => path.as_deref(),
            Verb::VerifyThm1 | Verb::AuditTables => None,
        }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const RESOURCE: i32 = 3;
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    /// One JSON document, or JSON lines for `enumerate`.
    pub output: String,
}

enum Failure {
    Usage(String),
    Module(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Module(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

struct Ctx {
    cli: Cli,
    bounds: Bounds,
}

/// A computed report: body fields, whether the verification passed, and
/// optional JSON lines preceding the body.
struct Report {
    body: Value,
    passed: bool,
    lines: Vec<Value>,
}

impl Report {
    fn ok(body: Value) -> Report {
        Report {
            body,
            passed: true,
            lines: Vec::new(),
        }
    }

    fn verdict(body: Value, passed: bool) -> Report {
        Report {
            body,
            passed,
            lines: Vec::new(),
        }
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

impl Ctx {
    fn options(&self) -> EnumerateOptions {
        EnumerateOptions {
            up_to_iso: self.cli.up_to_iso,
            bounds: self.bounds,
            budget: SearchBudget {
                wall: self.cli.timeout_ms.map(Duration::from_millis),
                ..SearchBudget::default()
            },
        }
    }

    fn group_arg(&self, verb: &Verb) -> Res<String> {
        self.cli
            .group
            .clone()
            .or_else(|| verb.path().map(str::to_string))
            .ok_or_else(|| Failure::Usage("--group is required".into()))
    }

    fn group(&self, verb: &Verb) -> Res<FiniteGroup> {
        self.load_group(&self.group_arg(verb)?)
    }

    fn load_group(&self, spec: &str) -> Res<FiniteGroup> {
        if builtin_names().contains(&spec) {
            return Ok(builtin_group(spec)?);
        }
        let text = read(spec, "--group")?;
        Ok(load_group_json(&text, &self.bounds)?)
    }

    /// `--brace` (or the positional path) as a file, or a built-in
    /// construction on `--group`, raised to `--n` when given.
    fn brace(&self, verb: &Verb) -> Res<SkewBrace> {
        let spec = self
            .cli
            .brace
            .clone()
            .or_else(|| verb.path().map(str::to_string))
            .ok_or_else(|| Failure::Usage("--brace is required".into()))?;
        match spec.as_str() {
            "trivial" | "almost-trivial" => {
                let t = self.load_group(
                    self.cli
                        .group
                        .as_deref()
                        .ok_or_else(|| Failure::Usage(format!("--brace {spec} needs --group")))?,
                )?;
                let g = match self.cli.n {
                    Some(n) if n >= 2 => direct_power(&t, n as usize, &self.bounds)?,
                    _ => t,
                };
                Ok(if spec == "trivial" {
                    SkewBrace::trivial(&g)?
                } else {
                    SkewBrace::almost_trivial(&g)?
                })
            }
            path => {
                let text = read(path, "--brace")?;
                Ok(load_brace_json(&text, &self.bounds)?)
            }
        }
    }

    fn dispatch(&self, verb: &Verb) -> Res<Report> {
        match verb {
            Verb::GroupInspect { .. } => self.group_inspect(verb),
            Verb::BraceCheck { .. } => {
                let b = self.brace(verb)?;
                let maps = brace_maps(&b);
                let imgs = image_subgroups(&b, &maps);
                let congruent = maps.lambda_rho_congruent_mod_inner(&b).is_none();
                let body = json!({
                    "brace": b.name(),
                    "order": b.order(),
                    "class": b.brace_class(),
                    "maps_verified": true,
                    "identities_hold": imgs.identities_hold(),
                    "lambda_rho_congruent_mod_inn": congruent,
                    "im_lambda": imgs.im_lambda.len(),
                    "im_rho": imgs.im_rho.len(),
                    "gamma": imgs.gamma.len(),
                });
                Ok(Report::verdict(body, imgs.identities_hold() && congruent))
            }
            Verb::BraceIdeals { .. } => {
                let b = self.brace(verb)?;
                let ideals = left_ideals(&b, &self.bounds)?;
                Ok(Report::ok(json!({
                    "brace": b.name(),
                    "count": ideals.len(),
                    "ideals": to_value(&ideals),
                })))
            }
            Verb::BraceSimple { .. } => {
                let b = self.brace(verb)?;
                let s = is_left_simple(&b);
                Ok(Report::ok(json!({ "brace": b.name(), "order": b.order(), "result": to_value(&s) })))
            }
            Verb::Enumerate { .. } => {
                let g = self.group(verb)?;
                let braces = enumerate_braces(&g, &self.options())?;
                let lines = braces
                    .iter()
                    .enumerate()
                    .map(|(i, b)| {
                        json!({
                            "index": i,
                            "name": b.name(),
                            "class": b.brace_class(),
                            "circle": b.circle().table_rows(),
                        })
                    })
                    .collect();
                Ok(Report {
                    body: json!({ "group": g.name(), "count": braces.len(), "up_to_iso": self.cli.up_to_iso }),
                    passed: true,
                    lines,
                })
            }
            Verb::VerifyThm1 => {
                let (p, n) = match (self.cli.p, self.cli.n) {
                    (Some(p), Some(n)) => (p, n),
                    _ => return Err(Failure::Usage("verify-thm1 needs --p and --n".into())),
                };
                let r = verify_thm1(p, n, &self.options(), THM1_DEFAULT_LIMIT)?;
                Ok(Report::verdict(to_value(&r), r.holds))
            }
            Verb::VerifyThm2a { .. } => {
                let t = self.group(verb)?;
                let r = verify_thm2a(&t, &self.options())?;
                Ok(Report::verdict(to_value(&r), r.holds))
            }
            Verb::CheckThm2b { .. } => {
                let t = self.load_group(
                    self.cli
                        .group
                        .as_deref()
                        .ok_or_else(|| Failure::Usage("check-thm2b needs --group".into()))?,
                )?;
                let n = self.cli.n.ok_or_else(|| Failure::Usage("check-thm2b needs --n".into()))?;
                let b = self.brace(verb)?;
                let r = check_thm2b(&b, &t, n as usize, &self.bounds)?;
                let passed = r.implication_holds && (r.left_simple || r.witness.is_some());
                Ok(Report::verdict(to_value(&r), passed))
            }
            Verb::ClassifyConditions { .. } => {
                let b = self.brace(verb)?;
                let r = check_conditions(&b, &self.bounds)?;
                Ok(Report::ok(to_value(&r)))
            }
            Verb::AuditTables => {
                let r = audit_tables_seeded(self.cli.seed.unwrap_or(DEFAULT_SEED))?;
                let passed = r.summary.all_passed;
                Ok(Report::verdict(to_value(&r), passed))
            }
            Verb::HgsReport { .. } => {
                let b = self.brace(verb)?;
                let r = correspondence_report(&b, &self.bounds)?;
                let stats = fixed_algebra_stats(&b);
                Ok(Report::ok(json!({ "report": to_value(&r), "fixed_algebra": to_value(&stats) })))
            }
            Verb::OracleCompare { .. } => {
                let g = self.group(verb)?;
                let tables = |bs: Vec<SkewBrace>| {
                    let mut t: Vec<Vec<Vec<usize>>> = bs.iter().map(|b| b.circle().table_rows()).collect();
                    t.sort();
                    t
                };
                let brute = tables(brute_force_braces(&g)?);
                let opts = EnumerateOptions {
                    up_to_iso: false,
                    ..self.options()
                };
                let holo = tables(enumerate_braces(&g, &opts)?);
                let same = brute == holo;
                Ok(Report::verdict(
                    json!({
                        "group": g.name(),
                        "brute_force_count": brute.len(),
                        "enumerated_count": holo.len(),
                        "identical": same,
                    }),
                    same,
                ))
            }
        }
    }

    fn group_inspect(&self, verb: &Verb) -> Res<Report> {
        let g = self.group(verb)?;
        let profile = group_profile(&g, &self.bounds)?;
        let aut = automorphism_group(&g, &self.bounds).ok().map(|a| {
            json!({ "order": a.order(), "inner": a.inner_order(), "out": a.out_order() })
        });
        let subgroups = all_subgroups(&g, &self.bounds).ok().map(|s| s.len());
        Ok(Report::ok(json!({
            "group": g.name(),
            "order": g.order(),
            "profile": to_value(&profile),
            "class_sizes": g.class_sizes(),
            "automorphisms": aut,
            "subgroup_count": subgroups,
            "table": to_value(&skewbrace::io::GroupFile::from_group(&g)),
        })))
    }
}

fn read(path: &str, flag: &str) -> Res<String> {
    std::fs::read_to_string(Path::new(path)).map_err(|e| Failure::Usage(format!("{flag} {path}: {e}")))
}

fn error_value(e: &Error) -> (i32, Value) {
    let code = match e {
        Error::BraceRelationFails { .. }
        | Error::NotAGroup { .. }
        | Error::OrderMismatch { .. }
        | Error::IdentityMismatch { .. }
        | Error::TableCorrupt { .. } => exit::FAILED,
        Error::Invalid(_) => exit::USAGE,
        _ => exit::RESOURCE,
    };
    let mut v = json!({ "message": e.to_string() });
    match e {
        Error::BraceRelationFails { a, b, c } => v["triple"] = json!([a, b, c]),
        Error::TableCorrupt { row, detail } => {
            v["row"] = json!(row);
            v["detail"] = json!(detail);
        }
        Error::SizeLimit { what, size, bound } => {
            v["what"] = json!(what);
            v["size"] = json!(size.to_string());
            v["bound"] = json!(bound.to_string());
        }
        _ => {}
    }
    (code, v)
}

fn envelope(command: &str, start: Instant, fields: Value) -> Value {
    let mut v = json!({
        "tool_version": TOOL_VERSION,
        "command": command,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    });
    if let Value::Object(m) = fields {
        for (k, x) in m {
            v[k] = x;
        }
    }
    v
}

/// Parses `argv` (including the program name) and runs the verb. With
/// `--out`, the report is written to that file as well.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let start = Instant::now();
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => exit::OK,
                _ => exit::USAGE,
            };
            let body = json!({ "usage_error": e.to_string() });
            return Outcome {
                code,
                output: envelope("", start, body).to_string(),
            };
        }
    };
    let verb = cli.verb.clone();
    let command = verb.name();
    let bounds = Bounds {
        lattice: cli.lattice_bound.unwrap_or(Bounds::default().lattice),
        ..Bounds::default()
    };
    let workers = cli.workers;
    let out = cli.out.clone();
    let ctx = Ctx { cli, bounds };
    let result = match workers {
        Some(0) => Err(Failure::Usage("--workers must be at least 1".into())),
        Some(k) => match rayon::ThreadPoolBuilder::new().num_threads(k).build() {
            Ok(pool) => pool.install(|| ctx.dispatch(&verb)),
            Err(e) => Err(Failure::Usage(format!("--workers {k}: {e}"))),
        },
        None => ctx.dispatch(&verb),
    };
    let (code, output) = match result {
        Ok(r) => {
            let mut body = r.body;
            body["passed"] = json!(r.passed);
            let mut text = String::new();
            for line in &r.lines {
                text.push_str(&line.to_string());
                text.push('\n');
            }
            text.push_str(&envelope(command, start, body).to_string());
            (if r.passed { exit::OK } else { exit::FAILED }, text)
        }
        Err(Failure::Usage(msg)) => (
            exit::USAGE,
            envelope(command, start, json!({ "usage_error": msg })).to_string(),
        ),
        Err(Failure::Module(e)) => {
            let (code, v) = error_value(&e);
            (code, envelope(command, start, json!({ "error": v })).to_string())
        }
    };
    if let Some(path) = out {
        if let Err(e) = std::fs::write(&path, format!("{output}\n")) {
            return Outcome {
                code: exit::USAGE,
                output: envelope(command, start, json!({ "usage_error": format!("--out {}: {e}", path.display()) }))
                    .to_string(),
            };
        }
    }
    Outcome { code, output }
}

/// Drops the timing and version fields so reports from different runs
/// can be compared.
pub fn strip_volatile(output: &str) -> String {
    output
        .lines()
        .map(|line| match serde_json::from_str::<Value>(line) {
            Ok(Value::Object(mut m)) => {
                m.remove("elapsed_ms");
                m.remove("tool_version");
                Value::Object(m).to_string()
            }
            _ => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// A brace file for `b`, for writing test inputs.
pub fn brace_file_json(b: &SkewBrace) -> String {
    serde_json::to_string(&BraceFile::from_brace(b)).expect("brace files serialize")
}
