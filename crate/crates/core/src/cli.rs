//! The `toric` command line: JSON fan and polytope files in, deterministic
//! reports out.
//!
//! Every command prints a report `{"command", "options", "input_digest",
//! "result", "exit_status"}`; `input_digest` is the SHA-256 of the input file
//! bytes. `polytope normalfan`, `polytope scale` and `gen` print the bare fan
//! or polytope JSON instead unless `--out` is given, so they can be piped.
//!
//! Exit codes: 0 success, 1 a "no" answer under `--strict`, 2 invalid input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::additive::{
    admits_additive, complete_collections, equivalence_classes, theorem3con_report, CompleteCollection,
};
use crate::cox::{action_formulas, cox_presentation, degree_zero_check};
use crate::demazure::{all_roots, derivation, he_connected_pairs, DemazureRoot, RootsForRay};
use crate::error::Error;
use crate::fan::{builtin as fans, Fan, FanData};
use crate::lattice::{json_int, IntMatrix, IntVector};
use crate::polytope::{builtin as polytopes, check_polytope_theorem, LatticePolytope, PolytopeData};

#[derive(Parser, Debug)]
#[command(name = "toric", version, about = "Demazure roots and additive actions on toric varieties")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Exit with status 1 when a decision command answers "no".
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a fan and test completeness.
    FanCheck { file: PathBuf },
    /// Demazure roots grouped by distinguished ray.
    Roots {
        file: PathBuf,
        /// Sup-norm bound for rays with infinitely many roots.
        #[arg(long)]
        bound: Option<BigInt>,
    },
    /// Complete collections of Demazure roots.
    Collections {
        file: PathBuf,
        /// Group the collections up to fan automorphisms, with witnesses.
        #[arg(long)]
        equivalence: bool,
    },
    /// Decide whether the fan admits a normalized additive action.
    Additive { file: PathBuf },
    /// Cox ring grading and class group torsion.
    Cox { file: PathBuf },
    /// Cone pairs joined by the orbits of a root subgroup.
    Pairs {
        file: PathBuf,
        /// Root as `ray:c1,c2,...,cn` with a 0-based ray index.
        #[arg(long, allow_hyphen_values = true)]
        root: String,
    },
    /// Lattice polytope analyses.
    Polytope {
        #[command(subcommand)]
        action: PolytopeAction,
    },
    /// Write a builtin fan or polytope.
    Gen {
        /// pn, p1n, hirzebruch, wps1, affine, p235, torsion, segment, cube,
        /// simplex, trapezoid, triangle
        name: String,
        #[arg(allow_negative_numbers = true)]
        params: Vec<BigInt>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PolytopeAction {
    /// Facets, the rectangle criterion and the normal fan's verdict.
    Check { file: PathBuf },
    /// The normal fan as fan JSON.
    Normalfan {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// `k * P` as polytope JSON.
    Scale {
        k: BigInt,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Report {
    pub command: String,
    pub options: Value,
    pub input_digest: Option<String>,
    pub result: Value,
    pub exit_status: i32,
}

/// What a command produced: a report, or bare data for piping.
#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Report(Report),
    Data(String),
}

impl Output {
    pub fn exit_status(&self) -> i32 {
        match self {
            Output::Report(r) => r.exit_status,
            Output::Data(_) => 0,
        }
    }
}

fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

fn vec_json(v: &IntVector) -> Value {
    Value::Array(v.iter().map(json_int).collect())
}

fn matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.rows().iter().map(vec_json).collect())
}

fn error_json(e: &Error) -> Value {
    match e {
        Error::InvalidFan(v) => json!({ "error": e.to_string(), "violations": v }),
        _ => json!({ "error": e.to_string() }),
    }
}

fn root_json(r: &DemazureRoot) -> Value {
    json!({ "ray": r.ray(), "e": vec_json(r.e()), "derivation": derivation(r).to_string() })
}

fn collection_json(c: &CompleteCollection) -> Value {
    json!({
        "rays": c.distinguished_rays(),
        "roots": c.roots().iter().map(|r| vec_json(r.e())).collect::<Vec<_>>(),
    })
}

struct Input {
    digest: String,
    text: String,
}

fn read_input(path: &Path) -> Result<Input, Error> {
    let bytes = std::fs::read(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(Input { digest: digest(&bytes), text })
}

fn load_fan(input: &Input) -> Result<Fan, Error> {
    Fan::from_data(FanData::from_json(&input.text)?)
}

fn load_polytope(input: &Input) -> Result<LatticePolytope, Error> {
    LatticePolytope::from_data(PolytopeData::from_json(&input.text)?)
}

fn write_out(path: &Path, data: &str) -> Result<(), Error> {
    std::fs::write(path, format!("{data}\n")).map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Output {
    let (name, options) = describe(&cli.command);
    let report = |digest: Option<String>, outcome: Result<(Value, i32), Error>| {
        let (result, exit_status) = match outcome {
            Ok(x) => x,
            Err(e) => (error_json(&e), 2),
        };
        Output::Report(Report { command: name.to_string(), options: options.clone(), input_digest: digest, result, exit_status })
    };
    let file = match &cli.command {
        Command::FanCheck { file }
        | Command::Roots { file, .. }
        | Command::Collections { file, .. }
        | Command::Additive { file }
        | Command::Cox { file }
        | Command::Pairs { file, .. } => Some(file),
        Command::Polytope { action } => match action {
            PolytopeAction::Check { file } | PolytopeAction::Normalfan { file, .. } | PolytopeAction::Scale { file, .. } => {
                Some(file)
            }
        },
        Command::Gen { .. } => None,
    };
    let input = match file.map(|f| read_input(f)) {
        Some(Err(e)) => return report(None, Err(e)),
        Some(Ok(i)) => Some(i),
        None => None,
    };
    let digest = input.as_ref().map(|i| i.digest.clone());
    let input = input.as_ref();
    let strict = |yes: bool| if cli.strict && !yes { 1 } else { 0 };
    match &cli.command {
        Command::FanCheck { .. } => report(digest, fan_check(input.unwrap())),
        Command::Roots { bound, .. } => report(digest, load_fan(input.unwrap()).and_then(|f| roots(&f, bound.as_ref()))),
        Command::Collections { equivalence, .. } => {
            report(digest, load_fan(input.unwrap()).map(|f| (collections(&f, *equivalence), 0)))
        }
        Command::Additive { .. } => report(
            digest,
            load_fan(input.unwrap()).map(|f| {
                let (v, yes) = additive(&f);
                (v, strict(yes))
            }),
        ),
        Command::Cox { .. } => report(digest, load_fan(input.unwrap()).and_then(|f| cox(&f))),
        Command::Pairs { root, .. } => report(digest, load_fan(input.unwrap()).and_then(|f| pairs(&f, root))),
        Command::Polytope { action } => {
            let polytope = load_polytope(input.unwrap());
            match (action, polytope) {
                (_, Err(e)) => report(digest, Err(e)),
                (PolytopeAction::Check { .. }, Ok(p)) => {
                    let (v, yes) = polytope_check(&p);
                    report(digest, Ok((v, strict(yes))))
                }
                (PolytopeAction::Normalfan { out, .. }, Ok(p)) => {
                    let data = p.normal_fan().to_data().to_json();
                    emit(out.as_deref(), data, digest, report)
                }
                (PolytopeAction::Scale { k, out, .. }, Ok(p)) => match p.scale(k) {
                    Ok(q) => emit(out.as_deref(), q.to_data().to_json(), digest, report),
                    Err(e) => report(digest, Err(e)),
                },
            }
        }
        Command::Gen { name: gen, params, out } => {
            let data = if polytopes::is_polytope_generator(gen) {
                polytopes::by_name(gen, params).map(|p| p.to_data().to_json())
            } else {
                fans::by_name(gen, params).map(|f| f.to_data().to_json())
            };
            let seed = format!("{gen} {}", params.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
            match data {
                Ok(d) => emit(out.as_deref(), d, Some(digest_str(&seed)), report),
                Err(e) => report(Some(digest_str(&seed)), Err(e)),
            }
        }
    }
}

fn digest_str(s: &str) -> String {
    digest(s.trim_end().as_bytes())
}

/// Bare data on stdout, or a report about the file written.
fn emit(
    out: Option<&Path>,
    data: String,
    digest: Option<String>,
    report: impl Fn(Option<String>, Result<(Value, i32), Error>) -> Output,
) -> Output {
    match out {
        None => Output::Data(data),
        Some(path) => {
            let written = write_out(path, &data)
                .map(|()| (json!({ "written": path.display().to_string(), "data": serde_json::from_str::<Value>(&data).expect("valid json") }), 0));
            report(digest, written)
        }
    }
}

fn describe(c: &Command) -> (&'static str, Value) {
    match c {
        Command::FanCheck { .. } => ("fan-check", json!({})),
        Command::Roots { bound, .. } => ("roots", json!({ "bound": bound.as_ref().map(json_int) })),
        Command::Collections { equivalence, .. } => ("collections", json!({ "equivalence": equivalence })),
        Command::Additive { .. } => ("additive", json!({})),
        Command::Cox { .. } => ("cox", json!({})),
        Command::Pairs { root, .. } => ("pairs", json!({ "root": root })),
        Command::Polytope { action } => match action {
            PolytopeAction::Check { .. } => ("polytope check", json!({})),
            PolytopeAction::Normalfan { .. } => ("polytope normalfan", json!({})),
            PolytopeAction::Scale { k, .. } => ("polytope scale", json!({ "k": json_int(k) })),
        },
        Command::Gen { name, params, .. } => {
            ("gen", json!({ "name": name, "params": params.iter().map(json_int).collect::<Vec<_>>() }))
        }
    }
}

fn fan_check(input: &Input) -> Result<(Value, i32), Error> {
    let data = FanData::from_json(&input.text)?;
    let violations = data.validate();
    if !violations.is_empty() {
        return Ok((json!({ "valid": false, "complete": null, "violations": violations }), 2));
    }
    let fan = Fan::from_data(data)?;
    let v = json!({
        "valid": true,
        "complete": fan.is_complete(),
        "violations": [],
        "num_rays": fan.rays().len(),
        "num_max_cones": fan.max_cones().len(),
        "num_cones": fan.faces().len(),
    });
    Ok((v, 0))
}

fn roots(fan: &Fan, bound: Option<&BigInt>) -> Result<(Value, i32), Error> {
    let all = all_roots(fan, bound)?;
    let per_ray: Vec<Value> = all
        .per_ray()
        .iter()
        .enumerate()
        .map(|(i, set)| {
            let (status, b) = match set {
                RootsForRay::Finite(_) => ("finite", Value::Null),
                RootsForRay::Infinite => ("infinite", Value::Null),
                RootsForRay::Truncated { bound, .. } => ("truncated", json_int(bound)),
            };
            json!({
                "ray": i,
                "vector": vec_json(fan.ray(i)),
                "status": status,
                "bound": b,
                "roots": set.listed().iter().map(root_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok((json!({ "finite": all.is_finite(), "listed": all.len(), "rays": per_ray }), 0))
}

fn collections(fan: &Fan, equivalence: bool) -> Value {
    let cs = complete_collections(fan);
    let mut v = json!({
        "count": cs.len(),
        "collections": cs.iter().map(collection_json).collect::<Vec<_>>(),
    });
    if equivalence {
        let classes: Vec<Value> = equivalence_classes(fan, &cs)
            .iter()
            .map(|class| {
                let members: Vec<Value> = class
                    .members
                    .iter()
                    .map(|(j, w)| match w {
                        None => json!({ "collection": j, "automorphism": null, "ray_bijection": null }),
                        Some(w) => json!({
                            "collection": j,
                            "automorphism": matrix_json(w.automorphism.matrix()),
                            "ray_bijection": w.ray_bijection,
                        }),
                    })
                    .collect();
                json!({ "representative": class.representative, "members": members })
            })
            .collect();
        v["classes"] = Value::Array(classes);
    }
    v
}

fn additive(fan: &Fan) -> (Value, bool) {
    let verdict = admits_additive(fan);
    let (formulas, degree_zero) = match &verdict.witness {
        Some(c) => {
            let f = action_formulas(c);
            let dz = cox_presentation(fan).ok().and_then(|p| degree_zero_check(&p, &f).ok());
            (json!(f.rendered()), json!(dz))
        }
        None => (json!([]), Value::Null),
    };
    let theorem = match theorem3con_report(fan) {
        Ok(r) => json!({
            "complete_collection_exists": r.complete_collection_exists,
            "distinguished_span": r.distinguished_span,
        }),
        Err(_) => Value::Null,
    };
    let v = json!({
        "admits": verdict.admits,
        "reading": verdict.reading.as_str(),
        "witness": verdict.witness.as_ref().map(collection_json),
        "formulas": formulas,
        "degree_zero": degree_zero,
        "theorem3con": theorem,
    });
    (v, verdict.admits)
}

fn cox(fan: &Fan) -> Result<(Value, i32), Error> {
    let p = cox_presentation(fan)?;
    let v = json!({
        "num_vars": p.num_vars(),
        "class_rank": p.class_rank(),
        "degrees": p.degrees().iter().map(vec_json).collect::<Vec<_>>(),
        "torsion": p.torsion().iter().map(json_int).collect::<Vec<_>>(),
        "free": p.is_free(),
    });
    Ok((v, 0))
}

/// Parses `ray:c1,c2,...,cn`.
pub fn parse_root(s: &str) -> Result<(usize, IntVector), Error> {
    let bad = || Error::Parse(format!("root {s:?} is not of the form ray:c1,...,cn"));
    let (ray, coords) = s.split_once(':').ok_or_else(bad)?;
    let ray = ray.trim().parse().map_err(|_| bad())?;
    let coords: Vec<BigInt> = coords.split(',').map(|c| c.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
    Ok((ray, IntVector::new(coords)))
}

fn pairs(fan: &Fan, root: &str) -> Result<(Value, i32), Error> {
    let (ray, e) = parse_root(root)?;
    let r = DemazureRoot::new(fan, ray, e)?;
    let pairs = he_connected_pairs(fan, &r);
    Ok((json!({ "root": root_json(&r), "count": pairs.len(), "pairs": pairs }), 0))
}

fn polytope_check(p: &LatticePolytope) -> (Value, bool) {
    let witness = p.inscribed_in_rectangle();
    let report = check_polytope_theorem(p);
    let v = json!({
        "vertices": p.vertices().iter().map(vec_json).collect::<Vec<_>>(),
        "facets": p.facets().iter().map(|f| json!({ "normal": vec_json(&f.normal), "rhs": json_int(&f.rhs) })).collect::<Vec<_>>(),
        "inscribed": report.inscribed,
        "witness": witness.map(|w| json!({
            "vertex": vec_json(&w.vertex),
            "edge_basis": w.edge_basis.iter().map(vec_json).collect::<Vec<_>>(),
        })),
        "fan_admits": report.fan_admits,
        "agree": report.inscribed == report.fan_admits,
    });
    (v, report.inscribed)
}

/// Renders an output in the requested format, newline-terminated.
pub fn render(output: &Output, format: Format) -> String {
    match output {
        Output::Data(d) => format!("{d}\n"),
        Output::Report(r) => match format {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(r).expect("serializable")),
            Format::Text => {
                let mut s = String::new();
                writeln!(s, "command: {}", r.command).unwrap();
                if r.options.as_object().is_some_and(|o| !o.is_empty()) {
                    text_value(&mut s, "options", &r.options, 0);
                }
                writeln!(s, "input_digest: {}", r.input_digest.as_deref().unwrap_or("-")).unwrap();
                text_value(&mut s, "result", &r.result, 0);
                writeln!(s, "exit_status: {}", r.exit_status).unwrap();
                s
            }
        },
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_object() && is_flat(x)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn text_value(s: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            writeln!(s, "{pad}{key}:").unwrap();
            for (k, x) in map {
                text_value(s, k, x, depth + 1);
            }
        }
        Value::Array(items) if !is_flat(v) => {
            writeln!(s, "{pad}{key}:").unwrap();
            for (i, x) in items.iter().enumerate() {
                text_value(s, &format!("[{i}]"), x, depth + 1);
            }
        }
        Value::String(x) => writeln!(s, "{pad}{key}: {x}").unwrap(),
        _ => writeln!(s, "{pad}{key}: {v}").unwrap(),
    }
}

/// Parses `args` (including the program name), runs, prints and returns the
/// exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let out = run(&cli);
    print!("{}", render(&out, cli.format));
    out.exit_status()
}
