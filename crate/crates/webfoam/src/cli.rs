//! Command-line front end: argument parsing, dispatch and output rendering.
//!
//! Every subcommand produces a JSON value; `--format table` renders the same value as
//! aligned text. Exit codes are 0 on success, 1 on a domain error or failed check, 2 on
//! a usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::adhm;
use crate::catalogue::{self, ENTRIES};
use crate::dims_gradings::{self, parse_q, BifoldTopology};
use crate::foam_eval::parse_foam;
use crate::module_algebra::{
    edge_decomposition, known_module, quotient_module, F2Module, Presentation,
};
use crate::skein::{euler_char, euler_char_dual};
use crate::tait::{coloring_counts, one_set_ledger, planar_lsharp_dim};
use crate::web_core::{parse_diagram, parse_web, Diagram, Web};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Parser)]
#[command(name = "webfoam", version, about = "Web and foam calculators over F2")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tait colorings, signed count, 1-sets and the planar dimension.
    Tait {
        /// Web or diagram JSON file, or a catalogue entry name.
        input: String,
    },
    /// Euler characteristic by crossing expansion.
    Euler {
        /// Diagram JSON file, or a catalogue entry name.
        input: String,
        /// Expand with the dual pairing (SmoothB, EdgeA).
        #[arg(long)]
        dual: bool,
    },
    /// Evaluate a closed foam expression, e.g. `theta 0 1 2`.
    FoamEval {
        #[arg(required = true, num_args = 1.., trailing_var_arg = true)]
        expr: Vec<String>,
    },
    /// Known module of a web, or a quotient of F2[generators] by relations.
    Module {
        #[arg(long, conflicts_with = "generators")]
        web: Option<String>,
        /// Comma-separated generator names for a presentation.
        #[arg(long, value_delimiter = ',', requires = "relations")]
        generators: Vec<String>,
        /// Relation polynomial; repeat for several.
        #[arg(long = "relation", id = "relations")]
        relations: Vec<String>,
        /// Add the simultaneous edge decomposition.
        #[arg(long)]
        decompose: bool,
        /// Restrict the decomposition to these operators (comma-separated).
        #[arg(long, value_delimiter = ',')]
        edges: Vec<String>,
        /// Include operator matrices.
        #[arg(long)]
        matrices: bool,
    },
    /// Formal moduli dimension, its residue mod 6 and parity.
    #[command(allow_negative_numbers = true)]
    Dims {
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
        #[arg(long, default_value_t = 0)]
        bplus: i64,
        #[arg(long, default_value_t = 0)]
        b1: i64,
        /// Self-intersection of the singular surface, `p/q`.
        #[arg(long, allow_hyphen_values = true)]
        sigma2: String,
        #[arg(long)]
        chi: i64,
        #[arg(long, default_value_t = 0)]
        t: i64,
    },
    /// Check the equivariant ADHM data and the point-class coefficient.
    AdhmVerify {
        #[arg(long, default_value_t = 3)]
        rank: usize,
        /// Side of the (t1, t2) grid.
        #[arg(long, default_value_t = 10)]
        grid: usize,
        /// Random z per grid point.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 2026)]
        seed: u64,
    },
    /// Bundled example webs with expected invariants.
    Catalogue {
        /// Recompute every expectation.
        #[arg(long)]
        verify: bool,
    },
}

/// A domain failure, or a report whose checks did not pass.
#[derive(Debug)]
pub enum Failure {
    Domain(String),
    Check(Value),
}

fn domain<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Domain(e.to_string())
}

pub enum Input {
    Web(Web),
    Diagram(Diagram),
}

/// Read a file, or fall back to a catalogue name.
pub fn load_input(input: &str) -> Result<Input, Failure> {
    if Path::new(input).exists() {
        let text =
            std::fs::read_to_string(input).map_err(|e| Failure::Domain(format!("{input}: {e}")))?;
        let value: Value =
            serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("{input}: {e}")))?;
        if value.get("edges").is_some() {
            return parse_web(&text).map(Input::Web).map_err(domain);
        }
        return parse_diagram(&text).map(Input::Diagram).map_err(domain);
    }
    catalogue::entry(input)
        .map(|e| Input::Diagram(e.diagram()))
        .ok_or_else(|| Failure::Domain(format!("no file or catalogue entry named {input:?}")))
}

fn tait_report(input: Input) -> Value {
    let (web, planar) = match input {
        Input::Web(w) => (w, true),
        Input::Diagram(d) => (d.underlying_web(), d.crossing_count() == 0),
    };
    let (count, signed) = coloring_counts(&web);
    let one_sets = one_set_ledger(&web);
    json!({
        "count": count,
        "signed": signed,
        "vertices": web.vertex_count(),
        "edges": web.edge_count(),
        "one_sets": one_sets,
        "planar_dim": planar.then(|| planar_lsharp_dim(&web)),
    })
}

fn module_report(
    m: &F2Module,
    name: Option<&str>,
    decompose: bool,
    edges: &[String],
    matrices: bool,
) -> Result<Value, Failure> {
    let mut v = m.to_json();
    let obj = v.as_object_mut().expect("module json is an object");
    if !matrices {
        if let Some(Value::Object(ops)) = obj.get_mut("operators") {
            for op in ops.values_mut() {
                op.as_object_mut().expect("operator entry").remove("matrix");
            }
        }
    }
    if let Some(n) = name {
        obj.insert("name".into(), json!(n));
    }
    if decompose {
        let edges: Vec<String> = if edges.is_empty() {
            m.operator_names()
        } else {
            edges.to_vec()
        };
        let d = edge_decomposition(m, &edges).map_err(domain)?;
        obj.insert("decomposition".into(), d.to_json());
    }
    Ok(v)
}

fn catalogue_report(verify: bool) -> Result<Value, Failure> {
    let entries: Vec<Value> = ENTRIES.iter().map(|e| e.to_json()).collect();
    if !verify {
        return Ok(json!({ "entries": entries }));
    }
    let reports = std::thread::scope(|s| {
        let handles: Vec<_> = ENTRIES
            .iter()
            .map(|e| s.spawn(move || catalogue::verify_entry(e)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread"))
            .collect::<Vec<_>>()
    });
    let ok = reports.iter().all(|r| r.ok());
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| json!({"name": r.name, "ok": r.ok(), "checks": r.checks}))
        .collect();
    let v = json!({ "entries": rows, "ok": ok });
    if ok {
        Ok(v)
    } else {
        Err(Failure::Check(v))
    }
}

/// Execute one parsed command.
pub fn execute(command: &Command) -> Result<Value, Failure> {
    match command {
        Command::Tait { input } => Ok(tait_report(load_input(input)?)),
        Command::Euler { input, dual } => {
            let Input::Diagram(d) = load_input(input)? else {
                return Err(Failure::Domain(
                    "euler needs a diagram, not a bare web".into(),
                ));
            };
            let r = if *dual {
                euler_char_dual(&d)
            } else {
                euler_char(&d)
            };
            Ok(json!({
                "chi": r.chi,
                "expansion_leaves": r.expansion_leaves,
                "crossings": d.crossing_count(),
            }))
        }
        Command::FoamEval { expr } => {
            let e = parse_foam(&expr.join(" ")).map_err(domain)?;
            Ok(json!({ "value": e.evaluate().map_err(domain)?.value }))
        }
        Command::Module {
            web,
            generators,
            relations,
            decompose,
            edges,
            matrices,
        } => {
            let (m, name) = match web {
                Some(w) => (known_module(w).map_err(domain)?, Some(w.as_str())),
                None if !generators.is_empty() => {
                    let g: Vec<&str> = generators.iter().map(String::as_str).collect();
                    let r: Vec<&str> = relations.iter().map(String::as_str).collect();
                    let p = Presentation::parse(&g, &r).map_err(domain)?;
                    (quotient_module(&p).map_err(domain)?, None)
                }
                None => {
                    return Err(Failure::Domain(
                        "module needs --web or --generators with --relation".into(),
                    ))
                }
            };
            module_report(&m, name, *decompose, edges, *matrices)
        }
        Command::Dims {
            kappa,
            bplus,
            b1,
            sigma2,
            chi,
            t,
        } => {
            let b = BifoldTopology {
                kappa: parse_q(kappa).map_err(domain)?,
                b_plus: *bplus,
                b_1: *b1,
                sigma_self: parse_q(sigma2).map_err(domain)?,
                chi_sigma: *chi,
                t: *t,
            };
            let r = dims_gradings::dim_mod6(&b).map_err(domain)?;
            let mut v = serde_json::to_value(r).expect("report serializes");
            v["expected_parity"] = json!(dims_gradings::expected_parity(b.sigma_self));
            Ok(v)
        }
        Command::AdhmVerify {
            rank,
            grid,
            samples,
            seed,
        } => {
            let r = adhm::verify(*rank, *grid, *samples, *seed).map_err(domain)?;
            let v = serde_json::to_value(&r).expect("report serializes");
            if r.pass {
                Ok(v)
            } else {
                Err(Failure::Check(v))
            }
        }
        Command::Catalogue { verify } => catalogue_report(*verify),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) if a.is_empty() => "-".into(),
        Value::Array(a) => a.iter().map(scalar).collect::<Vec<_>>().join(", "),
        Value::Object(_) => v.to_string(),
        _ => v.to_string(),
    }
}

fn is_row_list(v: &Value) -> bool {
    matches!(v, Value::Array(a) if !a.is_empty() && a.iter().all(Value::is_object))
}

fn flatten(
    prefix: &str,
    m: &Map<String, Value>,
    pairs: &mut Vec<(String, String)>,
    lists: &mut Vec<(String, Vec<Value>)>,
) {
    for (k, v) in m {
        let key = if prefix.is_empty() {
            k.clone()
        } else {
            format!("{prefix}.{k}")
        };
        match v {
            Value::Object(inner) => flatten(&key, inner, pairs, lists),
            Value::Array(a) if is_row_list(v) => lists.push((key, a.clone())),
            _ => pairs.push((key, scalar(v))),
        }
    }
}

fn columns(rows: &[Value]) -> String {
    let mut heads: Vec<String> = Vec::new();
    let mut cells: Vec<Vec<(String, String)>> = Vec::new();
    for r in rows {
        let mut pairs = Vec::new();
        let mut nested = Vec::new();
        flatten(
            "",
            r.as_object().expect("row object"),
            &mut pairs,
            &mut nested,
        );
        for (k, rows) in nested {
            pairs.push((k, format!("[{} rows]", rows.len())));
        }
        for (k, _) in &pairs {
            if !heads.contains(k) {
                heads.push(k.clone());
            }
        }
        cells.push(pairs);
    }
    let grid: Vec<Vec<String>> = cells
        .iter()
        .map(|row| {
            heads
                .iter()
                .map(|h| {
                    row.iter()
                        .find(|(k, _)| k == h)
                        .map(|(_, v)| v.clone())
                        .unwrap_or_default()
                })
                .collect()
        })
        .collect();
    let widths: Vec<usize> = heads
        .iter()
        .enumerate()
        .map(|(i, h)| {
            grid.iter()
                .map(|r| r[i].chars().count())
                .chain([h.chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let line = |vals: &[String]| -> String {
        vals.iter()
            .zip(&widths)
            .map(|(v, w)| format!("{v:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = vec![line(&heads)];
    out.extend(grid.iter().map(|r| line(r)));
    out.join("\n")
}

/// Aligned text view of a JSON report.
pub fn render_table(v: &Value) -> String {
    let mut pairs = Vec::new();
    let mut lists = Vec::new();
    match v {
        Value::Object(m) => flatten("", m, &mut pairs, &mut lists),
        _ => pairs.push(("value".into(), scalar(v))),
    }
    let width = pairs
        .iter()
        .map(|(k, _)| k.chars().count())
        .max()
        .unwrap_or(0);
    let mut sections: Vec<String> = Vec::new();
    if !pairs.is_empty() {
        sections.push(
            pairs
                .iter()
                .map(|(k, v)| format!("{k:<width$}  {v}"))
                .collect::<Vec<_>>()
                .join("\n"),
        );
    }
    for (k, rows) in lists {
        sections.push(format!("{k}:\n{}", columns(&rows)));
    }
    sections.join("\n\n")
}

fn emit(out: &mut dyn Write, format: Format, v: &Value) {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(v).expect("json values serialize"),
        Format::Table => render_table(v),
    };
    let _ = writeln!(out, "{text}");
}

/// Parse `args`, run, and write the report; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(v) => {
            emit(out, cli.format, &v);
            0
        }
        Err(Failure::Check(v)) => {
            emit(out, cli.format, &v);
            let _ = writeln!(err, "error: checks failed");
            1
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}
