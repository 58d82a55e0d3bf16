//! Command-line front end for `combicurv`.
//!
//! [`run`] parses arguments, executes one subcommand and writes a report.
//! Human-readable text is the default; `--json` switches to a structured
//! report `{command, status, payload}` in which exact values are `"p/q"`
//! strings and angles are radians.

mod render;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use serde_json::{json, Value};

use combicurv::boundary::{degree2_check, double, gap_with_boundary_check};
use combicurv::curvature::{angle_defect, curvature_at, gauss_bonnet_check, total_curvature};
use combicurv::explorer::{
    component_sum_check, explore, explore_pattern, ExploreOptions, VerdictKind,
};
use combicurv::generators::{catalog, generate, spec};
use combicurv::patterns::{enumerate_positive, enumerate_zero, min_face_sum, Pattern};
use combicurv::tess::{FormatError, VertexStar};
use combicurv::{Tessellation, VertexStatus};

#[derive(Debug, Parser)]
#[command(
    name = "combicurv",
    version,
    about = "Exact combinatorial curvature of planar tessellations"
)]
struct Cli {
    /// Emit a structured JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the structural invariants of a patch file.
    Validate { file: PathBuf },
    /// Per-vertex curvature of a patch.
    Curvature { file: PathBuf },
    /// Total curvature of a patch or window.
    Total { file: PathBuf },
    /// Compare total curvature with the Euler characteristic of a closed patch.
    GaussBonnet { file: PathBuf },
    /// Tables of vertex patterns.
    #[command(group(ArgGroup::new("mode").required(true).args(["zero", "positive", "min_face_sum"])))]
    Patterns {
        /// Patterns of curvature exactly zero.
        #[arg(long)]
        zero: bool,
        /// Families of positively curved patterns.
        #[arg(long)]
        positive: bool,
        /// Largest face degree to materialize for `--positive`.
        #[arg(long, default_value_t = 1000, requires = "positive")]
        cap: usize,
        /// Smallest curvature sum over the vertices of a K-gon.
        #[arg(long, value_name = "K")]
        min_face_sum: Option<usize>,
    },
    /// Build a named example and write it as a patch file.
    Generate {
        name: String,
        /// Window radius; defaults to one more than the generator's minimum.
        #[arg(long)]
        radius: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the available generators.
    Catalog,
    /// Glue a patch with boundary to its mirror image.
    Double {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Curvature checks specific to patches with boundary.
    BoundaryCheck { file: PathBuf },
    /// Bounded search for the curvature gap around a positively curved seed.
    Explore {
        /// Face degrees around the seed vertex, e.g. "3,3,3,3,5".
        #[arg(long)]
        seed: String,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long, default_value_t = 200_000)]
        budget: usize,
        /// Treat the seed as one fixed cyclic order instead of every arrangement.
        #[arg(long)]
        cyclic: bool,
        /// Do not close branches on patterns ranked before the seed.
        #[arg(long)]
        no_reduce: bool,
    },
    /// Connected components of the curved-vertex set and their sums.
    Components { file: PathBuf },
    /// Draw a patch as SVG.
    Render {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Outcome class of a command; determines the exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violations,
    Inconclusive,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violations | Status::Inconclusive => 1,
            Status::Error => 2,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Violations => "violations",
            Status::Inconclusive => "inconclusive",
            Status::Error => "error",
        }
    }
}

struct Outcome {
    status: Status,
    payload: Value,
    text: String,
}

impl Outcome {
    fn new(status: Status, payload: Value, text: String) -> Outcome {
        Outcome { status, payload, text }
    }
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
struct Failure(String);

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let command: Vec<String> = args.iter().skip(1).cloned().collect();
    let outcome = dispatch(&cli.command)
        .unwrap_or_else(|Failure(msg)| Outcome::new(Status::Error, json!({ "message": msg }), msg));

    if cli.json {
        let report = json!({
            "command": command,
            "status": outcome.status.as_str(),
            "payload": outcome.payload,
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("json"));
    } else if outcome.status == Status::Error {
        let _ = writeln!(err, "error: {}", outcome.text);
    } else {
        let _ = write!(out, "{}", outcome.text);
    }
    outcome.status.exit_code()
}

fn read_patch(path: &Path) -> Result<Tessellation, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    Tessellation::from_json(&text).map_err(|e| match e {
        FormatError::Syntax { line, column, message } => {
            Failure(format!("{}:{line}:{column}: {message}", path.display()))
        }
        other => Failure(format!("{}: {other}", path.display())),
    })
}

fn write_or_inline(path: &Option<PathBuf>, contents: &str) -> Result<(), Failure> {
    if let Some(p) = path {
        fs::write(p, contents).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn parse_seed(s: &str) -> Result<Vec<usize>, Failure> {
    let degrees: Result<Vec<usize>, _> = s.split(',').map(|x| x.trim().parse::<usize>()).collect();
    match degrees {
        Ok(d) if d.len() >= 3 && d.iter().all(|&p| p >= 3) => Ok(d),
        _ => Err(Failure(format!(
            "invalid seed {s:?}: expected at least three comma-separated face degrees >= 3"
        ))),
    }
}

fn status_name(s: VertexStatus) -> &'static str {
    match s {
        VertexStatus::Interior => "interior",
        VertexStatus::Boundary => "boundary",
        VertexStatus::Frontier => "frontier",
    }
}

fn dispatch(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Validate { file } => validate(&read_patch(file)?),
        Command::Curvature { file } => curvature(&read_patch(file)?),
        Command::Total { file } => total(&read_patch(file)?),
        Command::GaussBonnet { file } => {
            let gb = gauss_bonnet_check(&read_patch(file)?)?;
            let status = if gb.equal { Status::Ok } else { Status::Violations };
            let text = format!(
                "phi {}\nchi {}\n{}\n",
                gb.phi,
                gb.chi,
                if gb.equal { "equal" } else { "NOT equal" }
            );
            Ok(Outcome::new(status, to_value(&gb), text))
        }
        Command::Patterns { zero, positive, cap, min_face_sum: k } => {
            if *zero {
                patterns_zero()
            } else if *positive {
                patterns_positive(*cap)
            } else {
                let k = k.expect("clap enforces one mode");
                let value = min_face_sum(k)?;
                Ok(Outcome::new(
                    Status::Ok,
                    json!({ "k": k, "min_face_sum": value.to_string() }),
                    format!("{value}\n"),
                ))
            }
        }
        Command::Generate { name, radius, out } => {
            let radius = match radius {
                Some(r) => *r,
                None => spec(name)?.min_radius + 1,
            };
            let t = generate(name, radius)?;
            let patch = t.to_json();
            write_or_inline(out, &patch)?;
            let summary = json!({
                "name": name,
                "radius": radius,
                "vertices": t.vertex_count(),
                "edges": t.edge_count(),
                "faces": t.face_count(),
            });
            let (payload, text) = match out {
                Some(p) => (
                    json!({ "summary": summary, "out": p.display().to_string() }),
                    format!(
                        "{name} radius {radius}: {} vertices, {} edges, {} faces -> {}\n",
                        t.vertex_count(),
                        t.edge_count(),
                        t.face_count(),
                        p.display()
                    ),
                ),
                None => (
                    json!({ "summary": summary, "patch": serde_json::from_str::<Value>(&patch)? }),
                    format!("{patch}\n"),
                ),
            };
            Ok(Outcome::new(Status::Ok, payload, text))
        }
        Command::Catalog => {
            let specs = catalog();
            let mut text = String::new();
            for s in &specs {
                text.push_str(&format!(
                    "{:<16} {:<14} total {:<6} components {:<3} min_radius {}  {}\n",
                    s.name,
                    to_value(&s.kind).as_str().unwrap_or_default(),
                    s.declared_total.to_string(),
                    s.declared_components,
                    s.min_radius,
                    s.description
                ));
            }
            Ok(Outcome::new(Status::Ok, to_value(&specs), text))
        }
        Command::Double { file, out } => {
            let t = read_patch(file)?;
            let d = double(&t)?;
            let before = total_curvature(&t)?.value;
            let after = total_curvature(&d.tess)?.value;
            let patch = d.tess.to_json();
            write_or_inline(out, &patch)?;
            let mut payload = json!({
                "boundary_vertices": d.boundary_vertices,
                "boundary_edges": d.boundary_edges,
                "vertices": d.tess.vertex_count(),
                "edges": d.tess.edge_count(),
                "faces": d.tess.face_count(),
                "total": before.to_string(),
                "doubled_total": after.to_string(),
            });
            let text = match out {
                Some(p) => {
                    payload["out"] = json!(p.display().to_string());
                    format!(
                        "glued {} vertices and {} edges; total {before} -> {after}; written to {}\n",
                        d.boundary_vertices,
                        d.boundary_edges,
                        p.display()
                    )
                }
                None => {
                    payload["patch"] = serde_json::from_str::<Value>(&patch)?;
                    format!("{patch}\n")
                }
            };
            Ok(Outcome::new(Status::Ok, payload, text))
        }
        Command::BoundaryCheck { file } => boundary_check(&read_patch(file)?),
        Command::Explore { seed, radius, budget, cyclic, no_reduce } => {
            let degrees = parse_seed(seed)?;
            let opts = ExploreOptions {
                max_radius: *radius,
                node_budget: *budget,
                reduce_earlier_cases: !no_reduce,
            };
            let verdict = if *cyclic {
                explore(&VertexStar::from_cycle(degrees), opts)?
            } else {
                explore_pattern(&Pattern::new(degrees), opts)?
            };
            let status = match verdict.kind {
                VerdictKind::GapCertified => Status::Ok,
                VerdictKind::Inconclusive => Status::Inconclusive,
            };
            let text = format!(
                "{:?} {}\nnodes {}  closed_by_sum {}  closed_by_reduction {}  pruned {}  frontier {}{}\n",
                verdict.kind,
                verdict.min_sum,
                verdict.nodes,
                verdict.closed_by_sum,
                verdict.closed_by_reduction,
                verdict.pruned,
                verdict.frontier_count,
                if verdict.budget_exhausted { "  (budget exhausted)" } else { "" }
            );
            Ok(Outcome::new(status, to_value(&verdict), text))
        }
        Command::Components { file } => {
            let check = component_sum_check(&read_patch(file)?)?;
            let status = if check.passes() { Status::Ok } else { Status::Violations };
            let mut text = format!("{} components\n", check.components.len());
            for (i, c) in check.components.iter().enumerate() {
                let pats: Vec<String> = c.patterns.iter().map(|p| p.to_string()).collect();
                text.push_str(&format!(
                    "{i}: sum {} vertices {:?} patterns {}{}\n",
                    c.sum,
                    c.vertices,
                    pats.join(" "),
                    if check.offending.contains(&i) { "  OFFENDING" } else { "" }
                ));
            }
            Ok(Outcome::new(status, to_value(&check), text))
        }
        Command::Render { file, out } => {
            let t = read_patch(file)?;
            let svg = render::svg(&t);
            write_or_inline(out, &svg)?;
            let (payload, text) = match out {
                Some(p) => (
                    json!({ "out": p.display().to_string(), "bytes": svg.len() }),
                    format!("wrote {}\n", p.display()),
                ),
                None => (json!({ "svg": svg }), svg),
            };
            Ok(Outcome::new(Status::Ok, payload, text))
        }
    }
}

fn validate(t: &Tessellation) -> Result<Outcome, Failure> {
    let report = t.validate();
    let status = if report.is_valid() { Status::Ok } else { Status::Violations };
    let mut text = format!(
        "{} vertices, {} edges, {} faces{}\n",
        t.vertex_count(),
        t.edge_count(),
        t.face_count(),
        if t.is_closed() {
            format!(", euler characteristic {}", t.euler_characteristic())
        } else {
            String::new()
        }
    );
    if report.is_valid() {
        text.push_str("valid\n");
    }
    for v in &report.violations {
        text.push_str(&format!("violation: {v}\n"));
    }
    let payload = json!({
        "closed": t.is_closed(),
        "vertices": t.vertex_count(),
        "edges": t.edge_count(),
        "faces": t.face_count(),
        "violations": to_value(&report.violations),
    });
    Ok(Outcome::new(status, payload, text))
}

fn curvature(t: &Tessellation) -> Result<Outcome, Failure> {
    let mut rows = Vec::new();
    let mut text = String::new();
    for v in t.vertex_ids() {
        let status = t.status(v);
        let star = VertexStar::of(t, v);
        let phi = curvature_at(t, v).ok();
        let angle = match status {
            VertexStatus::Interior => angle_defect(&star).ok().map(|a| a.radians),
            _ => None,
        };
        let faces: Vec<String> = star.faces.iter().map(|d| d.to_string()).collect();
        text.push_str(&format!(
            "{v} {} ({}) {}\n",
            status_name(status),
            faces.join(","),
            phi.map_or("-".to_string(), |p| p.to_string())
        ));
        rows.push(json!({
            "vertex": v,
            "status": status_name(status),
            "faces": star.faces,
            "phi": phi.map(|p| p.to_string()),
            "angle_defect": angle,
        }));
    }
    Ok(Outcome::new(Status::Ok, json!({ "vertices": rows }), text))
}

fn total(t: &Tessellation) -> Result<Outcome, Failure> {
    let tc = total_curvature(t)?;
    let mut text = format!("{}\n", tc.value);
    let status = if tc.stabilized {
        Status::Ok
    } else {
        text.push_str("warning: curved vertices touch the window frontier\n");
        Status::Inconclusive
    };
    Ok(Outcome::new(status, to_value(&tc), text))
}

fn patterns_zero() -> Result<Outcome, Failure> {
    let rows = enumerate_zero();
    let text: String = rows.iter().map(|p| format!("{p} {}\n", p.curvature())).collect();
    let payload: Vec<Value> = rows
        .iter()
        .map(|p| json!({ "pattern": p.degrees(), "curvature": p.curvature().to_string() }))
        .collect();
    Ok(Outcome::new(Status::Ok, json!({ "patterns": payload }), text))
}

fn patterns_positive(cap: usize) -> Result<Outcome, Failure> {
    let families = enumerate_positive(cap)?;
    let mut text = String::new();
    let mut payload = Vec::new();
    for f in &families {
        let members = f.members(cap).len();
        text.push_str(&format!(
            "{:<16} {:<12} {}\n",
            f.to_string(),
            f.range_label(),
            f.formula_label()
        ));
        payload.push(json!({
            "family": f.to_string(),
            "prefix": f.prefix,
            "k_min": f.k_min,
            "k_max": f.k_max,
            "range": f.range_label(),
            "formula": f.formula_label(),
            "offset": f.offset.to_string(),
            "members_up_to_cap": members,
        }));
    }
    Ok(Outcome::new(Status::Ok, json!({ "cap": cap, "families": payload }), text))
}

fn boundary_check(t: &Tessellation) -> Result<Outcome, Failure> {
    let degree2 = degree2_check(t)?;
    let gap = gap_with_boundary_check(t)?;
    let ok = degree2.passes() && gap.passes();
    let mut text = format!(
        "total {}  doubled {}  in gap set {}  doubling identity {}\n",
        gap.total, gap.doubled_total, gap.in_gap_set, gap.doubling_identity
    );
    text.push_str(&format!(
        "degree-2 boundary vertices: {}  contradictions: {:?}\n",
        degree2.entries.len(),
        degree2.contradictions()
    ));
    text.push_str(if ok { "pass\n" } else { "FAIL\n" });
    let payload = json!({ "degree2": to_value(&degree2), "gap": to_value(&gap) });
    Ok(Outcome::new(if ok { Status::Ok } else { Status::Violations }, payload, text))
}
