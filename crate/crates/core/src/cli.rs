//! The `cubepaths` command line: JSON in, JSON out.
//!
//! Exit codes: 0 on success, 1 when a verification run produced a failing
//! certificate, 2 on bad input or usage.

use std::ffi::OsString;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::boundary::{
    directed_edge_boundary, directed_vertex_boundary, edge_boundary, lower_shadow, surface,
    up_closure_h, vertex_boundary,
};
use crate::bounds::{evaluate, BoundKind, BoundValue};
use crate::compression::{compress_to_down_set, BoundaryMode, Compression};
use crate::cube::CubeSet;
use crate::error::{Error, Result};
use crate::flow::{edge_disjoint_paths, vertex_disjoint_paths};
use crate::json::{edges_json, fmt_real, parse_set, path_json, rational_decimal, rational_string, set_json};
use crate::verify::{run_plan, Strategy, SweepPlan, TheoremId};

/// File that receives failing certificates when `verify` has no `--out`.
pub const FAILURE_FILE: &str = "cubepaths-failures.jsonl";

#[derive(Parser, Debug)]
#[command(name = "cubepaths", version, about = "Hypercube boundaries, compressions, disjoint paths and bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size (and optionally members) of a boundary of a vertex set.
    Boundary {
        #[arg(long)]
        n: usize,
        /// JSON list of vertices: element lists or hex masks.
        #[arg(long)]
        set: String,
        #[arg(long, value_enum)]
        kind: BoundaryKind,
        #[arg(long)]
        directed: bool,
        /// Include the boundary itself in the output.
        #[arg(long)]
        list: bool,
    },
    /// Compress S into a down-set between A and the complement of B.
    Compress {
        /// JSON file with n, A, B, S and mode; `-` reads standard input.
        #[arg(long)]
        input: PathBuf,
    },
    /// Maximum disjoint path family from A to B with a cut witness.
    Paths {
        /// JSON file with n, A, B, mode and directed; `-` reads standard input.
        #[arg(long)]
        input: PathBuf,
    },
    /// Evaluate a bound function.
    Bounds {
        #[arg(value_enum)]
        function: BoundFunction,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        x: u128,
    },
    /// Check a theorem and write one certificate per instance as JSON lines.
    Verify {
        /// Theorem id, or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "random")]
        exhaustive: bool,
        /// Number of random instances.
        #[arg(long, value_name = "COUNT")]
        random: Option<usize>,
        #[arg(long, requires = "random", default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        fail_fast: bool,
        /// Certificate file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundaryKind {
    Edge,
    Vertex,
    Surface,
    Shadow,
    H,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundFunction {
    E,
    B,
    S,
}

#[derive(Deserialize, Debug)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    n: usize,
    #[serde(rename = "A")]
    a: Option<Value>,
    #[serde(rename = "B")]
    b: Option<Value>,
    #[serde(rename = "S")]
    s: Option<Value>,
    mode: Option<BoundaryMode>,
    directed: Option<bool>,
}

impl InstanceFile {
    fn set(&self, field: Option<&Value>, name: &str) -> Result<CubeSet> {
        let value = field.ok_or_else(|| Error::Input(format!("input is missing {name}")))?;
        parse_set(value, self.n)
    }
}

fn read_input(path: &PathBuf) -> Result<InstanceFile> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| Error::Input(format!("reading {}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("bad instance file: {e}")))
}

fn boundary(n: usize, set: &str, kind: BoundaryKind, directed: bool, list: bool) -> Result<Value> {
    let value: Value =
        serde_json::from_str(set).map_err(|e| Error::Input(format!("bad --set JSON: {e}")))?;
    let s = parse_set(&value, n)?;
    if directed && !matches!(kind, BoundaryKind::Edge | BoundaryKind::Vertex) {
        return Err(Error::Input(
            "--directed applies to edge and vertex boundaries only".into(),
        ));
    }
    let (size, members) = match kind {
        BoundaryKind::Edge => {
            let edges = if directed {
                directed_edge_boundary(&s)
            } else {
                edge_boundary(&s)
            };
            (edges.len(), edges_json(&edges))
        }
        BoundaryKind::Vertex => {
            let b = if directed {
                directed_vertex_boundary(&s)
            } else {
                vertex_boundary(&s)
            };
            (b.len(), set_json(&b))
        }
        BoundaryKind::Surface => {
            let b = surface(&s);
            (b.len(), set_json(&b))
        }
        BoundaryKind::Shadow => {
            let b = lower_shadow(&s)?;
            (b.len(), set_json(&b))
        }
        BoundaryKind::H => {
            let b = up_closure_h(&s);
            (b.len(), set_json(&b))
        }
    };
    let mut out = json!({ "size": size });
    if list {
        out["members"] = members;
    }
    Ok(out)
}

fn compress(input: &PathBuf) -> Result<Value> {
    let file = read_input(input)?;
    let a = file.set(file.a.as_ref(), "A")?;
    let b = file.set(file.b.as_ref(), "B")?;
    let s = file.set(file.s.as_ref(), "S")?;
    let mode = file.mode.unwrap_or(BoundaryMode::Edge);
    let (down, trace) = compress_to_down_set(&s, &a, &b, mode)?;
    let steps: Vec<Value> = trace
        .iter()
        .map(|t| {
            json!({
                "i": t.i,
                "choice": match t.choice { Compression::C => "C", Compression::D => "D" },
                "before": t.boundary_before,
                "after": t.boundary_after,
            })
        })
        .collect();
    Ok(json!({ "S'": set_json(&down), "trace": steps }))
}

fn paths(input: &PathBuf) -> Result<Value> {
    let file = read_input(input)?;
    let a = file.set(file.a.as_ref(), "A")?;
    let b = file.set(file.b.as_ref(), "B")?;
    let directed = file.directed.unwrap_or(false);
    let mode = file.mode.unwrap_or(BoundaryMode::Edge);
    let result = match mode {
        BoundaryMode::Edge => edge_disjoint_paths(&a, &b, directed)?,
        BoundaryMode::Vertex => vertex_disjoint_paths(&a, &b, directed)?,
    };
    let mut cut = json!({ "S": set_json(&result.cut.set), "size": result.cut.cut_size });
    if let Some(sep) = &result.cut.separator {
        cut["separator"] = set_json(sep);
    }
    Ok(json!({
        "count": result.count,
        "paths": result.family.paths.iter().map(|p| path_json(p)).collect::<Vec<_>>(),
        "cut": cut,
    }))
}

fn bounds(function: BoundFunction, n: u32, x: u128) -> Result<Value> {
    let kind = match function {
        BoundFunction::E => BoundKind::E,
        BoundFunction::B => BoundKind::B,
        BoundFunction::S => BoundKind::S,
    };
    Ok(match evaluate(kind, n, x)? {
        BoundValue::Real(v) => json!({ "value": fmt_real(v) }),
        BoundValue::Exact(r) => json!({ "value": rational_decimal(&r), "rational": rational_string(&r) }),
    })
}

struct VerifyArgs {
    theorem: String,
    n: usize,
    random: Option<usize>,
    seed: u64,
    fail_fast: bool,
    out: Option<PathBuf>,
}

fn open_append(path: &str) -> Result<BufWriter<File>> {
    let f = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::Input(format!("opening {path}: {e}")))?;
    Ok(BufWriter::new(f))
}

fn io_err(e: io::Error) -> Error {
    Error::Input(format!("writing certificates: {e}"))
}

/// Returns whether every certificate passed.
fn verify(args: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<bool> {
    let strategy = match args.random {
        Some(count) => Strategy::Random {
            count,
            seed: args.seed,
        },
        None => Strategy::Exhaustive,
    };
    let plans: Vec<SweepPlan> = if args.theorem == "all" {
        let mut plans = Vec::new();
        for &theorem in TheoremId::ALL {
            let plan = SweepPlan {
                theorem,
                n_range: args.n..=args.n,
                strategy,
                fail_fast: args.fail_fast,
            };
            match plan.validate() {
                Ok(()) => plans.push(plan),
                Err(e) => {
                    let _ = writeln!(stderr, "skipping {theorem}: {e}");
                }
            }
        }
        if plans.is_empty() {
            return Err(Error::Input(format!("no theorem accepts n = {} here", args.n)));
        }
        plans
    } else {
        let theorem: TheoremId = args.theorem.parse()?;
        let plan = SweepPlan {
            theorem,
            n_range: args.n..=args.n,
            strategy,
            fail_fast: args.fail_fast,
        };
        plan.validate()?;
        vec![plan]
    };

    let mut file = match &args.out {
        Some(path) => Some(BufWriter::new(
            File::create(path).map_err(|e| Error::Input(format!("creating {}: {e}", path.display())))?,
        )),
        None => None,
    };
    let mut failures: Option<BufWriter<File>> = None;
    let mut all_passed = true;
    for plan in &plans {
        let summary = run_plan(plan, |cert| {
            let line = cert.to_json_line();
            match file.as_mut() {
                Some(f) => writeln!(f, "{line}").map_err(io_err)?,
                None => writeln!(stdout, "{line}").map_err(io_err)?,
            }
            if !cert.passed() {
                if let Some(f) = file.as_mut() {
                    f.flush().map_err(io_err)?;
                } else {
                    if failures.is_none() {
                        failures = Some(open_append(FAILURE_FILE)?);
                    }
                    let f = failures.as_mut().expect("just opened");
                    writeln!(f, "{line}").map_err(io_err)?;
                    f.flush().map_err(io_err)?;
                }
            }
            Ok(())
        })?;
        let _ = writeln!(
            stderr,
            "{}: {} instances, {} passed, {} failed{}",
            plan.theorem,
            summary.total,
            summary.passed,
            summary.failed,
            if summary.stopped_early { " (stopped at first failure)" } else { "" }
        );
        if summary.failed > 0 {
            all_passed = false;
            if plan.fail_fast {
                break;
            }
        }
    }
    if let Some(f) = file.as_mut() {
        f.flush().map_err(io_err)?;
    }
    Ok(all_passed)
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return 2;
            }
            let _ = write!(stdout, "{text}");
            return 0;
        }
    };
    let result = match cli.command {
        Command::Boundary {
            n,
            set,
            kind,
            directed,
            list,
        } => boundary(n, &set, kind, directed, list),
        Command::Compress { input } => compress(&input),
        Command::Paths { input } => paths(&input),
        Command::Bounds { function, n, x } => bounds(function, n, x),
        Command::Verify {
            theorem,
            n,
            exhaustive: _,
            random,
            seed,
            fail_fast,
            out,
        } => {
            let args = VerifyArgs {
                theorem,
                n,
                random,
                seed,
                fail_fast,
                out,
            };
            match verify(args, stdout, stderr) {
                Ok(true) => return 0,
                Ok(false) => return 1,
                Err(e) => Err(e),
            }
        }
    };
    match result {
        Ok(value) => {
            let _ = writeln!(stdout, "{value}");
            0
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}
