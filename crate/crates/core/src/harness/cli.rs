//! Command-line front end. JSON reports go to stdout, human summaries to
//! stderr.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::json;

use super::brute::{brute_chromatic, DEFAULT_BRUTE_BOUND};
use super::format::{
    load_instance, load_instance_with, save_instance, Application, Instance, LoadOptions,
};
use super::generate::{generate, Family, GenParams};
use super::report::{ErrorReport, RunReport, Status};
use crate::applications::{rainbow_cover, strong_color, RainbowInstance, SimpleGraph};
use crate::edmonds::{chromatic_number, color_single, verify_coloring, Coloring, SelectorKind};
use crate::intersection::{color_intersection_from, greedy_baseline, IntersectionInstance};
use crate::matroid::{
    axiom_check, partition_chromatic, Counted, Matroid, MatroidOracle, DEFAULT_AXIOM_BOUND,
};

#[derive(Debug, Parser)]
#[command(
    name = "matroid-chroma",
    version,
    about = "Color matroids and their intersections"
)]
struct Cli {
    /// Only print the JSON report; skip the summary on stderr.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Color the first matroid of an instance on its own.
    Color {
        file: PathBuf,
        /// Palette size; defaults to the instance's alpha, then to χ.
        #[arg(long)]
        alpha: Option<usize>,
        #[arg(long, default_value_t = SelectorKind::Shortest)]
        selector: SelectorKind,
    },
    /// Chromatic number of every matroid, and of their intersection by brute force.
    Chi {
        file: PathBuf,
        /// Largest ground set for the brute-force search.
        #[arg(long, default_value_t = DEFAULT_BRUTE_BOUND)]
        max_n: usize,
    },
    /// Color an arbitrary matroid intersected with partition matroids.
    Intersect {
        file: PathBuf,
        #[arg(long)]
        alpha: Option<usize>,
        /// Ignore any coloring stored in the file.
        #[arg(long)]
        from_scratch: bool,
    },
    /// Rainbow cover of the instance's blocks.
    Rainbow { file: PathBuf },
    /// Color the instance's graph and matroid simultaneously.
    Strong { file: PathBuf },
    /// Check the coloring stored in the instance.
    Verify { file: PathBuf },
    /// Write a random instance.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        size: SizeArgs,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run many seeded instances and tabulate the results.
    Bench {
        #[arg(long)]
        family: Family,
        /// First seed; instances use `seed..seed + count`.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: u64,
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, default_value_t = DEFAULT_BRUTE_BOUND)]
        max_n: usize,
    },
    /// Exhaustively check the matroid axioms.
    Axioms {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_AXIOM_BOUND)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
struct SizeArgs {
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    partitions: usize,
    #[arg(long, default_value_t = 5)]
    vertices: usize,
    #[arg(long, default_value_t = 2)]
    blocks: usize,
    #[arg(long, default_value_t = 3)]
    max_degree: usize,
}

impl From<&SizeArgs> for GenParams {
    fn from(s: &SizeArgs) -> Self {
        GenParams {
            n: s.n,
            partitions: s.partitions,
            vertices: s.vertices,
            blocks: s.blocks,
            max_degree: s.max_degree,
        }
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let start = Instant::now();
    let name = command_name(&cli.command);
    let mut report = match execute(&cli.command, out) {
        Ok(Some(r)) => r,
        Ok(None) => return 0,
        Err(e) => RunReport::failed(name, e),
    };
    report.wall_time = start.elapsed();
    let _ = out.write_all(report.to_json().as_bytes());
    if !cli.json {
        let _ = writeln!(err, "{}", report.summary());
    }
    report.exit_code()
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Color { .. } => "color",
        Command::Chi { .. } => "chi",
        Command::Intersect { .. } => "intersect",
        Command::Rainbow { .. } => "rainbow",
        Command::Strong { .. } => "strong",
        Command::Verify { .. } => "verify",
        Command::Gen { .. } => "gen",
        Command::Bench { .. } => "bench",
        Command::Axioms { .. } => "axioms",
    }
}

type CmdResult = Result<Option<RunReport>, ErrorReport>;
type Report = Result<RunReport, ErrorReport>;

fn execute(c: &Command, out: &mut dyn Write) -> CmdResult {
    match c {
        Command::Color {
            file,
            alpha,
            selector,
        } => cmd_color(&load(file)?, *alpha, *selector).map(Some),
        Command::Chi { file, max_n } => cmd_chi(&load(file)?, *max_n).map(Some),
        Command::Intersect {
            file,
            alpha,
            from_scratch,
        } => cmd_intersect(&load(file)?, *alpha, *from_scratch).map(Some),
        Command::Rainbow { file } => cmd_rainbow(&load(file)?).map(Some),
        Command::Strong { file } => cmd_strong(&load(file)?).map(Some),
        Command::Verify { file } => cmd_verify(&load(file)?).map(Some),
        Command::Gen {
            family,
            seed,
            size,
            output,
        } => cmd_gen(*family, *seed, &size.into(), output.as_deref(), out),
        Command::Bench {
            family,
            seed,
            count,
            size,
            max_n,
        } => cmd_bench(*family, *seed, *count, &size.into(), *max_n).map(Some),
        Command::Axioms { file, max_n } => {
            let inst = load_instance_with(file, LoadOptions { allow_loops: true })
                .map_err(|e| ErrorReport::from(&e))?;
            cmd_axioms(&inst, *max_n).map(Some)
        }
    }
}

fn load(path: &Path) -> Result<Instance, ErrorReport> {
    load_instance(path).map_err(|e| ErrorReport::from(&e))
}

fn algo<T>(r: crate::Result<T>) -> Result<T, ErrorReport> {
    r.map_err(|e| ErrorReport::from(&e))
}

fn first_matroid(inst: &Instance) -> Result<&MatroidOracle, ErrorReport> {
    inst.matroids.first().ok_or_else(|| {
        let mut e = ErrorReport::new("validation", "no matroids given");
        e.field = Some("matroids".into());
        e
    })
}

fn cmd_color(inst: &Instance, alpha: Option<usize>, selector: SelectorKind) -> Report {
    let m = Counted::new(first_matroid(inst)?);
    let alpha = match alpha.or(inst.alpha) {
        Some(a) => a,
        None => algo(chromatic_number(&m))?,
    };
    let mut r = RunReport::new("color");
    r.palette = Some(alpha);
    match algo(color_single(&m, alpha, selector.selector().as_ref()))? {
        Some(c) => {
            let v = verify_coloring(&[&m], &c);
            r.colors_used = Some(c.colors_used());
            r.iterations = Some(c.len());
            if !v.is_feasible() {
                r.status = Status::Error;
                r.error = Some(ErrorReport::new("invariant", "produced a dependent class"));
            }
            r.matroids = Some(v.matroids);
            r.coloring = Some(c.as_slice().to_vec());
        }
        None => r.violation(format!("the matroid is not {alpha}-colorable")),
    }
    r.oracle_calls = Some(m.calls());
    r.details = Some(json!({ "selector": selector.to_string() }));
    Ok(r)
}

fn cmd_chi(inst: &Instance, max_n: usize) -> Report {
    let mut r = RunReport::new("chi");
    let mut chi = Vec::new();
    for m in &inst.matroids {
        chi.push(algo(chromatic_number(m))?);
    }
    r.chi = Some(chi);
    let refs = inst.matroid_refs();
    let brute = if inst.ground.n <= max_n {
        Some(algo(brute_chromatic(&refs, max_n))?)
    } else {
        None
    };
    r.details = Some(json!({ "intersection": brute }));
    Ok(r)
}

fn intersection_bound(inst: &IntersectionInstance) -> crate::Result<usize> {
    let chi1 = chromatic_number(&inst.m1)?;
    Ok(chi1.max(1) + inst.surplus())
}

fn cmd_intersect(inst: &Instance, alpha: Option<usize>, from_scratch: bool) -> Report {
    let mut ii = inst.intersection().map_err(|e| ErrorReport::from(&e))?;
    if alpha.is_some() {
        ii.alpha = alpha;
    }
    let m1 = Counted::new(&ii.m1);
    let initial = if from_scratch {
        None
    } else {
        inst.coloring.as_ref()
    };
    let out = algo(color_intersection_from(
        &m1,
        &ii.partitions,
        ii.alpha,
        initial,
        &mut |_| {},
    ))?;
    let mut r = RunReport::new("intersect");
    r.oracle_calls = Some(m1.calls());
    r.iterations = Some(out.iterations);
    r.palette = Some(out.palette);
    let bound = algo(intersection_bound(&ii))?;
    r.bound = Some(bound);
    let c = &out.coloring;
    r.colors_used = Some(c.colors_used());
    let refs = inst.matroid_refs();
    let v = verify_coloring(&refs, c);
    if !v.is_feasible() || !c.is_total() {
        r.status = Status::Error;
        r.error = Some(ErrorReport::new(
            "invariant",
            "result is not a feasible total coloring",
        ));
    } else if c.colors_used() > bound {
        r.violation(format!(
            "{} colors exceed the bound {bound}",
            c.colors_used()
        ));
    }
    r.matroids = Some(v.matroids);
    r.coloring = Some(c.as_slice().to_vec());
    let greedy = greedy_baseline(&ii.m1, &ii.partitions)
        .ok()
        .map(|g| g.colors_used());
    r.details = Some(json!({
        "alpha": out.alpha,
        "surplus": out.surplus,
        "greedy_colors": greedy,
    }));
    Ok(r)
}

fn cmd_rainbow(inst: &Instance) -> Report {
    let Some(Application::Rainbow(ri)) = &inst.application else {
        return Err(application_missing("rainbow"));
    };
    let cover = algo(rainbow_cover(ri))?;
    let mut r = RunReport::new("rainbow");
    r.colors_used = Some(cover.sets.len());
    r.bound = Some(cover.bound);
    if let Some(problem) = rainbow_problem(ri, &cover.sets) {
        r.status = Status::Error;
        r.error = Some(ErrorReport::new("invariant", problem));
    } else if cover.sets.len() > cover.bound {
        r.violation(format!(
            "{} sets exceed m + r - 1 = {}",
            cover.sets.len(),
            cover.bound
        ));
    }
    r.details = Some(json!({ "m": cover.m, "r": cover.r, "sets": cover.sets }));
    Ok(r)
}

/// First failure of covering, rainbow or independence, if any.
pub fn rainbow_problem(ri: &RainbowInstance, sets: &[Vec<usize>]) -> Option<String> {
    let mut all: Vec<usize> = sets.iter().flatten().copied().collect();
    all.sort_unstable();
    if all != ri.covered() {
        return Some("sets do not partition the union of the blocks".into());
    }
    for (j, s) in sets.iter().enumerate() {
        if !ri.matroid().independent(&s.iter().copied().collect()) {
            return Some(format!("set {j} is dependent"));
        }
        for (i, b) in ri.blocks().iter().enumerate() {
            if s.iter().filter(|x| b.contains(x)).count() > 1 {
                return Some(format!("set {j} meets block {i} twice"));
            }
        }
    }
    None
}

fn application_missing(kind: &str) -> ErrorReport {
    let mut e = ErrorReport::new("validation", format!("instance has no {kind} application"));
    e.field = Some("application".into());
    e
}

fn cmd_strong(inst: &Instance) -> Report {
    let Some(Application::Strong(g)) = &inst.application else {
        return Err(application_missing("strong"));
    };
    let m = Counted::new(first_matroid(inst)?);
    let s = algo(strong_color(g, &m))?;
    let mut r = RunReport::new("strong");
    r.oracle_calls = Some(m.calls());
    r.colors_used = Some(s.coloring.colors_used());
    r.palette = Some(s.coloring.num_colors());
    r.bound = Some(s.bound);
    let v = verify_coloring(&[m.inner()], &s.coloring);
    let graph_ok = graph_violation(g, &s.coloring).is_none();
    if !v.is_feasible() || !graph_ok || !s.coloring.is_total() {
        r.status = Status::Error;
        r.error = Some(ErrorReport::new(
            "invariant",
            "result is not a feasible total coloring",
        ));
    } else if s.coloring.colors_used() > s.bound {
        r.violation(format!(
            "{} colors exceed Δ + χ(M) + 1 = {}",
            s.coloring.colors_used(),
            s.bound
        ));
    }
    r.matroids = Some(v.matroids);
    r.coloring = Some(s.coloring.as_slice().to_vec());
    r.details = Some(json!({
        "max_degree": s.max_degree,
        "chi_m": s.chi_m,
        "matchings": s.matchings.len(),
    }));
    Ok(r)
}

/// First color class containing both ends of an edge.
fn graph_violation(g: &SimpleGraph, c: &Coloring) -> Option<(usize, (usize, usize))> {
    g.edges().iter().find_map(|&(u, v)| {
        (c.color(u) != 0 && c.color(u) == c.color(v)).then_some((c.color(u), (u, v)))
    })
}

fn cmd_verify(inst: &Instance) -> Report {
    let c = inst.coloring.as_ref().ok_or_else(|| {
        let mut e = ErrorReport::new("validation", "verify needs a coloring");
        e.field = Some("coloring".into());
        e
    })?;
    let mut r = RunReport::new("verify");
    let refs = inst.matroid_refs();
    let v = verify_coloring(&refs, c);
    r.colors_used = Some(c.colors_used());
    if let Some((i, color)) = v.first_violation() {
        let members = c.class(color).to_vec();
        r.violation(format!(
            "color {color} = {members:?} is dependent in matroids[{i}] ({})",
            inst.matroids[i].kind()
        ));
    } else if let Some(Application::Strong(g)) = &inst.application {
        if let Some((color, (a, b))) = graph_violation(g, c) {
            r.violation(format!(
                "color {color} contains both ends of edge ({a}, {b})"
            ));
        }
    }
    r.details = Some(json!({ "uncolored": v.uncolored }));
    r.matroids = Some(v.matroids);
    r.coloring = Some(c.as_slice().to_vec());
    Ok(r)
}

fn cmd_gen(
    family: Family,
    seed: u64,
    params: &GenParams,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let file = algo(generate(seed, family, params))?;
    match output {
        None => {
            out.write_all(file.to_json().as_bytes())
                .map_err(|e| ErrorReport::new("io", e.to_string()))?;
            Ok(None)
        }
        Some(path) => {
            save_instance(path, &file)
                .map_err(|e| ErrorReport::new("io", format!("{}: {e}", path.display())))?;
            let mut r = RunReport::new("gen");
            r.details = Some(json!({
                "family": family,
                "seed": seed,
                "n": file.ground.n,
                "path": path.display().to_string(),
            }));
            Ok(Some(r))
        }
    }
}

/// One bench row. Failures are recorded, not propagated.
fn bench_row(family: Family, seed: u64, params: &GenParams, max_n: usize) -> serde_json::Value {
    let run = || -> Result<serde_json::Value, String> {
        let file = generate(seed, family, params).map_err(|e| e.to_string())?;
        let inst = file
            .validate(LoadOptions::default())
            .map_err(|e| e.to_string())?;
        let n = inst.ground.n;
        let refs = inst.matroid_refs();
        match &inst.application {
            Some(Application::Rainbow(ri)) => {
                let cover = rainbow_cover(ri).map_err(|e| e.to_string())?;
                let problem = rainbow_problem(ri, &cover.sets);
                Ok(json!({
                    "n": n,
                    "colors_used": cover.sets.len(),
                    "bound": cover.bound,
                    "ok": problem.is_none() && cover.sets.len() <= cover.bound,
                }))
            }
            Some(Application::Strong(g)) => {
                let m = Counted::new(&inst.matroids[0]);
                let s = strong_color(g, &m).map_err(|e| e.to_string())?;
                let feasible = verify_coloring(&refs, &s.coloring).is_feasible()
                    && graph_violation(g, &s.coloring).is_none();
                Ok(json!({
                    "n": n,
                    "colors_used": s.coloring.colors_used(),
                    "bound": s.bound,
                    "oracle_calls": m.calls(),
                    "ok": feasible && s.coloring.colors_used() <= s.bound,
                }))
            }
            None => {
                let ii = inst.intersection().map_err(|e| e.to_string())?;
                let m1 = Counted::new(&ii.m1);
                let out = color_intersection_from(&m1, &ii.partitions, None, None, &mut |_| {})
                    .map_err(|e| e.to_string())?;
                let bound = out.alpha.max(1)
                    + ii.partitions
                        .iter()
                        .map(|p| partition_chromatic(p) - 1)
                        .sum::<usize>();
                let used = out.coloring.colors_used();
                let feasible = verify_coloring(&refs, &out.coloring).is_feasible();
                let brute = (n <= max_n)
                    .then(|| brute_chromatic(&refs, max_n))
                    .transpose()
                    .map_err(|e| e.to_string())?;
                let greedy = greedy_baseline(&ii.m1, &ii.partitions)
                    .ok()
                    .map(|g| g.colors_used());
                Ok(json!({
                    "n": n,
                    "colors_used": used,
                    "bound": bound,
                    "brute_chi": brute,
                    "greedy_colors": greedy,
                    "oracle_calls": m1.calls(),
                    "iterations": out.iterations,
                    "ok": feasible && out.coloring.is_total() && used <= bound
                        && brute.is_none_or(|b| b <= used),
                }))
            }
        }
    };
    match run() {
        Ok(mut row) => {
            row["seed"] = json!(seed);
            row
        }
        Err(e) => json!({ "seed": seed, "ok": false, "error": e }),
    }
}

fn cmd_bench(family: Family, seed: u64, count: u64, params: &GenParams, max_n: usize) -> Report {
    let rows: Vec<serde_json::Value> = (seed..seed + count)
        .into_par_iter()
        .map(|s| bench_row(family, s, params, max_n))
        .collect();
    let failures: Vec<u64> = rows
        .iter()
        .filter(|r| r["ok"] != json!(true))
        .filter_map(|r| r["seed"].as_u64())
        .collect();
    let mut r = RunReport::new("bench");
    if !failures.is_empty() {
        r.violation(format!(
            "{} of {count} instances failed: seeds {failures:?}",
            failures.len()
        ));
    }
    r.details = Some(json!({
        "family": family,
        "params": params,
        "instances": rows,
    }));
    Ok(r)
}

fn cmd_axioms(inst: &Instance, max_n: usize) -> Report {
    let mut reports = Vec::new();
    for m in &inst.matroids {
        reports.push(algo(axiom_check(m, max_n))?);
    }
    let mut r = RunReport::new("axioms");
    if let Some(i) = reports.iter().position(|a| !a.is_matroid()) {
        r.violation(format!("matroids[{i}] violates the matroid axioms"));
    }
    r.details = Some(json!({ "reports": reports }));
    Ok(r)
}
