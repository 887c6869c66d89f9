//! Command-line harness for the spwd library.
//!
//! File outputs are byte-deterministic for a given invocation; anything
//! time-dependent (wall clock) goes to stdout only. Exit codes: 0 success,
//! 2 config error, 3 parse error, 4 infeasible, 5 solver budget exhausted,
//! 6 path explosion.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spwd::decompose::{plan, DecomposeError, DecompositionPlan, SizeSpec};
use spwd::generate;
use spwd::model::{
    make_instance, DeadlineSpec, Machine, ModelError, Workflow, WspInstance,
};
use spwd::pipeline::{schedule_with, PipelineError, PipelineReport};
use spwd::solver::{
    build_model, build_model_for_workflow, export_lp, SolveError, SolverChoice,
    DEFAULT_NODE_BUDGET,
};
use spwd::ttsp::{
    map_to_ttsp, normalize_two_terminal, recognize_and_build_tree, TtspError, DEFAULT_PATH_CAP,
};
use spwd::wfcommons::{parse_machine_pool, parse_wfcommons, serialize_wfcommons};

#[derive(Parser)]
#[command(name = "spwd", version, about = "Series-parallel workflow decomposition scheduler")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a workflow (and optional machine pool) and report its structure.
    Validate(ValidateArgs),
    /// Decompose, solve, and merge; write the schedule and reports.
    Schedule(ScheduleArgs),
    /// Compare model sizes of the undivided instance and its subproblems.
    AnalyzeSize(AnalyzeSizeArgs),
    /// Report the path count before and after the series-parallel mapping.
    PathInflation(PathInflationArgs),
    /// Run the pipeline across subgraph-size percentages and tabulate costs.
    Sweep(SweepArgs),
    /// Write a deterministic seeded workflow file.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Workflow instance JSON (WfCommons layout).
    #[arg(long)]
    workflow: PathBuf,
    /// Machine pool JSON; defaults to the built-in five-machine pool.
    #[arg(long)]
    machines: Option<PathBuf>,
    /// Reference speed in GHz that runtimes are expressed against.
    #[arg(long, default_value_t = 1.0)]
    reference_speed: f64,
    /// Deadline in seconds, or "cpv" for the critical path value.
    #[arg(long, default_value = "cpv")]
    deadline: String,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    instance: InstanceArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SolverArg {
    Exact,
    Greedy,
    /// Write one LP file per subproblem instead of solving.
    LpExport,
}

#[derive(Args)]
struct ScheduleArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Max vertices per subproblem: absolute count or percentage like "25%".
    #[arg(long, default_value = "100%")]
    max_subgraph_size: String,
    #[arg(long, value_enum, default_value_t = SolverArg::Exact)]
    solver: SolverArg,
    /// Branch-and-bound node budget per subproblem.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Concurrent subproblem solves.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct AnalyzeSizeArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Comma-separated size limits, each absolute or a percentage.
    #[arg(long, default_value = "100%,75%,50%,25%,10%")]
    sizes: String,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct PathInflationArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Comma-separated percentages of the mapped vertex count.
    #[arg(long, default_value = "100,75,50,25,15,10,5,2,1")]
    sizes: String,
    #[arg(long, value_enum, default_value_t = SolverArg::Exact)]
    solver: SolverArg,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Shape {
    Chain,
    ForkJoin,
    Layered,
    RandomSp,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    shape: Shape,
    /// Task count (chain, random-sp).
    #[arg(long)]
    tasks: Option<usize>,
    /// Parallel width (fork-join) or tasks per layer (layered).
    #[arg(long)]
    width: Option<usize>,
    /// Layer count (layered).
    #[arg(long)]
    layers: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Path cap for random-sp growth.
    #[arg(long, default_value_t = 1_000_000)]
    max_paths: u64,
    /// Output workflow file.
    #[arg(long)]
    out: PathBuf,
}

/// Failure carrying its process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn config(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
    fn parse(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        match e {
            ModelError::NonPositiveDeadline(_) | ModelError::NonPositiveReferenceSpeed(_) => {
                Failure::config(e.to_string())
            }
            _ => Failure::parse(e.to_string()),
        }
    }
}

impl From<TtspError> for Failure {
    fn from(e: TtspError) -> Self {
        match e {
            TtspError::PathExplosion { .. } => Failure { code: 6, message: e.to_string() },
            TtspError::EmptyWorkflow => Failure::parse(e.to_string()),
            TtspError::NotSeriesParallel => {
                Failure { code: 1, message: format!("internal: {e}") }
            }
        }
    }
}

impl From<DecomposeError> for Failure {
    fn from(e: DecomposeError) -> Self {
        match e {
            DecomposeError::InvalidSubgraphSize(m) => Failure::config(m),
            DecomposeError::Ttsp(t) => t.into(),
        }
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Infeasible => Failure { code: 4, message: e.to_string() },
            SolveError::Timeout { .. } => Failure { code: 5, message: e.to_string() },
            SolveError::SpaceTooLarge { .. } => Failure { code: 5, message: e.to_string() },
            SolveError::PathExplosion(t) => t.into(),
        }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::Subproblem { ref source, .. } => {
                let code = Failure::from(clone_solve_class(source)).code;
                Failure { code, message: e.to_string() }
            }
            PipelineError::Merge(_) => Failure { code: 1, message: format!("internal: {e}") },
        }
    }
}

/// SolveError is not Clone; map through a class-preserving stand-in.
fn clone_solve_class(e: &SolveError) -> SolveError {
    match e {
        SolveError::Infeasible => SolveError::Infeasible,
        SolveError::Timeout { nodes } => SolveError::Timeout { nodes: *nodes },
        SolveError::SpaceTooLarge { assignments, cap } => {
            SolveError::SpaceTooLarge { assignments: *assignments, cap: *cap }
        }
        SolveError::PathExplosion(t) => SolveError::PathExplosion(match t {
            TtspError::PathExplosion { count, cap, saturated } => {
                TtspError::PathExplosion { count: *count, cap: *cap, saturated: *saturated }
            }
            TtspError::EmptyWorkflow => TtspError::EmptyWorkflow,
            TtspError::NotSeriesParallel => TtspError::NotSeriesParallel,
        }),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("SPWD_LOG")).init();
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Validate(a) => cmd_validate(a),
        Cmd::Schedule(a) => cmd_schedule(a),
        Cmd::AnalyzeSize(a) => cmd_analyze_size(a),
        Cmd::PathInflation(a) => cmd_path_inflation(a),
        Cmd::Sweep(a) => cmd_sweep(a),
        Cmd::Generate(a) => cmd_generate(a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, Failure> {
    std::fs::read(path)
        .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir)
            .map_err(|e| Failure::config(format!("cannot create {}: {e}", dir.display())))?;
    }
    std::fs::write(path, contents)
        .map_err(|e| Failure::config(format!("cannot write {}: {e}", path.display())))
}

fn parse_deadline(s: &str) -> Result<DeadlineSpec, Failure> {
    if s.eq_ignore_ascii_case("cpv") {
        return Ok(DeadlineSpec::CriticalPath);
    }
    let seconds: f64 = s
        .parse()
        .map_err(|_| Failure::config(format!("deadline must be seconds or \"cpv\", got {s:?}")))?;
    if seconds.is_nan() || seconds <= 0.0 {
        return Err(Failure::config(format!("deadline must be positive, got {seconds}")));
    }
    Ok(DeadlineSpec::Seconds(seconds))
}

fn parse_size(s: &str) -> Result<SizeSpec, Failure> {
    let spec = if let Some(pct) = s.strip_suffix('%') {
        let p: f64 = pct
            .parse()
            .map_err(|_| Failure::config(format!("bad percentage in size {s:?}")))?;
        SizeSpec::Percent(p)
    } else {
        let n: usize =
            s.parse().map_err(|_| Failure::config(format!("bad size {s:?}")))?;
        SizeSpec::Absolute(n)
    };
    match spec {
        SizeSpec::Percent(p) if !(p > 0.0 && p <= 100.0) => {
            Err(Failure::config(format!("percentage must be in (0, 100], got {p}")))
        }
        SizeSpec::Absolute(n) if n < 2 => {
            Err(Failure::config(format!("size must be at least 2 vertices, got {n}")))
        }
        _ => Ok(spec),
    }
}

fn load_instance(args: &InstanceArgs) -> Result<WspInstance, Failure> {
    let workflow = parse_wfcommons(&read_file(&args.workflow)?)?;
    let machines = match &args.machines {
        Some(path) => parse_machine_pool(&read_file(path)?)?,
        None => Machine::default_pool(),
    };
    let deadline = parse_deadline(&args.deadline)?;
    Ok(make_instance(workflow, machines, args.reference_speed, deadline)?)
}

fn cmd_validate(args: ValidateArgs) -> Result<ExitCode, Failure> {
    let bytes = read_file(&args.instance.workflow)?;
    let workflow = parse_wfcommons(&bytes)?;
    let report = workflow.validate();
    let (paths, saturated) = workflow.count_root_leaf_paths();
    println!("tasks: {}", report.task_count);
    println!("edges: {}", report.edge_count);
    let names = |ids: &[usize]| -> String {
        ids.iter().map(|&t| workflow.task(t).name.clone()).collect::<Vec<_>>().join(", ")
    };
    println!("roots: {}", names(&report.roots));
    println!("leaves: {}", names(&report.leaves));
    println!("root-to-leaf paths: {}{}", paths, if saturated { "+" } else { "" });
    let sp = normalize_two_terminal(&workflow)
        .ok()
        .and_then(|g| recognize_and_build_tree(&g).ok())
        .is_some();
    println!("series-parallel after normalization: {}", if sp { "yes" } else { "no" });
    if let Some(path) = &args.instance.machines {
        let pool = parse_machine_pool(&read_file(path)?)?;
        println!("machines: {}", pool.len());
    }
    for finding in &report.findings {
        println!("finding: {finding}");
    }
    if report.is_valid() {
        println!("ok");
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Failure::parse(format!("{} findings", report.findings.len())))
    }
}

fn solver_choice(arg: SolverArg) -> SolverChoice {
    match arg {
        SolverArg::Exact => SolverChoice::Exact,
        SolverArg::Greedy => SolverChoice::Greedy,
        SolverArg::LpExport => unreachable!("lp-export is handled before solving"),
    }
}

fn write_plan_artifacts(
    out: &Path,
    p: &DecompositionPlan,
    instance: &WspInstance,
) -> Result<(), Failure> {
    write_file(&out.join("plan.txt"), &p.text_report(instance))?;
    write_file(&out.join("plan.csv"), &p.csv_report())?;
    write_file(&out.join("tree.txt"), &p.tree.outline(&p.graph))?;
    write_file(&out.join("mapped.edges"), &p.graph.edge_list_text())?;
    Ok(())
}

fn schedule_csv(instance: &WspInstance, report: &PipelineReport) -> String {
    let mut s = String::from("task_name,machine_name,exec_time_s,cost\n");
    for (&t, &m) in &report.schedule.assignment {
        let _ = writeln!(
            s,
            "{},{},{},{}",
            instance.workflow.task(t).name,
            instance.machines[m].name,
            instance.time[t][m],
            instance.cost[t][m],
        );
    }
    let v = &report.merge.validation;
    let _ = writeln!(
        s,
        "# total_cost={} max_path_time_s={} deadline_s={} feasible={}",
        report.schedule.cost,
        instance.deadline - v.min_slack,
        instance.deadline,
        report.schedule.feasible,
    );
    s
}

fn cmd_schedule(args: ScheduleArgs) -> Result<ExitCode, Failure> {
    let started = Instant::now();
    let instance = load_instance(&args.instance)?;
    let size = parse_size(&args.max_subgraph_size)?;
    let p = plan(&instance, size)?;
    write_plan_artifacts(&args.out, &p, &instance)?;

    if args.solver == SolverArg::LpExport {
        for (i, sp) in p.subproblems.iter().enumerate() {
            let model = build_model(sp, &instance, DEFAULT_PATH_CAP)
                .map_err(|e| Failure::from(PipelineError::Subproblem { index: i, source: e }))?;
            write_file(&args.out.join(format!("sub_{i:03}.lp")), &export_lp(&model))?;
        }
        println!(
            "lp-export: {} subproblems, size limit {}, wall_time_s {}",
            p.subproblems.len(),
            p.size_limit,
            started.elapsed().as_secs_f64(),
        );
        return Ok(ExitCode::SUCCESS);
    }

    let choice = solver_choice(args.solver);
    let report =
        schedule_with(&instance, &p, choice, args.jobs, args.budget, DEFAULT_PATH_CAP)?;
    write_file(&args.out.join("schedule.csv"), &schedule_csv(&instance, &report))?;
    write_file(&args.out.join("merge_report.txt"), &report.merge.text_report(&instance))?;

    println!(
        "schedule: cost {} feasible {} subproblems {} collisions {} wall_time_s {}",
        report.schedule.cost,
        report.schedule.feasible,
        report.subreports.len(),
        report.merge.collisions.len(),
        started.elapsed().as_secs_f64(),
    );
    if choice == SolverChoice::Exact && !report.proven {
        eprintln!("warning: node budget exhausted; schedule is the best incumbent");
        return Ok(ExitCode::from(5));
    }
    if !report.schedule.feasible {
        return Err(Failure {
            code: 4,
            message: "merged schedule misses the deadline".into(),
        });
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_analyze_size(args: AnalyzeSizeArgs) -> Result<ExitCode, Failure> {
    let instance = load_instance(&args.instance)?;
    let sizes: Vec<(String, SizeSpec)> = args
        .sizes
        .split(',')
        .map(|tok| Ok((tok.trim().to_string(), parse_size(tok.trim())?)))
        .collect::<Result<_, Failure>>()?;
    let original = build_model_for_workflow(&instance, DEFAULT_PATH_CAP)?;
    let (orig_vars, orig_cons) = original.problem_size();

    let mut csv =
        String::from("s,orig_vars,orig_cons,max_sub_vars,max_sub_cons,ratio_vars,ratio_cons\n");
    for (token, size) in &sizes {
        let p = plan(&instance, *size)?;
        let mut max_vars = 0usize;
        let mut max_cons = 0usize;
        for (i, sp) in p.subproblems.iter().enumerate() {
            let model = build_model(sp, &instance, DEFAULT_PATH_CAP)
                .map_err(|e| Failure::from(PipelineError::Subproblem { index: i, source: e }))?;
            let (v, c) = model.problem_size();
            max_vars = max_vars.max(v);
            max_cons = max_cons.max(c);
        }
        let _ = writeln!(
            csv,
            "{token},{orig_vars},{orig_cons},{max_vars},{max_cons},{},{}",
            max_vars as f64 / orig_vars as f64,
            max_cons as f64 / orig_cons as f64,
        );
    }
    write_file(&args.out.join("analyze_size.csv"), &csv)?;
    print!("{csv}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_path_inflation(args: PathInflationArgs) -> Result<ExitCode, Failure> {
    let instance = load_instance(&args.instance)?;
    let normalized = normalize_two_terminal(&instance.workflow)?;
    let (before, before_sat) = normalized.dp_count_paths();
    let mapped = map_to_ttsp(&normalized);
    let (after, after_sat) = mapped.dp_count_paths();
    let saturated = before_sat || after_sat;
    let ratio = after as f64 / before as f64;
    let mut csv = String::from("paths_before,paths_after,ratio,saturated\n");
    let _ = writeln!(csv, "{before},{after},{ratio},{saturated}");
    write_file(&args.out.join("path_inflation.csv"), &csv)?;
    print!("{csv}");
    Ok(ExitCode::SUCCESS)
}

fn sweep_svg(rows: &[(f64, f64)]) -> String {
    // Cost ratio against s percentage, x descending from 100%.
    let w = 640.0;
    let h = 400.0;
    let margin = 60.0;
    let max_ratio = rows.iter().map(|r| r.1).fold(1.0f64, f64::max);
    let x = |pct: f64| margin + (100.0 - pct) / 100.0 * (w - 2.0 * margin);
    let y = |ratio: f64| h - margin - (ratio - 1.0) / (max_ratio - 1.0).max(0.05) * (h - 2.0 * margin);
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\">\n\
         <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n"
    );
    let _ = writeln!(
        s,
        "<line x1=\"{margin}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
        h - margin,
        w - margin,
        h - margin
    );
    let _ = writeln!(
        s,
        "<line x1=\"{margin}\" y1=\"{margin}\" x2=\"{margin}\" y2=\"{}\" stroke=\"black\"/>",
        h - margin
    );
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-size=\"14\">max subgraph size (%)</text>",
        w / 2.0 - 80.0,
        h - margin / 3.0
    );
    let _ = writeln!(
        s,
        "<text x=\"{}\" y=\"{}\" font-size=\"14\" transform=\"rotate(-90 16 {})\">cost ratio</text>",
        16.0,
        h / 2.0,
        h / 2.0
    );
    let points: Vec<String> =
        rows.iter().map(|&(pct, ratio)| format!("{},{}", x(pct), y(ratio))).collect();
    let _ = writeln!(
        s,
        "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"{}\"/>",
        points.join(" ")
    );
    for &(pct, ratio) in rows {
        let _ = writeln!(
            s,
            "<circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"steelblue\"/><text x=\"{}\" y=\"{}\" \
             font-size=\"10\">{pct}%</text>",
            x(pct),
            y(ratio),
            x(pct) - 8.0,
            y(ratio) - 8.0,
        );
    }
    s.push_str("</svg>\n");
    s
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode, Failure> {
    if args.solver == SolverArg::LpExport {
        return Err(Failure::config("sweep needs a solving solver: exact or greedy"));
    }
    let started = Instant::now();
    let instance = load_instance(&args.instance)?;
    let percentages: Vec<f64> = args
        .sizes
        .split(',')
        .map(|tok| {
            let p: f64 = tok
                .trim()
                .parse()
                .map_err(|_| Failure::config(format!("bad percentage {tok:?}")))?;
            if !(p > 0.0 && p <= 100.0) {
                return Err(Failure::config(format!("percentage must be in (0, 100], got {p}")));
            }
            Ok(p)
        })
        .collect::<Result<_, Failure>>()?;
    let choice = solver_choice(args.solver);

    let run = |pct: f64| -> Result<(DecompositionPlan, PipelineReport), Failure> {
        let p = plan(&instance, SizeSpec::Percent(pct))?;
        let report =
            schedule_with(&instance, &p, choice, args.jobs, args.budget, DEFAULT_PATH_CAP)?;
        Ok((p, report))
    };

    let (_, baseline) = run(100.0)?;
    let baseline_proven = choice != SolverChoice::Exact || baseline.proven;
    let mut csv =
        String::from("s_pct,s_abs,cost,cost_ratio,subproblems,feasible,baseline_proven\n");
    let mut chart = Vec::new();
    for &pct in &percentages {
        let (p, report) = if pct == 100.0 {
            (plan(&instance, SizeSpec::Percent(100.0))?, baseline.clone())
        } else {
            run(pct)?
        };
        let ratio =
            if pct == 100.0 { 1.0 } else { report.schedule.cost / baseline.schedule.cost };
        let _ = writeln!(
            csv,
            "{pct},{},{},{ratio},{},{},{baseline_proven}",
            p.size_limit,
            report.schedule.cost,
            report.subreports.len(),
            report.schedule.feasible,
        );
        chart.push((pct, ratio));
    }
    write_file(&args.out.join("sweep.csv"), &csv)?;
    write_file(&args.out.join("sweep.svg"), &sweep_svg(&chart))?;
    print!("{csv}");
    println!("sweep: {} sizes, wall_time_s {}", percentages.len(), started.elapsed().as_secs_f64());
    Ok(ExitCode::SUCCESS)
}

fn cmd_generate(args: GenerateArgs) -> Result<ExitCode, Failure> {
    let need = |opt: Option<usize>, what: &str| {
        opt.filter(|&v| v >= 1)
            .ok_or_else(|| Failure::config(format!("--{what} (>= 1) is required for this shape")))
    };
    let workflow: Workflow = match args.shape {
        Shape::Chain => generate::chain(need(args.tasks, "tasks")?, args.seed),
        Shape::ForkJoin => generate::fork_join(need(args.width, "width")?, args.seed),
        Shape::Layered => {
            let layers = need(args.layers, "layers")?;
            let width = need(args.width, "width")?;
            generate::layered(&vec![width; layers], args.seed)
        }
        Shape::RandomSp => {
            let tasks = need(args.tasks, "tasks")?;
            if tasks < 2 {
                return Err(Failure::config("--tasks must be at least 2 for random-sp"));
            }
            generate::random_sp_workflow(tasks, args.seed, args.max_paths)
        }
    };
    let name = match args.shape {
        Shape::Chain => "chain",
        Shape::ForkJoin => "fork-join",
        Shape::Layered => "layered",
        Shape::RandomSp => "random-sp",
    };
    write_file(&args.out, &serialize_wfcommons(&workflow, name))?;
    println!(
        "generated {} tasks, {} edges -> {}",
        workflow.task_count(),
        workflow.edges().len(),
        args.out.display()
    );
    Ok(ExitCode::SUCCESS)
}
