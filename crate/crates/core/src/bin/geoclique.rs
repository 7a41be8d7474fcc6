//! Command-line surface: solve, gen, verify, bench, params.
//!
//! Exit codes: 0 ok, 1 parse/usage error, 2 refusal (budget caps,
//! infeasible constructions), 3 class-assumption violation in strict mode.

use clap::{Args, Parser, Subcommand, ValueEnum};
use geoclique::cliquefront::{self, CliqueMethod};
use geoclique::docs::{
    GraphDoc, InstanceDoc, InstanceMetadata, ParamsDoc, SolutionDocument, SOLUTION_FORMAT,
};
use geoclique::eptas::{self, EptasMode, EptasParams, LogBase};
use geoclique::error::Error;
use geoclique::generators::{self, EmbeddingConfig, GenSpec, InstanceKind};
use geoclique::geometry::{self, GeometricInstance};
use geoclique::graph::{read_dimacs, Graph};
use geoclique::oracle::{self, OracleBudget};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "geoclique", version, about = "Clique and independent-set solvers for geometric intersection graphs")]
struct Cli {
    /// Worker threads (default: hardware parallelism). Results do not
    /// depend on this value.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem on an instance file (JSON) or graph file (DIMACS).
    Solve(SolveArgs),
    /// Generate instances: random geometric or hardness embeddings.
    Gen(GenArgs),
    /// Verify a solution document or run an oracle claim.
    Verify(VerifyArgs),
    /// Run the benchmark grid and emit CSV rows.
    Bench(BenchArgs),
    /// Print the derived constants for given parameters.
    Params(ParamsArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    Clique,
    Mis,
    DiameterSubset,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Eptas,
    ExactUnitDisk,
    Bipartite,
    BruteForce,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Practical,
    Paper,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance (.json) or DIMACS graph path.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "clique")]
    problem: Problem,
    #[arg(long, value_enum, default_value = "eptas")]
    method: Method,
    #[arg(long, default_value_t = 0.2)]
    epsilon: f64,
    /// Independence-ratio promise for `mis --method eptas`; the geometric
    /// clique frontends pin their own value.
    #[arg(long, default_value_t = 0.5)]
    beta: f64,
    #[arg(long, default_value_t = 4)]
    vc_dim: u32,
    #[arg(long, default_value_t = 1)]
    iocp: u32,
    /// Defaults to $GEOCLIQUE_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "practical")]
    mode: ModeArg,
    /// Sample-size cap in practical mode (default: n/4, at least 1).
    #[arg(long)]
    s_cap: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    t_cap: usize,
    /// Abort (exit 3) on violated class assumptions instead of repairing.
    #[arg(long)]
    strict: bool,
    /// Run the unit-ball frontend even when radii differ.
    #[arg(long)]
    force: bool,
    /// Write the solution document here as well as to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    /// disks2d | balls3d | points2d | points3d | co2sub-r4 | co2sub-balls
    #[arg(long)]
    kind: String,
    #[arg(long, default_value_t = 20)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    r_min: f64,
    #[arg(long, default_value_t = 1.5)]
    r_max: f64,
    #[arg(long = "box", default_value_t = 10.0)]
    box_size: f64,
    #[arg(long, default_value_t = 2.0)]
    threshold: f64,
    /// Source graph (DIMACS) for the co2sub kinds.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Radius slack target for co2sub-balls.
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    solution: Option<PathBuf>,
    /// iocp-le-1 | vcdim-le-4 | embedding
    #[arg(long)]
    claim: Option<String>,
    /// Oracle vertex cap override.
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    /// CSV output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Tiny grid for smoke tests.
    #[arg(long)]
    quick: bool,
    #[arg(long, default_value_t = 0.2)]
    epsilon_mid: f64,
}

#[derive(Args)]
struct ParamsArgs {
    #[arg(long)]
    epsilon: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long, default_value_t = 4)]
    vc_dim: u32,
    #[arg(long, default_value_t = 1)]
    iocp: u32,
    #[arg(long, default_value_t = 1000)]
    s_cap: usize,
    #[arg(long, default_value_t = 1000)]
    t_cap: usize,
    #[arg(long, default_value_t = 1e-10)]
    failure_prob: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Bench(args) => cmd_bench(args),
        Command::Params(args) => cmd_params(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Json(_) | Error::Io(_) | Error::BadInstance(_) => 1,
        Error::Refusal(_)
        | Error::BudgetExceeded { .. }
        | Error::TimeBudgetExceeded(_)
        | Error::ConstructionInfeasible(_) => 2,
        Error::AssumptionViolated(_) => 3,
        _ => 1,
    }
}

fn default_seed(explicit: Option<u64>) -> u64 {
    explicit
        .or_else(|| {
            std::env::var("GEOCLIQUE_SEED")
                .ok()
                .and_then(|s| s.parse().ok())
        })
        .unwrap_or(0)
}

enum LoadedInput {
    Instance(GeometricInstance),
    Graph(Graph),
}

fn load_input(path: &Path) -> Result<LoadedInput, Error> {
    let text = std::fs::read_to_string(path)?;
    if text.trim_start().starts_with('{') {
        let doc = InstanceDoc::from_json(&text)?;
        let inst = doc.to_instance()?;
        Ok(LoadedInput::Instance(inst))
    } else {
        let g = read_dimacs(std::io::BufReader::new(text.as_bytes()))?;
        Ok(LoadedInput::Graph(g))
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Eptas => "eptas",
        Method::ExactUnitDisk => "exact-unit-disk",
        Method::Bipartite => "bipartite",
        Method::BruteForce => "brute-force",
    }
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode, Error> {
    let start = Instant::now();
    let seed = default_seed(args.seed);
    let input = load_input(&args.input)?;
    let n_input = match &input {
        LoadedInput::Instance(inst) => inst.len(),
        LoadedInput::Graph(g) => g.n(),
    };
    let params = EptasParams {
        epsilon: args.epsilon,
        beta: args.beta,
        vc_dim: args.vc_dim,
        iocp: args.iocp,
        mode: match args.mode {
            ModeArg::Practical => EptasMode::Practical,
            ModeArg::Paper => EptasMode::PaperFaithful,
        },
        failure_prob: 1e-10,
        seed,
        s_cap: args.s_cap.unwrap_or((n_input / 4).max(1)),
        t_cap: args.t_cap,
        log_base: LogBase::Natural,
        strict: args.strict,
    };

    match input {
        LoadedInput::Graph(g) => match args.problem {
            Problem::Mis => finish_mis_on_graph(&args, g, params, args.method, start),
            Problem::Clique if args.method == Method::BruteForce => {
                let set = oracle::brute_force_max_clique(&g, &OracleBudget::default())?;
                let valid = cliquefront::is_clique(&g, &set);
                let weight = g.set_weight(set.iter().copied());
                let doc = solution_doc(
                    "clique",
                    "brute-force",
                    set,
                    weight,
                    valid,
                    None,
                    None,
                    start,
                );
                emit_solution(&doc, args.out.as_deref())?;
                Ok(ExitCode::SUCCESS)
            }
            _ => Err(Error::BadParameter(
                "a bare graph supports --problem mis (or clique --method brute-force)".into(),
            )),
        },
        LoadedInput::Instance(inst) => solve_on_instance(&args, inst, params, start),
    }
}

fn solve_on_instance(
    args: &SolveArgs,
    inst: GeometricInstance,
    params: EptasParams,
    start: Instant,
) -> Result<ExitCode, Error> {
    let graph = geometry::intersection_graph(&inst)?.graph;
    match args.problem {
        Problem::Mis => return finish_mis_on_graph(args, graph, params, args.method, start),
        Problem::DiameterSubset => {
            let GeometricInstance::Points { dim: 3, points, .. } = &inst else {
                return Err(Error::BadInstance(
                    "diameter-subset needs a 3-d point instance".into(),
                ));
            };
            let sol = cliquefront::max_diameter_one_subset(points, &params)?;
            let chosen: Vec<_> = sol.vertices.iter().map(|&i| points[i].clone()).collect();
            let valid =
                sol.vertices.is_empty() || geometry::diameter(&chosen)? <= 1.0;
            let used = EptasParams {
                beta: cliquefront::BETA_UNIT_BALLS,
                vc_dim: cliquefront::VCDIM_GEOMETRIC,
                ..params
            };
            let doc = solution_doc(
                "diameter-subset",
                "eptas",
                sol.vertices,
                sol.weight,
                valid,
                Some(used),
                sol.diagnostics,
                start,
            );
            emit_solution(&doc, args.out.as_deref())?;
            return Ok(ExitCode::SUCCESS);
        }
        Problem::Clique => {}
    }

    let (sol, used_params): (cliquefront::CliqueSolution, Option<EptasParams>) = match args.method
    {
        Method::Eptas => {
            let sol = match inst.dim() {
                2 => cliquefront::max_clique_disks(&inst, &params)?,
                3 => cliquefront::max_clique_unit_balls(&inst, &params, args.force)?,
                d => return Err(Error::DimensionMismatch(d, 2)),
            };
            let beta = match sol.method {
                CliqueMethod::EptasDisks => cliquefront::BETA_DISKS,
                _ => cliquefront::BETA_UNIT_BALLS,
            };
            let used = EptasParams {
                beta,
                vc_dim: cliquefront::VCDIM_GEOMETRIC,
                ..params
            };
            (sol, Some(used))
        }
        Method::ExactUnitDisk => {
            let (points, r) = match &inst {
                GeometricInstance::Points {
                    dim: 2,
                    points,
                    threshold,
                    ..
                } => (points.clone(), threshold / 2.0),
                GeometricInstance::Balls { dim: 2, balls, .. } => {
                    if !inst.equal_radii() {
                        return Err(Error::UnequalRadii(inst.radius_spread()));
                    }
                    let r = balls.first().map(|b| b.radius).unwrap_or(1.0);
                    (balls.iter().map(|b| b.center.clone()).collect(), r)
                }
                _ => {
                    return Err(Error::BadInstance(
                        "exact-unit-disk needs a 2-d instance".into(),
                    ))
                }
            };
            (cliquefront::exact_unit_disk_clique(&points, r)?, None)
        }
        Method::BruteForce => {
            let set = oracle::brute_force_max_clique(&graph, &OracleBudget::default())?;
            let weight = graph.set_weight(set.iter().copied());
            let valid = cliquefront::is_clique(&graph, &set);
            let doc = solution_doc("clique", "brute-force", set, weight, valid, None, None, start);
            emit_solution(&doc, args.out.as_deref())?;
            return Ok(ExitCode::SUCCESS);
        }
        Method::Bipartite => {
            return Err(Error::BadParameter(
                "--method bipartite applies to --problem mis".into(),
            ))
        }
    };

    // independent validity check against the instance
    let valid = cliquefront::is_clique(&graph, &sol.vertices);
    let doc = solution_doc(
        "clique",
        method_name(args.method),
        sol.vertices,
        sol.weight,
        valid,
        used_params,
        sol.diagnostics,
        start,
    );
    emit_solution(&doc, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn finish_mis_on_graph(
    args: &SolveArgs,
    g: Graph,
    params: EptasParams,
    method: Method,
    start: Instant,
) -> Result<ExitCode, Error> {
    let (vertices, method_str, diagnostics, cp): (
        Vec<usize>,
        &'static str,
        Option<eptas::EptasDiagnostics>,
        Option<EptasParams>,
    ) = match method {
        Method::Bipartite => {
            let coloring = g
                .bipartite_2coloring()
                .ok_or_else(|| Error::AssumptionViolated("graph is not bipartite".into()))?;
            let set = if g.has_weights() {
                geoclique::bipartite::max_weight_independent_set_bipartite(&g, &coloring)?
            } else {
                geoclique::bipartite::max_independent_set_bipartite(&g, &coloring)?
            };
            (set, "bipartite", None, None)
        }
        Method::Eptas => {
            let out = eptas::run_eptas_iocp(&g, &params)?;
            (out.vertices, "eptas", Some(out.diagnostics), Some(params))
        }
        Method::BruteForce => {
            let set = oracle::brute_force_mis(&g, g.has_weights(), &OracleBudget::default())?;
            (set, "brute-force", None, None)
        }
        Method::ExactUnitDisk => {
            return Err(Error::BadParameter(
                "--method exact-unit-disk applies to --problem clique".into(),
            ))
        }
    };
    let valid = is_independent(&g, &vertices);
    let weight = g.set_weight(vertices.iter().copied());
    let doc = solution_doc("mis", method_str, vertices, weight, valid, cp, diagnostics, start);
    emit_solution(&doc, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn solution_doc(
    problem: &str,
    method: &str,
    vertices: Vec<usize>,
    weight: f64,
    valid: bool,
    params: Option<EptasParams>,
    diagnostics: Option<eptas::EptasDiagnostics>,
    start: Instant,
) -> SolutionDocument {
    SolutionDocument {
        format: SOLUTION_FORMAT.into(),
        version: 1,
        problem: problem.into(),
        method: method.into(),
        size: vertices.len(),
        weight,
        vertices,
        valid,
        params: params.as_ref().map(ParamsDoc::from),
        derived_constants: params
            .as_ref()
            .and_then(|p| eptas::compute_constants(p).ok()),
        diagnostics,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn is_independent(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

fn emit_solution(doc: &SolutionDocument, out: Option<&Path>) -> Result<(), Error> {
    let text = doc.to_canonical_json();
    print!("{text}");
    if let Some(path) = out {
        std::fs::write(path, &text)?;
    }
    Ok(())
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, Error> {
    let (doc, note) = match args.kind.as_str() {
        "disks2d" | "balls3d" | "points2d" | "points3d" => {
            let kind = match args.kind.as_str() {
                "disks2d" => InstanceKind::Disks2d,
                "balls3d" => InstanceKind::Balls3d,
                "points2d" => InstanceKind::Points2d,
                _ => InstanceKind::Points3d,
            };
            let spec = GenSpec {
                kind,
                n: args.n,
                r_min: args.r_min,
                r_max: args.r_max,
                box_size: args.box_size,
                threshold: args.threshold,
                seed: args.seed,
                margin: 1e-9,
            };
            let inst = generators::gen_random_instance(&spec)?;
            let mut doc = InstanceDoc::from_instance(&inst);
            doc.metadata = Some(InstanceMetadata {
                generator: Some(args.kind.clone()),
                seed: Some(args.seed),
                ..InstanceMetadata::default()
            });
            (doc, format!("generated {} objects", inst.len()))
        }
        "co2sub-r4" | "co2sub-balls" => {
            let path = args.graph.as_ref().ok_or_else(|| {
                Error::BadParameter("--graph is required for the co2sub kinds".into())
            })?;
            let text = std::fs::read_to_string(path)?;
            let g = read_dimacs(std::io::BufReader::new(text.as_bytes()))?;
            let cfg = EmbeddingConfig::default();
            let emb = if args.kind == "co2sub-r4" {
                generators::embed_co2subdivision_r4(&g, &cfg)?
            } else {
                generators::embed_co2subdivision_eps_balls(&g, args.eps, &cfg)?
            };
            if !emb.report.pass {
                return Err(Error::ConstructionInfeasible(format!(
                    "self-verification failed: {:?}",
                    emb.report
                )));
            }
            let mut doc = InstanceDoc::from_instance(&emb.instance);
            doc.metadata = Some(InstanceMetadata {
                generator: Some(args.kind.clone()),
                seed: None,
                source_graph: Some(GraphDoc {
                    n: g.n(),
                    edges: g.edges(),
                }),
                embedding: Some(emb.config),
                target_eps: (args.kind == "co2sub-balls").then_some(args.eps),
            });
            (
                doc,
                format!(
                    "embedded co-2-subdivision: {} objects, min clearance {:.3e}",
                    emb.instance.len(),
                    emb.report.min_clearance
                ),
            )
        }
        other => {
            return Err(Error::BadParameter(format!("unknown kind `{other}`")));
        }
    };
    let text = doc.to_canonical_json();
    match &args.out {
        Some(path) => std::fs::write(path, &text)?,
        None => print!("{text}"),
    }
    eprintln!("{note}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let text = std::fs::read_to_string(&args.instance)?;
    let doc = InstanceDoc::from_json(&text)?;
    let inst = doc.to_instance()?;
    let mut budget = OracleBudget::default();
    if let Some(cap) = args.max_n {
        budget.max_clique_n = cap;
        budget.max_iocp_n = cap;
        budget.max_vcdim_n = cap;
    }

    if let Some(sol_path) = &args.solution {
        let sol = SolutionDocument::from_json(&std::fs::read_to_string(sol_path)?)?;
        let g = geometry::intersection_graph(&inst)?.graph;
        let (ok, detail) = match sol.problem.as_str() {
            "mis" => check_pairs(&g, &sol.vertices, false),
            _ => check_pairs(&g, &sol.vertices, true),
        };
        if ok {
            println!("verify solution: PASS ({} vertices)", sol.size);
            return Ok(ExitCode::SUCCESS);
        }
        println!("verify solution: FAIL {detail}");
        return Ok(ExitCode::from(1));
    }

    match args.claim.as_deref() {
        Some("iocp-le-1") => {
            let g = geometry::intersection_graph(&inst)?.graph.complement();
            let chk = oracle::check_iocp_le_one(&g, &budget)?;
            if chk.holds {
                println!(
                    "claim iocp-le-1 on the complement: PASS ({} induced odd cycles checked)",
                    chk.induced_odd_cycles
                );
                Ok(ExitCode::SUCCESS)
            } else {
                println!("claim iocp-le-1: FAIL witness {:?}", chk.witness.unwrap());
                Ok(ExitCode::from(1))
            }
        }
        Some("vcdim-le-4") => {
            let g = geometry::intersection_graph(&inst)?.graph;
            let d = oracle::vc_dimension_neighborhood(&g, &budget)?;
            if d <= 4 {
                println!("claim vcdim-le-4: PASS (VC-dimension = {d})");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("claim vcdim-le-4: FAIL (VC-dimension = {d})");
                Ok(ExitCode::from(1))
            }
        }
        Some("embedding") => {
            let meta = doc.metadata.as_ref().and_then(|m| m.source_graph.as_ref());
            let Some(gd) = meta else {
                return Err(Error::BadInstance(
                    "instance carries no source graph metadata".into(),
                ));
            };
            let g = Graph::from_edge_list(gd.n, &gd.edges)?;
            let margin = doc
                .metadata
                .as_ref()
                .and_then(|m| m.embedding.as_ref())
                .map(|e| e.margin)
                .unwrap_or(1e-9);
            let report = generators::verify_embedding(&inst, &g, margin)?;
            if report.pass {
                println!(
                    "claim embedding: PASS (min clearance {:.3e})",
                    report.min_clearance
                );
                Ok(ExitCode::SUCCESS)
            } else {
                println!("claim embedding: FAIL {report:?}");
                Ok(ExitCode::from(1))
            }
        }
        Some(other) => Err(Error::BadParameter(format!("unknown claim `{other}`"))),
        None => Err(Error::BadParameter("pass --solution or --claim".into())),
    }
}

fn check_pairs(g: &Graph, vs: &[usize], want_adjacent: bool) -> (bool, String) {
    for &v in vs {
        if v >= g.n() {
            return (false, format!("vertex {v} out of range"));
        }
    }
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.has_edge(u, v) != want_adjacent {
                return (false, format!("offending pair ({u}, {v})"));
            }
        }
    }
    (true, String::new())
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, Error> {
    let sizes: &[usize] = if args.quick { &[8] } else { &[10, 14, 18] };
    let seeds: &[u64] = if args.quick { &[1] } else { &[1, 2, 3] };
    let epsilons: Vec<f64> = if args.quick {
        vec![args.epsilon_mid]
    } else {
        vec![0.1, args.epsilon_mid, 0.3]
    };
    let mut rows = Vec::new();
    rows.push("kind,n,m,method,epsilon,seed,size,opt,ratio,elapsed_ms".to_string());
    let mut ratios: std::collections::BTreeMap<String, Vec<f64>> = Default::default();

    for &n in sizes {
        for &seed in seeds {
            for kind in ["unit-disks", "disks2d", "points3d"] {
                let spec = match kind {
                    "unit-disks" => GenSpec {
                        kind: InstanceKind::Points2d,
                        n,
                        box_size: 6.0,
                        threshold: 2.0,
                        seed,
                        ..GenSpec::default()
                    },
                    "disks2d" => GenSpec {
                        kind: InstanceKind::Disks2d,
                        n,
                        r_min: 0.5,
                        r_max: 1.5,
                        box_size: 6.0,
                        seed,
                        ..GenSpec::default()
                    },
                    _ => GenSpec {
                        kind: InstanceKind::Points3d,
                        n,
                        box_size: 4.0,
                        threshold: 2.0,
                        seed,
                        ..GenSpec::default()
                    },
                };
                let inst = generators::gen_random_instance(&spec)?;
                let g = geometry::intersection_graph(&inst)?.graph;
                let opt = oracle::brute_force_max_clique(&g, &OracleBudget::default())?.len();

                for &eps in &epsilons {
                    let params = EptasParams {
                        epsilon: eps,
                        seed,
                        s_cap: (n / 4).max(1),
                        t_cap: 60,
                        ..EptasParams::default()
                    };
                    let t0 = Instant::now();
                    let sol = match spec.kind.dim() {
                        2 => cliquefront::max_clique_disks(&inst, &params)?,
                        _ => cliquefront::max_clique_unit_balls(&inst, &params, false)?,
                    };
                    let ms = t0.elapsed().as_millis();
                    let ratio = if opt > 0 {
                        sol.size as f64 / opt as f64
                    } else {
                        1.0
                    };
                    ratios
                        .entry(format!("eptas-{eps}"))
                        .or_default()
                        .push(ratio);
                    rows.push(format!(
                        "{kind},{n},{},eptas,{eps},{seed},{},{opt},{ratio:.4},{ms}",
                        g.m(),
                        sol.size
                    ));
                }
                if kind == "unit-disks" {
                    let GeometricInstance::Points { points, .. } = &inst else {
                        unreachable!()
                    };
                    let t0 = Instant::now();
                    let sol = cliquefront::exact_unit_disk_clique(points, 1.0)?;
                    let ms = t0.elapsed().as_millis();
                    let ratio = if opt > 0 {
                        sol.size as f64 / opt as f64
                    } else {
                        1.0
                    };
                    ratios
                        .entry("exact-unit-disk".into())
                        .or_default()
                        .push(ratio);
                    rows.push(format!(
                        "{kind},{n},{},exact-unit-disk,,{seed},{},{opt},{ratio:.4},{ms}",
                        g.m(),
                        sol.size
                    ));
                }
            }
        }
    }

    let csv = rows.join("\n") + "\n";
    match &args.out {
        Some(path) => std::fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    let mut summary = String::new();
    for (method, rs) in &ratios {
        let min = rs.iter().cloned().fold(f64::INFINITY, f64::min);
        let mean = rs.iter().sum::<f64>() / rs.len() as f64;
        summary += &format!(
            "{method}: runs {} min-ratio {min:.4} mean-ratio {mean:.4}\n",
            rs.len()
        );
    }
    eprint!("{summary}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_params(args: ParamsArgs) -> Result<ExitCode, Error> {
    let base = EptasParams {
        epsilon: args.epsilon,
        beta: args.beta,
        vc_dim: args.vc_dim,
        iocp: args.iocp,
        failure_prob: args.failure_prob,
        s_cap: args.s_cap,
        t_cap: args.t_cap,
        ..EptasParams::default()
    };
    let paper = eptas::compute_constants(&EptasParams {
        mode: EptasMode::PaperFaithful,
        ..base
    })?;
    let practical = eptas::compute_constants(&EptasParams {
        mode: EptasMode::Practical,
        ..base
    })?;
    let mut out = std::io::stdout().lock();
    writeln!(
        out,
        "constants for epsilon={} beta={} d={} i={}",
        args.epsilon, args.beta, args.vc_dim, args.iocp
    )?;
    writeln!(
        out,
        "{:<10} {:>22} {:>22}",
        "quantity", "paper-faithful", "practical"
    )?;
    writeln!(out, "{:<10} {:>22} {:>22}", "c", paper.c, practical.c)?;
    writeln!(out, "{:<10} {:>22} {:>22}", "delta", paper.delta, practical.delta)?;
    writeln!(
        out,
        "{:<10} {:>22} {:>22}",
        "s",
        fmt_count(paper.s),
        fmt_count(practical.s)
    )?;
    writeln!(
        out,
        "{:<10} {:>22} {:>22}",
        "t",
        fmt_count(paper.t),
        fmt_count(practical.t)
    )?;
    writeln!(out, "{:<10} {:>22} {:>22}", "z", paper.z, practical.z)?;
    Ok(ExitCode::SUCCESS)
}

fn fmt_count(v: usize) -> String {
    if v == usize::MAX {
        "overflow".into()
    } else {
        v.to_string()
    }
}
