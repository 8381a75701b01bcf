//! Batch harness over the cskit library: build and check C-sequences,
//! derive and export graph windows, run the coloring machinery, capture
//! checks, the poset procedures, and the seeded verification suites.
//!
//! Every command is a thin shell over a single library call; the resolved
//! configuration is echoed into each report. Exit codes: 0 on success or a
//! produced verdict, 1 when a verification failure was found, 2 on usage
//! or spec errors.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use cskit::club::{Club, ClubDesc};
use cskit::color::{
    adversary, captures_check, check_suitable, chromatic_number_capped, coloring_number,
    extend_suitable, neighborhood_witness, thread_coloring, validate_nbr_witness, CaptureOutcome,
    Certificate, Coloring, PaletteSpec,
};
use cskit::cseq::{check_bounded, check_coherence, CSeqSpec, CSequence, Relation};
use cskit::forcing::{
    extension_lemma, generic_sample, leq, play_game, project_star, stage_schedule, validate,
    Condition, ConditionSpec, SampleTasks,
};
use cskit::graph::{export_graph, EdgeRule, ExportFormat, GraphWindow};
use cskit::ord::{CardinalTag, Ordinal};
use cskit::rng::Rng;
use cskit::suite::{run_all, SuiteParams};
use cskit::window::Window;

#[derive(Parser)]
#[command(name = "cskit", version, about = "desk-scale C-sequence combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and check C-sequences.
    Cseq {
        #[command(subcommand)]
        cmd: CseqCmd,
    },
    /// Derive and export graph windows.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Chromatic and coloring machinery.
    Color {
        #[command(subcommand)]
        cmd: ColorCmd,
    },
    /// Capture check for a point against target sets.
    Capture(CaptureArgs),
    /// Poset procedures: extension, game, projection, sampling.
    Force {
        #[command(subcommand)]
        cmd: ForceCmd,
    },
    /// Seeded verification suites.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Args)]
struct Common {
    /// Write the JSON report here instead of stdout
    /// (CSKIT_OUT_DIR prefixes relative paths).
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON file with default values for this command's flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CseqCmd {
    /// Emit a spec document for a canonical or full sequence.
    Build {
        #[arg(long)]
        budget: Option<String>,
        #[arg(long, value_enum)]
        default: Option<DefaultKind>,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep a coherence relation over a window.
    Check {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long, value_enum)]
        relation: Option<RelationKind>,
        #[arg(long)]
        chi: Option<String>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
        /// Check boundedness against this cardinal instead of coherence.
        #[arg(long)]
        bounded: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DefaultKind {
    Canonical,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum RelationKind {
    Sq,
    #[value(alias = "sq_x")]
    SqX,
    #[value(alias = "sq_chi")]
    SqChi,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Build an exact induced window of the derived graph.
    Build {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        run: Option<usize>,
        /// Explicit comma-separated vertex list (overrides --window).
        #[arg(long)]
        vertices: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Export a window as DOT or adjacency JSON.
    Export {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        run: Option<usize>,
        #[arg(long)]
        vertices: Option<String>,
        #[arg(long, value_enum)]
        format: Option<FormatKind>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatKind {
    Dot,
    #[value(alias = "json_adj")]
    JsonAdj,
}

#[derive(Subcommand)]
enum ColorCmd {
    /// Exact chromatic number of a window.
    Chr {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        run: Option<usize>,
        #[arg(long)]
        vertices: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Coloring number (degeneracy + 1) with an ordering witness.
    Col {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        run: Option<usize>,
        #[arg(long)]
        vertices: Option<String>,
        /// Also search for a neighborhood witness at this mu.
        #[arg(long)]
        mu: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Verify suitability of a coloring on a window.
    Suitable {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        chi: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Extend a coloring across a window below a target point.
    Extend {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        run: Option<usize>,
        /// tail:K, finite:K, or explicit:BASE:STEP
        #[arg(long)]
        palette: Option<String>,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Replay the lower-bound procedure against a coloring.
    Adversary {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        theta: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Color a window along a thread club.
    Thread {
        #[arg(long)]
        spec: Option<PathBuf>,
        #[arg(long)]
        thread: Option<PathBuf>,
        #[arg(long)]
        window: Option<String>,
        #[arg(long)]
        run: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct CaptureArgs {
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long)]
    delta: Option<String>,
    /// JSON file: array of club descriptors.
    #[arg(long)]
    targets: Option<PathBuf>,
    #[arg(long)]
    theta: Option<u64>,
    #[arg(long)]
    search_budget: Option<u64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum ForceCmd {
    /// One step of the extension procedure.
    Extend {
        #[arg(long)]
        condition: Option<PathBuf>,
        /// JSON club descriptor for the target set.
        #[arg(long)]
        target: Option<PathBuf>,
        #[arg(long)]
        sigma: Option<u64>,
        #[arg(long)]
        budget: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Play the descending game against a seeded adversary.
    Game {
        #[arg(long)]
        stages: Option<usize>,
        #[arg(long)]
        budget: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// The projection construction between the two orders.
    Project {
        #[arg(long)]
        s0: Option<PathBuf>,
        #[arg(long)]
        s1: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Density-driven generic sampling with capture logging.
    Sample {
        #[arg(long)]
        budget: Option<String>,
        /// JSON file with {"targets": [...], "clubTasks": [...], "sigma": N}.
        #[arg(long)]
        tasks: Option<PathBuf>,
        #[arg(long)]
        rounds: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Run every verification suite.
    All {
        #[arg(long)]
        seed: Option<u64>,
        /// small trims the sweep sizes for a quick pass.
        #[arg(long)]
        sizes: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

// ---------------------------------------------------------------------------

struct Failure {
    code: u8,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

/// Config-file fallback for flags that were not given on the command line.
struct Config(serde_json::Value);

impl Config {
    fn load(common: &Common) -> Result<Config, Failure> {
        match &common.config {
            None => Ok(Config(json!({}))),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| usage(format!("cannot read config {}: {e}", p.display())))?;
                let v = serde_json::from_str(&text)
                    .map_err(|e| usage(format!("config {}: {e}", p.display())))?;
                Ok(Config(v))
            }
        }
    }

    fn str_or(&self, flag: Option<String>, key: &str) -> Option<String> {
        flag.or_else(|| self.0.get(key).and_then(|v| v.as_str()).map(String::from))
    }

    fn path_or(&self, flag: Option<PathBuf>, key: &str) -> Option<PathBuf> {
        flag.or_else(|| self.0.get(key).and_then(|v| v.as_str()).map(PathBuf::from))
    }

    fn u64_or(&self, flag: Option<u64>, key: &str) -> Option<u64> {
        flag.or_else(|| self.0.get(key).and_then(|v| v.as_u64()))
    }

    fn usize_or(&self, flag: Option<usize>, key: &str) -> Option<usize> {
        flag.or_else(|| self.0.get(key).and_then(|v| v.as_u64()).map(|v| v as usize))
    }
}

fn parse_ord(s: &str, what: &str) -> Result<Ordinal, Failure> {
    s.parse()
        .map_err(|e| usage(format!("invalid {what} ordinal {s:?}: {e}")))
}

fn parse_window(s: &str, cap: Option<usize>) -> Result<Window, Failure> {
    let w: Window = s
        .parse()
        .map_err(|e| usage(format!("invalid window {s:?}: {e}")))?;
    Ok(match cap {
        Some(c) => w.with_cap(c),
        None => w,
    })
}

fn parse_cardinal(s: &str) -> Result<CardinalTag, Failure> {
    s.parse().map_err(|e: String| usage(e))
}

fn load_cseq(path: &PathBuf) -> Result<CSequence, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read spec {}: {e}", path.display())))?;
    let spec = CSeqSpec::parse(&text).map_err(|e| usage(format!("spec error: {e}")))?;
    CSequence::from_spec(&spec).map_err(|e| usage(format!("spec error: {e}")))
}

fn load_json<T: serde::de::DeserializeOwned>(path: &PathBuf, what: &str) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {what} {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("{what} {}: {e}", path.display())))
}

fn parse_palette(s: &str) -> Result<PaletteSpec, Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["tail", k] => Ok(PaletteSpec::Tail(
            k.parse().map_err(|_| usage("palette tail:K needs a number"))?,
        )),
        ["finite", k] => Ok(PaletteSpec::Finite(
            k.parse().map_err(|_| usage("palette finite:K needs a number"))?,
        )),
        ["explicit", b, st] => Ok(PaletteSpec::ExplicitInfinite {
            base: b.parse().map_err(|_| usage("palette explicit:BASE:STEP"))?,
            step: st.parse().map_err(|_| usage("palette explicit:BASE:STEP"))?,
        }),
        _ => Err(usage(format!(
            "invalid palette {s:?}: use tail:K, finite:K, or explicit:BASE:STEP"
        ))),
    }
}

/// Emits the report and returns the exit code.
fn emit(common: &Common, report: serde_json::Value, failed: bool) -> Result<u8, Failure> {
    let text = serde_json::to_string_pretty(&report).expect("serializable report");
    match &common.out {
        None => println!("{text}"),
        Some(p) => {
            let path = if p.is_relative() {
                match std::env::var_os("CSKIT_OUT_DIR") {
                    Some(dir) => PathBuf::from(dir).join(p),
                    None => p.clone(),
                }
            } else {
                p.clone()
            };
            std::fs::write(&path, text.as_bytes())
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        }
    }
    Ok(if failed { 1 } else { 0 })
}

fn vertices_for(
    window: &Option<String>,
    run: Option<usize>,
    vertices: &Option<String>,
) -> Result<(Vec<Ordinal>, serde_json::Value), Failure> {
    if let Some(list) = vertices {
        let mut out = Vec::new();
        for part in list.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            out.push(parse_ord(part, "vertex")?);
        }
        return Ok((out, json!({ "vertices": list })));
    }
    let Some(w) = window else {
        return Err(usage("either --vertices or --window is required"));
    };
    let w = parse_window(w, None)?;
    let run = run.unwrap_or(4);
    let verts = w.vertex_lattice(run);
    Ok((
        verts,
        json!({ "window": w.to_string(), "run": run, "cap": w.cap }),
    ))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Cseq { cmd } => run_cseq(cmd),
        Command::Graph { cmd } => run_graph(cmd),
        Command::Color { cmd } => run_color(cmd),
        Command::Capture(args) => run_capture(args),
        Command::Force { cmd } => run_force(cmd),
        Command::Verify { cmd } => run_verify(cmd),
    }
}

fn run_cseq(cmd: CseqCmd) -> Result<u8, Failure> {
    match cmd {
        CseqCmd::Build { budget, default, common } => {
            let cfg = Config::load(&common)?;
            let budget = cfg
                .str_or(budget, "budget")
                .ok_or_else(|| usage("--budget is required"))?;
            let budget = parse_ord(&budget, "budget")?;
            let kind = default.unwrap_or(DefaultKind::Canonical);
            let vec = match kind {
                DefaultKind::Canonical => CSequence::canonical(budget.clone()),
                DefaultKind::Full => CSequence::full(budget.clone()),
            }
            .map_err(|e| usage(e.to_string()))?;
            // The spec document is the artifact; it carries its own config.
            let report = serde_json::to_value(vec.to_spec()).expect("serializable spec");
            emit(&common, report, false)
        }
        CseqCmd::Check {
            spec,
            relation,
            chi,
            window,
            cap,
            bounded,
            common,
        } => {
            let cfg = Config::load(&common)?;
            let spec_path = cfg
                .path_or(spec, "spec")
                .ok_or_else(|| usage("--spec is required"))?;
            let vec = load_cseq(&spec_path)?;
            let window = cfg
                .str_or(window, "window")
                .ok_or_else(|| usage("--window is required"))?;
            let w = parse_window(&window, cfg.usize_or(cap, "cap"))?;
            if let Some(mu) = cfg.str_or(bounded, "bounded") {
                let mu = parse_cardinal(&mu)?;
                let rep = check_bounded(&vec, &mu, &w);
                let failed = !rep.is_bounded();
                let report = json!({
                    "config": {
                        "spec": spec_path.display().to_string(),
                        "bounded": mu.to_string(),
                        "window": w.to_string(),
                        "cap": w.cap,
                    },
                    "report": rep,
                });
                return emit(&common, report, failed);
            }
            let chi_tag = match cfg.str_or(chi, "chi") {
                Some(c) => parse_cardinal(&c)?,
                None => CardinalTag::Aleph0,
            };
            let rel = match relation.unwrap_or(RelationKind::Sq) {
                RelationKind::Sq => Relation::Sq,
                RelationKind::SqX => Relation::SqX(chi_tag.clone()),
                RelationKind::SqChi => Relation::SqChi(chi_tag.clone()),
            };
            let rep = check_coherence(&vec, rel.clone(), &w);
            let failed = !rep.is_clean();
            let report = json!({
                "config": {
                    "spec": spec_path.display().to_string(),
                    "relation": rel,
                    "window": w.to_string(),
                    "cap": w.cap,
                },
                "report": rep,
            });
            emit(&common, report, failed)
        }
    }
}

fn run_graph(cmd: GraphCmd) -> Result<u8, Failure> {
    match cmd {
        GraphCmd::Build { spec, window, run, vertices, common } => {
            let cfg = Config::load(&common)?;
            let spec_path = cfg
                .path_or(spec, "spec")
                .ok_or_else(|| usage("--spec is required"))?;
            let vec = load_cseq(&spec_path)?;
            let (verts, vcfg) = vertices_for(
                &cfg.str_or(window, "window"),
                cfg.usize_or(run, "run"),
                &cfg.str_or(vertices, "vertices"),
            )?;
            let rule = EdgeRule::CSeq(vec);
            let g = GraphWindow::build(&rule, &verts).map_err(|e| usage(e.to_string()))?;
            let report = json!({
                "config": { "spec": spec_path.display().to_string(), "window": vcfg },
                "graph": g,
            });
            emit(&common, report, false)
        }
        GraphCmd::Export { spec, window, run, vertices, format, common } => {
            let cfg = Config::load(&common)?;
            let spec_path = cfg
                .path_or(spec, "spec")
                .ok_or_else(|| usage("--spec is required"))?;
            let vec = load_cseq(&spec_path)?;
            let (verts, _) = vertices_for(
                &cfg.str_or(window, "window"),
                cfg.usize_or(run, "run"),
                &cfg.str_or(vertices, "vertices"),
            )?;
            let rule = EdgeRule::CSeq(vec);
            let g = GraphWindow::build(&rule, &verts).map_err(|e| usage(e.to_string()))?;
            let fmt = match format.unwrap_or(FormatKind::Dot) {
                FormatKind::Dot => ExportFormat::Dot,
                FormatKind::JsonAdj => ExportFormat::JsonAdj,
            };
            let text = export_graph(&g, fmt);
            match &common.out {
                None => print!("{text}"),
                Some(p) => std::fs::write(p, text.as_bytes())
                    .map_err(|e| usage(format!("cannot write {}: {e}", p.display())))?,
            }
            Ok(0)
        }
    }
}

fn run_capture(args: CaptureArgs) -> Result<u8, Failure> {
    let cfg = Config::load(&args.common)?;
    let spec_path = cfg
        .path_or(args.spec, "spec")
        .ok_or_else(|| usage("--spec is required"))?;
    let vec = load_cseq(&spec_path)?;
    let delta = cfg
        .str_or(args.delta, "delta")
        .ok_or_else(|| usage("--delta is required"))?;
    let delta = parse_ord(&delta, "delta")?;
    let targets_path = cfg
        .path_or(args.targets, "targets")
        .ok_or_else(|| usage("--targets is required"))?;
    let descs: Vec<ClubDesc> = load_json(&targets_path, "targets")?;
    let mut targets = Vec::new();
    for d in &descs {
        targets.push(d.to_club().map_err(|e| usage(format!("target: {e}")))?);
    }
    let theta = cfg
        .u64_or(args.theta, "theta")
        .unwrap_or(targets.len() as u64);
    let budget = cfg
        .u64_or(args.search_budget, "searchBudget")
        .unwrap_or(256);
    let outcome = captures_check(&vec, &delta, &targets, theta, budget);
    let failed = matches!(outcome, CaptureOutcome::NotCaptured { .. });
    let report = json!({
        "config": {
            "spec": spec_path.display().to_string(),
            "delta": delta.to_string(),
            "theta": theta,
            "searchBudget": budget,
        },
        "outcome": outcome,
    });
    emit(&args.common, report, failed)
}

fn run_color(cmd: ColorCmd) -> Result<u8, Failure> {
    match cmd {
        ColorCmd::Chr { spec, window, run, vertices, cap, common } => {
            let cfg = Config::load(&common)?;
            let spec_path = cfg
                .path_or(spec, "spec")
                .ok_or_else(|| usage("--spec is required"))?;
            let vec = load_cseq(&spec_path)?;
            let (verts, vcfg) = vertices_for(
                &cfg.str_or(window, "window"),
                cfg.usize_or(run, "run"),
                &cfg.str_or(vertices, "vertices"),
            )?;
            let rule = EdgeRule::CSeq(vec);
            let g = GraphWindow::build(&rule, &verts).map_err(|e| usage(e.to_string()))?;
            let cap = cfg
                .usize_or(cap, "cap")
                .unwrap_or(cskit::color::CHROMATIC_CAP);
            let (k, colors) = chromatic_number_capped(&g, cap).map_err(|e| usage(e.to_string()))?;
            let coloring: BTreeMap<String, usize> = g
                .vertices
                .iter()
                .zip(&colors)
                .map(|(v, c)| (v.to_string(), *c))
                .collect();
            let report = json!({
                "config": { "spec": spec_path.display().to_string(), "window": vcfg, "cap": cap },
                "chromatic": k,
                "coloring": coloring,
            });
            emit(&common, report, false)
        }
        ColorCmd::Col { spec, window, run, vertices, mu, common } => {
            let cfg = Config::load(&common)?;
            let spec_path = cfg
                .path_or(spec, "spec")
                .ok_or_else(|| usage("--spec is required"))?;
            let vec = load_cseq(&spec_path)?;
            let (verts, vcfg) = vertices_for(
                &cfg.str_or(window, "window"),
                cfg.usize_or(run, "run"),
                &cfg.str_or(vertices, "vertices"),
            )?;
            let rule = EdgeRule::CSeq(vec);
            let g = GraphWindow::build(&rule, &verts).map_err(|e| usage(e.to_string()))?;
            let (k, witness) = coloring_number(&g);
            let mut report = json!({
                "config": { "spec": spec_path.display().to_string(), "window": vcfg },
                "coloring_number": k,
                "witness": witness,
            });
            if let Some(mu) = cfg.usize_or(mu, "mu") {
                let nw = neighborhood_witness(&g, mu);
                let sound = nw.as_ref().map(|c| validate_nbr_witness(&g, c));
                report["neighborhood_witness"] =
                    json!({ "mu": mu, "witness": nw, "revalidates": sound });
            }
            emit(&common, report, false)
        }
        ColorCmd::Suitable { spec, coloring, window, chi, common } => {
            let cfg = Config::load(&common)?;
            let spec_path = cfg
                .path_or(spec, "spec")
                .ok_or_else(|| usage("--spec is required"))?;
            let vec = load_cseq(&spec_path)?;
            let coloring_path = cfg
                .path_or(coloring, "coloring")
                .ok_or_else(|| usage("--coloring is required"))?;
            let c: Coloring = load_json(&coloring_path, "coloring")?;
            let window = cfg
                .str_or(window, "window")
                .ok_or_else(|| usage("--window is required"))?;
            let w = parse_window(&window, None)?;
            let chi = match cfg.str_or(chi, "chi") {
                Some(s) => parse_cardinal(&s)?,
                None => CardinalTag::Aleph0,
            };
            let cert = check_suitable(&vec, &c, &w, &chi).map_err(|e| usage(e.to_string()))?;
            let failed = cert != Certificate::Proper;
            let report = json!({
                "config": {
                    "spec": spec_path.display().to_string(),
                    "window": w.to_string(),
                    "chi": chi.to_string(),
                },
                "certificate": cert,
            });
            emit(&common, report, failed)
        }
        ColorCmd::Extend { spec, delta, window, run, palette, coloring, common } => {
            let cfg = Config::load(&common)?;
            let spec_path = cfg
                .path_or(spec, "spec")
                .ok_or_else(|| usage("--spec is required"))?;
            let vec = load_cseq(&spec_path)?;
            let delta = cfg
                .str_or(delta, "delta")
                .ok_or_else(|| usage("--delta is required"))?;
            let delta = parse_ord(&delta, "delta")?;
            let window = cfg
                .str_or(window, "window")
                .ok_or_else(|| usage("--window is required"))?;
            let w = parse_window(&window, None)?;
            let pts = w.vertex_lattice(cfg.usize_or(run, "run").unwrap_or(4));
            let palette = parse_palette(
                &cfg.str_or(palette, "palette")
                    .unwrap_or_else(|| "tail:0".into()),
            )?;
            let base = match cfg.path_or(coloring, "coloring") {
                Some(p) => load_json(&p, "coloring")?,
                None => Coloring::empty(palette.clone()),
            };
            let c = extend_suitable(&vec, &base, &delta, &pts, &palette)
                .map_err(|e| usage(e.to_string()))?;
            let report = json!({
                "config": {
                    "spec": spec_path.display().to_string(),
                    "delta": delta.to_string(),
                    "window": w.to_string(),
                    "palette": palette,
                },
                "coloring": c,
            });
            emit(&common, report, false)
        }
        ColorCmd::Adversary { spec, coloring, window, theta, common } => {
            let cfg = Config::load(&common)?;
            let spec_path = cfg
                .path_or(spec, "spec")
                .ok_or_else(|| usage("--spec is required"))?;
            let vec = load_cseq(&spec_path)?;
            let coloring_path = cfg
                .path_or(coloring, "coloring")
                .ok_or_else(|| usage("--coloring is required"))?;
            let c: Coloring = load_json(&coloring_path, "coloring")?;
            let window = cfg
                .str_or(window, "window")
                .ok_or_else(|| usage("--window is required"))?;
            let w = parse_window(&window, None)?;
            let theta = cfg.u64_or(theta, "theta").unwrap_or(2);
            let hit = adversary(&vec, &c, &w, theta).map_err(|e| usage(e.to_string()))?;
            let failed = hit.is_some();
            let report = json!({
                "config": {
                    "spec": spec_path.display().to_string(),
                    "window": w.to_string(),
                    "theta": theta,
                },
                "monochromatic_edge": hit,
            });
            emit(&common, report, failed)
        }
        ColorCmd::Thread { spec, thread, window, run, common } => {
            let cfg = Config::load(&common)?;
            let spec_path = cfg
                .path_or(spec, "spec")
                .ok_or_else(|| usage("--spec is required"))?;
            let vec = load_cseq(&spec_path)?;
            let thread_path = cfg
                .path_or(thread, "thread")
                .ok_or_else(|| usage("--thread is required"))?;
            let desc: ClubDesc = load_json(&thread_path, "thread club")?;
            let d = desc.to_club().map_err(|e| usage(e.to_string()))?;
            let window = cfg
                .str_or(window, "window")
                .ok_or_else(|| usage("--window is required"))?;
            let w = parse_window(&window, None)?;
            let pts = w.vertex_lattice(cfg.usize_or(run, "run").unwrap_or(4));
            let c = thread_coloring(&vec, &d, &w, &pts).map_err(|e| usage(e.to_string()))?;
            let report = json!({
                "config": { "spec": spec_path.display().to_string(), "window": w.to_string() },
                "coloring": c,
            });
            emit(&common, report, false)
        }
    }
}

fn run_force(cmd: ForceCmd) -> Result<u8, Failure> {
    match cmd {
        ForceCmd::Extend { condition, target, sigma, budget, common } => {
            let cfg = Config::load(&common)?;
            let p = match cfg.path_or(condition, "condition") {
                Some(path) => {
                    let spec: ConditionSpec = load_json(&path, "condition")?;
                    Condition::from_spec(&spec).map_err(|e| usage(e.to_string()))?
                }
                None => Condition::empty(CardinalTag::Aleph0),
            };
            let target_path = cfg
                .path_or(target, "target")
                .ok_or_else(|| usage("--target is required"))?;
            let desc: ClubDesc = load_json(&target_path, "target club")?;
            let a = desc.to_club().map_err(|e| usage(e.to_string()))?;
            let sigma = cfg.u64_or(sigma, "sigma").unwrap_or(1);
            let budget = cfg
                .str_or(budget, "budget")
                .ok_or_else(|| usage("--budget is required"))?;
            let budget = parse_ord(&budget, "budget")?;
            let q = extension_lemma(&p, &a, sigma, &budget).map_err(|e| usage(e.to_string()))?;
            let vr = validate(&q).map_err(|e| usage(e.to_string()))?;
            let star = leq(&q, &p, true).map_err(|e| usage(e.to_string()))?;
            let report = json!({
                "config": { "sigma": sigma, "budget": budget.to_string() },
                "condition": q.to_spec(),
                "valid": vr.is_valid(),
                "star_extends": star,
            });
            emit(&common, report, !vr.is_valid() || !star)
        }
        ForceCmd::Game { stages, budget, seed, common } => {
            let cfg = Config::load(&common)?;
            let stages = cfg.usize_or(stages, "stages").unwrap_or(12).min(40);
            let budget = cfg
                .str_or(budget, "budget")
                .unwrap_or_else(|| "w^(3)".into());
            let budget = parse_ord(&budget, "budget")?;
            let seed = cfg.u64_or(seed, "seed").unwrap_or(0);
            let schedule = stage_schedule(stages);
            let mut rng = Rng::new(seed);
            let transcript = play_game(&schedule, CardinalTag::Aleph0, &budget, |last, _idx| {
                let t = match rng.below(3) {
                    0 => Club::full_below(budget.clone()),
                    1 => Club::full_below(budget.clone())
                        .nacc()
                        .suffix(&Ordinal::one()),
                    _ => Club::arithmetic(
                        Ordinal::omega(),
                        Ordinal::omega(),
                        budget.count_limits_below(),
                    ),
                };
                extension_lemma(last, &t, 1 + rng.below(2), &budget)
            })
            .map_err(|e| usage(e.to_string()))?;
            let failed = matches!(
                transcript.outcome,
                cskit::forcing::GameOutcome::IiLoses { .. }
            );
            let report = json!({
                "config": { "stages": stages, "budget": budget.to_string(), "seed": seed },
                "transcript": transcript,
            });
            emit(&common, report, failed)
        }
        ForceCmd::Project { s0, s1, common } => {
            let cfg = Config::load(&common)?;
            let p0 = cfg.path_or(s0, "s0").ok_or_else(|| usage("--s0 is required"))?;
            let p1 = cfg.path_or(s1, "s1").ok_or_else(|| usage("--s1 is required"))?;
            let spec0: ConditionSpec = load_json(&p0, "condition")?;
            let spec1: ConditionSpec = load_json(&p1, "condition")?;
            let s0 = Condition::from_spec(&spec0).map_err(|e| usage(e.to_string()))?;
            let s1 = Condition::from_spec(&spec1).map_err(|e| usage(e.to_string()))?;
            let s2 = project_star(&s0, &s1).map_err(|e| usage(e.to_string()))?;
            let star = leq(&s2, &s0, true).map_err(|e| usage(e.to_string()))?;
            let plain = leq(&s2, &s1, false).map_err(|e| usage(e.to_string()))?;
            let report = json!({
                "config": { "s0": p0.display().to_string(), "s1": p1.display().to_string() },
                "condition": s2.to_spec(),
                "star_extends_s0": star,
                "extends_s1": plain,
            });
            emit(&common, report, !star || !plain)
        }
        ForceCmd::Sample { budget, tasks, rounds, common } => {
            let cfg = Config::load(&common)?;
            let budget = cfg
                .str_or(budget, "budget")
                .ok_or_else(|| usage("--budget is required"))?;
            let budget = parse_ord(&budget, "budget")?;
            let tasks_path = cfg
                .path_or(tasks, "tasks")
                .ok_or_else(|| usage("--tasks is required"))?;
            let tasks: SampleTasks = load_json(&tasks_path, "tasks")?;
            let rounds = cfg.usize_or(rounds, "rounds").unwrap_or(3);
            let mut targets = Vec::new();
            for d in &tasks.targets {
                targets.push(d.to_club().map_err(|e| usage(format!("target: {e}")))?);
            }
            let mut club_tasks = Vec::new();
            for d in &tasks.club_tasks {
                club_tasks.push(d.to_club().map_err(|e| usage(format!("club task: {e}")))?);
            }
            let (vec, log) = generic_sample(
                &budget,
                &targets,
                &club_tasks,
                tasks.sigma,
                rounds,
                CardinalTag::Aleph0,
            )
            .map_err(|e| usage(e.to_string()))?;
            let missed = log.is_empty()
                || log
                    .iter()
                    .any(|e| matches!(e.outcome, CaptureOutcome::NotCaptured { .. }));
            let failed = missed && !targets.is_empty();
            let report = json!({
                "config": { "budget": budget.to_string(), "sigma": tasks.sigma, "rounds": rounds },
                "sequence": vec.to_spec(),
                "capture_log": log,
            });
            emit(&common, report, failed)
        }
    }
}

fn run_verify(cmd: VerifyCmd) -> Result<u8, Failure> {
    match cmd {
        VerifyCmd::All { seed, sizes, common } => {
            let cfg = Config::load(&common)?;
            let seed = cfg.u64_or(seed, "seed").unwrap_or(0);
            let sizes = cfg.str_or(sizes, "sizes").unwrap_or_else(|| "full".into());
            let params = match sizes.as_str() {
                "small" => SuiteParams {
                    corpus_specs: 20,
                    chromatic_graphs: 40,
                    coloring_graphs: 20,
                    postproc_samples: 100,
                    extension_runs: 100,
                    projection_runs: 20,
                    games: 20,
                    generic_runs: 5,
                    suitable_runs: 20,
                    witness_windows: 10,
                },
                "full" => SuiteParams::default(),
                other => {
                    return Err(usage(format!(
                        "unknown sizes {other:?}: use small or full"
                    )))
                }
            };
            let reports = run_all(seed, &params);
            let failed = reports.iter().any(|r| !r.pass);
            let report = json!({
                "config": { "seed": seed, "sizes": sizes, "params": params },
                "suites": reports,
            });
            emit(&common, report, failed)
        }
    }
}
