//! zdg: build zero-product graphs from semigroup data, analyze them, run
//! check corpora, and search for realizations and extremal instances.
//!
//! Exit codes: 0 on success (and PASS-only verification), 1 when any check
//! FAILs or a validated object is rejected, 2 on usage errors including
//! malformed input files.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;
use sha2::{Digest, Sha256};

use zdg_core::algebra::{gamma_ann, gamma_content, gamma_residual};
use zdg_core::caps::Caps;
use zdg_core::formats::{
    GraphFile, InstanceFile, ModuleFile, SemigroupFile, SemigroupRef, SemiringFile, SemiringRef,
};
use zdg_core::graph::{to_dot, Diameter, SimpleGraph};
use zdg_core::search::{
    search_extremal, search_realization, ExtremalPredicate, ImpossibleGrounds, RealizeOutcome,
    SearchBudget, SearchSpec,
};
use zdg_core::semigroup::{enumerate_semigroups, BoundedSemilattice, EnumBudget, SemigroupTable};
use zdg_core::verify::{run_corpus, CorpusConfig};

#[derive(Parser)]
#[command(
    name = "zdg",
    version,
    about = "Zero-product graphs of finite semigroups: build, analyze, verify, search"
)]
struct Cli {
    /// Worker threads for corpus evaluation; affects wall-clock only,
    /// never output content.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    /// JSON file overriding the default resource caps.
    #[arg(long, global = true, value_name = "FILE")]
    caps: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate, generate, or enumerate semigroup tables.
    #[command(subcommand)]
    Semigroup(SemigroupCmd),
    /// Build the zero-product graph of an instance file.
    #[command(subcommand)]
    Gamma(GammaCmd),
    /// Metric and core facts about a graph file.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Annihilator, content, and residual graphs of a module file.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Run a check corpus from a config file and write an NDJSON report.
    Verify(VerifyArgs),
    /// Search the catalog for an instance whose graph matches a target.
    Realize(RealizeArgs),
    /// Collect instances whose graphs are disconnected or stretch the
    /// diameter, with hypothesis flags attached.
    Extremal(ExtremalArgs),
    /// Re-emit a graph file as DOT or canonical JSON.
    Export(ExportArgs),
}

#[derive(Subcommand)]
enum SemigroupCmd {
    /// Check a semigroup file against the axioms.
    Validate { file: PathBuf },
    /// Write a catalog semigroup as JSON.
    Gen(GenArgs),
    /// Enumerate every table of one order.
    Enum(EnumArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    /// Zn under multiplication mod n.
    Zn,
    /// Total order of size n under min.
    Chain,
    /// Subsets of {1..n} under intersection.
    SubsetMeet,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long)]
    n: usize,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    order: usize,
    /// Directory receiving one JSON file per table.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Stop after this many search nodes and report partial results.
    #[arg(long, value_name = "N")]
    max_nodes: Option<u64>,
}

#[derive(Subcommand)]
enum GammaCmd {
    /// Build the graph of one instance.
    Build(GammaArgs),
}

#[derive(Args)]
struct GammaArgs {
    /// Instance JSON: {"semigroup": table or path, "domain": [...], "f": {...}}.
    instance: PathBuf,
    #[arg(long, value_name = "FILE")]
    dot: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Diameter, girth, connectivity, and core size of a graph file.
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Also list bridges and core edges.
    #[arg(long)]
    full: bool,
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Build one of the module-derived graphs.
    Gamma(ModuleGammaArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ModuleGraphKind {
    /// Annihilator graph over the ideal intersection semigroup.
    Ann,
    /// Content graph over the ideal product semigroup.
    Content,
    /// Residual graph of submodules over the ideal product semigroup.
    Residual,
}

#[derive(Args)]
struct ModuleGammaArgs {
    /// Module JSON: {"scalars": semiring or path, "order": .., "add": .., "action": ..}.
    module: PathBuf,
    #[arg(long, value_enum)]
    kind: ModuleGraphKind,
    #[arg(long, value_name = "FILE")]
    dot: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_name = "FILE")]
    config: PathBuf,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct RealizeArgs {
    /// Target graph JSON: {"vertices": [...], "edges": [[u,v], ...]}.
    #[arg(long, value_name = "FILE")]
    target: PathBuf,
    #[arg(long, default_value_t = 6)]
    max_order: usize,
    #[arg(long, default_value_t = 5)]
    max_domain: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Node budget; omitted means unbounded.
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
    /// Scan exhaustively instead of using the structural filters.
    #[arg(long)]
    no_filters: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExtremalArgs {
    /// "disconnected" or "diameter>=K".
    #[arg(long, value_parser = parse_predicate)]
    predicate: ExtremalPredicate,
    #[arg(long, default_value_t = 8)]
    max_order: usize,
    #[arg(long, default_value_t = 4)]
    max_domain: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_name = "N")]
    budget: Option<u64>,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    #[arg(long, value_enum)]
    format: ExportFormat,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn parse_predicate(s: &str) -> Result<ExtremalPredicate, String> {
    if s == "disconnected" {
        return Ok(ExtremalPredicate::Disconnected);
    }
    if let Some(rest) = s.strip_prefix("diameter>=") {
        let bound: u32 = rest
            .parse()
            .map_err(|_| format!("bad diameter bound {:?}", rest))?;
        return Ok(ExtremalPredicate::DiameterAtLeast { bound });
    }
    Err(format!(
        "unknown predicate {:?}; use \"disconnected\" or \"diameter>=K\"",
        s
    ))
}

/// Input digests and the seed, reported on stderr for every command so
/// outputs stay reproducible.
struct Meta {
    seed: Option<u64>,
    inputs: BTreeMap<String, String>,
}

impl Meta {
    fn new() -> Self {
        Meta {
            seed: None,
            inputs: BTreeMap::new(),
        }
    }

    fn load<T: DeserializeOwned>(&mut self, path: &Path) -> Result<T> {
        let bytes =
            fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
        self.inputs.insert(
            path.display().to_string(),
            format!("sha256:{:x}", Sha256::digest(&bytes)),
        );
        serde_json::from_slice(&bytes)
            .with_context(|| format!("{}: malformed input", path.display()))
    }

    fn emit(&self) {
        eprintln!(
            "{}",
            json!({
                "tool": "zdg",
                "version": env!("CARGO_PKG_VERSION"),
                "seed": self.seed,
                "inputs": self.inputs,
            })
        );
    }

    fn dot_header(&self) -> String {
        let mut out = format!("// zdg {}\n", env!("CARGO_PKG_VERSION"));
        if let Some(seed) = self.seed {
            out.push_str(&format!("// seed {}\n", seed));
        }
        for (path, digest) in &self.inputs {
            out.push_str(&format!("// input {} {}\n", path, digest));
        }
        out
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = u8::try_from(e.exit_code()).unwrap_or(2);
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("zdg: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("cannot configure worker threads")?;
    }
    let mut meta = Meta::new();
    let caps = match &cli.caps {
        Some(path) => meta.load::<Caps>(path)?,
        None => Caps::default(),
    };
    match cli.command {
        Command::Semigroup(cmd) => semigroup(cmd, caps, meta),
        Command::Gamma(GammaCmd::Build(args)) => gamma(args, meta),
        Command::Graph(GraphCmd::Analyze(args)) => analyze(args, meta),
        Command::Module(ModuleCmd::Gamma(args)) => module_gamma(args, caps, meta),
        Command::Verify(args) => verify(args, meta),
        Command::Realize(args) => realize(args, caps, meta),
        Command::Extremal(args) => extremal(args, caps, meta),
        Command::Export(args) => export(args, meta),
    }
}

fn write_out(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("output serializes");
    out.push('\n');
    out
}

fn resolve_semigroup(r: &SemigroupRef, base: &Path, meta: &mut Meta) -> Result<SemigroupFile> {
    match r {
        SemigroupRef::Inline(file) => Ok(file.clone()),
        SemigroupRef::Path(p) => meta.load(&base.join(p)),
    }
}

fn resolve_semiring(r: &SemiringRef, base: &Path, meta: &mut Meta) -> Result<SemiringFile> {
    match r {
        SemiringRef::Inline(file) => Ok(file.clone()),
        SemiringRef::Path(p) => meta.load(&base.join(p)),
    }
}

/// Shared tail for graph-producing commands: DOT and JSON files when
/// requested, JSON to stdout when neither is.
fn emit_graph(
    g: &SimpleGraph,
    dot: Option<&Path>,
    out: Option<&Path>,
    meta: &Meta,
) -> Result<()> {
    let file = GraphFile::from_graph(g);
    if let Some(path) = dot {
        write_out(Some(path), &format!("{}{}", meta.dot_header(), to_dot(g)))?;
    }
    if let Some(path) = out {
        write_out(Some(path), &to_pretty(&file))?;
    }
    if dot.is_none() && out.is_none() {
        write_out(None, &to_pretty(&file))?;
    }
    meta.emit();
    Ok(())
}

fn semigroup(cmd: SemigroupCmd, caps: Caps, mut meta: Meta) -> Result<u8> {
    match cmd {
        SemigroupCmd::Validate { file } => {
            let data: SemigroupFile = meta.load(&file)?;
            let verdict = match data.to_codomain() {
                Ok(codomain) => json!({
                    "ok": true,
                    "order": data.order,
                    "zero": data.zero,
                    "ordered": codomain.ordered().is_some(),
                }),
                Err(e) => json!({ "ok": false, "error": e.to_string() }),
            };
            let ok = verdict["ok"].as_bool().unwrap_or(false);
            println!("{}", verdict);
            meta.emit();
            Ok(if ok { 0 } else { 1 })
        }
        SemigroupCmd::Gen(args) => {
            let file = match args.kind {
                GenKind::Zn => {
                    SemigroupFile::from_table(&SemigroupTable::zn_multiplicative(args.n)?)
                }
                GenKind::Chain => {
                    SemigroupFile::from_ordered(&BoundedSemilattice::chain(args.n)?.ordered())
                }
                GenKind::SubsetMeet => SemigroupFile::from_ordered(
                    &BoundedSemilattice::subset_meet(args.n, &caps)?.ordered(),
                ),
            };
            write_out(args.out.as_deref(), &to_pretty(&file))?;
            meta.emit();
            Ok(0)
        }
        SemigroupCmd::Enum(args) => {
            let budget = EnumBudget {
                max_nodes: args.max_nodes.unwrap_or(u64::MAX),
            };
            let outcome = enumerate_semigroups(args.order, &budget, None, &caps)?;
            if let Some(dir) = &args.out {
                fs::create_dir_all(dir)
                    .with_context(|| format!("cannot create {}", dir.display()))?;
                for (i, table) in outcome.tables.iter().enumerate() {
                    let path = dir.join(format!("semigroup_{}_{:04}.json", args.order, i));
                    fs::write(&path, to_pretty(&SemigroupFile::from_table(table)))
                        .with_context(|| format!("cannot write {}", path.display()))?;
                }
            }
            println!(
                "{}",
                json!({
                    "order": args.order,
                    "count": outcome.tables.len(),
                    "nodes": outcome.nodes,
                    "exhausted": outcome.resume.is_some(),
                })
            );
            meta.emit();
            Ok(0)
        }
    }
}

fn gamma(args: GammaArgs, mut meta: Meta) -> Result<u8> {
    let file: InstanceFile = meta.load(&args.instance)?;
    let base = args
        .instance
        .parent()
        .map(Path::to_path_buf)
        .unwrap_or_default();
    let semigroup = resolve_semigroup(&file.semigroup, &base, &mut meta)?;
    let inst = file
        .to_instance_with(&semigroup)
        .with_context(|| format!("{}: invalid instance", args.instance.display()))?;
    let g = inst.build_graph();
    emit_graph(&g, args.dot.as_deref(), args.out.as_deref(), &meta)?;
    Ok(0)
}

#[derive(Serialize)]
struct AnalyzeReport {
    diameter: Option<u32>,
    girth: Option<u32>,
    connected: bool,
    core_edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    bridges: Option<Vec<(String, String)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    core: Option<Vec<(String, String)>>,
}

fn analyze(args: AnalyzeArgs, mut meta: Meta) -> Result<u8> {
    let file: GraphFile = meta.load(&args.input)?;
    let g = file
        .to_graph()
        .with_context(|| format!("{}: invalid graph", args.input.display()))?;
    let core = g.core();
    let report = AnalyzeReport {
        diameter: match g.diameter() {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite | Diameter::Undefined => None,
        },
        girth: g.girth(),
        connected: g.is_connected(),
        core_edges: core.edge_count(),
        bridges: args.full.then(|| g.bridges()),
        core: args.full.then(|| {
            let mut edges = core.edges();
            edges.sort();
            edges
        }),
    };
    println!("{}", serde_json::to_string(&report)?);
    meta.emit();
    Ok(0)
}

fn module_gamma(args: ModuleGammaArgs, caps: Caps, mut meta: Meta) -> Result<u8> {
    let file: ModuleFile = meta.load(&args.module)?;
    let base = args
        .module
        .parent()
        .map(Path::to_path_buf)
        .unwrap_or_default();
    let scalars = resolve_semiring(&file.scalars, &base, &mut meta)?.to_semiring()?;
    let module = file
        .to_module_with(scalars)
        .with_context(|| format!("{}: invalid module", args.module.display()))?;
    let g = match args.kind {
        ModuleGraphKind::Ann => gamma_ann(&module, &caps)?,
        ModuleGraphKind::Content => gamma_content(&module, &caps)?,
        ModuleGraphKind::Residual => gamma_residual(&module, &caps)?,
    };
    emit_graph(&g, args.dot.as_deref(), args.out.as_deref(), &meta)?;
    Ok(0)
}

fn verify(args: VerifyArgs, mut meta: Meta) -> Result<u8> {
    let config: CorpusConfig = meta.load(&args.config)?;
    meta.seed = Some(config.seed);
    let report = run_corpus(&config);
    write_out(args.out.as_deref(), &report.to_ndjson())?;
    meta.emit();
    Ok(if report.any_fail() { 1 } else { 0 })
}

fn realize(args: RealizeArgs, caps: Caps, mut meta: Meta) -> Result<u8> {
    let file: GraphFile = meta.load(&args.target)?;
    let target = file
        .to_graph()
        .with_context(|| format!("{}: invalid graph", args.target.display()))?;
    meta.seed = Some(args.seed);
    let mut spec = SearchSpec::new(args.max_order, args.max_domain, args.seed);
    spec.caps = caps;
    spec.structural_filters = !args.no_filters;
    if let Some(max_nodes) = args.budget {
        spec.budget = SearchBudget { max_nodes };
    }
    let outcome = search_realization(&target, &spec)?;
    let rendered = match outcome {
        RealizeOutcome::Witness(w) => {
            let instance = InstanceFile {
                semigroup: SemigroupRef::Inline(SemigroupFile::from_table(&w.semigroup)),
                domain: w.assignments.keys().cloned().collect(),
                f: w.assignments,
                order: None,
            };
            to_pretty(&instance)
        }
        RealizeOutcome::Impossible(grounds) => {
            let grounds = match grounds {
                ImpossibleGrounds::IsolatedVertex { vertex } => {
                    json!({ "kind": "isolated_vertex", "vertex": vertex })
                }
                ImpossibleGrounds::SpaceExhausted { cells, nodes } => {
                    json!({ "kind": "space_exhausted", "cells": cells, "nodes": nodes })
                }
            };
            to_pretty(&json!({ "result": "impossible", "grounds": grounds }))
        }
        RealizeOutcome::Exhausted(frontier) => {
            to_pretty(&json!({ "result": "exhausted", "frontier": frontier }))
        }
    };
    write_out(args.out.as_deref(), &rendered)?;
    meta.emit();
    Ok(0)
}

fn extremal(args: ExtremalArgs, caps: Caps, mut meta: Meta) -> Result<u8> {
    meta.seed = Some(args.seed);
    let mut spec = SearchSpec::new(args.max_order, args.max_domain, args.seed);
    spec.caps = caps;
    if let Some(max_nodes) = args.budget {
        spec.budget = SearchBudget { max_nodes };
    }
    let outcome = search_extremal(args.predicate, &spec)?;
    let hits: Vec<serde_json::Value> = outcome
        .hits
        .iter()
        .map(|hit| {
            let instance = InstanceFile {
                semigroup: SemigroupRef::Inline(SemigroupFile::from_table(&hit.semigroup)),
                domain: hit.assignments.keys().cloned().collect(),
                f: hit.assignments.clone(),
                order: None,
            };
            json!({
                "semigroup_name": hit.semigroup_name,
                "instance": instance,
                "connected": hit.connected,
                "diameter": hit.diameter,
                "closure_pass": hit.closure_pass,
                "interpolation_pass": hit.interpolation_pass,
            })
        })
        .collect();
    let rendered = to_pretty(&json!({
        "predicate": args.predicate,
        "complete": outcome.complete,
        "nodes": outcome.frontier.nodes,
        "cells_done": outcome.frontier.cells_done,
        "cells_total": outcome.frontier.cells_total,
        "hits": hits,
    }));
    write_out(args.out.as_deref(), &rendered)?;
    meta.emit();
    Ok(0)
}

fn export(args: ExportArgs, mut meta: Meta) -> Result<u8> {
    let file: GraphFile = meta.load(&args.input)?;
    let g = file
        .to_graph()
        .with_context(|| format!("{}: invalid graph", args.input.display()))?;
    let rendered = match args.format {
        ExportFormat::Dot => format!("{}{}", meta.dot_header(), to_dot(&g)),
        ExportFormat::Json => to_pretty(&GraphFile::from_graph(&g)),
    };
    write_out(args.out.as_deref(), &rendered)?;
    meta.emit();
    Ok(0)
}
