//! Command-line surface for the broadcast-network toolkit: bound tables,
//! Cayley graph construction, broadcast simulation, exact solving, family
//! verification, experimental search, and the witness catalog.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cayley_broadcast as cb;
use cb::{
    BroadcastScheme, Catalog, CatalogRecord, GeneratorSet, GroupScope, GroupSpec, SchemePolicy,
    SearchSpace, SimOptions,
};

#[derive(Parser)]
#[command(
    name = "cbnet",
    about = "Broadcast networks from Cayley graphs of finite groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Moore-type upper-bound table M(d, t).
    Bounds(BoundsArgs),
    /// Build a Cayley graph and print its shape; optionally export it.
    Build(BuildArgs),
    /// Simulate a broadcast scheme round by round.
    Simulate(SimulateArgs),
    /// Exact minimum broadcast time of a small graph.
    Exact(ExactArgs),
    /// Construct and verify the closed-form families.
    Family(FamilyArgs),
    /// Seeded search for record broadcast networks.
    Search(SearchArgs),
    /// Inspect and maintain the witness catalog.
    Catalog(CatalogArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Pretty,
    Tsv,
}

#[derive(Args)]
struct BoundsArgs {
    /// Largest degree row (and default round column).
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
    max: u32,
    /// Largest round column; defaults to --max.
    #[arg(long)]
    tmax: Option<u32>,
    #[arg(long, value_enum, default_value_t = TableFormat::Pretty)]
    format: TableFormat,
    /// Leave cells below the diagonal blank in pretty output.
    #[arg(long)]
    omit_below_diagonal: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    EdgeList,
    Dot,
}

#[derive(Args)]
struct BuildArgs {
    /// Group spec, e.g. "dihedral(7)" or "semidirect(12,13,2)".
    #[arg(short = 'g', long = "group")]
    group: String,
    /// Comma-separated generator literals, e.g. "(1,0),(1,1),(1,3)".
    #[arg(short = 's', long = "generators")]
    generators: String,
    /// Export the graph in this format.
    #[arg(long, value_enum)]
    export: Option<ExportFormat>,
    /// Write the export here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    #[arg(short = 'g', long = "group")]
    group: String,
    #[arg(short = 's', long = "generators")]
    generators: String,
    /// "fixed", "perm: 2,1,3; ..." or "rounds: (1,0),(1,1),...".
    #[arg(long, default_value = "fixed")]
    scheme: String,
    /// Origin vertex index; defaults to the identity vertex.
    #[arg(long)]
    origin: Option<u32>,
    #[arg(long)]
    max_rounds: Option<u32>,
    /// Naive semantics: keep the receipt generator in call lists.
    #[arg(long)]
    keep_receipt_generator: bool,
}

#[derive(Args)]
struct ExactArgs {
    /// Named graph: petersen, cycle(n) or complete(n).
    #[arg(long, conflicts_with = "edges")]
    named: Option<String>,
    /// Edge-list file ("u v" per line).
    #[arg(long)]
    edges: Option<PathBuf>,
    /// Solve from this origin only (default: all origins).
    #[arg(long)]
    origin: Option<u32>,
    /// Vertex cap override; memory is Theta(2^n) in the worst case.
    #[arg(long, default_value_t = cb::DEFAULT_VERTEX_CAP)]
    cap: usize,
    /// Print a witness schedule.
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[command(subcommand)]
    action: FamilyAction,
}

#[derive(Subcommand)]
enum FamilyAction {
    /// Rebuild a family member and replay its scheme.
    Verify {
        #[arg(long)]
        delta: u32,
        #[arg(long, value_enum, default_value_t = FamilyKind::Dihedral)]
        kind: FamilyKind,
    },
    /// Print the witness record line for a family member.
    Show {
        #[arg(long)]
        delta: u32,
        #[arg(long, value_enum, default_value_t = FamilyKind::Dihedral)]
        kind: FamilyKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyKind {
    Dihedral,
    Hypercube,
}

#[derive(Args)]
struct SearchArgs {
    /// Group family to enumerate: dihedral, cyclic, z2pow, semidirect.
    #[arg(long, conflicts_with = "group")]
    family: Option<String>,
    /// Search one group instead of a family.
    #[arg(long)]
    group: Option<String>,
    /// Fix the generator set (requires --group): search schemes only.
    #[arg(long, requires = "group")]
    generators: Option<String>,
    #[arg(long)]
    delta: u32,
    #[arg(long)]
    time: u32,
    /// Candidate (scheme evaluation) budget.
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker threads; 0 uses the default pool.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Group order cap (also capped by the Moore bound).
    #[arg(long, default_value_t = u64::MAX)]
    max_order: u64,
    /// Try all fixed-order generator orderings up to this many per set.
    #[arg(long, default_value_t = 720)]
    orderings: u64,
    /// Receipt-permutation schemes sampled per generator set.
    #[arg(long, default_value_t = 0)]
    perm_samples: u64,
    /// Insert found records into this catalog.
    #[arg(long)]
    update: Option<PathBuf>,
    /// Emit found records as JSON lines instead of record lines.
    #[arg(long)]
    json_lines: bool,
}

#[derive(Args)]
struct CatalogArgs {
    #[command(subcommand)]
    action: CatalogAction,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogFormat {
    Pretty,
    Tsv,
    JsonLines,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Render the catalog as a degree-by-time order matrix.
    Show {
        #[arg(long)]
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = CatalogFormat::Pretty)]
        format: CatalogFormat,
    },
    /// Replay every record; report pass/fail per record.
    Verify {
        #[arg(long)]
        path: PathBuf,
    },
    /// Seed with the closed-form families and product derivations.
    Seed {
        #[arg(long)]
        path: PathBuf,
        #[arg(long, default_value_t = 10)]
        max_delta: u32,
        #[arg(long, default_value_t = 10)]
        max_time: u32,
        /// Skip the even-cycle row at degree 2.
        #[arg(long)]
        no_cycles: bool,
    },
    /// Verify one record line and insert it if it beats the catalog.
    Update {
        #[arg(long)]
        path: PathBuf,
        /// A full record line (tab-separated key=value fields).
        #[arg(long, conflicts_with = "from_file")]
        line: Option<String>,
        /// Read record lines from a file.
        #[arg(long)]
        from_file: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Bounds(args) => cmd_bounds(args),
        Command::Build(args) => cmd_build(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Exact(args) => cmd_exact(args),
        Command::Family(args) => cmd_family(args),
        Command::Search(args) => cmd_search(args),
        Command::Catalog(args) => cmd_catalog(args),
    }
}

fn cmd_bounds(args: BoundsArgs) -> Result<ExitCode> {
    let tmax = args.tmax.unwrap_or(args.max);
    if tmax < 2 {
        bail!("--tmax must be at least 2");
    }
    let table = cb::bound_table(args.max, tmax);
    match args.format {
        TableFormat::Tsv => print!("{}", table.to_tsv()),
        TableFormat::Pretty => print!("{}", table.to_pretty(args.omit_below_diagonal)),
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_group_and_generators(group: &str, generators: &str) -> Result<(GroupSpec, GeneratorSet)> {
    let spec = GroupSpec::parse(group).context("bad group spec")?;
    let gens = GeneratorSet::parse(&spec, generators).context("bad generator list")?;
    Ok((spec, gens))
}

fn cmd_build(args: BuildArgs) -> Result<ExitCode> {
    let (spec, gens) = parse_group_and_generators(&args.group, &args.generators)?;
    let report = cb::validate_generators(&spec, &gens)?;
    if let Some(witness) = &report.missing_inverse {
        bail!(
            "generator set is not inverse-closed: {} has no inverse in the set",
            spec.element_literal(witness)
        );
    }
    let cg = cb::build_cayley(&spec, &gens)?;
    println!(
        "group {} order {} degree {} {}",
        spec,
        cg.vertex_count(),
        gens.len(),
        if cg.is_connected() { "connected" } else { "disconnected" }
    );
    if !cg.is_connected() {
        eprintln!(
            "warning: generators reach only {} of {} elements; the graph is disconnected",
            report.reached, report.order
        );
    }
    if let Some(format) = args.export {
        let text = match format {
            ExportFormat::EdgeList => cg.graph().to_edge_list(),
            ExportFormat::Dot => cg.graph().to_dot(),
        };
        match &args.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {path:?}"))?,
            None => print!("{text}"),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_simulate(args: SimulateArgs) -> Result<ExitCode> {
    let (spec, gens) = parse_group_and_generators(&args.group, &args.generators)?;
    let cg = cb::build_cayley(&spec, &gens)?;
    let scheme = BroadcastScheme::parse(&spec, gens.len(), &args.scheme).context("bad scheme")?;
    let origin = args.origin.unwrap_or_else(|| cg.identity_vertex());
    if (origin as usize) >= cg.vertex_count() {
        bail!("origin {} out of range for {} vertices", origin, cg.vertex_count());
    }
    let opts = SimOptions {
        max_rounds: args.max_rounds,
        keep_receipt_generator: args.keep_receipt_generator,
    };
    let trace = cb::simulate(&cg, &scheme, origin, opts)?;
    print!("{}", trace.text());
    match trace.completion_round {
        Some(r) => println!("completed in {r} rounds"),
        None => println!(
            "incomplete: {} of {} informed within {} rounds",
            trace.informed_count(),
            cg.vertex_count(),
            trace.rounds.len()
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_exact(args: ExactArgs) -> Result<ExitCode> {
    let graph = match (&args.named, &args.edges) {
        (Some(name), None) => cb::named_graph(name)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {path:?}"))?;
            cb::Graph::parse_edge_list(&text)?
        }
        _ => bail!("exactly one of --named or --edges is required"),
    };
    match args.origin {
        Some(origin) => {
            let res = cb::exact_broadcast_time_from_with_cap(&graph, origin, args.cap)?;
            println!("b({origin}) = {} ({} nodes expanded)", res.rounds, res.nodes_expanded);
            if args.witness {
                print!("{}", res.witness.text());
            }
        }
        None => {
            let mut worst = None::<(u32, cb::ExactResult)>;
            for origin in 0..graph.vertex_count() as u32 {
                let res = cb::exact_broadcast_time_from_with_cap(&graph, origin, args.cap)?;
                if worst.as_ref().is_none_or(|(b, _)| res.rounds > *b) {
                    worst = Some((res.rounds, res));
                }
            }
            let (b, res) = worst.expect("graphs are non-empty");
            println!("b(G) = {b} (worst origin {})", res.origin);
            if args.witness {
                print!("{}", res.witness.text());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn family_witness(kind: FamilyKind, delta: u32) -> Result<cb::FamilyWitness> {
    Ok(match kind {
        FamilyKind::Dihedral => cb::dihedral_family(delta)?,
        FamilyKind::Hypercube => cb::hypercube_family(delta)?,
    })
}

fn cmd_family(args: FamilyArgs) -> Result<ExitCode> {
    match args.action {
        FamilyAction::Verify { delta, kind } => {
            let w = family_witness(kind, delta)?;
            let report = cb::verify_family_witness(&w)?;
            for check in &report.checks {
                println!(
                    "  [{}] {}: {}",
                    if check.passed { "ok" } else { "FAIL" },
                    check.name,
                    check.detail
                );
            }
            let completed = report
                .completed_in
                .map(|r| r.to_string())
                .unwrap_or_else(|| "incomplete".into());
            if report.passed() && report.optimal {
                println!(
                    "{}: order {} = M({},{}), completes in {completed} — OPTIMAL",
                    w.spec, report.order, w.degree, w.time
                );
            } else if report.passed() {
                println!(
                    "{}: order {} <= M({},{}), completes in {completed}",
                    w.spec, report.order, w.degree, w.time
                );
            } else {
                bail!("verification failed for {} at delta {}", w.spec, delta);
            }
        }
        FamilyAction::Show { delta, kind } => {
            let w = family_witness(kind, delta)?;
            let note = match kind {
                FamilyKind::Dihedral => "dihedral family",
                FamilyKind::Hypercube => "hypercube family",
            };
            println!("{}", CatalogRecord::from_witness(&w, note).to_line());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn record_json(rec: &CatalogRecord) -> String {
    let esc = |s: &str| {
        s.replace('\\', "\\\\")
            .replace('"', "\\\"")
            .replace('\n', "\\n")
            .replace('\t', "\\t")
    };
    format!(
        "{{\"delta\":{},\"time\":{},\"order\":{},\"optimal\":{},\"group\":\"{}\",\"generators\":\"{}\",\"scheme\":\"{}\",\"rounds\":{},\"note\":\"{}\",\"checksum\":\"{}\"}}",
        rec.delta,
        rec.time,
        rec.order,
        rec.is_optimal(),
        esc(&rec.group),
        esc(&rec.generators),
        esc(&rec.scheme),
        rec.rounds,
        esc(&rec.note),
        esc(&rec.checksum)
    )
}

fn cmd_search(args: SearchArgs) -> Result<ExitCode> {
    let scope = match (&args.family, &args.group) {
        (Some(family), None) => GroupScope::Family(cb::GroupFamily::parse(family)?),
        (None, Some(group)) => {
            let spec = GroupSpec::parse(group).context("bad group spec")?;
            let generators = match &args.generators {
                Some(text) => Some(GeneratorSet::parse(&spec, text).context("bad generator list")?),
                None => None,
            };
            GroupScope::Fixed { spec, generators }
        }
        _ => bail!("exactly one of --family or --group is required"),
    };
    let space = SearchSpace {
        scope,
        delta: args.delta,
        time: args.time,
        max_order: args.max_order,
        budget: args.budget,
        seed: args.seed,
        policy: SchemePolicy {
            max_orderings: args.orderings,
            permutation_samples: args.perm_samples,
        },
    };
    eprintln!(
        "searching delta={} time={} budget={} seed={}",
        args.delta, args.time, args.budget, args.seed
    );
    let outcome = cb::run_search(&space, args.jobs)?;
    eprintln!(
        "evaluated {} schemes over {} generator orderings/sets in {} group(s)",
        outcome.evaluated, outcome.generator_sets_tried, outcome.groups_tried
    );
    if outcome.candidates.is_empty() {
        println!("no candidates completed within {} rounds", args.time);
        return Ok(ExitCode::FAILURE);
    }
    for rec in &outcome.candidates {
        if args.json_lines {
            println!("{}", record_json(rec));
        } else {
            println!("{}", rec.to_line());
        }
    }
    if let Some(path) = &args.update {
        let mut inserted = 0;
        for rec in &outcome.candidates {
            match cb::catalog_update(path, rec.clone()) {
                Ok(cb::UpdateOutcome::Inserted) => inserted += 1,
                Ok(cb::UpdateOutcome::NotBetter { .. }) => {}
                Err(e) => eprintln!("skipping record: {e}"),
            }
        }
        eprintln!("catalog {}: {inserted} record(s) inserted", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_catalog(args: CatalogArgs) -> Result<ExitCode> {
    match args.action {
        CatalogAction::Show { path, format } => {
            let catalog = Catalog::load(&path)?;
            match format {
                CatalogFormat::Pretty => print!("{}", catalog.render_matrix(true)),
                CatalogFormat::Tsv => print!("{}", catalog.render_tsv()),
                CatalogFormat::JsonLines => {
                    for rec in catalog.records() {
                        println!("{}", record_json(rec));
                    }
                }
            }
        }
        CatalogAction::Verify { path } => {
            let reports = cb::catalog_verify(&path)?;
            let mut failures = 0;
            for ((delta, time), result) in &reports {
                match result {
                    Ok(()) => println!("({delta},{time}): ok"),
                    Err(reason) => {
                        failures += 1;
                        println!("({delta},{time}): FAIL: {reason}");
                    }
                }
            }
            println!("{} record(s), {failures} failure(s)", reports.len());
            if failures > 0 {
                return Ok(ExitCode::FAILURE);
            }
        }
        CatalogAction::Seed {
            path,
            max_delta,
            max_time,
            no_cycles,
        } => {
            let outcome = cb::seed_catalog(&path, max_delta, max_time, !no_cycles)?;
            println!(
                "seeded {} record(s) ({} proposals skipped)",
                outcome.inserted.len(),
                outcome.proposals_skipped
            );
        }
        CatalogAction::Update { path, line, from_file } => {
            let lines: Vec<String> = match (line, from_file) {
                (Some(l), None) => vec![l],
                (None, Some(file)) => fs::read_to_string(&file)
                    .with_context(|| format!("reading {file:?}"))?
                    .lines()
                    .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                    .map(str::to_string)
                    .collect(),
                _ => bail!("exactly one of --line or --from-file is required"),
            };
            for text in lines {
                let rec = CatalogRecord::parse_line(text.trim())
                    .map_err(|e| anyhow!("bad record line: {e}"))?;
                match cb::catalog_update(&path, rec)? {
                    cb::UpdateOutcome::Inserted => println!("inserted"),
                    cb::UpdateOutcome::NotBetter { existing_order } => {
                        println!("not inserted: existing record has order {existing_order}")
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
