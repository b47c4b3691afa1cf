//! Command-line front end: analyze single graphs, generate corpora, run
//! verification sweeps, and reproduce the empirical 2-bicriticality
//! fraction.
//!
//! Exit codes are a stable contract: 0 on success, 1 when any unexpected
//! theorem mismatch was found, 2 on usage, parse, or configuration errors.
//! Every command is a deterministic function of its inputs, flags, and seed;
//! `--workers` changes wall time only, never stdout content (timings go to
//! stderr for that reason).

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use oddbic::bicritical::is_2bicritical_limited;
use oddbic::closed_form::StatementCheck;
use oddbic::family::{classify_limited, FamilyClassification, FamilyTag, DEFAULT_CYCLE_CAP};
use oddbic::generators::{random_family, random_gnp, sub_seed};
use oddbic::graph::Graph;
use oddbic::independence::{core_corona_oracle_limited, IndependenceProfile};
use oddbic::matching::maximum_matching;
use oddbic::verify::{
    compare_routes, summarize, sweep_graph, verify_family_instance, FamilySummary, OracleLimits,
    RouteComparison, SweepOutcome,
};

#[derive(Parser)]
#[command(
    name = "oddbic",
    version,
    about = "Classify 2-bicritical graphs with at most two odd cycles and \
             verify their closed-form independence structure against oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph: classify, apply the closed forms, compare oracles
    Analyze(AnalyzeArgs),
    /// Generate family instances and verify every route against every other
    Verify(VerifyArgs),
    /// Write generated family instances to disk with recipe sidecars
    Gen(GenArgs),
    /// Sweep a graph6 stream, verifying every in-scope graph
    Enumerate(EnumerateArgs),
    /// Measure the fraction of G(n, p) samples that are 2-bicritical
    BicriticalFraction(FractionArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    /// Edge list: "n m" header, one "u v" pair per line, '#' comments
    El,
    /// graph6, one graph per line
    G6,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    /// Input file; "-" or absent reads stdin
    input: Option<PathBuf>,
    /// Input format
    #[arg(long, value_enum, default_value_t = InputFormat::El)]
    format: InputFormat,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
    /// Fail (exit 2) instead of downgrading when n exceeds the oracle limit
    #[arg(long)]
    strict: bool,
    /// Skip the exponential independence oracle
    #[arg(long)]
    no_oracle: bool,
    /// Cycle enumeration budget
    #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
    cap: usize,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Families to verify: "all" or a comma-separated list
    /// (one-odd-cycle, fused-odd, even-linked, odd-linked, disconnected-pair)
    #[arg(long, default_value = "all")]
    families: String,
    /// Instances per family
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Vertex budget per instance
    #[arg(long, default_value_t = 20)]
    max_n: usize,
    /// Base seed; instance i of family f uses sub_seed(seed, f*count + i)
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Worker threads (default: one per CPU)
    #[arg(long)]
    workers: Option<usize>,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    #[value(alias = "OneOddCycle")]
    OneOddCycle,
    #[value(alias = "FusedOdd")]
    FusedOdd,
    #[value(alias = "EvenLinked")]
    EvenLinked,
    #[value(alias = "OddLinked")]
    OddLinked,
    #[value(alias = "DisconnectedPair")]
    DisconnectedPair,
}

impl From<FamilyKind> for FamilyTag {
    fn from(kind: FamilyKind) -> FamilyTag {
        match kind {
            FamilyKind::OneOddCycle => FamilyTag::OneOddCycle,
            FamilyKind::FusedOdd => FamilyTag::FusedOdd,
            FamilyKind::EvenLinked => FamilyTag::EvenLinked,
            FamilyKind::OddLinked => FamilyTag::OddLinked,
            FamilyKind::DisconnectedPair => FamilyTag::DisconnectedPair,
        }
    }
}

#[derive(clap::Args)]
struct GenArgs {
    /// Family to generate
    kind: FamilyKind,
    /// Vertex budget per instance
    #[arg(long)]
    max_n: usize,
    /// Number of instances
    #[arg(long, default_value_t = 1)]
    count: usize,
    /// Base seed; instance i uses sub_seed(seed, i)
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory (created if missing)
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(clap::Args)]
struct EnumerateArgs {
    /// graph6 stream, one graph per line; "-" or absent reads stdin
    input: Option<PathBuf>,
    /// Skip graphs larger than this
    #[arg(long, default_value_t = 11)]
    max_n: usize,
    /// Emit machine-readable JSON instead of text
    #[arg(long)]
    json: bool,
    /// Cycle enumeration budget
    #[arg(long, default_value_t = DEFAULT_CYCLE_CAP)]
    cap: usize,
}

#[derive(clap::Args)]
struct FractionArgs {
    /// Comma-separated list of graph orders to sample
    #[arg(long = "n", value_name = "N_LIST")]
    n_list: String,
    /// Edge probability
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Samples per order
    #[arg(long, default_value_t = 500)]
    trials: usize,
    /// Base seed; trial t at order n uses sub_seed(seed, (n << 32) | t)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker threads (default: one per CPU)
    #[arg(long)]
    workers: Option<usize>,
}

fn main() -> ExitCode {
    // Restore default SIGPIPE handling so piping into `head` or `grep -q`
    // terminates the process quietly instead of panicking on a closed stdout.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::BicriticalFraction(args) => cmd_fraction(args),
    }
}

/// Oracle ceilings with the ODDBIC_ORACLE_LIMIT override applied (the
/// oracles themselves cap any value at 64, the bitset width).
fn resolve_limits(cycle_cap: usize) -> Result<OracleLimits> {
    let mut limits = match std::env::var("ODDBIC_ORACLE_LIMIT") {
        Ok(raw) => {
            let limit: usize = raw
                .parse()
                .with_context(|| format!("ODDBIC_ORACLE_LIMIT must be an integer, got {raw:?}"))?;
            OracleLimits::with_oracle_limit(limit)
        }
        Err(_) => OracleLimits::default(),
    };
    limits.cycle_cap = cycle_cap;
    Ok(limits)
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn kind_name(tag: FamilyTag) -> &'static str {
    match tag {
        FamilyTag::OneOddCycle => "one-odd-cycle",
        FamilyTag::FusedOdd => "fused-odd",
        FamilyTag::EvenLinked => "even-linked",
        FamilyTag::OddLinked => "odd-linked",
        FamilyTag::DisconnectedPair => "disconnected-pair",
        FamilyTag::OutOfScope => "out-of-scope",
    }
}

fn parse_families(raw: &str) -> Result<Vec<FamilyTag>> {
    const ALL: [FamilyTag; 5] = [
        FamilyTag::OneOddCycle,
        FamilyTag::FusedOdd,
        FamilyTag::EvenLinked,
        FamilyTag::OddLinked,
        FamilyTag::DisconnectedPair,
    ];
    if raw.trim() == "all" {
        return Ok(ALL.to_vec());
    }
    let mut kinds = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        let tag = ALL
            .into_iter()
            .find(|&t| kind_name(t) == part || format!("{t:?}") == part)
            .with_context(|| format!("unknown family {part:?}"))?;
        if !kinds.contains(&tag) {
            kinds.push(tag);
        }
    }
    if kinds.is_empty() {
        bail!("--families must name at least one family");
    }
    Ok(kinds)
}

fn install_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match workers {
        Some(w) => {
            if w == 0 {
                bail!("--workers must be at least 1");
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w)
                .build()
                .context("building worker pool")?;
            Ok(pool.install(f))
        }
        None => Ok(f()),
    }
}

// ---------------------------------------------------------------- analyze

#[derive(Serialize)]
struct OutOfScopeOutput<'a> {
    classification: &'a FamilyClassification,
    mu: usize,
    independence_oracle: Option<&'a IndependenceProfile>,
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<u8> {
    let text = read_input(&args.input)?;
    let g = match args.format {
        InputFormat::El => Graph::parse_edge_list(&text)?,
        InputFormat::G6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .context("input contains no graph6 line")?;
            Graph::parse_graph6(line)?
        }
    };
    let mut limits = resolve_limits(args.cap)?;

    let assume = g.n() > limits.bicritical;
    if assume {
        eprintln!(
            "warning: n = {} exceeds the 2-bicriticality oracle limit {}; \
             bicriticality is assumed, not checked",
            g.n(),
            limits.bicritical
        );
    }
    let cls = classify_limited(&g, assume, limits.cycle_cap, limits.bicritical)
        .map_err(|e| anyhow::anyhow!("classification failed: {e}"))?;

    if cls.tag == FamilyTag::OutOfScope {
        let mu = maximum_matching(&g).size();
        let profile = if args.no_oracle {
            None
        } else {
            core_corona_oracle_limited(&g, limits.independence).ok()
        };
        if args.json {
            let out = OutOfScopeOutput {
                classification: &cls,
                mu,
                independence_oracle: profile.as_ref(),
            };
            println!("{}", serde_json::to_string_pretty(&out)?);
        } else {
            println!("family: out-of-scope");
            if let Some(reason) = &cls.reason {
                println!("reason: {reason}");
            }
            println!("mu: {mu}");
            if let Some(p) = &profile {
                println!("alpha: {} (oracle)", p.alpha);
                println!("core: {:?}", p.core);
                println!("corona: {:?}", p.corona);
            }
        }
        return Ok(0);
    }

    if g.n() > limits.independence {
        if args.strict {
            bail!(
                "n = {} exceeds the independence oracle limit {} (--strict)",
                g.n(),
                limits.independence
            );
        }
        if !args.no_oracle {
            eprintln!(
                "warning: n = {} exceeds the independence oracle limit {}; \
                 emitting closed-form and polynomial routes only",
                g.n(),
                limits.independence
            );
        }
    }
    if args.no_oracle {
        limits.independence = 0;
    }

    let cmp = compare_routes(&g, &cls, limits)
        .map_err(|e| anyhow::anyhow!("closed-form analysis failed: {e}"))?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&cmp)?);
    } else {
        print_comparison(&g, &cmp);
    }
    Ok(if cmp.unexpected().is_empty() { 0 } else { 1 })
}

fn print_checks(checks: &[StatementCheck]) {
    println!("checks:");
    for c in checks {
        let status = if c.passed {
            "pass            "
        } else if c.expected_divergent {
            "diverges (known)"
        } else {
            "FAIL            "
        };
        println!("  {status} {:<38} {}", c.name, c.detail);
    }
}

fn print_comparison(g: &Graph, cmp: &RouteComparison) {
    let r = &cmp.closed_form;
    let cls = &cmp.classification;
    println!("family: {} (n = {}, m = {})", kind_name(r.family), g.n(), g.m());
    if !cls.c.is_empty() {
        println!("  odd cycle C:  {:?}", cls.c);
    }
    if let Some(cp) = &cls.c_prime {
        println!("  odd cycle C': {cp:?}");
    }
    if !cls.shared.is_empty() {
        println!("  shared: {:?}", cls.shared);
    }
    if let (Some(x), Some(y)) = (cls.x, cls.y) {
        if cls.tag == FamilyTag::EvenLinked || cls.tag == FamilyTag::OddLinked {
            println!("  attachments: x = {x}, y = {y}");
        }
    }
    println!("alpha: {}", r.alpha);
    println!("mu: {}", r.mu);
    println!("core: {:?}", r.core);
    println!("corona: {:?}", r.corona);
    match &r.ge {
        Some(ge) => println!(
            "gallai-edmonds: D = {:?}, A = {:?}, C = {:?}",
            ge.d, ge.a, ge.c
        ),
        None => println!("gallai-edmonds: not predicted for this family"),
    }
    println!(
        "identity: |core| + |corona| = 2*alpha + {} ({:?})",
        r.identity_value, r.identity_class
    );
    println!(
        "partition corona + N(core) = V: {}",
        if r.partition_holds { "holds" } else { "fails" }
    );

    println!("mu (blossom): {}", cmp.mu_oracle);
    println!(
        "gallai-edmonds (definitional): D = {:?}, A = {:?}, C = {:?}",
        cmp.ge_oracle.d, cmp.ge_oracle.a, cmp.ge_oracle.c
    );
    match &cmp.independence_oracle {
        Some(p) => {
            let count = p.mis_count.map(|c| c.to_string()).unwrap_or_else(|| "?".into());
            println!(
                "oracle: alpha {}, core {:?}, corona {:?} ({count} maximum independent sets)",
                p.alpha, p.core, p.corona
            );
        }
        None => println!("oracle: skipped"),
    }
    match &cmp.independence_poly {
        Some(p) => println!(
            "polynomial route: alpha {}, core {:?}, corona {:?}",
            p.alpha, p.core, p.corona
        ),
        None => println!("polynomial route: no odd cycle transversal of size <= 2"),
    }

    print_checks(&cmp.checks);
    if cmp.unexpected().is_empty() {
        println!("unexpected mismatches: none");
    } else {
        println!("unexpected mismatches:");
        for m in cmp.unexpected() {
            println!("  {m}");
        }
    }
}

// ----------------------------------------------------------------- verify

#[derive(Serialize)]
struct VerifyOutput {
    families: Vec<FamilySummary>,
    total_checked: usize,
    total_unexpected: usize,
    expected_divergent: usize,
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    if args.count == 0 {
        bail!("--count must be at least 1");
    }
    let kinds = parse_families(&args.families)?;
    for &kind in &kinds {
        let minimum = oddbic::generators::family_minimum(kind).expect("in-scope kind");
        if args.max_n < minimum {
            bail!(
                "--max-n {} is below the minimum order {} of family {}",
                args.max_n,
                minimum,
                kind_name(kind)
            );
        }
    }
    let limits = resolve_limits(DEFAULT_CYCLE_CAP)?;
    let count = args.count;
    let (max_n, seed) = (args.max_n, args.seed);

    let started = Instant::now();
    let items: Vec<(FamilyTag, u64)> = kinds
        .iter()
        .enumerate()
        .flat_map(|(f, &kind)| {
            (0..count).map(move |i| (kind, sub_seed(seed, (f * count + i) as u64)))
        })
        .collect();
    let records = install_pool(args.workers, || {
        items
            .par_iter()
            .map(|&(kind, sub)| verify_family_instance(kind, max_n, sub, limits))
            .collect::<Result<Vec<_>, _>>()
    })?
    .context("generation failed")?;
    let elapsed = started.elapsed();

    let summaries: Vec<FamilySummary> = kinds
        .iter()
        .enumerate()
        .map(|(f, &kind)| summarize(kind, &records[f * count..(f + 1) * count]))
        .collect();

    let total_checked: usize = summaries.iter().map(|s| s.checked).sum();
    let total_unexpected: usize =
        summaries.iter().map(|s| s.mismatches.iter().map(|m| m.details.len()).sum::<usize>()).sum();
    let expected_divergent: usize = summaries.iter().map(|s| s.expected_divergent).sum();

    eprintln!("elapsed: {:.2}s", elapsed.as_secs_f64());
    if args.json {
        let out = VerifyOutput { families: summaries, total_checked, total_unexpected, expected_divergent };
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        for s in &summaries {
            println!(
                "{:<18} checked {:>4}  matched {:>4}  expected-divergent {:>4}  unexpected {}",
                kind_name(s.kind),
                s.checked,
                s.matched,
                s.expected_divergent,
                s.mismatches.iter().map(|m| m.details.len()).sum::<usize>()
            );
            for m in &s.mismatches {
                println!("  seed {} (n = {}):", m.seed, m.n);
                for d in &m.details {
                    println!("    {d}");
                }
                if let Ok(json) = serde_json::to_string(&m.recipes) {
                    println!("    replay: {json}");
                }
            }
        }
        println!(
            "total: {total_checked} instances checked, {total_unexpected} unexpected mismatches"
        );
    }
    Ok(if total_unexpected == 0 { 0 } else { 1 })
}

// -------------------------------------------------------------------- gen

fn cmd_gen(args: GenArgs) -> Result<u8> {
    let kind: FamilyTag = args.kind.into();
    fs::create_dir_all(&args.out_dir)
        .with_context(|| format!("creating {}", args.out_dir.display()))?;
    for i in 0..args.count {
        let sub = sub_seed(args.seed, i as u64);
        let inst = random_family(kind, args.max_n, sub)?;
        let stem = format!("{}-{i:03}", kind_name(kind));

        let el_path = args.out_dir.join(format!("{stem}.el"));
        let header = format!(
            "# {} instance {i}: base seed {}, sub-seed {sub}, n = {}\n",
            kind_name(kind),
            args.seed,
            inst.graph.n()
        );
        fs::write(&el_path, header + &inst.graph.to_edge_list())
            .with_context(|| format!("writing {}", el_path.display()))?;

        let recipe_path = args.out_dir.join(format!("{stem}.recipe.json"));
        // One recipe per component: a JSON object for connected families,
        // an array for the disconnected pair.
        let sidecar = if inst.recipes.len() == 1 {
            serde_json::to_string_pretty(&inst.recipes[0])?
        } else {
            serde_json::to_string_pretty(&inst.recipes)?
        };
        fs::write(&recipe_path, sidecar + "\n")
            .with_context(|| format!("writing {}", recipe_path.display()))?;

        println!("{}", el_path.display());
        println!("{}", recipe_path.display());
    }
    Ok(0)
}

// -------------------------------------------------------------- enumerate

#[derive(Serialize)]
struct SweepReport {
    parsed: usize,
    parse_errors: usize,
    skipped_oversize: usize,
    checked: usize,
    filtered: BTreeMap<String, usize>,
    unexpected: Vec<SweepMismatch>,
}

#[derive(Serialize)]
struct SweepMismatch {
    line: usize,
    graph6: String,
    details: Vec<String>,
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8> {
    let reader: Box<dyn BufRead> = match &args.input {
        Some(p) if p.as_os_str() != "-" => Box::new(BufReader::new(
            fs::File::open(p).with_context(|| format!("opening {}", p.display()))?,
        )),
        _ => Box::new(BufReader::new(std::io::stdin())),
    };
    let limits = resolve_limits(args.cap)?;

    let mut report = SweepReport {
        parsed: 0,
        parse_errors: 0,
        skipped_oversize: 0,
        checked: 0,
        filtered: BTreeMap::new(),
        unexpected: Vec::new(),
    };

    for (idx, line) in reader.lines().enumerate() {
        let line = line.context("reading input stream")?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let g = match Graph::parse_graph6(trimmed) {
            Ok(g) => g,
            Err(e) => {
                report.parse_errors += 1;
                eprintln!("line {lineno}: {e}");
                continue;
            }
        };
        report.parsed += 1;
        if g.n() > args.max_n {
            report.skipped_oversize += 1;
            continue;
        }
        match sweep_graph(&g, limits) {
            SweepOutcome::Filtered { reason } => {
                // Bucket by the reason's head so witnesses don't explode the
                // histogram.
                let key = reason.split(" (").next().unwrap_or(&reason).to_owned();
                *report.filtered.entry(key).or_insert(0) += 1;
            }
            outcome @ SweepOutcome::UnclassifiedBicritical { .. } => {
                report.unexpected.push(SweepMismatch {
                    line: lineno,
                    graph6: trimmed.to_owned(),
                    details: outcome.unexpected(),
                });
            }
            SweepOutcome::Checked(cmp) => {
                report.checked += 1;
                if !cmp.unexpected().is_empty() {
                    report.unexpected.push(SweepMismatch {
                        line: lineno,
                        graph6: trimmed.to_owned(),
                        details: cmp.unexpected().to_vec(),
                    });
                }
            }
        }
    }

    if report.parsed == 0 {
        bail!("no graphs parsed from the input stream");
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!(
            "parsed {} graphs ({} parse errors, {} over --max-n {})",
            report.parsed, report.parse_errors, report.skipped_oversize, args.max_n
        );
        println!("checked {} in-scope graphs", report.checked);
        for (reason, count) in &report.filtered {
            println!("  filtered ({reason}): {count}");
        }
        if report.unexpected.is_empty() {
            println!("unexpected mismatches: none");
        } else {
            println!("unexpected mismatches:");
            for m in &report.unexpected {
                println!("  line {} ({}):", m.line, m.graph6);
                for d in &m.details {
                    println!("    {d}");
                }
            }
        }
    }
    Ok(if report.unexpected.is_empty() { 0 } else { 1 })
}

// --------------------------------------------------------------- fraction

fn cmd_fraction(args: FractionArgs) -> Result<u8> {
    if args.trials == 0 {
        bail!("--trials must be at least 1");
    }
    if !(0.0..=1.0).contains(&args.p) {
        bail!("--p must lie in [0, 1], got {}", args.p);
    }
    let limits = resolve_limits(DEFAULT_CYCLE_CAP)?;
    let mut orders = Vec::new();
    for part in args.n_list.split(',') {
        let n: usize = part
            .trim()
            .parse()
            .with_context(|| format!("--n entries must be integers, got {part:?}"))?;
        if n > limits.bicritical {
            bail!("n = {n} exceeds the 2-bicriticality oracle limit {}", limits.bicritical);
        }
        orders.push(n);
    }
    if orders.is_empty() {
        bail!("--n must list at least one order");
    }

    let (p, trials, seed) = (args.p, args.trials, args.seed);
    let rows = install_pool(args.workers, || {
        orders
            .iter()
            .map(|&n| {
                let hits = (0..trials)
                    .into_par_iter()
                    .filter(|&t| {
                        let sub = sub_seed(seed, ((n as u64) << 32) | t as u64);
                        let g = random_gnp(n, p, sub);
                        is_2bicritical_limited(&g, limits.bicritical)
                            .expect("order validated against the oracle limit")
                            .is_bicritical
                    })
                    .count();
                (n, hits)
            })
            .collect::<Vec<_>>()
    })?;

    println!("n,p,trials,fraction");
    for (n, hits) in rows {
        println!("{n},{p},{trials},{:.6}", hits as f64 / trials as f64);
    }
    Ok(0)
}
