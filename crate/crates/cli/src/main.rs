use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use zflab::cobipartite::{
    check_invariants, cobipartite_from_pattern, gf2_max_nullity, gf2_pattern_rank, probe_question,
    verify_identities, ProbeReport, IDENTITY_NAMES,
};
use zflab::corpus::run_corpus;
use zflab::forcing::{direct_zf_number, enhanced_zf_number, zf_number, ForcingRule};
use zflab::graph::{hadwiger_number, treewidth_exact};
use zflab::io::family::{family_instances, Family, FamilyParams};
use zflab::io::{parse_edge_list, parse_graph6, parse_pattern};
use zflab::pattern::tri_number;
use zflab::Graph;

/// Zero forcing, triangle numbers and cobipartite identity checks.
#[derive(Parser)]
#[command(name = "zflab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print parameters of one graph or pattern as JSON.
    Compute(ComputeArgs),
    /// Check the identity battery and invariants on a family; exit 1 on any failure.
    Verify(VerifyArgs),
    /// Collect GF(2) nullity evidence under deletion of unsaturated vertices.
    Probe(ProbeArgs),
    /// Recompute the reference values and print expected against computed.
    Corpus,
}

#[derive(Args)]
struct ComputeArgs {
    /// Edge-list or graph6 file.
    #[arg(long, conflicts_with = "pattern", required_unless_present = "pattern")]
    graph: Option<PathBuf>,
    /// Pattern file of `0` and `*` rows; graph parameters use its cobipartite graph.
    #[arg(long)]
    pattern: Option<PathBuf>,
    /// Comma-separated subset of z,zplus,zhat,zd,zloop,tw,h,delta,omega,gf2nullity,tri,gf2rank.
    #[arg(long, default_value = "z", value_delimiter = ',')]
    params: Vec<String>,
}

#[derive(Args)]
struct FamilyArgs {
    /// One of exhaustive_patterns, random_pattern, random_saturated,
    /// random_unsaturated, random_cobipartite, random_ktree, exhaustive_graphs.
    #[arg(long)]
    family: Family,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Rows (maximum rows for random pattern families).
    #[arg(long, default_value_t = 3)]
    m: usize,
    /// Columns, or the vertex count for graph families.
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// k for random_ktree.
    #[arg(long, default_value_t = 2)]
    k: usize,
}

impl FamilyArgs {
    fn params(&self) -> FamilyParams {
        FamilyParams {
            seed: self.seed,
            count: self.count,
            m: self.m,
            n: self.n,
            k: self.k,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Write every verdict list to this file as JSON.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct ProbeArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Evidence CSV destination.
    #[arg(long, default_value = "probe.csv")]
    out: PathBuf,
}

/// Failures that are not usage errors map to exit code 1.
enum Outcome {
    Ok,
    Failed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(&a),
        Command::Verify(a) => verify(&a),
        Command::Probe(a) => probe(&a),
        Command::Corpus => corpus(),
    };
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text = read(path)?;
    match parse_edge_list(&text) {
        Ok(g) => Ok(g),
        Err(edge_err) => parse_graph6(text.trim()).map_err(|g6_err| {
            anyhow!(
                "{}: not an edge list ({edge_err}) nor graph6 ({g6_err})",
                path.display()
            )
        }),
    }
}

fn graph_param(g: &Graph, name: &str) -> Result<usize> {
    Ok(match name {
        "z" => zf_number(ForcingRule::Standard, g)?.number,
        "zplus" => zf_number(ForcingRule::Psd, g)?.number,
        "zloop" => zf_number(ForcingRule::Loop, g)?.number,
        "zhat" => enhanced_zf_number(g)?.number,
        "zd" => direct_zf_number(g)?.number,
        "tw" => treewidth_exact(g)?,
        "h" => hadwiger_number(g)?,
        "delta" => g.min_degree(),
        "omega" => g.clique_number(),
        "gf2nullity" => gf2_max_nullity(g)?,
        other => bail!("unknown graph parameter `{other}`"),
    })
}

fn compute(a: &ComputeArgs) -> Result<Outcome> {
    let mut out = Map::new();
    if let Some(path) = &a.pattern {
        let y = parse_pattern(&read(path)?)?;
        let mut graph = None;
        for p in &a.params {
            let v = match p.as_str() {
                "tri" => tri_number(&y),
                "gf2rank" => gf2_pattern_rank(&y),
                other => {
                    if graph.is_none() {
                        graph = Some(cobipartite_from_pattern(&y)?.graph);
                    }
                    graph_param(graph.as_ref().expect("just built"), other)?
                }
            };
            out.insert(p.clone(), json!(v));
        }
    } else {
        let g = load_graph(a.graph.as_ref().expect("clap requires one source"))?;
        for p in &a.params {
            if matches!(p.as_str(), "tri" | "gf2rank") {
                bail!("`{p}` needs --pattern");
            }
            out.insert(p.clone(), json!(graph_param(&g, p)?));
        }
    }
    println!("{}", Value::Object(out));
    Ok(Outcome::Ok)
}

#[derive(Default)]
struct Tally {
    held: usize,
    failed: usize,
    not_applicable: usize,
    skipped: usize,
}

fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let start = Instant::now();
    let instances = family_instances(a.family.family, &a.family.params())?;
    let mut tallies: BTreeMap<&str, Tally> = IDENTITY_NAMES
        .iter()
        .map(|&n| (n, Tally::default()))
        .collect();
    let mut failures = Vec::new();
    let mut all = Vec::new();
    for (index, inst) in instances.iter().enumerate() {
        let verdicts = verify_identities(inst);
        for v in &verdicts {
            let t = tallies
                .get_mut(v.identity.as_str())
                .expect("known identity");
            match v.holds {
                _ if v.skipped => t.skipped += 1,
                Some(true) => t.held += 1,
                Some(false) => {
                    t.failed += 1;
                    failures.push(format!(
                        "instance {index}: {} lhs={:?} rhs={:?}\n{}",
                        v.identity, v.lhs, v.rhs, inst.pattern
                    ));
                }
                None => t.not_applicable += 1,
            }
        }
        for msg in check_invariants(inst, &verdicts)? {
            failures.push(format!(
                "instance {index}: invariant: {msg}\n{}",
                inst.pattern
            ));
        }
        if a.json.is_some() {
            all.push(
                json!({ "index": index, "pattern": inst.pattern.to_text(), "verdicts": verdicts }),
            );
        }
    }
    println!("{} instances from {}", instances.len(), a.family.family);
    println!(
        "{:<34} {:>7} {:>7} {:>7} {:>7}",
        "identity", "held", "failed", "n/a", "skipped"
    );
    for (name, t) in &tallies {
        println!(
            "{name:<34} {:>7} {:>7} {:>7} {:>7}",
            t.held, t.failed, t.not_applicable, t.skipped
        );
    }
    for f in failures.iter().take(20) {
        println!("FAIL {f}");
    }
    if let Some(path) = &a.json {
        std::fs::write(path, serde_json::to_string_pretty(&all)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    println!("{} failures in {:.2?}", failures.len(), start.elapsed());
    Ok(if failures.is_empty() {
        Outcome::Ok
    } else {
        Outcome::Failed
    })
}

fn probe(a: &ProbeArgs) -> Result<Outcome> {
    let instances = family_instances(a.family.family, &a.family.params())?;
    let mut csv = String::from(ProbeReport::CSV_HEADER);
    csv.push('\n');
    let (mut consistent, mut inconsistent, mut excluded) = (0, 0, 0);
    for (index, inst) in instances.iter().enumerate() {
        let r = probe_question(&inst.graph, inst.partition)?;
        match r.consistent {
            Some(true) => consistent += 1,
            Some(false) => inconsistent += 1,
            None => excluded += 1,
        }
        csv.push_str(&r.csv_row(index));
        csv.push('\n');
    }
    std::fs::write(&a.out, csv).with_context(|| format!("writing {}", a.out.display()))?;
    println!(
        "{} instances: {consistent} consistent, {inconsistent} inconsistent, {excluded} outside the question; wrote {}",
        instances.len(),
        a.out.display()
    );
    Ok(Outcome::Ok)
}

fn corpus() -> Result<Outcome> {
    let start = Instant::now();
    let rows = run_corpus();
    println!(
        "{:<20} {:<18} {:<14} {:<14} status",
        "entry", "parameter", "expected", "computed"
    );
    for r in &rows {
        println!("{r}");
    }
    let failed = rows.iter().filter(|r| !r.passed()).count();
    println!(
        "{} of {} rows pass in {:.2?}",
        rows.len() - failed,
        rows.len(),
        start.elapsed()
    );
    Ok(if failed == 0 {
        Outcome::Ok
    } else {
        Outcome::Failed
    })
}
