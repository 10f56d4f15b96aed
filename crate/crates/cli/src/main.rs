//! `domset`: generate graphs, verify dominating sets, compute bounds and
//! constructions, solve exactly, and sweep corpora.
//!
//! Exit codes: 0 all checks pass, 1 a domination or claim violation was
//! found, 2 usage error, 3 a solve ran out of budget.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use domset::{
    bound_report, construct_best, named, parse_edgelist, run_sweep, solve_exact, violation_report,
    write_edgelist, Budget, CorpusSpec, Family, FamilyTemplate, Graph, ParamTriple, SolveOptions,
    SolveStatus, VertexSet,
};
use serde_json::json;

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "domset", version, about = "(k,k',k'')-domination toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph in edge-list format.
    Gen {
        /// Family name: path, cycle, complete, complete_bipartite, star,
        /// petersen, random_gnp, random_regular, random_tree.
        family: String,
        /// Size parameters, e.g. `10 3` for random_regular.
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check whether a vertex set is (k,k',k'')-dominating.
    Verify {
        #[command(flatten)]
        input: Input,
        /// Comma-separated vertex list; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        /// Print the report as JSON even when the set is dominating.
        #[arg(long)]
        json: bool,
    },
    /// Report all applicable lower and upper bounds as JSON.
    Bound {
        #[command(flatten)]
        input: Input,
    },
    /// Build the constructive (k,k',1) upper-bound set.
    Construct {
        #[command(flatten)]
        input: Input,
    },
    /// Compute the domination number exactly.
    Solve {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Do not use the closed-form lower bounds as a search floor.
        #[arg(long)]
        no_bound_pruning: bool,
    },
    /// Evaluate every claim over families x sizes x seeds x triples.
    Sweep {
        /// Comma-separated family templates, e.g.
        /// `random_regular:3,random_tree,complete`.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<String>,
        /// Sizes as a list `4,6,8` or a range `2..=10` / `2..11`.
        #[arg(long, default_value = "")]
        sizes: String,
        /// Seeds as a list or range; defaults to `--seed`.
        #[arg(long)]
        seeds: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Parameter triple; repeat for several.
        #[arg(long = "triple", required = true)]
        triples: Vec<String>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Input {
    /// Edge-list file (`-` for stdin).
    #[arg(long)]
    graph: PathBuf,
    /// `k,k',k''`, or a name such as `restrained` or `k_tuple:2`.
    #[arg(long)]
    triple: String,
}

#[derive(Args)]
struct BudgetArgs {
    #[arg(long, default_value_t = 100_000_000)]
    budget_nodes: u64,
    #[arg(long, default_value_t = 60)]
    budget_secs: u64,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_nodes: Some(self.budget_nodes),
            max_time: Some(Duration::from_secs(self.budget_secs)),
        }
    }
}

/// Error that maps to the usage exit code.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

fn parse_triple(text: &str) -> Result<ParamTriple> {
    if let Ok(p) = text.parse() {
        return Ok(p);
    }
    let (name, k) = match text.split_once(':') {
        Some((name, k)) => match k.parse() {
            Ok(k) => (name, Some(k)),
            Err(_) => return usage(format!("bad order in {text:?}")),
        },
        None => (text, None),
    };
    named(name, k).or_else(|e| usage(e.to_string()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).context("reading stdin")?
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    match parse_edgelist(&text) {
        Ok(g) => Ok(g),
        Err(e) => usage(format!("{}: {e}", path.display())),
    }
}

fn load(input: &Input) -> Result<(Graph, ParamTriple)> {
    Ok((read_graph(&input.graph)?, parse_triple(&input.triple)?))
}

fn parse_vertex_set(text: &str, n: usize) -> Result<VertexSet> {
    let mut vertices = Vec::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match part.parse() {
            Ok(v) => vertices.push(v),
            Err(_) => return usage(format!("bad vertex {part:?}")),
        }
    }
    VertexSet::from_vertices(n, vertices).or_else(|e| usage(e.to_string()))
}

/// `4,6,8`, `2..=10` or `2..11`.
fn parse_list<T>(text: &str) -> Result<Vec<T>>
where
    T: std::str::FromStr + Copy,
    std::ops::RangeInclusive<T>: Iterator<Item = T>,
    std::ops::Range<T>: Iterator<Item = T>,
{
    let num = |s: &str| {
        s.trim()
            .parse::<T>()
            .or_else(|_| usage(format!("bad number {s:?}")))
    };
    if let Some((a, b)) = text.split_once("..=") {
        return Ok((num(a)?..=num(b)?).collect());
    }
    if let Some((a, b)) = text.split_once("..") {
        return Ok((num(a)?..num(b)?).collect());
    }
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(num)
        .collect()
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn threads() -> usize {
    std::env::var("DOMSET_THREADS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(0)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen {
            family,
            params,
            seed,
            out,
        } => {
            let args: Vec<&str> = params.iter().map(String::as_str).collect();
            let graph = Family::from_args(&family, &args)
                .and_then(|f| f.generate(seed))
                .or_else(|e| usage(e.to_string()))?;
            emit(out.as_deref(), &write_edgelist(&graph))?;
            Ok(0)
        }
        Command::Verify { input, set, json } => {
            let (g, p) = load(&input)?;
            let s = parse_vertex_set(&set, g.n())?;
            let violations = violation_report(&g, &s, p);
            let ok = violations.is_empty();
            if json || !ok {
                let report = json!({
                    "dominating": ok,
                    "triple": p,
                    "set": s,
                    "violations": violations,
                });
                println!("{report}");
            } else {
                println!("dominating");
            }
            Ok(if ok { 0 } else { EXIT_VIOLATION })
        }
        Command::Bound { input } => {
            let (g, p) = load(&input)?;
            println!("{}", bound_report(&g, p).to_json());
            Ok(0)
        }
        Command::Construct { input } => {
            let (g, p) = load(&input)?;
            let Some(c) = construct_best(&g, p) else {
                return usage(format!(
                    "no construction applies to {p} (needs k''=1 and either k'>=k+1, δ>=k'+1 or k>=k', δ>=k+2)"
                ));
            };
            let list: Vec<String> = c.set.iter().map(|v| v.to_string()).collect();
            println!("{}", list.join(" "));
            println!("{}", serde_json::to_string(&c)?);
            Ok(if c.valid { 0 } else { EXIT_VIOLATION })
        }
        Command::Solve {
            input,
            budget,
            no_bound_pruning,
        } => {
            let (g, p) = load(&input)?;
            let options = SolveOptions {
                budget: budget.budget(),
                bound_pruning: !no_bound_pruning,
            };
            let r = solve_exact(&g, p, options);
            println!("{}", r.to_json());
            Ok(match r.status {
                SolveStatus::BudgetExceeded => EXIT_BUDGET,
                _ => 0,
            })
        }
        Command::Sweep {
            families,
            sizes,
            seeds,
            seed,
            triples,
            budget,
            out,
        } => {
            let families = families
                .iter()
                .map(|f| {
                    f.parse::<FamilyTemplate>()
                        .or_else(|e| usage(e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            let seeds = match seeds {
                Some(text) => parse_list(&text)?,
                None => vec![seed],
            };
            let spec = CorpusSpec {
                families,
                sizes: parse_list(&sizes)?,
                seeds,
                triples: triples
                    .iter()
                    .map(|t| parse_triple(t))
                    .collect::<Result<_>>()?,
                options: SolveOptions {
                    budget: budget.budget(),
                    bound_pruning: true,
                },
            };
            if spec.seeds.is_empty() {
                bail!(Usage("no seeds given".into()));
            }
            let sweep = run_sweep(&spec, threads());
            emit(out.as_deref(), &sweep.to_csv())?;
            for (family, err) in &sweep.skipped {
                eprintln!("skipped {family}: {err}");
            }
            for row in sweep.rows.iter().filter(|r| !r.checks.failures.is_empty()) {
                eprintln!(
                    "violation: {} n={} seed={} triple={}: {}",
                    row.family,
                    row.report.n,
                    row.seed,
                    row.triple,
                    row.checks.failures.join("; ")
                );
            }
            let summary = sweep.summary();
            eprintln!("{}", serde_json::to_string(&summary)?);
            Ok(summary.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
