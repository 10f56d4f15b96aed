//! Corpus sweeps: evaluate every bound, construction and exact value over a
//! grid of graphs and triples, and check the claimed relations row by row.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bound_report, format_decimal, BoundReport, PriorBound};
use crate::construction::{construct_best, Construction};
use crate::generate::{Family, GenerateError, FAMILY_NAMES};
use crate::graph::Graph;
use crate::params::{is_dominating, ParamTriple};
use crate::solver::{solve_exact, SolveOptions, SolveResult, SolveStatus};

/// A family with its non-size parameter fixed; the vertex count comes from
/// the sweep's size list.
///
/// Text form: `path`, `cycle`, `complete`, `star`, `petersen`,
/// `random_tree`, `random_regular:<d>`, `random_gnp:<p>`,
/// `complete_bipartite:<a>` (the other side gets `n - a`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FamilyTemplate {
    Path,
    Cycle,
    Complete,
    CompleteBipartite { a: usize },
    Star,
    Petersen,
    RandomGnp { p: f64 },
    RandomRegular { d: usize },
    RandomTree,
}

impl FamilyTemplate {
    pub fn is_random(&self) -> bool {
        matches!(
            self,
            FamilyTemplate::RandomGnp { .. }
                | FamilyTemplate::RandomRegular { .. }
                | FamilyTemplate::RandomTree
        )
    }

    pub fn instantiate(&self, n: usize) -> Family {
        match *self {
            FamilyTemplate::Path => Family::Path { n },
            FamilyTemplate::Cycle => Family::Cycle { n },
            FamilyTemplate::Complete => Family::Complete { n },
            FamilyTemplate::CompleteBipartite { a } => Family::CompleteBipartite {
                a,
                b: n.saturating_sub(a),
            },
            FamilyTemplate::Star => Family::Star { n },
            FamilyTemplate::Petersen => Family::Petersen,
            FamilyTemplate::RandomGnp { p } => Family::RandomGnp { n, p },
            FamilyTemplate::RandomRegular { d } => Family::RandomRegular { n, d },
            FamilyTemplate::RandomTree => Family::RandomTree { n },
        }
    }
}

impl fmt::Display for FamilyTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTemplate::Path => f.write_str("path"),
            FamilyTemplate::Cycle => f.write_str("cycle"),
            FamilyTemplate::Complete => f.write_str("complete"),
            FamilyTemplate::CompleteBipartite { a } => write!(f, "complete_bipartite:{a}"),
            FamilyTemplate::Star => f.write_str("star"),
            FamilyTemplate::Petersen => f.write_str("petersen"),
            FamilyTemplate::RandomGnp { p } => write!(f, "random_gnp:{p}"),
            FamilyTemplate::RandomRegular { d } => write!(f, "random_regular:{d}"),
            FamilyTemplate::RandomTree => f.write_str("random_tree"),
        }
    }
}

impl FromStr for FamilyTemplate {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        let bad = |reason: &str| GenerateError::Infeasible {
            family: FAMILY_NAMES
                .iter()
                .copied()
                .find(|&f| f == name)
                .unwrap_or("sweep"),
            reason: format!("{reason} in {s:?}"),
        };
        let int = |a: Option<&str>| -> Result<usize, GenerateError> {
            a.ok_or_else(|| bad("missing parameter"))?
                .parse()
                .map_err(|_| bad("bad integer parameter"))
        };
        let template = match name {
            "path" => FamilyTemplate::Path,
            "cycle" => FamilyTemplate::Cycle,
            "complete" => FamilyTemplate::Complete,
            "star" => FamilyTemplate::Star,
            "petersen" => FamilyTemplate::Petersen,
            "random_tree" => FamilyTemplate::RandomTree,
            "complete_bipartite" => FamilyTemplate::CompleteBipartite { a: int(arg)? },
            "random_regular" => FamilyTemplate::RandomRegular { d: int(arg)? },
            "random_gnp" => FamilyTemplate::RandomGnp {
                p: arg
                    .ok_or_else(|| bad("missing parameter"))?
                    .parse()
                    .map_err(|_| bad("bad probability"))?,
            },
            other => return Err(GenerateError::UnknownFamily(other.to_string())),
        };
        let takes_arg = matches!(
            template,
            FamilyTemplate::CompleteBipartite { .. }
                | FamilyTemplate::RandomRegular { .. }
                | FamilyTemplate::RandomGnp { .. }
        );
        if arg.is_some() && !takes_arg {
            return Err(bad("unexpected parameter"));
        }
        Ok(template)
    }
}

/// The cross product `families × sizes × seeds × triples`. Deterministic
/// families use only the first seed; `petersen` ignores the sizes.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub families: Vec<FamilyTemplate>,
    pub sizes: Vec<usize>,
    pub seeds: Vec<u64>,
    pub triples: Vec<ParamTriple>,
    pub options: SolveOptions,
}

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub family: FamilyTemplate,
    pub seed: u64,
    pub graph: Graph,
}

impl CorpusSpec {
    /// Generates the graphs in corpus order. Size/parameter combinations
    /// the family cannot realize are returned separately.
    pub fn graphs(&self) -> (Vec<CorpusGraph>, Vec<(Family, GenerateError)>) {
        let mut graphs = Vec::new();
        let mut skipped = Vec::new();
        let first_seed = self.seeds.first().copied().unwrap_or(0);
        for &family in &self.families {
            let sizes: &[usize] = if family == FamilyTemplate::Petersen {
                &[10]
            } else {
                &self.sizes
            };
            let seeds: &[u64] = if family.is_random() {
                &self.seeds
            } else {
                std::slice::from_ref(&first_seed)
            };
            for &n in sizes {
                let concrete = family.instantiate(n);
                for &seed in seeds {
                    match concrete.generate(seed) {
                        Ok(graph) => graphs.push(CorpusGraph {
                            family,
                            seed,
                            graph,
                        }),
                        Err(e) => {
                            skipped.push((concrete, e));
                            break;
                        }
                    }
                }
            }
        }
        (graphs, skipped)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct RowChecks {
    pub soundness_ok: bool,
    pub dominance_ok: bool,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub family: FamilyTemplate,
    pub seed: u64,
    pub triple: ParamTriple,
    pub report: BoundReport,
    pub construction: Option<Construction>,
    pub solve: SolveResult,
    pub checks: RowChecks,
}

impl SweepRow {
    pub fn lb_tight(&self) -> Option<bool> {
        let lb = self.report.lb_general?.bound().value;
        Some(self.solve.gamma? == lb)
    }

    pub fn ub_tight(&self) -> Option<bool> {
        Some(self.solve.gamma? == self.report.ub_construct?)
    }
}

/// `⌈n/4⌉`, `⌈n/3⌉`, `⌈n/2⌉` for the three restrained triples on cubic graphs.
pub fn cubic_expectation(n: usize, p: ParamTriple) -> Option<usize> {
    match (p.k, p.kp, p.kpp) {
        (0, 1, 1) => Some(n.div_ceil(4)),
        (1, 1, 1) => Some(n.div_ceil(3)),
        (1, 2, 1) => Some(n.div_ceil(2)),
        _ => None,
    }
}

/// Evaluates every claim that applies to `(g, p)`.
pub fn evaluate(
    g: &Graph,
    p: ParamTriple,
    options: SolveOptions,
) -> (BoundReport, Option<Construction>, SolveResult, RowChecks) {
    let report = bound_report(g, p);
    let construction = construct_best(g, p);
    let solve = solve_exact(g, p, options);
    let mut sound = Vec::new();
    let mut dominance = Vec::new();

    let lb_general = report.lb_general.map(|b| b.bound().value);
    let lb_kp_zero = report.lb_kp_zero.map(|b| b.value);

    if let Some(w) = &solve.witness {
        if !is_dominating(g, w, p) {
            sound.push("witness fails the predicate".to_string());
        }
    }
    if let Some(c) = &construction {
        let delta = report.min_degree.unwrap_or(0);
        if !c.valid {
            sound.push(format!("part {} construction is not dominating", c.part));
        }
        if c.size != c.part.size(g.n(), delta, p) {
            sound.push(format!("part {} construction has size {}", c.part, c.size));
        }
        for (name, lb) in [("lb_general", lb_general), ("lb_kp_zero", lb_kp_zero)] {
            if lb.is_some_and(|lb| lb > c.size) {
                sound.push(format!("{name} exceeds the constructed upper bound"));
            }
        }
    }
    match (solve.status, solve.gamma) {
        (SolveStatus::Optimal, Some(gamma)) => {
            for (name, lb) in [("lb_general", lb_general), ("lb_kp_zero", lb_kp_zero)] {
                if lb.is_some_and(|lb| lb > gamma) {
                    sound.push(format!("{name} = {} exceeds gamma = {gamma}", lb.unwrap()));
                }
            }
            if report.ub_construct.is_some_and(|ub| gamma > ub) {
                sound.push("gamma exceeds the constructed upper bound".to_string());
            }
            if p == ParamTriple::new(1, 2, 1) {
                if let Some(delta) = report.min_degree.filter(|&d| d >= 3) {
                    let n = g.n();
                    if gamma + delta > n + 1 || n + 1 - delta > n - 2 {
                        sound.push(format!("restrained double gamma {gamma} > n - δ + 1"));
                    }
                }
            }
        }
        (SolveStatus::Infeasible, _)
            if report.min_degree.is_some_and(|d| d >= p.k) => {
                sound.push("infeasible although δ >= k".to_string());
            }
        _ => {}
    }

    for check in report.dominance_checks() {
        if !check.holds() {
            dominance.push(format!(
                "{} = {} exceeds the improving bound {}",
                check.prior, check.prior_raw, check.improved_raw
            ));
        }
    }
    if g.regularity() == Some(3) {
        if let Some(expected) = cubic_expectation(g.n(), p) {
            if lb_general != Some(expected) {
                dominance.push(format!("cubic lb_general {lb_general:?} != {expected}"));
            }
        }
    }

    let checks = RowChecks {
        soundness_ok: sound.is_empty(),
        dominance_ok: dominance.is_empty(),
        failures: sound.into_iter().chain(dominance).collect(),
    };
    (report, construction, solve, checks)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub rows: usize,
    pub skipped: usize,
    pub soundness_failures: usize,
    pub dominance_failures: usize,
    pub budget_exceeded: usize,
}

impl SweepSummary {
    /// 0 all clear, 1 a claim failed, 3 some instance ran out of budget.
    pub fn exit_code(&self) -> i32 {
        if self.soundness_failures + self.dominance_failures > 0 {
            1
        } else if self.budget_exceeded > 0 {
            3
        } else {
            0
        }
    }
}

pub struct Sweep {
    pub rows: Vec<SweepRow>,
    pub skipped: Vec<(Family, GenerateError)>,
}

impl Sweep {
    pub fn summary(&self) -> SweepSummary {
        SweepSummary {
            rows: self.rows.len(),
            skipped: self.skipped.len(),
            soundness_failures: self.rows.iter().filter(|r| !r.checks.soundness_ok).count(),
            dominance_failures: self.rows.iter().filter(|r| !r.checks.dominance_ok).count(),
            budget_exceeded: self
                .rows
                .iter()
                .filter(|r| r.solve.status == SolveStatus::BudgetExceeded)
                .count(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = [
            "family",
            "n",
            "m",
            "seed",
            "k",
            "kp",
            "kpp",
            "delta",
            "Delta",
            "delta_star",
            "lb_general_raw",
            "lb_general",
            "lb_kp0",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        header.extend(
            PriorBound::ALL
                .iter()
                .map(|b| format!("prior_{}", b.name())),
        );
        header.extend(
            [
                "ub_construct",
                "exact_gamma",
                "status",
                "lb_tight",
                "ub_tight",
                "dominance_ok",
                "soundness_ok",
            ]
            .iter()
            .map(|s| s.to_string()),
        );
        out.write_record(&header).unwrap();

        let opt = |v: Option<usize>| v.map_or_else(String::new, |v| v.to_string());
        let flag = |v: Option<bool>| v.map_or_else(String::new, |v| v.to_string());
        for row in &self.rows {
            let r = &row.report;
            let status = serde_json::to_value(row.solve.status).unwrap();
            let mut record = vec![
                row.family.to_string(),
                r.n.to_string(),
                r.m.to_string(),
                row.seed.to_string(),
                row.triple.k.to_string(),
                row.triple.kp.to_string(),
                row.triple.kpp.to_string(),
                opt(r.min_degree),
                opt(r.max_degree),
                opt(r.delta_star),
                r.lb_general
                    .map_or_else(String::new, |b| format_decimal(b.bound().raw)),
                opt(r.lb_general.map(|b| b.bound().value)),
                opt(r.lb_kp_zero.map(|b| b.value)),
            ];
            record.extend(r.prior.values().map(|v| opt(v.map(|v| v.value))));
            record.extend([
                opt(r.ub_construct),
                opt(row.solve.gamma),
                status.as_str().unwrap().to_string(),
                flag(row.lb_tight()),
                flag(row.ub_tight()),
                row.checks.dominance_ok.to_string(),
                row.checks.soundness_ok.to_string(),
            ]);
            out.write_record(&record).unwrap();
        }
        String::from_utf8(out.into_inner().unwrap()).unwrap()
    }
}

/// Runs the sweep on `threads` workers (0 picks the rayon default). Rows
/// come back in corpus order whatever the worker count.
pub fn run_sweep(spec: &CorpusSpec, threads: usize) -> Sweep {
    let (graphs, skipped) = spec.graphs();
    let jobs: Vec<(&CorpusGraph, ParamTriple)> = graphs
        .iter()
        .flat_map(|cg| spec.triples.iter().map(move |&p| (cg, p)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    let rows = pool.install(|| {
        jobs.par_iter()
            .map(|&(cg, p)| {
                let (report, construction, solve, checks) = evaluate(&cg.graph, p, spec.options);
                SweepRow {
                    family: cg.family,
                    seed: cg.seed,
                    triple: p,
                    report,
                    construction,
                    solve,
                    checks,
                }
            })
            .collect()
    });
    Sweep { rows, skipped }
}
