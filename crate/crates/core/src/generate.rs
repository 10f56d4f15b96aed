//! Deterministic graph families used as test corpora.
//!
//! Every generator is a pure function of its parameters and a `u64` seed;
//! the random families draw from a ChaCha stream seeded with it.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom as _;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("infeasible parameters for {family}: {reason}")]
    Infeasible {
        family: &'static str,
        reason: String,
    },
    #[error("random_regular({n}, {d}): no simple pairing found in {attempts} attempts")]
    PairingExhausted { n: usize, d: usize, attempts: usize },
}

fn infeasible(family: &'static str, reason: impl Into<String>) -> GenerateError {
    GenerateError::Infeasible {
        family,
        reason: reason.into(),
    }
}

/// A graph family together with its size parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// `K_{1,n-1}` with center 0.
    Star {
        n: usize,
    },
    Petersen,
    RandomGnp {
        n: usize,
        p: f64,
    },
    RandomRegular {
        n: usize,
        d: usize,
    },
    RandomTree {
        n: usize,
    },
}

pub const FAMILY_NAMES: [&str; 9] = [
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "star",
    "petersen",
    "random_gnp",
    "random_regular",
    "random_tree",
];

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Path { .. } => "path",
            Family::Cycle { .. } => "cycle",
            Family::Complete { .. } => "complete",
            Family::CompleteBipartite { .. } => "complete_bipartite",
            Family::Star { .. } => "star",
            Family::Petersen => "petersen",
            Family::RandomGnp { .. } => "random_gnp",
            Family::RandomRegular { .. } => "random_regular",
            Family::RandomTree { .. } => "random_tree",
        }
    }

    /// Parses a family name followed by its positional size parameters, as
    /// given on the command line: `cycle 4`, `complete_bipartite 2 3`,
    /// `random_regular 10 3`, `random_gnp 12 0.3`, `petersen`.
    pub fn from_args(name: &str, args: &[&str]) -> Result<Family, GenerateError> {
        let family = FAMILY_NAMES
            .iter()
            .copied()
            .find(|&f| f == name)
            .ok_or_else(|| GenerateError::UnknownFamily(name.to_string()))?;
        let want = match family {
            "petersen" => 0,
            "complete_bipartite" | "random_gnp" | "random_regular" => 2,
            _ => 1,
        };
        if args.len() != want {
            return Err(infeasible(
                family,
                format!("expected {want} size parameter(s), got {}", args.len()),
            ));
        }
        let int = |i: usize| -> Result<usize, GenerateError> {
            args[i].parse().map_err(|_| {
                infeasible(
                    family,
                    format!("{:?} is not a nonnegative integer", args[i]),
                )
            })
        };
        Ok(match family {
            "path" => Family::Path { n: int(0)? },
            "cycle" => Family::Cycle { n: int(0)? },
            "complete" => Family::Complete { n: int(0)? },
            "complete_bipartite" => Family::CompleteBipartite {
                a: int(0)?,
                b: int(1)?,
            },
            "star" => Family::Star { n: int(0)? },
            "petersen" => Family::Petersen,
            "random_gnp" => Family::RandomGnp {
                n: int(0)?,
                p: args[1].parse().map_err(|_| {
                    infeasible(family, format!("{:?} is not a probability", args[1]))
                })?,
            },
            "random_regular" => Family::RandomRegular {
                n: int(0)?,
                d: int(1)?,
            },
            "random_tree" => Family::RandomTree { n: int(0)? },
            _ => unreachable!(),
        })
    }

    pub fn generate(&self, seed: u64) -> Result<Graph, GenerateError> {
        generate(self, seed)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n }
            | Family::Cycle { n }
            | Family::Complete { n }
            | Family::Star { n }
            | Family::RandomTree { n } => write!(f, "{} {n}", self.name()),
            Family::CompleteBipartite { a, b } => write!(f, "{} {a} {b}", self.name()),
            Family::Petersen => f.write_str("petersen"),
            Family::RandomGnp { n, p } => write!(f, "{} {n} {p}", self.name()),
            Family::RandomRegular { n, d } => write!(f, "{} {n} {d}", self.name()),
        }
    }
}

impl FromStr for Family {
    type Err = GenerateError;

    /// Whitespace-separated form of [`Family::from_args`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split_whitespace();
        let name = parts.next().unwrap_or("");
        let rest: Vec<&str> = parts.collect();
        Family::from_args(name, &rest)
    }
}

/// Generates the graph for `family`. Deterministic families ignore `seed`.
pub fn generate(family: &Family, seed: u64) -> Result<Graph, GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let built = match *family {
        Family::Path { n } => {
            if n == 0 {
                return Err(infeasible("path", "n must be at least 1"));
            }
            Graph::build(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(infeasible("cycle", "n must be at least 3"));
            }
            Graph::build(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete { n } => {
            if n == 0 {
                return Err(infeasible("complete", "n must be at least 1"));
            }
            Graph::build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite { a, b } => {
            if a == 0 || b == 0 {
                return Err(infeasible(
                    "complete_bipartite",
                    "both sides must be nonempty",
                ));
            }
            Graph::build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Star { n } => {
            if n < 2 {
                return Err(infeasible("star", "n must be at least 2"));
            }
            Graph::build(n, (1..n).map(|v| (0, v)))
        }
        Family::Petersen => Graph::build(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        ),
        Family::RandomGnp { n, p } => {
            if n == 0 {
                return Err(infeasible("random_gnp", "n must be at least 1"));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(infeasible(
                    "random_gnp",
                    format!("p = {p} is not in [0, 1]"),
                ));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::build(n, edges)
        }
        Family::RandomRegular { n, d } => return random_regular(n, d, &mut rng),
        Family::RandomTree { n } => {
            if n == 0 {
                return Err(infeasible("random_tree", "n must be at least 1"));
            }
            Graph::build(n, random_tree_edges(n, &mut rng))
        }
    };
    Ok(built.expect("generators emit valid edges"))
}

/// Uniform labelled tree via a random Prüfer sequence.
fn random_tree_edges(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n <= 2 {
        return if n == 2 { vec![(0, 1)] } else { Vec::new() };
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    for &c in &code {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

const PAIRING_ATTEMPTS: usize = 10_000;

/// Pairing model in the Steger–Wormald style: points are matched one pair at
/// a time, only ever joining two distinct, not yet adjacent vertices, and
/// the attempt restarts when no such pair is left. Dense requests are
/// served by complementing a sparse regular graph.
fn random_regular(n: usize, d: usize, rng: &mut impl Rng) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(infeasible("random_regular", "n must be at least 1"));
    }
    if d >= n {
        return Err(infeasible(
            "random_regular",
            format!("d = {d} must be below n = {n}"),
        ));
    }
    if n * d % 2 == 1 {
        return Err(infeasible(
            "random_regular",
            format!("n·d = {} is odd", n * d),
        ));
    }
    if 2 * d > n - 1 {
        let sparse = random_regular(n, n - 1 - d, rng)?;
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !sparse.has_edge(u, v));
        return Ok(Graph::build(n, edges).expect("complement is simple"));
    }
    for _ in 0..PAIRING_ATTEMPTS {
        if let Some(edges) = pairing_attempt(n, d, rng) {
            return Ok(Graph::build(n, edges).expect("pairing checked simple"));
        }
    }
    Err(GenerateError::PairingExhausted {
        n,
        d,
        attempts: PAIRING_ATTEMPTS,
    })
}

fn pairing_attempt(n: usize, d: usize, rng: &mut impl Rng) -> Option<Vec<(usize, usize)>> {
    let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    let mut adjacent = vec![false; n * n];
    let mut edges = Vec::with_capacity(points.len() / 2);
    let suitable = |adjacent: &[bool], u: usize, v: usize| u != v && !adjacent[u * n + v];
    while !points.is_empty() {
        let len = points.len();
        let mut pick = None;
        for _ in 0..4 * len {
            let (i, j) = (rng.gen_range(0..len), rng.gen_range(0..len));
            if suitable(&adjacent, points[i], points[j]) {
                pick = Some((i, j));
                break;
            }
        }
        if pick.is_none() {
            let candidates: Vec<(usize, usize)> = (0..len)
                .flat_map(|i| (i + 1..len).map(move |j| (i, j)))
                .filter(|&(i, j)| suitable(&adjacent, points[i], points[j]))
                .collect();
            pick = Some(*candidates.choose(rng)?);
        }
        let (i, j) = pick.unwrap();
        let (u, v) = (points[i], points[j]);
        adjacent[u * n + v] = true;
        adjacent[v * n + u] = true;
        edges.push((u, v));
        points.swap_remove(i.max(j));
        points.swap_remove(i.min(j));
    }
    Some(edges)
}
