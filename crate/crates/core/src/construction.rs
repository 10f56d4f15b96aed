//! Constructive upper bounds for `(k, k', 1)`-domination.
//!
//! Both constructions pick a minimum-degree vertex `u`, keep `j` of its
//! neighbors in `S`, and put the rest of `N[u]` outside:
//! `S = V \ (N[u] \ {v_1, ..., v_j})`.
//!
//! * Part 1 (`k' >= k + 1`, `δ >= k' + 1`): `j = k'`, `|S| = n - δ + k' - 1`.
//! * Part 2 (`k >= k'`, `δ >= k + 2`): `j = k + 1`, `|S| = n - δ + k`.
//!
//! `u` is the lowest-indexed vertex of minimum degree and the `v_i` are its
//! lowest-indexed neighbors, so the output is reproducible.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::params::{is_dominating, ParamTriple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("part {part} does not apply to {p} with min degree {delta}: {reason}")]
    Inapplicable {
        part: Part,
        p: ParamTriple,
        delta: usize,
        reason: &'static str,
    },
    #[error("the graph has no vertices")]
    EmptyGraph,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(into = "u8")]
pub enum Part {
    One,
    Two,
}

impl From<Part> for u8 {
    fn from(p: Part) -> u8 {
        match p {
            Part::One => 1,
            Part::Two => 2,
        }
    }
}

impl std::fmt::Display for Part {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", u8::from(*self))
    }
}

impl Part {
    /// Checks this part's hypotheses for `p` on a graph of minimum degree
    /// `delta`, returning the number of neighbors of `u` kept in `S`.
    fn kept_neighbors(self, p: ParamTriple, delta: usize) -> Result<usize, &'static str> {
        if p.kpp != 1 {
            return Err("k'' must be 1");
        }
        match self {
            Part::One if p.kp < p.k + 1 => Err("needs k' >= k + 1"),
            Part::One if delta < p.kp + 1 => Err("needs min degree >= k' + 1"),
            Part::One => Ok(p.kp),
            Part::Two if p.k < p.kp => Err("needs k >= k'"),
            Part::Two if delta < p.k + 2 => Err("needs min degree >= k + 2"),
            Part::Two => Ok(p.k + 1),
        }
    }

    /// `|S|` promised by this part.
    pub fn size(self, n: usize, delta: usize, p: ParamTriple) -> usize {
        match self {
            Part::One => n - delta + p.kp - 1,
            Part::Two => n - delta + p.k,
        }
    }
}

fn construct(g: &Graph, p: ParamTriple, part: Part) -> Result<VertexSet, ConstructionError> {
    let delta = g.min_degree().map_err(|_| ConstructionError::EmptyGraph)?;
    let keep = part
        .kept_neighbors(p, delta)
        .map_err(|reason| ConstructionError::Inapplicable {
            part,
            p,
            delta,
            reason,
        })?;

    let u = (0..g.n()).find(|&v| g.degree(v) == delta).unwrap();
    let mut outside = g.closed_neighbor_set(u);
    for &v in &g.neighbors(u)[..keep] {
        outside.remove(v);
    }
    // u is adjacent to every other outsider, so G[outside] has no isolated
    // vertex as long as there are at least two outsiders.
    assert!(
        outside.len() >= 2 && outside.iter().all(|w| w == u || g.has_edge(u, w)),
        "construction invariant broken at u = {u}"
    );
    let s = outside.complement();
    debug_assert_eq!(s.len(), part.size(g.n(), delta, p));
    Ok(s)
}

pub fn construct_part1(g: &Graph, p: ParamTriple) -> Result<VertexSet, ConstructionError> {
    construct(g, p, Part::One)
}

pub fn construct_part2(g: &Graph, p: ParamTriple) -> Result<VertexSet, ConstructionError> {
    construct(g, p, Part::Two)
}

/// Outcome of the applicable construction, verified against the predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub part: Part,
    pub size: usize,
    pub valid: bool,
    #[serde(skip)]
    pub set: VertexSet,
}

/// Runs whichever part applies to `p`. The two parts' hypotheses are
/// disjoint, so at most one does.
pub fn construct_best(g: &Graph, p: ParamTriple) -> Option<Construction> {
    [Part::One, Part::Two]
        .into_iter()
        .filter_map(|part| {
            construct(g, p, part).ok().map(|set| Construction {
                part,
                size: set.len(),
                valid: is_dominating(g, &set, p),
                set,
            })
        })
        .min_by_key(|c| c.size)
}

/// `n - δ + max{k, k' - 1}` when a part applies, as witnessed by the
/// constructed set.
pub fn upper_bound(g: &Graph, p: ParamTriple) -> Option<usize> {
    construct_best(g, p).map(|c| c.size)
}
