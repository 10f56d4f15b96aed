//! Exhaustive reference solver.
//!
//! Enumerates subsets in order of increasing size and returns the first one
//! that satisfies the predicate. It uses its own mask-based predicate and
//! shares nothing with [`crate::solver`], so the two can check each other.

use std::time::Instant;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::params::ParamTriple;
use crate::solver::{SolveResult, SolveStatus};

pub const ORACLE_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("brute force is limited to {ORACLE_MAX_VERTICES} vertices, got {0}")]
pub struct OracleTooLarge(pub usize);

fn satisfies(g: &Graph, mask: u32, p: ParamTriple) -> bool {
    for v in 0..g.n() {
        let mut inside = 0;
        let mut outside = 0;
        for &w in g.neighbors(v) {
            if mask >> w & 1 == 1 {
                inside += 1;
            } else {
                outside += 1;
            }
        }
        let ok = if mask >> v & 1 == 1 {
            inside >= p.k
        } else {
            inside >= p.kp && outside >= p.kpp
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Next larger integer with the same popcount.
fn next_same_popcount(x: u32) -> u32 {
    let lowest = x & x.wrapping_neg();
    let ripple = x + lowest;
    ripple | (((x ^ ripple) >> 2) / lowest)
}

pub fn brute_force_oracle(g: &Graph, p: ParamTriple) -> Result<SolveResult, OracleTooLarge> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(OracleTooLarge(n));
    }
    let start = Instant::now();
    let limit = 1u32 << n;
    let mut checked = 0u64;
    for size in 0..=n {
        let mut mask = if size == 0 { 0 } else { (1u32 << size) - 1 };
        while mask < limit {
            checked += 1;
            if satisfies(g, mask, p) {
                let witness = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
                    .expect("mask bits are below n");
                return Ok(SolveResult {
                    status: SolveStatus::Optimal,
                    gamma: Some(size),
                    witness: Some(witness),
                    nodes_explored: checked,
                    elapsed: start.elapsed(),
                });
            }
            if mask == 0 {
                break;
            }
            mask = next_same_popcount(mask);
        }
    }
    Ok(SolveResult {
        status: SolveStatus::Infeasible,
        gamma: None,
        witness: None,
        nodes_explored: checked,
        elapsed: start.elapsed(),
    })
}
