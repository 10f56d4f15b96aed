//! Exact branch-and-bound for the `(k, k', k'')`-domination number.
//!
//! Every vertex is `In`, `Out` or undecided. After each decision a
//! propagation pass fails the node when some committed vertex can no longer
//! meet its neighbor counts even if every undecided neighbor sided with it,
//! and forces undecided vertices whose choice is determined. A node is cut
//! when `|In|` plus a covering bound on the outstanding in-neighbor deficits
//! reaches the incumbent.
//!
//! The incumbent starts from `S = V` (when `δ >= k`) or the `(k, k', 1)`
//! construction. With bound pruning on, the closed-form lower bounds act as a
//! floor: the search stops as soon as the incumbent meets it.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::{lower_bound_general, lower_bound_kp_zero};
use crate::construction::construct_best;
use crate::graph::{Graph, VertexSet};
use crate::params::{is_dominating, ParamTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub gamma: Option<usize>,
    pub witness: Option<VertexSet>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SolveResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "status": self.status,
            "gamma": self.gamma,
            "witness": self.witness,
            "nodes": self.nodes_explored,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_nodes: None,
        max_time: None,
    };
}

impl Default for Budget {
    /// 10^8 nodes or 60 seconds.
    fn default() -> Self {
        Budget {
            max_nodes: Some(100_000_000),
            max_time: Some(Duration::from_secs(60)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub budget: Budget,
    pub bound_pruning: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Budget::default(),
            bound_pruning: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Undecided,
    In,
    Out,
}

#[derive(Clone)]
struct State {
    slot: Vec<Slot>,
    /// Neighbors currently `In`.
    inside: Vec<usize>,
    /// Neighbors currently `Out`.
    outside: Vec<usize>,
    n_in: usize,
    n_undecided: usize,
}

impl State {
    fn new(n: usize) -> Self {
        State {
            slot: vec![Slot::Undecided; n],
            inside: vec![0; n],
            outside: vec![0; n],
            n_in: 0,
            n_undecided: n,
        }
    }

    fn assign(&mut self, g: &Graph, v: usize, slot: Slot) {
        debug_assert_eq!(self.slot[v], Slot::Undecided);
        self.slot[v] = slot;
        self.n_undecided -= 1;
        let counter = if slot == Slot::In {
            self.n_in += 1;
            &mut self.inside
        } else {
            &mut self.outside
        };
        for &w in g.neighbors(v) {
            counter[w] += 1;
        }
    }

    #[inline]
    fn undecided_neighbors(&self, g: &Graph, v: usize) -> usize {
        g.degree(v) - self.inside[v] - self.outside[v]
    }

    fn in_set(&self) -> VertexSet {
        let n = self.slot.len();
        VertexSet::from_vertices(n, (0..n).filter(|&v| self.slot[v] == Slot::In))
            .expect("indices below n")
    }
}

struct Search<'a> {
    g: &'a Graph,
    p: ParamTriple,
    best: Option<VertexSet>,
    best_size: usize,
    floor: usize,
    nodes: u64,
    budget: Budget,
    start: Instant,
    exceeded: bool,
}

impl Search<'_> {
    fn offer(&mut self, s: VertexSet) {
        debug_assert!(is_dominating(self.g, &s, self.p));
        if s.len() < self.best_size {
            self.best_size = s.len();
            self.best = Some(s);
        }
    }

    fn done(&self) -> bool {
        self.exceeded || self.best_size <= self.floor
    }

    fn charge_node(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|max| self.nodes > max) {
            self.exceeded = true;
        }
        if self.nodes.is_multiple_of(256)
            && self
                .budget
                .max_time
                .is_some_and(|max| self.start.elapsed() > max)
        {
            self.exceeded = true;
        }
        !self.exceeded
    }

    /// Runs to a fixed point. Returns false on a contradiction.
    fn propagate(&self, st: &mut State) -> bool {
        let g = self.g;
        let ParamTriple { k, kp, kpp } = self.p;
        loop {
            let mut changed = false;
            for v in 0..g.n() {
                let undecided = st.undecided_neighbors(g, v);
                let force = match st.slot[v] {
                    Slot::In => {
                        let need = k.saturating_sub(st.inside[v]);
                        if need > undecided {
                            return false;
                        }
                        (need > 0 && need == undecided).then_some(Slot::In)
                    }
                    Slot::Out => {
                        let need_in = kp.saturating_sub(st.inside[v]);
                        let need_out = kpp.saturating_sub(st.outside[v]);
                        if need_in + need_out > undecided {
                            return false;
                        }
                        if need_in > 0 && need_in == undecided {
                            Some(Slot::In)
                        } else if need_out > 0 && need_out == undecided {
                            Some(Slot::Out)
                        } else {
                            None
                        }
                    }
                    Slot::Undecided => {
                        let reach_in = st.inside[v] + undecided;
                        let can_in = reach_in >= k;
                        let can_out = reach_in >= kp && st.outside[v] + undecided >= kpp;
                        match (can_in, can_out) {
                            (false, false) => return false,
                            (true, false) => st.assign(g, v, Slot::In),
                            (false, true) => st.assign(g, v, Slot::Out),
                            (true, true) => continue,
                        }
                        changed = true;
                        None
                    }
                };
                if let Some(slot) = force {
                    for &w in g.neighbors(v) {
                        if st.slot[w] == Slot::Undecided {
                            st.assign(g, w, slot);
                        }
                    }
                    changed = true;
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// In-neighbor deficit of a committed vertex.
    fn deficit(&self, st: &State, v: usize) -> usize {
        match st.slot[v] {
            Slot::In => self.p.k.saturating_sub(st.inside[v]),
            Slot::Out => self.p.kp.saturating_sub(st.inside[v]),
            Slot::Undecided => 0,
        }
    }

    /// Lower bound on the number of undecided vertices that must still join
    /// `S`: the largest single deficit, and the total deficit divided by the
    /// most deficits any one undecided vertex can reduce.
    fn remaining_bound(&self, st: &State) -> usize {
        let g = self.g;
        let mut largest = 0;
        let mut total = 0;
        for v in 0..g.n() {
            let d = self.deficit(st, v);
            largest = largest.max(d);
            total += d;
        }
        if total == 0 {
            return 0;
        }
        let cover = (0..g.n())
            .filter(|&w| st.slot[w] == Slot::Undecided)
            .map(|w| {
                g.neighbors(w)
                    .iter()
                    .filter(|&&x| self.deficit(st, x) > 0)
                    .count()
            })
            .max()
            .unwrap_or(0);
        if cover == 0 {
            return usize::MAX;
        }
        largest.max(total.div_ceil(cover))
    }

    /// Whether putting every undecided vertex `Out` is feasible.
    fn rest_out_feasible(&self, st: &State) -> bool {
        let g = self.g;
        let ParamTriple { k, kp, kpp } = self.p;
        (0..g.n()).all(|v| match st.slot[v] {
            Slot::In => st.inside[v] >= k,
            _ => st.inside[v] >= kp && st.outside[v] + st.undecided_neighbors(g, v) >= kpp,
        })
    }

    fn branch_vertex(&self, st: &State) -> (usize, [Slot; 2]) {
        let g = self.g;
        let needy = (0..g.n())
            .filter(|&v| self.deficit(st, v) > 0)
            .max_by_key(|&v| (self.deficit(st, v), std::cmp::Reverse(v)));
        if let Some(v) = needy {
            let w = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| st.slot[w] == Slot::Undecided)
                .max_by_key(|&w| (g.degree(w), std::cmp::Reverse(w)))
                .expect("propagation leaves an undecided neighbor for every deficit");
            return (w, [Slot::In, Slot::Out]);
        }
        let w = (0..g.n())
            .filter(|&w| st.slot[w] == Slot::Undecided)
            .max_by_key(|&w| (g.degree(w), std::cmp::Reverse(w)))
            .expect("called with undecided vertices left");
        (w, [Slot::Out, Slot::In])
    }

    fn search(&mut self, mut st: State) {
        if self.done() || !self.charge_node() {
            return;
        }
        if !self.propagate(&mut st) {
            return;
        }
        let lower = st.n_in.saturating_add(self.remaining_bound(&st));
        if lower >= self.best_size {
            return;
        }
        // Any completion has at least n_in members, so the all-out
        // completion is optimal for this subtree whenever it is feasible.
        if self.rest_out_feasible(&st) {
            self.offer(st.in_set());
            return;
        }
        if st.n_undecided == 0 {
            return;
        }
        let (v, order) = self.branch_vertex(&st);
        for slot in order {
            let mut child = st.clone();
            child.assign(self.g, v, slot);
            self.search(child);
            if self.done() {
                return;
            }
        }
    }
}

pub fn solve_exact(g: &Graph, p: ParamTriple, options: SolveOptions) -> SolveResult {
    let start = Instant::now();
    let n = g.n();
    if n == 0 {
        return SolveResult {
            status: SolveStatus::Optimal,
            gamma: Some(0),
            witness: Some(VertexSet::empty(0)),
            nodes_explored: 0,
            elapsed: start.elapsed(),
        };
    }

    let floor = if options.bound_pruning {
        let general = lower_bound_general(g, p).map(|b| b.bound().value);
        let kp_zero = lower_bound_kp_zero(g, p).map(|b| b.value);
        general.max(kp_zero).unwrap_or(0)
    } else {
        0
    };
    let mut search = Search {
        g,
        p,
        best: None,
        best_size: n + 1,
        floor,
        nodes: 0,
        budget: options.budget,
        start,
        exceeded: false,
    };
    let full = VertexSet::full(n);
    if is_dominating(g, &full, p) {
        search.offer(full);
    }
    if let Some(c) = construct_best(g, p).filter(|c| c.valid) {
        search.offer(c.set);
    }

    search.search(State::new(n));

    let (status, best) = match (search.exceeded, search.best) {
        (true, _) => (SolveStatus::BudgetExceeded, None),
        (false, Some(s)) => (SolveStatus::Optimal, Some(s)),
        (false, None) => (SolveStatus::Infeasible, None),
    };
    SolveResult {
        status,
        gamma: best.as_ref().map(VertexSet::len),
        witness: best,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    }
}
